#pragma once

// Rendering of verification reports, spectra and search results.

#include "pgcodes/search.hpp"
#include "pgcodes/spectrum.hpp"
#include "pgcodes/verify.hpp"

#include <json.hpp>

#include <string>
#include <string_view>

namespace pgcodes::report {

enum class Format { Json, Csv, Table };

// Throws UnknownFormat.
Format parse_format(std::string_view name);

nlohmann::ordered_json to_json(const verify::Report& r);
nlohmann::ordered_json to_json(const spectrum::SpectrumReport& s);

// Output is a pure function of the inputs; timing appears only when the
// report carries it.
std::string emit_report(const verify::Report& r, Format f);
std::string emit_report(const verify::Report& r, std::string_view format);

std::string emit_spectrum(const spectrum::SpectrumReport& s, Format f);

struct SearchSummary {
    search::Result result;
    std::size_t max_weight = 0;
    std::uint64_t seed = 0;
    std::size_t dimension = 0;
    std::size_t length = 0;
};
std::string emit_search(const SearchSummary& s, Format f);

} // namespace pgcodes::report
