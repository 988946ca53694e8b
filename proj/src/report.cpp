#include "pgcodes/report.hpp"

#include "pgcodes/error.hpp"

#include <iomanip>
#include <sstream>

namespace pgcodes::report {

using json = nlohmann::ordered_json;

Format parse_format(std::string_view name)
{
    if (name == "json")
        return Format::Json;
    if (name == "csv")
        return Format::Csv;
    if (name == "table")
        return Format::Table;
    throw Error(Errc::UnknownFormat, "unknown format '" + std::string(name) + "' (json, csv, table)");
}

namespace {

json distribution_json(const spectrum::SpectrumReport& s)
{
    json d = json::object();
    for (const auto& [w, c] : s.distribution)
        d[std::to_string(w)] = c;
    return d;
}

std::string csv_field(const std::string& s)
{
    if (s.find_first_of(",\"\n") == std::string::npos)
        return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"')
            out += '"';
        out += c;
    }
    return out + "\"";
}

std::string spectrum_line(const spectrum::SpectrumReport& s)
{
    std::string out;
    for (const auto& [w, c] : s.distribution) {
        if (!out.empty())
            out += ' ';
        out += std::to_string(w) + ":" + std::to_string(c);
    }
    return out;
}

} // namespace

json to_json(const spectrum::SpectrumReport& s)
{
    return json{{"exhaustive", s.exhaustive}, {"messages", s.messages}, {"dimension", s.dimension},
                {"length", s.length},         {"p", s.p},               {"distribution", distribution_json(s)}};
}

json to_json(const verify::Report& r)
{
    json j;
    j["params"] = json{{"p", r.params.p},
                       {"h", r.params.h},
                       {"n", r.params.n},
                       {"q", r.q},
                       {"theta_n", r.theta_n},
                       {"field", json{{"p", r.params.p}, {"h", r.params.h}, {"modulus", r.modulus}}}};
    j["code"] = json{{"dimension", r.dimension},
                     {"expected_dimension", r.expected_dimension},
                     {"hull_dimension", r.hull_dimension}};
    j["mode"] = verify::mode_name(r.mode);
    j["seed"] = r.seed;
    j["budget"] = r.budget;
    json checks = json::array();
    for (const auto& c : r.checks)
        checks.push_back(json{{"suite", c.suite},
                              {"name", c.name},
                              {"status", verify::status_name(c.status)},
                              {"details", c.details},
                              {"witnesses", c.witnesses}});
    j["checks"] = std::move(checks);
    if (r.spectrum)
        j["spectrum"] = to_json(*r.spectrum);
    if (r.timing) {
        json t = json::object();
        for (const auto& [k, v] : *r.timing)
            t[k] = v;
        j["timing_ms"] = std::move(t);
    }
    return j;
}

std::string emit_report(const verify::Report& r, Format f)
{
    std::ostringstream os;
    switch (f) {
    case Format::Json:
        os << to_json(r).dump(2) << '\n';
        break;
    case Format::Csv:
        os << "suite,name,status,details\n";
        for (const auto& c : r.checks)
            os << csv_field(c.suite) << ',' << csv_field(c.name) << ',' << verify::status_name(c.status) << ','
               << csv_field(c.details) << '\n';
        break;
    case Format::Table: {
        const auto& p = r.params;
        os << "PG(" << p.n << "," << r.q << "), p=" << p.p << " h=" << p.h << " n=" << p.n
           << ", theta_n=" << r.theta_n << '\n';
        os << "dimension: " << r.dimension << " (expected " << r.expected_dimension << "), hull dimension "
           << r.hull_dimension << '\n';
        os << "mode: " << verify::mode_name(r.mode) << ", seed " << r.seed << ", budget " << r.budget << '\n';
        if (r.spectrum) {
            const auto mw = r.spectrum->min_nonzero_weight();
            std::uint64_t theta = 1;
            std::uint64_t power = 1;
            for (int i = 0; i < p.n - 1; ++i) {
                power *= r.q;
                theta += power;
            }
            os << "minimum weight: " << mw << (mw == theta ? " = " : " != ") << "theta_" << p.n - 1 << '\n';
            os << "spectrum: " << spectrum_line(*r.spectrum) << '\n';
        }
        std::size_t ws = 5;
        std::size_t wn = 4;
        for (const auto& c : r.checks) {
            ws = std::max(ws, c.suite.size());
            wn = std::max(wn, c.name.size());
        }
        os << std::left << std::setw(static_cast<int>(ws) + 2) << "suite" << std::setw(static_cast<int>(wn) + 2)
           << "check" << std::setw(15) << "status"
           << "details\n";
        for (const auto& c : r.checks)
            os << std::setw(static_cast<int>(ws) + 2) << c.suite << std::setw(static_cast<int>(wn) + 2) << c.name
               << std::setw(15) << verify::status_name(c.status) << c.details << '\n';
        if (r.timing)
            for (const auto& [k, v] : *r.timing)
                os << "time " << k << ": " << std::fixed << std::setprecision(1) << v << " ms\n";
        os << "result: " << (r.passed() ? "pass" : "fail") << '\n';
        break;
    }
    }
    return os.str();
}

std::string emit_report(const verify::Report& r, std::string_view format)
{
    return emit_report(r, parse_format(format));
}

std::string emit_spectrum(const spectrum::SpectrumReport& s, Format f)
{
    std::ostringstream os;
    switch (f) {
    case Format::Json:
        os << to_json(s).dump(2) << '\n';
        break;
    case Format::Csv:
        os << "weight,count\n";
        for (const auto& [w, c] : s.distribution)
            os << w << ',' << c << '\n';
        break;
    case Format::Table:
        os << "messages: " << s.messages << " (p=" << s.p << ", dimension " << s.dimension << ", length " << s.length
           << ")\n";
        os << "weight  count\n";
        for (const auto& [w, c] : s.distribution)
            os << std::left << std::setw(8) << w << c << '\n';
        break;
    }
    return os.str();
}

std::string emit_search(const SearchSummary& s, Format f)
{
    std::ostringstream os;
    const auto& r = s.result;
    switch (f) {
    case Format::Json: {
        json counts = json::object();
        for (const auto& [w, c] : r.weight_counts)
            counts[std::to_string(w)] = c;
        json words = json::array();
        for (const auto& w : r.words)
            words.push_back(w.digits());
        json j{{"mode", "search"},
               {"exhaustive", r.exhaustive},
               {"iterations", r.iterations},
               {"seed", s.seed},
               {"max_weight", s.max_weight},
               {"dimension", s.dimension},
               {"length", s.length},
               {"weight_counts", std::move(counts)},
               {"orbit_count", r.orbit_count},
               {"words", std::move(words)}};
        os << j.dump(2) << '\n';
        break;
    }
    case Format::Csv:
        os << "weight,count\n";
        for (const auto& [w, c] : r.weight_counts)
            os << w << ',' << c << '\n';
        break;
    case Format::Table:
        os << "search (not exhaustive): " << r.iterations << " iterations, seed " << s.seed << ", max weight "
           << s.max_weight << '\n';
        os << "distinct words: " << r.words.size() << ", scalar orbits: " << r.orbit_count << '\n';
        os << "weight  found\n";
        for (const auto& [w, c] : r.weight_counts)
            os << std::left << std::setw(8) << w << c << '\n';
        break;
    }
    return os.str();
}

} // namespace pgcodes::report
