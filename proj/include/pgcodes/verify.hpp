#pragma once

// Check suites over one parameter set, and the report they fill.

#include "pgcodes/spectrum.hpp"

#include <json.hpp>

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace pgcodes::verify {

enum class Status { Pass, Fail, Skipped, EvidenceOnly };
enum class Mode { Exhaustive, Search };

std::string_view status_name(Status s) noexcept;
std::string_view mode_name(Mode m) noexcept;

struct Check {
    std::string suite;
    std::string name;
    Status status = Status::Pass;
    std::string details;
    // Counterexamples on failure: word digits, witness subspaces, ...
    nlohmann::ordered_json witnesses = nlohmann::ordered_json::array();
};

struct Params {
    int p = 2;
    int h = 1;
    int n = 2;
    friend bool operator==(const Params&, const Params&) = default;
};

inline const std::vector<std::string>& all_suites()
{
    static const std::vector<std::string> names{"dimension", "minweight",   "gap", "second",  "hull",
                                                "properties", "restriction", "bbw", "blocking"};
    return names;
}

// The parameter grid run by default.
std::vector<Params> default_grid();

struct Options {
    std::uint64_t budget = spectrum::kDefaultBudget;
    std::uint64_t seed = 0;
    // Fall back to randomized search when p^dim exceeds the budget;
    // otherwise InfeasibleParams.
    bool allow_search = true;
    std::uint64_t search_iterations = 2000;
    // Codeword budget for the planar tangent check.
    std::uint64_t bbw_budget = std::uint64_t{1} << 16;
    std::size_t restriction_samples = 1000;
    std::size_t property_samples = 64;
    std::size_t reduction_trials = 20;
    std::size_t reduction_orders = 5;
    bool record_timing = false;
    int threads = 0;
};

struct Report {
    Params params;
    std::uint64_t q = 0;
    std::uint64_t theta_n = 0;
    std::vector<int> modulus;
    std::size_t dimension = 0;
    std::uint64_t expected_dimension = 0;
    std::size_t hull_dimension = 0;
    Mode mode = Mode::Exhaustive;
    std::uint64_t seed = 0;
    std::uint64_t budget = 0;
    std::vector<Check> checks;
    std::optional<spectrum::SpectrumReport> spectrum;
    // Milliseconds per suite; only with Options::record_timing.
    std::optional<std::map<std::string, double>> timing;

    bool passed() const;
    const Check* find(std::string_view suite, std::string_view name) const;
};

// Suites run in the order given. Unknown suite names throw InvalidArgument.
Report run_suite(const Params& params, const std::vector<std::string>& suites, const Options& opts = {});

// FNV-1a, used to name the per-suite random streams.
std::uint64_t stream_id(std::string_view name) noexcept;

} // namespace pgcodes::verify
