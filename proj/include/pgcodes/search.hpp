#pragma once

// Randomized low-weight codeword search (Lee-Brickell information-set
// decoding with error patterns of weight <= 2 on the information set).
// Results are evidence only: words the search misses are not ruled out.

#include "pgcodes/word.hpp"

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <vector>

namespace pgcodes::code {
class CodeModel;
}

namespace pgcodes::search {

struct Options {
    std::size_t max_weight = 0;
    std::uint64_t iterations = 1000;
    std::uint64_t seed = 0;
    // 0 = OpenMP default. Output does not depend on the thread count.
    int threads = 0;
};

struct Result {
    // Distinct words (exact equality), sorted.
    std::vector<Word> words;
    std::map<std::size_t, std::size_t> weight_counts;
    // Number of F_p^* orbits among `words`.
    std::size_t orbit_count = 0;
    std::uint64_t iterations = 0;
    bool exhaustive = false;
};

Result low_weight_search(std::span<const Word> basis, int p, std::size_t length, const Options& opts);
Result low_weight_search(const code::CodeModel& model, const Options& opts);

// splitmix64 finalizer; derives independent per-iteration and per-suite seeds.
std::uint64_t mix_seed(std::uint64_t x) noexcept;

} // namespace pgcodes::search
