#pragma once

// Exhaustive weight-distribution enumeration over all p^k messages.
//
// enumerate() is the production kernel: a modular p-ary Gray code, so each
// step adds a single basis row, partitioned by message prefix across OpenMP
// threads. enumerate_reference() recomputes every codeword from scratch in a
// serial loop and exists to cross-check the kernel.

#include "pgcodes/word.hpp"

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <vector>

namespace pgcodes::code {
class CodeModel;
}

namespace pgcodes::spectrum {

inline constexpr std::uint64_t kDefaultBudget = std::uint64_t{1} << 22;

struct SpectrumReport {
    std::map<std::size_t, std::uint64_t> distribution;
    bool exhaustive = true;
    std::uint64_t messages = 0;
    std::size_t dimension = 0;
    std::size_t length = 0;
    int p = 2;

    std::uint64_t total() const;
    // 0 when the code has no nonzero word.
    std::size_t min_nonzero_weight() const;
    std::uint64_t count(std::size_t weight) const;

    friend bool operator==(const SpectrumReport&, const SpectrumReport&) = default;
};

struct Options {
    std::uint64_t budget = kDefaultBudget;
    // Words with 1 <= weight <= collect_max_weight are returned, sorted.
    std::size_t collect_max_weight = 0;
    // Called once per collected word, serially, in sorted order.
    std::function<void(const Word&)> on_low_weight;
    // 0 = OpenMP default.
    int threads = 0;
};

struct Result {
    SpectrumReport report;
    std::vector<Word> low_weight;
};

// p^k, saturating at UINT64_MAX.
std::uint64_t message_count(int p, std::size_t k) noexcept;

// Throws BudgetExceeded when p^k > budget.
Result enumerate(std::span<const Word> basis, int p, std::size_t length, const Options& opts = {});
Result enumerate_reference(std::span<const Word> basis, int p, std::size_t length, const Options& opts = {});

Result enumerate_spectrum(const code::CodeModel& model, const Options& opts = {});

// Serial Gray-code walk over every codeword; the Word reference is only
// valid during the call.
void for_each_codeword(std::span<const Word> basis, int p, std::size_t length, std::uint64_t budget,
                       const std::function<void(const Word&)>& visit);

} // namespace pgcodes::spectrum
