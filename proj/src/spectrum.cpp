#include "pgcodes/spectrum.hpp"

#include "pgcodes/code.hpp"
#include "pgcodes/error.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <string>

#if defined(_OPENMP)
#include <omp.h>
#endif

namespace pgcodes::spectrum {

std::uint64_t SpectrumReport::total() const
{
    std::uint64_t t = 0;
    for (const auto& [w, c] : distribution)
        t += c;
    return t;
}

std::size_t SpectrumReport::min_nonzero_weight() const
{
    for (const auto& [w, c] : distribution)
        if (w != 0 && c != 0)
            return w;
    return 0;
}

std::uint64_t SpectrumReport::count(std::size_t weight) const
{
    auto it = distribution.find(weight);
    return it == distribution.end() ? 0 : it->second;
}

std::uint64_t message_count(int p, std::size_t k) noexcept
{
    std::uint64_t c = 1;
    for (std::size_t i = 0; i < k; ++i) {
        if (c > std::numeric_limits<std::uint64_t>::max() / static_cast<std::uint64_t>(p))
            return std::numeric_limits<std::uint64_t>::max();
        c *= static_cast<std::uint64_t>(p);
    }
    return c;
}

namespace {

void check_basis(std::span<const Word> basis, int p, std::size_t length)
{
    for (const auto& b : basis)
        if (b.size() != length || b.p() != p)
            throw Error(Errc::LengthMismatch, "basis word does not match the code length or field");
}

std::uint64_t checked_count(std::span<const Word> basis, int p, std::uint64_t budget)
{
    const auto count = message_count(p, basis.size());
    if (count > budget)
        throw Error(Errc::BudgetExceeded, std::to_string(p) + "^" + std::to_string(basis.size()) +
                                              " messages exceed the budget of " + std::to_string(budget));
    return count;
}

struct Chunk {
    std::vector<std::uint64_t> hist;
    std::vector<Word> words;
};

Result finish(std::vector<Chunk>& chunks, int p, std::size_t length, std::size_t k, std::uint64_t count,
              const Options& opts)
{
    Result res;
    res.report.p = p;
    res.report.length = length;
    res.report.dimension = k;
    res.report.messages = count;
    res.report.exhaustive = true;
    std::vector<std::uint64_t> hist(length + 1, 0);
    for (auto& c : chunks) {
        for (std::size_t w = 0; w <= length; ++w)
            hist[w] += c.hist[w];
        for (auto& w : c.words)
            res.low_weight.push_back(std::move(w));
    }
    for (std::size_t w = 0; w <= length; ++w)
        if (hist[w] != 0)
            res.report.distribution[w] = hist[w];
    std::sort(res.low_weight.begin(), res.low_weight.end());
    if (opts.on_low_weight)
        for (const auto& w : res.low_weight)
            opts.on_low_weight(w);
    return res;
}

// Prefix split: the top `t` message digits select a chunk, the low r = k - t
// digits are walked by the Gray code inside the chunk.
std::size_t prefix_digits(int p, std::size_t k)
{
    std::size_t t = 0;
    std::uint64_t chunks = 1;
    while (t < k && chunks < 256) {
        chunks *= static_cast<std::uint64_t>(p);
        ++t;
    }
    return t;
}

Result enumerate_binary(std::span<const Word> basis, std::size_t length, std::uint64_t count, const Options& opts)
{
    const std::size_t k = basis.size();
    const std::size_t nb = (length + 63) / 64;
    std::vector<std::uint64_t> rows(k * nb, 0);
    for (std::size_t r = 0; r < k; ++r)
        for (std::size_t j = 0; j < length; ++j)
            if (basis[r][j] != 0)
                rows[r * nb + (j >> 6)] |= std::uint64_t{1} << (j & 63);

    const std::size_t t = prefix_digits(2, k);
    const std::size_t low = k - t;
    const std::int64_t nchunks = std::int64_t{1} << t;
    const std::uint64_t steps = std::uint64_t{1} << low;
    const std::size_t collect = opts.collect_max_weight;
    std::vector<Chunk> chunks(static_cast<std::size_t>(nchunks));

#if defined(_OPENMP)
    const int threads = opts.threads > 0 ? opts.threads : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
#endif
    for (std::int64_t c = 0; c < nchunks; ++c) {
        Chunk& out = chunks[static_cast<std::size_t>(c)];
        out.hist.assign(length + 1, 0);
        std::vector<std::uint64_t> cur(nb, 0);
        for (std::size_t j = 0; j < t; ++j)
            if ((static_cast<std::uint64_t>(c) >> j) & 1U)
                for (std::size_t b = 0; b < nb; ++b)
                    cur[b] ^= rows[(low + j) * nb + b];

        auto record = [&]() {
            std::size_t wt = 0;
            for (std::size_t b = 0; b < nb; ++b)
                wt += static_cast<std::size_t>(std::popcount(cur[b]));
            ++out.hist[wt];
            if (wt != 0 && wt <= collect) {
                Word w(2, length);
                for (std::size_t j = 0; j < length; ++j)
                    if ((cur[j >> 6] >> (j & 63)) & 1U)
                        w.set(j, 1);
                out.words.push_back(std::move(w));
            }
        };
        record();
        for (std::uint64_t s = 1; s < steps; ++s) {
            const std::size_t i = static_cast<std::size_t>(std::countr_zero(s));
            const std::uint64_t* row = &rows[i * nb];
            for (std::size_t b = 0; b < nb; ++b)
                cur[b] ^= row[b];
            record();
        }
    }
    return finish(chunks, 2, length, k, count, opts);
}

Result enumerate_odd(std::span<const Word> basis, int p, std::size_t length, std::uint64_t count, const Options& opts)
{
    const std::size_t k = basis.size();
    // Sparse rows: (position, value) pairs.
    std::vector<std::vector<std::pair<std::uint32_t, std::uint8_t>>> sparse(k);
    for (std::size_t r = 0; r < k; ++r)
        for (std::size_t j = 0; j < length; ++j)
            if (basis[r][j] != 0)
                sparse[r].emplace_back(static_cast<std::uint32_t>(j), basis[r][j]);

    const std::size_t t = prefix_digits(p, k);
    const std::size_t low = k - t;
    const std::int64_t nchunks = static_cast<std::int64_t>(message_count(p, t));
    const std::uint64_t steps = message_count(p, low);
    const std::size_t collect = opts.collect_max_weight;
    std::vector<Chunk> chunks(static_cast<std::size_t>(nchunks));

#if defined(_OPENMP)
    const int threads = opts.threads > 0 ? opts.threads : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
#endif
    for (std::int64_t c = 0; c < nchunks; ++c) {
        Chunk& out = chunks[static_cast<std::size_t>(c)];
        out.hist.assign(length + 1, 0);
        std::vector<std::uint8_t> cur(length, 0);
        std::size_t wt = 0;
        auto add_row = [&](std::size_t r, int times) {
            for (const auto& [pos, val] : sparse[r]) {
                const int old = cur[pos];
                const int nv = (old + times * val) % p;
                wt += static_cast<std::size_t>(nv != 0) - static_cast<std::size_t>(old != 0);
                cur[pos] = static_cast<std::uint8_t>(nv);
            }
        };
        std::uint64_t rest = static_cast<std::uint64_t>(c);
        for (std::size_t j = 0; j < t; ++j) {
            const int d = static_cast<int>(rest % static_cast<std::uint64_t>(p));
            rest /= static_cast<std::uint64_t>(p);
            if (d != 0)
                add_row(low + j, d);
        }

        auto record = [&]() {
            ++out.hist[wt];
            if (wt != 0 && wt <= collect)
                out.words.emplace_back(p, cur);
        };
        record();
        std::vector<std::uint8_t> odo(low, 0);
        for (std::uint64_t s = 1; s < steps; ++s) {
            std::size_t i = 0;
            while (odo[i] == p - 1) {
                odo[i] = 0;
                ++i;
            }
            ++odo[i];
            add_row(i, 1);
            record();
        }
    }
    return finish(chunks, p, length, k, count, opts);
}

} // namespace

Result enumerate(std::span<const Word> basis, int p, std::size_t length, const Options& opts)
{
    check_basis(basis, p, length);
    const auto count = checked_count(basis, p, opts.budget);
    if (p == 2)
        return enumerate_binary(basis, length, count, opts);
    return enumerate_odd(basis, p, length, count, opts);
}

Result enumerate_reference(std::span<const Word> basis, int p, std::size_t length, const Options& opts)
{
    check_basis(basis, p, length);
    const auto count = checked_count(basis, p, opts.budget);
    const std::size_t k = basis.size();
    std::vector<Chunk> one(1);
    one[0].hist.assign(length + 1, 0);
    std::vector<int> digits(k, 0);
    for (std::uint64_t m = 0; m < count; ++m) {
        std::uint64_t rest = m;
        for (std::size_t i = 0; i < k; ++i) {
            digits[i] = static_cast<int>(rest % static_cast<std::uint64_t>(p));
            rest /= static_cast<std::uint64_t>(p);
        }
        Word w(p, length);
        for (std::size_t i = 0; i < k; ++i)
            if (digits[i] != 0)
                w += basis[i].scaled(digits[i]);
        const auto wt = w.weight();
        ++one[0].hist[wt];
        if (wt != 0 && wt <= opts.collect_max_weight)
            one[0].words.push_back(std::move(w));
    }
    return finish(one, p, length, k, count, opts);
}

Result enumerate_spectrum(const code::CodeModel& model, const Options& opts)
{
    return enumerate(model.generator_basis(), model.p(), model.length(), opts);
}

void for_each_codeword(std::span<const Word> basis, int p, std::size_t length, std::uint64_t budget,
                       const std::function<void(const Word&)>& visit)
{
    check_basis(basis, p, length);
    const auto count = checked_count(basis, p, budget);
    Word cur(p, length);
    visit(cur);
    std::vector<int> odo(basis.size(), 0);
    for (std::uint64_t s = 1; s < count; ++s) {
        std::size_t i = 0;
        while (odo[i] == p - 1) {
            odo[i] = 0;
            ++i;
        }
        ++odo[i];
        cur += basis[i];
        visit(cur);
    }
}

} // namespace pgcodes::spectrum
