#include "pgcodes/search.hpp"

#include "pgcodes/code.hpp"
#include "pgcodes/error.hpp"
#include "pgcodes/fp_matrix.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#if defined(_OPENMP)
#include <omp.h>
#endif

namespace pgcodes::search {

std::uint64_t mix_seed(std::uint64_t x) noexcept
{
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

namespace {

constexpr int kMaxRetries = 16;

class Worker {
public:
    Worker(std::span<const Word> basis, int p, std::size_t length, std::size_t max_weight)
        : basis_(basis), p_(p), n_(length), k_(basis.size()), max_weight_(max_weight), m_(k_ * length)
    {
    }

    // One Lee-Brickell round; returns false when no information set was found.
    bool run(std::mt19937_64& rng, std::set<Word>& found)
    {
        std::vector<std::size_t> perm(n_);
        std::iota(perm.begin(), perm.end(), std::size_t{0});
        for (std::size_t i = n_; i-- > 1;)
            std::swap(perm[i], perm[rng() % (i + 1)]);

        for (std::size_t r = 0; r < k_; ++r)
            std::copy(basis_[r].entries().begin(), basis_[r].entries().end(), m_.begin() + r * n_);

        // Greedy pivoting in random column order yields a random information set.
        std::vector<std::size_t> piv;
        std::size_t rank = 0;
        for (std::size_t idx = 0; idx < n_ && rank < k_; ++idx) {
            const std::size_t col = perm[idx];
            std::size_t sel = rank;
            while (sel < k_ && at(sel, col) == 0)
                ++sel;
            if (sel == k_)
                continue;
            if (sel != rank)
                std::swap_ranges(m_.begin() + sel * n_, m_.begin() + (sel + 1) * n_, m_.begin() + rank * n_);
            const int s = fp::inv_mod(at(rank, col), p_);
            for (std::size_t c = 0; c < n_; ++c)
                at(rank, c) = static_cast<std::uint8_t>((at(rank, c) * s) % p_);
            for (std::size_t r = 0; r < k_; ++r) {
                if (r == rank || at(r, col) == 0)
                    continue;
                const int f = p_ - at(r, col);
                for (std::size_t c = 0; c < n_; ++c)
                    at(r, c) = static_cast<std::uint8_t>((at(r, c) + f * at(rank, c)) % p_);
            }
            piv.push_back(col);
            ++rank;
        }
        if (rank < k_)
            return false;

        std::vector<bool> in_info(n_, false);
        for (auto c : piv)
            in_info[c] = true;
        std::vector<std::size_t> red;
        for (std::size_t c = 0; c < n_; ++c)
            if (!in_info[c])
                red.push_back(c);
        const std::size_t nr = red.size();

        // scaled[(r * p + a) * nr + j] = a * row_r[red_j]
        scaled_.assign(k_ * static_cast<std::size_t>(p_) * nr, 0);
        for (std::size_t r = 0; r < k_; ++r)
            for (int a = 1; a < p_; ++a)
                for (std::size_t j = 0; j < nr; ++j)
                    scaled_[(r * p_ + a) * nr + j] = static_cast<std::uint8_t>((a * at(r, red[j])) % p_);

        auto emit = [&](std::size_t r1, int a1, std::size_t r2, int a2) {
            Word w(p_, n_);
            for (std::size_t c = 0; c < n_; ++c) {
                int v = a1 * at(r1, c);
                if (a2 != 0)
                    v += a2 * at(r2, c);
                w.set(c, v);
            }
            found.insert(std::move(w));
        };

        if (max_weight_ >= 1) {
            for (std::size_t r = 0; r < k_; ++r)
                for (int a = 1; a < p_; ++a) {
                    const std::uint8_t* s = &scaled_[(r * p_ + a) * nr];
                    std::size_t wt = 1;
                    for (std::size_t j = 0; j < nr && wt <= max_weight_; ++j)
                        wt += s[j] != 0;
                    if (wt <= max_weight_)
                        emit(r, a, 0, 0);
                }
        }
        if (max_weight_ >= 2) {
            for (std::size_t r1 = 0; r1 < k_; ++r1)
                for (std::size_t r2 = r1 + 1; r2 < k_; ++r2)
                    for (int a1 = 1; a1 < p_; ++a1) {
                        const std::uint8_t* s1 = &scaled_[(r1 * p_ + a1) * nr];
                        for (int a2 = 1; a2 < p_; ++a2) {
                            const std::uint8_t* s2 = &scaled_[(r2 * p_ + a2) * nr];
                            std::size_t wt = 2;
                            for (std::size_t j = 0; j < nr && wt <= max_weight_; ++j) {
                                int v = s1[j] + s2[j];
                                wt += v != 0 && v != p_;
                            }
                            if (wt <= max_weight_)
                                emit(r1, a1, r2, a2);
                        }
                    }
        }
        return true;
    }

private:
    std::uint8_t& at(std::size_t r, std::size_t c) { return m_[r * n_ + c]; }

    std::span<const Word> basis_;
    int p_;
    std::size_t n_;
    std::size_t k_;
    std::size_t max_weight_;
    std::vector<std::uint8_t> m_;
    std::vector<std::uint8_t> scaled_;
};

} // namespace

Result low_weight_search(std::span<const Word> basis, int p, std::size_t length, const Options& opts)
{
    if (opts.iterations < 1)
        throw Error(Errc::InvalidArgument, "search needs at least one iteration");
    for (const auto& b : basis)
        if (b.size() != length || b.p() != p)
            throw Error(Errc::LengthMismatch, "basis word does not match the code length or field");

    Result res;
    res.iterations = opts.iterations;
    if (opts.max_weight == 0 || basis.empty())
        return res;
    // An independent basis always admits an information set; check once up front.
    if (fp::rank(fp::Matrix::from_words(p, basis, length)) != basis.size())
        throw Error(Errc::NoInformationSetFound, "basis is rank deficient");

    std::set<Word> merged;
    const auto total = static_cast<std::int64_t>(opts.iterations);
    bool failed = false;

#if defined(_OPENMP)
    const int threads = opts.threads > 0 ? opts.threads : omp_get_max_threads();
#pragma omp parallel num_threads(threads)
#endif
    {
        Worker worker(basis, p, length, opts.max_weight);
        std::set<Word> local;
        bool local_failed = false;
#if defined(_OPENMP)
#pragma omp for schedule(static)
#endif
        for (std::int64_t it = 0; it < total; ++it) {
            std::mt19937_64 rng(mix_seed(opts.seed ^ mix_seed(static_cast<std::uint64_t>(it))));
            int tries = 0;
            while (!worker.run(rng, local))
                if (++tries >= kMaxRetries) {
                    local_failed = true;
                    break;
                }
        }
#if defined(_OPENMP)
#pragma omp critical
#endif
        {
            merged.insert(local.begin(), local.end());
            failed = failed || local_failed;
        }
    }
    if (failed)
        throw Error(Errc::NoInformationSetFound, "no information set after repeated retries");

    res.words.assign(merged.begin(), merged.end());
    std::set<Word> orbits;
    for (const auto& w : res.words) {
        ++res.weight_counts[w.weight()];
        for (auto e : w.entries())
            if (e != 0) {
                orbits.insert(w.scaled(fp::inv_mod(e, p)));
                break;
            }
    }
    res.orbit_count = orbits.size();
    return res;
}

Result low_weight_search(const code::CodeModel& model, const Options& opts)
{
    return low_weight_search(model.generator_basis(), model.p(), model.length(), opts);
}

} // namespace pgcodes::search
