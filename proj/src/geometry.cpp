#include "pgcodes/geometry.hpp"

#include "pgcodes/error.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace pgcodes::geom {

std::uint64_t theta(int m, std::uint64_t q)
{
    if (m < -1)
        throw Error(Errc::DimensionOutOfRange, "theta needs m >= -1");
    std::uint64_t sum = 0;
    std::uint64_t pw = 1;
    for (int i = 0; i <= m; ++i) {
        sum += pw;
        pw *= q;
    }
    return sum;
}

std::uint64_t gaussian_binomial(int n, int k, std::uint64_t q)
{
    if (k < 0 || k > n)
        return 0;
    // prod_{i=0}^{k-1} (q^{n-i} - 1) / (q^{i+1} - 1); each prefix product is integral.
    auto qpow = [q](int e) {
        std::uint64_t r = 1;
        for (int i = 0; i < e; ++i)
            r *= q;
        return r;
    };
    std::uint64_t num = 1;
    std::uint64_t den = 1;
    for (int i = 0; i < k; ++i) {
        num *= qpow(n - i) - 1;
        den *= qpow(i + 1) - 1;
        const std::uint64_t g = std::gcd(num, den);
        num /= g;
        den /= g;
    }
    return num / den;
}

GeometrySpec make_geometry(gf::Field field, int n)
{
    if (n < 2)
        throw Error(Errc::DimensionOutOfRange, "projective dimension must be >= 2");
    return GeometrySpec{std::move(field), n};
}

std::uint64_t vector_key(const Vec& v, int q)
{
    std::uint64_t key = 0;
    for (std::size_t i = v.size(); i-- > 0;)
        key = key * static_cast<std::uint64_t>(q) + v[i];
    return key;
}

namespace {

void check_vec(const GeometrySpec& g, const Vec& v)
{
    if (v.size() != static_cast<std::size_t>(g.n + 1))
        throw Error(Errc::GeometryMismatch, "vector length " + std::to_string(v.size()) + " does not match PG(" +
                                                std::to_string(g.n) + ",q)");
    for (auto x : v)
        if (x >= g.q())
            throw Error(Errc::GeometryMismatch, "coordinate outside the field");
}

void check_subspace(const GeometrySpec& g, const Subspace& s)
{
    if (s.length() != static_cast<std::size_t>(g.n + 1))
        throw Error(Errc::GeometryMismatch, "subspace belongs to a different geometry");
}

std::vector<Vec> stacked(const Subspace& a, const Subspace& b)
{
    std::vector<Vec> rows = a.basis();
    rows.insert(rows.end(), b.basis().begin(), b.basis().end());
    return rows;
}

} // namespace

Subspace Subspace::from_rows(const gf::Field& field, std::vector<Vec> rows, std::size_t length)
{
    for (const auto& r : rows)
        if (r.size() != length)
            throw Error(Errc::GeometryMismatch, "row length mismatch");
    Subspace s(length);
    s.basis_ = rref(field, std::move(rows), length);
    return s;
}

bool is_canonical(const Vec& v) noexcept
{
    for (auto x : v)
        if (x != 0)
            return x == 1;
    return false;
}

Vec canonical(const gf::Field& field, Vec v)
{
    auto it = std::find_if(v.begin(), v.end(), [](gf::Elem x) { return x != 0; });
    if (it == v.end())
        throw Error(Errc::GeometryMismatch, "the zero vector is not a projective point");
    const gf::Elem s = field.inv(*it);
    for (auto& x : v)
        x = field.mul(x, s);
    return v;
}

std::vector<Vec> canonical_vectors(const gf::Field& field, std::size_t length)
{
    const int q = field.q();
    std::vector<Vec> out;
    Vec v(length, 0);
    // Odometer in key order: coordinate 0 is the fastest digit.
    while (true) {
        std::size_t i = 0;
        while (i < length && v[i] == q - 1) {
            v[i] = 0;
            ++i;
        }
        if (i == length)
            break;
        ++v[i];
        if (is_canonical(v))
            out.push_back(v);
    }
    return out;
}

gf::Elem dot(const gf::Field& field, const Vec& a, const Vec& b)
{
    gf::Elem s = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        s = field.add(s, field.mul(a[i], b[i]));
    return s;
}

std::vector<Vec> rref(const gf::Field& field, std::vector<Vec> rows, std::size_t length,
                      std::vector<std::size_t>* pivots)
{
    std::size_t rank = 0;
    std::vector<std::size_t> piv;
    for (std::size_t col = 0; col < length && rank < rows.size(); ++col) {
        std::size_t sel = rank;
        while (sel < rows.size() && rows[sel][col] == 0)
            ++sel;
        if (sel == rows.size())
            continue;
        std::swap(rows[rank], rows[sel]);
        const gf::Elem s = field.inv(rows[rank][col]);
        for (auto& x : rows[rank])
            x = field.mul(x, s);
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == rank || rows[r][col] == 0)
                continue;
            const gf::Elem f = rows[r][col];
            for (std::size_t c = 0; c < length; ++c)
                rows[r][c] = field.sub(rows[r][c], field.mul(f, rows[rank][c]));
        }
        piv.push_back(col);
        ++rank;
    }
    rows.resize(rank);
    if (pivots)
        *pivots = std::move(piv);
    return rows;
}

std::vector<Vec> nullspace(const gf::Field& field, const std::vector<Vec>& rows, std::size_t length)
{
    std::vector<std::size_t> piv;
    const auto r = rref(field, rows, length, &piv);
    std::vector<bool> is_pivot(length, false);
    for (auto c : piv)
        is_pivot[c] = true;
    std::vector<Vec> basis;
    for (std::size_t f = 0; f < length; ++f) {
        if (is_pivot[f])
            continue;
        Vec x(length, 0);
        x[f] = 1;
        for (std::size_t i = 0; i < r.size(); ++i)
            x[piv[i]] = field.neg(r[i][f]);
        basis.push_back(std::move(x));
    }
    return basis;
}

std::vector<ProjPoint> enumerate_points(const GeometrySpec& g)
{
    std::vector<ProjPoint> out;
    for (auto& v : canonical_vectors(g.field, static_cast<std::size_t>(g.n + 1)))
        out.push_back(ProjPoint{std::move(v)});
    return out;
}

std::vector<Hyperplane> enumerate_hyperplanes(const GeometrySpec& g)
{
    std::vector<Hyperplane> out;
    for (auto& v : canonical_vectors(g.field, static_cast<std::size_t>(g.n + 1)))
        out.push_back(Hyperplane{std::move(v)});
    return out;
}

bool incident(const GeometrySpec& g, const ProjPoint& P, const Hyperplane& H)
{
    check_vec(g, P.coords);
    check_vec(g, H.dual);
    return dot(g.field, P.coords, H.dual) == 0;
}

Subspace point_subspace(const GeometrySpec& g, const ProjPoint& P)
{
    check_vec(g, P.coords);
    return Subspace::from_rows(g.field, {P.coords}, P.coords.size());
}

Subspace hyperplane_subspace(const GeometrySpec& g, const Hyperplane& H)
{
    check_vec(g, H.dual);
    const std::size_t len = H.dual.size();
    return Subspace::from_rows(g.field, nullspace(g.field, {H.dual}, len), len);
}

Subspace line_through(const GeometrySpec& g, const ProjPoint& P, const ProjPoint& Q)
{
    check_vec(g, P.coords);
    check_vec(g, Q.coords);
    auto l = Subspace::from_rows(g.field, {P.coords, Q.coords}, P.coords.size());
    if (l.dim() != 1)
        throw Error(Errc::EqualPoints, "a line needs two distinct points");
    return l;
}

Subspace span(const GeometrySpec& g, const Subspace& A, const Subspace& B)
{
    check_subspace(g, A);
    check_subspace(g, B);
    return Subspace::from_rows(g.field, stacked(A, B), A.length());
}

Subspace intersect(const GeometrySpec& g, const Subspace& A, const Subspace& B)
{
    check_subspace(g, A);
    check_subspace(g, B);
    const std::size_t len = A.length();
    if (A.empty() || B.empty())
        return Subspace(len);
    auto dual = nullspace(g.field, A.basis(), len);
    auto db = nullspace(g.field, B.basis(), len);
    dual.insert(dual.end(), db.begin(), db.end());
    return Subspace::from_rows(g.field, nullspace(g.field, dual, len), len);
}

bool contains(const GeometrySpec& g, const Subspace& S, const ProjPoint& P)
{
    check_subspace(g, S);
    check_vec(g, P.coords);
    auto rows = S.basis();
    rows.push_back(P.coords);
    return rref(g.field, std::move(rows), S.length()).size() == S.basis().size();
}

bool is_contained(const GeometrySpec& g, const Subspace& A, const Subspace& B)
{
    check_subspace(g, A);
    check_subspace(g, B);
    return rref(g.field, stacked(B, A), B.length()).size() == B.basis().size();
}

std::vector<Subspace> enumerate_subspaces(const GeometrySpec& g, int k)
{
    if (k < 0 || k > g.n - 1)
        throw Error(Errc::DimensionOutOfRange, "subspace dimension must lie in [0, n-1]");
    const std::size_t len = static_cast<std::size_t>(g.n + 1);
    const std::size_t rows = static_cast<std::size_t>(k + 1);
    const int q = g.q();
    std::vector<Subspace> out;

    std::vector<std::size_t> piv(rows);
    for (std::size_t i = 0; i < rows; ++i)
        piv[i] = i;
    while (true) {
        // Free positions: (row, col) with col > pivot[row] and col not a pivot.
        std::vector<bool> is_pivot(len, false);
        for (auto c : piv)
            is_pivot[c] = true;
        std::vector<std::pair<std::size_t, std::size_t>> free;
        for (std::size_t r = 0; r < rows; ++r)
            for (std::size_t c = piv[r] + 1; c < len; ++c)
                if (!is_pivot[c])
                    free.emplace_back(r, c);

        std::vector<Vec> m(rows, Vec(len, 0));
        for (std::size_t r = 0; r < rows; ++r)
            m[r][piv[r]] = 1;
        std::vector<gf::Elem> digits(free.size(), 0);
        while (true) {
            for (std::size_t i = 0; i < free.size(); ++i)
                m[free[i].first][free[i].second] = digits[i];
            out.push_back(Subspace::from_rows(g.field, m, len));
            std::size_t i = 0;
            while (i < digits.size() && digits[i] == q - 1) {
                digits[i] = 0;
                ++i;
            }
            if (i == digits.size())
                break;
            ++digits[i];
        }

        // Next pivot combination in lexicographic order.
        std::size_t i = rows;
        while (i > 0 && piv[i - 1] == len - rows + (i - 1))
            --i;
        if (i == 0)
            break;
        ++piv[i - 1];
        for (std::size_t j = i; j < rows; ++j)
            piv[j] = piv[j - 1] + 1;
    }
    return out;
}

std::vector<Subspace> subspaces_through(const GeometrySpec& g, const Subspace& S, int k)
{
    check_subspace(g, S);
    if (k <= S.dim() || k > g.n - 1)
        throw Error(Errc::DimensionOutOfRange, "need dim S < k <= n-1");
    std::vector<Subspace> out;
    for (auto& T : enumerate_subspaces(g, k))
        if (is_contained(g, S, T))
            out.push_back(std::move(T));
    return out;
}

std::vector<ProjPoint> points_of(const GeometrySpec& g, const Subspace& S)
{
    check_subspace(g, S);
    if (S.empty())
        throw Error(Errc::EmptySubspace, "the empty subspace has no points");
    const auto& B = S.basis();
    std::vector<ProjPoint> out;
    for (const auto& lam : canonical_vectors(g.field, B.size())) {
        Vec x(S.length(), 0);
        for (std::size_t r = 0; r < B.size(); ++r) {
            if (lam[r] == 0)
                continue;
            for (std::size_t c = 0; c < x.size(); ++c)
                x[c] = g.field.add(x[c], g.field.mul(lam[r], B[r][c]));
        }
        // RREF basis: the first nonzero of x is the leading lambda, which is 1.
        out.push_back(ProjPoint{std::move(x)});
    }
    std::sort(out.begin(), out.end(), [q = g.q()](const ProjPoint& a, const ProjPoint& b) {
        return vector_key(a.coords, q) < vector_key(b.coords, q);
    });
    return out;
}

Space::Space(GeometrySpec spec) : spec_(std::move(spec))
{
    if (spec_.n < 2)
        throw Error(Errc::DimensionOutOfRange, "projective dimension must be >= 2");
    points_ = enumerate_points(spec_);
    hyperplanes_ = enumerate_hyperplanes(spec_);

    std::uint64_t total = 1;
    for (int i = 0; i <= spec_.n; ++i)
        total *= static_cast<std::uint64_t>(spec_.q());
    key_to_index_.assign(total, -1);
    for (std::size_t i = 0; i < points_.size(); ++i)
        key_to_index_[vector_key(points_[i].coords, spec_.q())] = static_cast<std::int32_t>(i);

    levels_.resize(static_cast<std::size_t>(spec_.n));
    level_points_.resize(static_cast<std::size_t>(spec_.n));
    for (int d = 1; d <= spec_.n - 1; ++d) {
        auto& lvl = levels_[d];
        if (d == spec_.n - 1) {
            for (const auto& H : hyperplanes_)
                lvl.push_back(hyperplane_subspace(spec_, H));
        } else {
            lvl = enumerate_subspaces(spec_, d);
        }
        auto& bits = level_points_[d];
        bits.reserve(lvl.size());
        for (const auto& S : lvl)
            bits.push_back(point_bits(S));
    }
}

std::optional<std::size_t> Space::find(const Vec& v) const
{
    if (v.size() != static_cast<std::size_t>(spec_.n + 1))
        return std::nullopt;
    for (auto x : v)
        if (x >= spec_.q())
            return std::nullopt;
    if (std::all_of(v.begin(), v.end(), [](gf::Elem x) { return x == 0; }))
        return std::nullopt;
    const auto idx = key_to_index_[vector_key(canonical(spec_.field, v), spec_.q())];
    return static_cast<std::size_t>(idx);
}

std::size_t Space::index_of(const Vec& v) const
{
    auto i = find(v);
    if (!i)
        throw Error(Errc::GeometryMismatch, "vector is not a point of this geometry");
    return *i;
}

const std::vector<Subspace>& Space::subspaces(int dim) const
{
    if (dim < 1 || dim > spec_.n - 1)
        throw Error(Errc::DimensionOutOfRange, "cached subspace levels are 1..n-1");
    return levels_[dim];
}

const std::vector<Bits>& Space::subspace_points(int dim) const
{
    if (dim < 1 || dim > spec_.n - 1)
        throw Error(Errc::DimensionOutOfRange, "cached subspace levels are 1..n-1");
    return level_points_[dim];
}

std::vector<std::size_t> Space::point_indices(const Subspace& S) const
{
    std::vector<std::size_t> out;
    for (const auto& P : points_of(spec_, S))
        out.push_back(index_of(P.coords));
    std::sort(out.begin(), out.end());
    return out;
}

Bits Space::point_bits(const Subspace& S) const
{
    Bits b(points_.size());
    for (auto i : point_indices(S))
        b.set(i);
    return b;
}

Subspace Space::span_of(const std::vector<std::size_t>& point_indices) const
{
    std::vector<Vec> rows;
    rows.reserve(point_indices.size());
    for (auto i : point_indices)
        rows.push_back(points_.at(i).coords);
    return Subspace::from_rows(spec_.field, std::move(rows), static_cast<std::size_t>(spec_.n + 1));
}

} // namespace pgcodes::geom
