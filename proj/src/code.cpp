#include "pgcodes/code.hpp"

#include "pgcodes/error.hpp"

#include <string>

namespace pgcodes::code {

fp::Matrix build_incidence_matrix(const geom::Space& space)
{
    const std::size_t N = space.num_points();
    fp::Matrix a(space.p(), N, N);
    const auto& pts = space.points();
    const auto& hyps = space.hyperplanes();
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = 0; j < N; ++j)
            a.at(i, j) = geom::dot(space.field(), hyps[i].dual, pts[j].coords) == 0 ? 1 : 0;
    return a;
}

std::size_t p_rank(const fp::Matrix& m) { return fp::rank(m); }

std::uint64_t expected_dimension(int p, int h, int n)
{
    // binom(p+n-1, n)
    std::uint64_t b = 1;
    for (int i = 1; i <= n; ++i)
        b = b * static_cast<std::uint64_t>(p - 1 + i) / static_cast<std::uint64_t>(i);
    std::uint64_t r = 1;
    for (int i = 0; i < h; ++i)
        r *= b;
    return r + 1;
}

Word incidence_vector(const geom::Space& space, std::span<const std::size_t> points)
{
    Word w(space.p(), space.num_points());
    for (auto i : points) {
        if (i >= space.num_points())
            throw Error(Errc::GeometryMismatch, "point index out of range");
        w.set(i, 1);
    }
    return w;
}

Word incidence_vector(const geom::Space& space, const Bits& points)
{
    if (points.size() != space.num_points())
        throw Error(Errc::GeometryMismatch, "point set belongs to a different geometry");
    const auto idx = points.indices();
    return incidence_vector(space, idx);
}

CodeModel CodeModel::build(const geom::GeometrySpec& g) { return build(std::make_shared<const geom::Space>(g)); }

CodeModel CodeModel::build(std::shared_ptr<const geom::Space> space)
{
    CodeModel m;
    m.space_ = std::move(space);
    const auto& S = *m.space_;
    const int p = S.p();
    const std::size_t N = S.num_points();

    const auto a = build_incidence_matrix(S);
    auto ech = fp::row_reduce(a);
    const auto expected = expected_dimension(p, S.field().h(), S.n());
    if (ech.rows.size() != expected)
        throw Error(Errc::DimensionMismatch, "p-rank " + std::to_string(ech.rows.size()) +
                                                 " differs from the closed-form dimension " + std::to_string(expected));
    m.generator_ = std::move(ech.rows);
    m.pivots_ = std::move(ech.pivots);
    m.check_ = fp::nullspace(a);

    // Hull = { xG : G G^T x^T = 0 }.
    const auto G = fp::Matrix::from_words(p, m.generator_, N);
    const auto gram = fp::multiply(G, G.transposed());
    std::vector<Word> hull_rows;
    for (const auto& x : fp::nullspace(gram)) {
        Word c(p, N);
        for (std::size_t r = 0; r < x.size(); ++r)
            if (x[r] != 0)
                c += m.generator_[r].scaled(x[r]);
        hull_rows.push_back(std::move(c));
    }
    if (!hull_rows.empty())
        m.hull_ = fp::row_reduce(fp::Matrix::from_words(p, hull_rows, N)).rows;
    return m;
}

void CodeModel::check_word(const Word& w) const
{
    if (w.size() != length() || w.p() != p())
        throw Error(Errc::GeometryMismatch, "word does not belong to this code's ambient space");
}

bool CodeModel::contains(const Word& w) const
{
    check_word(w);
    for (const auto& c : check_)
        if (inner_product(c, w) != 0)
            return false;
    return true;
}

bool CodeModel::dual_contains(const Word& w) const
{
    check_word(w);
    for (const auto& g : generator_)
        if (inner_product(g, w) != 0)
            return false;
    return true;
}

bool CodeModel::hull_contains(const Word& w) const { return contains(w) && dual_contains(w); }

std::vector<std::uint8_t> CodeModel::encode_coordinates(const Word& w) const
{
    check_word(w);
    // RREF basis: the coordinate of row r is the entry at its pivot column.
    std::vector<std::uint8_t> msg(generator_.size());
    Word rest = w;
    for (std::size_t r = 0; r < generator_.size(); ++r) {
        msg[r] = w[pivots_[r]];
        if (msg[r] != 0)
            rest -= generator_[r].scaled(msg[r]);
    }
    if (!rest.is_zero())
        throw Error(Errc::NotInCode, "word is not a codeword");
    return msg;
}

Word CodeModel::all_one() const
{
    Word j(p(), length());
    for (std::size_t i = 0; i < length(); ++i)
        j.set(i, 1);
    return j;
}

} // namespace pgcodes::code
