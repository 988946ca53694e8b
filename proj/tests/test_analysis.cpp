#include "pgcodes/analysis.hpp"
#include "pgcodes/error.hpp"
#include "pgcodes/spectrum.hpp"
#include "support.hpp"

#include <doctest.h>

#include <set>

using namespace pgcodes;
using analysis::TraceKind;
using analysis::WordKind;

namespace {

Errc error_of(auto&& fn)
{
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    return Errc::InvalidArgument;
}

// Every a (v^H1 - v^H2), H1 != H2, written out entrywise.
std::set<Word> hyperplane_differences(const code::CodeModel& m)
{
    std::set<Word> out;
    const auto nh = m.space().hyperplanes().size();
    for (std::size_t i = 0; i < nh; ++i)
        for (std::size_t j = 0; j < nh; ++j)
            if (i != j)
                for (int a = 1; a < m.p(); ++a)
                    out.insert((m.hyperplane_word(i) - m.hyperplane_word(j)).scaled(a));
    return out;
}

std::set<Word> hyperplane_multiples(const code::CodeModel& m)
{
    std::set<Word> out;
    for (std::size_t i = 0; i < m.space().hyperplanes().size(); ++i)
        for (int a = 1; a < m.p(); ++a)
            out.insert(m.hyperplane_word(i).scaled(a));
    return out;
}

} // namespace

TEST_CASE("support")
{
    const auto& m = testing::model(3, 1, 2);
    CHECK(analysis::support(Word(3, 13)).empty());
    CHECK(analysis::support(m.hyperplane_word(2)).size() == 4);
    const auto d = m.hyperplane_word(0) - m.hyperplane_word(1);
    const auto pts = analysis::support_points(m.space(), d);
    CHECK(pts.size() == 6);
    const auto sym = m.space().hyperplane_points(0) ^ m.space().hyperplane_points(1);
    CHECK(analysis::support_bits(d) == sym);
}

TEST_CASE("line profiles")
{
    const auto& m3 = testing::model(3, 1, 2);
    auto prof = analysis::line_profile(m3.space(), m3.hyperplane_word(5));
    CHECK(prof.all_residues_equal(1));
    CHECK(prof.intersection_sizes == std::map<std::size_t, std::size_t>{{1, 12}, {4, 1}});
    CHECK(prof.tangent_lines == 12);

    const auto& m2 = testing::model(2, 1, 2);
    prof = analysis::line_profile(m2.space(), m2.hyperplane_word(0) + m2.hyperplane_word(1));
    CHECK(prof.all_residues_equal(0));
    CHECK(prof.intersection_sizes == std::map<std::size_t, std::size_t>{{0, 1}, {2, 6}});

    prof = analysis::line_profile(m2.space(), Word(2, 7));
    CHECK(prof.residues == std::map<int, std::size_t>{{0, 7}});
    CHECK(prof.lines == 7);
}

TEST_CASE("classification examples")
{
    const auto& m3 = testing::model(3, 1, 2);
    auto c = analysis::classify_word(m3, m3.hyperplane_word(3).scaled(2));
    CHECK(c.kind == WordKind::HyperplaneMultiple);
    REQUIRE(c.witness);
    CHECK(c.witness->scalar == 2);
    CHECK(c.witness->h1 == 3);
    CHECK(analysis::classify_word(m3, m3.all_one()).kind == WordKind::Other);
    CHECK(analysis::classify_word(m3, Word(3, 13)).kind == WordKind::Zero);

    const auto d = m3.hyperplane_word(7) - m3.hyperplane_word(2);
    c = analysis::classify_word(m3, d);
    CHECK(c.kind == WordKind::HyperplaneDifference);
    REQUIRE(c.witness);
    REQUIRE(c.witness->h2);
    CHECK(c.witness->h1 < *c.witness->h2);
    CHECK((m3.hyperplane_word(c.witness->h1) - m3.hyperplane_word(*c.witness->h2)).scaled(c.witness->scalar) == d);

    const auto& m2 = testing::model(2, 1, 2);
    c = analysis::classify_word(m2, m2.hyperplane_word(1) + m2.hyperplane_word(4));
    CHECK(c.kind == WordKind::HyperplaneDifference);
    // Smallest pair with that symmetric difference.
    const auto target = m2.hyperplane_word(1) + m2.hyperplane_word(4);
    for (std::size_t i = 0; i < 7; ++i)
        for (std::size_t j = i + 1; j < 7; ++j)
            if (m2.hyperplane_word(i) + m2.hyperplane_word(j) == target) {
                CHECK(c.witness->h1 == i);
                CHECK(*c.witness->h2 == j);
                i = j = 7;
            }

    CHECK(error_of([&] { analysis::classify_word(m3, Word(3, 7)); }) == Errc::GeometryMismatch);
}

TEST_CASE("classification against constructed oracles over exhaustive runs")
{
    for (auto [p, h, n] : std::vector<std::tuple<int, int, int>>{{2, 1, 2}, {3, 1, 2}, {2, 2, 2}, {2, 1, 3}, {3, 1, 3}}) {
        const auto& m = testing::model(p, h, n);
        const auto multiples = hyperplane_multiples(m);
        const auto differences = hyperplane_differences(m);
        spectrum::for_each_codeword(m.generator_basis(), p, m.length(), 1 << 20, [&](const Word& w) {
            const auto k = analysis::classify_word(m, w).kind;
            CHECK((k == WordKind::HyperplaneMultiple) == (multiples.count(w) == 1));
            CHECK((k == WordKind::HyperplaneDifference) == (differences.count(w) == 1));
        });
    }
}

TEST_CASE("restriction")
{
    const auto& m = testing::model(2, 1, 3);
    const auto& local = testing::model(2, 1, 2);
    const auto& s = m.space();
    // Two planes and a third plane S.
    const auto w = m.hyperplane_word(0) + m.hyperplane_word(1);
    for (std::size_t i = 2; i < 15; ++i) {
        const auto& S = s.subspaces(2)[i];
        const auto r = analysis::check_restriction(m, local, w, S);
        CHECK(r.in_local_code);
        CHECK(r.support_identity);
    }
    // The all-one word restricts to the all-one word.
    const auto& S = s.subspaces(2)[4];
    CHECK(analysis::restrict(s, m.all_one(), S) == local.all_one());
    // Restrictions of incidence vectors are incidence vectors of the intersection.
    const auto X = s.hyperplane_points(9);
    const auto rx = analysis::restrict(s, code::incidence_vector(s, X), S);
    const auto order = analysis::local_point_order(s, S);
    for (std::size_t i = 0; i < order.size(); ++i)
        CHECK(static_cast<bool>(rx[i]) == X.test(order[i]));
    // The local order starts with the first basis row.
    CHECK(order.size() == 7);
    CHECK(order[0] == s.index_of(S.basis()[0]));

    const auto& line = s.subspaces(1)[0];
    CHECK(analysis::restrict(s, w, line).size() == 3);
    CHECK(error_of([&] { analysis::check_restriction(m, local, w, line); }) == Errc::DimensionTooLow);
}

TEST_CASE("trace classification")
{
    const auto& s = *testing::space(2, 1, 3);
    const auto X = s.hyperplane_points(2) ^ s.hyperplane_points(11);
    for (const auto& t : analysis::classify_subspace_traces(s, X, 2)) {
        CHECK(t.trace.kind != TraceKind::Other);
        // Witnesses reproduce the trace.
        const auto T = X & s.point_bits(t.subspace);
        if (t.trace.kind == TraceKind::SymmetricDifference)
            CHECK((s.point_bits(t.trace.witnesses[0]) ^ s.point_bits(t.trace.witnesses[1])) == T);
        if (t.trace.kind == TraceKind::AffineComplement)
            CHECK((s.point_bits(t.subspace) - s.point_bits(t.trace.witnesses[0])) == T);
    }
    CHECK(analysis::trace_hypotheses_hold(s, X));

    const auto H = s.hyperplane_points(0);
    bool other = false;
    for (const auto& t : analysis::classify_subspace_traces(s, H, 1))
        other |= t.trace.kind == TraceKind::Other;
    CHECK(other);
    CHECK_FALSE(analysis::trace_hypotheses_hold(s, H));

    for (int h = 1; h <= 2; ++h)
        for (const auto& t : analysis::classify_subspace_traces(s, Bits(s.num_points()), h))
            CHECK(t.trace.kind == TraceKind::Empty);
    CHECK(error_of([&] { analysis::classify_subspace_traces(s, H, 3); }) == Errc::DimensionOutOfRange);
}

TEST_CASE("trace classification in odd characteristic")
{
    const auto& s = *testing::space(3, 1, 3);
    const auto X = s.hyperplane_points(0) ^ s.hyperplane_points(25);
    CHECK(X.count() == 18);
    CHECK(analysis::trace_hypotheses_hold(s, X));
}

TEST_CASE("tangent collinearity")
{
    const auto& m = testing::model(2, 1, 2);
    const auto& s = m.space();
    // X = complement of a line, every external Q.
    for (std::size_t l = 0; l < 7; ++l) {
        const auto X = s.hyperplane_points(l).complement();
        for (std::size_t Q = 0; Q < 7; ++Q)
            if (!X.test(Q))
                CHECK(analysis::tangent_collinearity(m, X, Q).collinear);
    }
    // X a line.
    const auto& m4 = testing::model(2, 2, 2);
    const auto L = m4.space().hyperplane_points(3);
    for (std::size_t Q = 0; Q < m4.length(); ++Q)
        if (!L.test(Q)) {
            const auto r = analysis::tangent_collinearity(m4, L, Q);
            CHECK(r.collinear);
            CHECK(r.tangent_points.size() == 5);
            REQUIRE(r.line);
            CHECK(m4.space().point_bits(*r.line) == L);
        }

    const auto X = s.hyperplane_points(0);
    const auto inside = X.indices().front();
    CHECK(error_of([&] { analysis::tangent_collinearity(m, X, inside); }) == Errc::QInX);
    Bits single(7);
    single.set(0);
    CHECK(error_of([&] { analysis::tangent_collinearity(m, single, 1); }) == Errc::NotInCode);
    CHECK(error_of([&] { analysis::tangent_collinearity(testing::model(2, 1, 3), Bits(15), 0); }) ==
          Errc::DimensionOutOfRange);
}
