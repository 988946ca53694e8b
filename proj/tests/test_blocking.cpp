#include "pgcodes/blocking.hpp"
#include "pgcodes/error.hpp"
#include "support.hpp"

#include <doctest.h>

#include <random>

using namespace pgcodes;
using namespace pgcodes::blocking;

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

// A point set blocks lines iff no line misses it; checked point by point.
bool blocks_lines_naive(const geom::Space& s, const PointSet& B)
{
    for (const auto& l : s.lines()) {
        bool hit = false;
        for (auto i : l.indices())
            hit |= B.test(i);
        if (!hit)
            return false;
    }
    return true;
}

} // namespace

TEST_CASE("blocking predicates")
{
    const auto& s = *testing::space(3, 1, 2);
    const auto line = s.hyperplane_points(0);
    CHECK(is_k_blocking(s, line, 1));
    PointSet single(s.num_points());
    single.set(4);
    CHECK_FALSE(is_k_blocking(s, single, 1));

    const auto& s3 = *testing::space(2, 1, 3);
    // A line is a trivial 1-blocking set of PG(3,2) (it meets every plane); a plane blocks lines.
    CHECK(is_k_blocking(s3, s3.subspace_points(1)[3], 1));
    CHECK_FALSE(is_k_blocking(s3, s3.subspace_points(1)[3], 2));
    CHECK(is_k_blocking(s3, s3.hyperplane_points(2), 2));
    CHECK(error_of([&] { is_k_blocking(s3, single, 2); }) == Errc::GeometryMismatch);
    CHECK(error_of([&] { is_k_blocking(s, line, 2); }) == Errc::DimensionOutOfRange);

    std::mt19937_64 rng(1);
    for (int t = 0; t < 200; ++t) {
        PointSet B(s.num_points());
        for (std::size_t i = 0; i < s.num_points(); ++i)
            if (rng() % 2)
                B.set(i);
        CHECK(is_k_blocking(s, B, 1) == blocks_lines_naive(s, B));
    }
}

TEST_CASE("tangent spaces and essential points")
{
    const int q = 4;
    const auto& s = *testing::space(2, 2, 2);
    const auto l = s.hyperplane_points(6);
    const auto P = l.indices()[2];
    const auto tangents = tangent_spaces(s, l, 1, P);
    CHECK(tangents.size() == static_cast<std::size_t>(q));
    for (auto t : tangents)
        CHECK((s.lines()[t] & l).indices() == std::vector<std::size_t>{P});
    CHECK(essential_points(s, l, 1) == l);
    CHECK(is_minimal(s, l, 1));

    auto B = l;
    const auto R = l.complement().indices().front();
    B.set(R);
    CHECK(tangent_spaces(s, B, 1, R).empty());
    CHECK(essential_points(s, B, 1) == l);
    CHECK_FALSE(is_minimal(s, B, 1));
    CHECK(error_of([&] { tangent_spaces(s, l, 1, R); }) == Errc::PointNotInSet);

    PointSet single(s.num_points());
    single.set(0);
    CHECK(error_of([&] { essential_points(s, single, 1); }) == Errc::NotBlocking);
}

TEST_CASE("union of two lines: only the common point is essential")
{
    const auto& s = *testing::space(2, 1, 2);
    const auto B = s.hyperplane_points(0) | s.hyperplane_points(1);
    CHECK(B.count() == 5);
    // Any other point of B lies on one line; each further line through it meets the other.
    CHECK(essential_points(s, B, 1) == (s.hyperplane_points(0) & s.hyperplane_points(1)));
    CHECK_FALSE(is_minimal(s, B, 1));
}

TEST_CASE("reduction")
{
    const auto& s = *testing::space(5, 1, 2);
    CHECK(uniqueness_bound(s) == 11);
    const auto l = s.hyperplane_points(10);
    std::mt19937_64 rng(7);
    auto outside = l.complement().indices();
    std::shuffle(outside.begin(), outside.end(), rng);
    auto B = l;
    for (int i = 0; i < 3; ++i)
        B.set(outside[i]);
    CHECK(B.count() == 9);
    const auto r = reduce_to_minimal(s, B);
    CHECK(r.set == l);
    CHECK(r.uniqueness_guaranteed);
    CHECK(r.removed.size() == 3);
    for (int t = 0; t < 10; ++t)
        CHECK(reduce_to_minimal(s, B, 1, &rng).set == l);

    // Already minimal: unchanged.
    CHECK(reduce_to_minimal(s, l).set == l);
    CHECK(reduce_to_minimal(s, l).removed.empty());

    const auto& s3 = *testing::space(3, 1, 3);
    auto C = s3.hyperplane_points(4);
    C.set(C.complement().indices().back());
    CHECK(reduce_to_minimal(s3, C).set == s3.hyperplane_points(4));

    // At the bound the reduction runs, uniqueness is not asserted.
    auto big = l;
    for (int i = 0; i < 5; ++i)
        big.set(outside[i]);
    CHECK(big.count() == 11);
    const auto rb = reduce_to_minimal(s, big);
    CHECK_FALSE(rb.uniqueness_guaranteed);
    CHECK(is_minimal(s, rb.set, 1));

    PointSet single(s.num_points());
    single.set(0);
    CHECK(error_of([&] { reduce_to_minimal(s, single); }) == Errc::NotBlocking);
}

TEST_CASE("symmetric differences")
{
    CHECK(symmetric_difference(*testing::space(2, 1, 2), 0, 1).count() == 4);
    CHECK(symmetric_difference(*testing::space(3, 1, 2), 3, 8).count() == 6);
    CHECK(symmetric_difference(*testing::space(3, 1, 3), 0, 39).count() == 18);
    const auto& m = testing::model(3, 1, 3);
    const auto w = m.hyperplane_word(0) - m.hyperplane_word(39);
    CHECK(m.hull_contains(w));
    CHECK(error_of([&] { symmetric_difference(*testing::space(3, 1, 3), 2, 2); }) == Errc::EqualHyperplanes);
}
