#include "pgcodes/code.hpp"
#include "pgcodes/error.hpp"
#include "support.hpp"

#include <doctest.h>

#include <random>

using namespace pgcodes;

TEST_CASE("dimension formula over the parameter grid")
{
    struct Row {
        int p, h, n;
        std::size_t dim;
    };
    for (auto r : std::vector<Row>{{2, 1, 2, 4},
                                   {3, 1, 2, 7},
                                   {2, 2, 2, 10},
                                   {5, 1, 2, 16},
                                   {7, 1, 2, 29},
                                   {2, 3, 2, 28},
                                   {2, 1, 3, 5},
                                   {3, 1, 3, 11},
                                   {2, 2, 3, 17},
                                   {2, 1, 4, 6}}) {
        CAPTURE(r.p);
        CAPTURE(r.h);
        CAPTURE(r.n);
        CHECK(code::expected_dimension(r.p, r.h, r.n) == r.dim);
        const auto A = code::build_incidence_matrix(*testing::space(r.p, r.h, r.n));
        CHECK(code::p_rank(A) == r.dim);
        CHECK(testing::model(r.p, r.h, r.n).dimension() == r.dim);
    }
}

TEST_CASE("incidence matrix rows and columns have weight theta_{n-1}")
{
    auto s = testing::space(3, 1, 3);
    const auto A = code::build_incidence_matrix(*s);
    const auto T = A.transposed();
    for (std::size_t i = 0; i < A.rows(); ++i) {
        CHECK(A.row_word(i).weight() == 13);
        CHECK(T.row_word(i).weight() == 13);
    }
}

TEST_CASE("membership agrees with the brute-force code")
{
    for (auto [p, h, n] : std::vector<std::tuple<int, int, int>>{{2, 1, 2}, {3, 1, 2}, {2, 1, 3}}) {
        const auto& m = testing::model(p, h, n);
        const auto oracle = testing::brute_force_code(m.space());
        std::size_t size = 1;
        for (std::size_t i = 0; i < m.dimension(); ++i)
            size *= static_cast<std::size_t>(p);
        CHECK(oracle.size() == size);
        for (const auto& w : oracle) {
            CHECK(m.contains(w));
            const auto c = m.encode_coordinates(w);
            Word back(p, m.length());
            for (std::size_t i = 0; i < c.size(); ++i)
                back += m.generator_basis()[i].scaled(c[i]);
            CHECK(back == w);
        }
        // Random words outside the oracle are rejected.
        std::mt19937_64 rng(11);
        for (int t = 0; t < 300; ++t) {
            Word w(p, m.length());
            for (std::size_t i = 0; i < w.size(); ++i)
                w.set(i, static_cast<int>(rng() % static_cast<unsigned>(p)));
            CHECK(m.contains(w) == (oracle.count(w) == 1));
        }
    }
}

TEST_CASE("every word of length 7 over F_2 against PG(2,2)")
{
    const auto& m = testing::model(2, 1, 2);
    const auto oracle = testing::brute_force_code(m.space());
    CHECK(oracle.size() == 16);
    for (unsigned bits = 0; bits < 128; ++bits) {
        Word w(2, 7);
        for (std::size_t i = 0; i < 7; ++i)
            w.set(i, (bits >> i) & 1U);
        CHECK(m.contains(w) == (oracle.count(w) == 1));
        if (w.weight() == 1)
            CHECK_FALSE(m.contains(w));
    }
}

TEST_CASE("dual and hull")
{
    for (auto [p, h, n] : std::vector<std::tuple<int, int, int>>{{2, 1, 2}, {3, 1, 2}, {2, 2, 2}, {2, 1, 3}, {3, 1, 3}, {5, 1, 2}}) {
        const auto& m = testing::model(p, h, n);
        CHECK(m.dimension() + m.check_basis().size() == m.length());
        for (const auto& c : m.check_basis())
            for (const auto& g : m.generator_basis())
                CHECK(inner_product(c, g) == 0);
        // The hull is the kernel of w -> (w, j) inside C.
        CHECK(m.hull_basis().size() == m.dimension() - 1);
        for (const auto& w : m.hull_basis()) {
            CHECK(m.contains(w));
            CHECK(m.dual_contains(w));
            CHECK(m.hull_contains(w));
        }
    }
}

TEST_CASE("membership examples")
{
    const auto& m3 = testing::model(3, 1, 2);
    CHECK(m3.contains(m3.all_one()));
    CHECK(m3.contains(m3.hyperplane_word(4)));
    CHECK_FALSE(m3.dual_contains(m3.hyperplane_word(0)));
    CHECK_FALSE(m3.hull_contains(m3.hyperplane_word(0)));
    CHECK(m3.hull_contains(m3.hyperplane_word(0) - m3.hyperplane_word(1)));
    CHECK(m3.hull_contains(Word(3, 13)));
    CHECK(m3.dual_contains(Word(3, 13)));
    CHECK(inner_product(m3.all_one(), m3.hyperplane_word(2)) == 1);
    CHECK(inner_product(m3.hyperplane_word(2), m3.hyperplane_word(2)) == 1);

    Word wrong(3, 7);
    CHECK_THROWS_AS(m3.contains(wrong), Error);
    Word lonely(3, 13);
    lonely.set(0, 1);
    try {
        (void)m3.encode_coordinates(lonely);
        FAIL("expected NotInCode");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::NotInCode);
    }
}
