#pragma once

// The p-ary code C(n,q) spanned by the rows of the point-hyperplane
// incidence matrix of PG(n,q), together with its dual and hull.

#include "pgcodes/bits.hpp"
#include "pgcodes/fp_matrix.hpp"
#include "pgcodes/geometry.hpp"
#include "pgcodes/word.hpp"

#include <cstdint>
#include <memory>
#include <span>
#include <vector>

namespace pgcodes::code {

// Row i = incidence vector of hyperplane i over the global point order.
fp::Matrix build_incidence_matrix(const geom::Space& space);
std::size_t p_rank(const fp::Matrix& m);

// binom(p+n-1, n)^h + 1
std::uint64_t expected_dimension(int p, int h, int n);

Word incidence_vector(const geom::Space& space, std::span<const std::size_t> points);
Word incidence_vector(const geom::Space& space, const Bits& points);

class CodeModel {
public:
    // Fails with DimensionMismatch when the rank of the incidence matrix
    // disagrees with expected_dimension().
    static CodeModel build(std::shared_ptr<const geom::Space> space);
    static CodeModel build(const geom::GeometrySpec& g);

    const geom::Space& space() const noexcept { return *space_; }
    std::shared_ptr<const geom::Space> space_ptr() const noexcept { return space_; }
    int p() const noexcept { return space_->p(); }
    std::size_t length() const noexcept { return space_->num_points(); }
    std::size_t dimension() const noexcept { return generator_.size(); }

    const std::vector<Word>& generator_basis() const noexcept { return generator_; }
    const std::vector<std::size_t>& generator_pivots() const noexcept { return pivots_; }
    const std::vector<Word>& check_basis() const noexcept { return check_; }
    const std::vector<Word>& hull_basis() const noexcept { return hull_; }

    bool contains(const Word& w) const;
    bool dual_contains(const Word& w) const;
    bool hull_contains(const Word& w) const;

    // Message coordinates of w against the RREF generator basis; w must be in C.
    std::vector<std::uint8_t> encode_coordinates(const Word& w) const;

    Word hyperplane_word(std::size_t i) const { return incidence_vector(*space_, space_->hyperplane_points(i)); }
    Word all_one() const;

private:
    CodeModel() = default;
    void check_word(const Word& w) const;

    std::shared_ptr<const geom::Space> space_;
    std::vector<Word> generator_;
    std::vector<std::size_t> pivots_;
    std::vector<Word> check_;
    std::vector<Word> hull_;
};

} // namespace pgcodes::code
