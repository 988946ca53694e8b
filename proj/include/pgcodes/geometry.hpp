#pragma once

// Points, hyperplanes and subspaces of PG(n,q).
//
// Vectors over F_q are ordered by the key sum_i code(x_i) q^i, i.e. the last
// coordinate is most significant. Points (and hyperplane dual vectors) are
// kept in canonical form, first nonzero coordinate equal to 1, and their
// global index is their rank in that order. In PG(2,2) the first point is
// (1,0,0), then (0,1,0), (1,1,0), (0,0,1), ...

#include "pgcodes/bits.hpp"
#include "pgcodes/gf.hpp"

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace pgcodes::geom {

using Vec = std::vector<gf::Elem>;

// theta_m = (q^{m+1} - 1)/(q - 1); theta_{-1} = 0.
std::uint64_t theta(int m, std::uint64_t q);

// Gaussian binomial [n choose k]_q by the product formula.
std::uint64_t gaussian_binomial(int n, int k, std::uint64_t q);

struct GeometrySpec {
    gf::Field field;
    int n;

    int q() const noexcept { return field.q(); }
    int p() const noexcept { return field.p(); }
    int h() const noexcept { return field.h(); }
    friend bool operator==(const GeometrySpec&, const GeometrySpec&) = default;
};

// Validates n >= 2.
GeometrySpec make_geometry(gf::Field field, int n);

std::uint64_t vector_key(const Vec& v, int q);

struct ProjPoint {
    Vec coords;
    friend bool operator==(const ProjPoint&, const ProjPoint&) = default;
};

struct Hyperplane {
    Vec dual;
    friend bool operator==(const Hyperplane&, const Hyperplane&) = default;
};

// Projective subspace stored as the reduced row-echelon basis of its
// underlying vector space; equal subspaces have equal bases.
class Subspace {
public:
    explicit Subspace(std::size_t length) : length_(length) {}
    // Row-reduces the given rows; zero or dependent rows are dropped.
    static Subspace from_rows(const gf::Field& field, std::vector<Vec> rows, std::size_t length);

    const std::vector<Vec>& basis() const noexcept { return basis_; }
    int dim() const noexcept { return static_cast<int>(basis_.size()) - 1; }
    std::size_t length() const noexcept { return length_; }
    bool empty() const noexcept { return basis_.empty(); }

    friend bool operator==(const Subspace&, const Subspace&) = default;

private:
    std::size_t length_;
    std::vector<Vec> basis_;
};

bool is_canonical(const Vec& v) noexcept;
// Scales so the first nonzero coordinate is 1. Throws on the zero vector.
Vec canonical(const gf::Field& field, Vec v);
// Every canonical nonzero vector of the given length, in key order.
std::vector<Vec> canonical_vectors(const gf::Field& field, std::size_t length);

// RREF of the row space; returns only the nonzero rows.
std::vector<Vec> rref(const gf::Field& field, std::vector<Vec> rows, std::size_t length,
                      std::vector<std::size_t>* pivots = nullptr);
// Basis of { x : <r, x> = 0 for every row r }.
std::vector<Vec> nullspace(const gf::Field& field, const std::vector<Vec>& rows, std::size_t length);

gf::Elem dot(const gf::Field& field, const Vec& a, const Vec& b);

std::vector<ProjPoint> enumerate_points(const GeometrySpec& g);
std::vector<Hyperplane> enumerate_hyperplanes(const GeometrySpec& g);
bool incident(const GeometrySpec& g, const ProjPoint& P, const Hyperplane& H);

Subspace point_subspace(const GeometrySpec& g, const ProjPoint& P);
Subspace hyperplane_subspace(const GeometrySpec& g, const Hyperplane& H);
Subspace line_through(const GeometrySpec& g, const ProjPoint& P, const ProjPoint& Q);
Subspace span(const GeometrySpec& g, const Subspace& A, const Subspace& B);
Subspace intersect(const GeometrySpec& g, const Subspace& A, const Subspace& B);
bool contains(const GeometrySpec& g, const Subspace& S, const ProjPoint& P);
// A is contained in B.
bool is_contained(const GeometrySpec& g, const Subspace& A, const Subspace& B);

// Every projective k-subspace, 0 <= k <= n-1, generated as RREF matrices.
std::vector<Subspace> enumerate_subspaces(const GeometrySpec& g, int k);
// Every k-subspace containing S, dim S < k <= n-1.
std::vector<Subspace> subspaces_through(const GeometrySpec& g, const Subspace& S, int k);
// The theta_{dim S} points of S in key order.
std::vector<ProjPoint> points_of(const GeometrySpec& g, const Subspace& S);

// Index-based view of one PG(n,q): points, hyperplanes and every subspace
// level 1..n-1 with its point set. Level n-1 is kept in hyperplane order.
class Space {
public:
    explicit Space(GeometrySpec spec);

    const GeometrySpec& spec() const noexcept { return spec_; }
    const gf::Field& field() const noexcept { return spec_.field; }
    int n() const noexcept { return spec_.n; }
    int q() const noexcept { return spec_.q(); }
    int p() const noexcept { return spec_.p(); }
    std::size_t num_points() const noexcept { return points_.size(); }

    const std::vector<ProjPoint>& points() const noexcept { return points_; }
    const std::vector<Hyperplane>& hyperplanes() const noexcept { return hyperplanes_; }

    // Index of the point spanned by v (any nonzero representative).
    std::size_t index_of(const Vec& v) const;
    std::optional<std::size_t> find(const Vec& v) const;

    // 1 <= dim <= n-1.
    const std::vector<Subspace>& subspaces(int dim) const;
    const std::vector<Bits>& subspace_points(int dim) const;
    const std::vector<Bits>& lines() const { return subspace_points(1); }
    const Bits& hyperplane_points(std::size_t i) const { return subspace_points(spec_.n - 1)[i]; }

    std::vector<std::size_t> point_indices(const Subspace& S) const;
    Bits point_bits(const Subspace& S) const;
    Subspace span_of(const std::vector<std::size_t>& point_indices) const;

private:
    GeometrySpec spec_;
    std::vector<ProjPoint> points_;
    std::vector<Hyperplane> hyperplanes_;
    std::vector<std::int32_t> key_to_index_;
    std::vector<std::vector<Subspace>> levels_;
    std::vector<std::vector<Bits>> level_points_;
};

} // namespace pgcodes::geom
