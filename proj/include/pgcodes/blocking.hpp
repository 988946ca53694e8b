#pragma once

// k-blocking sets of PG(n,q): point sets meeting every (n-k)-subspace.

#include "pgcodes/bits.hpp"
#include "pgcodes/geometry.hpp"

#include <cstddef>
#include <random>
#include <vector>

namespace pgcodes::blocking {

// Point sets are bitmaps over the global point order of one Space.
using PointSet = Bits;

// 1 <= k <= n-1.
bool is_k_blocking(const geom::Space& space, const PointSet& B, int k);

// Indices into space.subspaces(n-k) of the subspaces meeting B in exactly P.
std::vector<std::size_t> tangent_spaces(const geom::Space& space, const PointSet& B, int k, std::size_t P);

PointSet essential_points(const geom::Space& space, const PointSet& B, int k);
bool is_minimal(const geom::Space& space, const PointSet& B, int k);

struct Reduction {
    PointSet set;
    // False when |B| >= q^{n-1} + theta_{n-1}; the reduction still runs.
    bool uniqueness_guaranteed = true;
    std::vector<std::size_t> removed;
};

// q^{n-1} + theta_{n-1}
std::size_t uniqueness_bound(const geom::Space& space);

// Removes non-essential points one at a time until every point is
// essential. Without rng the smallest non-essential point goes first;
// with rng a uniformly random one.
Reduction reduce_to_minimal(const geom::Space& space, const PointSet& B, int k, std::mt19937_64* rng = nullptr);
Reduction reduce_to_minimal(const geom::Space& space, const PointSet& B);

// Points of exactly one of the two hyperplanes (indices into hyperplanes()).
PointSet symmetric_difference(const geom::Space& space, std::size_t h1, std::size_t h2);

} // namespace pgcodes::blocking
