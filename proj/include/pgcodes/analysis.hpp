#pragma once

// Codeword-level analytics: support, restriction to subspaces, line
// profiles, structural classification, subspace traces and tangent
// collinearity in the plane.

#include "pgcodes/bits.hpp"
#include "pgcodes/code.hpp"
#include "pgcodes/geometry.hpp"
#include "pgcodes/word.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <string_view>
#include <vector>

namespace pgcodes::analysis {

std::vector<std::size_t> support(const Word& w);
Bits support_bits(const Word& w);
std::vector<geom::ProjPoint> support_points(const geom::Space& space, const Word& w);

// Global indices of the points of S in S's own order: local point i is
// lambda_i * basis(S), lambda_i the i-th canonical vector of length dim S + 1.
// This identifies S with PG(dim S, q) coordinate-wise.
std::vector<std::size_t> local_point_order(const geom::Space& ambient, const geom::Subspace& S);

// Entries of w at the points of S, in local order. Any dim S >= 0.
Word restrict(const geom::Space& ambient, const Word& w, const geom::Subspace& S);

struct RestrictionCheck {
    Word restricted;
    bool in_local_code = false;
    bool support_identity = false;
};

// `local` must be the code of PG(dim S, q) over the same field; dim S >= 2.
RestrictionCheck check_restriction(const code::CodeModel& ambient, const code::CodeModel& local, const Word& w,
                                   const geom::Subspace& S);

struct LineProfile {
    // |supp(w) cap l| mod p -> number of lines l
    std::map<int, std::size_t> residues;
    std::map<std::size_t, std::size_t> intersection_sizes;
    std::size_t tangent_lines = 0;
    std::size_t lines = 0;

    bool all_residues_equal(int r) const { return residues.size() == 1 && residues.begin()->first == r; }
};

LineProfile line_profile(const geom::Space& space, const Word& w);

enum class WordKind { Zero, HyperplaneMultiple, HyperplaneDifference, Other };
std::string_view kind_name(WordKind k) noexcept;

struct WordWitness {
    int scalar = 0;
    std::size_t h1 = 0;
    std::optional<std::size_t> h2;
};

struct WordClassification {
    WordKind kind = WordKind::Other;
    std::optional<WordWitness> witness;
};

// Witnesses are hyperplane indices. For p = 2 the smallest pair (h1 < h2)
// with matching symmetric difference is returned; for odd p, h1 < h2 and
// w = scalar * (v^{h1} - v^{h2}).
WordClassification classify_word(const code::CodeModel& model, const Word& w);

enum class TraceKind { Empty, SymmetricDifference, AffineComplement, Other };
std::string_view trace_name(TraceKind k) noexcept;

struct TraceClass {
    TraceKind kind = TraceKind::Other;
    // SymmetricDifference: the two hyperplanes of S; AffineComplement: the
    // removed hyperplane of S. Hyperplanes of a line are its points.
    std::vector<geom::Subspace> witnesses;
};

struct SubspaceTrace {
    geom::Subspace subspace;
    TraceClass trace;
};

// Classifies X cap S for every h-subspace S, 1 <= h <= n-1. A 1-secant line
// or a trace equal to a hyperplane of S classifies Other.
std::vector<SubspaceTrace> classify_subspace_traces(const geom::Space& space, const Bits& X, int h);

// True iff no subspace of dimension 1..n-1 has an Other trace.
bool trace_hypotheses_hold(const geom::Space& space, const Bits& X);

struct TangentResult {
    bool collinear = true;
    std::vector<std::size_t> tangent_points;
    // Set when at least two tangent points exist and they are collinear.
    std::optional<geom::Subspace> line;
};

// Points P of X whose line PQ is tangent to X. Needs n = 2, v^X in C and Q not in X.
TangentResult tangent_collinearity(const code::CodeModel& model, const Bits& X, std::size_t Q);

} // namespace pgcodes::analysis
