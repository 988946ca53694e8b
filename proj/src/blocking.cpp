#include "pgcodes/blocking.hpp"

#include "pgcodes/error.hpp"

namespace pgcodes::blocking {

namespace {

void check(const geom::Space& space, const PointSet& B, int k)
{
    if (k < 1 || k > space.n() - 1)
        throw Error(Errc::DimensionOutOfRange, "k must lie in [1, n-1]");
    if (B.size() != space.num_points())
        throw Error(Errc::GeometryMismatch, "point set belongs to a different geometry");
}

bool blocks(const geom::Space& space, const PointSet& B, int k)
{
    for (const auto& s : space.subspace_points(space.n() - k))
        if (!s.intersects(B))
            return false;
    return true;
}

PointSet essential_unchecked(const geom::Space& space, const PointSet& B, int k)
{
    PointSet ess(B.size());
    for (const auto& s : space.subspace_points(space.n() - k)) {
        const auto meet = s & B;
        if (meet.count() == 1)
            ess |= meet;
    }
    return ess;
}

} // namespace

bool is_k_blocking(const geom::Space& space, const PointSet& B, int k)
{
    check(space, B, k);
    return blocks(space, B, k);
}

std::vector<std::size_t> tangent_spaces(const geom::Space& space, const PointSet& B, int k, std::size_t P)
{
    check(space, B, k);
    if (P >= B.size() || !B.test(P))
        throw Error(Errc::PointNotInSet, "tangent spaces are taken at points of B");
    std::vector<std::size_t> out;
    const auto& level = space.subspace_points(space.n() - k);
    for (std::size_t i = 0; i < level.size(); ++i)
        if (level[i].test(P) && level[i].intersection_count(B) == 1)
            out.push_back(i);
    return out;
}

PointSet essential_points(const geom::Space& space, const PointSet& B, int k)
{
    check(space, B, k);
    if (!blocks(space, B, k))
        throw Error(Errc::NotBlocking, "point set is not k-blocking");
    return essential_unchecked(space, B, k);
}

bool is_minimal(const geom::Space& space, const PointSet& B, int k)
{
    return essential_points(space, B, k) == B;
}

std::size_t uniqueness_bound(const geom::Space& space)
{
    const auto q = static_cast<std::uint64_t>(space.q());
    std::uint64_t qn1 = 1;
    for (int i = 0; i < space.n() - 1; ++i)
        qn1 *= q;
    return static_cast<std::size_t>(qn1 + geom::theta(space.n() - 1, q));
}

Reduction reduce_to_minimal(const geom::Space& space, const PointSet& B, int k, std::mt19937_64* rng)
{
    check(space, B, k);
    if (!blocks(space, B, k))
        throw Error(Errc::NotBlocking, "point set is not k-blocking");
    Reduction out;
    out.set = B;
    out.uniqueness_guaranteed = B.count() < uniqueness_bound(space);
    for (;;) {
        // A subset of a blocking set stays blocking exactly when the removed
        // point was not essential, so no re-check of the blocking property.
        const auto spare = (out.set - essential_unchecked(space, out.set, k)).indices();
        if (spare.empty())
            break;
        std::size_t pick = spare.front();
        if (rng != nullptr)
            pick = spare[std::uniform_int_distribution<std::size_t>(0, spare.size() - 1)(*rng)];
        out.set.reset(pick);
        out.removed.push_back(pick);
    }
    return out;
}

Reduction reduce_to_minimal(const geom::Space& space, const PointSet& B)
{
    return reduce_to_minimal(space, B, space.n() - 1);
}

PointSet symmetric_difference(const geom::Space& space, std::size_t h1, std::size_t h2)
{
    const auto nh = space.hyperplanes().size();
    if (h1 >= nh || h2 >= nh)
        throw Error(Errc::GeometryMismatch, "hyperplane index out of range");
    if (h1 == h2)
        throw Error(Errc::EqualHyperplanes, "symmetric difference needs two distinct hyperplanes");
    return space.hyperplane_points(h1) ^ space.hyperplane_points(h2);
}

} // namespace pgcodes::blocking
