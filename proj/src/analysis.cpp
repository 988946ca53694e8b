#include "pgcodes/analysis.hpp"

#include "pgcodes/error.hpp"

#include <algorithm>
#include <set>

namespace pgcodes::analysis {

std::vector<std::size_t> support(const Word& w) { return w.support(); }

Bits support_bits(const Word& w)
{
    Bits b(w.size());
    for (std::size_t i = 0; i < w.size(); ++i)
        if (w[i] != 0)
            b.set(i);
    return b;
}

std::vector<geom::ProjPoint> support_points(const geom::Space& space, const Word& w)
{
    if (w.size() != space.num_points())
        throw Error(Errc::GeometryMismatch, "word length does not match the geometry");
    std::vector<geom::ProjPoint> out;
    for (auto i : w.support())
        out.push_back(space.points()[i]);
    return out;
}

std::vector<std::size_t> local_point_order(const geom::Space& ambient, const geom::Subspace& S)
{
    if (S.length() != static_cast<std::size_t>(ambient.n() + 1))
        throw Error(Errc::GeometryMismatch, "subspace belongs to a different geometry");
    if (S.empty())
        throw Error(Errc::EmptySubspace, "the empty subspace has no points");
    const auto& f = ambient.field();
    const auto& B = S.basis();
    std::vector<std::size_t> order;
    for (const auto& lam : geom::canonical_vectors(f, B.size())) {
        geom::Vec x(S.length(), 0);
        for (std::size_t r = 0; r < B.size(); ++r)
            if (lam[r] != 0)
                for (std::size_t c = 0; c < x.size(); ++c)
                    x[c] = f.add(x[c], f.mul(lam[r], B[r][c]));
        order.push_back(ambient.index_of(x));
    }
    return order;
}

Word restrict(const geom::Space& ambient, const Word& w, const geom::Subspace& S)
{
    if (w.size() != ambient.num_points())
        throw Error(Errc::GeometryMismatch, "word length does not match the geometry");
    const auto order = local_point_order(ambient, S);
    Word r(w.p(), order.size());
    for (std::size_t i = 0; i < order.size(); ++i)
        r.set(i, w[order[i]]);
    return r;
}

RestrictionCheck check_restriction(const code::CodeModel& ambient, const code::CodeModel& local, const Word& w,
                                   const geom::Subspace& S)
{
    if (S.dim() < 2)
        throw Error(Errc::DimensionTooLow, "restriction is a codeword only for subspaces of dimension >= 2");
    if (local.space().n() != S.dim() || !(local.space().field() == ambient.space().field()))
        throw Error(Errc::GeometryMismatch, "local code does not match the subspace");
    RestrictionCheck out;
    const auto order = local_point_order(ambient.space(), S);
    out.restricted = Word(w.p(), order.size());
    for (std::size_t i = 0; i < order.size(); ++i)
        out.restricted.set(i, w[order[i]]);
    out.in_local_code = local.contains(out.restricted);

    std::vector<std::size_t> mapped;
    for (std::size_t i = 0; i < order.size(); ++i)
        if (out.restricted[i] != 0)
            mapped.push_back(order[i]);
    std::sort(mapped.begin(), mapped.end());
    const auto on_s = ambient.space().point_bits(S);
    std::vector<std::size_t> expected;
    for (auto i : w.support())
        if (on_s.test(i))
            expected.push_back(i);
    out.support_identity = mapped == expected;
    return out;
}

LineProfile line_profile(const geom::Space& space, const Word& w)
{
    if (w.size() != space.num_points())
        throw Error(Errc::GeometryMismatch, "word length does not match the geometry");
    const auto s = support_bits(w);
    LineProfile prof;
    for (const auto& l : space.lines()) {
        const auto c = s.intersection_count(l);
        ++prof.residues[static_cast<int>(c % static_cast<std::size_t>(space.p()))];
        ++prof.intersection_sizes[c];
        prof.tangent_lines += c == 1;
        ++prof.lines;
    }
    return prof;
}

std::string_view kind_name(WordKind k) noexcept
{
    switch (k) {
    case WordKind::Zero: return "Zero";
    case WordKind::HyperplaneMultiple: return "HyperplaneMultiple";
    case WordKind::HyperplaneDifference: return "HyperplaneDifference";
    case WordKind::Other: return "Other";
    }
    return "Other";
}

std::string_view trace_name(TraceKind k) noexcept
{
    switch (k) {
    case TraceKind::Empty: return "Empty";
    case TraceKind::SymmetricDifference: return "SymmetricDifference";
    case TraceKind::AffineComplement: return "AffineComplement";
    case TraceKind::Other: return "Other";
    }
    return "Other";
}

WordClassification classify_word(const code::CodeModel& model, const Word& w)
{
    const auto& space = model.space();
    if (w.size() != space.num_points() || w.p() != space.p())
        throw Error(Errc::GeometryMismatch, "word does not belong to this geometry");
    WordClassification out;
    if (w.is_zero()) {
        out.kind = WordKind::Zero;
        return out;
    }
    const int p = w.p();
    const auto q = static_cast<std::uint64_t>(space.q());
    const int n = space.n();
    const auto supp = support_bits(w);
    const auto wt = supp.count();
    std::set<int> values;
    for (auto i : supp.indices())
        values.insert(w[i]);
    const std::size_t nh = space.hyperplanes().size();

    if (values.size() == 1 && wt == geom::theta(n - 1, q)) {
        for (std::size_t i = 0; i < nh; ++i)
            if (space.hyperplane_points(i) == supp) {
                out.kind = WordKind::HyperplaneMultiple;
                out.witness = WordWitness{*values.begin(), i, std::nullopt};
                return out;
            }
    }

    std::uint64_t qn1 = 1;
    for (int i = 0; i < n - 1; ++i)
        qn1 *= q;
    if (wt == 2 * qn1) {
        if (p == 2) {
            for (std::size_t i = 0; i < nh; ++i)
                for (std::size_t j = i + 1; j < nh; ++j)
                    if ((space.hyperplane_points(i) ^ space.hyperplane_points(j)) == supp) {
                        out.kind = WordKind::HyperplaneDifference;
                        out.witness = WordWitness{1, i, j};
                        return out;
                    }
        } else if (values.size() == 2) {
            const int a = *values.begin();
            const int b = *values.rbegin();
            if ((a + b) % p == 0) {
                Bits cls_a(w.size());
                Bits cls_b(w.size());
                for (auto i : supp.indices())
                    (w[i] == a ? cls_a : cls_b).set(i);
                std::vector<std::size_t> cand_a;
                std::vector<std::size_t> cand_b;
                for (std::size_t i = 0; i < nh; ++i) {
                    if (cls_a.is_subset_of(space.hyperplane_points(i)))
                        cand_a.push_back(i);
                    if (cls_b.is_subset_of(space.hyperplane_points(i)))
                        cand_b.push_back(i);
                }
                std::optional<WordWitness> best;
                for (auto ha : cand_a)
                    for (auto hb : cand_b) {
                        if (ha == hb)
                            continue;
                        const auto& A = space.hyperplane_points(ha);
                        const auto& B = space.hyperplane_points(hb);
                        if ((A - B) == cls_a && (B - A) == cls_b) {
                            // w = a (v^A - v^B) = (p - a) (v^B - v^A)
                            WordWitness cand = ha < hb ? WordWitness{a, ha, hb} : WordWitness{b, hb, ha};
                            if (!best || std::pair(cand.h1, *cand.h2) < std::pair(best->h1, *best->h2))
                                best = cand;
                        }
                    }
                if (best) {
                    out.kind = WordKind::HyperplaneDifference;
                    out.witness = best;
                    return out;
                }
            }
        }
    }
    out.kind = WordKind::Other;
    return out;
}

namespace {

struct LocalHyperplanes {
    std::vector<geom::Subspace> subspaces;
    std::vector<Bits> points;
};

LocalHyperplanes hyperplanes_of(const geom::Space& space, const Bits& s_points, int h)
{
    LocalHyperplanes out;
    if (h == 1) {
        for (auto i : s_points.indices()) {
            out.subspaces.push_back(geom::point_subspace(space.spec(), space.points()[i]));
            Bits b(space.num_points());
            b.set(i);
            out.points.push_back(std::move(b));
        }
        return out;
    }
    const auto& lvl = space.subspaces(h - 1);
    const auto& bits = space.subspace_points(h - 1);
    for (std::size_t i = 0; i < lvl.size(); ++i)
        if (bits[i].is_subset_of(s_points)) {
            out.subspaces.push_back(lvl[i]);
            out.points.push_back(bits[i]);
        }
    return out;
}

} // namespace

std::vector<SubspaceTrace> classify_subspace_traces(const geom::Space& space, const Bits& X, int h)
{
    if (h < 1 || h > space.n() - 1)
        throw Error(Errc::DimensionOutOfRange, "trace level must lie in [1, n-1]");
    if (X.size() != space.num_points())
        throw Error(Errc::GeometryMismatch, "point set belongs to a different geometry");
    const auto q = static_cast<std::uint64_t>(space.q());
    std::uint64_t qh1 = 1;
    for (int i = 0; i < h - 1; ++i)
        qh1 *= q;
    const auto sym_size = 2 * qh1;
    const auto hyp_size = geom::theta(h - 1, q);

    const auto& lvl = space.subspaces(h);
    const auto& bits = space.subspace_points(h);
    std::vector<SubspaceTrace> out;
    out.reserve(lvl.size());
    for (std::size_t s = 0; s < lvl.size(); ++s) {
        SubspaceTrace st{lvl[s], {}};
        const auto T = X & bits[s];
        const auto t = T.count();
        if (t == 0) {
            st.trace.kind = TraceKind::Empty;
            out.push_back(std::move(st));
            continue;
        }
        const auto hyps = hyperplanes_of(space, bits[s], h);
        if (t == sym_size) {
            for (std::size_t i = 0; i < hyps.points.size() && st.trace.kind == TraceKind::Other; ++i)
                for (std::size_t j = i + 1; j < hyps.points.size(); ++j)
                    if ((hyps.points[i] ^ hyps.points[j]) == T) {
                        st.trace.kind = TraceKind::SymmetricDifference;
                        st.trace.witnesses = {hyps.subspaces[i], hyps.subspaces[j]};
                        break;
                    }
        }
        if (st.trace.kind == TraceKind::Other) {
            const auto rest = bits[s] - T;
            if (rest.count() == hyp_size)
                for (std::size_t i = 0; i < hyps.points.size(); ++i)
                    if (hyps.points[i] == rest) {
                        st.trace.kind = TraceKind::AffineComplement;
                        st.trace.witnesses = {hyps.subspaces[i]};
                        break;
                    }
        }
        out.push_back(std::move(st));
    }
    return out;
}

bool trace_hypotheses_hold(const geom::Space& space, const Bits& X)
{
    for (int h = 1; h <= space.n() - 1; ++h)
        for (const auto& st : classify_subspace_traces(space, X, h))
            if (st.trace.kind == TraceKind::Other)
                return false;
    return true;
}

TangentResult tangent_collinearity(const code::CodeModel& model, const Bits& X, std::size_t Q)
{
    const auto& space = model.space();
    if (space.n() != 2)
        throw Error(Errc::DimensionOutOfRange, "tangent collinearity is a planar statement");
    if (X.size() != space.num_points() || Q >= space.num_points())
        throw Error(Errc::GeometryMismatch, "point set belongs to a different geometry");
    if (X.test(Q))
        throw Error(Errc::QInX, "Q must lie outside X");
    if (!model.contains(code::incidence_vector(space, X)))
        throw Error(Errc::NotInCode, "the incidence vector of X is not a codeword");

    TangentResult out;
    for (const auto& l : space.lines()) {
        if (!l.test(Q))
            continue;
        const auto meet = l & X;
        if (meet.count() == 1)
            out.tangent_points.push_back(meet.indices().front());
    }
    std::sort(out.tangent_points.begin(), out.tangent_points.end());
    if (out.tangent_points.size() >= 2) {
        auto S = space.span_of(out.tangent_points);
        out.collinear = S.dim() == 1;
        if (out.collinear)
            out.line = std::move(S);
    }
    return out;
}

} // namespace pgcodes::analysis
