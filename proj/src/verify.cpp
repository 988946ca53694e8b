#include "pgcodes/verify.hpp"

#include "pgcodes/analysis.hpp"
#include "pgcodes/blocking.hpp"
#include "pgcodes/code.hpp"
#include "pgcodes/error.hpp"
#include "pgcodes/search.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <memory>
#include <random>
#include <set>
#include <sstream>

namespace pgcodes::verify {

using json = nlohmann::ordered_json;

std::string_view status_name(Status s) noexcept
{
    switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Skipped: return "skipped";
    case Status::EvidenceOnly: return "evidence-only";
    }
    return "fail";
}

std::string_view mode_name(Mode m) noexcept { return m == Mode::Exhaustive ? "exhaustive" : "search"; }

std::vector<Params> default_grid()
{
    return {{2, 1, 2}, {3, 1, 2}, {2, 2, 2}, {2, 3, 2}, {2, 1, 3}, {3, 1, 3}, {2, 2, 3}, {2, 1, 4}};
}

bool Report::passed() const
{
    return std::none_of(checks.begin(), checks.end(), [](const Check& c) { return c.status == Status::Fail; });
}

const Check* Report::find(std::string_view suite, std::string_view name) const
{
    for (const auto& c : checks)
        if (c.suite == suite && c.name == name)
            return &c;
    return nullptr;
}

std::uint64_t stream_id(std::string_view name) noexcept
{
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : name) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

namespace {

constexpr std::size_t kMaxWitnesses = 10;

template <class... Args>
std::string cat(const Args&... args)
{
    std::ostringstream os;
    (os << ... << args);
    return os.str();
}

json word_json(const Word& w)
{
    return json{{"word", w.digits()}, {"weight", w.weight()}};
}

json subspace_json(const geom::Subspace& S)
{
    json rows = json::array();
    for (const auto& r : S.basis()) {
        json row = json::array();
        for (auto x : r)
            row.push_back(x);
        rows.push_back(std::move(row));
    }
    return json{{"dim", S.dim()}, {"basis", std::move(rows)}};
}

class Runner {
public:
    Runner(const Params& params, const Options& opts) : params_(params), opts_(opts) {}

    Report run(const std::vector<std::string>& suites);

private:
    std::mt19937_64 stream(std::string_view name) const
    {
        return std::mt19937_64(search::mix_seed(opts_.seed ^ stream_id(name)));
    }

    Check& add(std::string suite, std::string name)
    {
        report_.checks.push_back(Check{std::move(suite), std::move(name), Status::Pass, {}, json::array()});
        return report_.checks.back();
    }

    static void fail(Check& c, json witness)
    {
        c.status = Status::Fail;
        if (c.witnesses.size() < kMaxWitnesses)
            c.witnesses.push_back(std::move(witness));
    }

    Word random_codeword(std::mt19937_64& rng) const
    {
        const auto& basis = model_->generator_basis();
        Word w(params_.p, model_->length());
        std::uniform_int_distribution<int> digit(0, params_.p - 1);
        for (const auto& b : basis)
            if (int d = digit(rng); d != 0)
                w += b.scaled(d);
        return w;
    }

    void prepare();
    // Words with 1 <= weight <= 2q^{n-1} known to be in C: every such word in
    // exhaustive mode, the search's finds otherwise.
    const std::vector<Word>& small_words();

    void suite_dimension();
    void suite_minweight();
    void suite_gap();
    void suite_second();
    void suite_hull();
    void suite_properties();
    void suite_restriction();
    void suite_bbw();
    void suite_blocking();

    Params params_;
    Options opts_;
    Report report_;
    std::shared_ptr<const geom::Space> space_;
    std::optional<code::CodeModel> model_;
    std::uint64_t theta1_ = 0; // theta_{n-1}
    std::uint64_t second_ = 0; // 2 q^{n-1}
    std::optional<std::vector<Word>> small_;
    std::uint64_t search_iterations_used_ = 0;
};

void Runner::prepare()
{
    auto field = gf::make_field(params_.p, params_.h);
    auto spec = geom::make_geometry(field, params_.n);
    space_ = std::make_shared<const geom::Space>(spec);

    const auto q = static_cast<std::uint64_t>(space_->q());
    report_.params = params_;
    report_.q = q;
    report_.theta_n = geom::theta(params_.n, q);
    report_.modulus = field.modulus();
    report_.expected_dimension = code::expected_dimension(params_.p, params_.h, params_.n);
    report_.seed = opts_.seed;
    report_.budget = opts_.budget;
    theta1_ = geom::theta(params_.n - 1, q);
    std::uint64_t qn1 = 1;
    for (int i = 0; i < params_.n - 1; ++i)
        qn1 *= q;
    second_ = 2 * qn1;

    try {
        model_ = code::CodeModel::build(space_);
    } catch (const Error& e) {
        if (e.code() != Errc::DimensionMismatch)
            throw;
    }
    if (model_) {
        report_.dimension = model_->dimension();
        report_.hull_dimension = model_->hull_basis().size();
        const auto msgs = spectrum::message_count(params_.p, model_->dimension());
        if (msgs <= opts_.budget) {
            report_.mode = Mode::Exhaustive;
        } else if (opts_.allow_search) {
            report_.mode = Mode::Search;
        } else {
            throw Error(Errc::InfeasibleParams, cat(params_.p, "^", model_->dimension(),
                                                    " messages exceed the exhaustive budget of ", opts_.budget));
        }
    }
}

const std::vector<Word>& Runner::small_words()
{
    if (small_)
        return *small_;
    if (report_.mode == Mode::Exhaustive) {
        spectrum::Options so;
        so.budget = opts_.budget;
        so.collect_max_weight = second_;
        so.threads = opts_.threads;
        auto res = spectrum::enumerate_spectrum(*model_, so);
        report_.spectrum = res.report;
        small_ = std::move(res.low_weight);
    } else {
        auto rng = stream("search");
        search::Options so;
        so.max_weight = second_;
        so.iterations = opts_.search_iterations;
        so.seed = rng();
        so.threads = opts_.threads;
        auto res = search::low_weight_search(*model_, so);
        search_iterations_used_ = res.iterations;
        small_ = std::move(res.words);
    }
    return *small_;
}

void Runner::suite_dimension()
{
    auto& c = add("dimension", "p-rank");
    const auto rank = code::p_rank(code::build_incidence_matrix(*space_));
    c.details = cat("p-rank ", rank, ", formula ", report_.expected_dimension);
    if (rank != report_.expected_dimension)
        fail(c, json{{"rank", rank}, {"expected", report_.expected_dimension}});
}

void Runner::suite_minweight()
{
    auto& c = add("minweight", "minimum weight");
    const auto& words = small_words();
    const auto n1 = params_.n - 1;
    if (report_.mode == Mode::Exhaustive) {
        const auto& sp = *report_.spectrum;
        const auto mw = sp.min_nonzero_weight();
        const auto cnt = sp.count(theta1_);
        const auto expected_cnt = static_cast<std::uint64_t>(params_.p - 1) * report_.theta_n;
        std::size_t hm = 0;
        for (const auto& w : words)
            if (w.weight() == theta1_) {
                if (analysis::classify_word(*model_, w).kind == analysis::WordKind::HyperplaneMultiple)
                    ++hm;
                else
                    fail(c, word_json(w));
            }
        if (mw != theta1_)
            fail(c, json{{"minimum_weight", mw}, {"theta", theta1_}});
        if (cnt != expected_cnt)
            fail(c, json{{"count", cnt}, {"expected", expected_cnt}});
        c.details = cat("minimum weight: ", mw, mw == theta1_ ? " = " : " != ", "theta_", n1, "; ", cnt,
                        " words, ", hm, " hyperplane multiples");
        return;
    }
    std::size_t below = 0;
    std::size_t at = 0;
    std::size_t hm = 0;
    std::size_t found_min = 0;
    for (const auto& w : words) {
        const auto wt = w.weight();
        if (found_min == 0 || wt < found_min)
            found_min = wt;
        if (wt < theta1_) {
            ++below;
            fail(c, word_json(w));
        } else if (wt == theta1_) {
            ++at;
            if (analysis::classify_word(*model_, w).kind == analysis::WordKind::HyperplaneMultiple)
                ++hm;
            else
                fail(c, word_json(w));
        }
    }
    if (c.status != Status::Fail)
        c.status = Status::EvidenceOnly;
    c.details = cat("search evidence: smallest weight found ", found_min, ", theta_", n1, " = ", theta1_, "; ", at,
                    " words of weight theta_", n1, " found, ", hm, " hyperplane multiples, ", below, " below");
}

void Runner::suite_gap()
{
    auto& c = add("gap", "no weights in ]theta_{n-1}, 2q^{n-1}[");
    const auto& words = small_words();
    std::uint64_t inside = 0;
    if (report_.mode == Mode::Exhaustive) {
        for (const auto& [w, cnt] : report_.spectrum->distribution)
            if (w > theta1_ && w < second_) {
                inside += cnt;
                fail(c, json{{"weight", w}, {"count", cnt}});
            }
        c.details = cat(inside, " words with weight in ]", theta1_, ", ", second_, "[");
        return;
    }
    for (const auto& w : words)
        if (w.weight() > theta1_ && w.weight() < second_) {
            ++inside;
            fail(c, word_json(w));
        }
    if (c.status != Status::Fail)
        c.status = Status::EvidenceOnly;
    c.details = cat("search evidence: ", inside, " words found with weight in ]", theta1_, ", ", second_, "[");
}

void Runner::suite_second()
{
    // add() may reallocate, so checks are addressed by position.
    add("second", "weight 2q^{n-1} words are hyperplane differences");
    add("second", "weight 2q^{n-1} words lie in the hull");
    const std::size_t ic = report_.checks.size() - 2;
    const std::size_t ih = report_.checks.size() - 1;
    const auto& words = small_words();
    std::size_t total = 0;
    std::size_t hd = 0;
    std::size_t in_hull = 0;
    for (const auto& w : words) {
        if (w.weight() != second_)
            continue;
        ++total;
        if (analysis::classify_word(*model_, w).kind == analysis::WordKind::HyperplaneDifference)
            ++hd;
        else
            fail(report_.checks[ic], word_json(w));
        if (model_->hull_contains(w))
            ++in_hull;
        else
            fail(report_.checks[ih], word_json(w));
    }
    const bool search = report_.mode == Mode::Search;
    const std::string prefix = search ? "search evidence: " : "";
    for (auto i : {ic, ih})
        if (search && report_.checks[i].status != Status::Fail)
            report_.checks[i].status = Status::EvidenceOnly;
    report_.checks[ic].details = cat(prefix, total, " words of weight ", second_, ", ", hd, " hyperplane differences");
    report_.checks[ih].details = cat(prefix, total, " words of weight ", second_, ", ", in_hull, " in the hull");
}

void Runner::suite_hull()
{
    auto& c = add("hull", "hull minimum weight");
    const auto& hb = model_->hull_basis();
    const auto msgs = spectrum::message_count(params_.p, hb.size());
    if (msgs <= opts_.budget) {
        spectrum::Options so;
        so.budget = opts_.budget;
        so.threads = opts_.threads;
        const auto res = spectrum::enumerate(hb, params_.p, model_->length(), so);
        const auto mw = res.report.min_nonzero_weight();
        c.details = cat("hull dimension ", hb.size(), ", minimum weight ", mw, ", 2q^{n-1} = ", second_,
                        ", exhaustive over ", res.report.messages, " words");
        if (mw != second_)
            fail(c, json{{"minimum_weight", mw}, {"expected", second_}});
        return;
    }
    if (!opts_.allow_search)
        throw Error(Errc::InfeasibleParams, "hull enumeration exceeds the budget");
    auto rng = stream("hull");
    search::Options so;
    so.max_weight = second_;
    so.iterations = opts_.search_iterations;
    so.seed = rng();
    so.threads = opts_.threads;
    const auto res = search::low_weight_search(hb, params_.p, model_->length(), so);
    std::size_t found_min = 0;
    for (const auto& w : res.words) {
        if (found_min == 0 || w.weight() < found_min)
            found_min = w.weight();
        if (w.weight() < second_)
            fail(c, word_json(w));
    }
    if (c.status != Status::Fail)
        c.status = Status::EvidenceOnly;
    c.details = cat("search evidence: hull dimension ", hb.size(), ", smallest weight found ", found_min,
                    ", 2q^{n-1} = ", second_, ", ", res.words.size(), " words found");
}

void Runner::suite_properties()
{
    // Every subspace of dimension >= 1, the whole space included.
    std::vector<Word> vecs;
    std::vector<geom::Subspace> subs;
    for (int d = 1; d <= params_.n - 1; ++d) {
        const auto& lvl = space_->subspaces(d);
        const auto& bits = space_->subspace_points(d);
        for (std::size_t i = 0; i < lvl.size(); ++i) {
            vecs.push_back(code::incidence_vector(*space_, bits[i]));
            subs.push_back(lvl[i]);
        }
    }
    vecs.push_back(model_->all_one());
    {
        std::vector<geom::Vec> id;
        for (int i = 0; i <= params_.n; ++i) {
            geom::Vec r(static_cast<std::size_t>(params_.n + 1), 0);
            r[static_cast<std::size_t>(i)] = 1;
            id.push_back(std::move(r));
        }
        subs.push_back(geom::Subspace::from_rows(space_->field(), std::move(id), params_.n + 1));
    }

    auto& c1 = add("properties", "differences of subspace vectors lie in the dual");
    std::size_t pairs = 0;
    for (std::size_t i = 0; i < vecs.size(); ++i)
        for (std::size_t j = i + 1; j < vecs.size(); ++j) {
            ++pairs;
            if (!model_->dual_contains(vecs[i] - vecs[j]))
                fail(report_.checks.back(), json{{"u1", subspace_json(subs[i])}, {"u2", subspace_json(subs[j])}});
        }
    c1.details = cat(pairs, " pairs over ", vecs.size(), " subspaces");

    std::vector<Word> sample = model_->generator_basis();
    sample.push_back(model_->all_one());
    auto rng = stream("properties");
    for (std::size_t i = 0; i < opts_.property_samples; ++i)
        sample.push_back(random_codeword(rng));

    add("properties", "inner product with subspace vectors is constant");
    const std::size_t i2 = report_.checks.size() - 1;
    add("properties", "hull membership iff the constant is zero");
    const std::size_t i3 = report_.checks.size() - 1;
    std::size_t in_hull = 0;
    for (const auto& w : sample) {
        const int c0 = inner_product(w, vecs.front());
        bool constant = true;
        for (std::size_t u = 1; u < vecs.size() && constant; ++u)
            if (inner_product(w, vecs[u]) != c0) {
                constant = false;
                fail(report_.checks[i2], json{{"word", w.digits()}, {"u", subspace_json(subs[u])}});
            }
        const bool hull = model_->hull_contains(w);
        in_hull += hull;
        if (constant && hull != (c0 == 0))
            fail(report_.checks[i3], json{{"word", w.digits()}, {"constant", c0}, {"in_hull", hull}});
    }
    report_.checks[i2].details =
        cat(sample.size(), " codewords (generator rows, j, random) against ", vecs.size(), " subspaces");
    report_.checks[i3].details = cat(sample.size(), " codewords, ", in_hull, " in the hull");
}

void Runner::suite_restriction()
{
    add("restriction", "restriction closure and support identity");
    const std::size_t ic = report_.checks.size() - 1;

    std::vector<geom::Subspace> subs;
    for (int d = 2; d <= params_.n - 1; ++d)
        for (const auto& S : space_->subspaces(d))
            subs.push_back(S);
    {
        std::vector<geom::Vec> id;
        for (int i = 0; i <= params_.n; ++i) {
            geom::Vec r(static_cast<std::size_t>(params_.n + 1), 0);
            r[static_cast<std::size_t>(i)] = 1;
            id.push_back(std::move(r));
        }
        subs.push_back(geom::Subspace::from_rows(space_->field(), std::move(id), params_.n + 1));
    }

    std::map<int, code::CodeModel> local;
    auto local_model = [&](int d) -> const code::CodeModel& {
        if (d == params_.n)
            return *model_;
        auto it = local.find(d);
        if (it == local.end())
            it = local.emplace(d, code::CodeModel::build(geom::make_geometry(space_->field(), d))).first;
        return it->second;
    };

    std::size_t checked = 0;
    auto one = [&](const Word& w, const geom::Subspace& S) {
        ++checked;
        const auto r = analysis::check_restriction(*model_, local_model(S.dim()), w, S);
        if (!r.in_local_code || !r.support_identity)
            fail(report_.checks[ic], json{{"word", w.digits()},
                                          {"subspace", subspace_json(S)},
                                          {"restricted", r.restricted.digits()},
                                          {"in_local_code", r.in_local_code},
                                          {"support_identity", r.support_identity}});
    };

    const auto msgs = spectrum::message_count(params_.p, model_->dimension());
    const bool exhaustive = msgs <= (std::uint64_t{1} << 12) && msgs * subs.size() <= (std::uint64_t{1} << 14);
    if (exhaustive) {
        spectrum::for_each_codeword(model_->generator_basis(), params_.p, model_->length(), msgs,
                                    [&](const Word& w) {
                                        for (const auto& S : subs)
                                            one(w, S);
                                    });
        report_.checks[ic].details =
            cat("exhaustive: ", msgs, " codewords x ", subs.size(), " subspaces of dimension 2..", params_.n);
        return;
    }
    auto rng = stream("restriction");
    std::uniform_int_distribution<std::size_t> pick(0, subs.size() - 1);
    for (std::size_t i = 0; i < opts_.restriction_samples; ++i) {
        const auto w = random_codeword(rng);
        one(w, subs[pick(rng)]);
    }
    report_.checks[ic].details =
        cat("sampled: ", checked, " random (codeword, subspace) pairs, subspaces of dimension 2..", params_.n);
}

void Runner::suite_bbw()
{
    auto& c = add("bbw", "tangent points through an external point are collinear");
    if (params_.n != 2) {
        c.status = Status::Skipped;
        c.details = "planar statement; n != 2";
        return;
    }
    const auto msgs = spectrum::message_count(params_.p, model_->dimension());
    if (report_.mode != Mode::Exhaustive || msgs > opts_.bbw_budget) {
        c.status = Status::Skipped;
        c.details = cat(params_.p, "^", model_->dimension(), " codewords exceed the tangent-check budget of ",
                        opts_.bbw_budget);
        return;
    }
    const std::size_t ic = report_.checks.size() - 1;
    std::size_t sets = 0;
    std::size_t pairs = 0;
    spectrum::for_each_codeword(model_->generator_basis(), params_.p, model_->length(), msgs, [&](const Word& w) {
        for (auto e : w.entries())
            if (e > 1)
                return;
        ++sets;
        const auto X = analysis::support_bits(w);
        for (std::size_t Q = 0; Q < X.size(); ++Q) {
            if (X.test(Q))
                continue;
            ++pairs;
            const auto r = analysis::tangent_collinearity(*model_, X, Q);
            if (!r.collinear) {
                json tp = json::array();
                for (auto t : r.tangent_points)
                    tp.push_back(t);
                fail(report_.checks[ic], json{{"word", w.digits()}, {"q_index", Q}, {"tangent_points", tp}});
            }
        }
    });
    report_.checks[ic].details = cat(sets, " incidence-vector codewords, ", pairs, " (X, Q) pairs");
}

void Runner::suite_blocking()
{
    add("blocking", "small words: constant entries, minimal blocking support, lines 1 mod p");
    const std::size_t i1 = report_.checks.size() - 1;
    const int k = params_.n - 1;
    std::size_t small = 0;
    for (const auto& w : small_words()) {
        if (w.weight() >= second_)
            continue;
        ++small;
        std::set<int> values;
        for (auto i : w.support())
            values.insert(w[i]);
        const auto B = analysis::support_bits(w);
        const bool blocking = blocking::is_k_blocking(*space_, B, k);
        const bool minimal = blocking && blocking::is_minimal(*space_, B, k);
        const bool lines = analysis::line_profile(*space_, w).all_residues_equal(1);
        if (values.size() != 1 || !minimal || !lines)
            fail(report_.checks[i1], json{{"word", w.digits()},
                                          {"constant", values.size() == 1},
                                          {"minimal_blocking", minimal},
                                          {"lines_one_mod_p", lines}});
    }
    report_.checks[i1].details =
        cat(small, " words with 0 < weight < ", second_, report_.mode == Mode::Search ? " found by search" : "");

    add("blocking", "reduction to a minimal blocking set is order independent");
    const std::size_t i2 = report_.checks.size() - 1;
    auto rng = stream("blocking");
    const auto bound = blocking::uniqueness_bound(*space_);
    const auto nh = space_->hyperplanes().size();
    const auto room = bound - 1 - static_cast<std::size_t>(theta1_);
    std::size_t trials = 0;
    for (std::size_t t = 0; t < opts_.reduction_trials; ++t) {
        const std::size_t h = std::uniform_int_distribution<std::size_t>(0, nh - 1)(rng);
        auto B = space_->hyperplane_points(h);
        const std::size_t extra = std::uniform_int_distribution<std::size_t>(1, room)(rng);
        auto outside = B.complement().indices();
        std::shuffle(outside.begin(), outside.end(), rng);
        for (std::size_t i = 0; i < extra && i < outside.size(); ++i)
            B.set(outside[i]);
        const auto base = blocking::reduce_to_minimal(*space_, B, k);
        ++trials;
        for (std::size_t o = 0; o < opts_.reduction_orders; ++o) {
            const auto r = blocking::reduce_to_minimal(*space_, B, k, &rng);
            if (!(r.set == base.set)) {
                json a = json::array();
                json b = json::array();
                for (auto i : base.set.indices())
                    a.push_back(i);
                for (auto i : r.set.indices())
                    b.push_back(i);
                json in = json::array();
                for (auto i : B.indices())
                    in.push_back(i);
                fail(report_.checks[i2], json{{"input", in}, {"deterministic", a}, {"randomized", b}});
                break;
            }
        }
    }
    report_.checks[i2].details = cat(trials, " hyperplane supersets below size ", bound, ", ",
                                     opts_.reduction_orders, " random removal orders each");
}

Report Runner::run(const std::vector<std::string>& suites)
{
    for (const auto& s : suites)
        if (std::find(all_suites().begin(), all_suites().end(), s) == all_suites().end())
            throw Error(Errc::InvalidArgument, "unknown suite '" + s + "'");
    prepare();
    if (opts_.record_timing)
        report_.timing.emplace();

    const std::map<std::string, std::function<void()>> table{
        {"dimension", [&] { suite_dimension(); }},   {"minweight", [&] { suite_minweight(); }},
        {"gap", [&] { suite_gap(); }},               {"second", [&] { suite_second(); }},
        {"hull", [&] { suite_hull(); }},             {"properties", [&] { suite_properties(); }},
        {"restriction", [&] { suite_restriction(); }}, {"bbw", [&] { suite_bbw(); }},
        {"blocking", [&] { suite_blocking(); }},
    };
    for (const auto& s : suites) {
        const auto t0 = std::chrono::steady_clock::now();
        if (!model_ && s != "dimension") {
            auto& c = add(s, s);
            c.status = Status::Skipped;
            c.details = "code construction failed the dimension check";
        } else {
            table.at(s)();
        }
        if (report_.timing)
            (*report_.timing)[s] +=
                std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    }
    return std::move(report_);
}

} // namespace

Report run_suite(const Params& params, const std::vector<std::string>& suites, const Options& opts)
{
    if (params.h < 1)
        throw Error(Errc::DegreeMismatch, "extension degree must be >= 1");
    if (params.n < 2)
        throw Error(Errc::DimensionOutOfRange, "projective dimension must be >= 2");
    Runner r(params, opts);
    return r.run(suites);
}

} // namespace pgcodes::verify
