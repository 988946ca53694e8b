#include "pgcodes/cli.hpp"

#include "pgcodes/blocking.hpp"
#include "pgcodes/code.hpp"
#include "pgcodes/error.hpp"
#include "pgcodes/pointset_io.hpp"
#include "pgcodes/report.hpp"
#include "pgcodes/search.hpp"
#include "pgcodes/spectrum.hpp"
#include "pgcodes/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <memory>
#include <random>
#include <sstream>

namespace pgcodes::cli {

using json = nlohmann::ordered_json;

namespace {

struct Globals {
    std::string format = "table";
    std::string out;
    std::uint64_t seed = 0;
};

struct GeomArgs {
    int p = 0;
    int h = 1;
    int n = 0;
};

void add_geometry_options(CLI::App* app, GeomArgs& g)
{
    app->add_option("--p", g.p, "characteristic (prime)")->required();
    app->add_option("--h", g.h, "extension degree, q = p^h")->capture_default_str();
    app->add_option("--n", g.n, "projective dimension (>= 2)")->required();
}

std::shared_ptr<const geom::Space> make_space(const GeomArgs& g)
{
    return std::make_shared<const geom::Space>(geom::make_geometry(gf::make_field(g.p, g.h), g.n));
}

int exit_code_for(Errc c)
{
    switch (c) {
    case Errc::BudgetExceeded:
    case Errc::InfeasibleParams:
        return kInfeasible;
    case Errc::DimensionMismatch:
        return kCheckFailed;
    default:
        return kUsage;
    }
}

std::vector<std::string> split_list(const std::string& s)
{
    std::vector<std::string> out;
    std::istringstream in(s);
    std::string item;
    while (std::getline(in, item, ','))
        if (!item.empty())
            out.push_back(item);
    return out;
}

std::string geometry_info(const GeomArgs& g, report::Format f)
{
    const auto field = gf::make_field(g.p, g.h);
    const auto spec = geom::make_geometry(field, g.n);
    const auto q = static_cast<std::uint64_t>(spec.q());
    std::ostringstream os;
    if (f == report::Format::Json) {
        json theta = json::object();
        json counts = json::object();
        for (int m = 0; m <= g.n; ++m)
            theta[std::to_string(m)] = geom::theta(m, q);
        for (int d = 0; d <= g.n - 1; ++d)
            counts[std::to_string(d)] = geom::gaussian_binomial(g.n + 1, d + 1, q);
        json j{{"p", g.p},
               {"h", g.h},
               {"n", g.n},
               {"q", q},
               {"modulus", field.modulus()},
               {"theta", std::move(theta)},
               {"subspaces", std::move(counts)}};
        os << j.dump(2) << '\n';
    } else if (f == report::Format::Csv) {
        os << "quantity,dimension,value\n";
        for (int m = 0; m <= g.n; ++m)
            os << "theta," << m << ',' << geom::theta(m, q) << '\n';
        for (int d = 0; d <= g.n - 1; ++d)
            os << "subspaces," << d << ',' << geom::gaussian_binomial(g.n + 1, d + 1, q) << '\n';
    } else {
        os << "PG(" << g.n << "," << q << "), p=" << g.p << " h=" << g.h << ", modulus";
        for (auto c : field.modulus())
            os << ' ' << c;
        os << '\n';
        for (int m = g.n; m >= 0; --m)
            os << "theta_" << m << " = " << geom::theta(m, q) << '\n';
        for (int d = 0; d <= g.n - 1; ++d)
            os << "subspaces of dimension " << d << ": " << geom::gaussian_binomial(g.n + 1, d + 1, q) << '\n';
    }
    return os.str();
}

std::string code_build(const code::CodeModel& m, report::Format f)
{
    const auto& s = m.space();
    const auto expected = code::expected_dimension(s.p(), s.field().h(), s.n());
    std::ostringstream os;
    if (f == report::Format::Json) {
        json j{{"p", s.p()},
               {"h", s.field().h()},
               {"n", s.n()},
               {"length", m.length()},
               {"dimension", m.dimension()},
               {"expected_dimension", expected},
               {"dual_dimension", m.check_basis().size()},
               {"hull_dimension", m.hull_basis().size()}};
        os << j.dump(2) << '\n';
    } else if (f == report::Format::Csv) {
        os << "length,dimension,expected_dimension,dual_dimension,hull_dimension\n"
           << m.length() << ',' << m.dimension() << ',' << expected << ',' << m.check_basis().size() << ','
           << m.hull_basis().size() << '\n';
    } else {
        os << "length " << m.length() << '\n'
           << "dimension " << m.dimension() << " (formula " << expected << ")\n"
           << "dual dimension " << m.check_basis().size() << '\n'
           << "hull dimension " << m.hull_basis().size() << '\n';
    }
    return os.str();
}

std::string code_export(const geom::Space& s, report::Format f)
{
    const auto A = code::build_incidence_matrix(s);
    std::ostringstream os;
    const std::string header = "# p=" + std::to_string(s.p()) + " h=" + std::to_string(s.field().h()) +
                               " n=" + std::to_string(s.n()) + " theta_n=" + std::to_string(s.num_points());
    if (f == report::Format::Json) {
        json points = json::array();
        for (std::size_t i = 0; i < s.num_points(); ++i)
            points.push_back(io::format_point(s, i));
        json hyper = json::array();
        for (const auto& H : s.hyperplanes()) {
            json d = json::array();
            for (auto x : H.dual)
                d.push_back(x);
            hyper.push_back(std::move(d));
        }
        json rows = json::array();
        for (std::size_t r = 0; r < A.rows(); ++r)
            rows.push_back(A.row_word(r).digits());
        json j{{"p", s.p()},         {"h", s.field().h()},       {"n", s.n()},       {"theta_n", s.num_points()},
               {"points", points}, {"hyperplanes", hyper}, {"rows", rows}};
        os << j.dump(2) << '\n';
        return os.str();
    }
    os << header << '\n';
    for (std::size_t r = 0; r < A.rows(); ++r) {
        const auto d = A.row_word(r).digits();
        if (f == report::Format::Csv) {
            for (std::size_t i = 0; i < d.size(); ++i) {
                if (i != 0)
                    os << ',';
                os << d[i];
            }
            os << '\n';
        } else {
            os << d << '\n';
        }
    }
    return os.str();
}

class Output {
public:
    Output(const Globals& g, std::ostream& out) : path_(g.out), out_(out) {}
    void write(const std::string& s)
    {
        if (path_.empty()) {
            out_ << s;
            return;
        }
        std::ofstream f(path_, std::ios::binary);
        if (!f)
            throw Error(Errc::InvalidArgument, "cannot open '" + path_ + "' for writing");
        f << s;
    }

private:
    std::string path_;
    std::ostream& out_;
};

} // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Incidence codes of projective spaces: construction, spectra and structural checks", "pgcodes"};
    // -h would clash with the extension-degree option --h.
    app.set_help_flag("--help", "print this help and exit");
    app.require_subcommand(1);
    app.fallthrough();
    Globals glob;
    app.add_option("--format", glob.format, "json, csv or table")->capture_default_str();
    app.add_option("--out", glob.out, "write output to this file");
    app.add_option("--seed", glob.seed, "seed for every random stream")->capture_default_str();

    GeomArgs g;

    auto* geometry = app.add_subcommand("geometry", "projective space facts");
    geometry->require_subcommand(1);
    auto* ginfo = geometry->add_subcommand("info", "theta values and subspace counts");
    add_geometry_options(ginfo, g);

    auto* codecmd = app.add_subcommand("code", "the incidence code");
    codecmd->require_subcommand(1);
    auto* cbuild = codecmd->add_subcommand("build", "construct the code and report its dimensions");
    auto* crank = codecmd->add_subcommand("rank", "p-rank of the incidence matrix against the formula");
    auto* cexport = codecmd->add_subcommand("export", "incidence matrix (text for --format table)");
    auto* cspec = codecmd->add_subcommand("spectrum", "weight distribution");
    for (auto* c : {cbuild, crank, cexport, cspec})
        add_geometry_options(c, g);
    std::uint64_t budget = spectrum::kDefaultBudget;
    bool use_search = false;
    std::size_t max_weight = 0;
    std::uint64_t iterations = 1000;
    int threads = 0;
    cspec->add_option("--budget", budget, "maximum number of messages to enumerate")->capture_default_str();
    cspec->add_flag("--search", use_search, "randomized low-weight search instead of failing past the budget");
    cspec->add_option("--max-weight", max_weight, "search: largest weight kept (default 2q^{n-1})");
    cspec->add_option("--iterations", iterations, "search: information sets tried")->capture_default_str();
    cspec->add_option("--threads", threads, "worker threads (0 = default)");

    auto* verifycmd = app.add_subcommand("verify", "run check suites");
    add_geometry_options(verifycmd, g);
    std::string suites;
    bool all = false;
    bool exhaustive_only = false;
    bool timing = false;
    verify::Options vopts;
    verifycmd->add_option("--suites", suites, "comma-separated suites");
    verifycmd->add_flag("--all", all, "every suite");
    verifycmd->add_option("--budget", vopts.budget, "maximum messages for exhaustive mode")->capture_default_str();
    verifycmd->add_option("--iterations", vopts.search_iterations, "search iterations when beyond the budget")
        ->capture_default_str();
    verifycmd->add_flag("--exhaustive-only", exhaustive_only, "fail with exit 3 instead of falling back to search");
    verifycmd->add_flag("--timing", timing, "include per-suite timings");
    verifycmd->add_option("--threads", vopts.threads, "worker threads (0 = default)");

    auto* blockcmd = app.add_subcommand("blocking", "blocking sets");
    blockcmd->require_subcommand(1);
    auto* breduce = blockcmd->add_subcommand("reduce", "reduce a blocking set to a minimal one");
    add_geometry_options(breduce, g);
    std::string input;
    int k = 0;
    bool randomized = false;
    breduce->add_option("--input", input, "point-set file")->required();
    breduce->add_option("--k", k, "blocking index (default n-1)");
    breduce->add_flag("--random-order", randomized, "remove non-essential points in a seeded random order");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }

    try {
        const auto fmt = report::parse_format(glob.format);
        Output o(glob, out);

        if (*ginfo) {
            o.write(geometry_info(g, fmt));
            return kOk;
        }
        if (*crank) {
            const auto space = make_space(g);
            const auto rank = code::p_rank(code::build_incidence_matrix(*space));
            const auto formula = code::expected_dimension(g.p, g.h, g.n);
            std::ostringstream os;
            if (fmt == report::Format::Json)
                os << json{{"rank", rank}, {"formula", formula}, {"match", rank == formula}}.dump(2) << '\n';
            else if (fmt == report::Format::Csv)
                os << "rank,formula\n" << rank << ',' << formula << '\n';
            else
                os << "rank " << rank << '\n' << "formula " << formula << '\n';
            o.write(os.str());
            return rank == formula ? kOk : kCheckFailed;
        }
        if (*cexport) {
            o.write(code_export(*make_space(g), fmt));
            return kOk;
        }
        if (*cbuild) {
            o.write(code_build(code::CodeModel::build(make_space(g)), fmt));
            return kOk;
        }
        if (*cspec) {
            const auto model = code::CodeModel::build(make_space(g));
            const auto msgs = spectrum::message_count(g.p, model.dimension());
            if (msgs <= budget) {
                spectrum::Options so;
                so.budget = budget;
                so.threads = threads;
                o.write(report::emit_spectrum(spectrum::enumerate_spectrum(model, so).report, fmt));
                return kOk;
            }
            if (!use_search) {
                err << "error: " << g.p << "^" << model.dimension() << " messages exceed the budget of " << budget
                    << "; raise --budget or pass --search\n";
                return kInfeasible;
            }
            report::SearchSummary s;
            search::Options so;
            std::uint64_t qn1 = 1;
            for (int i = 0; i < g.n - 1; ++i)
                qn1 *= static_cast<std::uint64_t>(model.space().q());
            so.max_weight = max_weight != 0 ? max_weight : 2 * qn1;
            so.iterations = iterations;
            so.seed = glob.seed;
            so.threads = threads;
            s.result = search::low_weight_search(model, so);
            s.max_weight = so.max_weight;
            s.seed = glob.seed;
            s.dimension = model.dimension();
            s.length = model.length();
            o.write(report::emit_search(s, fmt));
            return kOk;
        }
        if (*verifycmd) {
            std::vector<std::string> list = all ? verify::all_suites() : split_list(suites);
            if (list.empty()) {
                err << "error: pass --suites <list> or --all\n";
                return kUsage;
            }
            vopts.seed = glob.seed;
            vopts.allow_search = !exhaustive_only;
            vopts.record_timing = timing;
            const auto r = verify::run_suite({g.p, g.h, g.n}, list, vopts);
            o.write(report::emit_report(r, fmt));
            return r.passed() ? kOk : kCheckFailed;
        }
        if (*breduce) {
            const auto space = make_space(g);
            std::ifstream in(input);
            if (!in) {
                err << "error: cannot read '" << input << "'\n";
                return kUsage;
            }
            const auto B = io::read_point_set(*space, in);
            const int kk = k == 0 ? g.n - 1 : k;
            std::mt19937_64 rng(search::mix_seed(glob.seed ^ verify::stream_id("blocking")));
            const auto r = blocking::reduce_to_minimal(*space, B, kk, randomized ? &rng : nullptr);
            std::ostringstream os;
            if (fmt == report::Format::Json) {
                json pts = json::array();
                for (auto i : r.set.indices())
                    pts.push_back(io::format_point(*space, i));
                json removed = json::array();
                for (auto i : r.removed)
                    removed.push_back(io::format_point(*space, i));
                os << json{{"input_size", B.count()},
                           {"size", r.set.count()},
                           {"uniqueness_guaranteed", r.uniqueness_guaranteed},
                           {"bound", blocking::uniqueness_bound(*space)},
                           {"points", pts},
                           {"removed", removed}}
                          .dump(2)
                   << '\n';
            } else if (fmt == report::Format::Csv) {
                os << "point\n";
                for (auto i : r.set.indices())
                    os << '"' << io::format_point(*space, i) << "\"\n";
            } else {
                os << "# input " << B.count() << " points, minimal " << r.set.count() << " points, "
                   << r.removed.size() << " removed\n";
                os << "# unique below " << blocking::uniqueness_bound(*space) << ": "
                   << (r.uniqueness_guaranteed ? "yes" : "not guaranteed") << '\n';
                os << io::write_point_set(*space, r.set);
            }
            o.write(os.str());
            return kOk;
        }
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return exit_code_for(e.code());
    }
    return kUsage;
}

} // namespace pgcodes::cli
