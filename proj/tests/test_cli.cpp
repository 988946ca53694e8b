#include "pgcodes/cli.hpp"

#include <doctest.h>
#include <json.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <initializer_list>
#include <sstream>
#include <string>
#include <vector>

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::initializer_list<const char*> args)
{
    std::vector<const char*> argv{"pgcodes"};
    argv.insert(argv.end(), args.begin(), args.end());
    std::ostringstream out;
    std::ostringstream err;
    const int code = pgcodes::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::filesystem::path temp_file(const std::string& name)
{
    return std::filesystem::temp_directory_path() / ("pgcodes_cli_" + name);
}

std::string slurp(const std::filesystem::path& p)
{
    std::ifstream in(p, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

} // namespace

TEST_CASE("verify PG(2,2) as json")
{
    const auto r = run({"verify", "--p", "2", "--h", "1", "--n", "2", "--all", "--format", "json"});
    CHECK(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["spectrum"]["distribution"] == nlohmann::json{{"0", 1}, {"3", 7}, {"4", 7}, {"7", 1}});
    for (const auto& c : j["checks"])
        CHECK(c["status"] == "pass");
}

TEST_CASE("global flags before the subcommand")
{
    const auto r = run({"--format", "csv", "verify", "--p", "2", "--n", "2", "--suites", "dimension,gap"});
    CHECK(r.code == 0);
    CHECK(r.out.rfind("suite,name,status,details\n", 0) == 0);
}

TEST_CASE("code rank and geometry info")
{
    auto r = run({"code", "rank", "--p", "2", "--h", "2", "--n", "2"});
    CHECK(r.code == 0);
    CHECK(r.out == "rank 10\nformula 10\n");

    r = run({"geometry", "info", "--p", "3", "--h", "1", "--n", "3"});
    CHECK(r.code == 0);
    CHECK(r.out.find("theta_3 = 40") != std::string::npos);
    CHECK(r.out.find("theta_2 = 13") != std::string::npos);
    CHECK(r.out.find("subspaces of dimension 1: 130") != std::string::npos);
}

TEST_CASE("code build, spectrum and export")
{
    auto r = run({"code", "build", "--p", "3", "--n", "2", "--format", "json"});
    CHECK(r.code == 0);
    CHECK(nlohmann::json::parse(r.out)["hull_dimension"] == 6);

    r = run({"code", "spectrum", "--p", "2", "--n", "2", "--format", "csv"});
    CHECK(r.code == 0);
    CHECK(r.out == "weight,count\n0,1\n3,7\n4,7\n7,1\n");

    r = run({"code", "export", "--p", "2", "--n", "2"});
    CHECK(r.code == 0);
    std::istringstream lines(r.out);
    std::string line;
    std::getline(lines, line);
    CHECK(line == "# p=2 h=1 n=2 theta_n=7");
    int rows = 0;
    while (std::getline(lines, line)) {
        ++rows;
        CHECK(line.size() == 7);
        CHECK(std::count(line.begin(), line.end(), '1') == 3);
    }
    CHECK(rows == 7);

    r = run({"code", "export", "--p", "3", "--n", "2", "--format", "csv"});
    CHECK(r.code == 0);
    CHECK(r.out.find("0,") != std::string::npos);
}

TEST_CASE("search past the budget")
{
    auto r = run({"code", "spectrum", "--p", "5", "--n", "2"});
    CHECK(r.code == 3);
    CHECK(r.err.find("--search") != std::string::npos);

    r = run({"code", "spectrum", "--p", "5", "--n", "2", "--search", "--iterations", "50", "--format", "json"});
    CHECK(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["mode"] == "search");
    CHECK(j["exhaustive"] == false);
    CHECK(j["max_weight"] == 10);

    r = run({"verify", "--p", "5", "--n", "2", "--suites", "minweight", "--exhaustive-only"});
    CHECK(r.code == 3);
}

TEST_CASE("usage errors exit 2")
{
    CHECK(run({}).code == 2);
    CHECK(run({"verify", "--n", "2", "--all"}).code == 2);
    CHECK(run({"verify", "--p", "4", "--n", "2", "--all"}).code == 2);
    CHECK(run({"verify", "--p", "2", "--n", "1", "--all"}).code == 2);
    CHECK(run({"verify", "--p", "2", "--n", "2"}).code == 2);
    CHECK(run({"verify", "--p", "2", "--n", "2", "--suites", "bogus"}).code == 2);
    CHECK(run({"verify", "--p", "2", "--n", "2", "--all", "--format", "xml"}).code == 2);
    CHECK(run({"--help"}).code == 0);
}

TEST_CASE("--out writes byte-identical files")
{
    const auto a = temp_file("a.json");
    const auto b = temp_file("b.json");
    CHECK(run({"verify", "--p", "2", "--n", "3", "--all", "--format", "json", "--seed", "9", "--out", a.c_str()})
              .code == 0);
    CHECK(run({"verify", "--p", "2", "--n", "3", "--all", "--format", "json", "--seed", "9", "--out", b.c_str()})
              .code == 0);
    const auto sa = slurp(a);
    CHECK_FALSE(sa.empty());
    CHECK(sa == slurp(b));
    std::filesystem::remove(a);
    std::filesystem::remove(b);
}

TEST_CASE("blocking reduce")
{
    const auto path = temp_file("points.txt");
    {
        std::ofstream f(path);
        // The line x2 = 0 of PG(2,3) plus the point (0,0,1), one point written non-canonically.
        f << "# a line and one extra point\n"
          << "1, 0, 0\n"
          << "0, 2, 0\n"
          << "1, 1, 0\n"
          << "1, 2, 0\n"
          << "\n"
          << "0, 0, 1\n";
    }
    auto r = run({"blocking", "reduce", "--p", "3", "--n", "2", "--input", path.c_str()});
    CHECK(r.code == 0);
    CHECK(r.out.find("1, 0, 0\n") != std::string::npos);
    CHECK(r.out.find("0, 1, 0\n") != std::string::npos);
    CHECK(r.out.find("0, 0, 1") == std::string::npos);
    CHECK(r.out.find("minimal 4 points") != std::string::npos);

    r = run({"blocking", "reduce", "--p", "3", "--n", "2", "--input", path.c_str(), "--format", "json"});
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["size"] == 4);
    CHECK(j["uniqueness_guaranteed"] == true);
    CHECK(j["removed"] == nlohmann::json::array({"0, 0, 1"}));

    {
        std::ofstream f(path);
        f << "1, 0, 0\n";
    }
    r = run({"blocking", "reduce", "--p", "3", "--n", "2", "--input", path.c_str()});
    CHECK(r.code == 2);
    CHECK(r.err.find("NotBlocking") != std::string::npos);

    {
        std::ofstream f(path);
        f << "1, 0\n";
    }
    r = run({"blocking", "reduce", "--p", "3", "--n", "2", "--input", path.c_str()});
    CHECK(r.code == 2);
    CHECK(r.err.find("line 1") != std::string::npos);
    std::filesystem::remove(path);
}

TEST_CASE("point files over GF(4)")
{
    const auto path = temp_file("gf4.txt");
    {
        std::ofstream f(path);
        // The line x2 = 0: five points, coefficients c0 c1 per coordinate.
        f << "1 0, 0 0, 0 0\n0 0, 1 0, 0 0\n1 0, 1 0, 0 0\n1 0, 0 1, 0 0\n1 0, 1 1, 0 0\n";
    }
    const auto r = run({"blocking", "reduce", "--p", "2", "--h", "2", "--n", "2", "--input", path.c_str()});
    CHECK(r.code == 0);
    CHECK(r.out.find("minimal 5 points, 0 removed") != std::string::npos);
    std::filesystem::remove(path);
}
