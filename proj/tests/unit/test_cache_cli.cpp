#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>

#include "niemeier/coefficient_cache.hpp"
#include "niemeier/context.hpp"
#include "niemeier_cli/cli.hpp"

using namespace niemeier;

namespace {

std::filesystem::path fresh_dir(const std::string& name) {
    const auto dir = std::filesystem::temp_directory_path() / ("niemeier-test-" + name);
    std::filesystem::remove_all(dir);
    std::filesystem::create_directories(dir);
    return dir;
}

struct CliResult {
    int code;
    std::string out;
    std::string err;
};

CliResult run(const std::vector<std::string>& args) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p);
    return {std::istreambuf_iterator<char>(in), {}};
}

} // namespace

TEST(Cache, StoresAndReloads) {
    const auto dir = fresh_dir("reload");
    const IndexMatrix t = IndexMatrix::bracket(1, 1, 1);
    {
        CoefficientCache cache(dir);
        cache.store("alpha", t, 97152);
        cache.flush();
    }
    CoefficientCache again(dir);
    EXPECT_EQ(again.lookup("alpha", t), 97152u);
    EXPECT_FALSE(again.lookup("omega", t));
    EXPECT_EQ(again.ignored_lines(), 0u);
}

TEST(Cache, CorruptLinesAreIgnored) {
    const auto dir = fresh_dir("corrupt");
    {
        std::ofstream f(dir / CoefficientCache::kFileName);
        f << CoefficientCache::kSchema << '\n';
        f << "alpha 2 1,1,1 97152\n";
        f << "alpha 2 1,1,1\n";            // missing value
        f << "alpha 2 1,1,9 5\n";          // not positive semidefinite
        f << "alpha 2 1,1,x 5\n";          // not a number
        f << "alpha 2 1,0,0 -3\n";         // negative count
        f << "alpha 2 1,0,0 12 extra\n";   // trailing field
    }
    CoefficientCache cache(dir);
    EXPECT_EQ(cache.size(), 1u);
    EXPECT_EQ(cache.ignored_lines(), 5u);
    EXPECT_EQ(cache.lookup("alpha", IndexMatrix::bracket(1, 1, 1)), 97152u);
}

TEST(Cache, UnknownSchemaIsDiscarded) {
    const auto dir = fresh_dir("schema");
    {
        std::ofstream f(dir / CoefficientCache::kFileName);
        f << "# some other format\nalpha 2 1,1,1 97152\n";
    }
    CoefficientCache cache(dir);
    EXPECT_EQ(cache.size(), 0u);
}

TEST(Cache, ContextUsesAndFillsTheCache) {
    const auto dir = fresh_dir("context");
    ContextOptions options;
    options.cache_dir = dir;
    {
        ThetaContext ctx(options);
        EXPECT_EQ(ctx.theta_coefficient("psi", IndexMatrix::bracket(1, 0, 1)), 2208u);
        ctx.flush_cache();
    }
    EXPECT_NE(slurp(dir / CoefficientCache::kFileName).find("psi"), std::string::npos);
}

TEST(Cli, ListHasAllRows) {
    const CliResult r = run({"list", "--format", "table"});
    EXPECT_EQ(r.code, cli::kOk);
    EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 24);
    EXPECT_NE(r.out.find("D24, h=46, +384Y +12288X +3076224F"), std::string::npos);
    EXPECT_NE(r.out.find("Leech, h=0, -720Y +43200X -1131120F"), std::string::npos);
}

TEST(Cli, ThetaPsiDegreeOne) {
    const CliResult r = run({"theta", "--lattice", "psi", "--degree", "1", "--max-norm", "1"});
    EXPECT_EQ(r.code, cli::kOk);
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j.at("entries").at(1).at("num"), 48);
}

TEST(Cli, ExitCodes) {
    EXPECT_EQ(run({"verify", "congruence", "--mod", "23", "alpha", "omega"}).code, cli::kOk);
    EXPECT_EQ(run({"verify", "congruence", "--mod", "23", "[4,2,6]", "alpha"}).code, cli::kOk);
    EXPECT_EQ(run({"verify", "congruence", "--mod", "23", "alpha", "delta"}).code, cli::kRefuted);
    EXPECT_EQ(run({"verify", "congruence", "--mod", "23", "--max-tii", "0", "alpha", "omega"}).code,
              cli::kInconclusive);
    EXPECT_EQ(run({"verify", "congruence", "--mod", "5", "alpha", "[4,2,6]"}).code, cli::kInconclusive);
    EXPECT_EQ(run({"verify", "singular", "--mod", "23", "alpha", "[2,2,12]"}).code, cli::kOk);
    EXPECT_EQ(run({"verify", "singular", "--mod", "23", "gamma"}).code, cli::kRefuted);
    EXPECT_EQ(run({"verify", "theta-kernel", "--mod", "23", "--lattice", "gamma"}).code, cli::kRefuted);
    EXPECT_EQ(run({"verify", "identity", "--degree", "3", "--all"}).code, cli::kOk);
    EXPECT_EQ(run({"theta", "--lattice", "nope"}).code, cli::kInconclusive);
    EXPECT_NE(run({"frobnicate"}).code, cli::kOk);
}

TEST(Cli, BudgetExhaustionNamesTheIndex) {
    const CliResult r = run({"--budget", "10", "theta", "--lattice", "omega", "--degree", "2"});
    EXPECT_EQ(r.code, cli::kInconclusive);
    EXPECT_NE(r.err.find("omega at ["), std::string::npos);
}

TEST(Cli, CacheRoundTripIsByteIdentical) {
    const auto dir = fresh_dir("roundtrip");
    const std::vector<std::string> args{"--cache", dir.string(), "theta", "--lattice", "all", "--degree", "2"};
    const CliResult cold = run(args);
    ASSERT_EQ(cold.code, cli::kOk);
    const CliResult warm = run(args);
    std::filesystem::remove_all(dir);
    const CliResult again = run(args);
    EXPECT_EQ(cold.out, warm.out);
    EXPECT_EQ(cold.out, again.out);
    EXPECT_EQ(cold.out, run({"theta", "--lattice", "all", "--degree", "2"}).out);
}

TEST(Cli, ExportWritesFiles) {
    const auto dir = fresh_dir("export");
    ASSERT_EQ(run({"export", "--out", dir.string()}).code, cli::kOk);
    const auto lattices = nlohmann::json::parse(slurp(dir / "lattices.json"));
    EXPECT_EQ(lattices.size(), 24u);
    const auto table = nlohmann::json::parse(slurp(dir / "table1.json"));
    EXPECT_EQ(table.size(), 24u);
}

TEST(Cli, RederivePrintsPolynomials) {
    const CliResult r = run({"rederive"});
    ASSERT_EQ(r.code, cli::kOk);
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j.at("c1"), "48h^2 - 2880h + 43200");
    EXPECT_EQ(j.at("c2"), "48h^3 - 288h^2 + 3144h - 1131120");
}
