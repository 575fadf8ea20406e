#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "commands.hpp"

using trgr::cli::run_cli;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run cli(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("dims table") {
    const auto r = cli({"dims", "--n", "4", "--d", "2", "--format", "tsv"});
    CHECK(r.code == 0);
    CHECK(r.out.find("# trgr 0.1.0\n# config ") == 0);
    CHECK(r.out.find("n\td\tr\tdim\n4\t2\t0\t1\n4\t2\t1\t5\n4\t2\t2\t6\n") !=
          std::string::npos);

    const auto j = cli({"dims", "--n", "4", "--d", "2"});
    CHECK(j.code == 0);
    CHECK(j.out.find("\"dim\":\"5\"") != std::string::npos);
    CHECK(j.out.find("\"version\"") != std::string::npos);
}

TEST_CASE("dims accepts an explicitly empty range") {
    const auto r = cli({"dims", "--n", "4", "--d", "2", "--r-list", "", "--format", "tsv"});
    CHECK(r.code == 0);
    CHECK(r.out.ends_with("# config {\"n\":4,\"d\":2,\"r_list\":[],\"seeds\":[1,2,3],\"samples\":200,\"curves\":20,\"budget\":100000,\"var_cap\":12,\"format\":\"tsv\"}\nn\td\tr\tdim\n"));
}

TEST_CASE("usage errors exit with code two") {
    CHECK(cli({"dims", "--n", "4", "--d", "3"}).code == 2);  // d > n-d
    CHECK(cli({"dims", "--bogus"}).code == 2);
    CHECK(cli({}).code == 2);
    const auto r = cli({"dims", "--n", "4", "--d", "3"});
    CHECK(r.err.find("usage error") != std::string::npos);
}

TEST_CASE("reports are deterministic") {
    const std::vector<std::string> args{"resolution", "--n", "6", "--d", "3", "--r", "2"};
    const auto a = cli(args);
    const auto b = cli(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(a.out.find("\"term_count\":6") != std::string::npos);
    CHECK(a.out.find("\"euler_matches_truncated_dim\":true") != std::string::npos);
}

TEST_CASE("bwb subcommand") {
    const auto r = cli({"bwb", "--n", "2", "--d", "1", "--a", "-2"});
    CHECK(r.code == 0);
    CHECK(r.out.find("\"degree\":1") != std::string::npos);
    CHECK(r.out.find("\"dimension\":\"1\"") != std::string::npos);

    const auto v = cli({"bwb", "--n", "2", "--d", "1", "--a", "-1"});
    CHECK(v.out.find("\"vanishes\":true") != std::string::npos);

    CHECK(cli({"bwb", "--n", "2", "--d", "1", "--a", "1,2,3"}).code == 2);
}

TEST_CASE("euler subcommand") {
    const auto r = cli({"euler", "--n", "4", "--d", "2", "--r", "2"});
    CHECK(r.code == 0);
    CHECK(r.out.find("\"equal\":true") != std::string::npos);
    CHECK(r.out.find("\"dimension\":\"5\"") != std::string::npos);
}

TEST_CASE("ideal implicitize on the smallest grassmannian") {
    const auto r = cli({"ideal", "--n", "4", "--d", "2"});
    CHECK(r.code == 0);
    CHECK(r.out.find("\"status\":\"ok\"") != std::string::npos);
    CHECK(r.out.find("p1_2*p3_4 - p1_3*p2_4 + p1_4*p2_3") != std::string::npos);

    // Zero budget: divergence is distinguished from failure.
    const auto d = cli({"ideal", "--n", "4", "--d", "2", "--budget", "0"});
    CHECK(d.code == 3);
    CHECK(d.out.find("\"status\":\"DIVERGED\"") != std::string::npos);
}

TEST_CASE("ideal vanish oracle") {
    const auto r = cli({"ideal", "--op", "vanish", "--n", "4", "--d", "2", "--r", "2",
                        "--samples", "40", "--seed", "1"});
    CHECK(r.code == 0);
    CHECK(r.out.find("\"euler\":\"5\"") != std::string::npos);
    CHECK(r.out.find("\"truncated_dim\":\"5\"") != std::string::npos);
    CHECK(r.out.find("\"matches_euler\":true") != std::string::npos);
}

TEST_CASE("fiber subcommand") {
    const auto r = cli({"fiber", "--n", "4", "--d", "2", "--r", "2", "--m", "2", "--curves",
                        "12", "--seed", "1"});
    CHECK(r.code == 0);
    CHECK(r.out.find("\"s_list\":[1]") != std::string::npos);
    CHECK(r.out.find("\"proj_dim\":3") != std::string::npos);
    CHECK(r.out.find("\"expected_dim\":3") != std::string::npos);
    CHECK(r.out.find("\"expected_dim_certified\":true") != std::string::npos);
    CHECK(r.out.find("\"pass\":true") != std::string::npos);

    const auto point = cli({"fiber", "--n", "4", "--d", "2", "--r", "2", "--m", "1",
                            "--curves", "0"});
    CHECK(point.code == 0);
    CHECK(point.out.find("\"point_fiber\":true") != std::string::npos);
}

TEST_CASE("smooth subcommand") {
    const auto r = cli({"smooth", "--n", "4", "--d", "2", "--samples", "6", "--seed", "1"});
    CHECK(r.code == 0);
    CHECK(r.out.find("\"pass\":true") != std::string::npos);
}

TEST_CASE("configuration file") {
    const std::string path = "trgr_test_config.ini";
    {
        std::ofstream f(path);
        f << "n=6\nd=3\nformat=tsv\n";
    }
    const auto r = cli({"dims", "--config", path, "--r", "1"});
    std::remove(path.c_str());
    CHECK(r.code == 0);
    CHECK(r.out.find("6\t3\t1\t10\n") != std::string::npos);
}
