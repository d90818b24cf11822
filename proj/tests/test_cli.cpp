#include <sstream>

#include "doctest.h"
#include "fusionkit/cli.hpp"
#include "test_util.hpp"

using namespace fusionkit;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run_cli(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("validate exits 0 on a good bundle and 1 on a corrupted one") {
    CHECK(run_cli({"validate", fktest::data_path("ising_graded.json")}).code == 0);
    auto bad = run_cli({"validate", fktest::fixture_path("ising_bad_zeta.json")});
    CHECK(bad.code == 1);
    CHECK(bad.out.find("zeta-homomorphism") != std::string::npos);
}

TEST_CASE("missing files and bad usage exit 2") {
    auto missing = run_cli({"chartable", "nonexistent.json"});
    CHECK(missing.code == 2);
    CHECK(!missing.err.empty());
    CHECK(run_cli({"frobnicate"}).code == 2);
    CHECK(run_cli({}).code == 2);
    CHECK(run_cli({"--help"}).code == 0);
}

TEST_CASE("mult --verify prints both tables and passes") {
    auto r = run_cli({"mult", "--verify", "--ascii", fktest::data_path("ising_graded.json")});
    CHECK(r.code == 0);
    CHECK(r.out.find("restriction") != std::string::npos);
    CHECK(r.out.find("formula") != std::string::npos);
    CHECK(r.out.find("FAIL") == std::string::npos);
}

TEST_CASE("report runs every check on every bundle") {
    for (const char* file : {"fibonacci.json", "vec_z2.json", "vec_z3.json", "rep_s3.json",
                             "ising_graded.json"}) {
        auto r = run_cli({"report", fktest::data_path(file)});
        CHECK_MESSAGE(r.code == 0, file);
    }
}

TEST_CASE("json output parses and reflects the checks") {
    auto r = run_cli({"report", "--json", fktest::data_path("ising_graded.json")});
    CHECK(r.code == 0);
    CHECK(r.out.find("\"pass\"") != std::string::npos);
    CHECK(r.out.front() == '{');
}

TEST_CASE("output is byte-identical across runs") {
    for (const char* sub : {"report", "chartable", "twisted", "crossed-s"}) {
        auto a = run_cli({sub, fktest::data_path("ising_graded.json")});
        auto b = run_cli({sub, fktest::data_path("ising_graded.json")});
        CHECK(a.code == b.code);
        CHECK(a.out == b.out);
    }
}
