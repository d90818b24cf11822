#include "doctest.h"
#include "fusionkit/multiplicity.hpp"
#include "test_util.hpp"

using namespace fusionkit;

namespace {
const char* center_bundles[] = {"vec_z2.json", "vec_z3.json", "rep_s3.json",
                                "ising_graded.json"};
}

TEST_CASE("character formula reproduces the restriction table on every bundle") {
    for (const char* file : center_bundles) {
        auto bundle = fktest::load_data(file);
        auto data = compute_clifford(bundle);
        auto restriction = restriction_multiplicities(bundle);
        auto formula = formula_multiplicities(bundle, data);
        CHECK_MESSAGE(restriction.entries == formula.entries, file);
        for (const auto& row : formula.entries)
            for (const auto& v : row) CHECK(v >= 0);
    }
}

TEST_CASE("pointed doubles give Kronecker-delta tables") {
    for (const char* file : {"vec_z2.json", "vec_z3.json"}) {
        auto bundle = fktest::load_data(file);
        auto t = restriction_multiplicities(bundle);
        // grade-1 center simples restrict to distinct invertibles, one each
        for (const auto& row : t.entries) {
            Integer sum = 0;
            for (const auto& v : row) {
                CHECK((v == 0 || v == 1));
                sum += v;
            }
            CHECK(sum == 1);
        }
    }
}

TEST_CASE("the full verification suite passes on every bundle") {
    for (const char* file : center_bundles) {
        auto bundle = fktest::load_data(file);
        auto data = compute_clifford(bundle);
        auto rep = verify_main_theorem(bundle, data);
        CHECK_MESSAGE(rep.all_pass(), file);
    }
}

TEST_CASE("multiplicity tables are gauge invariant") {
    auto bundle = fktest::load_data("vec_z3.json");
    auto data = compute_clifford(bundle);
    auto base = formula_multiplicities(bundle, data);
    unsigned n = bundle.D.grading_order;
    for (long k = 1; k < (long)n; ++k) {
        Scalar omega(Cyclo::root_of_unity(n, k));
        CliffordData regauged = data;
        for (auto& ext : regauged.extensions)
            ext = regauge(bundle.D, bundle.center(), ext, omega);
        auto t = formula_multiplicities(bundle, regauged);
        CHECK(t.entries == base.entries);
    }
}

TEST_CASE("crossed S-matrix of the ising bundle") {
    auto bundle = fktest::load_data("ising_graded.json");
    auto data = compute_clifford(bundle);
    auto st = crossed_s_matrix(bundle, data);
    REQUIRE(st.rows.size() == 2);
    REQUIRE(st.cols.size() == 2);
    Scalar r2 = parse_scalar("E(8)-E(8)^3");
    // unit row is (sqrt2, sqrt2); the other row is (sqrt2, -sqrt2)
    CHECK(st.entries[0][0] == r2);
    CHECK(st.entries[0][1] == r2);
    CHECK(st.entries[1][0] == r2);
    CHECK(st.entries[1][1] == -r2);
}

TEST_CASE("modular multiplicity formula and codegree identity") {
    for (const char* file : center_bundles) {
        auto bundle = fktest::load_data(file);
        if (!bundle.smatrix) continue;
        auto data = compute_clifford(bundle);
        auto rep = verify_modular_formula(bundle, data);
        CHECK_MESSAGE(rep.all_pass(), file);
    }
}
