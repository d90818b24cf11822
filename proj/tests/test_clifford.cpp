#include "doctest.h"
#include "fusionkit/clifford.hpp"
#include "test_util.hpp"

using namespace fusionkit;

TEST_CASE("the ising bundle has exactly one twisted character") {
    auto bundle = fktest::load_data("ising_graded.json");
    auto data = compute_clifford(bundle);
    REQUIRE(data.phi_fixed.size() == 1);
    REQUIRE(data.extensions.size() == 1);
    const auto& ext = data.extensions[0];
    CHECK(ext.lambda == Scalar(2));
    size_t sigma = bundle.D.label_index("sigma");
    CHECK(ext.chi[sigma] == parse_scalar("E(8)-E(8)^3"));  // sqrt 2
    // grade-0 slice of the twisted character is the plain character
    const auto& e = data.theory_d.irreps[ext.irrep];
    auto g0 = bundle.D.grade_indices(0);
    for (size_t k = 0; k < g0.size(); ++k) CHECK(ext.chi[g0[k]] == e.values[k]);
}

TEST_CASE("twisted orthogonality on the ising grade-1 slice") {
    auto bundle = fktest::load_data("ising_graded.json");
    auto data = compute_clifford(bundle);
    const auto& ext = data.extensions[0];
    const auto& e = data.theory_d.irreps[ext.irrep];
    Scalar sum(0);
    for (size_t x : bundle.D.grade_indices(1)) sum += ext.chi[x] * ext.chi[x].conj();
    CHECK(sum == e.codegree * e.dim);
    CHECK(sum == Scalar(2));
}

TEST_CASE("the three fixed-point detection routes agree on every bundle") {
    for (const char* file : {"vec_z2.json", "vec_z3.json", "rep_s3.json", "ising_graded.json"}) {
        auto bundle = fktest::load_data(file);
        // phi_fixed_irreps internally cross-checks the central-character,
        // partial-action and center-idempotent routes, throwing on mismatch.
        CHECK_NOTHROW(compute_clifford(bundle));
    }
}

TEST_CASE("only Phi-fixed irreducibles extend") {
    auto bundle = fktest::load_data("ising_graded.json");
    auto data = compute_clifford(bundle);
    for (size_t e = 0; e < data.theory_d.irreps.size(); ++e) {
        bool fixed = false;
        for (size_t f : data.phi_fixed) fixed = fixed || f == e;
        if (!fixed) CHECK_THROWS_AS(extend_irrep(bundle, data.theory_d, e), NotPhiFixed);
    }
}

TEST_CASE("regauging scales grade-a values by omega^{-a} and is cyclic") {
    for (const char* file : {"ising_graded.json", "vec_z3.json"}) {
        auto bundle = fktest::load_data(file);
        auto data = compute_clifford(bundle);
        unsigned n = bundle.D.grading_order;
        Scalar omega(Cyclo::root_of_unity(n));
        for (const auto& ext : data.extensions) {
            auto g = regauge(bundle.D, bundle.center(), ext, omega);
            for (size_t x = 0; x < bundle.D.dim(); ++x) {
                Scalar w = omega.pow(-(long)bundle.D.grades[x]);
                CHECK(g.chi[x] == ext.chi[x] * w);
            }
            // N successive regauges return to the start
            auto cur = ext;
            for (unsigned i = 0; i < n; ++i) cur = regauge(bundle.D, bundle.center(), cur, omega);
            for (size_t x = 0; x < bundle.D.dim(); ++x) CHECK(cur.chi[x] == ext.chi[x]);
        }
    }
}

TEST_CASE("extended central characters match the paired extension") {
    auto bundle = fktest::load_data("rep_s3.json");
    auto data = compute_clifford(bundle);
    for (size_t i = 0; i < data.phi_fixed.size(); ++i) {
        const auto& ext = data.extensions[i];
        size_t zc = data.rho_to_z[data.phi_fixed[i]];
        auto cext = extend_central_character(bundle, data.theory_z, zc);
        for (size_t x = 0; x < bundle.center().dim(); ++x) CHECK(cext.values[x] == ext.rho[x]);
    }
}

TEST_CASE("twisted alpha acts on the extension by the formal codegree") {
    auto bundle = fktest::load_data("ising_graded.json");
    auto data = compute_clifford(bundle);
    const auto& ext = data.extensions[0];
    const auto& e = data.theory_d.irreps[ext.irrep];
    auto alpha = twisted_alpha(bundle.D, ext);
    // chi~(alpha~ * m) = f_E * chi~(m) linearly over grade 1
    auto prod = bundle.D.multiply(alpha, ext.m);
    Scalar lhs(0);
    for (size_t x = 0; x < bundle.D.dim(); ++x) lhs += prod[x] * ext.chi[x];
    Scalar rhs(0);
    for (size_t x = 0; x < bundle.D.dim(); ++x) rhs += ext.m[x] * ext.chi[x];
    CHECK(lhs == e.codegree * rhs);
}
