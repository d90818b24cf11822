#include <algorithm>

#include "doctest.h"
#include "fusionkit/multiplicity.hpp"
#include "fusionkit/oracle.hpp"
#include "test_util.hpp"

using namespace fusionkit;

TEST_CASE("numeric eigen-solver reproduces the exact character tables") {
    OracleConfig cfg;
    for (const char* file : {"fibonacci.json", "vec_z2.json", "vec_z3.json", "rep_s3.json",
                             "ising_graded.json"}) {
        auto bundle = fktest::load_data(file);
        const GradedBasedRing& ring = bundle.has_center() ? bundle.center() : bundle.D;
        auto exact = commutative_characters(ring);
        auto numeric = oracle_characters(ring, cfg);
        REQUIRE(numeric.size() == exact.irreps.size());
        for (const auto& ch : exact.irreps) {
            bool found = false;
            for (const auto& tuple : numeric) {
                bool same = true;
                for (size_t k = 0; k < tuple.size(); ++k)
                    same = same && tuple[k].near(ch.values[k].embed(), cfg.tolerance);
                found = found || same;
            }
            CHECK_MESSAGE(found, ch.label);
        }
    }
}

TEST_CASE("independent multiplicity reader agrees with the library tables") {
    for (const char* file : {"vec_z2.json", "vec_z3.json", "rep_s3.json", "ising_graded.json"}) {
        auto bundle = fktest::load_data(file);
        auto table = restriction_multiplicities(bundle);
        auto oracle = oracle_multiplicities(bundle);
        CHECK(table.entries == oracle);
    }
}

TEST_CASE("numeric twisted orthogonality check passes on every graded bundle") {
    for (const char* file : {"vec_z2.json", "vec_z3.json", "rep_s3.json", "ising_graded.json"}) {
        auto bundle = fktest::load_data(file);
        auto data = compute_clifford(bundle);
        auto rep = oracle_orthogonality(bundle, data.theory_d, data.extensions);
        CHECK_MESSAGE(rep.all_pass(), file);
    }
}

TEST_CASE("oracle results are seed-stable") {
    auto bundle = fktest::load_data("rep_s3.json");
    auto a = oracle_characters(bundle.center());
    auto b = oracle_characters(bundle.center());
    REQUIRE(a.size() == b.size());
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t k = 0; k < a[i].size(); ++k) CHECK(a[i][k].near(b[i][k], BigFloat(0)));
}
