#include "doctest.h"
#include "fusionkit/ring.hpp"
#include "test_util.hpp"

using namespace fusionkit;

namespace {

// 2x2 matrix units: a noncommutative based ring concentrated in grade 0.
const char* matrix_units_json = R"({
  "name": "m2",
  "grading_order": 1,
  "ring_D": {
    "basis": [
      {"label": "e11", "grade": 0}, {"label": "e12", "grade": 0},
      {"label": "e21", "grade": 0}, {"label": "e22", "grade": 0}
    ],
    "unit": ["e11", "e22"],
    "dual": {"e11": "e11", "e12": "e21", "e21": "e12", "e22": "e22"},
    "constants": [
      [0, 0, 0, 1], [0, 1, 1, 1],
      [1, 2, 0, 1], [1, 3, 1, 1],
      [2, 0, 2, 1], [2, 1, 3, 1],
      [3, 2, 2, 1], [3, 3, 3, 1]
    ]
  }
})";

}  // namespace

TEST_CASE("bundled datasets pass every structural check") {
    for (const char* file : {"fibonacci.json", "vec_z2.json", "vec_z3.json", "rep_s3.json",
                             "ising_graded.json"}) {
        auto bundle = fktest::load_data(file);
        const auto& rep = bundle.verify();
        CHECK_MESSAGE(rep.all_pass(), file);
    }
}

TEST_CASE("ring multiplication follows the structure constants") {
    auto bundle = fktest::load_data("fibonacci.json");
    const GradedBasedRing& r = bundle.D;
    size_t t = r.label_index("t");
    // t * t = 1 + t
    auto prod = r.multiply(r.basis_element(t), r.basis_element(t));
    CHECK(prod[r.label_index("1")] == Scalar(1));
    CHECK(prod[t] == Scalar(1));
}

TEST_CASE("noncommutative multifusion ring of matrix units validates") {
    auto bundle = parse_bundle(matrix_units_json);
    CHECK(bundle.verify().all_pass());
    CHECK(!bundle.D.grade_zero_commutative());
    CHECK(bundle.D.unit.size() == 2);
}

TEST_CASE("grading bookkeeping") {
    auto bundle = fktest::load_data("ising_graded.json");
    CHECK(bundle.D.grading_order == 2u);
    CHECK(bundle.D.grade_indices(0).size() == 2);
    CHECK(bundle.D.grade_indices(1).size() == 1);
    CHECK(bundle.center().grade_indices(1).size() == 2);
    CHECK(bundle.D.normalize_grade(-1) == 1u);
}

TEST_CASE("relative centers of the center ring have the advertised sizes") {
    auto bundle = fktest::load_data("ising_graded.json");
    const GradedBasedRing& z = bundle.center();
    CHECK(z.relative_center(0).size() == z.grade_indices(0).size());
    CHECK(z.relative_center(1).size() == z.grade_indices(1).size());
}

TEST_CASE("fault fixture with a corrupted forgetful map fails the homomorphism check") {
    auto bundle = load_bundle(fktest::fixture_path("ising_bad_zeta.json"));
    const auto& rep = bundle.verify();
    CHECK(!rep.all_pass());
    bool hit = false;
    for (const auto& c : rep.checks)
        if (c.id == "zeta-homomorphism" && !c.pass) hit = true;
    CHECK(hit);
}

TEST_CASE("fault fixture with the wrong grading automorphism fails the crossed relation") {
    auto bundle = load_bundle(fktest::fixture_path("ising_bad_phi.json"));
    const auto& rep = bundle.verify();
    CHECK(!rep.all_pass());
    bool hit = false;
    for (const auto& c : rep.checks)
        if (c.id == "crossed-relation" && !c.pass) hit = true;
    CHECK(hit);
}

TEST_CASE("malformed input raises a parse error") {
    CHECK_THROWS_AS(parse_bundle("{ not json"), ParseError);
    CHECK_THROWS_AS(parse_bundle("{\"name\": \"x\"}"), ParseError);
    CHECK_THROWS_AS(load_bundle("/nonexistent/bundle.json"), ParseError);
}

TEST_CASE("bundles survive a serialization round trip") {
    for (const char* file : {"rep_s3.json", "ising_graded.json"}) {
        auto bundle = fktest::load_data(file);
        auto again = parse_bundle(bundle_to_json(bundle));
        CHECK(again.D.labels == bundle.D.labels);
        CHECK(again.D.constants == bundle.D.constants);
        CHECK(again.center().labels == bundle.center().labels);
        CHECK(again.zeta == bundle.zeta);
        CHECK(again.phi == bundle.phi);
        CHECK(again.verify().all_pass());
    }
}
