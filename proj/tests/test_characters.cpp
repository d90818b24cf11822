#include <set>

#include "doctest.h"
#include "fusionkit/characters.hpp"
#include "test_util.hpp"

using namespace fusionkit;

namespace {

Scalar inner(const CharacterTheory& th, size_t a, size_t b) {
    Scalar s(0);
    for (size_t k = 0; k < th.grade0.size(); ++k)
        s += th.irreps[a].values[k] * th.irreps[b].values[k].conj();
    return s;
}

}  // namespace

TEST_CASE("fibonacci characters and codegrees are the exact golden-ratio pair") {
    auto bundle = fktest::load_data("fibonacci.json");
    auto th = commutative_characters(bundle.D);
    REQUIRE(th.irreps.size() == 2);
    std::set<std::string> codegrees;
    for (const auto& ch : th.irreps) {
        CHECK(ch.exact);
        CHECK(ch.dim == Scalar(1));
        codegrees.insert(ch.codegree.str());
    }
    // (5 -+ sqrt 5)/2
    CHECK(codegrees == std::set<std::string>{"3+E(5)^2+E(5)^3", "2-E(5)^2-E(5)^3"});
}

TEST_CASE("representation ring of S3 has codegrees {6, 2, 3}") {
    auto bundle = fktest::load_data("rep_s3.json");
    auto th = irreducible_characters(bundle.D);
    REQUIRE(th.irreps.size() == 3);
    std::multiset<std::string> codegrees;
    for (const auto& ch : th.irreps) codegrees.insert(ch.codegree.str());
    CHECK(codegrees == std::multiset<std::string>{"2", "3", "6"});
}

TEST_CASE("orthogonality of irreducible characters is exact") {
    for (const char* file : {"fibonacci.json", "rep_s3.json", "ising_graded.json"}) {
        auto bundle = fktest::load_data(file);
        auto th = irreducible_characters(bundle.D);
        for (size_t a = 0; a < th.irreps.size(); ++a)
            for (size_t b = 0; b < th.irreps.size(); ++b) {
                Scalar want = a == b ? th.irreps[a].codegree * th.irreps[a].dim : Scalar(0);
                CHECK(inner(th, a, b) == want);
            }
    }
}

TEST_CASE("noncommutative grade 0: matrix units have one irreducible of dimension 2") {
    const char* text = R"({
      "name": "m2", "grading_order": 1,
      "ring_D": {
        "basis": [
          {"label": "e11", "grade": 0}, {"label": "e12", "grade": 0},
          {"label": "e21", "grade": 0}, {"label": "e22", "grade": 0}
        ],
        "unit": ["e11", "e22"],
        "dual": {"e11": "e11", "e12": "e21", "e21": "e12", "e22": "e22"},
        "constants": [
          [0, 0, 0, 1], [0, 1, 1, 1], [1, 2, 0, 1], [1, 3, 1, 1],
          [2, 0, 2, 1], [2, 1, 3, 1], [3, 2, 2, 1], [3, 3, 3, 1]
        ]
      }
    })";
    auto bundle = parse_bundle(text);
    CHECK_THROWS_AS(commutative_characters(bundle.D), NotCommutative);
    auto th = irreducible_characters(bundle.D);
    REQUIRE(th.irreps.size() == 1);
    const auto& e = th.irreps[0];
    CHECK(e.dim == Scalar(2));
    CHECK(e.codegree == Scalar(1));
    // character of the defining 2-dimensional module: 1 on e11 and e22
    CHECK(e.values[0] == Scalar(1));
    CHECK(e.values[3] == Scalar(1));
    CHECK(e.values[1] == Scalar(0));
}

TEST_CASE("central idempotents are orthogonal and complete") {
    auto bundle = fktest::load_data("rep_s3.json");
    const GradedBasedRing& z = bundle.center();
    auto th = commutative_characters(z);
    std::vector<Scalar> total(z.dim(), Scalar(0));
    for (size_t a = 0; a < th.irreps.size(); ++a) {
        auto sq = z.multiply(th.irreps[a].idempotent, th.irreps[a].idempotent);
        for (size_t k = 0; k < z.dim(); ++k) {
            CHECK(sq[k] == th.irreps[a].idempotent[k]);
            total[k] += th.irreps[a].idempotent[k];
        }
        for (size_t b = 0; b < a; ++b) {
            auto pr = z.multiply(th.irreps[a].idempotent, th.irreps[b].idempotent);
            for (const auto& c : pr) CHECK(c.is_zero());
        }
    }
    auto unit = z.unit_element();
    for (size_t k = 0; k < z.dim(); ++k) CHECK(total[k] == unit[k]);
}

TEST_CASE("labels are deterministic and sorted by dimension") {
    auto bundle = fktest::load_data("rep_s3.json");
    auto th = irreducible_characters(bundle.center());
    for (size_t i = 0; i < th.irreps.size(); ++i) {
        CHECK(th.irreps[i].label == "E" + std::to_string(i + 1));
        if (i) {
            auto a = th.irreps[i - 1].dim.embed().re();
            auto b = th.irreps[i].dim.embed().re();
            CHECK(a <= b);
        }
    }
}

TEST_CASE("s-matrix rows biject with the characters of the center ring") {
    auto bundle = fktest::load_data("rep_s3.json");
    REQUIRE(bundle.smatrix.has_value());
    auto th = commutative_characters(bundle.center());
    auto bij = smatrix_characters(*bundle.smatrix, th);
    CHECK(bij.row_to_char.size() == th.irreps.size());
    for (size_t r = 0; r < bij.row_to_char.size(); ++r)
        CHECK(bij.char_to_row[bij.row_to_char[r]] == r);
}

TEST_CASE("central character pullback is injective on the bundled data") {
    for (const char* file : {"vec_z2.json", "vec_z3.json", "rep_s3.json", "ising_graded.json"}) {
        auto bundle = fktest::load_data(file);
        auto th = irreducible_characters(bundle.D);
        auto rho = embed_rho(bundle, th);
        CHECK(rho.size() == th.irreps.size());
    }
}
