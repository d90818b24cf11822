// Acceptance suite: one pass/fail line per criterion, exit 0 iff all pass.
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "fusionkit/cli.hpp"
#include "fusionkit/multiplicity.hpp"
#include "fusionkit/oracle.hpp"
#include "test_util.hpp"

using namespace fusionkit;

namespace {

const char* center_bundles[] = {"vec_z2.json", "vec_z3.json", "rep_s3.json",
                                "ising_graded.json"};

void require(bool cond, const std::string& what) {
    if (!cond) throw std::runtime_error(what);
}

// 1. exact codegrees {6,2,3} and orthogonality on rep_s3, against the oracle
void criterion_characters() {
    auto bundle = fktest::load_data("rep_s3.json");
    auto th = irreducible_characters(bundle.D);
    std::multiset<std::string> codegrees;
    for (const auto& ch : th.irreps) codegrees.insert(ch.codegree.str());
    require(codegrees == std::multiset<std::string>{"2", "3", "6"},
            "codegrees of rep_s3 are not {6, 2, 3}");
    for (size_t a = 0; a < th.irreps.size(); ++a)
        for (size_t b = 0; b < th.irreps.size(); ++b) {
            Scalar ip(0);
            for (size_t k = 0; k < th.grade0.size(); ++k)
                ip += th.irreps[a].values[k] * th.irreps[b].values[k].conj();
            Scalar want = a == b ? th.irreps[a].codegree * th.irreps[a].dim : Scalar(0);
            require(ip == want, "orthogonality fails at (" + th.irreps[a].label + ", " +
                                    th.irreps[b].label + ")");
        }
    OracleConfig cfg;
    auto numeric = oracle_characters(bundle.D, cfg);
    require(numeric.size() == th.irreps.size(), "oracle character count differs");
    for (const auto& ch : th.irreps) {
        bool found = false;
        for (const auto& tuple : numeric) {
            bool same = true;
            for (size_t k = 0; k < tuple.size(); ++k)
                same = same && tuple[k].near(ch.values[k].embed(), cfg.tolerance);
            found = found || same;
        }
        require(found, ch.label + " missing from the numeric eigen-solve");
    }
}

// 2. twisted orthogonality on ising: sum |chi~(M)|^2 = f * dim = 2 exactly
void criterion_twisted_orthogonality() {
    auto bundle = fktest::load_data("ising_graded.json");
    auto data = compute_clifford(bundle);
    require(data.extensions.size() == 1, "expected a unique twisted character");
    const auto& ext = data.extensions[0];
    const auto& e = data.theory_d.irreps[ext.irrep];
    Scalar sum(0);
    for (size_t x : bundle.D.grade_indices(1)) sum += ext.chi[x] * ext.chi[x].conj();
    require(sum == e.codegree * e.dim, "sum |chi~|^2 != f * dim");
    require(sum == Scalar(2), "f * dim != 2 on ising");
}

// 3. counting: per grade a, |grade-a basis of Z| = |Phi^a-fixed grade-0 basis
//    elements of Z| = |Phi^a-fixed characters of grade-0 of Z|
void criterion_counting() {
    for (const char* file : center_bundles) {
        auto bundle = fktest::load_data(file);
        const GradedBasedRing& z = bundle.center();
        auto th = commutative_characters(z);
        auto zg0 = z.grade_indices(0);
        std::vector<size_t> pos(z.dim(), 0);
        for (size_t k = 0; k < zg0.size(); ++k) pos[zg0[k]] = k;
        for (unsigned a = 0; a < z.grading_order; ++a) {
            size_t by_basis = z.grade_indices(a).size();
            size_t by_objects = 0;
            for (size_t i : zg0)
                if (bundle.phi_power_index(i, a) == i) ++by_objects;
            size_t by_chars = 0;
            for (const auto& ch : th.irreps) {
                bool fixed = true;
                for (size_t k = 0; k < zg0.size(); ++k)
                    fixed = fixed &&
                            ch.values[pos[bundle.phi_power_index(zg0[k], a)]] == ch.values[k];
                if (fixed) ++by_chars;
            }
            require(by_basis == by_objects && by_basis == by_chars,
                    std::string(file) + " grade " + std::to_string(a) + ": counts " +
                        std::to_string(by_basis) + "/" + std::to_string(by_objects) + "/" +
                        std::to_string(by_chars));
        }
    }
}

// 4. fixed-point detection routes agree; fault fixtures fail their checks
void criterion_fixed_points() {
    for (const char* file : center_bundles) {
        auto bundle = fktest::load_data(file);
        compute_clifford(bundle);  // throws ConsistencyFailure on route mismatch
    }
    auto expect_failure = [](const std::string& path, const std::string& check_id) {
        auto bundle = load_bundle(path);
        const auto& rep = bundle.verify();
        require(!rep.all_pass(), path + " unexpectedly validates");
        for (const auto& c : rep.checks)
            if (c.id == check_id && !c.pass) return;
        require(false, path + " does not fail " + check_id);
    };
    expect_failure(fktest::fixture_path("ising_bad_zeta.json"), "zeta-homomorphism");
    expect_failure(fktest::fixture_path("ising_bad_phi.json"), "crossed-relation");
}

// 5. main theorem: formula = restriction = oracle entrywise; delta pattern on
//    the pointed doubles; nonnegative integer entries throughout
void criterion_main_theorem() {
    for (const char* file : center_bundles) {
        auto bundle = fktest::load_data(file);
        auto data = compute_clifford(bundle);
        auto restriction = restriction_multiplicities(bundle);
        auto formula = formula_multiplicities(bundle, data);
        auto oracle = oracle_multiplicities(bundle);
        require(restriction.entries == formula.entries, std::string(file) + ": formula differs");
        require(restriction.entries == oracle, std::string(file) + ": oracle differs");
        for (const auto& row : formula.entries)
            for (const auto& v : row) require(v >= 0, "negative multiplicity");
        for (const auto& ext : data.extensions)
            for (const auto& v : ext.chi) require(v.exact(), "non-exact twisted value");
    }
    for (const char* file : {"vec_z2.json", "vec_z3.json"}) {
        auto t = restriction_multiplicities(fktest::load_data(file));
        for (const auto& row : t.entries) {
            Integer sum = 0;
            for (const auto& v : row) {
                require(v == 0 || v == 1, "non-delta entry");
                sum += v;
            }
            require(sum == 1, "row sum != 1 on a pointed double");
        }
    }
}

// 6. regauging by every N-th root of unity leaves the formula table unchanged
void criterion_gauge_invariance() {
    for (const char* file : center_bundles) {
        auto bundle = fktest::load_data(file);
        auto data = compute_clifford(bundle);
        auto base = formula_multiplicities(bundle, data);
        unsigned n = bundle.D.grading_order;
        for (long k = 0; k < (long)n; ++k) {
            Scalar omega(Cyclo::root_of_unity(n, k));
            CliffordData regauged = data;
            for (auto& ext : regauged.extensions)
                ext = regauge(bundle.D, bundle.center(), ext, omega);
            auto t = formula_multiplicities(bundle, regauged);
            require(t.entries == base.entries,
                    std::string(file) + ": table moved under omega^" + std::to_string(k));
        }
    }
}

// 7. trace identity, exact, for all (A, E) on every bundle
void criterion_trace_identity() {
    for (const char* file : center_bundles) {
        auto bundle = fktest::load_data(file);
        auto data = compute_clifford(bundle);
        auto rep = verify_main_theorem(bundle, data);
        for (const auto& c : rep.checks)
            if (c.id == "trace-identity")
                require(c.pass, std::string(file) + ": " + c.detail);
    }
}

// 8. modular case on ising: 2x2 crossed S, unit row sqrt 2, f * dim A = 2,
//    and the crossed-S formula reproduces the table
void criterion_modular() {
    auto bundle = fktest::load_data("ising_graded.json");
    auto data = compute_clifford(bundle);
    auto st = crossed_s_matrix(bundle, data);
    require(st.rows.size() == 2 && st.cols.size() == 2, "crossed S is not 2x2");
    Scalar r2 = parse_scalar("E(8)-E(8)^3");
    require(st.entries[0][0] == r2 && st.entries[0][1] == r2,
            "S~_{1, X_i} != sqrt 2");
    auto rep = verify_modular_formula(bundle, data);
    bool codegree = false, formula = false;
    for (const auto& c : rep.checks) {
        if (c.id == "codegree-identity") codegree = c.pass;
        if (c.id == "smatrix-multiplicity-formula") formula = c.pass;
    }
    require(codegree, "f_E * dim A_E != sqrt(dim Z) on ising");
    require(formula, "crossed-S multiplicity formula fails on ising");
    const auto& e = data.theory_d.irreps[data.extensions[0].irrep];
    require(e.codegree * e.dim == Scalar(2), "f_E * dim E != 2 on ising");
}

// 9. scalar layer: exact principal square root of 2; codegrees totally positive
void criterion_scalars() {
    Scalar r = nth_root_gauge(Scalar(2), 2);
    require(r == parse_scalar("E(8)+E(8)^7"), "sqrt 2 not recognized as E(8)+E(8)^7");
    require(r * r == Scalar(2), "gauge root does not square to 2");
    for (const char* file : {"fibonacci.json", "vec_z2.json", "vec_z3.json", "rep_s3.json",
                             "ising_graded.json"}) {
        auto bundle = fktest::load_data(file);
        auto th = irreducible_characters(bundle.D);
        for (const auto& ch : th.irreps)
            require(ch.codegree.exact() && is_totally_positive(ch.codegree.cyclo()),
                    std::string(file) + ": codegree of " + ch.label + " not totally positive");
    }
}

// 10. two report runs on the same bundle are byte-identical
void criterion_determinism() {
    for (const char* file : center_bundles) {
        std::ostringstream out1, err1, out2, err2;
        std::vector<std::string> args{"report", fktest::data_path(file)};
        int c1 = cli::run(args, out1, err1);
        int c2 = cli::run(args, out2, err2);
        require(c1 == c2 && out1.str() == out2.str() && err1.str() == err2.str(),
                std::string(file) + ": report output differs between runs");
        require(!out1.str().empty(), "report produced no output");
    }
}

}  // namespace

int main() {
    struct Criterion {
        const char* name;
        std::function<void()> fn;
    };
    std::vector<Criterion> criteria{
        {"1 character theory: exact codegrees and orthogonality on rep_s3", criterion_characters},
        {"2 twisted orthogonality on ising equals f * dim = 2", criterion_twisted_orthogonality},
        {"3 grade counting matches fixed-point counting on every bundle", criterion_counting},
        {"4 fixed-point routes agree; fault fixtures fail as designated", criterion_fixed_points},
        {"5 formula = restriction = oracle multiplicity tables", criterion_main_theorem},
        {"6 multiplicity tables are gauge invariant", criterion_gauge_invariance},
        {"7 trace identity holds exactly for all (A, E)", criterion_trace_identity},
        {"8 modular case: crossed S-matrix and sqrt(dim Z) identities", criterion_modular},
        {"9 exact sqrt 2 gauge and totally positive codegrees", criterion_scalars},
        {"10 byte-identical report output across runs", criterion_determinism},
    };
    int failures = 0;
    for (const auto& c : criteria) {
        try {
            c.fn();
            std::cout << "PASS  criterion " << c.name << "\n";
        } catch (const std::exception& e) {
            ++failures;
            std::cout << "FAIL  criterion " << c.name << " -- " << e.what() << "\n";
        }
    }
    if (failures) std::cout << failures << " criteria failed\n";
    return failures ? 1 : 0;
}
