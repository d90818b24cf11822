#include "fusionkit/ring.hpp"

#include <algorithm>

namespace fusionkit {

size_t GradedBasedRing::label_index(const std::string& label) const {
    auto it = std::find(labels.begin(), labels.end(), label);
    if (it == labels.end()) throw std::out_of_range("unknown basis label: " + label);
    return (size_t)(it - labels.begin());
}

std::vector<size_t> GradedBasedRing::grade_indices(unsigned a) const {
    std::vector<size_t> out;
    for (size_t i = 0; i < dim(); ++i)
        if (grades[i] == a % grading_order) out.push_back(i);
    return out;
}

std::vector<Scalar> GradedBasedRing::basis_element(size_t i) const {
    std::vector<Scalar> v(dim(), Scalar(0));
    v[i] = Scalar(1);
    return v;
}

std::vector<Scalar> GradedBasedRing::unit_element() const {
    std::vector<Scalar> v(dim(), Scalar(0));
    for (size_t u : unit) v[u] = Scalar(1);
    return v;
}

Matrix<Rational> GradedBasedRing::left_mult_matrix(size_t i) const {
    Matrix<Rational> m(dim(), std::vector<Rational>(dim(), Rational(0)));
    for (size_t j = 0; j < dim(); ++j)
        for (size_t k = 0; k < dim(); ++k) m[k][j] = Rational(structure_constant(i, j, k));
    return m;
}

Matrix<Rational> GradedBasedRing::right_mult_matrix(size_t i) const {
    Matrix<Rational> m(dim(), std::vector<Rational>(dim(), Rational(0)));
    for (size_t j = 0; j < dim(); ++j)
        for (size_t k = 0; k < dim(); ++k) m[k][j] = Rational(structure_constant(j, i, k));
    return m;
}

std::vector<Scalar> GradedBasedRing::star(const std::vector<Scalar>& x) const {
    std::vector<Scalar> out(dim(), Scalar(0));
    for (size_t i = 0; i < dim(); ++i) out[dual[i]] = x[i].conj();
    return out;
}

Scalar GradedBasedRing::tau(const std::vector<Scalar>& x) const {
    Scalar acc(0);
    for (size_t u : unit) acc += x[u];
    return acc;
}

Scalar GradedBasedRing::frob_form(const std::vector<Scalar>& x, const std::vector<Scalar>& y) const {
    if (x.size() != dim() || y.size() != dim()) throw RingMismatch();
    return tau(multiply(x, y));
}

Scalar GradedBasedRing::herm_form(const std::vector<Scalar>& x, const std::vector<Scalar>& y) const {
    if (x.size() != dim() || y.size() != dim()) throw RingMismatch();
    return tau(multiply(x, star(y)));
}

namespace {
// Scale a rational vector so the first nonzero entry is positive and all
// entries are coprime integers; keeps kernel bases deterministic.
void canonical_scale(std::vector<Rational>& v) {
    Integer lcm_den = 1;
    for (const auto& c : v)
        if (!c.is_zero()) lcm_den = boost::multiprecision::lcm(lcm_den, denominator(c));
    Integer gcd_num = 0;
    for (auto& c : v) {
        c *= Rational(lcm_den);
        if (!c.is_zero()) gcd_num = boost::multiprecision::gcd(gcd_num, numerator(c));
    }
    if (gcd_num != 0) {
        for (auto& c : v) c /= Rational(gcd_num);
        // first nonzero positive
        for (const auto& c : v) {
            if (c.is_zero()) continue;
            if (c < 0)
                for (auto& d : v) d = -d;
            break;
        }
    }
}
}  // namespace

Matrix<Rational> GradedBasedRing::relative_center(unsigned a) const {
    auto idx = grade_indices(a);
    auto zero_idx = grade_indices(0);
    // Unknowns: coefficients over grade-a basis. Constraints: for each grade-0
    // basis c and each target coordinate k: sum_j x_j (N_{c,j}^k - N_{j,c}^k) = 0.
    Matrix<Rational> sys;
    for (size_t c : zero_idx) {
        for (size_t k = 0; k < dim(); ++k) {
            std::vector<Rational> row(idx.size(), Rational(0));
            bool nonzero = false;
            for (size_t jj = 0; jj < idx.size(); ++jj) {
                long d = structure_constant(c, idx[jj], k) - structure_constant(idx[jj], c, k);
                if (d != 0) {
                    row[jj] = Rational(d);
                    nonzero = true;
                }
            }
            if (nonzero) sys.push_back(std::move(row));
        }
    }
    Matrix<Rational> kern;
    if (sys.empty()) {
        // whole grade-a span commutes
        for (size_t jj = 0; jj < idx.size(); ++jj) {
            std::vector<Rational> v(idx.size(), Rational(0));
            v[jj] = Rational(1);
            kern.push_back(std::move(v));
        }
    } else {
        kern = kernel_basis(std::move(sys));
    }
    Matrix<Rational> out;
    for (auto& kv : kern) {
        std::vector<Rational> full(dim(), Rational(0));
        for (size_t jj = 0; jj < idx.size(); ++jj) full[idx[jj]] = kv[jj];
        canonical_scale(full);
        out.push_back(std::move(full));
    }
    return out;
}

Matrix<Rational> GradedBasedRing::grade_zero_center() const {
    // center of the grade-0 subring, inside grade 0
    auto idx = grade_indices(0);
    Matrix<Rational> sys;
    for (size_t c : idx) {
        for (size_t k : idx) {
            std::vector<Rational> row(idx.size(), Rational(0));
            bool nonzero = false;
            for (size_t jj = 0; jj < idx.size(); ++jj) {
                long d = structure_constant(c, idx[jj], k) - structure_constant(idx[jj], c, k);
                if (d != 0) {
                    row[jj] = Rational(d);
                    nonzero = true;
                }
            }
            if (nonzero) sys.push_back(std::move(row));
        }
    }
    Matrix<Rational> kern;
    if (sys.empty()) {
        for (size_t jj = 0; jj < idx.size(); ++jj) {
            std::vector<Rational> v(idx.size(), Rational(0));
            v[jj] = Rational(1);
            kern.push_back(std::move(v));
        }
    } else {
        kern = kernel_basis(std::move(sys));
    }
    Matrix<Rational> out;
    for (auto& kv : kern) {
        std::vector<Rational> full(dim(), Rational(0));
        for (size_t jj = 0; jj < idx.size(); ++jj) full[idx[jj]] = kv[jj];
        canonical_scale(full);
        out.push_back(std::move(full));
    }
    return out;
}

bool GradedBasedRing::grade_zero_commutative() const {
    auto idx = grade_indices(0);
    for (size_t i : idx)
        for (size_t j : idx)
            for (size_t k : idx)
                if (structure_constant(i, j, k) != structure_constant(j, i, k)) return false;
    return true;
}

const ValidationReport& GradedBasedRing::validate() const {
    if (validation_) return *validation_;
    ValidationReport rep;
    size_t d = dim();

    // shape
    bool shape_ok = grades.size() == d && dual.size() == d && !unit.empty() && grading_order >= 1;
    for (size_t u : unit) shape_ok = shape_ok && u < d;
    rep.add("shape", shape_ok, shape_ok ? "" : "inconsistent basis/grade/dual sizes", "structure");
    if (!shape_ok) {
        validation_ = rep;
        return *validation_;
    }

    // nonnegativity of structure constants
    bool nonneg = true;
    for (const auto& [ijk, n] : constants)
        if (n < 0) nonneg = false;
    rep.add("nonnegative-constants", nonneg, "", "structure");

    // grading additivity
    bool additive = true;
    std::string add_detail;
    for (const auto& [ijk, n] : constants) {
        if (n == 0) continue;
        const auto& [i, j, k] = ijk;
        if ((grades[i] + grades[j]) % grading_order != grades[k]) {
            additive = false;
            add_detail = "N[" + labels[i] + "," + labels[j] + ";" + labels[k] + "] violates grading";
            break;
        }
    }
    rep.add("grading-additivity", additive, add_detail, "grading");

    // unit law
    bool unit_ok = true;
    {
        auto e = unit_element();
        for (size_t i = 0; i < d && unit_ok; ++i) {
            auto b = basis_element(i);
            auto left = multiply(e, b);
            auto right = multiply(b, e);
            for (size_t k = 0; k < d; ++k) {
                Scalar expect = (k == i) ? Scalar(1) : Scalar(0);
                if (left[k] != expect || right[k] != expect) {
                    unit_ok = false;
                    break;
                }
            }
        }
    }
    rep.add("unit-law", unit_ok, "", "structure");

    // associativity
    bool assoc = true;
    std::string assoc_detail;
    for (size_t i = 0; i < d && assoc; ++i)
        for (size_t j = 0; j < d && assoc; ++j)
            for (size_t l = 0; l < d && assoc; ++l)
                for (size_t m = 0; m < d; ++m) {
                    long lhs = 0, rhs = 0;
                    for (size_t k = 0; k < d; ++k) {
                        lhs += structure_constant(i, j, k) * structure_constant(k, l, m);
                        rhs += structure_constant(j, l, k) * structure_constant(i, k, m);
                    }
                    if (lhs != rhs) {
                        assoc = false;
                        assoc_detail = "(" + labels[i] + "*" + labels[j] + ")*" + labels[l];
                        break;
                    }
                }
    rep.add("associativity", assoc, assoc_detail, "structure");

    // duality compatibility
    bool dual_ok = true;
    std::string dual_detail;
    for (size_t i = 0; i < d; ++i)
        if (dual[dual[i]] != i) {
            dual_ok = false;
            dual_detail = "dual not involutive at " + labels[i];
        }
    if (dual_ok)
        for (size_t i = 0; i < d; ++i)
            if (grades[dual[i]] != normalize_grade(-(long)grades[i])) {
                dual_ok = false;
                dual_detail = "grade(dual) != -grade at " + labels[i];
                break;
            }
    if (dual_ok)
        for (size_t u : unit)
            if (std::find(unit.begin(), unit.end(), dual[u]) == unit.end()) {
                dual_ok = false;
                dual_detail = "dual of unit summand not a unit summand";
                break;
            }
    if (dual_ok) {
        for (const auto& [ijk, n] : constants) {
            const auto& [i, j, k] = ijk;
            if (structure_constant(dual[j], dual[i], dual[k]) != n) {
                dual_ok = false;
                dual_detail = "N_{ij}^k != N_{j*i*}^{k*} at (" + labels[i] + "," + labels[j] + ";" +
                              labels[k] + ")";
                break;
            }
        }
    }
    rep.add("duality-compatibility", dual_ok, dual_detail, "duality");

    // basis orthonormality <b_i, b_j> = delta_ij
    bool ortho = true;
    std::string ortho_detail;
    for (size_t i = 0; i < d && ortho; ++i)
        for (size_t j = 0; j < d; ++j) {
            long v = 0;
            for (size_t u : unit) v += structure_constant(i, dual[j], u);
            if (v != (i == j ? 1 : 0)) {
                ortho = false;
                ortho_detail = "<" + labels[i] + "," + labels[j] + "> = " + std::to_string(v);
                break;
            }
        }
    rep.add("basis-orthonormality", ortho, ortho_detail, "frobenius");

    // perfect pairing per grade: [tau(b_i b_j)], i in grade a, j in grade -a
    bool pairing = true;
    std::string pairing_detail;
    for (unsigned a = 0; a < grading_order && pairing; ++a) {
        auto ia = grade_indices(a);
        auto ib = grade_indices(normalize_grade(-(long)a));
        if (ia.size() != ib.size()) {
            pairing = false;
            pairing_detail = "grade components " + std::to_string(a) + " and -" + std::to_string(a) +
                             " have different dimensions";
            break;
        }
        Matrix<Rational> g(ia.size(), std::vector<Rational>(ib.size(), Rational(0)));
        for (size_t r = 0; r < ia.size(); ++r)
            for (size_t c = 0; c < ib.size(); ++c) {
                long v = 0;
                for (size_t u : unit) v += structure_constant(ia[r], ib[c], u);
                g[r][c] = Rational(v);
            }
        if (rank(g) != ia.size()) {
            pairing = false;
            pairing_detail = "degenerate pairing between grades " + std::to_string(a) + " and -" +
                             std::to_string(a);
        }
    }
    rep.add("perfect-pairing", pairing, pairing_detail, "frobenius");

    validation_ = std::move(rep);
    return *validation_;
}

void GradedBasedRing::require_valid() const {
    const auto& rep = validate();
    if (!rep.all_pass()) {
        auto fails = rep.failures();
        throw InvalidRing(name + ": " + (fails.empty() ? "unknown" : fails.front()));
    }
}

}  // namespace fusionkit
