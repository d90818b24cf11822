#include "fusionkit/characters.hpp"

#include <algorithm>

namespace fusionkit {

namespace {

// Characteristic polynomial of a rational matrix (Faddeev-LeVerrier),
// coefficient i of x^i, monic of degree n.
std::vector<Rational> charpoly(const Matrix<Rational>& a) {
    size_t n = a.size();
    std::vector<Rational> c(n + 1, Rational(0));
    c[n] = 1;
    Matrix<Rational> m(n, std::vector<Rational>(n, Rational(0)));
    for (size_t i = 0; i < n; ++i) m[i][i] = 1;
    for (size_t k = 1; k <= n; ++k) {
        // m <- a * m
        Matrix<Rational> am(n, std::vector<Rational>(n, Rational(0)));
        for (size_t i = 0; i < n; ++i)
            for (size_t l = 0; l < n; ++l) {
                if (a[i][l].is_zero()) continue;
                for (size_t j = 0; j < n; ++j) am[i][j] += a[i][l] * m[l][j];
            }
        Rational tr(0);
        for (size_t i = 0; i < n; ++i) tr += am[i][i];
        c[n - k] = -tr / Rational(k);
        m = std::move(am);
        for (size_t i = 0; i < n; ++i) m[i][i] += c[n - k];
    }
    return c;
}

std::vector<Rational> poly_derivative(const std::vector<Rational>& p) {
    std::vector<Rational> d;
    for (size_t i = 1; i < p.size(); ++i) d.push_back(Rational((long)i) * p[i]);
    if (d.empty()) d.push_back(Rational(0));
    return d;
}

void trim(std::vector<Rational>& p) {
    while (p.size() > 1 && p.back().is_zero()) p.pop_back();
}

// gcd of rational polynomials, monic result.
std::vector<Rational> poly_gcd(std::vector<Rational> a, std::vector<Rational> b) {
    trim(a);
    trim(b);
    while (!(b.size() == 1 && b[0].is_zero())) {
        // a mod b
        std::vector<Rational> r = a;
        while (r.size() >= b.size() && !(r.size() == 1 && r[0].is_zero())) {
            Rational f = r.back() / b.back();
            size_t shift = r.size() - b.size();
            for (size_t i = 0; i < b.size(); ++i) r[shift + i] -= f * b[i];
            trim(r);
            if (r.size() < b.size()) break;
            if (r.back().is_zero()) trim(r);
        }
        a = std::move(b);
        b = std::move(r);
        trim(b);
    }
    if (!a.back().is_zero()) {
        Rational lead = a.back();
        for (auto& x : a) x /= lead;
    }
    return a;
}

bool squarefree(const std::vector<Rational>& p) {
    return poly_gcd(p, poly_derivative(p)).size() == 1;
}

Matrix<Scalar> to_scalar_matrix(const Matrix<Rational>& a) {
    Matrix<Scalar> out(a.size());
    for (size_t i = 0; i < a.size(); ++i)
        for (const auto& v : a[i]) out[i].push_back(Scalar(v));
    return out;
}

}  // namespace

int compare_numeric(const Scalar& a, const Scalar& b) {
    BigComplex za = a.embed(), zb = b.embed();
    BigFloat tol = Precision::tolerance();
    if (za.re() < zb.re() - tol) return -1;
    if (za.re() > zb.re() + tol) return 1;
    if (za.im() < zb.im() - tol) return -1;
    if (za.im() > zb.im() + tol) return 1;
    return 0;
}

std::vector<JointCharacter> simultaneous_characters(const std::vector<Matrix<Rational>>& mats,
                                                    unsigned conductor_bound) {
    if (mats.empty()) return {};
    size_t n = mats[0].size();
    if (n == 0) return {};

    // A deterministic weighted combination whose eigenvalues separate the
    // characters; escalating weights escape any accidental coincidence.
    std::vector<Rational> p;
    Matrix<Rational> t(n, std::vector<Rational>(n, Rational(0)));
    bool separated = false;
    for (unsigned attempt = 1; attempt <= 40 && !separated; ++attempt) {
        for (auto& row : t) std::fill(row.begin(), row.end(), Rational(0));
        for (size_t i = 0; i < mats.size(); ++i) {
            Rational w(boost::multiprecision::pow(Integer((long)i + 2), attempt));
            for (size_t r = 0; r < n; ++r)
                for (size_t c = 0; c < n; ++c) t[r][c] += w * mats[i][r][c];
        }
        p = charpoly(t);
        separated = squarefree(p);
    }
    if (!separated)
        throw SemisimplicityFailure("no weighted regular element separates the eigenvalues");

    auto roots = poly_roots(p);
    std::vector<JointCharacter> out;
    for (const auto& z : roots) {
        JointCharacter jc;
        auto rec = recognize_root(p, z, conductor_bound);
        Scalar mu = rec ? Scalar(*rec) : Scalar(z);
        jc.exact = rec.has_value();

        Matrix<Scalar> shifted = to_scalar_matrix(t);
        for (size_t i = 0; i < n; ++i) shifted[i][i] -= mu;
        auto kern = kernel_basis(std::move(shifted));
        if (kern.size() != 1)
            throw SemisimplicityFailure("eigenspace of a simple eigenvalue is not a line");
        jc.eigenvector = std::move(kern[0]);

        size_t pivot = 0;
        while (pivot < n && jc.eigenvector[pivot].is_zero()) ++pivot;
        for (const auto& m : mats) {
            auto w = mat_vec(to_scalar_matrix(m), jc.eigenvector);
            Scalar val = w[pivot] / jc.eigenvector[pivot];
            for (size_t k = 0; k < n; ++k)
                if (w[k] != val * jc.eigenvector[k])
                    throw SemisimplicityFailure("joint eigenvector verification failed");
            jc.values.push_back(std::move(val));
        }
        out.push_back(std::move(jc));
    }
    return out;
}

Scalar CharacterTheory::character_value(size_t e, const std::vector<Scalar>& x) const {
    Scalar acc(0);
    for (size_t k = 0; k < grade0.size(); ++k) {
        const Scalar& c = x[grade0[k]];
        if (!c.is_zero()) acc += c * irreps[e].values[k];
    }
    return acc;
}

namespace {

// Left-regular matrices of the grade-0 subring, restricted to grade 0.
std::vector<Matrix<Rational>> grade0_regular(const GradedBasedRing& ring,
                                             const std::vector<size_t>& g0) {
    size_t n = g0.size();
    std::vector<Matrix<Rational>> mats;
    for (size_t i : g0) {
        Matrix<Rational> m(n, std::vector<Rational>(n, Rational(0)));
        for (size_t jj = 0; jj < n; ++jj)
            for (size_t k = 0; k < n; ++k)
                m[k][jj] = Rational(ring.structure_constant(i, g0[jj], g0[k]));
        mats.push_back(std::move(m));
    }
    return mats;
}

void check_trace_form(const std::vector<Matrix<Rational>>& mats) {
    size_t n = mats.size();
    Matrix<Rational> gram(n, std::vector<Rational>(n, Rational(0)));
    for (size_t i = 0; i < n; ++i)
        for (size_t jj = 0; jj < n; ++jj) {
            Rational tr(0);
            for (size_t r = 0; r < n; ++r)
                for (size_t c = 0; c < n; ++c) tr += mats[i][r][c] * mats[jj][c][r];
            gram[i][jj] = tr;
        }
    if (rank(gram) != n)
        throw SemisimplicityFailure("regular trace form is degenerate");
}

void sort_and_label(std::vector<IrreducibleCharacter>& irreps) {
    std::stable_sort(irreps.begin(), irreps.end(),
                     [](const IrreducibleCharacter& a, const IrreducibleCharacter& b) {
                         int d = compare_numeric(a.dim, b.dim);
                         if (d != 0) return d < 0;
                         for (size_t i = 0; i < a.values.size(); ++i) {
                             int c = compare_numeric(a.values[i], b.values[i]);
                             if (c != 0) return c < 0;
                         }
                         return false;
                     });
    for (size_t i = 0; i < irreps.size(); ++i) irreps[i].label = "E" + std::to_string(i + 1);
}

Scalar unit_value(const GradedBasedRing& ring, const std::vector<size_t>& g0,
                  const std::vector<Scalar>& values) {
    Scalar acc(0);
    for (size_t u : ring.unit) {
        auto it = std::find(g0.begin(), g0.end(), u);
        acc += values[(size_t)(it - g0.begin())];
    }
    return acc;
}

}  // namespace

CharacterTheory commutative_characters(const GradedBasedRing& ring) {
    ring.require_valid();
    if (!ring.grade_zero_commutative()) throw NotCommutative(ring.name);
    auto g0 = ring.grade_indices(0);
    auto mats = grade0_regular(ring, g0);
    check_trace_form(mats);

    CharacterTheory th;
    th.ring = &ring;
    th.grade0 = g0;
    th.center_basis = ring.grade_zero_center();

    auto joint = simultaneous_characters(mats);
    if (joint.size() != g0.size())
        throw SemisimplicityFailure("character count differs from the algebra dimension");
    for (auto& jc : joint) {
        IrreducibleCharacter ch;
        ch.values = jc.values;
        ch.exact = jc.exact;
        ch.dim = unit_value(ring, g0, ch.values);
        if (ch.dim != Scalar(1))
            throw SemisimplicityFailure("1-dimensional character does not send the unit to 1");
        ch.dim = Scalar(1);
        Scalar f(0);
        for (const auto& v : ch.values) f += v * v.conj();
        ch.codegree = f;
        for (const auto& c : th.center_basis) {
            Scalar acc(0);
            for (size_t k = 0; k < g0.size(); ++k)
                if (!c[g0[k]].is_zero()) acc += Scalar(c[g0[k]]) * ch.values[k];
            ch.central_values.push_back(std::move(acc));
        }
        ch.idempotent.assign(ring.dim(), Scalar(0));
        for (size_t k = 0; k < g0.size(); ++k)
            ch.idempotent[ring.dual[g0[k]]] += ch.values[k] / f;
        th.irreps.push_back(std::move(ch));
    }

    // multiplicativity and idempotent sanity
    for (const auto& ch : th.irreps) {
        for (size_t i = 0; i < g0.size(); ++i)
            for (size_t jj = 0; jj < g0.size(); ++jj) {
                Scalar rhs(0);
                for (size_t k = 0; k < g0.size(); ++k) {
                    long nn = ring.structure_constant(g0[i], g0[jj], g0[k]);
                    if (nn != 0) rhs += Scalar(nn) * ch.values[k];
                }
                if (ch.values[i] * ch.values[jj] != rhs)
                    throw SemisimplicityFailure("character is not multiplicative");
            }
        auto sq = ring.multiply(ch.idempotent, ch.idempotent);
        for (size_t k = 0; k < ring.dim(); ++k)
            if (sq[k] != ch.idempotent[k])
                throw SemisimplicityFailure("central idempotent fails e*e = e");
    }

    sort_and_label(th.irreps);
    return th;
}

CharacterTheory irreducible_characters(const GradedBasedRing& ring) {
    if (ring.grade_zero_commutative()) return commutative_characters(ring);
    ring.require_valid();
    auto g0 = ring.grade_indices(0);
    size_t n = g0.size();
    auto mats = grade0_regular(ring, g0);
    check_trace_form(mats);

    CharacterTheory th;
    th.ring = &ring;
    th.grade0 = g0;
    th.center_basis = ring.grade_zero_center();
    const auto& cb = th.center_basis;
    size_t r = cb.size();

    // Multiplication matrices of the center in its own coordinates.
    Matrix<Rational> coord(n, std::vector<Rational>(r, Rational(0)));
    for (size_t b = 0; b < r; ++b)
        for (size_t k = 0; k < n; ++k) coord[k][b] = cb[b][g0[k]];
    std::vector<Matrix<Rational>> cmats(r, Matrix<Rational>(r, std::vector<Rational>(r)));
    for (size_t i = 0; i < r; ++i)
        for (size_t jj = 0; jj < r; ++jj) {
            auto prod = ring.multiply(cb[i], cb[jj]);
            std::vector<Rational> rhs(n);
            for (size_t k = 0; k < n; ++k) rhs[k] = prod[g0[k]];
            auto x = solve(coord, rhs);
            if (!x) throw SemisimplicityFailure("center is not closed under multiplication");
            for (size_t k = 0; k < r; ++k) cmats[i][k][jj] = (*x)[k];
        }

    auto joint = simultaneous_characters(cmats);
    if (joint.size() != r)
        throw SemisimplicityFailure("center character count differs from its dimension");

    // Evaluation matrix chi_j(c_b); primitive idempotents solve chi_j(e) = delta.
    Matrix<Scalar> eval(r, std::vector<Scalar>(r));
    for (size_t jj = 0; jj < r; ++jj)
        for (size_t b = 0; b < r; ++b) eval[jj][b] = joint[jj].values[b];

    std::vector<Rational> reg_trace(n);
    for (size_t k = 0; k < n; ++k) {
        Rational tr(0);
        for (size_t d = 0; d < n; ++d) tr += mats[k][d][d];
        reg_trace[k] = tr;
    }
    auto trace_of = [&](const std::vector<Scalar>& x) {
        Scalar acc(0);
        for (size_t k = 0; k < n; ++k)
            if (!x[g0[k]].is_zero()) acc += x[g0[k]] * Scalar(reg_trace[k]);
        return acc;
    };

    for (size_t jj = 0; jj < r; ++jj) {
        std::vector<Scalar> delta(r, Scalar(0));
        delta[jj] = Scalar(1);
        auto x = solve(eval, delta);
        if (!x) throw SemisimplicityFailure("center evaluation matrix is singular");
        std::vector<Scalar> e(ring.dim(), Scalar(0));
        for (size_t b = 0; b < r; ++b)
            for (size_t k = 0; k < n; ++k) e[g0[k]] += (*x)[b] * Scalar(cb[b][g0[k]]);

        IrreducibleCharacter ch;
        ch.exact = joint[jj].exact;

        Scalar dim_sq = trace_of(e);
        auto dsq = dim_sq.as_integer();
        if (!dsq || *dsq <= 0) throw NonIntegerDimension("tr_reg(e) = " + dim_sq.str());
        Integer d = boost::multiprecision::sqrt(*dsq);
        if (d * d != *dsq)
            throw NonIntegerDimension("tr_reg(e) = " + dim_sq.str() + " is not a perfect square");
        ch.dim = Scalar(Rational(d));

        for (size_t k = 0; k < n; ++k) {
            auto eb = ring.multiply(e, ring.basis_element(g0[k]));
            ch.values.push_back(trace_of(eb) / ch.dim);
        }
        Scalar ip(0);
        for (const auto& v : ch.values) ip += v * v.conj();
        ch.codegree = ip / ch.dim;
        ch.central_values = joint[jj].values;

        // cross-check: alpha_E / f_E reproduces the center-solved idempotent
        std::vector<Scalar> alpha(ring.dim(), Scalar(0));
        for (size_t k = 0; k < n; ++k)
            alpha[ring.dual[g0[k]]] += ch.values[k] / ch.codegree;
        for (size_t k = 0; k < ring.dim(); ++k)
            if (alpha[k] != e[k])
                throw SemisimplicityFailure("alpha_E/f_E disagrees with the center idempotent");
        ch.idempotent = std::move(e);
        th.irreps.push_back(std::move(ch));
    }

    // completeness: sum of dim^2 equals the algebra dimension
    Scalar total(0);
    for (const auto& ch : th.irreps) total += ch.dim * ch.dim;
    if (total != Scalar(Rational((long)n)))
        throw SemisimplicityFailure("sum of squared dimensions misses the algebra dimension");

    sort_and_label(th.irreps);
    return th;
}

std::vector<std::vector<Scalar>> central_idempotents(const CharacterTheory& th) {
    std::vector<std::vector<Scalar>> out;
    for (const auto& ch : th.irreps) out.push_back(ch.idempotent);
    return out;
}

std::vector<std::vector<Scalar>> embed_rho(const CenterBundle& bundle,
                                           const CharacterTheory& theory_d) {
    bundle.require_verified();
    const auto& z = bundle.center();
    auto zg0 = z.grade_indices(0);
    std::vector<std::vector<Scalar>> out;
    for (size_t e = 0; e < theory_d.irreps.size(); ++e) {
        const auto& ch = theory_d.irreps[e];
        std::vector<Scalar> rho;
        for (size_t zi : zg0) {
            Scalar acc(0);
            for (size_t k = 0; k < theory_d.grade0.size(); ++k) {
                const Rational& c = bundle.zeta[zi][theory_d.grade0[k]];
                if (!c.is_zero()) acc += Scalar(c) * ch.values[k];
            }
            rho.push_back(acc / ch.dim);
        }
        out.push_back(std::move(rho));
    }
    for (size_t i = 0; i < out.size(); ++i)
        for (size_t jj = i + 1; jj < out.size(); ++jj)
            if (out[i] == out[jj])
                throw InjectivityFailure(theory_d.irreps[i].label + " and " +
                                         theory_d.irreps[jj].label + " share one rho");
    return out;
}

SMatrixBijection smatrix_characters(const SMatrixData& s, const CharacterTheory& theory_z) {
    size_t n = theory_z.grade0.size();
    SMatrixBijection bij;
    bij.row_to_char.assign(n, n);
    bij.char_to_row.assign(theory_z.irreps.size(), n);
    for (size_t a = 0; a < n; ++a) {
        std::vector<Scalar> vals;
        for (size_t b = 0; b < n; ++b) vals.push_back(s.entries[a][b] / s.dims[a]);
        size_t match = n;
        for (size_t e = 0; e < theory_z.irreps.size(); ++e)
            if (theory_z.irreps[e].values == vals) {
                match = e;
                break;
            }
        if (match == n)
            throw UnmatchedRow("row " + std::to_string(a));
        if (bij.char_to_row[match] != n)
            throw UnmatchedRow("rows " + std::to_string(bij.char_to_row[match]) + " and " +
                               std::to_string(a) + " match the same character");
        bij.row_to_char[a] = match;
        bij.char_to_row[match] = a;
    }
    return bij;
}

}  // namespace fusionkit
