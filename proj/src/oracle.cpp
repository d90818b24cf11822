#include "fusionkit/oracle.hpp"

#include <algorithm>
#include <random>

namespace fusionkit {

namespace {

using CMatrix = std::vector<std::vector<BigComplex>>;

CMatrix cmul(const CMatrix& a, const CMatrix& b) {
    size_t n = a.size();
    CMatrix out(n, std::vector<BigComplex>(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t k = 0; k < n; ++k)
            for (size_t j = 0; j < n; ++j) out[i][j] = out[i][j] + a[i][k] * b[k][j];
    return out;
}

// Characteristic polynomial by the numeric Leverrier recursion.
std::vector<BigComplex> ccharpoly(const CMatrix& a) {
    size_t n = a.size();
    std::vector<BigComplex> c(n + 1);
    c[n] = BigComplex(BigFloat(1), BigFloat(0));
    CMatrix m(n, std::vector<BigComplex>(n));
    for (size_t i = 0; i < n; ++i) m[i][i] = BigComplex(BigFloat(1), BigFloat(0));
    for (size_t k = 1; k <= n; ++k) {
        CMatrix am = cmul(a, m);
        BigComplex tr;
        for (size_t i = 0; i < n; ++i) tr = tr + am[i][i];
        c[n - k] = -(tr / BigComplex(BigFloat((long)k), BigFloat(0)));
        m = std::move(am);
        for (size_t i = 0; i < n; ++i) m[i][i] = m[i][i] + c[n - k];
    }
    return c;
}

// Null vector of a numerically singular matrix: Gaussian elimination with
// partial pivoting, free variable set to 1.
std::vector<BigComplex> cnullvector(CMatrix a, const BigFloat& tol) {
    size_t n = a.size();
    std::vector<size_t> pivot_col;
    size_t r = 0;
    for (size_t c = 0; c < n && r < n; ++c) {
        size_t best = r;
        for (size_t i = r + 1; i < n; ++i)
            if (a[i][c].abs() > a[best][c].abs()) best = i;
        if (a[best][c].abs() <= tol) continue;
        std::swap(a[best], a[r]);
        BigComplex inv = BigComplex(BigFloat(1), BigFloat(0)) / a[r][c];
        for (size_t j = 0; j < n; ++j) a[r][j] = a[r][j] * inv;
        for (size_t i = 0; i < n; ++i) {
            if (i == r) continue;
            BigComplex f = a[i][c];
            for (size_t j = 0; j < n; ++j) a[i][j] = a[i][j] - f * a[r][j];
        }
        pivot_col.push_back(c);
        ++r;
    }
    if (pivot_col.size() == n) throw DegenerateEigenproblem("shifted matrix is nonsingular");
    // first free column
    size_t fc = 0;
    while (fc < pivot_col.size() && pivot_col[fc] == fc) ++fc;
    std::vector<BigComplex> v(n);
    v[fc] = BigComplex(BigFloat(1), BigFloat(0));
    for (size_t i = 0; i < pivot_col.size(); ++i) v[pivot_col[i]] = -a[i][fc];
    return v;
}

std::vector<std::vector<BigComplex>> try_characters(const GradedBasedRing& ring,
                                                    const OracleConfig& cfg) {
    auto g0 = ring.grade_indices(0);
    size_t n = g0.size();

    std::mt19937_64 rng(cfg.seed);
    std::uniform_int_distribution<long> dist(1, 1000);
    CMatrix regular(n, std::vector<BigComplex>(n));
    std::vector<CMatrix> left;
    for (size_t i : g0) {
        CMatrix m(n, std::vector<BigComplex>(n));
        for (size_t jj = 0; jj < n; ++jj)
            for (size_t k = 0; k < n; ++k)
                m[k][jj] = BigComplex(BigFloat(ring.structure_constant(i, g0[jj], g0[k])),
                                      BigFloat(0));
        BigFloat w(dist(rng));
        for (size_t r = 0; r < n; ++r)
            for (size_t c = 0; c < n; ++c)
                regular[r][c] = regular[r][c] + BigComplex(w, BigFloat(0)) * m[r][c];
        left.push_back(std::move(m));
    }

    auto roots = poly_roots(ccharpoly(regular));
    for (size_t i = 0; i < roots.size(); ++i)
        for (size_t jj = i + 1; jj < roots.size(); ++jj)
            if ((roots[i] - roots[jj]).abs() <= cfg.tolerance)
                throw DegenerateEigenproblem("coincident eigenvalues of the regular element");

    std::vector<std::vector<BigComplex>> chars;
    for (const auto& mu : roots) {
        CMatrix shifted = regular;
        for (size_t i = 0; i < n; ++i) shifted[i][i] = shifted[i][i] - mu;
        auto v = cnullvector(std::move(shifted), cfg.tolerance);
        size_t k = 0;
        for (size_t i = 1; i < n; ++i)
            if (v[i].abs() > v[k].abs()) k = i;
        std::vector<BigComplex> vals;
        for (const auto& m : left) {
            BigComplex acc;
            for (size_t j = 0; j < n; ++j) acc = acc + m[k][j] * v[j];
            vals.push_back(acc / v[k]);
        }
        chars.push_back(std::move(vals));
    }

    std::sort(chars.begin(), chars.end(),
              [&](const std::vector<BigComplex>& a, const std::vector<BigComplex>& b) {
                  for (size_t i = 0; i < a.size(); ++i) {
                      if (a[i].re() < b[i].re() - cfg.tolerance) return true;
                      if (a[i].re() > b[i].re() + cfg.tolerance) return false;
                      if (a[i].im() < b[i].im() - cfg.tolerance) return true;
                      if (a[i].im() > b[i].im() + cfg.tolerance) return false;
                  }
                  return false;
              });
    return chars;
}

}  // namespace

std::vector<std::vector<BigComplex>> oracle_characters(const GradedBasedRing& ring,
                                                       const OracleConfig& cfg) {
    unsigned saved = Precision::bits();
    OracleConfig local = cfg;
    for (unsigned attempt = 0;; ++attempt) {
        try {
            Precision::set_bits(local.precision);
            auto out = try_characters(ring, local);
            Precision::set_bits(saved);
            return out;
        } catch (const DegenerateEigenproblem&) {
            Precision::set_bits(saved);
            if (attempt >= 2) throw;
            local.precision *= 2;
            local.seed += 1;
        } catch (...) {
            Precision::set_bits(saved);
            throw;
        }
    }
}

std::vector<std::vector<Integer>> oracle_multiplicities(const CenterBundle& bundle) {
    const GradedBasedRing& z = bundle.center();
    std::vector<std::vector<Integer>> table;
    for (size_t a = 0; a < z.dim(); ++a) {
        if (z.grades[a] != 1 % z.grading_order) continue;
        std::vector<Integer> row;
        for (size_t m = 0; m < bundle.D.dim(); ++m) {
            if (bundle.D.grades[m] != 1 % bundle.D.grading_order) continue;
            const Rational& c = bundle.zeta[a][m];
            if (denominator(c) != 1) throw ParseError("zeta entry " + c.str() + " is not an integer");
            row.push_back(numerator(c));
        }
        table.push_back(std::move(row));
    }
    return table;
}

VerificationReport oracle_orthogonality(const CenterBundle& bundle,
                                        const CharacterTheory& theory_d,
                                        const std::vector<TwistedExtension>& extensions,
                                        const OracleConfig& cfg) {
    VerificationReport rep;
    auto grade1 = bundle.D.grade_indices(1);
    for (size_t i = 0; i < extensions.size(); ++i)
        for (size_t jj = 0; jj < extensions.size(); ++jj) {
            BigComplex acc;
            for (size_t m : grade1)
                acc = acc + extensions[i].chi[m].embed() * extensions[jj].chi[m].embed().conj();
            std::string id = "orthogonality[" +
                             theory_d.irreps[extensions[i].irrep].label + "," +
                             theory_d.irreps[extensions[jj].irrep].label + "]";
            if (i == jj) {
                const auto& irr = theory_d.irreps[extensions[i].irrep];
                BigComplex want = (irr.codegree * irr.dim).embed();
                rep.add(id, acc.near(want, cfg.tolerance),
                        "sum = " + acc.str() + ", expected f_E * dim E", "oracle");
            } else {
                rep.add(id, acc.abs() <= cfg.tolerance,
                        "off-diagonal sum = " + acc.str(), "oracle");
            }
        }
    return rep;
}

}  // namespace fusionkit
