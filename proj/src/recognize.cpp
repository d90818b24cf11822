#include "fusionkit/scalars.hpp"

#include <algorithm>
#include <numeric>

namespace fusionkit {

// ---------------------------------------------------------------------------
// Durand-Kerner root finder.

std::vector<BigComplex> poly_roots(const std::vector<BigComplex>& coeffs_in) {
    std::vector<BigComplex> coeffs = coeffs_in;
    while (!coeffs.empty() && coeffs.back().abs().is_zero()) coeffs.pop_back();
    if (coeffs.size() <= 1) return {};
    size_t deg = coeffs.size() - 1;
    // normalize monic
    for (size_t i = 0; i < deg; ++i) coeffs[i] = coeffs[i] / coeffs[deg];
    coeffs[deg] = BigComplex(Rational(1));

    auto eval = [&](const BigComplex& x) {
        BigComplex acc = coeffs[deg];
        for (size_t i = deg; i-- > 0;) acc = acc * x + coeffs[i];
        return acc;
    };

    std::vector<BigComplex> z(deg);
    BigComplex seed(BigFloat("0.4"), BigFloat("0.9"));
    z[0] = seed;
    for (size_t i = 1; i < deg; ++i) z[i] = z[i - 1] * seed;

    BigFloat stop = boost::multiprecision::ldexp(BigFloat(1), -(long)Precision::bits() + 16);
    for (int iter = 0; iter < 1000; ++iter) {
        BigFloat max_step = 0;
        for (size_t i = 0; i < deg; ++i) {
            BigComplex denom(Rational(1));
            for (size_t j = 0; j < deg; ++j)
                if (j != i) denom = denom * (z[i] - z[j]);
            BigComplex step = eval(z[i]) / denom;
            z[i] = z[i] - step;
            BigFloat s = step.abs();
            if (s > max_step) max_step = s;
        }
        if (max_step < stop) break;
    }
    return z;
}

std::vector<BigComplex> poly_roots(const std::vector<Rational>& coeffs) {
    std::vector<BigComplex> c;
    c.reserve(coeffs.size());
    for (const auto& r : coeffs) c.emplace_back(r);
    return poly_roots(c);
}

// ---------------------------------------------------------------------------

std::optional<Rational> rational_reconstruct(const BigFloat& x, const BigFloat& tol,
                                             const Integer& den_bound) {
    // Continued fraction expansion with convergent tracking.
    BigFloat v = x;
    // convergents: h_{-1}=1, h_{-2}=0 ; k_{-1}=0, k_{-2}=1
    Integer h_prev = 1, h_prev2 = 0, k_prev = 0, k_prev2 = 1;
    for (int i = 0; i < 128; ++i) {
        BigFloat fl = boost::multiprecision::floor(v);
        Integer a = fl.convert_to<Integer>();
        Integer h = a * h_prev + h_prev2;
        Integer k = a * k_prev + k_prev2;
        if (k > den_bound) return std::nullopt;
        if (k != 0) {
            BigFloat approx = BigFloat(h) / BigFloat(k);
            if (boost::multiprecision::abs(x - approx) <= tol) return Rational(h, k);
        }
        h_prev2 = h_prev;
        h_prev = h;
        k_prev2 = k_prev;
        k_prev = k;
        BigFloat frac = v - fl;
        if (frac < BigFloat(1e-70) * (boost::multiprecision::abs(v) + 1)) break;
        v = 1 / frac;
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Galois-assignment recognition: find r in Q(zeta_m) whose embeddings under
// every automorphism sigma_k are drawn from a candidate root set, with
// sigma_1(r) pinned to the observed value z. Solving the Vandermonde system
// for the power-basis coefficients and verifying exactly makes wrong guesses
// harmless.

namespace {

// Solve square complex system A x = b by Gaussian elimination with partial pivoting.
std::optional<std::vector<BigComplex>> complex_solve(std::vector<std::vector<BigComplex>> a,
                                                     std::vector<BigComplex> b) {
    size_t n = b.size();
    for (size_t c = 0; c < n; ++c) {
        size_t piv = c;
        BigFloat best = a[c][c].abs();
        for (size_t r = c + 1; r < n; ++r) {
            BigFloat v = a[r][c].abs();
            if (v > best) {
                best = v;
                piv = r;
            }
        }
        if (best.is_zero()) return std::nullopt;
        std::swap(a[piv], a[c]);
        std::swap(b[piv], b[c]);
        for (size_t r = 0; r < n; ++r) {
            if (r == c) continue;
            BigComplex f = a[r][c] / a[c][c];
            for (size_t j = c; j < n; ++j) a[r][j] = a[r][j] - f * a[c][j];
            b[r] = b[r] - f * b[c];
        }
    }
    std::vector<BigComplex> x(n);
    for (size_t i = 0; i < n; ++i) x[i] = b[i] / a[i][i];
    return x;
}

// Candidate generator for one conductor m. candidates_for(k) returns the
// allowed embedding values of the sought element under sigma_k. verify()
// checks a rationalized candidate exactly.
template <class CandidatesFor, class Verify>
std::optional<Cyclo> assignment_search(unsigned m, const BigComplex& z, CandidatesFor candidates_for,
                                       Verify verify, size_t combo_cap) {
    unsigned d = euler_phi(m);
    auto units = units_mod(m);
    // Free representatives: one per conjugate pair {k, m-k}, excluding k=1 pair.
    std::vector<unsigned> reps;
    for (unsigned k : units) {
        unsigned kc = (m - k) % m;
        if (k == 1 % m || kc == 1 % m) continue;
        if (k >= kc) reps.push_back(k);
    }
    size_t n_choices = 1;
    std::vector<std::vector<BigComplex>> cand(reps.size());
    for (size_t i = 0; i < reps.size(); ++i) {
        cand[i] = candidates_for(reps[i]);
        if (cand[i].empty()) return std::nullopt;
        if (n_choices > combo_cap / cand[i].size() + 1) return std::nullopt;
        n_choices *= cand[i].size();
        if (n_choices > combo_cap) return std::nullopt;
    }

    // Vandermonde matrix rows indexed by units, columns by power basis 0..d-1.
    std::vector<std::vector<BigComplex>> vand(units.size(), std::vector<BigComplex>(d));
    for (size_t r = 0; r < units.size(); ++r)
        for (unsigned c = 0; c < d; ++c)
            vand[r][c] = BigComplex::root_of_unity(m, (long)((unsigned long)units[r] * c % m));

    BigFloat tol = Precision::tolerance();
    std::vector<size_t> idx(reps.size(), 0);
    for (size_t combo = 0; combo < n_choices; ++combo) {
        // decode combo
        size_t t = combo;
        for (size_t i = 0; i < reps.size(); ++i) {
            idx[i] = t % cand[i].size();
            t /= cand[i].size();
        }
        std::vector<BigComplex> rhs(units.size());
        bool ok = true;
        for (size_t r = 0; r < units.size() && ok; ++r) {
            unsigned k = units[r];
            unsigned kc = (m - k) % m;
            if (k == 1 % m) {
                rhs[r] = z;
            } else if (kc == 1 % m) {
                rhs[r] = z.conj();
            } else {
                // find pair representative
                unsigned rep = std::max(k, kc);
                auto it = std::find(reps.begin(), reps.end(), rep);
                if (it == reps.end()) {
                    ok = false;
                    break;
                }
                BigComplex val = cand[(size_t)(it - reps.begin())][idx[(size_t)(it - reps.begin())]];
                rhs[r] = (k == rep) ? val : val.conj();
            }
        }
        if (!ok) continue;
        auto sol = complex_solve(vand, rhs);
        if (!sol) continue;
        std::vector<Rational> coeffs(d);
        bool rational_ok = true;
        for (unsigned c = 0; c < d && rational_ok; ++c) {
            if (boost::multiprecision::abs((*sol)[c].im()) > sqrt(tol)) {
                rational_ok = false;
                break;
            }
            auto rec = rational_reconstruct((*sol)[c].re(), sqrt(tol));
            if (!rec) {
                rational_ok = false;
                break;
            }
            coeffs[c] = *rec;
        }
        if (!rational_ok) continue;
        Cyclo candidate(m, coeffs);
        if (!candidate.embed().near(z, sqrt(tol))) continue;
        if (verify(candidate)) return candidate;
    }
    return std::nullopt;
}

std::vector<unsigned> candidate_conductors(unsigned bound) {
    std::vector<unsigned> ms;
    for (unsigned m = 1; m <= bound; ++m) {
        if (m % 4 == 2) continue;
        ms.push_back(m);
    }
    std::stable_sort(ms.begin(), ms.end(),
                     [](unsigned a, unsigned b) { return euler_phi(a) < euler_phi(b); });
    return ms;
}

}  // namespace

std::optional<Cyclo> recognize_root(const std::vector<Rational>& poly, const BigComplex& z,
                                    unsigned conductor_bound) {
    // Exact rational root shortcut.
    if (boost::multiprecision::abs(z.im()) <= Precision::tolerance()) {
        if (auto r = rational_reconstruct(z.re(), Precision::tolerance())) {
            Cyclo c(*r);
            Cyclo acc(Rational(0)), x(*r), p(Rational(1));
            for (const auto& co : poly) {
                acc = acc + Cyclo(co) * p;
                p = p * x;
            }
            if (acc.is_zero()) return c;
        }
    }
    auto roots = poly_roots(poly);
    auto verify = [&](const Cyclo& cand) {
        Cyclo acc(Rational(0)), p(Rational(1));
        for (const auto& co : poly) {
            acc = acc + Cyclo(co) * p;
            p = p * cand;
        }
        return acc.is_zero();
    };
    for (unsigned m : candidate_conductors(conductor_bound)) {
        if (m == 1) continue;  // handled above
        auto candidates_for = [&](unsigned) { return roots; };
        if (auto found = assignment_search(m, z, candidates_for, verify, 4096)) return found;
    }
    return std::nullopt;
}

bool is_totally_positive(const Cyclo& a) {
    if (!(a == a.conj())) throw NotReal();
    if (a.is_zero()) return false;
    unsigned saved = Precision::bits();
    if (saved < 128) Precision::set_bits(128);
    bool ok = true;
    for (unsigned k : units_mod(a.conductor())) {
        Cyclo image = a.conductor() == 1 ? a : a.galois((long)k);
        BigComplex v = image.embed();
        if (v.re() <= 0) {
            ok = false;
            break;
        }
    }
    if (saved < 128) Precision::set_bits(saved);
    return ok;
}

Scalar nth_root_gauge(const Scalar& lambda, unsigned N) {
    if (lambda.is_zero()) throw ZeroArgument();
    if (N == 0) throw std::invalid_argument("N must be positive");
    BigComplex z = lambda.embed().principal_root(N);
    if (N == 1) return lambda;
    if (!lambda.exact()) return Scalar(z);

    const Cyclo& lam = lambda.cyclo();
    unsigned c = lam.conductor();
    unsigned long L = std::lcm((unsigned long)c, (unsigned long)4 * N * c);
    auto verify = [&](const Cyclo& cand) { return cand.pow((long)N) == lam; };
    for (unsigned m : [&] {
             std::vector<unsigned> ds;
             for (unsigned d : divisors((unsigned)L))
                 if (d % 4 != 2) ds.push_back(d);
             std::stable_sort(ds.begin(), ds.end(),
                              [](unsigned a, unsigned b) { return euler_phi(a) < euler_phi(b); });
             return ds;
         }()) {
        // sigma_k(lambda) only makes sense when lambda lies in Q(zeta_m)
        if (m % c != 0) continue;
        auto candidates_for = [&](unsigned k) {
            // sigma_k(lambda) exact, then its N possible roots.
            Cyclo img = (m == 1) ? lam : lam.galois((long)k);
            BigComplex base = img.embed().principal_root(N);
            std::vector<BigComplex> out;
            out.reserve(N);
            for (unsigned j = 0; j < N; ++j) out.push_back(base * BigComplex::root_of_unity(N, (long)j));
            return out;
        };
        if (auto found = assignment_search(m, z, candidates_for, verify, 4096)) return Scalar(*found);
    }
    return Scalar(z);  // recognition failed; numeric principal root
}

}  // namespace fusionkit
