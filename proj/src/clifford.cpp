#include "fusionkit/clifford.hpp"

#include <algorithm>

namespace fusionkit {

namespace {

bool all_zero(const std::vector<Scalar>& v) {
    for (const auto& x : v)
        if (!x.is_zero()) return false;
    return true;
}

// Scale so the first (basis-ordered) nonzero coordinate is 1.
std::vector<Scalar> normalize_generator(std::vector<Scalar> v) {
    size_t k = 0;
    while (k < v.size() && v[k].is_zero()) ++k;
    Scalar lead = v[k];
    for (auto& x : v) x = x / lead;
    return v;
}

std::vector<Scalar> element_power(const GradedBasedRing& ring, const std::vector<Scalar>& v,
                                  unsigned n) {
    auto out = v;
    for (unsigned i = 1; i < n; ++i) out = ring.multiply(out, v);
    return out;
}

// The scalar s with w = s * base; nullopt when w is not a multiple.
std::optional<Scalar> proportionality(const std::vector<Scalar>& w,
                                      const std::vector<Scalar>& base) {
    size_t k = 0;
    while (k < base.size() && base[k].is_zero()) ++k;
    if (k == base.size()) return std::nullopt;
    Scalar s = w[k] / base[k];
    for (size_t i = 0; i < base.size(); ++i)
        if (w[i] != s * base[i]) return std::nullopt;
    return s;
}

}  // namespace

bool partial_action(const CenterBundle& bundle, unsigned a, const CharacterTheory& theory_d,
                    size_t e_index) {
    const GradedBasedRing& d = bundle.D;
    a = d.normalize_grade((long)a);
    if (a == 0) return true;
    const auto& e = theory_d.irreps[e_index].idempotent;

    // rank of e * A_0 (always (dim E)^2) versus rank of e * A_a * e
    Matrix<Scalar> span0, span_a;
    for (size_t y : d.grade_indices(0)) span0.push_back(d.multiply(e, d.basis_element(y)));
    for (size_t x : d.grade_indices(a))
        span_a.push_back(d.multiply(d.multiply(e, d.basis_element(x)), e));
    size_t r0 = rank(span0);
    size_t ra = span_a.empty() ? 0 : rank(span_a);
    if (ra != 0 && ra != r0)
        throw ConsistencyFailure("e*A_" + std::to_string(a) + "*e has dimension " +
                                 std::to_string(ra) + ", expected 0 or " + std::to_string(r0));

    bool free_rank_one = ra == r0;
    bool center_component = false;
    for (const auto& c : d.relative_center(a)) {
        std::vector<Scalar> cs(c.size());
        for (size_t i = 0; i < c.size(); ++i) cs[i] = Scalar(c[i]);
        if (!all_zero(d.multiply(e, cs))) {
            center_component = true;
            break;
        }
    }
    if (free_rank_one != center_component)
        throw ConsistencyFailure("bimodule-rank and relative-center detections disagree at grade " +
                                 std::to_string(a));
    return free_rank_one;
}

std::vector<size_t> phi_fixed_irreps(const CenterBundle& bundle, const CharacterTheory& theory_d,
                                     const CharacterTheory& theory_z,
                                     const std::vector<std::vector<Scalar>>& rho,
                                     const std::vector<size_t>& rho_to_z, long power) {
    const GradedBasedRing& z = bundle.center();
    auto zg0 = z.grade_indices(0);
    // position of each grade-0 Z index within zg0
    std::vector<size_t> pos(z.dim(), 0);
    for (size_t k = 0; k < zg0.size(); ++k) pos[zg0[k]] = k;

    std::vector<size_t> fixed;
    for (size_t e = 0; e < theory_d.irreps.size(); ++e) {
        bool by_character = true;
        for (size_t k = 0; k < zg0.size(); ++k) {
            size_t p = bundle.phi_power_index(zg0[k], power);
            if (rho[e][pos[p]] != rho[e][k]) {
                by_character = false;
                break;
            }
        }

        if (power == 1) {
            bool by_action = partial_action(bundle, 1, theory_d, e);
            const auto& erho = theory_z.irreps[rho_to_z[e]].idempotent;
            bool by_idempotent = false;
            for (size_t x : z.grade_indices(1))
                if (!all_zero(z.multiply(erho, z.basis_element(x)))) {
                    by_idempotent = true;
                    break;
                }
            if (by_character != by_action || by_character != by_idempotent)
                throw ConsistencyFailure(
                    theory_d.irreps[e].label + ": character route " +
                    std::to_string(by_character) + ", partial-action route " +
                    std::to_string(by_action) + ", center-idempotent route " +
                    std::to_string(by_idempotent));
        }
        if (by_character) fixed.push_back(e);
    }
    return fixed;
}

TwistedExtension extend_irrep(const CenterBundle& bundle, const CharacterTheory& theory_d,
                              size_t e_index) {
    const GradedBasedRing& d = bundle.D;
    const GradedBasedRing& z = bundle.center();
    const auto& irrep = theory_d.irreps[e_index];
    const auto& e = irrep.idempotent;
    unsigned n = d.grading_order;

    // deterministic generator of the line e_E * (grade-1 relative center)
    std::vector<Scalar> v;
    for (const auto& c : d.relative_center(1)) {
        std::vector<Scalar> cs(c.size());
        for (size_t i = 0; i < c.size(); ++i) cs[i] = Scalar(c[i]);
        auto w = d.multiply(e, cs);
        if (!all_zero(w)) {
            v = normalize_generator(std::move(w));
            break;
        }
    }
    if (v.empty()) throw NotPhiFixed(irrep.label);

    auto vn = element_power(d, v, n);
    auto lambda = proportionality(vn, e);
    if (!lambda) throw GaugeFailure(irrep.label + ": v^N is not a multiple of e_E");
    if (lambda->is_zero()) throw GaugeFailure(irrep.label + ": v^N = 0");

    TwistedExtension ext;
    ext.irrep = e_index;
    ext.lambda = *lambda;
    Scalar g = nth_root_gauge(*lambda, n);
    Scalar ginv = g.inverse();
    ext.m = v;
    for (auto& x : ext.m) x = x * ginv;

    std::vector<std::vector<Scalar>> mpow(n + 1);  // mpow[k] = m^k for k >= 1
    mpow[1] = ext.m;
    for (unsigned k = 2; k <= n; ++k) mpow[k] = d.multiply(mpow[k - 1], ext.m);

    ext.chi.resize(d.dim());
    for (size_t x = 0; x < d.dim(); ++x) {
        unsigned a = d.grades[x];
        auto y = d.multiply(e, d.basis_element(x));
        if (n - a >= 1) y = d.multiply(y, mpow[n - a]);
        ext.chi[x] = theory_d.character_value(e_index, y);
    }

    ext.rho.resize(z.dim());
    for (size_t zi = 0; zi < z.dim(); ++zi) {
        Scalar acc(0);
        for (size_t j = 0; j < d.dim(); ++j) {
            const Rational& c = bundle.zeta[zi][j];
            if (!c.is_zero()) acc += Scalar(c) * ext.chi[j];
        }
        ext.rho[zi] = acc / irrep.dim;
    }
    return ext;
}

CentralExtension extend_central_character(const CenterBundle& bundle,
                                          const CharacterTheory& theory_z, size_t z_index) {
    const GradedBasedRing& z = bundle.center();
    const auto& ch = theory_z.irreps[z_index];
    unsigned n = z.grading_order;
    auto zg0 = z.grade_indices(0);
    std::vector<size_t> pos(z.dim(), 0);
    for (size_t k = 0; k < zg0.size(); ++k) pos[zg0[k]] = k;
    for (size_t k = 0; k < zg0.size(); ++k)
        if (ch.values[pos[bundle.phi_power_index(zg0[k], 1)]] != ch.values[k])
            throw NotPhiFixed(ch.label);

    const auto& e = ch.idempotent;
    std::vector<Scalar> v;
    for (size_t x : z.grade_indices(1)) {
        auto w = z.multiply(e, z.basis_element(x));
        if (!all_zero(w)) {
            v = normalize_generator(std::move(w));
            break;
        }
    }
    if (v.empty()) throw NotPhiFixed(ch.label + ": no grade-1 component");

    auto vn = element_power(z, v, n);
    auto lambda = proportionality(vn, e);
    if (!lambda || lambda->is_zero())
        throw GaugeFailure(ch.label + ": generator power is not a unit multiple of e_rho");

    CentralExtension ext;
    ext.character = z_index;
    ext.lambda = *lambda;
    Scalar ginv = nth_root_gauge(*lambda, n).inverse();
    ext.m = v;
    for (auto& x : ext.m) x = x * ginv;

    std::vector<std::vector<Scalar>> mpow(n);  // mpow[a] = m^a, with m^0 := e
    mpow[0] = e;
    for (unsigned k = 1; k < n; ++k)
        mpow[k] = (k == 1) ? ext.m : z.multiply(mpow[k - 1], ext.m);

    ext.values.resize(z.dim());
    for (size_t x = 0; x < z.dim(); ++x) {
        auto w = z.multiply(e, z.basis_element(x));
        if (all_zero(w)) {
            ext.values[x] = Scalar(0);
            continue;
        }
        auto s = proportionality(w, mpow[z.grades[x]]);
        if (!s)
            throw ConsistencyFailure(ch.label + ": e_rho * " + z.labels[x] +
                                     " is not a multiple of m^" + std::to_string(z.grades[x]));
        ext.values[x] = *s;
    }
    return ext;
}

std::vector<Scalar> twisted_alpha(const GradedBasedRing& d, const TwistedExtension& ext) {
    std::vector<Scalar> alpha(d.dim(), Scalar(0));
    for (size_t x : d.grade_indices(1)) alpha[d.dual[x]] += ext.chi[x];
    return alpha;
}

TwistedExtension regauge(const GradedBasedRing& d, const GradedBasedRing& z,
                         const TwistedExtension& ext, const Scalar& omega) {
    TwistedExtension out = ext;
    for (auto& x : out.m) x = x * omega;
    Scalar winv = omega.inverse();
    for (size_t x = 0; x < d.dim(); ++x)
        for (unsigned k = 0; k < d.grades[x]; ++k) out.chi[x] = out.chi[x] * winv;
    for (size_t x = 0; x < z.dim(); ++x)
        for (unsigned k = 0; k < z.grades[x]; ++k) out.rho[x] = out.rho[x] * winv;
    return out;
}

CliffordData compute_clifford(const CenterBundle& bundle) {
    bundle.require_verified();
    CliffordData data;
    data.theory_d = irreducible_characters(bundle.D);
    data.theory_z = commutative_characters(bundle.center());
    data.rho = embed_rho(bundle, data.theory_d);

    // each rho_E is a 1-dimensional character of grade-0 of Z; find it
    for (size_t e = 0; e < data.rho.size(); ++e) {
        size_t match = data.theory_z.irreps.size();
        for (size_t j = 0; j < data.theory_z.irreps.size(); ++j)
            if (data.theory_z.irreps[j].values == data.rho[e]) {
                match = j;
                break;
            }
        if (match == data.theory_z.irreps.size())
            throw ConsistencyFailure(data.theory_d.irreps[e].label +
                                     ": rho_E matches no character of grade-0 of Z");
        data.rho_to_z.push_back(match);
    }

    data.phi_fixed =
        phi_fixed_irreps(bundle, data.theory_d, data.theory_z, data.rho, data.rho_to_z);
    for (size_t e : data.phi_fixed)
        data.extensions.push_back(extend_irrep(bundle, data.theory_d, e));
    return data;
}

}  // namespace fusionkit
