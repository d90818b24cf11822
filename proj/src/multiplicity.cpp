#include "fusionkit/multiplicity.hpp"

#include <algorithm>

namespace fusionkit {

namespace {

// Nonnegative-integer extraction per the backend rules: exact scalars must
// be exact integers; numeric entries are rounded when within 1e-12.
Integer as_multiplicity(const Scalar& s, const std::string& where) {
    BigFloat tol = s.exact() ? BigFloat(0) : BigFloat("1e-12");
    auto n = s.as_integer(tol);
    if (!n || *n < 0) throw NonIntegralEntry(where + " = " + s.str());
    return *n;
}

}  // namespace

MultiplicityTable restriction_multiplicities(const CenterBundle& bundle) {
    bundle.require_verified();
    const GradedBasedRing& z = bundle.center();
    MultiplicityTable t;
    t.rows = z.grade_indices(1);
    t.cols = bundle.D.grade_indices(1);
    for (size_t a : t.rows) {
        std::vector<Integer> row;
        for (size_t m : t.cols) row.push_back(numerator(bundle.zeta[a][m]));
        t.entries.push_back(std::move(row));
    }
    return t;
}

MultiplicityTable formula_multiplicities(const CenterBundle& bundle, const CliffordData& data) {
    const GradedBasedRing& z = bundle.center();
    MultiplicityTable t;
    t.rows = z.grade_indices(1);
    t.cols = bundle.D.grade_indices(1);
    for (size_t a : t.rows) {
        std::vector<Integer> row;
        for (size_t m : t.cols) {
            Scalar acc(0);
            for (size_t k = 0; k < data.extensions.size(); ++k) {
                const auto& ext = data.extensions[k];
                const Scalar& f = data.theory_d.irreps[ext.irrep].codegree;
                acc += ext.rho[a].conj() * ext.chi[m] / f;
            }
            row.push_back(as_multiplicity(
                acc, "m[" + z.labels[a] + "," + bundle.D.labels[m] + "]"));
        }
        t.entries.push_back(std::move(row));
    }
    return t;
}

VerificationReport verify_main_theorem(const CenterBundle& bundle, const CliffordData& data) {
    VerificationReport rep;
    const GradedBasedRing& d = bundle.D;
    const GradedBasedRing& z = bundle.center();
    auto restriction = restriction_multiplicities(bundle);

    bool formula_ok = true;
    std::string formula_detail;
    MultiplicityTable formula;
    try {
        formula = formula_multiplicities(bundle, data);
        if (formula.entries != restriction.entries) {
            formula_ok = false;
            formula_detail = "tables differ entrywise";
        }
    } catch (const NonIntegralEntry& e) {
        formula_ok = false;
        formula_detail = e.what();
    }
    rep.add("tables-agree", formula_ok, formula_detail, "multiplicity");

    // trace identity: sum_M m_{A,M} chi~_E(M) = dim E * rho~_E(A)
    bool trace_ok = true;
    std::string trace_detail;
    for (size_t r = 0; r < restriction.rows.size() && trace_ok; ++r)
        for (const auto& ext : data.extensions) {
            Scalar lhs(0);
            for (size_t c = 0; c < restriction.cols.size(); ++c)
                lhs += Scalar(Rational(restriction.entries[r][c])) * ext.chi[restriction.cols[c]];
            Scalar rhs = data.theory_d.irreps[ext.irrep].dim * ext.rho[restriction.rows[r]];
            if (lhs != rhs) {
                trace_ok = false;
                trace_detail = "A = " + z.labels[restriction.rows[r]] + ", E = " +
                               data.theory_d.irreps[ext.irrep].label;
                break;
            }
        }
    rep.add("trace-identity", trace_ok, trace_detail, "multiplicity");

    // row reconstruction: m_{A,.} = sum_E <m_{A,.}, chi~_E>/(f_E dim E) chi~_E
    bool span_ok = true;
    std::string span_detail;
    for (size_t r = 0; r < restriction.rows.size() && span_ok; ++r) {
        for (size_t c = 0; c < restriction.cols.size(); ++c) {
            Scalar acc(0);
            for (const auto& ext : data.extensions) {
                Scalar ip(0);
                for (size_t c2 = 0; c2 < restriction.cols.size(); ++c2)
                    ip += Scalar(Rational(restriction.entries[r][c2])) *
                          ext.chi[restriction.cols[c2]].conj();
                const auto& irr = data.theory_d.irreps[ext.irrep];
                acc += ip * ext.chi[restriction.cols[c]] / (irr.codegree * irr.dim);
            }
            if (acc != Scalar(Rational(restriction.entries[r][c]))) {
                span_ok = false;
                span_detail = "row " + z.labels[restriction.rows[r]] + " is not in the span of the twisted characters";
                break;
            }
        }
    }
    rep.add("row-reconstruction", span_ok, span_detail, "multiplicity");

    // C-class functional: m_{A,.}(c x) = m_{A,.}(x c) for c grade 0, x grade 1
    bool cls_ok = true;
    std::string cls_detail;
    auto dg0 = d.grade_indices(0);
    for (size_t r = 0; r < restriction.rows.size() && cls_ok; ++r) {
        std::vector<Rational> mrow(d.dim(), Rational(0));
        for (size_t c = 0; c < restriction.cols.size(); ++c)
            mrow[restriction.cols[c]] = Rational(restriction.entries[r][c]);
        for (size_t cc : dg0) {
            for (size_t x : restriction.cols) {
                Rational lhs(0), rhs(0);
                for (size_t k : restriction.cols) {
                    lhs += Rational(d.structure_constant(cc, x, k)) * mrow[k];
                    rhs += Rational(d.structure_constant(x, cc, k)) * mrow[k];
                }
                if (lhs != rhs) {
                    cls_ok = false;
                    cls_detail = "row " + z.labels[restriction.rows[r]] + " at (" +
                                 d.labels[cc] + ", " + d.labels[x] + ")";
                    break;
                }
            }
            if (!cls_ok) break;
        }
    }
    rep.add("class-functional", cls_ok, cls_detail, "multiplicity");

    return rep;
}

CrossedSMatrix crossed_s_matrix(const CenterBundle& bundle, const CliffordData& data) {
    if (!bundle.smatrix) throw InvalidRing(bundle.name + ": bundle carries no S-matrix");
    const GradedBasedRing& z = bundle.center();
    const auto& s = *bundle.smatrix;
    auto zg0 = z.grade_indices(0);
    auto bij = smatrix_characters(s, data.theory_z);

    CrossedSMatrix out;
    out.cols = z.grade_indices(1);

    // rows: Phi-fixed grade-0 basis elements of Z
    std::vector<size_t> pos(z.dim(), 0);
    for (size_t k = 0; k < zg0.size(); ++k) pos[zg0[k]] = k;
    for (size_t a : zg0) {
        if (bundle.phi[a] != a) continue;
        size_t zchar = bij.row_to_char[pos[a]];
        // the matched character must itself be Phi-fixed
        const auto& vals = data.theory_z.irreps[zchar].values;
        for (size_t k = 0; k < zg0.size(); ++k)
            if (vals[pos[bundle.phi_power_index(zg0[k], 1)]] != vals[k])
                throw ConsistencyFailure(z.labels[a] +
                                         " is Phi-fixed but its character rho_A is not");
        out.rows.push_back(a);
        out.row_char.push_back(zchar);
    }
    if (out.rows.size() != out.cols.size())
        throw ConsistencyFailure("crossed S-matrix is not square: " +
                                 std::to_string(out.rows.size()) + " x " +
                                 std::to_string(out.cols.size()));

    // rows A_E inherit the extend_irrep gauge; other rows use the central
    // extension inside Z.
    for (size_t r = 0; r < out.rows.size(); ++r) {
        std::vector<Scalar> rho_tilde;
        const TwistedExtension* matched = nullptr;
        for (const auto& ext : data.extensions)
            if (bij.char_to_row[data.rho_to_z[ext.irrep]] == pos[out.rows[r]]) {
                matched = &ext;
                break;
            }
        if (matched) {
            rho_tilde = matched->rho;
        } else {
            rho_tilde = extend_central_character(bundle, data.theory_z, out.row_char[r]).values;
        }
        const Scalar& dim_a = s.dims[pos[out.rows[r]]];
        std::vector<Scalar> row;
        for (size_t m : out.cols) row.push_back(dim_a * rho_tilde[m]);
        out.entries.push_back(std::move(row));
    }
    return out;
}

VerificationReport verify_modular_formula(const CenterBundle& bundle, const CliffordData& data) {
    VerificationReport rep;
    const GradedBasedRing& z = bundle.center();
    const auto& s = *bundle.smatrix;
    auto zg0 = z.grade_indices(0);
    std::vector<size_t> pos(z.dim(), 0);
    for (size_t k = 0; k < zg0.size(); ++k) pos[zg0[k]] = k;

    auto st = crossed_s_matrix(bundle, data);
    auto bij = smatrix_characters(s, data.theory_z);
    Scalar sqrt_dim = nth_root_gauge(s.global_dimension(), 2);

    // f_E * dim A_E = sqrt(dim Z(C)) for every Phi-fixed E
    bool codeg_ok = true;
    std::string codeg_detail;
    std::vector<size_t> ext_row(data.extensions.size());  // row of A_E in st
    for (size_t k = 0; k < data.extensions.size(); ++k) {
        const auto& ext = data.extensions[k];
        size_t a_e = zg0[bij.char_to_row[data.rho_to_z[ext.irrep]]];
        size_t r = std::find(st.rows.begin(), st.rows.end(), a_e) - st.rows.begin();
        if (r == st.rows.size())
            throw ConsistencyFailure("A_E is not a Phi-fixed basis element for " +
                                     data.theory_d.irreps[ext.irrep].label);
        ext_row[k] = r;
        Scalar lhs = data.theory_d.irreps[ext.irrep].codegree * s.dims[pos[a_e]];
        if (lhs != sqrt_dim) {
            codeg_ok = false;
            codeg_detail = data.theory_d.irreps[ext.irrep].label + ": f_E * dim A_E = " +
                           lhs.str() + " != " + sqrt_dim.str();
        }
    }
    rep.add("codegree-identity", codeg_ok, codeg_detail, "modular");

    // m_{A,M} = sum_E S~_{A_E,A} conj(chi~_E(M)) / sqrt(dim Z(C))
    auto restriction = restriction_multiplicities(bundle);
    bool formula_ok = true;
    std::string formula_detail;
    for (size_t r = 0; r < restriction.rows.size() && formula_ok; ++r) {
        size_t a = restriction.rows[r];  // grade-1 basis index of Z
        size_t ac = std::find(st.cols.begin(), st.cols.end(), a) - st.cols.begin();
        for (size_t c = 0; c < restriction.cols.size(); ++c) {
            Scalar acc(0);
            for (size_t k = 0; k < data.extensions.size(); ++k)
                acc += st.entries[ext_row[k]][ac] *
                       data.extensions[k].chi[restriction.cols[c]].conj() / sqrt_dim;
            if (acc != Scalar(Rational(restriction.entries[r][c]))) {
                formula_ok = false;
                formula_detail = "entry (" + z.labels[a] + ", " +
                                 bundle.D.labels[restriction.cols[c]] + "): formula gives " +
                                 acc.str();
                break;
            }
        }
    }
    rep.add("smatrix-multiplicity-formula", formula_ok, formula_detail, "modular");
    return rep;
}

}  // namespace fusionkit
