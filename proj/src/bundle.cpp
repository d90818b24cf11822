#include <fstream>
#include <sstream>

#include "fusionkit/ring.hpp"
#include "json.hpp"

namespace fusionkit {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

GradedBasedRing parse_ring(const json& j, const std::string& name, unsigned grading_order) {
    GradedBasedRing r;
    r.name = name;
    r.grading_order = grading_order;
    for (const auto& b : j.at("basis")) {
        r.labels.push_back(b.at("label").get<std::string>());
        r.grades.push_back(b.at("grade").get<unsigned>());
    }
    for (const auto& u : j.at("unit")) r.unit.push_back(r.label_index(u.get<std::string>()));
    r.dual.assign(r.dim(), 0);
    const auto& dual = j.at("dual");
    if (dual.size() != r.dim()) throw ParseError("dual map must cover every basis label");
    for (auto it = dual.begin(); it != dual.end(); ++it)
        r.dual[r.label_index(it.key())] = r.label_index(it.value().get<std::string>());
    for (const auto& q : j.at("constants")) {
        if (q.size() != 4) throw ParseError("structure constant entries must be [i,j,k,n]");
        size_t i = q[0].get<size_t>(), jj = q[1].get<size_t>(), k = q[2].get<size_t>();
        long n = q[3].get<long>();
        if (i >= r.dim() || jj >= r.dim() || k >= r.dim())
            throw ParseError("structure constant index out of range");
        if (n != 0) r.constants[{i, jj, k}] = n;
    }
    return r;
}

ordered_json ring_to_json(const GradedBasedRing& r) {
    ordered_json j;
    j["basis"] = ordered_json::array();
    for (size_t i = 0; i < r.dim(); ++i)
        j["basis"].push_back({{"label", r.labels[i]}, {"grade", r.grades[i]}});
    j["unit"] = ordered_json::array();
    for (size_t u : r.unit) j["unit"].push_back(r.labels[u]);
    j["dual"] = ordered_json::object();
    for (size_t i = 0; i < r.dim(); ++i) j["dual"][r.labels[i]] = r.labels[r.dual[i]];
    j["constants"] = ordered_json::array();
    for (const auto& [ijk, n] : r.constants)
        j["constants"].push_back({ijk[0], ijk[1], ijk[2], n});
    return j;
}

}  // namespace

Scalar SMatrixData::global_dimension() const {
    Scalar acc(0);
    for (const auto& d : dims) acc += d * d.conj();
    return acc;
}

ValidationReport SMatrixData::validate(const GradedBasedRing& z) const {
    ValidationReport rep;
    size_t n = z.grade_indices(0).size();
    bool shape = entries.size() == n && dims.size() == n;
    for (const auto& row : entries) shape = shape && row.size() == n;
    rep.add("smatrix-shape", shape,
            shape ? "" : "entries must be square over the grade-0 basis", "smatrix");
    if (!shape) return rep;

    bool sym = true;
    for (size_t i = 0; i < n && sym; ++i)
        for (size_t jj = 0; jj < n; ++jj)
            if (entries[i][jj] != entries[jj][i]) {
                sym = false;
                break;
            }
    rep.add("smatrix-symmetric", sym, "", "smatrix");

    bool unit_row = true;
    for (size_t jj = 0; jj < n; ++jj)
        if (entries[0][jj] != dims[jj]) {
            unit_row = false;
            break;
        }
    rep.add("smatrix-unit-row", unit_row, unit_row ? "" : "first row must equal dims", "smatrix");

    Scalar gd = global_dimension();
    bool unitary = true;
    for (size_t i = 0; i < n && unitary; ++i)
        for (size_t jj = 0; jj < n; ++jj) {
            Scalar acc(0);
            for (size_t k = 0; k < n; ++k) acc += entries[i][k] * entries[jj][k].conj();
            if (acc != (i == jj ? gd : Scalar(0))) {
                unitary = false;
                break;
            }
        }
    rep.add("smatrix-orthogonality", unitary,
            unitary ? "" : "S * conj(S) is not global-dimension times identity", "smatrix");
    return rep;
}

const GradedBasedRing& CenterBundle::center() const {
    if (!Z) throw InvalidRing(name + ": bundle carries no center ring");
    return *Z;
}

std::vector<Rational> CenterBundle::zeta_row(size_t z_index) const {
    return zeta.at(z_index);
}

std::vector<Scalar> CenterBundle::zeta_image(const std::vector<Scalar>& zvec) const {
    std::vector<Scalar> out(D.dim(), Scalar(0));
    for (size_t i = 0; i < zvec.size(); ++i) {
        if (zvec[i].is_zero()) continue;
        for (size_t jj = 0; jj < D.dim(); ++jj)
            if (!zeta[i][jj].is_zero()) out[jj] += zvec[i] * Scalar(zeta[i][jj]);
    }
    return out;
}

size_t CenterBundle::phi_power_index(size_t i, long power) const {
    size_t cur = i;
    if (power >= 0) {
        for (long s = 0; s < power; ++s) cur = phi[cur];
    } else {
        std::vector<size_t> inv(phi.size());
        for (size_t k = 0; k < phi.size(); ++k) inv[phi[k]] = k;
        for (long s = 0; s < -power; ++s) cur = inv[cur];
    }
    return cur;
}

std::vector<Scalar> CenterBundle::apply_phi(const std::vector<Scalar>& zvec, long power) const {
    std::vector<Scalar> out(zvec.size(), Scalar(0));
    for (size_t i = 0; i < zvec.size(); ++i) out[phi_power_index(i, power)] = zvec[i];
    return out;
}

const ValidationReport& CenterBundle::verify() const {
    if (verification_) return *verification_;
    ValidationReport rep;

    rep.merge(D.validate());
    if (!rep.all_pass()) {
        verification_ = std::move(rep);
        return *verification_;
    }

    if (!Z) {
        // ring-only bundle: nothing further to check
        verification_ = std::move(rep);
        return *verification_;
    }
    const GradedBasedRing& z = *Z;
    rep.merge(z.validate());
    rep.add("grading-order-match", z.grading_order == D.grading_order, "", "bundle");
    if (!rep.all_pass()) {
        verification_ = std::move(rep);
        return *verification_;
    }

    rep.add("center-grade-zero-commutative", z.grade_zero_commutative(),
            "grade-0 part of the center ring must be commutative", "bundle");

    // zeta shape and grade preservation
    bool zeta_shape = zeta.size() == z.dim();
    for (const auto& row : zeta) zeta_shape = zeta_shape && row.size() == D.dim();
    rep.add("zeta-shape", zeta_shape, zeta_shape ? "" : "zeta must be |Z| x |D|", "zeta");
    if (!zeta_shape) {
        verification_ = std::move(rep);
        return *verification_;
    }
    bool zeta_graded = true, zeta_nonneg = true;
    for (size_t i = 0; i < z.dim() && zeta_graded; ++i)
        for (size_t jj = 0; jj < D.dim(); ++jj) {
            if (zeta[i][jj] < 0) zeta_nonneg = false;
            if (!zeta[i][jj].is_zero() && D.grades[jj] != z.grades[i]) {
                zeta_graded = false;
                break;
            }
        }
    rep.add("zeta-nonnegative", zeta_nonneg, "", "zeta");
    rep.add("zeta-grade-preserving", zeta_graded, "", "zeta");

    // zeta(unit) = unit
    {
        std::vector<Rational> img(D.dim(), Rational(0));
        for (size_t u : z.unit)
            for (size_t jj = 0; jj < D.dim(); ++jj) img[jj] += zeta[u][jj];
        std::vector<Rational> want(D.dim(), Rational(0));
        for (size_t u : D.unit) want[u] = 1;
        rep.add("zeta-unit", img == want, "", "zeta");
    }

    // zeta homomorphism: zeta(b_i b_j) = zeta(b_i) zeta(b_j)
    {
        bool hom = true;
        std::string detail;
        for (size_t i = 0; i < z.dim() && hom; ++i)
            for (size_t jj = 0; jj < z.dim(); ++jj) {
                std::vector<Rational> lhs(D.dim(), Rational(0));
                for (size_t k = 0; k < z.dim(); ++k) {
                    long n = z.structure_constant(i, jj, k);
                    if (n == 0) continue;
                    for (size_t c = 0; c < D.dim(); ++c) lhs[c] += Rational(n) * zeta[k][c];
                }
                auto rhs = D.multiply(zeta[i], zeta[jj]);
                if (lhs != rhs) {
                    hom = false;
                    detail = "zeta fails on " + z.labels[i] + " * " + z.labels[jj];
                    break;
                }
            }
        rep.add("zeta-homomorphism", hom, detail, "zeta");
    }

    // zeta commutes with duality
    {
        bool dual_ok = true;
        for (size_t i = 0; i < z.dim(); ++i) {
            for (size_t jj = 0; jj < D.dim(); ++jj)
                if (zeta[z.dual[i]][jj] != zeta[i][D.dual[jj]]) {
                    dual_ok = false;
                    break;
                }
            if (!dual_ok) break;
        }
        rep.add("zeta-duality", dual_ok, "", "zeta");
    }

    // phi: permutation, identity off grade 0, fixes units, commutes with duality,
    // ring automorphism of grade 0.
    {
        bool shape = phi.size() == z.dim();
        std::vector<bool> seen(z.dim(), false);
        for (size_t p : phi) {
            if (p >= z.dim() || seen[p]) {
                shape = false;
                break;
            }
            seen[p] = true;
        }
        rep.add("phi-permutation", shape, "", "phi");
        if (!shape) {
            verification_ = std::move(rep);
            return *verification_;
        }
        bool off0 = true;
        for (size_t i = 0; i < z.dim(); ++i)
            if (z.grades[i] != 0 && phi[i] != i) off0 = false;
        rep.add("phi-grade-zero-support", off0,
                off0 ? "" : "phi must be the identity outside grade 0", "phi");
        bool fix_unit = true;
        for (size_t u : z.unit)
            if (phi[u] != u) fix_unit = false;
        rep.add("phi-fixes-unit", fix_unit, "", "phi");
        bool grade_pres = true;
        for (size_t i = 0; i < z.dim(); ++i)
            if (z.grades[phi[i]] != z.grades[i]) grade_pres = false;
        rep.add("phi-grade-preserving", grade_pres, "", "phi");
        bool dual_ok = true;
        for (size_t i = 0; i < z.dim(); ++i)
            if (phi[z.dual[i]] != z.dual[phi[i]]) dual_ok = false;
        rep.add("phi-duality", dual_ok, "", "phi");
        bool autom = true;
        std::string detail;
        auto g0 = z.grade_indices(0);
        for (size_t i : g0) {
            for (size_t jj : g0)
                for (size_t k : g0)
                    if (z.structure_constant(phi[i], phi[jj], phi[k]) !=
                        z.structure_constant(i, jj, k)) {
                        autom = false;
                        detail = "phi fails on " + z.labels[i] + " * " + z.labels[jj];
                        break;
                    }
            if (!autom) break;
        }
        rep.add("phi-automorphism", autom, detail, "phi");
    }

    // crossed relation: c * m = m * c = Phi^a(c) * m for grade-0 c, grade-a m
    {
        bool crossed = true;
        std::string detail;
        auto g0 = z.grade_indices(0);
        for (size_t c : g0) {
            for (size_t m = 0; m < z.dim() && crossed; ++m) {
                long a = z.grades[m];
                size_t pc = phi_power_index(c, a);
                for (size_t k = 0; k < z.dim(); ++k) {
                    long cm = z.structure_constant(c, m, k);
                    long mc = z.structure_constant(m, c, k);
                    long pm = z.structure_constant(pc, m, k);
                    if (cm != pm || mc != pm) {
                        crossed = false;
                        detail = z.labels[c] + " * " + z.labels[m] +
                                 " violates the crossed relation";
                        break;
                    }
                }
            }
            if (!crossed) break;
        }
        rep.add("crossed-relation", crossed, detail, "bundle");
    }

    // zeta surjects onto the relative center of D in each grade
    {
        bool surj = true;
        std::string detail;
        for (unsigned a = 0; a < D.grading_order; ++a) {
            auto rc = D.relative_center(a);
            Matrix<Rational> rows;
            for (size_t i = 0; i < z.dim(); ++i)
                if (z.grades[i] == a) rows.push_back(zeta[i]);
            size_t r = rows.empty() ? 0 : rank(rows);
            if (r != rc.size()) {
                surj = false;
                detail = "grade " + std::to_string(a) + ": rank " + std::to_string(r) +
                         " != relative-center dimension " + std::to_string(rc.size());
                break;
            }
        }
        rep.add("zeta-relative-center-rank", surj, detail, "zeta");
    }

    // grade-0 image spans the center of the grade-0 part of D
    {
        auto c0 = D.grade_zero_center();
        Matrix<Rational> rows;
        for (size_t i = 0; i < z.dim(); ++i)
            if (z.grades[i] == 0) rows.push_back(zeta[i]);
        Matrix<Rational> both = rows;
        for (const auto& v : c0) both.push_back(v);
        bool spans = !rows.empty() && rank(rows) == rank(both) && rank(rows) >= c0.size();
        // spanning means the center vectors add no new rank, and image lies in center
        Matrix<Rational> centered = c0;
        size_t cr = c0.empty() ? 0 : rank(c0);
        for (const auto& v : rows) centered.push_back(v);
        bool inside = rank(centered) == cr;
        rep.add("zeta-grade-zero-center", spans && inside,
                (spans && inside) ? "" : "grade-0 image of zeta must span the center of grade 0",
                "zeta");
    }

    if (smatrix) rep.merge(smatrix->validate(z));

    verification_ = std::move(rep);
    return *verification_;
}

void CenterBundle::require_verified() const {
    const auto& rep = verify();
    if (!rep.all_pass()) {
        auto fails = rep.failures();
        throw InvalidRing(name + ": " + (fails.empty() ? "unknown" : fails.front()));
    }
}

CenterBundle parse_bundle(const std::string& json_text) {
    json j;
    try {
        j = json::parse(json_text);
    } catch (const json::exception& e) {
        throw ParseError(std::string("bundle JSON: ") + e.what());
    }
    try {
        CenterBundle b;
        b.name = j.at("name").get<std::string>();
        unsigned order = j.at("grading_order").get<unsigned>();
        if (order == 0) throw ParseError("grading_order must be positive");
        b.D = parse_ring(j.at("ring_D"), b.name + ":D", order);
        if (j.contains("ring_Z")) {
            b.Z = parse_ring(j.at("ring_Z"), b.name + ":Z", order);
            const auto& z = *b.Z;
            const auto& zj = j.at("zeta");
            for (const auto& row : zj) {
                std::vector<Rational> r;
                for (const auto& v : row) r.emplace_back(v.get<long>());
                b.zeta.push_back(std::move(r));
            }
            b.phi.resize(z.dim());
            for (size_t i = 0; i < z.dim(); ++i) b.phi[i] = i;
            if (j.contains("phi"))
                for (auto it = j.at("phi").begin(); it != j.at("phi").end(); ++it)
                    b.phi[z.label_index(it.key())] = z.label_index(it.value().get<std::string>());
            if (j.contains("smatrix")) {
                SMatrixData s;
                for (const auto& row : j.at("smatrix").at("entries")) {
                    std::vector<Scalar> r;
                    for (const auto& v : row) r.push_back(parse_scalar(v.get<std::string>()));
                    s.entries.push_back(std::move(r));
                }
                for (const auto& v : j.at("smatrix").at("dims"))
                    s.dims.push_back(parse_scalar(v.get<std::string>()));
                b.smatrix = std::move(s);
            }
        }
        return b;
    } catch (const json::exception& e) {
        throw ParseError(std::string("bundle schema: ") + e.what());
    }
}

CenterBundle load_bundle(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open bundle file: " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_bundle(ss.str());
}

std::string bundle_to_json(const CenterBundle& b) {
    ordered_json j;
    j["name"] = b.name;
    j["grading_order"] = b.D.grading_order;
    j["ring_D"] = ring_to_json(b.D);
    if (b.Z) {
        j["ring_Z"] = ring_to_json(*b.Z);
        j["zeta"] = ordered_json::array();
        for (const auto& row : b.zeta) {
            ordered_json r = ordered_json::array();
            for (const auto& v : row) r.push_back(v.convert_to<long>());
            j["zeta"].push_back(std::move(r));
        }
        j["phi"] = ordered_json::object();
        for (size_t i = 0; i < b.Z->dim(); ++i)
            if (b.Z->grades[i] == 0) j["phi"][b.Z->labels[i]] = b.Z->labels[b.phi[i]];
        if (b.smatrix) {
            ordered_json s;
            s["entries"] = ordered_json::array();
            for (const auto& row : b.smatrix->entries) {
                ordered_json r = ordered_json::array();
                for (const auto& v : row) r.push_back(v.str());
                s["entries"].push_back(std::move(r));
            }
            s["dims"] = ordered_json::array();
            for (const auto& v : b.smatrix->dims) s["dims"].push_back(v.str());
            j["smatrix"] = std::move(s);
        }
    }
    return j.dump(2) + "\n";
}

}  // namespace fusionkit
