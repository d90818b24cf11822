#include "fusionkit/cli.hpp"

#include <ostream>

#include "CLI11.hpp"
#include "fusionkit/multiplicity.hpp"
#include "fusionkit/oracle.hpp"
#include "json.hpp"

namespace fusionkit::cli {

namespace {

using nlohmann::ordered_json;

struct Options {
    std::string bundle_path;
    bool json = false;
    bool ascii = false;
    bool verify = false;
    bool with_oracle = false;
};

// ---------------------------------------------------------------------------
// verification assembly shared by `report`

void counting_checks(const CenterBundle& bundle, const CliffordData& data,
                     VerificationReport& rep) {
    const GradedBasedRing& z = bundle.center();
    auto zg0 = z.grade_indices(0);
    std::vector<size_t> pos(z.dim(), 0);
    for (size_t k = 0; k < zg0.size(); ++k) pos[zg0[k]] = k;
    for (unsigned a = 0; a < z.grading_order; ++a) {
        size_t by_basis = z.grade_indices(a).size();
        size_t by_objects = 0;
        for (size_t i : zg0)
            if (bundle.phi_power_index(i, a) == i) ++by_objects;
        size_t by_characters = 0;
        for (const auto& ch : data.theory_z.irreps) {
            bool fixed = true;
            for (size_t k = 0; k < zg0.size(); ++k)
                if (ch.values[pos[bundle.phi_power_index(zg0[k], a)]] != ch.values[k]) {
                    fixed = false;
                    break;
                }
            if (fixed) ++by_characters;
        }
        bool ok = by_basis == by_objects && by_basis == by_characters;
        rep.add("counting-grade-" + std::to_string(a), ok,
                ok ? ""
                   : std::to_string(by_basis) + " basis elements, " +
                         std::to_string(by_objects) + " fixed objects, " +
                         std::to_string(by_characters) + " fixed characters",
                "counting");
    }
}

void character_checks(const CharacterTheory& th, VerificationReport& rep,
                      const std::string& prefix) {
    bool ortho = true;
    std::string ortho_detail;
    for (size_t i = 0; i < th.irreps.size() && ortho; ++i)
        for (size_t jj = 0; jj < th.irreps.size(); ++jj) {
            Scalar ip(0);
            for (size_t k = 0; k < th.grade0.size(); ++k)
                ip += th.irreps[i].values[k] * th.irreps[jj].values[k].conj();
            Scalar want = i == jj ? th.irreps[i].codegree * th.irreps[i].dim : Scalar(0);
            if (ip != want) {
                ortho = false;
                ortho_detail = th.irreps[i].label + " vs " + th.irreps[jj].label;
                break;
            }
        }
    rep.add(prefix + "character-orthogonality", ortho, ortho_detail, "characters");

    Scalar total(0);
    for (const auto& ch : th.irreps) total += ch.dim * ch.dim;
    bool complete = total == Scalar(Rational((long)th.grade0.size()));
    rep.add(prefix + "character-completeness", complete,
            complete ? "" : "sum of dim^2 = " + total.str(), "characters");

    rep.add(prefix + "center-dimension", th.center_basis.size() == th.irreps.size(),
            "", "characters");

    bool positive = true;
    std::string pos_detail;
    for (const auto& ch : th.irreps) {
        bool this_ok;
        if (ch.codegree.exact()) {
            this_ok = is_totally_positive(ch.codegree.cyclo());
        } else {
            auto v = ch.codegree.embed();
            this_ok = boost::multiprecision::abs(v.im()) <= Precision::tolerance() && v.re() > 0;
        }
        if (!this_ok) {
            positive = false;
            pos_detail = ch.label + ": f = " + ch.codegree.str();
            break;
        }
    }
    rep.add(prefix + "codegrees-totally-positive", positive, pos_detail, "characters");
}

VerificationReport full_report(const CenterBundle& bundle, bool with_oracle) {
    VerificationReport rep;
    rep.merge(bundle.verify());
    if (!rep.all_pass()) return rep;

    if (!bundle.has_center()) {
        auto th = irreducible_characters(bundle.D);
        character_checks(th, rep, "");
        return rep;
    }

    CliffordData data;
    try {
        data = compute_clifford(bundle);
    } catch (const std::exception& e) {
        rep.add("clifford-computation", false, e.what(), "clifford");
        return rep;
    }
    character_checks(data.theory_d, rep, "D-");
    character_checks(data.theory_z, rep, "Z-");
    counting_checks(bundle, data, rep);
    rep.merge(verify_main_theorem(bundle, data));
    if (bundle.smatrix) rep.merge(verify_modular_formula(bundle, data));

    if (with_oracle) {
        // character agreement with the numeric pipeline
        auto match_chars = [&](const GradedBasedRing& ring, const CharacterTheory& th,
                               const std::string& id) {
            if (!ring.grade_zero_commutative()) return;
            auto numeric = oracle_characters(ring);
            OracleConfig cfg;
            bool ok = numeric.size() == th.irreps.size();
            std::string detail = ok ? "" : "character counts differ";
            for (size_t i = 0; i < th.irreps.size() && ok; ++i) {
                bool found = false;
                for (const auto& tuple : numeric) {
                    bool same = true;
                    for (size_t k = 0; k < tuple.size(); ++k)
                        if (!tuple[k].near(th.irreps[i].values[k].embed(), cfg.tolerance)) {
                            same = false;
                            break;
                        }
                    if (same) {
                        found = true;
                        break;
                    }
                }
                if (!found) {
                    ok = false;
                    detail = th.irreps[i].label + " has no numeric counterpart";
                }
            }
            rep.add(id, ok, detail, "oracle");
        };
        match_chars(bundle.D, data.theory_d, "oracle-characters-D");
        match_chars(bundle.center(), data.theory_z, "oracle-characters-Z");

        auto table = restriction_multiplicities(bundle);
        auto oracle_table = oracle_multiplicities(bundle);
        rep.add("oracle-multiplicities", table.entries == oracle_table, "", "oracle");
        rep.merge(oracle_orthogonality(bundle, data.theory_d, data.extensions));
    }
    return rep;
}

// ---------------------------------------------------------------------------
// rendering helpers

std::vector<std::string> scalar_row(const std::vector<Scalar>& v) {
    std::vector<std::string> out;
    for (const auto& x : v) out.push_back(x.str());
    return out;
}

ordered_json scalar_list(const std::vector<Scalar>& v) {
    ordered_json j = ordered_json::array();
    for (const auto& x : v) j.push_back(x.str());
    return j;
}

void print_mult_table(std::ostream& out, const CenterBundle& bundle,
                      const MultiplicityTable& t, const std::string& title, bool ascii) {
    const GradedBasedRing& z = bundle.center();
    std::vector<std::string> headers{title};
    for (size_t c : t.cols) headers.push_back(bundle.D.labels[c]);
    std::vector<std::vector<std::string>> rows;
    for (size_t r = 0; r < t.rows.size(); ++r) {
        std::vector<std::string> row{z.labels[t.rows[r]]};
        for (const auto& v : t.entries[r]) row.push_back(v.str());
        rows.push_back(std::move(row));
    }
    out << render_table(headers, rows, ascii);
}

ordered_json mult_json(const CenterBundle& bundle, const MultiplicityTable& t) {
    const GradedBasedRing& z = bundle.center();
    ordered_json j;
    j["rows"] = ordered_json::array();
    for (size_t r : t.rows) j["rows"].push_back(z.labels[r]);
    j["cols"] = ordered_json::array();
    for (size_t c : t.cols) j["cols"].push_back(bundle.D.labels[c]);
    j["entries"] = ordered_json::array();
    for (const auto& row : t.entries) {
        ordered_json jr = ordered_json::array();
        for (const auto& v : row) jr.push_back(v.convert_to<long>());
        j["entries"].push_back(std::move(jr));
    }
    return j;
}

// ---------------------------------------------------------------------------
// subcommands

int cmd_validate(const Options& opt, std::ostream& out) {
    auto bundle = load_bundle(opt.bundle_path);
    const auto& rep = bundle.verify();
    out << (opt.json ? report_to_json(rep) : render_report(rep, opt.ascii));
    return rep.all_pass() ? 0 : 1;
}

int cmd_chartable(const Options& opt, std::ostream& out) {
    auto bundle = load_bundle(opt.bundle_path);
    bundle.require_verified();
    auto th = irreducible_characters(bundle.D);
    if (opt.json) {
        ordered_json j;
        j["ring"] = bundle.D.name;
        j["characters"] = ordered_json::array();
        for (const auto& ch : th.irreps) {
            ordered_json c;
            c["label"] = ch.label;
            c["values"] = ordered_json::object();
            for (size_t k = 0; k < th.grade0.size(); ++k)
                c["values"][bundle.D.labels[th.grade0[k]]] = ch.values[k].str();
            c["dim"] = ch.dim.str();
            c["codegree"] = ch.codegree.str();
            c["exact"] = ch.exact;
            j["characters"].push_back(std::move(c));
        }
        out << j.dump(2) << "\n";
    } else {
        std::vector<std::string> headers{"irrep"};
        for (size_t k : th.grade0) headers.push_back(bundle.D.labels[k]);
        headers.push_back("dim");
        headers.push_back("codegree");
        std::vector<std::vector<std::string>> rows;
        for (const auto& ch : th.irreps) {
            std::vector<std::string> row{ch.label};
            for (const auto& v : ch.values) row.push_back(v.str());
            row.push_back(ch.dim.str());
            row.push_back(ch.codegree.str());
            rows.push_back(std::move(row));
        }
        out << render_table(headers, rows, opt.ascii);
    }
    return 0;
}

int cmd_codegrees(const Options& opt, std::ostream& out) {
    auto bundle = load_bundle(opt.bundle_path);
    bundle.require_verified();
    auto th = irreducible_characters(bundle.D);
    if (opt.json) {
        ordered_json j = ordered_json::array();
        for (const auto& ch : th.irreps)
            j.push_back({{"label", ch.label}, {"codegree", ch.codegree.str()}});
        out << j.dump(2) << "\n";
    } else {
        std::vector<std::vector<std::string>> rows;
        for (const auto& ch : th.irreps) rows.push_back({ch.label, ch.codegree.str()});
        out << render_table({"irrep", "codegree"}, rows, opt.ascii);
    }
    return 0;
}

int cmd_twisted(const Options& opt, std::ostream& out) {
    auto bundle = load_bundle(opt.bundle_path);
    auto data = compute_clifford(bundle);
    const GradedBasedRing& d = bundle.D;
    if (opt.json) {
        ordered_json j;
        j["gauge"] = "deterministic generator, principal root normalization (m^N = e_E)";
        j["extensions"] = ordered_json::array();
        for (const auto& ext : data.extensions) {
            ordered_json e;
            e["irrep"] = data.theory_d.irreps[ext.irrep].label;
            e["m"] = scalar_list(ext.m);
            e["lambda"] = ext.lambda.str();
            e["chi"] = ordered_json::object();
            for (size_t x = 0; x < d.dim(); ++x) e["chi"][d.labels[x]] = ext.chi[x].str();
            e["rho"] = ordered_json::object();
            for (size_t x = 0; x < bundle.center().dim(); ++x)
                e["rho"][bundle.center().labels[x]] = ext.rho[x].str();
            j["extensions"].push_back(std::move(e));
        }
        out << j.dump(2) << "\n";
    } else {
        out << "gauge: deterministic generator, principal root normalization (m^N = e_E)\n";
        for (const auto& ext : data.extensions) {
            out << "extension of " << data.theory_d.irreps[ext.irrep].label << ", m = (";
            for (size_t i = 0; i < ext.m.size(); ++i)
                out << (i ? ", " : "") << ext.m[i].str();
            out << ")\n";
            for (unsigned a = 0; a < d.grading_order; ++a) {
                auto ga = d.grade_indices(a);
                std::vector<std::string> headers{"grade " + std::to_string(a)};
                std::vector<std::string> row{"chi~"};
                for (size_t x : ga) {
                    headers.push_back(d.labels[x]);
                    row.push_back(ext.chi[x].str());
                }
                out << render_table(headers, {row}, opt.ascii);
            }
        }
    }
    return 0;
}

int cmd_mult(const Options& opt, std::ostream& out) {
    auto bundle = load_bundle(opt.bundle_path);
    auto data = compute_clifford(bundle);
    auto restriction = restriction_multiplicities(bundle);
    auto formula = formula_multiplicities(bundle, data);
    bool agree = restriction.entries == formula.entries;
    VerificationReport rep;
    if (opt.verify) rep = verify_main_theorem(bundle, data);

    if (opt.json) {
        ordered_json j;
        j["restriction"] = mult_json(bundle, restriction);
        j["formula"] = mult_json(bundle, formula);
        j["agree"] = agree;
        if (opt.verify) j["verification"] = nlohmann::ordered_json::parse(report_to_json(rep));
        out << j.dump(2) << "\n";
    } else {
        print_mult_table(out, bundle, restriction, "restriction", opt.ascii);
        print_mult_table(out, bundle, formula, "formula", opt.ascii);
        if (!agree) {
            out << "tables differ:\n";
            for (size_t r = 0; r < restriction.rows.size(); ++r)
                for (size_t c = 0; c < restriction.cols.size(); ++c)
                    if (restriction.entries[r][c] != formula.entries[r][c])
                        out << "  (" << bundle.center().labels[restriction.rows[r]] << ", "
                            << bundle.D.labels[restriction.cols[c]]
                            << "): restriction " << restriction.entries[r][c] << ", formula "
                            << formula.entries[r][c] << "\n";
        }
        if (opt.verify) out << render_report(rep, opt.ascii);
    }
    return (agree && (!opt.verify || rep.all_pass())) ? 0 : 1;
}

int cmd_crossed_s(const Options& opt, std::ostream& out) {
    auto bundle = load_bundle(opt.bundle_path);
    auto data = compute_clifford(bundle);
    auto st = crossed_s_matrix(bundle, data);
    const GradedBasedRing& z = bundle.center();
    if (opt.json) {
        ordered_json j;
        j["rows"] = ordered_json::array();
        for (size_t r : st.rows) j["rows"].push_back(z.labels[r]);
        j["cols"] = ordered_json::array();
        for (size_t c : st.cols) j["cols"].push_back(z.labels[c]);
        j["entries"] = ordered_json::array();
        for (const auto& row : st.entries) j["entries"].push_back(scalar_list(row));
        out << j.dump(2) << "\n";
    } else {
        std::vector<std::string> headers{"S~"};
        for (size_t c : st.cols) headers.push_back(z.labels[c]);
        std::vector<std::vector<std::string>> rows;
        for (size_t r = 0; r < st.rows.size(); ++r) {
            std::vector<std::string> row{z.labels[st.rows[r]]};
            for (const auto& v : st.entries[r]) row.push_back(v.str());
            rows.push_back(std::move(row));
        }
        out << render_table(headers, rows, opt.ascii);
    }
    return 0;
}

int cmd_report(const Options& opt, std::ostream& out) {
    auto bundle = load_bundle(opt.bundle_path);
    auto rep = full_report(bundle, opt.with_oracle);
    out << (opt.json ? report_to_json(rep) : render_report(rep, opt.ascii));
    return rep.all_pass() ? 0 : 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"graded based ring toolkit"};
    app.require_subcommand(1);
    Options opt;

    struct Sub {
        const char* name;
        const char* help;
        int (*fn)(const Options&, std::ostream&);
        CLI::App* cmd = nullptr;
    };
    std::vector<Sub> subs{
        {"validate", "check the based-ring and bundle axioms", cmd_validate},
        {"chartable", "irreducible characters of grade 0", cmd_chartable},
        {"codegrees", "formal codegrees of grade 0", cmd_codegrees},
        {"twisted", "twisted character tables of the extensions", cmd_twisted},
        {"mult", "restriction and formula multiplicity tables", cmd_mult},
        {"crossed-s", "crossed S-matrix", cmd_crossed_s},
        {"report", "run every verification", cmd_report},
    };
    for (auto& s : subs) {
        s.cmd = app.add_subcommand(s.name, s.help);
        s.cmd->add_option("bundle", opt.bundle_path, "bundle JSON file")->required();
        s.cmd->add_flag("--json", opt.json, "machine-readable output");
        s.cmd->add_flag("--ascii", opt.ascii, "plain ASCII tables");
        if (std::string(s.name) == "mult")
            s.cmd->add_flag("--verify", opt.verify, "also run the table verifications");
        if (std::string(s.name) == "report")
            s.cmd->add_flag("--with-oracle", opt.with_oracle, "include numeric oracle checks");
    }

    try {
        app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return 0;
        }
        err << e.what() << "\n";
        return 2;
    }

    try {
        for (const auto& s : subs)
            if (s.cmd->parsed()) return s.fn(opt, out);
        return 2;
    } catch (const ParseError& e) {
        err << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace fusionkit::cli
