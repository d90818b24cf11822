#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "fusionkit/cli.hpp"
#include "fusionkit/multiplicity.hpp"
#include "fusionkit/oracle.hpp"

namespace py = pybind11;
using namespace fusionkit;

namespace {

py::list report_to_list(const VerificationReport& rep) {
    py::list out;
    for (const auto& c : rep.checks) {
        py::dict d;
        d["id"] = c.id;
        d["pass"] = c.pass;
        d["detail"] = c.detail;
        d["tag"] = c.tag;
        out.append(std::move(d));
    }
    return out;
}

py::list table_to_list(const MultiplicityTable& t) {
    py::list out;
    for (const auto& row : t.entries) {
        py::list r;
        for (const auto& v : row) r.append(v.convert_to<long>());
        out.append(std::move(r));
    }
    return out;
}

std::vector<std::string> scalar_strings(const std::vector<Scalar>& v) {
    std::vector<std::string> out;
    for (const auto& x : v) out.push_back(x.str());
    return out;
}

}  // namespace

PYBIND11_MODULE(_fusionkit, mod) {
    mod.doc() = "exact character theory of graded based rings";

    py::register_exception<ParseError>(mod, "ParseError", PyExc_ValueError);

    py::class_<GradedBasedRing>(mod, "Ring")
        .def_readonly("name", &GradedBasedRing::name)
        .def_readonly("grading_order", &GradedBasedRing::grading_order)
        .def_readonly("labels", &GradedBasedRing::labels)
        .def_readonly("grades", &GradedBasedRing::grades)
        .def("dim", &GradedBasedRing::dim)
        .def("grade_indices", &GradedBasedRing::grade_indices)
        .def("structure_constant", [](const GradedBasedRing& r, size_t i, size_t j, size_t k) {
            return r.structure_constant(i, j, k);
        });

    py::class_<CenterBundle>(mod, "Bundle")
        .def_readonly("name", &CenterBundle::name)
        .def_readonly("D", &CenterBundle::D)
        .def("has_center", &CenterBundle::has_center)
        .def("center", &CenterBundle::center, py::return_value_policy::reference_internal)
        .def("validate",
             [](const CenterBundle& b) { return report_to_list(b.verify()); })
        .def("is_valid", [](const CenterBundle& b) { return b.verify().all_pass(); })
        .def("to_json", [](const CenterBundle& b) { return bundle_to_json(b); });

    mod.def("load_bundle", &load_bundle, py::arg("path"));
    mod.def("parse_bundle", &parse_bundle, py::arg("json_text"));

    mod.def("character_table", [](const CenterBundle& b) {
        auto th = irreducible_characters(b.D);
        py::list out;
        for (const auto& ch : th.irreps) {
            py::dict d;
            d["label"] = ch.label;
            d["values"] = scalar_strings(ch.values);
            d["dim"] = ch.dim.str();
            d["codegree"] = ch.codegree.str();
            d["exact"] = ch.exact;
            out.append(std::move(d));
        }
        return out;
    });

    mod.def("twisted_characters", [](const CenterBundle& b) {
        auto data = compute_clifford(b);
        py::list out;
        for (const auto& ext : data.extensions) {
            py::dict d;
            d["irrep"] = data.theory_d.irreps[ext.irrep].label;
            d["lambda"] = ext.lambda.str();
            d["m"] = scalar_strings(ext.m);
            d["chi"] = scalar_strings(ext.chi);
            d["rho"] = scalar_strings(ext.rho);
            out.append(std::move(d));
        }
        return out;
    });

    mod.def("multiplicities", [](const CenterBundle& b) {
        auto t = restriction_multiplicities(b);
        py::dict d;
        std::vector<std::string> rows, cols;
        for (size_t r : t.rows) rows.push_back(b.center().labels[r]);
        for (size_t c : t.cols) cols.push_back(b.D.labels[c]);
        d["rows"] = rows;
        d["cols"] = cols;
        d["entries"] = table_to_list(t);
        return d;
    });

    mod.def("verify", [](const CenterBundle& b) {
        auto data = compute_clifford(b);
        auto rep = verify_main_theorem(b, data);
        if (b.smatrix) rep.merge(verify_modular_formula(b, data));
        return report_to_list(rep);
    });

    mod.def("crossed_s", [](const CenterBundle& b) {
        auto data = compute_clifford(b);
        auto st = crossed_s_matrix(b, data);
        py::dict d;
        std::vector<std::string> rows, cols;
        for (size_t r : st.rows) rows.push_back(b.center().labels[r]);
        for (size_t c : st.cols) cols.push_back(b.center().labels[c]);
        d["rows"] = rows;
        d["cols"] = cols;
        py::list entries;
        for (const auto& row : st.entries) entries.append(scalar_strings(row));
        d["entries"] = std::move(entries);
        return d;
    });

    mod.def(
        "run_cli",
        [](const std::vector<std::string>& args) {
            std::ostringstream out, err;
            int code = cli::run(args, out, err);
            return py::make_tuple(code, out.str(), err.str());
        },
        py::arg("args"));
}
