#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "nmds/cli.hpp"
#include "nmds/json_io.hpp"

namespace py = pybind11;
using namespace nmds;

namespace {

using Rows = std::vector<std::vector<std::string>>;

FieldMatrix to_matrix(const Field& f, const Rows& rows) {
    std::vector<std::vector<Rep>> reps;
    for (const auto& row : rows) {
        std::vector<Rep> r;
        for (const auto& cell : row) r.push_back(f.parse_rep(cell));
        reps.push_back(std::move(r));
    }
    return FieldMatrix(f, reps);
}

std::vector<Rep> to_reps(const Field& f, const std::vector<std::string>& v) {
    std::vector<Rep> out;
    for (const auto& s : v) out.push_back(f.parse_rep(s));
    return out;
}

}  // namespace

PYBIND11_MODULE(_nmds, m) {
    m.doc() = "MDS / NMDS constructions over finite fields";

    static py::handle error_type = py::exception<Error>(m, "NmdsError").release();
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const Error& e) {
            py::object cls = py::reinterpret_borrow<py::object>(error_type);
            py::object err = cls(std::string(e.what()));
            err.attr("kind") = std::string(to_string(e.kind()));
            err.attr("witness") = e.witness();
            PyErr_SetObject(error_type.ptr(), err.ptr());
        }
    });

    py::class_<Field>(m, "Field")
        .def(py::init([](const std::string& spec) { return Field::parse(spec); }), py::arg("spec"))
        .def_property_readonly("order", &Field::order)
        .def_property_readonly("characteristic", &Field::characteristic)
        .def_property_readonly("degree", &Field::degree)
        .def("add", [](const Field& f, const std::string& a, const std::string& b) {
            return f.format_rep(f.add(f.parse_rep(a), f.parse_rep(b)));
        })
        .def("mul", [](const Field& f, const std::string& a, const std::string& b) {
            return f.format_rep(f.mul(f.parse_rep(a), f.parse_rep(b)));
        })
        .def("inv", [](const Field& f, const std::string& a) { return f.format_rep(f.inv(f.parse_rep(a))); })
        .def("pow", [](const Field& f, const std::string& a, std::int64_t e) { return f.format_rep(f.pow(f.parse_rep(a), e)); })
        .def("to_int", [](const Field& f, const std::string& a) { return f.parse_rep(a); })
        .def("format", [](const Field& f, Rep a, bool hex) { return f.format_rep(a, hex ? Notation::Hex : Notation::Power); },
             py::arg("value"), py::arg("hex") = false)
        .def("__repr__", &Field::to_string);
    py::implicitly_convertible<std::string, Field>();

    m.def("_construct_gvand", [](const Field& f, const std::vector<std::string>& x, const std::vector<std::string>& y,
                                 const std::string& disc, const std::string& target, bool verify) {
        const XYSpec spec(f, to_reps(f, x), to_reps(f, y), parse_disc(disc));
        const Target t = parse_target(target);
        const Construction c = construct(spec, t, verify);
        std::optional<CodeReport> rep;
        if (verify) rep = classify(standard_generator(c.matrix));
        return construction_to_json(spec, t, c, rep).dump();
    });
    m.def("_construct_involutory", [](const Field& f, const std::vector<std::string>& x, const std::string& l,
                                      const std::string& target) {
        const auto xs = to_reps(f, x);
        const Target t = parse_target(target);
        const Rep lv = f.parse_rep(l);
        const auto c = construct_involutory(f, xs, lv, t);
        return involutory_to_json(xs, lv, t, c, classify(standard_generator(c.base.matrix))).dump();
    });
    m.def("classify_matrix", [](const Field& f, const Rows& rows) {
        return std::string(to_string(classify_matrix(to_matrix(f, rows))));
    });
    m.def("_code_report", [](const Field& f, const Rows& rows) {
        return code_report_to_json(f, classify(standard_generator(to_matrix(f, rows)))).dump();
    });
    m.def("det_gvand", [](const Field& f, const std::string& spec_text) {
        const auto spec = GVandSpec::parse(f, spec_text);
        return py::make_tuple(f.format_rep(det_gvand_formula(spec).value), f.format_rep(det(gvand(spec)).value()));
    });
    m.def("scan", [](const Field& f, const std::vector<std::string>& roots, std::uint64_t lo, std::uint64_t hi) {
        std::vector<std::pair<std::uint64_t, std::string>> out;
        for (const auto& e : scan_exponents(poly_from_roots(f, to_reps(f, roots)), lo, hi))
            out.emplace_back(e.m, std::string(to_string(e.verdict)));
        return out;
    });
    m.def("theta_family", [](const std::string& family, const Field& f, const std::string& theta, std::size_t n,
                             std::uint64_t mm, bool verify) {
        const auto tc = construct_theta(parse_family(family), f, f.parse_rep(theta), n, mm, verify);
        py::dict d;
        d["verdict"] = std::string(to_string(tc.verdict));
        d["poly"] = tc.g.to_string();
        std::vector<std::string> roots;
        for (auto l : tc.family.lambdas) roots.push_back(f.format_rep(l));
        d["roots"] = roots;
        if (tc.verified) d["verified"] = std::string(to_string(*tc.verified));
        return d;
    }, py::arg("family"), py::arg("field"), py::arg("theta"), py::arg("n"), py::arg("m"), py::arg("verify") = false);
    m.def("run_cli", [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        const int code = run_cli(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
    });
}
