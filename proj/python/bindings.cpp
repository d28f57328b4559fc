#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>

#include "motivic/a1_class.hpp"
#include "motivic/convolution.hpp"
#include "motivic/errors.hpp"
#include "motivic/json_io.hpp"
#include "motivic/pretty.hpp"
#include "motivic/realizations.hpp"
#include "motivic/vanishing.hpp"

#define STRINGIFY(x) #x
#define MACRO_STRINGIFY(x) STRINGIFY(x)

namespace py = pybind11;
using namespace motivic;

namespace {

py::int_ to_py(const Integer& z)
{
    return py::reinterpret_steal<py::int_>(PyLong_FromString(z.get_str().c_str(), nullptr, 10));
}

py::object to_py(const json::Json& j)
{
    return py::module_::import("json").attr("loads")(j.dump());
}

json::Json parse(const std::string& text)
{
    return json::parse_text(text);
}

MuClass class_from_json(const std::string& text)
{
    return json::parse_class(parse(text));
}

A1Class a1_from_json(const std::string& text)
{
    return json::parse_a1(parse(text));
}

Generator generator_from_json(const std::string& text)
{
    const auto j = parse(text);
    if (j.is_object() && j.contains("components"))
        return Resolved{{Critical{BasePoint(0), json::parse_datum(j)}}};
    return json::parse_generator(j);
}

} // namespace

PYBIND11_MODULE(_core, m)
{
    m.doc() = "Equivariant Grothendieck-ring calculator. Classes are exchanged as JSON strings.";

    auto base = py::register_exception<Error>(m, "MotivicError", PyExc_RuntimeError);
    py::register_exception<ValidationError>(m, "ValidationError", base.ptr());
    py::register_exception<RealizationError>(m, "RealizationError", base.ptr());
    py::register_exception<ParseError>(m, "ParseError", base.ptr());
    py::register_exception<BudgetError>(m, "BudgetError", base.ptr());

    py::class_<MuClass>(m, "MuClass")
        .def(py::init<>())
        .def_static("from_json", &class_from_json, py::arg("text"))
        .def("to_json", [](const MuClass& c) { return json::to_json(c).dump(); })
        .def_static("one", &MuClass::one)
        .def_static("lefschetz", &MuClass::lefschetz, py::arg("exponent") = 1)
        .def_static("orbit", &MuClass::orbit, py::arg("size"))
        .def("is_zero", &MuClass::is_zero)
        .def("is_trivial_action", &MuClass::is_trivial_action)
        .def("has_opaque", &MuClass::has_opaque)
        .def("__add__", [](const MuClass& a, const MuClass& b) { return a + b; })
        .def("__sub__", [](const MuClass& a, const MuClass& b) { return a - b; })
        .def("__neg__", [](const MuClass& a) { return -a; })
        .def("__mul__", [](const MuClass& a, const MuClass& b) { return a * b; })
        .def("__eq__", [](const MuClass& a, const MuClass& b) { return a == b; })
        .def("__str__", [](const MuClass& c) { return pretty(c); })
        .def("__repr__", [](const MuClass& c) { return "MuClass(" + pretty(c) + ")"; });

    py::class_<A1Class>(m, "A1Class")
        .def(py::init<>())
        .def_static("from_json", &a1_from_json, py::arg("text"))
        .def_static("at",
                    [](const std::string& point, const MuClass& c) { return A1Class::at(BasePoint::parse(point), c); },
                    py::arg("point"), py::arg("cls"))
        .def("to_json", [](const A1Class& f) { return json::to_json(f).dump(); })
        .def("fiber", [](const A1Class& f, const std::string& point) { return f.fiber(BasePoint::parse(point)); })
        .def("is_zero", &A1Class::is_zero)
        .def("__add__", [](const A1Class& a, const A1Class& b) { return a + b; })
        .def("__sub__", [](const A1Class& a, const A1Class& b) { return a - b; })
        .def("__eq__", [](const A1Class& a, const A1Class& b) { return a == b; })
        .def("__str__", [](const A1Class& f) { return pretty(f); })
        .def("__repr__", [](const A1Class& f) { return "A1Class(" + pretty(f) + ")"; });

    m.def("normalize", &class_from_json, py::arg("text"), "Normal form of a class given as JSON.");
    m.def("forget_action", &forget_action);
    m.def("star", &star, "Convolution product.");
    m.def("star_power", &star_power, py::arg("n"), py::arg("r"));
    m.def("assoc_check", [](const MuClass& a, const MuClass& b, const MuClass& c) {
        return to_py(json::to_json(assoc_check(a, b, c)));
    });

    m.def("a1_star", &a1_star);
    m.def("a1_unit", &a1_unit);
    m.def("a1_lefschetz", &a1_lefschetz);
    m.def("epsilon_push", &epsilon_push);

    m.def("validate_datum", [](const std::string& text) { return validate_datum(json::parse_datum(parse(text))); });
    m.def("nearby_fiber", [](const std::string& text) { return nearby_fiber(json::parse_datum(parse(text))); });
    m.def("vanishing_cycles", [](const std::string& text) {
        const auto v = vanishing_cycles(json::parse_datum(parse(text)));
        return py::make_tuple(v.phi, v.phi_regular);
    });
    m.def("phi_generator", [](const std::string& text) { return phi_generator(generator_from_json(text)); });
    m.def("phi_measure",
          [](const std::string& text) { return phi_measure(json::parse_presentation(parse(text))); });
    m.def("ts_check", [](const std::string& v, const std::string& w, const std::string& direct) {
        return to_py(json::to_json(
            ts_check(generator_from_json(v), generator_from_json(w), generator_from_json(direct))));
    });

    m.def("chi_c", [](const MuClass& c) { return to_py(chi_c(c)); });
    m.def("chi_of_a1", [](const A1Class& f) { return to_py(chi_of_a1(f)); });
    m.def("e_polynomial", [](const MuClass& c) {
        py::dict out;
        const EPoly e = e_polynomial(c);
        for (const auto& [mono, coeff] : e.coefficients())
            out[py::make_tuple(mono.first, mono.second)] = to_py(coeff);
        return out;
    });
    m.def("point_count_oracle", &point_count_oracle, py::arg("n"), py::arg("r"), py::arg("q"),
          py::arg("budget") = kDefaultOracleBudget);

#ifdef VERSION_INFO
    m.attr("__version__") = MACRO_STRINGIFY(VERSION_INFO);
#else
    m.attr("__version__") = "dev";
#endif
}
