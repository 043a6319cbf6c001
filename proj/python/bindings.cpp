// Python bindings for the main operations: parsing, transforms, colourings,
// parities, invariants and the Reidemeister engine.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <json.hpp>

#include "linkparity/colouring.hpp"
#include "linkparity/diagram.hpp"
#include "linkparity/invariants.hpp"
#include "linkparity/moves.hpp"
#include "linkparity/parity.hpp"
#include "linkparity/report.hpp"

namespace py = pybind11;
namespace lp = linkparity;

namespace {

lp::TwoColouring colouring_from(const std::string& bits) {
    return lp::TwoColouring::from_string(bits);
}

py::dict parity_dict(const lp::GaussDiagram& d, const lp::ParityAssignment& p) {
    py::dict out;
    for (int i = 0; i < d.chord_count(); ++i)
        if (p.in_domain(i)) out[py::int_(d.chord(i).label)] = p.odd(i) ? 1 : 0;
    return out;
}

py::object json_to_py(const nlohmann::ordered_json& j) {
    py::module_ json = py::module_::import("json");
    return json.attr("loads")(j.dump());
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "parity invariants of virtual links from Gauss codes";

    auto base = py::register_exception<lp::Error>(m, "LinkError");
    py::register_exception<lp::SyntaxError>(m, "GaussCodeSyntaxError", base);
    py::register_exception<lp::LabelError>(m, "LabelError", base);
    py::register_exception<lp::IndexError>(m, "RangeError", base);
    py::register_exception<lp::NotTwoColourable>(m, "NotTwoColourable", base);
    py::register_exception<lp::NotAKnot>(m, "NotAKnot", base);
    py::register_exception<lp::OddLinkingNumbers>(m, "OddLinkingNumbers", base);
    py::register_exception<lp::StaleSite>(m, "StaleSite", base);

    py::class_<lp::SimpleGaussDiagram>(m, "SimpleGaussDiagram")
        .def_property_readonly("components", &lp::SimpleGaussDiagram::components)
        .def_property_readonly("chords", &lp::SimpleGaussDiagram::chord_count)
        .def("component_size", &lp::SimpleGaussDiagram::size, py::arg("component"));

    py::class_<lp::GaussDiagram>(m, "GaussDiagram")
        .def(py::init(
                 [](const std::string& gauss_code) { return lp::parse(gauss_code); }),
             py::arg("gauss_code"))
        .def_property_readonly("components", &lp::GaussDiagram::components)
        .def_property_readonly("chords", &lp::GaussDiagram::chord_count)
        .def("component_size", &lp::GaussDiagram::size, py::arg("component"))
        .def("__str__", [](const lp::GaussDiagram& d) { return lp::serialize(d); })
        .def("__repr__",
             [](const lp::GaussDiagram& d) { return "GaussDiagram('" + lp::serialize(d) + "')"; })
        .def("__eq__",
             [](const lp::GaussDiagram& a, const lp::GaussDiagram& b) {
                 return lp::structurally_equal(a, b);
             })
        .def("vertical_mirror",
             [](const lp::GaussDiagram& d) {
                 return lp::transform(d, lp::TransformKind::vertical_mirror());
             })
        .def("horizontal_mirror",
             [](const lp::GaussDiagram& d) {
                 return lp::transform(d, lp::TransformKind::horizontal_mirror());
             })
        .def("reverse_all",
             [](const lp::GaussDiagram& d) {
                 return lp::transform(d, lp::TransformKind::reverse_all());
             })
        .def("reverse_component",
             [](const lp::GaussDiagram& d, int i) {
                 return lp::transform(d, lp::TransformKind::reverse_component(i));
             },
             py::arg("component"))
        .def("crossing_change",
             [](const lp::GaussDiagram& d, int label) {
                 return lp::transform(d, lp::TransformKind::crossing_change(label));
             },
             py::arg("label"))
        .def("rotate_basepoint", &lp::rotate_basepoint, py::arg("component"), py::arg("offset"))
        .def("forget", [](const lp::GaussDiagram& d) { return lp::forget(d); });

    m.def("parse", &lp::parse, py::arg("gauss_code"));
    m.def("serialize", &lp::serialize, py::arg("diagram"));

    m.def("degenerate_components",
          [](const lp::GaussDiagram& d) { return lp::degenerate_components(d); },
          py::arg("diagram"));
    m.def("two_colourable", [](const lp::GaussDiagram& d) { return lp::two_colourable(d); },
          py::arg("diagram"));
    m.def("colourings",
          [](const lp::GaussDiagram& d) {
              std::vector<std::string> out;
              for (const lp::TwoColouring& c : lp::colourings(d)) out.push_back(c.to_string());
              return out;
          },
          py::arg("diagram"));
    m.def("generating_set",
          [](int n) {
              std::vector<std::string> out;
              for (const lp::TwoColouring& c : lp::generating_set(n)) out.push_back(c.to_string());
              return out;
          },
          py::arg("components"));

    m.def("two_colour_parity",
          [](const lp::GaussDiagram& d, const std::string& bits) {
              return parity_dict(d, lp::two_colour_parity(d, colouring_from(bits)));
          },
          py::arg("diagram"), py::arg("colouring"),
          "chord label -> parity bit (1 = odd) for one 2-colouring");
    m.def("gaussian_parity",
          [](const lp::GaussDiagram& d) { return parity_dict(d, lp::gaussian_parity(d)); },
          py::arg("diagram"));
    m.def("naive_parity",
          [](const lp::GaussDiagram& d) { return parity_dict(d, lp::naive_parity(d)); },
          py::arg("diagram"));
    m.def("ip_self_parity",
          [](const lp::GaussDiagram& d) { return parity_dict(d, lp::ip_self_parity(d)); },
          py::arg("diagram"), "self-chords only; needs even pairwise linking numbers");
    m.def("project",
          [](const lp::GaussDiagram& d, const std::string& bits) {
              return lp::project(d, colouring_from(bits));
          },
          py::arg("diagram"), py::arg("colouring"));

    m.def("writhe",
          [](const lp::GaussDiagram& d, const std::string& bits) {
              return lp::writhe(d, colouring_from(bits));
          },
          py::arg("diagram"), py::arg("colouring"));
    m.def("two_colour_writhe",
          [](const lp::GaussDiagram& d, bool oracle) {
              return oracle ? lp::two_colour_writhe_enum(d) : lp::two_colour_writhe_fast(d);
          },
          py::arg("diagram"), py::arg("oracle") = false,
          "sorted J^2 multiset; oracle=True forces the enumeration route");
    m.def("self_writhe", &lp::self_writhe, py::arg("diagram"));
    m.def("naive_writhe", &lp::naive_writhe, py::arg("diagram"));
    m.def("linking_matrix", &lp::linking_matrix, py::arg("diagram"));
    m.def("ip_self_writhe",
          [](const lp::GaussDiagram& d) {
              lp::IpWrithe ip = lp::ip_self_writhe(d);
              return py::make_tuple(ip.self, py::make_tuple(ip.candidates[0], ip.candidates[1]));
          },
          py::arg("diagram"), "(IP_S, (IP_S, IP_S + sum of pairwise lk))");
    m.def("smoothing_height",
          [](const lp::GaussDiagram& d, const std::string& bits) {
              return lp::smoothing_height(d, colouring_from(bits));
          },
          py::arg("diagram"), py::arg("colouring"));
    m.def("chequerboard_certificate",
          [](const lp::GaussDiagram& d) -> py::object {
              auto cert = lp::chequerboard_certificate(d);
              if (!cert) return py::none();
              return py::str(cert->to_string());
          },
          py::arg("diagram"), "an all-even colouring, or None");

    m.def("invariants",
          [](const lp::GaussDiagram& d, const std::string& mode) {
              lp::J2Mode j2_mode = mode == "oracle" ? lp::J2Mode::Enum
                                   : mode == "check" ? lp::J2Mode::Check
                                                     : lp::J2Mode::Fast;
              return json_to_py(lp::profile_to_json(lp::report(d, j2_mode)));
          },
          py::arg("diagram"), py::arg("mode") = "fast",
          "full profile as a dict; mode is 'fast', 'oracle' or 'check'");

    m.def("random_walk", &lp::random_walk, py::arg("diagram"), py::arg("steps"), py::arg("seed"),
          py::arg("max_chords") = 24,
          "deterministic trajectory of Reidemeister moves, including the start");
    m.def("verify_parity_axioms",
          [](const lp::GaussDiagram& d, int steps, std::uint64_t seed, int max_chords) {
              lp::AxiomReport r = lp::verify_parity_axioms(d, steps, seed, max_chords);
              py::dict out;
              out["pass"] = r.pass;
              out["steps"] = r.steps;
              out["colourings_checked"] = r.colourings_checked;
              out["r3_sites_checked"] = r.r3_sites_checked;
              out["r3_all_odd"] = r.r3_all_odd;
              if (r.witness) {
                  py::dict w;
                  w["diagram"] = r.witness->diagram;
                  w["move"] = r.witness->move;
                  w["colouring"] = r.witness->colouring;
                  w["axiom"] = r.witness->axiom;
                  w["detail"] = r.witness->detail;
                  out["witness"] = w;
              } else {
                  out["witness"] = py::none();
              }
              return out;
          },
          py::arg("diagram"), py::arg("steps"), py::arg("seed"), py::arg("max_chords") = 24,
          "random-walk check of the parity axioms for the 2-colour parity");

#ifdef LINKPARITY_VERSION
    m.attr("__version__") = LINKPARITY_VERSION;
#else
    m.attr("__version__") = "dev";
#endif
}
