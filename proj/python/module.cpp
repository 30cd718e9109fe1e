#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "zipper/error.hpp"
#include "zipper/literal.hpp"
#include "zipper/random.hpp"

namespace py = pybind11;
using namespace zipper;

namespace {
  // Python-side handle; the library shares structures as pointers to const.
  struct Structure {
    GroupPtr group;
  };

  std::vector<std::string> words(Alphabet a, PrefixCode const& code) {
    std::vector<std::string> out;
    for (auto const& w : code) {
      out.push_back(format_word(a, w));
    }
    return out;
  }
}  // namespace

PYBIND11_MODULE(_zipperact, m) {
  m.doc() = "Zipper actions of Thompson-like groups V_d(H)";

  static py::exception<Error> error(m, "ZipperError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) {
        std::rethrow_exception(p);
      }
    } catch (Error const& e) {
      py::set_error(error, (std::string(to_string(e.kind())) + ": " + e.what()).c_str());
    }
  });

  py::class_<Structure>(m, "Structure")
      .def_static(
          "trivial",
          [](std::size_t d) { return Structure{SelfSimilarGroup::trivial(d)}; },
          py::arg("d"))
      .def_static(
          "symmetric",
          [](std::size_t d) { return Structure{SelfSimilarGroup::symmetric(d)}; },
          py::arg("d"))
      .def_static(
          "from_automaton",
          [](std::string const& text) {
            return Structure{SelfSimilarGroup::make(parse_automaton(text))};
          },
          py::arg("text"))
      .def_property_readonly("degree",
                             [](Structure const& h) { return h.group->degree(); })
      .def_property_readonly("order",
                             [](Structure const& h) { return h.group->order(); })
      .def("name", [](Structure const& h, ElementId i) { return h.group->name(i); })
      .def("__repr__", [](Structure const& h) {
        return "<Structure d=" + std::to_string(h.group->degree())
               + " |H|=" + std::to_string(h.group->order()) + ">";
      });

  m.def(
      "validate_automaton",
      [](std::string const& text) {
        std::vector<std::pair<std::string, std::vector<std::vector<std::size_t>>>> out;
        for (auto const& v : validate(parse_automaton(text))) {
          out.emplace_back(v.axiom, v.witnesses);
        }
        return out;
      },
      py::arg("text"),
      "Violated axioms with their witnesses; empty for a valid structure.");

  py::class_<CanonicalElement>(m, "Element")
      .def(py::init([](Structure const& h, std::string const& literal) {
             return parse_element(h.group, literal);
           }),
           py::arg("structure"),
           py::arg("literal"))
      .def_static("identity",
                  [](Structure const& h) { return identity_element(h.group); })
      .def_static(
          "random",
          [](Structure const& h, std::uint64_t seed, std::size_t max_depth) {
            Rng rng(seed);
            return random_element(rng, h.group, {max_depth, 0.75});
          },
          py::arg("structure"),
          py::arg("seed"),
          py::arg("max_depth") = 5)
      .def("__mul__", [](CanonicalElement const& g, CanonicalElement const& h) {
        return compose(g, h);
      })
      .def("inverse", [](CanonicalElement const& g) { return invert(g); })
      .def("apply",
           [](CanonicalElement const& g, std::string const& point) {
             auto const a = g.table().structure().alphabet();
             return format_point(a, apply(g, parse_point(a, point)));
           })
      .def("max_partition",
           [](CanonicalElement const& g) {
             return words(g.table().structure().alphabet(), max_partition(g));
           })
      .def("zipper_length", [](CanonicalElement const& g) { return zipper_length(g); })
      .def("symdiff",
           [](CanonicalElement const& g) {
             std::vector<std::pair<int, std::string>> out;
             for (auto const& [e, sign] : symdiff(g)) {
               out.emplace_back(sign, format_eclass(e));
             }
             return out;
           })
      .def("in_F", [](CanonicalElement const& g) { return is_in_F(g); })
      .def("in_T", [](CanonicalElement const& g) { return is_in_T(g); })
      .def("__eq__", [](CanonicalElement const& a, CanonicalElement const& b) {
        return a == b;
      })
      .def("__hash__", [](CanonicalElement const& g) {
        return std::hash<CanonicalElement>()(g);
      })
      .def("__str__", &format_element)
      .def("__repr__", [](CanonicalElement const& g) {
        return "Element('" + format_element(g) + "')";
      });

  m.def("cocycle_defect", &cocycle_identity_defect, py::arg("g1"), py::arg("g2"));
  m.def("wall_separation", &wall_separation, py::arg("g1"), py::arg("g2"));

  m.def(
      "audit",
      [](Structure const&                     h,
         std::vector<CanonicalElement> const& gens,
         std::size_t                          radius,
         std::size_t                          threshold) {
        std::vector<std::size_t> counts;
        for (auto const& row : properness_audit(h.group, gens, radius, threshold).rows) {
          counts.push_back(row.count);
        }
        return counts;
      },
      py::arg("structure"),
      py::arg("generators"),
      py::arg("radius"),
      py::arg("threshold"),
      "Counts of elements with zipper length <= threshold, per Cayley radius.");

  m.def(
      "nowalls",
      [](Structure const& h, std::size_t count) {
        auto const r = nowalls_demo(h.group, count);
        py::dict   out;
        out["f1"]        = format_eclass(r.f1_class);
        out["f2"]        = format_eclass(r.f2_class);
        out["witnesses"] = r.witnesses;
        out["ok"]        = r.all_ok();
        out["vz_witness"] = r.vz_witness ? py::cast(*r.vz_witness) : py::none();
        return out;
      },
      py::arg("structure"),
      py::arg("count"));
}
