// Python bindings for the handle homology engine. Torsion coefficients are
// arbitrary-precision, so they cross the boundary as Python ints built from
// decimal strings.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "handlehom/catalog.hpp"
#include "handlehom/decomposition.hpp"
#include "handlehom/duality.hpp"
#include "handlehom/errors.hpp"
#include "handlehom/homology.hpp"
#include "handlehom/moves.hpp"
#include "handlehom/textio.hpp"

namespace py = pybind11;

namespace {

py::object to_py_int(const hh::Int& v) {
  PyObject* obj = PyLong_FromString(v.get_str().c_str(), nullptr, 10);
  if (!obj) throw py::error_already_set();
  return py::reinterpret_steal<py::object>(obj);
}

py::list torsion_list(const hh::AbelianGroup& g) {
  py::list out;
  for (const hh::Int& t : g.torsion) out.append(to_py_int(t));
  return out;
}

hh::CoefficientRing ring_arg(const std::string& ring) {
  if (ring == "z" || ring == "Z") return hh::CoefficientRing::Integers;
  if (ring == "z2" || ring == "Z2") return hh::CoefficientRing::ModTwo;
  throw py::value_error("ring must be 'z' or 'z2'");
}

hh::SignConvention sign_arg(const std::string& sign) {
  if (sign == "geiges") return hh::SignConvention::GeigesSign;
  if (sign == "plain") return hh::SignConvention::Plain;
  throw py::value_error("sign must be 'geiges' or 'plain'");
}

py::dict profile_dict(const hh::HomologyProfile& p, const char* degree_prefix) {
  py::dict out;
  py::list groups;
  for (std::size_t k = 0; k < p.groups.size(); ++k) {
    py::dict g;
    g["free_rank"] = p.groups[k].free_rank;
    g["torsion"] = torsion_list(p.groups[k]);
    g["text"] = p.groups[k].to_string();
    groups.append(g);
  }
  out["ring"] = hh::to_string(p.ring);
  out["groups"] = groups;
  out["betti"] = p.betti;
  out["chi"] = p.euler;
  out["degree_prefix"] = degree_prefix;
  return out;
}

}  // namespace

PYBIND11_MODULE(_handlehom, m) {
  m.doc() = "Exact handle homology of compact manifolds";

  py::register_exception<hh::ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<hh::MathError>(m, "MathError",
                                        PyExc_ValueError);
  py::register_exception<hh::SemanticError>(m, "SemanticError",
                                            PyExc_ValueError);

  py::class_<hh::HandleDecomposition>(m, "Decomposition")
      .def_readonly("dimension", &hh::HandleDecomposition::dimension)
      .def_readonly("relative", &hh::HandleDecomposition::relative)
      .def_property_readonly("orientation",
                             [](const hh::HandleDecomposition& d) {
                               return hh::to_string(d.orientation_mode);
                             })
      .def("handle_counts",
           [](const hh::HandleDecomposition& d) {
             std::vector<int> counts;
             for (int k = 0; k <= d.dimension; ++k)
               counts.push_back(d.handle_count(k));
             return counts;
           })
      .def("handles",
           [](const hh::HandleDecomposition& d, int k) {
             if (k < 0 || k > d.dimension)
               throw py::index_error("degree out of range");
             return d.handles[k];
           })
      .def("__eq__", [](const hh::HandleDecomposition& a,
                        const hh::HandleDecomposition& b) { return a == b; })
      .def("__repr__", [](const hh::HandleDecomposition& d) {
        return "<Decomposition dim=" + std::to_string(d.dimension) + ">";
      });

  m.def("parse", [](const std::string& text) {
    return hh::parse_decomposition(text);
  });
  m.def("serialize", &hh::serialize_decomposition);

  m.def("catalog_names", [] {
    std::vector<std::string> names;
    for (const hh::CatalogEntry& e : hh::catalog()) names.push_back(e.name);
    return names;
  });
  m.def("catalog_entry", [](const std::string& name) {
    auto entry = hh::catalog_entry(name);
    if (!entry) throw py::key_error("no catalog entry named '" + name + "'");
    return entry->decomposition;
  });

  m.def(
      "validate",
      [](const hh::HandleDecomposition& d) {
        hh::ValidationReport r = hh::validate(d);
        py::list violations;
        for (const hh::Violation& v : r.violations) {
          py::dict item;
          item["code"] = hh::violation_name(v.code);
          item["message"] = v.message;
          violations.append(item);
        }
        py::dict out;
        out["ok"] = r.ok();
        out["handle_counts"] = r.handle_counts;
        out["violations"] = violations;
        return out;
      });

  m.def(
      "homology",
      [](const hh::HandleDecomposition& d, const std::string& ring,
         const std::string& sign) {
        return profile_dict(
            hh::homology(hh::build_complex(d, sign_arg(sign), ring_arg(ring))),
            "H_");
      },
      py::arg("decomposition"), py::arg("ring") = "z",
      py::arg("sign") = "geiges");

  m.def(
      "cohomology",
      [](const hh::HandleDecomposition& d, const std::string& ring,
         const std::string& sign) {
        return profile_dict(hh::cohomology(hh::build_complex(
                                d, sign_arg(sign), ring_arg(ring))),
                            "H^");
      },
      py::arg("decomposition"), py::arg("ring") = "z",
      py::arg("sign") = "geiges");

  m.def("euler", &hh::euler_characteristic);

  m.def("orientability", [](const hh::HandleDecomposition& d) {
    hh::OrientabilityResult r = hh::classify_orientability(d);
    py::dict out;
    out["value"] = hh::to_string(r.value);
    out["reason"] = r.reason;
    return out;
  });

  m.def(
      "dual",
      [](const hh::HandleDecomposition& d, const std::string& ring) {
        return hh::dual_decomposition(d, ring_arg(ring));
      },
      py::arg("decomposition"), py::arg("ring") = "z");

  m.def(
      "check_duality",
      [](const hh::HandleDecomposition& d, const std::string& ring) {
        hh::DualityReport r = hh::check_duality(d, ring_arg(ring));
        py::dict out;
        out["ring"] = hh::to_string(r.ring);
        out["applicable"] = r.applicable;
        out["reason"] = r.reason;
        out["all_isomorphic"] = r.all_isomorphic;
        py::list rows;
        for (const hh::DualityRow& row : r.rows) {
          py::dict item;
          item["degree"] = row.degree;
          item["cohomology"] = row.cohomology.to_string();
          item["dual_homology"] = row.dual_homology.to_string();
          item["isomorphic"] = row.isomorphic;
          rows.append(item);
        }
        out["rows"] = rows;
        out["table"] = r.render();
        return out;
      },
      py::arg("decomposition"), py::arg("ring") = "z");

  m.def("slide", &hh::slide, py::arg("decomposition"), py::arg("degree"),
        py::arg("moving"), py::arg("over"), py::arg("sign") = 1);
  m.def("cancel", &hh::cancel, py::arg("decomposition"), py::arg("degree"),
        py::arg("k_handle"), py::arg("km1_handle"));
  m.def("create_pair", &hh::create_pair, py::arg("decomposition"),
        py::arg("degree"), py::arg("k_label"), py::arg("km1_label"),
        py::arg("sign") = 1);
  m.def("reorient", &hh::reorient_handle, py::arg("decomposition"),
        py::arg("degree"), py::arg("handle"));
  m.def("apply_move", [](const hh::HandleDecomposition& d,
                         const std::string& line) {
    return hh::apply_move(d, hh::parse_move(line));
  });

  m.def(
      "fuzz",
      [](const hh::HandleDecomposition& d, int steps, std::uint64_t seed) {
        hh::MoveJournal j = hh::fuzz_moves(d, steps, seed);
        py::dict out;
        py::list moves;
        for (const hh::Move& mv : j.moves) moves.append(hh::format_move(mv));
        out["moves"] = moves;
        out["result"] = j.result;
        out["journal_text"] = hh::serialize_journal(j);
        return out;
      },
      py::arg("decomposition"), py::arg("steps"), py::arg("seed") = 0);
}
