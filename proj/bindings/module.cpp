#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "drumgeo/gallery.hpp"
#include "drumgeo/geometry.hpp"
#include "drumgeo/io.hpp"
#include "drumgeo/spectral.hpp"
#include "drumgeo/triple.hpp"

namespace py = pybind11;
using namespace drumgeo;

namespace {

py::dict flags_dict(const FlagReport& f) {
  py::dict d;
  d["ec"] = f.ec;
  d["ac"] = f.ac;
  d["ff"] = f.ff;
  d["max"] = f.max;
  d["pair"] = f.pair;
  d["conjugate"] = f.conjugate;
  return d;
}

py::dict spectrum_dict(const Spectrum& s) {
  py::dict d;
  d["h"] = rational_to_string(s.h);
  d["k"] = s.k;
  d["eigenvalues"] = s.eigenvalues;
  d["residuals"] = s.residuals;
  return d;
}

FormType parse_form(const std::string& form) {
  if (form == "hyperbolic") return FormType::kHyperbolic;
  if (form == "elliptic") return FormType::kElliptic;
  throw IoError("form must be hyperbolic or elliptic");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Gassmann-Sunada triples, coset geometries, and isospectral"
            " drum checks";

  py::register_exception<Error>(m, "DrumgeoError");

  py::class_<GSTriple>(m, "Triple")
      .def_property_readonly("group_name",
                             [](const GSTriple& t) { return t.group->name(); })
      .def_property_readonly("degree",
                             [](const GSTriple& t) { return t.group->degree(); })
      .def_property_readonly("order",
                             [](const GSTriple& t) { return t.group->size(); })
      .def_property_readonly("u_order",
                             [](const GSTriple& t) { return t.left.size(); })
      .def_property_readonly("v_order",
                             [](const GSTriple& t) { return t.right.size(); })
      .def("to_json",
           [](const GSTriple& t) { return triple_to_json(t).dump(2); })
      .def("__repr__", [](const GSTriple& t) {
        return "<Triple " + t.group->name() + " order " +
               std::to_string(t.group->size()) + ">";
      });

  py::class_<TileDomain>(m, "Domain")
      .def_property_readonly(
          "tiles", [](const TileDomain& d) { return d.tiles().size(); })
      .def_property_readonly(
          "area", [](const TileDomain& d) { return rational_to_string(d.area()); })
      .def("__repr__", [](const TileDomain& d) {
        return "<Domain of " + std::to_string(d.tiles().size()) +
               " tiles, area " + rational_to_string(d.area()) + ">";
      });

  m.def("triple_from_json", [](const std::string& text) {
    return triple_from_json(Json::parse(text), ".");
  });
  m.def("load_triple",
        [](const std::string& path) { return load_triple(path); });

  m.def("projective_triple", [](int n, int p) {
    return projective_geometry(ProjectiveSpec{n, p}).triple;
  });
  m.def("design_triple", [](int half_dim, const std::string& form) {
    return triple_at_incident_flag(
        quadratic_design(QuadraticDesignSpec{half_dim, parse_form(form)})
            .geometry);
  });
  m.def("dihedral_triple",
        [](int n) { return triple_at_incident_flag(dihedral_geometry(n)); });
  m.def("wreath", [](const GSTriple& base, int copies, const std::string& top) {
    GroupPtr t = top == "cyclic" ? cyclic_top(copies) : symmetric_top(copies);
    return wreath_triple(WreathSpec{base, copies, t});
  });

  m.def("check_ac", [](const GSTriple& t) { return check_ac(t).ok; });
  m.def("check_ec", [](const GSTriple& t) { return check_ec(t).ok; });
  m.def("check_flags", [](const GSTriple& t) {
    return flags_dict(check_flags(t));
  });

  m.def("geometry_shape", [](const GSTriple& t) {
    const DGeometry g = build_drum_geometry(t);
    return std::make_pair(g.geometry.num_points, g.geometry.num_lines);
  });
  m.def("verify_sd", [](const GSTriple& t) {
    return verify_SD(build_drum_geometry(t)).ok;
  });
  m.def("verify_d", [](const GSTriple& t) {
    return verify_D(build_drum_geometry(t)).ok;
  });
  m.def("roundtrip_isomorphic", [](const GSTriple& t, long long budget) {
    const DGeometry g = build_drum_geometry(t);
    return std::string(to_string(are_isomorphic(t, triple_from_geometry(g),
                                                budget)));
  }, py::arg("triple"), py::arg("budget") = 1'000'000);

  m.def("intertwiner_dimension",
        [](const GSTriple& t) { return intertwiner_space(t).size(); });
  m.def("invertible_intertwiner_det",
        [](const GSTriple& t, std::uint64_t seed) -> std::optional<std::string> {
          const auto basis = intertwiner_space(t);
          if (basis.empty()) return std::nullopt;
          const auto found = find_invertible_intertwiner(basis, seed);
          if (!found) return std::nullopt;
          return rational_to_string(determinant(*found));
        },
        py::arg("triple"), py::arg("seed") = kDefaultSeed);

  m.def("gww_domains", []() { return gww_domains(); });
  m.def("load_domain",
        [](const std::string& path) { return load_domain(path); });
  m.def("congruent", [](const TileDomain& a, const TileDomain& b) {
    return congruent(a, b);
  });

  m.def("spectrum",
        [](const TileDomain& d, const std::string& h, int k,
           std::uint64_t seed) {
          return spectrum_dict(
              spectrum_of(d, rational_from_string(h), k, seed));
        },
        py::arg("domain"), py::arg("h"), py::arg("k"),
        py::arg("seed") = kDefaultSeed);
  m.def("max_rel_diff",
        [](const TileDomain& a, const TileDomain& b, const std::string& h,
           int k, std::uint64_t seed) {
          const Rational hh = rational_from_string(h);
          return compare_spectra(spectrum_of(a, hh, k, seed),
                                 spectrum_of(b, hh, k, seed), k)
              .max_rel_diff;
        },
        py::arg("a"), py::arg("b"), py::arg("h"), py::arg("k"),
        py::arg("seed") = kDefaultSeed);
  m.def("weyl_ratio", [](const std::vector<double>& eigenvalues, double area) {
    return weyl_fit(eigenvalues, area).ratio;
  });
}
