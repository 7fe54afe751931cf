#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "agisos/agisos.hpp"

namespace py = pybind11;
using namespace agisos;

namespace {

py::object fraction(const Rational& q) {
  static py::handle cls = py::object(py::module_::import("fractions").attr("Fraction")).release();
  return cls(py::int_(py::str(q.get_num().get_str())), py::int_(py::str(q.get_den().get_str())));
}

Rational rational(const py::handle& x) { return parse_rational(py::str(x).cast<std::string>()); }

py::tuple tuple_of(const LatticePoint& p) {
  py::tuple t(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) t[i] = p[i];
  return t;
}

LatticePoint point_of(const std::vector<Coord>& v) { return LatticePoint(v); }

py::list points_of(const PointSet& s) {
  py::list out;
  for (const auto& p : s) out.append(tuple_of(p));
  return out;
}

PointSet point_set(const std::vector<std::vector<Coord>>& pts) {
  PointSet out;
  for (const auto& p : pts) out.insert(LatticePoint(p));
  return out;
}

py::dict witness_dict(const WitnessPair& w) {
  py::dict d;
  d["target"] = tuple_of(w.target);
  d["z1"] = tuple_of(w.z1);
  d["z2"] = tuple_of(w.z2);
  d["path"] = std::string(to_string(w.path));
  d["subdivision_depth"] = w.subdivision_depth;
  d["resolved_by"] = std::string(to_string(w.resolved_by));
  return d;
}

py::dict decomposition_dict(const BinomialSquareDecomposition& d) {
  py::list terms;
  for (const auto& t : d.terms) terms.append(py::make_tuple(fraction(t.coefficient), tuple_of(t.plus), tuple_of(t.minus)));
  py::dict out;
  out["root_degree"] = d.root_degree;
  out["terms"] = terms;
  out["rendered"] = d.to_string();
  return out;
}

py::dict polynomial_terms(const SparsePolynomial& p) {
  py::dict out;
  for (const auto& [e, c] : p.terms()) out[tuple_of(e)] = fraction(c);
  return out;
}

EnumerationOptions budget(std::uint64_t max_box_points) { return EnumerationOptions{max_box_points}; }

constexpr std::uint64_t kDefaultBox = 10'000'000;

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact sum-of-squares certificates for agiforms via mediated sets";

  static py::exception<Error> error(m, "AgisosError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::object exc = py::handle(error.ptr())(e.what());
      exc.attr("code") = std::string(to_string(e.code()));
      PyErr_SetObject(error.ptr(), exc.ptr());
    }
  });

  py::class_<Simplex>(m, "Simplex")
      .def(py::init([](const std::vector<std::vector<Coord>>& vertices) {
             std::vector<LatticePoint> v;
             for (const auto& x : vertices) v.emplace_back(x);
             return Simplex::create(std::move(v));
           }),
           py::arg("vertices"))
      .def_property_readonly("vertices",
                             [](const Simplex& s) {
                               py::list out;
                               for (const auto& v : s.vertices()) out.append(tuple_of(v));
                               return out;
                             })
      .def_property_readonly("dimension", &Simplex::dimension)
      .def_property_readonly("degree_sum", &Simplex::degree_sum)
      .def("dilated", &Simplex::dilated, py::arg("k"))
      .def(
          "barycentric",
          [](const Simplex& s, const std::vector<Coord>& p) -> py::object {
            const auto c = s.coefficients(point_of(p));
            if (!c) return py::none();
            py::list out;
            for (const auto& x : *c) out.append(fraction(x));
            return out;
          },
          py::arg("point"))
      .def(
          "contains", [](const Simplex& s, const std::vector<Coord>& p, Coord k) { return contains(s, k, point_of(p)); },
          py::arg("point"), py::arg("k") = 1)
      .def("__repr__", [](const Simplex& s) {
        std::string r = "Simplex([";
        for (std::size_t i = 0; i < s.vertex_count(); ++i) r += (i ? ", " : "") + s.vertex(i).to_string();
        return r + "])";
      });

  m.def(
      "enumerate_lattice_points",
      [](const Simplex& s, Coord k, std::uint64_t max_box_points) {
        return points_of(enumerate_lattice_points(s, k, budget(max_box_points)));
      },
      py::arg("simplex"), py::arg("k") = 1, py::arg("max_box_points") = kDefaultBox);

  m.def(
      "maximal_mediated_set",
      [](const Simplex& s, std::uint64_t max_box_points) {
        return points_of(maximal_mediated_set(s, budget(max_box_points)));
      },
      py::arg("simplex"), py::arg("max_box_points") = kDefaultBox);

  m.def(
      "is_mediated",
      [](const Simplex& s, const std::vector<std::vector<Coord>>& pts) { return is_mediated(s, point_set(pts)).mediated; },
      py::arg("simplex"), py::arg("points"));

  m.def(
      "is_sos",
      [](const Simplex& s, const std::vector<Coord>& apex, std::uint64_t max_box_points) {
        return sos_membership(s, point_of(apex), budget(max_box_points)).sos;
      },
      py::arg("simplex"), py::arg("apex"), py::arg("max_box_points") = kDefaultBox);

  m.def("dilation_threshold", &dilation_threshold, py::arg("simplex"));

  m.def(
      "mediation_witness",
      [](const Simplex& s, Coord k, const std::vector<Coord>& w, std::optional<std::size_t> max_depth) {
        WitnessOptions opts;
        opts.max_depth = max_depth;
        return witness_dict(mediation_witness(s, k, point_of(w), opts));
      },
      py::arg("simplex"), py::arg("k"), py::arg("point"), py::arg("max_depth") = py::none());

  m.def(
      "verify_dilation_theorem",
      [](const Simplex& s, std::optional<Coord> k, unsigned threads) {
        VerifyOptions opts;
        opts.threads = threads;
        DilationReport r;
        {
          py::gil_scoped_release release;
          r = verify_dilation_theorem(s, k.value_or(dilation_threshold(s)), opts);
        }
        py::dict paths;
        for (const auto& [p, c] : r.path_counts) paths[py::str(std::string(to_string(p)))] = c;
        py::list failures;
        for (const auto& [p, why] : r.failures) failures.append(py::make_tuple(tuple_of(p), why));
        py::dict out;
        out["k"] = r.k;
        out["lattice_points"] = r.lattice_points;
        out["even_points"] = r.even_points;
        out["non_vertex_points"] = r.non_vertex_points;
        out["path_counts"] = paths;
        out["max_subdivision_depth"] = r.max_subdivision_depth;
        out["failures"] = failures;
        return out;
      },
      py::arg("simplex"), py::arg("k") = py::none(), py::arg("threads") = 1);

  py::class_<Agiform>(m, "Agiform")
      .def(py::init([](const Simplex& s, const std::vector<Coord>& apex, const py::object& scale) {
             return make_agiform(s, point_of(apex), rational(scale));
           }),
           py::arg("simplex"), py::arg("apex"), py::arg("scale") = 1)
      .def_property_readonly("simplex", &Agiform::simplex)
      .def_property_readonly("apex", [](const Agiform& a) { return tuple_of(a.apex()); })
      .def_property_readonly("scale", [](const Agiform& a) { return fraction(a.scale()); })
      .def_property_readonly("weights",
                             [](const Agiform& a) {
                               py::list out;
                               for (const auto& x : a.lambda().weights) out.append(fraction(x));
                               return out;
                             })
      .def("terms", [](const Agiform& a) { return polynomial_terms(a.polynomial()); })
      .def("__str__", [](const Agiform& a) { return a.polynomial().to_string(); })
      .def(
          "is_sos", [](const Agiform& a) { return agisos::is_sos(a).sos; })
      .def(
          "decompose", [](const Agiform& a) { return decomposition_dict(decompose(a)); })
      .def(
          "blowup_decompose", [](const Agiform& a, Coord k) { return decomposition_dict(blowup_decompose(a, k)); },
          py::arg("k"))
      .def("evaluate", [](const Agiform& a, const std::vector<py::object>& x) {
        std::vector<Rational> q;
        for (const auto& v : x) q.push_back(rational(v));
        return fraction(a.polynomial().evaluate(q));
      });

  m.def("motzkin", &motzkin);
  m.def("hurwitz_h", &hurwitz_h);
  m.def("horn_form", [] { return polynomial_terms(horn_form()); });
  m.def("horn_identity_holds", [] { return horn_form() == horn_alternate() && horn_form().cyclic_shift() == horn_form(); });
  m.def(
      "horn_psd_sample",
      [](std::size_t count, std::uint64_t seed) {
        const HornSampleReport r = horn_psd_sample(count, seed);
        py::dict minima;
        for (const auto& [k, v] : r.minimum_by_power) minima[py::int_(k)] = fraction(v);
        py::dict out;
        out["count"] = r.count;
        out["negative_values"] = r.negative_values;
        out["minimum_by_power"] = minima;
        out["at_equality"] = fraction(r.at_equality);
        return out;
      },
      py::arg("count"), py::arg("seed") = 0);
}
