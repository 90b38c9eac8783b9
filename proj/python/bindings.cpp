#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "schubert/duality.hpp"
#include "schubert/errors.hpp"
#include "schubert/report.hpp"
#include "schubert/serialize.hpp"
#include "schubert/twodim.hpp"

namespace py = pybind11;
using namespace schubert;

namespace {

std::vector<GridPoint> to_points(const std::vector<std::vector<int>>& maxima) {
  std::vector<GridPoint> out;
  for (const auto& m : maxima) out.emplace_back(m);
  return out;
}

std::vector<std::vector<int>> from_points(const std::vector<GridPoint>& pts) {
  std::vector<std::vector<int>> out;
  for (const auto& p : pts) out.push_back(p.coords());
  return out;
}

// Coefficients as Python ints, lowest degree first.
py::list coeffs(const Poly& p) {
  py::list out;
  for (const auto& c : p.coeffs()) out.append(py::int_(py::str(c.str())));
  return out;
}

py::int_ big(const BigInt& v) { return py::int_(py::str(v.str())); }

BigInt to_big(const py::int_& v) { return BigInt(py::str(py::handle(v)).cast<std::string>()); }

}  // namespace

PYBIND11_MODULE(_schubert, m) {
  m.doc() = "Schubert unions in Grassmannians over finite fields";

  static py::exception<ResourceLimit> resource_error(m, "ResourceLimitError", PyExc_RuntimeError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const ResourceLimit& e) {
      resource_error(e.what());
    } catch (const InvalidArgument& e) {
      PyErr_SetString(PyExc_ValueError, e.what());
    } catch (const NotTwoDim& e) {
      PyErr_SetString(PyExc_ValueError, e.what());
    } catch (const EmptyUnion& e) {
      PyErr_SetString(PyExc_ValueError, e.what());
    } catch (const NotDownwardClosed& e) {
      PyErr_SetString(PyExc_ValueError, e.what());
    }
  });

  py::class_<Poly>(m, "Poly")
      .def(py::init([](const std::string& s) { return Poly::parse(s); }), py::arg("text"))
      .def_property_readonly("degree", &Poly::degree)
      .def_property_readonly("coeffs", &coeffs)
      .def("__call__", [](const Poly& p, const py::int_& q) { return big(p.evaluate(to_big(q))); })
      .def("__str__", &Poly::to_string)
      .def("__repr__", [](const Poly& p) { return "Poly('" + p.to_string() + "')"; })
      .def(py::self == py::self)
      .def(py::self + py::self)
      .def(py::self - py::self)
      .def(py::self * py::self);

  py::class_<SchubertUnion>(m, "SchubertUnion")
      .def(py::init([](int l, int mm, const std::vector<std::vector<int>>& maxima) {
             return SchubertUnion(GrassParams(l, mm), to_points(maxima));
           }),
           py::arg("l"), py::arg("m"), py::arg("maxima") = std::vector<std::vector<int>>{})
      .def_static("full", [](int l, int mm) { return SchubertUnion::full(GrassParams(l, mm)); })
      .def_static("parse", [](int l, int mm, const std::string& s) { return parse_maxima(GrassParams(l, mm), s); })
      .def_property_readonly("l", [](const SchubertUnion& u) { return u.params().l(); })
      .def_property_readonly("m", [](const SchubertUnion& u) { return u.params().m(); })
      .def_property_readonly("maxima", [](const SchubertUnion& u) { return from_points(u.maxima()); })
      .def_property_readonly("span", &spanning_dimension)
      .def_property_readonly("krull", &krull_dimension)
      .def("points", [](const SchubertUnion& u) { return point_count_poly(u); }, "g_U as a polynomial in q")
      .def("ideal", [](const SchubertUnion& u) { return from_points(ideal_of(u)); })
      .def("contains", [](const SchubertUnion& u, const std::vector<int>& p) { return u.contains(GridPoint(p)); })
      .def("dual", &dual_union)
      .def("mset", [](const SchubertUnion& u) { return union_to_mset(u).elements; })
      .def("to_json", [](const SchubertUnion& u) { return to_json(u).dump(); })
      .def("__str__", &SchubertUnion::to_string)
      .def("__repr__", [](const SchubertUnion& u) { return "SchubertUnion(" + to_json(u).dump() + ")"; })
      .def("__hash__", [](const SchubertUnion& u) { return py::hash(py::str(to_json(u).dump())); })
      .def(py::self == py::self);

  m.def("grassmannian_points", [](int l, int mm) { return grassmannian_point_count(GrassParams(l, mm)); });
  m.def("enumerate_ideals", [](int l, int mm, std::size_t guard) { return enumerate_ideals(GrassParams(l, mm), guard); },
        py::arg("l"), py::arg("m"), py::arg("guard") = kDefaultEnumerationGuard);

  m.def("bound_table", [](int l, int mm, std::size_t guard) {
        const BoundTable t = bound_table(GrassParams(l, mm), guard);
        py::list rows;
        for (const auto& r : t.rows) {
          py::dict d;
          d["r"] = r.r;
          d["K"] = r.K;
          d["J"] = r.J;
          d["D"] = r.D;
          d["E"] = r.E;
          d["direction"] = r.direction ? py::object(py::str(to_string(*r.direction))) : py::object(py::none());
          d["witness"] = r.witness;
          rows.append(d);
        }
        return rows;
      },
      py::arg("l"), py::arg("m"), py::arg("guard") = kDefaultEnumerationGuard);
  m.def("direction", [](int mm, std::size_t K) { return to_string(best_union(GrassParams(2, mm), K).direction); },
        py::arg("m"), py::arg("K"));
  m.def("krull_dK", [](int mm, std::size_t K) { return krull_dK(GrassParams(2, mm), K); }, py::arg("m"), py::arg("K"));

  m.def("generator_matrix", [](const SchubertUnion& u, int q) {
        const GeneratorMatrix g = generator_matrix(u, Field(q));
        std::vector<std::vector<int>> rows(static_cast<std::size_t>(g.rows()));
        for (int r = 0; r < g.rows(); ++r)
          for (int c = 0; c < g.n(); ++c) rows[static_cast<std::size_t>(r)].push_back(g.matrix.at(r, c));
        return rows;
      },
      py::arg("union"), py::arg("q"));
  m.def("oracle_dr", [](const SchubertUnion& u, int q, std::size_t r, const py::int_& budget) {
        const Field f(q);
        return oracle_dr(generator_matrix(u, f), f, r, to_big(budget)).d;
      },
      py::arg("union"), py::arg("q"), py::arg("r"), py::arg("budget") = py::int_(20'000'000));
  m.def("min_distance", [](const SchubertUnion& u, int q) {
        const Field f(q);
        return brute_force_min_distance(generator_matrix(u, f), f);
      },
      py::arg("union"), py::arg("q"));
  m.def("union_code_d1", [](const SchubertUnion& u, int q) { return big(union_code_params(u, q).d1); },
        py::arg("union"), py::arg("q"));

  m.def("table", [](const std::string& name, int l, int mm, const std::string& format, std::size_t guard) {
        const GrassParams p(l, mm);
        Table t;
        if (name == "enumerate") t = enumerate_table(p, guard);
        else if (name == "bounds") t = bounds_table(p, guard);
        else if (name == "directions") t = directions_table(p);
        else if (name == "krull") t = krull_table(p);
        else if (name == "dual") t = dual_pairs_table(p, guard);
        else throw InvalidArgument("unknown table: " + name);
        return render(t, parse_format(format));
      },
      py::arg("name"), py::arg("l"), py::arg("m"), py::arg("format") = "markdown",
      py::arg("guard") = kDefaultEnumerationGuard);
  m.def("experiment", [](const std::string& name, int l, int mm, int q) {
        return render(experiment_table(name, GrassParams(l, mm), q, kDefaultOracleBudget), Format::Json);
      },
      py::arg("name"), py::arg("l"), py::arg("m"), py::arg("q") = 2);
}
