#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "hopf/biharmonic_stability.hpp"
#include "hopf/errors.hpp"
#include "hopf/existence_theorems.hpp"
#include "hopf/polyharmonic_residual.hpp"
#include "hopf/verification.hpp"
#include "hopf/version.hpp"

namespace py = pybind11;
using namespace hopf;

namespace {

double to_float(const Real& x) { return x.convert_to<double>(); }

py::object to_fraction(const Rational& q) {
  static const py::object fraction = py::module_::import("fractions").attr("Fraction");
  return fraction(py::int_(py::str(numerator(q).str())), py::int_(py::str(denominator(q).str())));
}

// Radii arrive as float or as a decimal string for full precision.
Real to_real_arg(const py::object& value) {
  if (py::isinstance<py::str>(value)) return Real(value.cast<std::string>());
  return Real(value.cast<double>());
}

HypersurfaceFamily make_family(const std::string& type, int n, std::optional<int> k) {
  const auto parsed = parse_family_type(type);
  if (!parsed) throw HopfError(ErrorKind::invalid_family, "unknown family type '" + type + "'");
  return HypersurfaceFamily::make(*parsed, n, k);
}

Branch parse_branch(const std::string& text) {
  if (text == "+" || text == "plus") return Branch::plus;
  if (text == "-" || text == "minus") return Branch::minus;
  throw HopfError(ErrorKind::invalid_argument, "branch must be '+' or '-'");
}

py::dict spectrum_dict(const CurvatureSpectrum& s) {
  py::list branches;
  for (const auto& b : s.branches) branches.append(py::make_tuple(to_float(b.lambda), b.multiplicity));
  py::dict out;
  out["alpha"] = to_float(s.alpha);
  out["branches"] = branches;
  out["trace"] = to_float(trace_shape(s));
  out["trace_sq"] = to_float(trace_shape_squared(s));
  return out;
}

py::list solve(const HypersurfaceFamily& family, int r, const std::string& tol) {
  const auto poly = build_quartic(family, r);
  const auto [lo, hi] = solution_x_range(family);
  const auto minimal = minimal_x(family);
  py::list rows;
  for (const auto& cert : isolate_and_refine(poly, lo, hi, parse_rational(tol))) {
    if (cert.lo <= minimal && minimal <= cert.hi && poly(minimal) == 0) continue;
    const Real t = root_to_radius(family, cert.refined_root);
    py::dict row;
    row["x"] = to_float(cert.refined_root);
    row["x_exact"] = cert.exact_root ? to_fraction(*cert.exact_root) : py::none();
    row["lo"] = to_fraction(cert.lo);
    row["hi"] = to_fraction(cert.hi);
    row["t"] = to_float(t);
    row["residual"] = to_float(residual(family, t, r).residual);
    rows.append(row);
  }
  return rows;
}

py::dict stability_dict(const StabilityReport& s) {
  py::dict out;
  out["n"] = s.n;
  out["p"] = s.p;
  out["branch"] = std::string(to_string(s.branch));
  out["cos_sq_t"] = to_float(s.cos_sq_t);
  out["t"] = to_float(s.t);
  out["trace"] = to_float(s.trace);
  out["lambda_min_sq"] = to_float(s.lambda_min_sq);
  out["lhs"] = to_float(s.lhs);
  out["rhs"] = to_float(s.rhs);
  out["mu1_lower_bound"] = to_float(s.mu1_lower_bound);
  out["constant_witness"] = to_float(s.constant_witness);
  out["condition_holds"] = s.condition_holds;
  out["index_claim"] = std::string(to_string(s.index_claim));
  return out;
}

}  // namespace

PYBIND11_MODULE(hopf, m) {
  m.doc() = "Polyharmonic Hopf hypersurfaces in complex space forms";
  m.attr("__version__") = kVersion;
  py::register_exception<HopfError>(m, "HopfError", PyExc_ValueError);

  py::class_<HypersurfaceFamily>(m, "Family")
      .def(py::init(&make_family), py::arg("type"), py::arg("n"), py::arg("k") = py::none())
      .def_property_readonly("type", [](const HypersurfaceFamily& f) { return std::string(to_string(f.type())); })
      .def_property_readonly("n", &HypersurfaceFamily::n)
      .def_property_readonly("k", &HypersurfaceFamily::k)
      .def_property_readonly("name", &HypersurfaceFamily::name)
      .def_property_readonly("is_projective", &HypersurfaceFamily::is_projective)
      .def_property_readonly("radius_domain",
                             [](const HypersurfaceFamily& f) {
                               const auto d = f.radius_domain();
                               return py::make_tuple(to_float(d.lo),
                                                     d.hi ? py::cast(to_float(*d.hi)) : py::none());
                             })
      .def("__eq__", [](const HypersurfaceFamily& a, const HypersurfaceFamily& b) { return a == b; })
      .def("__repr__", [](const HypersurfaceFamily& f) { return "Family(" + f.name() + ")"; });

  m.def("cp_families", &cp_families, py::arg("n_max"));
  m.def("ch_families", &ch_families, py::arg("n_max"));

  m.def(
      "curvature_spectrum",
      [](const HypersurfaceFamily& f, const py::object& t) { return spectrum_dict(curvature_spectrum(f, to_real_arg(t))); },
      py::arg("family"), py::arg("t"));

  m.def(
      "residual",
      [](const HypersurfaceFamily& f, const py::object& t, int r) {
        const auto rep = residual(f, to_real_arg(t), r);
        py::dict out;
        out["residual"] = to_float(rep.residual);
        out["trace"] = to_float(rep.trace);
        out["trace_sq"] = to_float(rep.trace_sq);
        out["alpha"] = to_float(rep.alpha);
        out["is_minimal"] = rep.is_minimal;
        return out;
      },
      py::arg("family"), py::arg("t"), py::arg("r"));

  m.def(
      "quartic",
      [](const HypersurfaceFamily& f, int r) {
        py::list coefficients;
        for (const auto& a : build_quartic(f, r).a) coefficients.append(to_fraction(a));
        return coefficients;
      },
      py::arg("family"), py::arg("r"), "Quartic coefficients, constant term first.");

  m.def("solve", &solve, py::arg("family"), py::arg("r"), py::arg("tol") = "1e-30");
  m.def("count_solutions", &count_solutions, py::arg("family"), py::arg("r"));

  m.def(
      "thresholds",
      [](const HypersurfaceFamily& f) {
        const auto pair = guaranteed_thresholds(f);
        return py::make_tuple(pair.r_two, pair.r_four ? py::cast(*pair.r_four) : py::none());
      },
      py::arg("family"));

  m.def(
      "probes",
      [](const HypersurfaceFamily& f, int r) {
        const auto rep = probe_values(f, r);
        py::list points;
        for (const auto& p : rep.points) {
          points.append(py::make_tuple(p.label, to_fraction(p.x), to_fraction(p.value), p.sign));
        }
        py::dict out;
        out["points"] = points;
        out["pattern"] = rep.pattern();
        out["expected_pattern"] = rep.expected_pattern;
        return out;
      },
      py::arg("family"), py::arg("r"));

  m.def(
      "biharmonic_radii",
      [](int n, int p) {
        const auto radii = biharmonic_radii(n, p);
        py::list tubes;
        for (const auto& t : radii.tubes) {
          py::dict row;
          row["branch"] = std::string(to_string(t.branch));
          row["cos_sq_t"] = to_float(t.cos_sq_t);
          row["t"] = to_float(t.t);
          row["family"] = t.family();
          tubes.append(row);
        }
        return tubes;
      },
      py::arg("n"), py::arg("p"));

  m.def(
      "stability",
      [](int n, int p, const std::string& branch) { return stability_dict(stability_condition(n, p, parse_branch(branch))); },
      py::arg("n"), py::arg("p"), py::arg("branch") = "+");

  m.def(
      "index_threshold_scan",
      [](int p, int n_max) {
        const auto scan = index_threshold_scan(p, n_max);
        py::dict out;
        out["first_hold"] = scan.first_hold;
        out["threshold"] = scan.threshold;
        out["empirical_c"] = scan.empirical_c();
        out["monotone"] = scan.monotone();
        return out;
      },
      py::arg("p"), py::arg("n_max") = 500);

  m.def(
      "verify",
      [](const std::string& suite) {
        py::list out;
        for (const auto& c : run_suite(suite)) {
          py::dict row;
          row["name"] = c.name;
          row["tag"] = c.tag;
          row["passed"] = c.passed;
          row["detail"] = c.detail;
          out.append(row);
        }
        return out;
      },
      py::arg("suite"));
}
