#include <array>
#include <optional>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qnve/certifier.hpp"
#include "qnve/dynamics.hpp"
#include "qnve/jets.hpp"
#include "qnve/parser.hpp"

namespace py = pybind11;
using namespace qnve;

namespace {

py::dict potential_dict(const Potential& p) {
  py::dict d;
  d["v"] = format_canonical(p.v);
  d["phi"] = format_canonical(p.phi);
  d["alpha"] = format_canonical(p.alpha);
  d["beta"] = format_canonical(p.beta);
  d["beta_present"] = p.beta_present;
  return d;
}

State to_state(const std::vector<double>& v) {
  if (v.size() != 4) throw std::invalid_argument("initial state needs 4 values (x1, y1, x2, y2)");
  return {v[0], v[1], v[2], v[3]};
}

std::vector<std::array<double, 4>> rows(const Trajectory& t) {
  std::vector<std::array<double, 4>> out;
  out.reserve(t.size());
  for (const auto& s : t.states) out.push_back({s.x1, s.y1, s.x2, s.y2});
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact quartic-NVE pipeline and numeric checks";

  // Deliberately leaked: the types live as long as the interpreter.
  static PyObject* parse_error = py::exception<ParseError>(m, "ParseError", PyExc_ValueError).inc_ref().ptr();
  static PyObject* plane_error =
      py::exception<InvariantPlaneError>(m, "InvariantPlaneError", PyExc_ValueError).inc_ref().ptr();
  py::register_exception_translator([](std::exception_ptr p) {
    const auto raise = [](PyObject* type, const char* what, const char* key, py::object value) {
      py::object err = py::reinterpret_borrow<py::object>(type)(what);
      err.attr(key) = std::move(value);
      PyErr_SetObject(type, err.ptr());
    };
    try {
      if (p) std::rethrow_exception(p);
    } catch (const ParseError& e) {
      raise(parse_error, e.what(), "position", py::int_(e.position()));
    } catch (const InvariantPlaneError& e) {
      raise(plane_error, e.what(), "offending", py::str(format_canonical(e.offending())));
    }
  });

  m.def("parse_potential", [](const std::string& text) { return potential_dict(parse_potential(text)); },
        py::arg("text"), "Split V into phi, alpha and the x2-degree >= 3 part.");

  m.def("format_polynomial", [](const std::string& text) { return format_canonical(parse_polynomial(text)); },
        py::arg("text"), "Canonical text of a polynomial expression.");

  m.def(
      "conditions",
      [](int degree) {
        py::list out;
        for (const auto& e : generate_conditions(degree).conditions) {
          py::dict d;
          d["n"] = e.n;
          d["k"] = e.k;
          d["jet_poly"] = format_canonical(e.poly);
          out.append(d);
        }
        return out;
      },
      py::arg("degree"), "Differential conditions for a polynomial NVE coefficient of degree <= d.");

  m.def(
      "pullback_a5",
      [](const std::string& text) {
        const Potential p = parse_potential(text);
        return format_canonical(pullback_condition(MPoly::variable(nve_jet(5)), p.alpha, p.phi));
      },
      py::arg("potential"), "The fifth NVE jet a_5 pulled back along the potential.");

  m.def(
      "verify_quartic",
      [](int trials, std::uint64_t seed, const std::string& nl_source, std::optional<std::string> perturb) {
        TheoremConfig cfg;
        if (trials < 0) throw std::invalid_argument("trials must be nonnegative");
        cfg.trials = trials;
        cfg.seed = seed;
        if (nl_source == "literature") {
          cfg.nl_source = NlSource::Literature;
        } else if (nl_source != "derived") {
          throw std::invalid_argument("nl_source must be 'derived' or 'literature'");
        }
        if (perturb) cfg.perturb = parse_rational(*perturb);
        py::gil_scoped_release release;
        return certificate_json(verify_quartic_theorem(cfg), -1);
      },
      py::arg("trials") = 20, py::arg("seed") = 0, py::arg("nl_source") = "derived", py::arg("perturb") = py::none(),
      "Certificate for the quartic theorem as a JSON string.");

  m.def(
      "simulate",
      [](const std::string& potential, const std::vector<double>& init, double dt, double T) {
        const auto pot = NumericPotential::from(parse_potential(potential));
        Trajectory t;
        {
          py::gil_scoped_release release;
          t = integrate_hamilton(pot, to_state(init), dt, T);
        }
        py::dict d;
        d["times"] = t.times;
        d["states"] = rows(t);
        d["energies"] = t.energies;
        d["truncated"] = t.truncated;
        d["max_relative_drift"] = t.max_relative_drift();
        d["alpha_samples"] = nve_coefficient_samples(t, pot);
        return d;
      },
      py::arg("potential"), py::arg("init"), py::arg("dt") = 1e-3, py::arg("T") = 10.0,
      "RK4 trajectory with the NVE coefficient a(t) = alpha(x1(t)).");

  m.def(
      "degree_test",
      [](const std::vector<double>& samples, int d, double tol, std::size_t intervals) {
        DegreeTestOptions opts;
        opts.tol = tol;
        opts.intervals = intervals;
        const auto r = polynomial_degree_test(samples, d, opts);
        py::dict out;
        out["pass"] = r.pass;
        out["difference"] = r.difference;
        out["residual"] = r.residual;
        out["stride"] = r.stride;
        return out;
      },
      py::arg("samples"), py::arg("degree"), py::arg("tol") = 1e-6, py::arg("intervals") = 16,
      "Is the uniformly spaced series a polynomial of degree <= d?");

  m.def(
      "variational_consistency",
      [](const std::string& potential, const std::vector<double>& init, double delta, double dt, double T) {
        return variational_consistency(parse_potential(potential), to_state(init), {delta, dt, T});
      },
      py::arg("potential"), py::arg("init"), py::arg("delta") = 1e-6, py::arg("dt") = 1e-3, py::arg("T") = 1.0,
      "max |x2 - xi| / delta between the full flow and the NVE.");
}
