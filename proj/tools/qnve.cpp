// qnve: command-line front end.
#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "qnve/certifier.hpp"
#include "qnve/dynamics.hpp"
#include "qnve/jets.hpp"
#include "qnve/literature.hpp"
#include "qnve/ode.hpp"
#include "qnve/parser.hpp"

using nlohmann::json;
using namespace qnve;

namespace {

constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

const char* const kNonintegrabilityNote =
    "Cited background, not a computed result: for a Hamiltonian with an invariant plane, meromorphic integrability "
    "forces the identity component of the differential Galois group of the normal variational equation to be "
    "abelian. Known results on quartic Hill-Schrodinger equations use this to exclude integrability by rational "
    "first integrals; this program checks only the shape of the potential.";

json report(const std::string& command, json inputs, json result, bool ok, const std::string& stage = "") {
  json r{{"command", command}, {"inputs", std::move(inputs)}, {"result", std::move(result)}, {"status", ok ? "ok" : "fail"}};
  if (!stage.empty()) r["stage"] = stage;
  return r;
}

std::string poly_text(const MPoly& p) { return format_canonical(p); }

// ---- conditions ----

struct ConditionsArgs {
  int degree = 4;
  std::string format = "text";
};

int run_conditions(const ConditionsArgs& a) {
  if (a.degree < 0) throw UsageError("--degree must be nonnegative");
  const auto cond = generate_conditions(a.degree);
  json list = json::array();
  for (const auto& e : cond.conditions) list.push_back({{"n", e.n}, {"k", e.k}, {"jet_poly", poly_text(e.poly)}});
  if (a.format == "json") {
    std::cout << report("conditions", {{"degree", a.degree}}, {{"degree", a.degree}, {"conditions", list}}, true).dump(2)
              << "\n";
  } else {
    std::cout << cond.conditions.size() << " condition(s) for deg a(t) <= " << a.degree << "\n";
    for (const auto& e : cond.conditions)
      std::cout << "E_{" << e.n << "," << e.k << "} = " << poly_text(e.poly) << "\n";
  }
  return kOk;
}

// ---- classify ----

struct ClassifyArgs {
  std::string potential;
  std::string format = "text";
};

int run_classify(const ClassifyArgs& a) {
  const Potential pot = parse_potential(a.potential);
  const MPoly pulled = pullback_condition(MPoly::variable(nve_jet(5)), pot.alpha, pot.phi);
  const unsigned deg_alpha = pot.alpha.is_zero() ? 0 : pot.alpha.degree(sym::x1);
  const bool quartic = !pot.alpha.is_zero() && deg_alpha == 4;
  const bool member = pulled.is_zero() && quartic;
  std::string reason;
  if (member) {
    reason = "a_5 pulls back to 0 and deg alpha = 4";
  } else if (!pulled.is_zero()) {
    reason = "a_5 pulls back to a nonzero polynomial";
  } else {
    reason = "a_5 pulls back to 0 but deg alpha = " + std::to_string(deg_alpha) + " (degree mismatch)";
  }
  json result{{"phi", poly_text(pot.phi)},
              {"alpha", poly_text(pot.alpha)},
              {"beta_present", pot.beta_present},
              {"pullback_a5", poly_text(pulled)},
              {"alpha_degree", deg_alpha},
              {"member", member},
              {"verdict", member ? "quartic-NVE family member" : "non-member"},
              {"reason", reason},
              {"nonintegrability_note", kNonintegrabilityNote}};
  if (a.format == "json") {
    std::cout << report("classify", {{"potential", a.potential}}, result, member).dump(2) << "\n";
  } else {
    std::cout << "phi   = " << poly_text(pot.phi) << "\n"
              << "alpha = " << poly_text(pot.alpha) << "\n"
              << "pullback of a_5 = " << poly_text(pulled) << "\n"
              << "verdict: " << result["verdict"].get<std::string>() << " (" << reason << ")\n";
    if (member) std::cout << "note: " << kNonintegrabilityNote << "\n";
  }
  return member ? kOk : kNegative;
}

// ---- derive-odes ----

struct DeriveArgs {
  std::string emit = "L,NL,L2,NL2";
  std::string format = "text";
};

json ode_json(const LinearODE& ode, bool matches) {
  json coeffs = json::array();
  for (const auto& c : ode.coeffs) coeffs.push_back(poly_text(c));
  return {{"text", to_string(ode)}, {"var", var_name(ode.var)}, {"coefficients", coeffs}, {"matches_transcribed", matches}};
}

json ode_json(const NonlinearODE& ode, bool matches) {
  return {{"text", to_string(ode)}, {"var", var_name(ode.var)}, {"matches_transcribed", matches}};
}

int run_derive(const DeriveArgs& a) {
  std::vector<std::string> names;
  {
    std::stringstream ss(a.emit);
    std::string item;
    while (std::getline(ss, item, ','))
      if (!item.empty()) names.push_back(item);
  }
  for (const auto& n : names)
    if (n != "L" && n != "NL" && n != "L2" && n != "NL2") throw UsageError("--emit accepts L, NL, L2, NL2; got " + n);
  const auto sys = specialize_quartic(generate_conditions(4));
  const auto centered = center_and_reduce(sys, QuarticCoeffs::symbolic());
  json result = json::object();
  for (const auto& n : names) {
    if (n == "L") result[n] = ode_json(sys.linear, proportional(sys.linear, literature::L()));
    if (n == "NL") result[n] = ode_json(sys.nonlinear, proportional(sys.nonlinear, literature::NL()));
    if (n == "L2") result[n] = ode_json(centered.linear, proportional(centered.linear, literature::L2()));
    if (n == "NL2") result[n] = ode_json(centered.nonlinear, proportional(centered.nonlinear, literature::NL2()));
  }
  if (a.format == "json") {
    std::cout << report("derive-odes", {{"emit", names}}, result, true).dump(2) << "\n";
  } else {
    for (const auto& n : names) {
      std::cout << "(" << n << ") " << result[n]["text"].get<std::string>() << "\n";
      if (!result[n]["matches_transcribed"].get<bool>()) std::cout << "     differs from the transcribed equation\n";
    }
  }
  return kOk;
}

// ---- kernel ----

struct KernelArgs {
  std::string which = "generic";
  unsigned degree_bound = 8;
  std::string normalization = "high";
  std::string format = "text";
};

int run_kernel(const KernelArgs& a) {
  const auto centered = center_and_reduce(specialize_quartic(generate_conditions(4)), QuarticCoeffs::symbolic());
  Branch branch;
  if (a.which == "generic") {
    branch = generic_branch();
  } else if (a.which == "b0") {
    branch = zero_branch(sym::b);
  } else if (a.which == "c0") {
    branch = zero_branch(sym::c);
  } else {
    throw UsageError("--case must be generic, b0 or c0");
  }
  KernelOptions opts;
  opts.degree_bound = a.degree_bound;
  opts.normalization = a.normalization == "low" ? BasisNormalization::LowDegreeFree : BasisNormalization::HighDegreeFree;
  const LinearODE ode = restrict_ode(centered.linear, branch.constraints);
  const auto basis = rational_kernel(ode, opts);
  json nums = json::array();
  bool residuals_ok = true;
  for (std::size_t i = 0; i < basis.dimension(); ++i) {
    nums.push_back(poly_text(basis.numerators[i]));
    residuals_ok = residuals_ok && residual(ode, basis.element(i)).is_zero();
  }
  json branches = json::array();
  std::string content = "0";
  if (!basis.numerator_wronskian.is_zero()) {
    const auto rep = degeneration_branches(basis);
    content = poly_text(rep.content);
    for (const auto& b : rep.branches) branches.push_back(b.name);
  }
  json result{{"equation", to_string(ode)},
              {"denominator", poly_text(basis.ansatz_denominator())},
              {"numerators", nums},
              {"dimension", basis.dimension()},
              {"residuals_zero", residuals_ok},
              {"numerator_wronskian", poly_text(basis.numerator_wronskian)},
              {"wronskian", to_string(basis.wronskian)},
              {"wronskian_content", content},
              {"degeneration_branches", branches}};
  const bool ok = residuals_ok && basis.dimension() > 0;
  if (a.format == "json") {
    std::cout << report("kernel", {{"case", a.which}, {"degree_bound", a.degree_bound}, {"normalization", a.normalization}},
                        result, ok)
                     .dump(2)
              << "\n";
  } else {
    std::cout << "equation: " << to_string(ode) << "\n"
              << "solutions N_i / (" << poly_text(basis.ansatz_denominator()) << "), dimension " << basis.dimension()
              << "\n";
    for (std::size_t i = 0; i < basis.dimension(); ++i) std::cout << "  N" << i + 1 << " = " << nums[i].get<std::string>() << "\n";
    std::cout << "W(N) = " << poly_text(basis.numerator_wronskian) << "\n"
              << "Wronskian content: " << content << "\n";
    if (!residuals_ok) std::cout << "a basis element has a nonzero residual\n";
  }
  return ok ? kOk : kNegative;
}

// ---- verify-quartic ----

struct VerifyArgs {
  int trials = 20;
  std::uint64_t seed = 0;
  unsigned degree_bound = 8;
  std::string json_out;
  std::string nl_source = "derived";
  std::string perturb;
  std::string format = "text";
};

int run_verify(const VerifyArgs& a) {
  if (a.trials < 0) throw UsageError("--trials must be nonnegative");
  TheoremConfig cfg;
  cfg.trials = a.trials;
  cfg.seed = a.seed;
  cfg.degree_bound = a.degree_bound;
  if (a.nl_source == "literature") {
    cfg.nl_source = NlSource::Literature;
  } else if (a.nl_source != "derived") {
    throw UsageError("--nl-source must be derived or literature");
  }
  if (!a.perturb.empty()) {
    try {
      Rational q(a.perturb);
      q.canonicalize();
      cfg.perturb = q;
    } catch (const std::exception&) {
      throw UsageError("--perturb expects a rational number");
    }
  }
  const auto cert = verify_quartic_theorem(cfg);
  const std::string doc = certificate_json(cert);
  if (!a.json_out.empty()) {
    std::ofstream out(a.json_out);
    if (!out) throw std::runtime_error("cannot write " + a.json_out);
    out << doc << "\n";
  }
  const bool ok = cert.theorem_confirmed;
  if (a.format == "json") {
    std::cout << report("verify-quartic",
                        {{"trials", a.trials}, {"seed", a.seed}, {"degree_bound", a.degree_bound}, {"nl_source", a.nl_source},
                         {"perturb", a.perturb}},
                        json::parse(doc), ok, cert.failed_stage)
                     .dump(2)
              << "\n";
  } else {
    for (const auto& b : cert.branches) {
      std::size_t inc = 0;
      for (const auto& t : b.trials) inc += t.verdict == Verdict::Incompatible;
      std::cout << b.branch.name << ": deg_x Q = " << b.q_degree << ", " << b.num_equations << " equations, "
                << to_string(b.verdict) << " (" << inc << "/" << b.trials.size() << " trials incompatible)\n";
    }
    std::cout << "conclusion: " << cert.conclusion << "\n";
    if (!cert.failed_stage.empty()) std::cout << "failed stage: " << cert.failed_stage << "\n";
  }
  return ok ? kOk : kNegative;
}

// ---- simulate / degree-test ----

std::vector<double> parse_numbers(const std::string& text, std::size_t count, const char* flag) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw UsageError(std::string(flag) + ": not a number: '" + item + "'");
    }
  }
  if (out.size() != count)
    throw UsageError(std::string(flag) + " expects " + std::to_string(count) + " comma-separated numbers");
  return out;
}

struct SimulateArgs {
  std::string potential;
  std::string init = "0,1,0,0";
  double dt = 1e-3;
  double T = 10;
  std::string out;
  int degree_test = -1;
  std::string format = "text";
};

json degree_json(const DegreeTest& r, int d) {
  return {{"degree", d}, {"pass", r.pass}, {"difference", r.difference}, {"residual", r.residual}, {"stride", r.stride},
          {"samples_used", r.used}};
}

int run_simulate(const SimulateArgs& a) {
  const Potential pot = parse_potential(a.potential);
  const auto v = parse_numbers(a.init, 4, "--init");
  if (!(a.dt > 0) || !(a.T > 0)) throw UsageError("--dt and --T must be positive");
  const auto num = NumericPotential::from(pot);
  const auto traj = integrate_hamilton(num, {v[0], v[1], v[2], v[3]}, a.dt, a.T);
  if (!a.out.empty()) {
    std::FILE* f = std::fopen(a.out.c_str(), "w");
    if (!f) throw std::runtime_error("cannot write " + a.out);
    std::fprintf(f, "t,x1,y1,x2,y2,H\n");
    for (std::size_t i = 0; i < traj.size(); ++i) {
      const auto& s = traj.states[i];
      std::fprintf(f, "%.17g,%.17g,%.17g,%.17g,%.17g,%.17g\n", traj.times[i], s.x1, s.y1, s.x2, s.y2, traj.energies[i]);
    }
    std::fclose(f);
  }
  bool ok = !traj.truncated;
  json result{{"samples", traj.size()},
              {"truncated", traj.truncated},
              {"energy_drift", traj.max_relative_drift()},
              {"max_off_plane", traj.max_off_plane()},
              {"final", {traj.states.back().x1, traj.states.back().y1, traj.states.back().x2, traj.states.back().y2}}};
  if (a.degree_test >= 0) {
    const auto r = polynomial_degree_test(nve_coefficient_samples(traj, num), a.degree_test);
    result["degree_test"] = degree_json(r, a.degree_test);
    ok = ok && r.pass;
  }
  if (a.format == "json") {
    std::cout << report("simulate",
                        {{"potential", a.potential}, {"init", v}, {"dt", a.dt}, {"T", a.T}, {"out", a.out},
                         {"degree_test", a.degree_test}},
                        result, ok, traj.truncated ? "integration" : "")
                     .dump(2)
              << "\n";
  } else {
    std::cout << "samples: " << traj.size() << (traj.truncated ? " (truncated: trajectory diverged)" : "") << "\n"
              << "energy drift: " << result["energy_drift"].get<double>() << "\n"
              << "max |x2|,|y2|: " << result["max_off_plane"].get<double>() << "\n";
    if (a.degree_test >= 0) {
      const auto& d = result["degree_test"];
      std::cout << "degree test (d = " << a.degree_test << "): " << (d["pass"].get<bool>() ? "pass" : "fail")
                << ", difference " << d["difference"].get<double>() << ", residual " << d["residual"].get<double>() << "\n";
    }
  }
  return ok ? kOk : kNegative;
}

struct DegreeArgs {
  std::string potential;
  int degree = 4;
  std::string init = "0,1";
  double dt = 1e-3;
  double T = 10;
  double tol = 1e-6;
  std::size_t intervals = 16;
  std::string format = "text";
};

int run_degree(const DegreeArgs& a) {
  if (a.degree < 0) throw UsageError("--degree must be nonnegative");
  if (!(a.dt > 0) || !(a.T > 0)) throw UsageError("--dt and --T must be positive");
  const Potential pot = parse_potential(a.potential);
  const auto v = parse_numbers(a.init, 2, "--init");
  const auto num = NumericPotential::from(pot);
  const auto traj = integrate_hamilton(num, {v[0], v[1], 0, 0}, a.dt, a.T);
  DegreeTestOptions opts;
  opts.tol = a.tol;
  opts.intervals = a.intervals;
  const auto r = polynomial_degree_test(nve_coefficient_samples(traj, num), a.degree, opts);
  const bool ok = r.pass && !traj.truncated;
  if (a.format == "json") {
    std::cout << report("degree-test",
                        {{"potential", a.potential}, {"degree", a.degree}, {"init", v}, {"dt", a.dt}, {"T", a.T}, {"tol", a.tol}},
                        degree_json(r, a.degree), ok)
                     .dump(2)
              << "\n";
  } else {
    std::cout << (r.pass ? "pass" : "fail") << " residual " << r.residual << " difference " << r.difference << "\n";
  }
  return ok ? kOk : kNegative;
}

const char* const kSchemas = R"schema({
  "report": {"command": "string", "inputs": "object", "result": "object", "status": "ok|fail", "stage": "string (on failure)"},
  "conditions.result": {"degree": "integer", "conditions": [{"n": "integer", "k": "integer", "jet_poly": "canonical text"}]},
  "classify.result": {"phi": "text", "alpha": "text", "beta_present": "bool", "pullback_a5": "text", "alpha_degree": "integer",
                      "member": "bool", "verdict": "string", "reason": "string", "nonintegrability_note": "string"},
  "derive-odes.result": {"<name>": {"text": "string", "var": "string", "coefficients": ["text (linear only)"], "matches_transcribed": "bool"}},
  "kernel.result": {"equation": "text", "denominator": "text", "numerators": ["text"], "dimension": "integer", "residuals_zero": "bool",
                    "numerator_wronskian": "text", "wronskian": "text", "wronskian_content": "text", "degeneration_branches": ["string"]},
  "verify-quartic.result": {"branches": [{"name": "string", "q_degree": "integer", "num_equations": "integer",
                             "trials": [{"params": "object", "verdict": "string", "digest": "hex"}], "verdict": "string"}],
                            "conclusion": "string", "theorem_form": "string", "nonintegrability_note": "string"},
  "simulate.result": {"samples": "integer", "truncated": "bool", "energy_drift": "number", "max_off_plane": "number",
                      "final": ["number"], "degree_test": "degree-test.result (optional)"},
  "degree-test.result": {"degree": "integer", "pass": "bool", "difference": "number", "residual": "number", "stride": "integer",
                         "samples_used": "integer"},
  "trajectory.csv": "t,x1,y1,x2,y2,H"
})schema";

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quartic normal variational equation toolkit"};
  app.require_subcommand(0, 1);
  bool help_schema = false;
  app.add_flag("--help-schema", help_schema, "Print the JSON report schemas");

  auto format_option = [](CLI::App* sub, std::string& target) {
    sub->add_option("--format", target, "Output format")->check(CLI::IsMember({"text", "json"}));
  };

  ConditionsArgs ca;
  auto* cond = app.add_subcommand("conditions", "Conditions for a polynomial NVE coefficient of degree <= d");
  cond->add_option("--degree", ca.degree, "Degree bound d")->required();
  format_option(cond, ca.format);

  ClassifyArgs cla;
  auto* cls = app.add_subcommand("classify", "Test whether a potential belongs to the quartic-NVE family");
  cls->add_option("--potential", cla.potential, "Polynomial V(x1, x2)")->required();
  format_option(cls, cla.format);

  DeriveArgs da;
  auto* der = app.add_subcommand("derive-odes", "Derive the linear and nonlinear equations for a quartic alpha");
  der->add_option("--emit", da.emit, "Comma-separated subset of L,NL,L2,NL2");
  format_option(der, da.format);

  KernelArgs ka;
  auto* ker = app.add_subcommand("kernel", "Rational solution basis of the centered linear equation");
  ker->add_option("--case", ka.which, "generic, b0 or c0");
  ker->add_option("--degree-bound", ka.degree_bound, "Numerator degree bound");
  ker->add_option("--normalization", ka.normalization, "high or low")->check(CLI::IsMember({"high", "low"}));
  format_option(ker, ka.format);

  VerifyArgs va;
  auto* ver = app.add_subcommand("verify-quartic", "Run the full certification pipeline");
  ver->add_option("--trials", va.trials, "Random specializations per branch");
  ver->add_option("--seed", va.seed, "Random seed");
  ver->add_option("--degree-bound", va.degree_bound, "Kernel numerator degree bound");
  ver->add_option("--json", va.json_out, "Write the certificate JSON here");
  ver->add_option("--nl-source", va.nl_source, "derived or literature");
  ver->add_option("--perturb", va.perturb, "Rational added to the e*x*y^2 coefficient of the nonlinear equation");
  format_option(ver, va.format);

  SimulateArgs sa;
  auto* sim = app.add_subcommand("simulate", "Integrate Hamilton's equations");
  sim->add_option("--potential", sa.potential, "Polynomial V(x1, x2)")->required();
  sim->add_option("--init", sa.init, "x1,y1,x2,y2");
  sim->add_option("--dt", sa.dt, "Step");
  sim->add_option("--T", sa.T, "Horizon");
  sim->add_option("--out", sa.out, "Trajectory CSV");
  sim->add_option("--degree-test", sa.degree_test, "Also test whether a(t) is a polynomial of this degree");
  format_option(sim, sa.format);

  DegreeArgs dga;
  auto* deg = app.add_subcommand("degree-test", "Numeric test that a(t) is a polynomial of degree <= d");
  deg->add_option("--potential", dga.potential, "Polynomial V(x1, x2)")->required();
  deg->add_option("--degree", dga.degree, "Degree d");
  deg->add_option("--init", dga.init, "x1,y1 (on the invariant plane)");
  deg->add_option("--dt", dga.dt, "Step");
  deg->add_option("--T", dga.T, "Horizon");
  deg->add_option("--tol", dga.tol, "Tolerance on the normalized difference");
  deg->add_option("--intervals", dga.intervals, "Sampling intervals across the span");
  format_option(deg, dga.format);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (help_schema) {
      std::cout << json::parse(kSchemas).dump(2) << "\n";
      return kOk;
    }
    if (*cond) return run_conditions(ca);
    if (*cls) return run_classify(cla);
    if (*der) return run_derive(da);
    if (*ker) return run_kernel(ka);
    if (*ver) return run_verify(va);
    if (*sim) return run_simulate(sa);
    if (*deg) return run_degree(dga);
    std::cout << app.help();
    return kUsage;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << " (at offset " << e.position() << ")\n";
    return kUsage;
  } catch (const InvariantPlaneError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kNegative;
  }
}
