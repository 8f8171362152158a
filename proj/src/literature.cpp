#include "qnve/literature.hpp"

#include "qnve/parser.hpp"

namespace qnve::literature {

namespace {

MPoly P(const char* text) { return parse_polynomial(text); }

LinearODE linear(Var var, std::vector<const char*> coeffs) {
  LinearODE out;
  out.var = var;
  for (const char* c : coeffs) out.coeffs.push_back(P(c));
  return out;
}

// Quadratic form in y, y', y'' from the coefficients of y^2, y'^2, y*y', y*y''.
NonlinearODE quadratic(Var var, const char* yy, const char* y1y1, const char* yy1, const char* yy2) {
  const MPoly y0 = MPoly::variable(y_jet(0));
  const MPoly y1 = MPoly::variable(y_jet(1));
  const MPoly y2 = MPoly::variable(y_jet(2));
  return {var, P(yy) * y0 * y0 + P(y1y1) * y1 * y1 + P(yy1) * y0 * y1 + P(yy2) * y0 * y2};
}

}  // namespace

LinearODE L() {
  return linear(sym::x1, {"0", "240*e", "240*e*x1 + 60*d", "60*e*x1^2 + 30*d*x1 + 10*c",
                          "4*e*x1^3 + 3*d*x1^2 + 2*c*x1 + b"});
}

NonlinearODE NL() {
  return quadratic(sym::x1, "18*d + 72*e*x1", "b + 2*c*x1 + 3*d*x1^2 + 4*e*x1^3", "14*c + 42*d*x1 + 84*e*x1^2",
                   "b + 2*c*x1 + 3*d*x1^2 + 4*e*x1^3");
}

LinearODE L2() { return linear(sym::x, {"240*e", "240*e*x", "60*e*x^2 + 10*c", "4*e*x^3 + 2*c*x + b"}); }

NonlinearODE NL2() {
  return quadratic(sym::x, "72*e*x", "b + 2*c*x + 4*e*x^3", "14*c + 84*e*x^2", "b + 2*c*x + 4*e*x^3");
}

LinearODE L3() { return linear(sym::x, {"240*e", "240*e*x", "60*e*x^2 + 10*c", "4*e*x^3 + 2*c*x"}); }

NonlinearODE NL3() { return quadratic(sym::x, "72*e*x", "2*c*x + 4*e*x^3", "14*c + 84*e*x^2", "2*c*x + 4*e*x^3"); }

LinearODE L4() { return linear(sym::x, {"240*e", "240*e*x", "60*e*x^2", "4*e*x^3 + b"}); }

NonlinearODE NL4() { return quadratic(sym::x, "72*e*x", "b + 4*e*x^3", "84*e*x^2", "b + 4*e*x^3"); }

MPoly D() { return P("4*e*x^3 + 2*c*x + b"); }
MPoly D3() { return P("2*e*x^2 + c"); }
MPoly D4() { return P("4*e*x^3 + b"); }

std::vector<MPoly> generic_numerators_printed() {
  return {P("x*(4*e*c^2*x^5 - 42*b*e*c*x^4 - (6*c^3 + 48*e*b^2)*x^3 + 9*b^2*c*x + 6*b^3)"),
          P("x*(8*e*c*x^5 - 12*b*c*e*x^4 - (24*e*b^2 + 12*c^3)*x^3 - 12*b*c^2*x^2 + 3*b^3)"),
          P("8*c^2*e^2*x^6 - 84*b*c*e^2*x^5 - (12*c^3*e + 168*b^2*e^2)*x^4 + 21*b^3*e*x - 3*b^2*c^2")};
}

MPoly N2_repaired() { return P("x*(8*e*c^2*x^5 - 12*b*c*e*x^4 - (24*e*b^2 + 12*c^3)*x^3 - 12*b*c^2*x^2 + 3*b^3)"); }

std::vector<MPoly> generic_numerators_repaired() {
  auto n = generic_numerators_printed();
  n[1] = N2_repaired();
  return n;
}

std::vector<MPoly> b_zero_numerators() {
  return {P("x^3*(6*e*x^2 - c)"), P("x^4*(-3*c + 2*e*x^2)"), P("c^3 + 6*e*c^2*x^2 + 16*e^3*x^6")};
}

std::vector<MPoly> c_zero_numerators() {
  return {P("x*(b - 8*e*x^3)"), P("x^2*(b - 2*e*x^3)"), P("b^2 - 28*e*b*x^3 + 16*e^2*x^6")};
}

MPoly generic_wronskian() {
  return P("162*c^3*b^7 + 1296*b^6*c^4*x + 3888*b^5*c^5*x^2 + (2592*b^6*e*c^3 + 5184*b^4*c^6)*x^3"
           " + (2592*c^7*b^3 + 15552*b^5*c^4*e)*x^4 + 31104*b^4*c^5*e*x^5 + (15552*b^5*c^3*e^2 + 20736*b^3*c^6*e)*x^6"
           " + 62208*b^4*c^4*e^2*x^7 + 62208*b^3*c^5*e^2*x^8 + 41472*b^4*c^3*e^3*x^9 + 82944*b^3*c^4*e^3*x^10"
           " + 41472*b^3*c^3*e^4*x^12");
}

RatFunc b_zero_wronskian() { return RatFunc(P("96*e*c*(6*e*c^2*x^4 + 16*e^3*x^6 + 5*c^3)"), P("x^4")); }

MPoly c_zero_wronskian() { return P("2*b^4 + 32*e*b^3*x^3 + 192*e^2*b^3*x^6 + 512*b*e^3*x^9 + 512*e^4*x^12"); }

}  // namespace qnve::literature
