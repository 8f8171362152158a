#pragma once

#include <vector>

#include "qnve/ode.hpp"

// Equations and fundamental systems as printed in the published treatment of
// the quartic case, transcribed verbatim (typos included) for cross-checks.
namespace qnve::literature {

LinearODE L();      // 4th order in phi, variable x1
NonlinearODE NL();  // in y = phi', variable x1
LinearODE L2();
NonlinearODE NL2();
LinearODE L3();
NonlinearODE NL3();
LinearODE L4();
NonlinearODE NL4();

MPoly D();   // 4ex^3 + 2cx + b
MPoly D3();  // 2ex^2 + c
MPoly D4();  // 4ex^3 + b

/// N1, N2, N3 exactly as printed (N2 fails the residual check).
std::vector<MPoly> generic_numerators_printed();
/// N2 with its leading coefficient 8ec -> 8ec^2.
MPoly N2_repaired();
std::vector<MPoly> generic_numerators_repaired();
/// x^3 * N_{3,i}, to be read over x^3 * D3^3.
std::vector<MPoly> b_zero_numerators();
/// N_{4,i} over D4^3.
std::vector<MPoly> c_zero_numerators();

/// Printed Wronskians of the numerators.
MPoly generic_wronskian();
RatFunc b_zero_wronskian();
MPoly c_zero_wronskian();

}  // namespace qnve::literature
