#pragma once

namespace evtcvar {

// Numerical tolerances shared across modules. The CLI may override these.
struct Tolerances {
  double quadrature_abs = 1e-9;
  double quadrature_rel = 1e-12;
  long max_subdivisions = 1000000;
  double identity_rel = 1e-12;
  // Relative share of limit-process variance allowed to be lost by
  // truncating the integral near zero.
  double truncation_deficit = 1e-3;
};

}  // namespace evtcvar
