#pragma once

#include <string>
#include <vector>

#include "opa/weights.hpp"

namespace opa {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0.0;
};

// Named verification suites.  "all" runs every suite; "bergman-closedform"
// groups the closed-form Bergman checks (norm, minimal zero, spectrum,
// eigenfunction, kernel derivative).
std::vector<std::string> suite_names();
std::vector<CheckResult> run_suite(const std::string& name);

struct Figure1Row {
  double alpha = 0.0;
  double estimate = 0.0;          // ||J_w|| / 2
  double bound = 0.0;             // (2/3)^{alpha/2}
  double zero_free_radius = 0.0;  // (3/2)^{alpha/2}
  std::size_t truncation = 0;     // N at which the estimate converged
};

std::vector<Figure1Row> figure1_rows(const std::vector<double>& alphas, double tol);

// Largest root of the monic orthogonal polynomial P_n, located by bisection
// on the recurrence values (x is above the largest root iff every P_j(x) is
// positive).  Requires n >= 1.
double largest_monic_root(const WeightSequence& w, std::size_t n);

}  // namespace opa
