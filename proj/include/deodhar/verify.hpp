// Verification suites over whole families of Go-diagrams: the pseudopath
// entry formulas, the row-reduction comparison, the path-family Plücker
// computation against determinants, and the extremal minors.  All checks
// are symbolic and exact.
#pragma once

#include "deodhar/godiagram.hpp"
#include "deodhar/marshrietsch.hpp"
#include "deodhar/strata.hpp"

#include <string>
#include <vector>

namespace deodhar {

// plucker_lgv on the network equals plucker_det on the weight matrix for
// every k-subset of columns.
VerificationReport verify_lgv(const GoDiagram& d);

// check_extremal on the symbolic chip matrix of the diagram.
VerificationReport verify_extremal(const GoDiagram& d);

// Result of sweeping one theorem check over diagrams of Gr(k,n).
struct SuiteReport {
  std::string theorem;
  int checked = 0;
  bool passed = true;
  std::vector<VerificationReport> failures;
};

// theorem is one of "entries", "row", "lgv", "extremal".  Exhaustive mode
// sweeps every diagram of the rectangle; otherwise `trials` diagrams are
// sampled (with replacement) by the seeded generator.  Small families are
// always swept whole.
SuiteReport verify_suite(const std::string& theorem, int k, int n, bool exhaustive,
                         unsigned seed, int trials = 50);

std::string to_json_string(const SuiteReport& r);

}  // namespace deodhar
