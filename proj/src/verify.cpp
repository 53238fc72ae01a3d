#include "deodhar/verify.hpp"

#include "deodhar/network.hpp"

#include <random>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace deodhar {

VerificationReport verify_lgv(const GoDiagram& d) {
  VerificationReport report;
  report.diagram = d;
  report.theorem = "lgv";
  report.passed = true;
  Network net = build_network(d);
  Matrix<LaurentPolynomial> w = weight_matrix(net);
  for (const Subset& subset : k_subsets(d.shape.n, d.shape.k)) {
    LaurentPolynomial det = plucker_det(w, subset);
    LaurentPolynomial families = plucker_lgv(net, subset);
    if (!(det == families)) {
      report.passed = false;
      report.counterexample = "{\"subset\": \"" + subset_key(subset) +
                              "\", \"determinant\": \"" + det.to_string() +
                              "\", \"path_families\": \"" + families.to_string() + "\"}";
      return report;
    }
  }
  return report;
}

VerificationReport verify_extremal(const GoDiagram& d) {
  return check_extremal(d, plucker_vector(mr_matrix(d)));
}

SuiteReport verify_suite(const std::string& theorem, int k, int n, bool exhaustive,
                         unsigned seed, int trials) {
  VerificationReport (*check)(const GoDiagram&) = nullptr;
  if (theorem == "entries")
    check = &verify_entry_formulas;
  else if (theorem == "row")
    check = &verify_theorem_row;
  else if (theorem == "lgv")
    check = &verify_lgv;
  else if (theorem == "extremal")
    check = &verify_extremal;
  else
    throw std::invalid_argument("verify_suite: unknown theorem \"" + theorem + "\"");

  std::vector<GoDiagram> all = enumerate_diagrams(k, n);
  std::vector<GoDiagram> picked;
  if (exhaustive || static_cast<int>(all.size()) <= trials) {
    picked = all;
  } else {
    std::mt19937 rng(seed);
    std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
    for (int t = 0; t < trials; ++t) picked.push_back(all[pick(rng)]);
  }

  SuiteReport suite;
  suite.theorem = theorem;
  for (const GoDiagram& d : picked) {
    VerificationReport r = check(d);
    ++suite.checked;
    if (!r.passed) {
      suite.passed = false;
      suite.failures.push_back(std::move(r));
    }
  }
  return suite;
}

std::string to_json_string(const SuiteReport& r) {
  std::ostringstream out;
  out << "{\"theorem\": \"" << r.theorem << "\", \"checked\": " << r.checked
      << ", \"passed\": " << (r.passed ? "true" : "false") << ", \"failures\": [";
  for (std::size_t i = 0; i < r.failures.size(); ++i)
    out << (i ? ", " : "") << to_json_string(r.failures[i]);
  out << "]}";
  return out.str();
}

}  // namespace deodhar
