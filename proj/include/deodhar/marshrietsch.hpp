// Chip factorizations attached to a diagram: reflection, upper, and twisted
// lower factors multiplied in reading order, the k x n matrix obtained by
// projecting their product, pseudopath formulas for its entries, and the
// change of variables that carries the network weight matrix onto its row
// echelon form.
#pragma once

#include "deodhar/algebra.hpp"
#include "deodhar/godiagram.hpp"
#include "deodhar/matrix.hpp"
#include "deodhar/network.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace deodhar {

// One factor: S is the reflection of a white stone, Y the upper factor of a
// plus with parameter p, X the twisted lower factor of a black stone with
// parameter m (the inverse reflection is folded in).
enum class ChipKind : char { S = 's', Y = 'y', X = 'x' };

struct ChipFactor {
  ChipKind kind = ChipKind::S;
  int index = 0;                     // generator subscript 1..n-1
  std::optional<Variable> variable;  // p for Y, m for X, unset for S

  bool operator==(const ChipFactor&) const = default;
};

// "s6", "y7(p2)", "x6(m5)s6^-1".
std::string to_string(const ChipFactor& f);

struct ChipWord {
  int n = 0;
  std::vector<ChipFactor> factors;

  bool operator==(const ChipWord&) const = default;
};

// Factors of a diagram in reading order: the box generator gives the
// subscript, the fill picks the kind, and parameters are numbered by the
// box position in the order, so the standard order matches the labeled
// diagram variables.
ChipWord chip_word(const GoDiagram& d);
ChipWord chip_word(const GoDiagram& d, const ReadingOrder& order);

// JSON array of factor strings.
std::string to_json_string(const ChipWord& w);

// n x n matrix of one factor, row 1 on top: S(i) and X(i,m) place a 2x2
// block at rows n-i, n-i+1, Y(i,p) puts p just below the diagonal there.
Matrix<LaurentPolynomial> chip_matrix(const ChipFactor& f, int n);

// Entry (r,c) sums planar route weights through the factor gadgets laid
// side by side in word order; agrees entrywise with the factor product.
Matrix<LaurentPolynomial> chip_network_matrix(const ChipWord& w);

// Product of the factor matrices, cross-checked against the route sums of
// chip_network_matrix; a disagreement throws logic_error.
Matrix<LaurentPolynomial> group_element(const ChipWord& w);

// k x n projection of an n x n group element: row s is column k+1-s of g
// read bottom to top.  Columns are labeled 1..n and each row is labeled by
// its leftmost nonzero column; an identically zero row throws.
Matrix<LaurentPolynomial> project(const Matrix<LaurentPolynomial>& g, int k);

using MRMatrix = Matrix<LaurentPolynomial>;

// project(group_element(chip_word(d)), k).
MRMatrix mr_matrix(const GoDiagram& d);

// Divide each row by its leftmost nonzero entry, which must be a signed
// monomial (rows of mr_matrix always are).
MRMatrix rescale(MRMatrix m);

// Walk on the undirected network between two boundary vertices: a run of
// west steps, one south step, then alternating east runs and south steps,
// where an east run may contain combination steps that hop east and then
// land west on a black stone.  Weights: 1/p per west step on a p-edge, p
// per east step on a p-edge directly after another east step, m per west
// step on an m-edge, and a sign of -1 per black stone skipped horizontally
// and per white stone skipped vertically.  No edge is crossed twice.
struct Pseudopath {
  std::vector<int> vertices;  // vertex ids in walk order
  std::vector<int> edges;     // edge ids in walk order
  LaurentPolynomial weight;
};

// All pseudopaths between two boundary labels, sorted by edge sequence.
// The start must be a source; the empty path appears exactly when the two
// labels coincide.  rescale(mr_matrix(d)) at row label s, column t equals
// the sum of these weights from s to t.
std::vector<Pseudopath> pseudopaths(const Network& net, int source_label, int target_label);
LaurentPolynomial pseudopath_sum(const Network& net, int source_label, int target_label);

// The network with one extra boundary vertex per row on the west side,
// wired east to the row's leftmost internal vertex, or straight to the
// row's east boundary vertex when the row has none.  Pseudopaths from the
// extra vertices drop the west run: the entry step east, then alternating
// east runs and south steps.  Entering on a plus charges the next east
// step; entering on a black either takes the forced south step weighted
// -m, or rides the black's own in-edge east with weight -1 times the usual
// skip sign, spending that edge.  mr_matrix(d) at row label s, column t
// equals the sum of these weights from the extra vertex of row s to t.
// Ids past the base network's vertex and edge counts name the extensions.
struct ModifiedNetwork {
  Network net;
  std::vector<int> entry_target;  // row r = 1..k at index r-1: target vertex id

  int prime_vertex_id(int r) const;  // extra boundary vertex of row r
  int entry_edge_id(int r) const;    // its entry edge
};

ModifiedNetwork modified_network(const Network& net);

std::vector<Pseudopath> pseudopaths(const ModifiedNetwork& mnet, int source_label,
                                    int target_label);
LaurentPolynomial pseudopath_sum(const ModifiedNetwork& mnet, int source_label,
                                 int target_label);

// Substitution sending each edge variable to a signed monomial in the chip
// variables.  For a box b, let b1 be the nearest plus east of b in its row;
// collect the boxes strictly between b and b1 (to the row's end if there is
// no b1), the boxes below b, and the boxes below b1.  The sign is -1 to the
// number of black stones collected; p-variables of plus boxes below b
// divide, those below b1 multiply:
//   a_b -> sign * prod(p below b1) / (p_b * prod(p below b)),
//   c_b -> sign * m_b * prod(p below b1) / prod(p below b).
std::map<Variable, LaurentPolynomial> psi(const GoDiagram& d);

// Inverse substitution: p- and m-variables as signed monomials in the edge
// variables, solved box by box in reading order.
std::map<Variable, LaurentPolynomial> psi_inverse(const GoDiagram& d);

// Image under psi of a directed path weight, computed from the diagram
// alone: the path covers a connected sequence of boxes; every plus box
// divides by its p, black stones where the path turns multiply their m,
// black stones it passes straight through contribute a sign of -1.
LaurentPolynomial psi_path_weight(const Network& net, const Path& p);

// Row reduction without division of a rescaled row-labeled matrix: with A
// the square submatrix on the columns named by the row labels, required to
// be unipotent upper triangular, returns the geometric series inverse of A
// times the input.  Over a field this matches rref.
Matrix<LaurentPolynomial> rref_division_free(const Matrix<LaurentPolynomial>& m);

struct VerificationReport {
  GoDiagram diagram;
  std::string theorem;
  bool passed = false;
  std::string counterexample;  // JSON object; empty when passed
};

std::string to_json_string(const VerificationReport& r);

// Entry checks on one diagram: row labels match the shape subset, leading
// entries are the signed row products of p-variables, rescaled entries
// match pseudopath sums on the network, and raw entries match pseudopath
// sums on the modified network.
VerificationReport verify_entry_formulas(const GoDiagram& d);

// Checks that psi applied to the network weight matrix equals the
// division-free row reduction of the rescaled matrix of the diagram.
VerificationReport verify_theorem_row(const GoDiagram& d);

}  // namespace deodhar
