// Weighted directed networks attached to diagrams: boundary vertices 1..n
// along the border path, one internal vertex per plus or black box, edges
// running west and south that skip over stones.  Weight matrices and
// Plucker coordinates are computed from directed path sums, the latter both
// by determinants and by disjoint path families.
#pragma once

#include "deodhar/algebra.hpp"
#include "deodhar/godiagram.hpp"
#include "deodhar/matrix.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace deodhar {

struct NetworkVertex {
  bool boundary = false;
  int label = 0;           // boundary index 1..n (boundary vertices only)
  BoxRef box{0, 0};        // internal vertices only
  int reading = 0;         // reading-order number of the box
  Fill fill = Fill::Plus;  // Plus or Black for internal vertices
};

struct NetworkEdge {
  int from = 0;  // vertex ids
  int to = 0;
  bool horizontal = false;           // west-directed; otherwise south-directed
  std::optional<Variable> variable;  // unset on unit-weight edges
};

// Directed path as an increasing walk of edge ids; empty means the path
// from a boundary vertex to itself.
struct Path {
  std::vector<int> edge_ids;
};

struct Network {
  GoDiagram diagram;
  int k = 0;
  int n = 0;
  // Vertex ids: 0..n-1 are the boundary vertices 1..n, then the internal
  // vertices in reading order of their boxes.  Edge ids follow the same
  // order, horizontal in-edge before vertical out-edge per box.
  std::vector<NetworkVertex> vertices;
  std::vector<NetworkEdge> edges;
  std::vector<int> sources;  // boundary labels, increasing
  std::vector<int> sinks;
  std::vector<std::vector<int>> out;  // vertex id -> outgoing edge ids, ascending

  int boundary_id(int label) const;
  int internal_id(int reading) const;
};

Network build_network(const GoDiagram& d);

LaurentPolynomial edge_weight(const NetworkEdge& e);
LaurentPolynomial path_weight(const Network& net, const Path& p);

// All directed paths from one boundary vertex to another, in lexicographic
// order on edge-id sequences.  The empty path appears exactly when the
// endpoints coincide.  The start must be a source.
std::vector<Path> enumerate_paths(const Network& net, int source_label, int target_label);

// k x n matrix over the edge variables: rows labeled by the sources top to
// bottom, columns 1..n.  Entry (r,s) is the path sum from r to s times
// (-1)^{number of sources strictly between r and s}.
Matrix<LaurentPolynomial> weight_matrix(const Network& net);
Matrix<LaurentPolynomial> weight_matrix(const GoDiagram& d);

// Minor on the columns named by a strictly increasing subset of 1..n whose
// size matches the row count.
template <class S>
S plucker_det(const Matrix<S>& w, const std::vector<int>& subset) {
  if (static_cast<int>(subset.size()) != w.rows())
    throw std::invalid_argument("plucker_det: subset size must equal row count");
  std::vector<int> positions;
  for (std::size_t i = 0; i < subset.size(); ++i) {
    if (subset[i] < 1 || subset[i] > w.cols())
      throw std::invalid_argument("plucker_det: column label out of range");
    if (i > 0 && subset[i] <= subset[i - 1])
      throw std::invalid_argument("plucker_det: subset must be strictly increasing");
    positions.push_back(subset[i] - 1);
  }
  return w.select_columns(positions).determinant();
}

// The same minor as a signed sum over vertex-disjoint path families from
// the sources onto the subset: sign of the connecting permutation times the
// per-path boundary signs times the path weights.  Agrees with plucker_det
// of the weight matrix.
LaurentPolynomial plucker_lgv(const Network& net, const std::vector<int>& subset);

// Substitute scalars for the edge variables.  Every a-variable of the
// network must map to a nonzero value; c-variables may vanish.
template <class S>
Matrix<S> evaluate_network(const Network& net, const std::map<Variable, S>& assignment,
                           const S& one) {
  for (const NetworkVertex& v : net.vertices) {
    if (v.boundary || v.fill != Fill::Plus) continue;
    Variable a('a', v.reading);
    auto it = assignment.find(a);
    if (it == assignment.end())
      throw std::invalid_argument("evaluate_network: missing value for " + a.name());
    if (scalar_is_zero(it->second))
      throw std::invalid_argument("evaluate_network: " + a.name() + " must be nonzero");
  }
  Matrix<LaurentPolynomial> w = weight_matrix(net);
  Matrix<S> result(w.rows(), w.cols(), one - one);
  result.row_labels = w.row_labels;
  result.col_labels = w.col_labels;
  for (int i = 0; i < w.rows(); ++i)
    for (int j = 0; j < w.cols(); ++j) result.at(i, j) = evaluate(w.at(i, j), assignment, one);
  return result;
}

std::string to_dot(const Network& net);
std::string to_json_string(const Network& net);

}  // namespace deodhar
