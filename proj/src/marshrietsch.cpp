#include "deodhar/marshrietsch.hpp"

#include "json.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace deodhar {

namespace {

const LaurentPolynomial kOne = LaurentPolynomial::constant(1);
const LaurentPolynomial kMinusOne = LaurentPolynomial::constant(-1);

void require_parameter(const ChipFactor& f) {
  if (f.kind == ChipKind::S) {
    if (f.variable)
      throw std::invalid_argument("chip factor: reflection carries no parameter");
  } else if (!f.variable) {
    throw std::invalid_argument("chip factor: missing parameter");
  }
}

}  // namespace

std::string to_string(const ChipFactor& f) {
  std::string i = std::to_string(f.index);
  switch (f.kind) {
    case ChipKind::S:
      return "s" + i;
    case ChipKind::Y:
      return "y" + i + "(" + f.variable->name() + ")";
    case ChipKind::X:
      return "x" + i + "(" + f.variable->name() + ")s" + i + "^-1";
  }
  throw std::logic_error("to_string: bad chip kind");
}

ChipWord chip_word(const GoDiagram& d, const ReadingOrder& order) {
  if (!is_linear_extension(d.shape, order))
    throw std::invalid_argument("chip_word: order is not a linear extension");
  ChipWord w;
  w.n = d.shape.n;
  int pos = 0;
  for (const BoxRef& b : order) {
    ++pos;
    ChipFactor f;
    f.index = box_generator(d.shape, b);
    switch (d.at(b)) {
      case Fill::White:
        f.kind = ChipKind::S;
        break;
      case Fill::Plus:
        f.kind = ChipKind::Y;
        f.variable = Variable('p', pos);
        break;
      case Fill::Black:
        f.kind = ChipKind::X;
        f.variable = Variable('m', pos);
        break;
    }
    w.factors.push_back(f);
  }
  return w;
}

ChipWord chip_word(const GoDiagram& d) {
  return chip_word(d, standard_reading_order(d.shape));
}

std::string to_json_string(const ChipWord& w) {
  nlohmann::json j = nlohmann::json::array();
  for (const ChipFactor& f : w.factors) j.push_back(to_string(f));
  return j.dump();
}

Matrix<LaurentPolynomial> chip_matrix(const ChipFactor& f, int n) {
  if (f.index < 1 || f.index >= n)
    throw std::invalid_argument("chip_matrix: index out of range");
  require_parameter(f);
  LaurentPolynomial zero;
  Matrix<LaurentPolynomial> g = Matrix<LaurentPolynomial>::identity(n, kOne);
  int r = n - f.index - 1;  // 0-based upper row of the 2x2 block
  switch (f.kind) {
    case ChipKind::S:
      g.at(r, r) = zero;
      g.at(r, r + 1) = kMinusOne;
      g.at(r + 1, r) = kOne;
      g.at(r + 1, r + 1) = zero;
      break;
    case ChipKind::Y:
      g.at(r + 1, r) = LaurentPolynomial::variable(*f.variable);
      break;
    case ChipKind::X:
      g.at(r, r) = -LaurentPolynomial::variable(*f.variable);
      g.at(r, r + 1) = kOne;
      g.at(r + 1, r) = kMinusOne;
      g.at(r + 1, r + 1) = zero;
      break;
  }
  return g;
}

Matrix<LaurentPolynomial> chip_network_matrix(const ChipWord& w) {
  int n = w.n;
  if (n < 1) throw std::invalid_argument("chip_network_matrix: need n >= 1");
  int cols = static_cast<int>(w.factors.size()) + 1;
  // Wire node (col, i) has id col*n + i-1 with wire 1 on top; junction
  // nodes on the slanted edges are appended past base.
  int base = cols * n;
  struct Hop {
    int to;
    LaurentPolynomial weight;
  };
  std::vector<std::vector<Hop>> adj(base);
  auto wire = [n](int col, int i) { return col * n + i - 1; };
  for (int t = 0; t < cols - 1; ++t) {
    const ChipFactor& f = w.factors[t];
    if (f.index < 1 || f.index >= n)
      throw std::invalid_argument("chip_network_matrix: index out of range");
    require_parameter(f);
    int i = f.index;
    for (int s = 1; s <= n; ++s)
      if (s != i && s != i + 1) adj[wire(t, s)].push_back({wire(t + 1, s), kOne});
    switch (f.kind) {
      case ChipKind::S:
        adj[wire(t, i)].push_back({wire(t + 1, i + 1), kOne});
        adj[wire(t, i + 1)].push_back({wire(t + 1, i), kMinusOne});
        break;
      case ChipKind::Y: {
        // p-slant from wire i down-east to wire i+1
        int k1 = static_cast<int>(adj.size());
        adj.emplace_back();
        int k2 = static_cast<int>(adj.size());
        adj.emplace_back();
        adj[wire(t, i)].push_back({k1, kOne});
        adj[k1].push_back({wire(t + 1, i), kOne});
        adj[k1].push_back({k2, LaurentPolynomial::variable(*f.variable)});
        adj[wire(t, i + 1)].push_back({k2, kOne});
        adj[k2].push_back({wire(t + 1, i + 1), kOne});
        break;
      }
      case ChipKind::X: {
        // m-slant from wire i+1 up-east to wire i, then a signed descent
        int j1 = static_cast<int>(adj.size());
        adj.emplace_back();
        int j2 = static_cast<int>(adj.size());
        adj.emplace_back();
        adj[wire(t, i)].push_back({j2, kOne});
        adj[j2].push_back({wire(t + 1, i + 1), kMinusOne});
        adj[wire(t, i + 1)].push_back({j1, kOne});
        adj[j1].push_back({wire(t + 1, i), kOne});
        adj[j1].push_back({j2, LaurentPolynomial::variable(*f.variable)});
        break;
      }
    }
  }
  LaurentPolynomial zero;
  Matrix<LaurentPolynomial> routes(n, n, zero);
  for (int i = 1; i <= n; ++i) {
    std::vector<std::pair<int, LaurentPolynomial>> stack{{wire(0, i), kOne}};
    while (!stack.empty()) {
      auto [u, acc] = stack.back();
      stack.pop_back();
      if (u < base && u / n == cols - 1) {
        routes.at(i - 1, u % n) += acc;
        continue;
      }
      for (const Hop& h : adj[u]) stack.emplace_back(h.to, acc * h.weight);
    }
  }
  // The wiring reads rows top to bottom from the last position; flip both
  // indices for the displayed layout with row 1 on top.
  Matrix<LaurentPolynomial> out(n, n, zero);
  for (int r = 1; r <= n; ++r)
    for (int c = 1; c <= n; ++c) out.at(r - 1, c - 1) = routes.at(n - r, n - c);
  return out;
}

Matrix<LaurentPolynomial> group_element(const ChipWord& w) {
  if (w.n < 1) throw std::invalid_argument("group_element: need n >= 1");
  Matrix<LaurentPolynomial> g = Matrix<LaurentPolynomial>::identity(w.n, kOne);
  for (const ChipFactor& f : w.factors) g = g * chip_matrix(f, w.n);
  if (!(g == chip_network_matrix(w)))
    throw std::logic_error("group_element: factor product disagrees with route sums");
  return g;
}

Matrix<LaurentPolynomial> project(const Matrix<LaurentPolynomial>& g, int k) {
  int n = g.rows();
  if (g.cols() != n) throw std::invalid_argument("project: matrix not square");
  if (k < 1 || k > n) throw std::invalid_argument("project: k out of range");
  LaurentPolynomial zero;
  Matrix<LaurentPolynomial> m(k, n, zero);
  for (int s = 1; s <= k; ++s)
    for (int t = 1; t <= n; ++t) m.at(s - 1, t - 1) = g.at(n - t, k - s);
  for (int t = 1; t <= n; ++t) m.col_labels.push_back(t);
  for (int s = 0; s < k; ++s) {
    int lead = -1;
    for (int t = 0; t < n && lead < 0; ++t)
      if (!m.at(s, t).is_zero()) lead = t;
    if (lead < 0)
      throw std::invalid_argument("project: row " + std::to_string(s + 1) + " vanishes");
    m.row_labels.push_back(lead + 1);
  }
  return m;
}

MRMatrix mr_matrix(const GoDiagram& d) {
  return project(group_element(chip_word(d)), d.shape.k);
}

MRMatrix rescale(MRMatrix m) {
  for (int r = 0; r < m.rows(); ++r) {
    int lead = -1;
    for (int c = 0; c < m.cols() && lead < 0; ++c)
      if (!m.at(r, c).is_zero()) lead = c;
    if (lead < 0) throw std::invalid_argument("rescale: zero row");
    LaurentPolynomial inv = m.at(r, lead).monomial_inverse();
    for (int c = lead; c < m.cols(); ++c) m.at(r, c) = m.at(r, c) * inv;
  }
  return m;
}

namespace {

// Depth-first enumeration shared by the two entry formulas.  Every step
// multiplies the running weight by its own factor; the skip signs live on
// the edges, so traversal direction never changes them.
struct PseudoWalker {
  const Network& net;
  int target;
  std::vector<Pseudopath> found;
  std::vector<int> vs, es;
  std::vector<int> in_eid, down_eid;

  PseudoWalker(const Network& n, int t) : net(n), target(t) {
    in_eid.assign(net.vertices.size(), -1);
    down_eid.assign(net.vertices.size(), -1);
    for (std::size_t id = 0; id < net.edges.size(); ++id) {
      const NetworkEdge& e = net.edges[id];
      if (e.horizontal)
        in_eid[e.to] = static_cast<int>(id);
      else
        down_eid[e.from] = static_cast<int>(id);
    }
  }

  const Shape& shape() const { return net.diagram.shape; }

  bool horiz_sign_negative(const NetworkEdge& e) const {
    const BoxRef& west = net.vertices[e.to].box;
    int east = net.vertices[e.from].boundary ? shape().row_length(west.row) + 1
                                             : net.vertices[e.from].box.col;
    int blacks = 0;
    for (int c = west.col + 1; c < east; ++c)
      if (net.diagram.at({west.row, c}) == Fill::Black) ++blacks;
    return blacks % 2 == 1;
  }

  bool vert_sign_negative(const NetworkEdge& e) const {
    const BoxRef& top = net.vertices[e.from].box;
    int bottom = net.vertices[e.to].boundary ? shape().column_height(top.col) + 1
                                             : net.vertices[e.to].box.row;
    int whites = 0;
    for (int r = top.row + 1; r < bottom; ++r)
      if (net.diagram.at({r, top.col}) == Fill::White) ++whites;
    return whites % 2 == 1;
  }

  // p or m variable of a horizontal edge: the chip variable of the box the
  // edge feeds into.
  Variable pm(const NetworkEdge& e) const {
    const NetworkVertex& v = net.vertices[e.to];
    return Variable(v.fill == Fill::Plus ? 'p' : 'm', v.reading);
  }

  void record(const LaurentPolynomial& w) { found.push_back({vs, es, w}); }

  void south(int v, LaurentPolynomial w) {
    int eid = down_eid[v];
    const NetworkEdge& e = net.edges[eid];
    if (vert_sign_negative(e)) w = -w;
    vs.push_back(e.to);
    es.push_back(eid);
    if (net.vertices[e.to].boundary) {
      if (net.vertices[e.to].label == target) record(w);
    } else {
      east_single(e.to, false, w);
    }
    vs.pop_back();
    es.pop_back();
  }

  // Ride the in-edge of v east; charged when the previous step was east.
  void east_single(int v, bool charged, LaurentPolynomial w) {
    int eid = in_eid[v];
    const NetworkEdge& e = net.edges[eid];
    if (charged) w = w * LaurentPolynomial::variable(pm(e));
    if (horiz_sign_negative(e)) w = -w;
    vs.push_back(e.from);
    es.push_back(eid);
    arrive_east(e.from, w, -1);
    vs.pop_back();
    es.pop_back();
  }

  // Continuations after landing on u travelling east: stop at the target
  // boundary, keep east (charged), turn south, or hop west onto a black
  // stone and take its forced south step.  The spent entry edge of the
  // black start is excluded from the west hops.
  void arrive_east(int u, const LaurentPolynomial& w, int excluded) {
    if (net.vertices[u].boundary) {
      if (net.vertices[u].label == target) record(w);
    } else {
      east_single(u, true, w);
      south(u, w);
    }
    for (int fid : net.out[u]) {
      if (fid == excluded) continue;
      const NetworkEdge& f = net.edges[fid];
      if (!f.horizontal || net.vertices[f.to].fill != Fill::Black) continue;
      LaurentPolynomial cw = w * LaurentPolynomial::variable(pm(f));
      if (horiz_sign_negative(f)) cw = -cw;
      vs.push_back(f.to);
      es.push_back(fid);
      south(f.to, cw);
      vs.pop_back();
      es.pop_back();
    }
  }

  // West run of the unmodified walk: black stones have no outgoing
  // horizontal edges, so their forced south step needs no special case.
  void west_run(int u, const LaurentPolynomial& w) {
    for (int eid : net.out[u]) {
      const NetworkEdge& e = net.edges[eid];
      if (!e.horizontal) continue;
      const NetworkVertex& v = net.vertices[e.to];
      LaurentPolynomial sw =
          w * LaurentPolynomial::variable(pm(e), v.fill == Fill::Plus ? -1 : 1);
      if (horiz_sign_negative(e)) sw = -sw;
      vs.push_back(e.to);
      es.push_back(eid);
      south(e.to, sw);
      if (v.fill == Fill::Plus) west_run(e.to, sw);
      vs.pop_back();
      es.pop_back();
    }
  }

  std::vector<Pseudopath> sorted() {
    std::sort(found.begin(), found.end(),
              [](const Pseudopath& a, const Pseudopath& b) { return a.edges < b.edges; });
    return std::move(found);
  }
};

void check_labels(const Network& net, int source_label, int target_label) {
  if (std::find(net.sources.begin(), net.sources.end(), source_label) == net.sources.end())
    throw std::invalid_argument("pseudopaths: " + std::to_string(source_label) +
                                " is not a source");
  if (target_label < 1 || target_label > net.n)
    throw std::invalid_argument("pseudopaths: target out of range");
}

}  // namespace

std::vector<Pseudopath> pseudopaths(const Network& net, int source_label, int target_label) {
  check_labels(net, source_label, target_label);
  PseudoWalker walk(net, target_label);
  int start = net.boundary_id(source_label);
  walk.vs.push_back(start);
  if (source_label == target_label) walk.record(kOne);
  walk.west_run(start, kOne);
  walk.vs.pop_back();
  return walk.sorted();
}

LaurentPolynomial pseudopath_sum(const Network& net, int source_label, int target_label) {
  LaurentPolynomial sum;
  for (const Pseudopath& p : pseudopaths(net, source_label, target_label)) sum += p.weight;
  return sum;
}

int ModifiedNetwork::prime_vertex_id(int r) const {
  return static_cast<int>(net.vertices.size()) + r - 1;
}

int ModifiedNetwork::entry_edge_id(int r) const {
  return static_cast<int>(net.edges.size()) + r - 1;
}

ModifiedNetwork modified_network(const Network& net) {
  ModifiedNetwork m{net, {}};
  for (int r = 1; r <= net.k; ++r) {
    int best = -1;
    for (std::size_t id = net.n; id < net.vertices.size(); ++id) {
      const NetworkVertex& v = net.vertices[id];
      if (v.box.row != r) continue;
      if (best < 0 || v.box.col < net.vertices[best].box.col) best = static_cast<int>(id);
    }
    m.entry_target.push_back(best >= 0 ? best : net.boundary_id(net.sources[r - 1]));
  }
  return m;
}

std::vector<Pseudopath> pseudopaths(const ModifiedNetwork& mnet, int source_label,
                                    int target_label) {
  const Network& net = mnet.net;
  check_labels(net, source_label, target_label);
  int row = 1 + static_cast<int>(std::find(net.sources.begin(), net.sources.end(),
                                           source_label) -
                                 net.sources.begin());
  PseudoWalker walk(net, target_label);
  walk.vs.push_back(mnet.prime_vertex_id(row));
  int tgt = mnet.entry_target[row - 1];
  walk.vs.push_back(tgt);
  walk.es.push_back(mnet.entry_edge_id(row));
  const NetworkVertex& v0 = net.vertices[tgt];
  if (v0.boundary) {
    // Row without internal vertices: the entry edge runs straight across.
    if (v0.label == target_label) walk.record(kOne);
  } else if (v0.fill == Fill::Plus) {
    walk.arrive_east(tgt, kOne, -1);
  } else {
    walk.south(tgt, -LaurentPolynomial::variable(Variable('m', v0.reading)));
    int eid = walk.in_eid[tgt];
    const NetworkEdge& e = net.edges[eid];
    LaurentPolynomial w = walk.horiz_sign_negative(e) ? kOne : kMinusOne;
    walk.vs.push_back(e.from);
    walk.es.push_back(eid);
    walk.arrive_east(e.from, w, eid);
    walk.vs.pop_back();
    walk.es.pop_back();
  }
  walk.es.pop_back();
  walk.vs.pop_back();
  walk.vs.pop_back();
  return walk.sorted();
}

LaurentPolynomial pseudopath_sum(const ModifiedNetwork& mnet, int source_label,
                                 int target_label) {
  LaurentPolynomial sum;
  for (const Pseudopath& p : pseudopaths(mnet, source_label, target_label)) sum += p.weight;
  return sum;
}

namespace {

// Region around a box feeding psi: p-labels below the box (denominator),
// p-labels below the nearest plus east of it (numerator), and the parity
// of all black stones in the three strips.
struct PsiRegion {
  bool negative = false;
  std::vector<int> num_labels;
  std::vector<int> den_labels;
};

PsiRegion psi_region(const GoDiagram& d, const BoxRef& b0) {
  const Shape& sh = d.shape;
  PsiRegion out;
  int len = sh.row_length(b0.row);
  int c1 = 0;
  for (int c = b0.col + 1; c <= len && c1 == 0; ++c)
    if (d.at({b0.row, c}) == Fill::Plus) c1 = c;
  int blacks = 0;
  int top_end = c1 ? c1 - 1 : len;
  for (int c = b0.col + 1; c <= top_end; ++c)
    if (d.at({b0.row, c}) == Fill::Black) ++blacks;
  for (int r = b0.row + 1; r <= sh.column_height(b0.col); ++r) {
    Fill f = d.at({r, b0.col});
    if (f == Fill::Black) ++blacks;
    if (f == Fill::Plus) out.den_labels.push_back(reading_label(sh, {r, b0.col}));
  }
  if (c1)
    for (int r = b0.row + 1; r <= sh.column_height(c1); ++r) {
      Fill f = d.at({r, c1});
      if (f == Fill::Black) ++blacks;
      if (f == Fill::Plus) out.num_labels.push_back(reading_label(sh, {r, c1}));
    }
  out.negative = blacks % 2 == 1;
  return out;
}

}  // namespace

std::map<Variable, LaurentPolynomial> psi(const GoDiagram& d) {
  std::map<Variable, LaurentPolynomial> images;
  for (const BoxRef& b : standard_reading_order(d.shape)) {
    Fill f = d.at(b);
    if (f == Fill::White) continue;
    PsiRegion reg = psi_region(d, b);
    int lab = reading_label(d.shape, b);
    LaurentPolynomial img = reg.negative ? kMinusOne : kOne;
    for (int q : reg.num_labels) img *= LaurentPolynomial::variable(Variable('p', q));
    for (int q : reg.den_labels) img *= LaurentPolynomial::variable(Variable('p', q), -1);
    if (f == Fill::Plus)
      images[Variable('a', lab)] = img * LaurentPolynomial::variable(Variable('p', lab), -1);
    else
      images[Variable('c', lab)] = img * LaurentPolynomial::variable(Variable('m', lab));
  }
  return images;
}

std::map<Variable, LaurentPolynomial> psi_inverse(const GoDiagram& d) {
  std::map<Variable, LaurentPolynomial> inv;
  std::map<int, LaurentPolynomial> p_inv;  // images of p by box label, pluses only
  // Reading order makes this triangular: every region box reads earlier
  // than its center box, so its image is already known.
  for (const BoxRef& b : standard_reading_order(d.shape)) {
    Fill f = d.at(b);
    if (f == Fill::White) continue;
    PsiRegion reg = psi_region(d, b);
    int lab = reading_label(d.shape, b);
    LaurentPolynomial sign = reg.negative ? kMinusOne : kOne;
    if (f == Fill::Plus) {
      LaurentPolynomial num = sign;
      for (int q : reg.num_labels) num *= p_inv.at(q);
      LaurentPolynomial den = LaurentPolynomial::variable(Variable('a', lab));
      for (int q : reg.den_labels) den *= p_inv.at(q);
      LaurentPolynomial img = num * den.monomial_inverse();
      p_inv.emplace(lab, img);
      inv.emplace(Variable('p', lab), img);
    } else {
      LaurentPolynomial img = sign * LaurentPolynomial::variable(Variable('c', lab));
      for (int q : reg.den_labels) img *= p_inv.at(q);
      LaurentPolynomial den = kOne;
      for (int q : reg.num_labels) den *= p_inv.at(q);
      inv.emplace(Variable('m', lab), img * den.monomial_inverse());
    }
  }
  return inv;
}

LaurentPolynomial psi_path_weight(const Network& net, const Path& p) {
  const GoDiagram& d = net.diagram;
  const Shape& sh = d.shape;
  std::vector<BoxRef> boxes;
  auto emit = [&boxes](int r, int c) {
    BoxRef b{r, c};
    if (boxes.empty() || !(boxes.back() == b)) boxes.push_back(b);
  };
  for (std::size_t i = 0; i < p.edge_ids.size(); ++i) {
    int eid = p.edge_ids[i];
    if (eid < 0 || eid >= static_cast<int>(net.edges.size()))
      throw std::invalid_argument("psi_path_weight: edge id out of range");
    const NetworkEdge& e = net.edges[eid];
    if (i > 0 && net.edges[p.edge_ids[i - 1]].to != e.from)
      throw std::invalid_argument("psi_path_weight: edges do not chain");
    if (e.horizontal) {
      const BoxRef& west = net.vertices[e.to].box;
      int east = net.vertices[e.from].boundary ? sh.row_length(west.row)
                                               : net.vertices[e.from].box.col;
      for (int c = east; c >= west.col; --c) emit(west.row, c);
    } else {
      const BoxRef& top = net.vertices[e.from].box;
      int bottom = net.vertices[e.to].boundary ? sh.column_height(top.col)
                                               : net.vertices[e.to].box.row;
      for (int r = top.row; r <= bottom; ++r) emit(r, top.col);
    }
  }
  std::set<BoxRef> corners;
  for (std::size_t i = 1; i < p.edge_ids.size(); ++i) {
    const NetworkEdge& a = net.edges[p.edge_ids[i - 1]];
    const NetworkEdge& b = net.edges[p.edge_ids[i]];
    if (a.horizontal != b.horizontal) corners.insert(net.vertices[b.from].box);
  }
  LaurentPolynomial w = kOne;
  int straight_blacks = 0;
  for (const BoxRef& b : boxes) {
    Fill f = d.at(b);
    if (f == Fill::Plus)
      w *= LaurentPolynomial::variable(Variable('p', reading_label(sh, b)), -1);
    else if (f == Fill::Black) {
      if (corners.count(b))
        w *= LaurentPolynomial::variable(Variable('m', reading_label(sh, b)));
      else
        ++straight_blacks;
    }
  }
  return straight_blacks % 2 ? -w : w;
}

Matrix<LaurentPolynomial> rref_division_free(const Matrix<LaurentPolynomial>& m) {
  int k = m.rows();
  if (static_cast<int>(m.row_labels.size()) != k)
    throw std::invalid_argument("rref_division_free: rows must be labeled");
  if (k == 0) return m;
  LaurentPolynomial zero;
  Matrix<LaurentPolynomial> a(k, k, zero);
  for (int r = 0; r < k; ++r) {
    int lab = m.row_labels[r];
    if (lab < 1 || lab > m.cols())
      throw std::invalid_argument("rref_division_free: label out of range");
    if (r > 0 && lab <= m.row_labels[r - 1])
      throw std::invalid_argument("rref_division_free: labels must increase");
    for (int u = 0; u < k; ++u) a.at(r, u) = m.at(r, m.row_labels[u] - 1);
  }
  for (int r = 0; r < k; ++r) {
    if (!(a.at(r, r) == kOne))
      throw std::invalid_argument("rref_division_free: expected leading ones");
    for (int u = 0; u < r; ++u)
      if (!a.at(r, u).is_zero())
        throw std::invalid_argument("rref_division_free: expected zeros under the ones");
  }
  // a is unipotent upper triangular, so I - a is nilpotent and the inverse
  // is the finite geometric series: no division enters.
  Matrix<LaurentPolynomial> nil(k, k, zero);
  for (int r = 0; r < k; ++r)
    for (int u = r + 1; u < k; ++u) nil.at(r, u) = -a.at(r, u);
  Matrix<LaurentPolynomial> inv = Matrix<LaurentPolynomial>::identity(k, kOne);
  Matrix<LaurentPolynomial> pw = Matrix<LaurentPolynomial>::identity(k, kOne);
  for (int step = 1; step < k; ++step) {
    pw = pw * nil;
    for (int r = 0; r < k; ++r)
      for (int u = 0; u < k; ++u) inv.at(r, u) += pw.at(r, u);
  }
  inv.row_labels = m.row_labels;
  return inv * m;
}

std::string to_json_string(const VerificationReport& r) {
  nlohmann::json j;
  j["diagram"] = nlohmann::json::parse(to_json_string(r.diagram));
  j["theorem"] = r.theorem;
  j["status"] = r.passed ? "pass" : "fail";
  if (!r.counterexample.empty())
    j["counterexample"] = nlohmann::json::parse(r.counterexample);
  return j.dump();
}

VerificationReport verify_entry_formulas(const GoDiagram& d) {
  VerificationReport rep;
  rep.diagram = d;
  rep.theorem = "entry-formulas";
  Network net = build_network(d);
  MRMatrix m = mr_matrix(d);
  auto fail = [&rep](const nlohmann::json& j) {
    rep.counterexample = j.dump();
    return rep;
  };
  std::set<int> subset = shape_to_subset(d.shape);
  std::vector<int> labels(subset.begin(), subset.end());
  if (m.row_labels != labels || net.sources != labels)
    return fail({{"check", "row-labels"},
                 {"leading_columns", m.row_labels},
                 {"sources", net.sources}});
  for (int r = 1; r <= d.shape.k; ++r) {
    LaurentPolynomial lead = kOne;
    int blacks = 0;
    for (int c = 1; c <= d.shape.row_length(r); ++c) {
      Fill f = d.at({r, c});
      if (f == Fill::Plus)
        lead *= LaurentPolynomial::variable(Variable('p', reading_label(d.shape, {r, c})));
      else if (f == Fill::Black)
        ++blacks;
    }
    if (blacks % 2) lead = -lead;
    const LaurentPolynomial& got = m.at(r - 1, labels[r - 1] - 1);
    if (!(got == lead))
      return fail({{"check", "leading-entry"},
                   {"row", labels[r - 1]},
                   {"expected", lead.to_string()},
                   {"entry", got.to_string()}});
  }
  MRMatrix mt = rescale(m);
  for (int r = 0; r < d.shape.k; ++r)
    for (int t = 1; t <= d.shape.n; ++t) {
      LaurentPolynomial sum = pseudopath_sum(net, labels[r], t);
      if (!(mt.at(r, t - 1) == sum))
        return fail({{"check", "rescaled-entry"},
                     {"row", labels[r]},
                     {"column", t},
                     {"entry", mt.at(r, t - 1).to_string()},
                     {"pseudopath_sum", sum.to_string()}});
    }
  ModifiedNetwork mn = modified_network(net);
  for (int r = 0; r < d.shape.k; ++r)
    for (int t = 1; t <= d.shape.n; ++t) {
      LaurentPolynomial sum = pseudopath_sum(mn, labels[r], t);
      if (!(m.at(r, t - 1) == sum))
        return fail({{"check", "entry"},
                     {"row", labels[r]},
                     {"column", t},
                     {"entry", m.at(r, t - 1).to_string()},
                     {"pseudopath_sum", sum.to_string()}});
    }
  rep.passed = true;
  return rep;
}

VerificationReport verify_theorem_row(const GoDiagram& d) {
  VerificationReport rep;
  rep.diagram = d;
  rep.theorem = "theorem-row";
  Matrix<LaurentPolynomial> lhs = weight_matrix(d);
  std::map<Variable, LaurentPolynomial> images = psi(d);
  for (int r = 0; r < lhs.rows(); ++r)
    for (int c = 0; c < lhs.cols(); ++c) lhs.at(r, c) = lhs.at(r, c).substitute(images);
  Matrix<LaurentPolynomial> rhs = rref_division_free(rescale(mr_matrix(d)));
  auto fail = [&rep](const nlohmann::json& j) {
    rep.counterexample = j.dump();
    return rep;
  };
  if (lhs.row_labels != rhs.row_labels)
    return fail({{"check", "row-labels"},
                 {"weight_matrix", lhs.row_labels},
                 {"row_echelon", rhs.row_labels}});
  for (int r = 0; r < lhs.rows(); ++r)
    for (int c = 0; c < lhs.cols(); ++c)
      if (!(lhs.at(r, c) == rhs.at(r, c)))
        return fail({{"check", "entry"},
                     {"row", lhs.row_labels[r]},
                     {"column", c + 1},
                     {"psi_weight_matrix", lhs.at(r, c).to_string()},
                     {"row_echelon", rhs.at(r, c).to_string()}});
  rep.passed = true;
  return rep;
}

}  // namespace deodhar
