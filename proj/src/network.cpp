#include "deodhar/network.hpp"

#include "json.hpp"

#include <algorithm>
#include <set>
#include <cstdint>
#include <sstream>
#include <stdexcept>

namespace deodhar {

int Network::boundary_id(int label) const {
  if (label < 1 || label > n) throw std::invalid_argument("Network: boundary label out of range");
  return label - 1;
}

int Network::internal_id(int reading) const {
  for (std::size_t i = static_cast<std::size_t>(n); i < vertices.size(); ++i)
    if (vertices[i].reading == reading) return static_cast<int>(i);
  throw std::invalid_argument("Network: no internal vertex at reading box " +
                              std::to_string(reading));
}

Network build_network(const GoDiagram& d) {
  if (!validate(d)) throw std::invalid_argument("build_network: invalid diagram");
  Network net;
  net.diagram = d;
  net.k = d.shape.k;
  net.n = d.shape.n;
  for (int label = 1; label <= net.n; ++label) {
    NetworkVertex v;
    v.boundary = true;
    v.label = label;
    net.vertices.push_back(v);
  }
  std::set<int> subset = shape_to_subset(d.shape);
  net.sources.assign(subset.begin(), subset.end());
  for (int label = 1; label <= net.n; ++label)
    if (std::find(net.sources.begin(), net.sources.end(), label) == net.sources.end())
      net.sinks.push_back(label);

  auto order = standard_reading_order(d.shape);
  for (std::size_t idx = 0; idx < order.size(); ++idx) {
    if (d.at(order[idx]) == Fill::White) continue;
    NetworkVertex v;
    v.box = order[idx];
    v.reading = static_cast<int>(idx) + 1;
    v.fill = d.at(order[idx]);
    net.vertices.push_back(v);
  }

  // Per internal vertex: the horizontal edge entering it from the nearest
  // plus vertex (or the row's source) to its east, weighted by its own box
  // variable, then the unit vertical edge leaving it for the nearest plus
  // vertex (or the column's sink) to its south.  Stones in between are
  // passed over.
  for (std::size_t i = static_cast<std::size_t>(net.n); i < net.vertices.size(); ++i) {
    const NetworkVertex& v = net.vertices[i];
    int r = v.box.row, c = v.box.col;

    NetworkEdge in;
    in.to = static_cast<int>(i);
    in.horizontal = true;
    in.variable = edge_variable(d, v.box);
    in.from = net.boundary_id(net.sources[r - 1]);
    for (int cc = c + 1; cc <= d.shape.row_length(r); ++cc)
      if (d.at(BoxRef{r, cc}) == Fill::Plus) {
        in.from = net.internal_id(reading_label(d.shape, BoxRef{r, cc}));
        break;
      }
    net.edges.push_back(in);

    NetworkEdge down;
    down.from = static_cast<int>(i);
    down.horizontal = false;
    down.to = net.boundary_id(sink_label(d.shape, c));
    for (int rr = r + 1; rr <= d.shape.column_height(c); ++rr)
      if (d.at(BoxRef{rr, c}) == Fill::Plus) {
        down.to = net.internal_id(reading_label(d.shape, BoxRef{rr, c}));
        break;
      }
    net.edges.push_back(down);
  }

  net.out.assign(net.vertices.size(), {});
  for (std::size_t e = 0; e < net.edges.size(); ++e)
    net.out[net.edges[e].from].push_back(static_cast<int>(e));
  return net;
}

LaurentPolynomial edge_weight(const NetworkEdge& e) {
  if (e.variable) return LaurentPolynomial::variable(*e.variable);
  return LaurentPolynomial::constant(1);
}

LaurentPolynomial path_weight(const Network& net, const Path& p) {
  LaurentPolynomial w = LaurentPolynomial::constant(1);
  for (int e : p.edge_ids) w = w * edge_weight(net.edges[e]);
  return w;
}

namespace {

void path_dfs(const Network& net, int at, int target, std::vector<int>& walk,
              std::vector<Path>& result) {
  if (at == target) {
    result.push_back(Path{walk});
    return;
  }
  for (int e : net.out[at]) {
    walk.push_back(e);
    path_dfs(net, net.edges[e].to, target, walk, result);
    walk.pop_back();
  }
}

int sources_strictly_between(const Network& net, int a, int b) {
  int lo = std::min(a, b), hi = std::max(a, b);
  int q = 0;
  for (int s : net.sources)
    if (lo < s && s < hi) ++q;
  return q;
}

std::uint64_t path_vertex_mask(const Network& net, const Path& p, int start_id) {
  std::uint64_t mask = 1ULL << start_id;
  for (int e : p.edge_ids) mask |= 1ULL << net.edges[e].to;
  return mask;
}

void check_subset(const std::vector<int>& subset, int k, int n) {
  if (static_cast<int>(subset.size()) != k)
    throw std::invalid_argument("plucker_lgv: subset size must equal source count");
  for (std::size_t i = 0; i < subset.size(); ++i) {
    if (subset[i] < 1 || subset[i] > n)
      throw std::invalid_argument("plucker_lgv: column label out of range");
    if (i > 0 && subset[i] <= subset[i - 1])
      throw std::invalid_argument("plucker_lgv: subset must be strictly increasing");
  }
}

struct FamilySearch {
  int k;
  // options[r][j]: disjointness mask and boundary-signed weight of each path
  // from source r to subset element j.
  std::vector<std::vector<std::vector<std::pair<std::uint64_t, LaurentPolynomial>>>> options;
  std::vector<bool> used;
  LaurentPolynomial acc = LaurentPolynomial();

  void expand(int r, std::uint64_t mask, int inversions, const LaurentPolynomial& product) {
    if (r == k) {
      if (inversions % 2 == 0)
        acc = acc + product;
      else
        acc = acc - product;
      return;
    }
    for (int j = 0; j < k; ++j) {
      if (used[j]) continue;
      int above = 0;
      for (int jj = j + 1; jj < k; ++jj)
        if (used[jj]) ++above;
      used[j] = true;
      for (const auto& [pmask, weight] : options[r][j])
        if ((mask & pmask) == 0) expand(r + 1, mask | pmask, inversions + above, product * weight);
      used[j] = false;
    }
  }
};

}  // namespace

std::vector<Path> enumerate_paths(const Network& net, int source_label, int target_label) {
  if (std::find(net.sources.begin(), net.sources.end(), source_label) == net.sources.end())
    throw std::invalid_argument("enumerate_paths: " + std::to_string(source_label) +
                                " is not a source");
  int target = net.boundary_id(target_label);
  if (source_label == target_label) return {Path{}};
  std::vector<Path> result;
  std::vector<int> walk;
  path_dfs(net, net.boundary_id(source_label), target, walk, result);
  return result;
}

Matrix<LaurentPolynomial> weight_matrix(const Network& net) {
  Matrix<LaurentPolynomial> w(net.k, net.n, LaurentPolynomial());
  w.row_labels = net.sources;
  for (int s = 1; s <= net.n; ++s) w.col_labels.push_back(s);
  for (int r = 0; r < net.k; ++r)
    for (int s = 1; s <= net.n; ++s) {
      LaurentPolynomial sum;
      for (const Path& p : enumerate_paths(net, net.sources[r], s))
        sum = sum + path_weight(net, p);
      if (sources_strictly_between(net, net.sources[r], s) % 2 == 1)
        sum = LaurentPolynomial() - sum;
      w.at(r, s - 1) = sum;
    }
  return w;
}

Matrix<LaurentPolynomial> weight_matrix(const GoDiagram& d) {
  return weight_matrix(build_network(d));
}

LaurentPolynomial plucker_lgv(const Network& net, const std::vector<int>& subset) {
  check_subset(subset, net.k, net.n);
  if (net.vertices.size() > 63)
    throw std::invalid_argument("plucker_lgv: network too large for mask search");
  FamilySearch search;
  search.k = net.k;
  search.options.resize(net.k);
  for (int r = 0; r < net.k; ++r) {
    search.options[r].resize(net.k);
    for (int j = 0; j < net.k; ++j) {
      int start = net.boundary_id(net.sources[r]);
      bool negate = sources_strictly_between(net, net.sources[r], subset[j]) % 2 == 1;
      for (const Path& p : enumerate_paths(net, net.sources[r], subset[j])) {
        LaurentPolynomial w = path_weight(net, p);
        if (negate) w = LaurentPolynomial() - w;
        search.options[r][j].emplace_back(path_vertex_mask(net, p, start), w);
      }
    }
  }
  search.used.assign(net.k, false);
  search.expand(0, 0, 0, LaurentPolynomial::constant(1));
  return search.acc;
}

std::string to_dot(const Network& net) {
  std::ostringstream os;
  os << "digraph network {\n  rankdir=RL;\n";
  for (const NetworkVertex& v : net.vertices) {
    if (v.boundary) {
      os << "  b" << v.label << " [shape=circle label=\"" << v.label << "\"];\n";
    } else if (v.fill == Fill::Plus) {
      os << "  v" << v.reading << " [shape=point width=0.08];\n";
    } else {
      os << "  v" << v.reading << " [shape=point width=0.2];\n";
    }
  }
  auto name = [&](int id) {
    const NetworkVertex& v = net.vertices[id];
    return (v.boundary ? "b" + std::to_string(v.label) : "v" + std::to_string(v.reading));
  };
  for (const NetworkEdge& e : net.edges) {
    os << "  " << name(e.from) << " -> " << name(e.to);
    if (e.variable) os << " [label=\"" << e.variable->name() << "\"]";
    os << ";\n";
  }
  os << "}\n";
  return os.str();
}

std::string to_json_string(const Network& net) {
  nlohmann::json j;
  j["k"] = net.k;
  j["n"] = net.n;
  j["sources"] = net.sources;
  j["sinks"] = net.sinks;
  j["vertices"] = nlohmann::json::array();
  for (std::size_t i = 0; i < net.vertices.size(); ++i) {
    const NetworkVertex& v = net.vertices[i];
    nlohmann::json jv;
    jv["id"] = i;
    if (v.boundary) {
      jv["kind"] = "boundary";
      jv["label"] = v.label;
    } else {
      jv["kind"] = (v.fill == Fill::Plus) ? "plus" : "black";
      jv["box"] = {v.box.row, v.box.col};
      jv["reading"] = v.reading;
    }
    j["vertices"].push_back(jv);
  }
  j["edges"] = nlohmann::json::array();
  for (std::size_t i = 0; i < net.edges.size(); ++i) {
    const NetworkEdge& e = net.edges[i];
    nlohmann::json je;
    je["id"] = i;
    je["from"] = e.from;
    je["to"] = e.to;
    je["direction"] = e.horizontal ? "west" : "south";
    je["weight"] = e.variable ? e.variable->name() : "1";
    j["edges"].push_back(je);
  }
  return j.dump();
}

}  // namespace deodhar
