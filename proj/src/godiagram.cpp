#include "deodhar/godiagram.hpp"

#include "json.hpp"

#include <algorithm>
#include <sstream>

namespace deodhar {

Fill GoDiagram::at(const BoxRef& b) const {
  if (!shape.contains(b)) throw std::invalid_argument("GoDiagram: box outside shape");
  return fill[b.row - 1][b.col - 1];
}

DiagramStats stats(const GoDiagram& d) {
  DiagramStats out;
  for (const auto& row : d.fill)
    for (Fill f : row) {
      if (f == Fill::White) ++out.white;
      if (f == Fill::Plus) ++out.plus;
      if (f == Fill::Black) ++out.black;
    }
  return out;
}

GoDiagram diagram_from_mask(const Shape& shape, const SubexpressionMask& mask,
                            const ReadingOrder& order) {
  shape.validate();
  if (mask.word.letters != word_from_shape(shape, order).letters || mask.word.n != shape.n)
    throw std::invalid_argument("diagram_from_mask: mask word does not match the shape word");
  MaskClassification cls = classify_mask(mask);
  GoDiagram d{shape, {}};
  d.fill.resize(shape.num_rows());
  for (int r = 1; r <= shape.num_rows(); ++r)
    d.fill[r - 1].assign(shape.row_length(r), Fill::Plus);
  auto put = [&](const std::vector<int>& positions, Fill f) {
    for (int pos : positions) {
      const BoxRef& b = order[pos - 1];
      d.fill[b.row - 1][b.col - 1] = f;
    }
  };
  put(cls.white, Fill::White);
  put(cls.black, Fill::Black);
  return d;
}

GoDiagram diagram_from_mask(const Shape& shape, const SubexpressionMask& mask) {
  return diagram_from_mask(shape, mask, standard_reading_order(shape));
}

SubexpressionMask mask_from_diagram(const GoDiagram& d, const ReadingOrder& order) {
  ReducedWord word = word_from_shape(d.shape, order);
  std::vector<bool> taken;
  taken.reserve(order.size());
  for (const BoxRef& b : order) taken.push_back(d.at(b) != Fill::Plus);
  return SubexpressionMask{std::move(word), std::move(taken)};
}

SubexpressionMask mask_from_diagram(const GoDiagram& d) {
  return mask_from_diagram(d, standard_reading_order(d.shape));
}

bool validate(const GoDiagram& d) {
  d.shape.validate();
  if (static_cast<int>(d.fill.size()) != d.shape.num_rows()) return false;
  for (int r = 1; r <= d.shape.num_rows(); ++r)
    if (static_cast<int>(d.fill[r - 1].size()) != d.shape.row_length(r)) return false;
  SubexpressionMask mask = mask_from_diagram(d);
  if (!is_distinguished(mask)) return false;
  // The stone colors must match the length behavior of the taken letters.
  MaskClassification cls = classify_mask(mask);
  ReadingOrder order = standard_reading_order(d.shape);
  for (int pos : cls.white)
    if (d.at(order[pos - 1]) != Fill::White) return false;
  for (int pos : cls.black)
    if (d.at(order[pos - 1]) != Fill::Black) return false;
  return true;
}

bool is_le_diagram(const GoDiagram& d) {
  for (int r = 1; r <= d.shape.num_rows(); ++r)
    for (int c = 1; c <= d.shape.row_length(r); ++c) {
      Fill f = d.fill[r - 1][c - 1];
      if (f == Fill::Black) return false;
      if (f != Fill::White) continue;
      bool plus_above = false, plus_left = false;
      for (int rr = 1; rr < r; ++rr)
        if (d.shape.row_length(rr) >= c && d.fill[rr - 1][c - 1] == Fill::Plus)
          plus_above = true;
      for (int cc = 1; cc < c; ++cc)
        if (d.fill[r - 1][cc - 1] == Fill::Plus) plus_left = true;
      if (plus_above && plus_left) return false;
    }
  return true;
}

int reading_label(const Shape& shape, const BoxRef& b) {
  ReadingOrder order = standard_reading_order(shape);
  for (std::size_t i = 0; i < order.size(); ++i)
    if (order[i] == b) return static_cast<int>(i) + 1;
  throw std::invalid_argument("reading_label: box outside shape");
}

std::optional<Variable> edge_variable(const GoDiagram& d, const BoxRef& b) {
  Fill f = d.at(b);
  if (f == Fill::White) return std::nullopt;
  return Variable(f == Fill::Plus ? 'a' : 'c', reading_label(d.shape, b));
}

std::optional<Variable> chip_variable(const GoDiagram& d, const BoxRef& b) {
  Fill f = d.at(b);
  if (f == Fill::White) return std::nullopt;
  return Variable(f == Fill::Plus ? 'p' : 'm', reading_label(d.shape, b));
}

std::vector<std::vector<std::string>> labeled(const GoDiagram& d) {
  std::vector<std::vector<std::string>> out(d.fill.size());
  for (int r = 1; r <= d.shape.num_rows(); ++r) {
    for (int c = 1; c <= d.shape.row_length(r); ++c) {
      BoxRef b{r, c};
      switch (d.at(b)) {
        case Fill::White:
          out[r - 1].push_back("1");
          break;
        case Fill::Plus:
          out[r - 1].push_back("p" + std::to_string(reading_label(d.shape, b)));
          break;
        case Fill::Black:
          out[r - 1].push_back("-1,m" + std::to_string(reading_label(d.shape, b)));
          break;
      }
    }
  }
  return out;
}

std::vector<Shape> all_shapes(int k, int n) {
  if (k < 1 || n <= k) throw std::invalid_argument("all_shapes: need 1 <= k < n");
  // k-subsets of {1..n} in lex order on sorted element lists.
  std::vector<Shape> out;
  std::vector<int> pick(k);
  for (int i = 0; i < k; ++i) pick[i] = i + 1;
  while (true) {
    out.push_back(subset_to_shape(std::set<int>(pick.begin(), pick.end()), n));
    int i = k - 1;
    while (i >= 0 && pick[i] == n - k + i + 1) --i;
    if (i < 0) break;
    ++pick[i];
    for (int j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
  }
  return out;
}

std::vector<GoDiagram> enumerate_diagrams(const Shape& shape) {
  std::vector<GoDiagram> out;
  for (const auto& mask : enumerate_distinguished(word_from_shape(shape)))
    out.push_back(diagram_from_mask(shape, mask));
  return out;
}

std::vector<GoDiagram> enumerate_diagrams(int k, int n) {
  std::vector<GoDiagram> out;
  for (const Shape& shape : all_shapes(k, n)) {
    auto block = enumerate_diagrams(shape);
    out.insert(out.end(), block.begin(), block.end());
  }
  return out;
}

std::string to_text(const GoDiagram& d, bool inline_form) {
  std::ostringstream out;
  for (std::size_t r = 0; r < d.fill.size(); ++r) {
    if (r) out << (inline_form ? '/' : '\n');
    for (Fill f : d.fill[r]) out << static_cast<char>(f);
  }
  return out.str();
}

GoDiagram diagram_from_text(const std::string& text, int k, int n) {
  std::vector<std::vector<Fill>> fill;
  std::vector<Fill> row;
  for (char ch : text) {
    switch (ch) {
      case '+':
        row.push_back(Fill::Plus);
        break;
      case 'o':
        row.push_back(Fill::White);
        break;
      case '*':
        row.push_back(Fill::Black);
        break;
      case '/':
      case '\n':
        fill.push_back(std::move(row));
        row.clear();
        break;
      case ' ':
      case '\r':
      case '\t':
        break;
      default:
        throw std::invalid_argument(std::string("diagram_from_text: bad character '") + ch + "'");
    }
  }
  if (!row.empty()) fill.push_back(std::move(row));
  std::vector<int> rows;
  for (const auto& fr : fill) rows.push_back(static_cast<int>(fr.size()));
  Shape shape{k, n, std::move(rows)};
  shape.validate();
  GoDiagram d{std::move(shape), std::move(fill)};
  if (!validate(d)) throw std::invalid_argument("diagram_from_text: filling is not a Go-diagram");
  return d;
}

std::string to_json_string(const GoDiagram& d) {
  nlohmann::json j;
  j["k"] = d.shape.k;
  j["n"] = d.shape.n;
  j["shape"] = d.shape.rows;
  auto& fill = j["fill"] = nlohmann::json::array();
  for (const auto& row : d.fill) {
    nlohmann::json jrow = nlohmann::json::array();
    for (Fill f : row) jrow.push_back(std::string(1, static_cast<char>(f)));
    fill.push_back(std::move(jrow));
  }
  return j.dump();
}

GoDiagram diagram_from_json_string(const std::string& json_text) {
  nlohmann::json j = nlohmann::json::parse(json_text);
  int k = j.at("k").get<int>();
  int n = j.at("n").get<int>();
  Shape shape{k, n, j.at("shape").get<std::vector<int>>()};
  shape.validate();
  std::vector<std::vector<Fill>> fill;
  for (const auto& jrow : j.at("fill")) {
    std::vector<Fill> row;
    for (const auto& cell : jrow) {
      std::string s = cell.get<std::string>();
      if (s == "+")
        row.push_back(Fill::Plus);
      else if (s == "o")
        row.push_back(Fill::White);
      else if (s == "*")
        row.push_back(Fill::Black);
      else
        throw std::invalid_argument("diagram_from_json_string: bad fill entry '" + s + "'");
    }
    fill.push_back(std::move(row));
  }
  GoDiagram d{std::move(shape), std::move(fill)};
  if (static_cast<int>(d.fill.size()) != d.shape.num_rows())
    throw std::invalid_argument("diagram_from_json_string: fill does not match shape");
  for (int r = 1; r <= d.shape.num_rows(); ++r)
    if (static_cast<int>(d.fill[r - 1].size()) != d.shape.row_length(r))
      throw std::invalid_argument("diagram_from_json_string: fill does not match shape");
  if (!validate(d))
    throw std::invalid_argument("diagram_from_json_string: filling is not a Go-diagram");
  return d;
}

}  // namespace deodhar
