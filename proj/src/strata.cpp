#include "deodhar/strata.hpp"

#include "json.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>

namespace deodhar {

namespace {

// x lies weakly southeast of b.
bool in_region(const BoxRef& b, const BoxRef& x) {
  return x.row >= b.row && x.col >= b.col;
}

void check_subset_sorted(const Subset& s, int n, const char* who) {
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] < 1 || s[i] > n) throw std::invalid_argument(std::string(who) + ": element out of range");
    if (i > 0 && s[i] <= s[i - 1])
      throw std::invalid_argument(std::string(who) + ": subset not strictly increasing");
  }
}

}  // namespace

std::vector<Subset> k_subsets(int n, int k) {
  if (k < 0 || n < 0 || k > n) throw std::invalid_argument("k_subsets: need 0 <= k <= n");
  std::vector<Subset> out;
  Subset cur(k);
  for (int i = 0; i < k; ++i) cur[i] = i + 1;
  if (k == 0) return {Subset{}};
  while (true) {
    out.push_back(cur);
    // advance the rightmost element that can still move
    int i = k - 1;
    while (i >= 0 && cur[i] == n - (k - 1 - i)) --i;
    if (i < 0) break;
    ++cur[i];
    for (int j = i + 1; j < k; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

bool shifted_lex_less(const Subset& a, const Subset& b, int i, int n) {
  if (i < 1 || i > n) throw std::invalid_argument("shifted_lex_less: shift out of range");
  auto ranks = [&](const Subset& s) {
    std::vector<int> r;
    r.reserve(s.size());
    for (int x : s) r.push_back(((x - i) % n + n) % n);
    std::sort(r.begin(), r.end());
    return r;
  };
  return ranks(a) < ranks(b);
}

std::string subset_key(const Subset& s) {
  std::ostringstream out;
  for (std::size_t i = 0; i < s.size(); ++i) out << (i ? "," : "") << s[i];
  return out.str();
}

Subset parse_subset_key(const std::string& key) {
  Subset out;
  std::size_t pos = 0;
  while (pos < key.size()) {
    std::size_t next = key.find(',', pos);
    if (next == std::string::npos) next = key.size();
    std::string piece = key.substr(pos, next - pos);
    if (piece.empty()) throw std::invalid_argument("parse_subset_key: empty element in \"" + key + "\"");
    std::size_t used = 0;
    int value = std::stoi(piece, &used);
    if (used != piece.size())
      throw std::invalid_argument("parse_subset_key: bad element \"" + piece + "\"");
    out.push_back(value);
    pos = next + 1;
  }
  for (std::size_t i = 0; i < out.size(); ++i)
    if (out[i] < 1 || (i > 0 && out[i] <= out[i - 1]))
      throw std::invalid_argument("parse_subset_key: elements must increase strictly");
  return out;
}

// ---------------------------------------------------------------------------
// JSON parsing

namespace {

template <class S>
PluckerVector<S> plucker_from_json_impl(const std::string& text, S (*parse)(const std::string&)) {
  try {
    nlohmann::json j = nlohmann::json::parse(text);
    PluckerVector<S> p;
    p.k = j.at("k").get<int>();
    p.n = j.at("n").get<int>();
    if (p.k < 1 || p.n < p.k)
      throw std::invalid_argument("plucker_from_json: need 1 <= k <= n");
    for (const auto& [key, val] : j.at("coords").items()) {
      Subset I = parse_subset_key(key);
      check_subset_sorted(I, p.n, "plucker_from_json");
      if (static_cast<int>(I.size()) != p.k)
        throw std::invalid_argument("plucker_from_json: subset \"" + key + "\" has wrong size");
      S value = parse(val.template get<std::string>());
      if (!scalar_is_zero(value)) p.coords.emplace(std::move(I), std::move(value));
    }
    return p;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("plucker_from_json: ") + e.what());
  }
}

template <class S>
Matrix<S> matrix_from_json_impl(const std::string& text, S (*parse)(const std::string&)) {
  try {
    nlohmann::json j = nlohmann::json::parse(text);
    int rows = j.at("rows").get<int>();
    int cols = j.at("cols").get<int>();
    if (rows < 1 || cols < 1) throw std::invalid_argument("matrix_from_json: empty matrix");
    const auto& entries = j.at("entries");
    if (static_cast<int>(entries.size()) != rows)
      throw std::invalid_argument("matrix_from_json: row count mismatch");
    std::vector<S> parsed;
    parsed.reserve(static_cast<std::size_t>(rows) * cols);
    for (const auto& row : entries) {
      if (static_cast<int>(row.size()) != cols)
        throw std::invalid_argument("matrix_from_json: column count mismatch");
      for (const auto& cell : row) parsed.push_back(parse(cell.template get<std::string>()));
    }
    Matrix<S> m(rows, cols, parsed[0] - parsed[0]);
    for (int r = 0; r < rows; ++r)
      for (int c = 0; c < cols; ++c) m.at(r, c) = parsed[static_cast<std::size_t>(r) * cols + c];
    if (j.contains("row_labels")) {
      for (const auto& lab : j.at("row_labels")) m.row_labels.push_back(lab.get<int>());
      if (static_cast<int>(m.row_labels.size()) != rows)
        throw std::invalid_argument("matrix_from_json: row label count mismatch");
    }
    return m;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("matrix_from_json: ") + e.what());
  }
}

}  // namespace

PluckerVector<LaurentPolynomial> plucker_from_json_laurent(const std::string& text) {
  return plucker_from_json_impl<LaurentPolynomial>(text, &parse_laurent);
}
PluckerVector<Rational> plucker_from_json_rational(const std::string& text) {
  return plucker_from_json_impl<Rational>(text, &parse_rational);
}
PluckerVector<PrimeFieldElement> plucker_from_json_prime(const std::string& text) {
  return plucker_from_json_impl<PrimeFieldElement>(text, &parse_prime_field);
}

Matrix<LaurentPolynomial> matrix_from_json_laurent(const std::string& text) {
  return matrix_from_json_impl<LaurentPolynomial>(text, &parse_laurent);
}
Matrix<Rational> matrix_from_json_rational(const std::string& text) {
  return matrix_from_json_impl<Rational>(text, &parse_rational);
}
Matrix<PrimeFieldElement> matrix_from_json_prime(const std::string& text) {
  return matrix_from_json_impl<PrimeFieldElement>(text, &parse_prime_field);
}

// ---------------------------------------------------------------------------
// Necklaces and matroids

bool validate_necklace(const GrassmannNecklace& nk) {
  int n = nk.n, k = nk.k;
  if (n < 1 || k < 0 || k > n) return false;
  if (static_cast<int>(nk.subsets.size()) != n) return false;
  for (const Subset& s : nk.subsets) {
    if (static_cast<int>(s.size()) != k) return false;
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (s[i] < 1 || s[i] > n) return false;
      if (i > 0 && s[i] <= s[i - 1]) return false;
    }
  }
  for (int i = 1; i <= n; ++i) {
    const Subset& cur = nk.subsets[i - 1];
    const Subset& nxt = nk.subsets[i % n];
    if (!std::binary_search(cur.begin(), cur.end(), i)) {
      if (nxt != cur) return false;
      continue;
    }
    // everything of I_i except i must survive into I_{i+1}
    for (int x : cur)
      if (x != i && !std::binary_search(nxt.begin(), nxt.end(), x)) return false;
  }
  return true;
}

std::string to_json_string(const GrassmannNecklace& nk) {
  std::ostringstream out;
  out << "{\"k\": " << nk.k << ", \"n\": " << nk.n << ", \"necklace\": [";
  for (std::size_t i = 0; i < nk.subsets.size(); ++i) {
    out << (i ? ", [" : "[");
    for (std::size_t j = 0; j < nk.subsets[i].size(); ++j)
      out << (j ? ", " : "") << nk.subsets[i][j];
    out << ']';
  }
  out << "]}";
  return out.str();
}

bool exchange_axiom_holds(const Matroid& m) {
  std::set<Subset> bases(m.bases.begin(), m.bases.end());
  for (const Subset& I : m.bases)
    for (const Subset& J : m.bases) {
      if (I == J) continue;
      for (int i : I) {
        bool found = false;
        for (int j : J) {
          if (j != i && std::binary_search(I.begin(), I.end(), j)) continue;
          Subset cand;
          for (int x : I)
            if (x != i) cand.push_back(x);
          cand.push_back(j);
          std::sort(cand.begin(), cand.end());
          if (bases.count(cand)) {
            found = true;
            break;
          }
        }
        if (!found) return false;
      }
    }
  return true;
}

std::string to_json_string(const Matroid& m) {
  std::ostringstream out;
  out << "{\"k\": " << m.k << ", \"n\": " << m.n << ", \"bases\": [";
  for (std::size_t i = 0; i < m.bases.size(); ++i) {
    out << (i ? ", [" : "[");
    for (std::size_t j = 0; j < m.bases[i].size(); ++j) out << (j ? ", " : "") << m.bases[i][j];
    out << ']';
  }
  out << "]}";
  return out.str();
}

// ---------------------------------------------------------------------------
// Box minors

Subset minor_index_partial(const Shape& shape, const std::vector<std::vector<Fill>>& fill,
                           const BoxRef& b) {
  if (!shape.contains(b)) throw std::invalid_argument("minor_index_partial: box outside shape");
  // The in-region boxes other than b all precede b in the standard order,
  // so their fills are already decided during identification.
  Permutation stones = Permutation::identity(shape.n);
  ReducedWord win{shape.n, {}};
  for (const BoxRef& x : standard_reading_order(shape)) {
    if (!in_region(b, x)) continue;
    int gen = box_generator(shape, x);
    win.letters.push_back(gen);
    if (!(x == b) && fill[x.row - 1][x.col - 1] != Fill::Plus) stones.mul_right(gen);
  }
  Permutation u = stones * win.product().inverse();
  std::set<int> image = u.apply_to_set(shape_to_subset(shape));
  return Subset(image.begin(), image.end());
}

std::vector<BoxFactorization> box_minors(const GoDiagram& d) {
  if (!validate(d)) throw std::invalid_argument("box_minors: filling is not a Go-diagram");
  const Shape& shape = d.shape;
  const ReadingOrder order = standard_reading_order(shape);
  const std::set<int> iset = shape_to_subset(shape);
  std::vector<BoxFactorization> out;
  out.reserve(order.size());
  for (const BoxRef& b : order) {
    ReducedWord win{shape.n, {}}, wout{shape.n, {}};
    Permutation vin = Permutation::identity(shape.n);
    Permutation vout = Permutation::identity(shape.n);
    std::vector<int> plus_labels, black_labels;
    for (const BoxRef& x : order) {
      int gen = box_generator(shape, x);
      Fill f = d.at(x);
      if (in_region(b, x)) {
        win.letters.push_back(gen);
        if (f != Fill::Plus) vin.mul_right(gen);
      } else {
        wout.letters.push_back(gen);
        if (f != Fill::Plus) vout.mul_right(gen);
        if (f == Fill::Plus) plus_labels.push_back(reading_label(shape, x));
        if (f == Fill::Black) black_labels.push_back(reading_label(shape, x));
      }
    }
    Permutation u = vin;
    if (d.at(b) != Fill::Plus)
      u = u * Permutation::transposition(shape.n, box_generator(shape, b));
    u = u * win.product().inverse();
    std::set<int> image = u.apply_to_set(iset);
    out.push_back(BoxFactorization{b, d.at(b), vin, win.product(), vout, wout.product(),
                                   Subset(image.begin(), image.end()), plus_labels, black_labels});
  }
  return out;
}

// ---------------------------------------------------------------------------
// Point counts

Integer component_point_count(const GoDiagram& d, const Integer& q) {
  if (q < 2) throw std::invalid_argument("component_point_count: q must be at least 2");
  if (!validate(d)) throw std::invalid_argument("component_point_count: invalid diagram");
  DiagramStats st = stats(d);
  Integer acc = 1;
  for (int i = 0; i < st.plus; ++i) acc *= q - 1;
  for (int i = 0; i < st.black; ++i) acc *= q;
  return acc;
}

Integer grassmannian_point_count(int k, int n, const Integer& q) {
  if (q < 2) throw std::invalid_argument("grassmannian_point_count: q must be at least 2");
  Integer acc = 0;
  for (const GoDiagram& d : enumerate_diagrams(k, n)) acc += component_point_count(d, q);
  return acc;
}

QPolynomial QPolynomial::constant(const Integer& c) {
  QPolynomial out{{c}};
  out.normalize();
  return out;
}

void QPolynomial::normalize() {
  while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
}

QPolynomial QPolynomial::operator+(const QPolynomial& o) const {
  QPolynomial out;
  out.coeffs.resize(std::max(coeffs.size(), o.coeffs.size()), Integer(0));
  for (std::size_t i = 0; i < coeffs.size(); ++i) out.coeffs[i] += coeffs[i];
  for (std::size_t i = 0; i < o.coeffs.size(); ++i) out.coeffs[i] += o.coeffs[i];
  out.normalize();
  return out;
}

QPolynomial QPolynomial::operator-(const QPolynomial& o) const {
  QPolynomial out;
  out.coeffs.resize(std::max(coeffs.size(), o.coeffs.size()), Integer(0));
  for (std::size_t i = 0; i < coeffs.size(); ++i) out.coeffs[i] += coeffs[i];
  for (std::size_t i = 0; i < o.coeffs.size(); ++i) out.coeffs[i] -= o.coeffs[i];
  out.normalize();
  return out;
}

QPolynomial QPolynomial::operator*(const QPolynomial& o) const {
  if (coeffs.empty() || o.coeffs.empty()) return zero();
  QPolynomial out;
  out.coeffs.resize(coeffs.size() + o.coeffs.size() - 1, Integer(0));
  for (std::size_t i = 0; i < coeffs.size(); ++i)
    for (std::size_t j = 0; j < o.coeffs.size(); ++j) out.coeffs[i + j] += coeffs[i] * o.coeffs[j];
  out.normalize();
  return out;
}

QPolynomial QPolynomial::pow(int e) const {
  if (e < 0) throw std::invalid_argument("QPolynomial::pow: negative exponent");
  QPolynomial acc = one();
  for (int i = 0; i < e; ++i) acc = acc * (*this);
  return acc;
}

Integer QPolynomial::evaluate(const Integer& q) const {
  Integer acc = 0;
  for (std::size_t i = coeffs.size(); i-- > 0;) acc = acc * q + coeffs[i];
  return acc;
}

std::string QPolynomial::to_string() const {
  if (coeffs.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = coeffs.size(); i-- > 0;) {
    if (coeffs[i] == 0) continue;
    Integer c = coeffs[i];
    if (first) {
      if (c < 0) {
        out << '-';
        c = -c;
      }
      first = false;
    } else {
      out << (c < 0 ? " - " : " + ");
      if (c < 0) c = -c;
    }
    if (i == 0) {
      out << deodhar::to_string(c);
    } else {
      if (c != 1) out << deodhar::to_string(c) << '*';
      out << 'q';
      if (i > 1) out << '^' << i;
    }
  }
  return out.str();
}

QPolynomial grassmannian_point_count_symbolic(int k, int n) {
  QPolynomial acc = QPolynomial::zero();
  QPolynomial qm1{{Integer(-1), Integer(1)}};
  for (const GoDiagram& d : enumerate_diagrams(k, n)) {
    DiagramStats st = stats(d);
    acc = acc + qm1.pow(st.plus) * QPolynomial::q().pow(st.black);
  }
  return acc;
}

QPolynomial r_polynomial(const Permutation& v, const ReducedWord& w_word) {
  if (v.n() != w_word.n) throw std::invalid_argument("r_polynomial: rank mismatch");
  if (!w_word.is_reduced()) throw std::invalid_argument("r_polynomial: word is not reduced");
  QPolynomial acc = QPolynomial::zero();
  QPolynomial qm1{{Integer(-1), Integer(1)}};
  for (const SubexpressionMask& mask : enumerate_distinguished(w_word)) {
    if (!(mask.product() == v)) continue;
    MaskClassification cls = classify_mask(mask);
    acc = acc + qm1.pow(static_cast<int>(cls.plus.size())) *
                    QPolynomial::q().pow(static_cast<int>(cls.black.size()));
  }
  return acc;
}

}  // namespace deodhar
