// Stratification machinery on top of Plücker coordinates: Grassmann
// necklaces, Schubert shapes, matroids, the box-minor characterization of
// Deodhar components, component identification with exact weight recovery,
// and finite-field point counting.
#pragma once

#include "deodhar/algebra.hpp"
#include "deodhar/godiagram.hpp"
#include "deodhar/marshrietsch.hpp"
#include "deodhar/matrix.hpp"
#include "deodhar/network.hpp"
#include "deodhar/weyl.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace deodhar {

// A k-subset of {1..n}, sorted ascending.  std::vector's operator< is the
// lexicographic order on these.
using Subset = std::vector<int>;

// All k-subsets of {1..n} in lexicographic order.
std::vector<Subset> k_subsets(int n, int k);

// Shifted linear order <_i on {1..n}: i <_i i+1 <_i ... <_i n <_i 1 <_i
// ... <_i i-1.  Subsets are compared lexicographically after reindexing
// each element x to (x - i) mod n.
bool shifted_lex_less(const Subset& a, const Subset& b, int i, int n);

// "1,3" <-> {1,3}
std::string subset_key(const Subset& s);
Subset parse_subset_key(const std::string& key);

// ---------------------------------------------------------------------------
// Plücker vectors

// The full list of maximal minors of a k x n matrix, indexed by column
// subsets.  Coordinates absent from the map are zero; the stored values are
// exact and normalized by the matrix the vector came from (no projective
// rescaling is applied).
template <class S>
struct PluckerVector {
  int k = 0;
  int n = 0;
  std::map<Subset, S> coords;

  bool is_zero(const Subset& I) const {
    auto it = coords.find(I);
    return it == coords.end() || scalar_is_zero(it->second);
  }
  // Sorted support: the subsets with nonzero coordinate.
  std::vector<Subset> support() const {
    std::vector<Subset> out;
    for (const auto& [I, val] : coords)
      if (!scalar_is_zero(val)) out.push_back(I);
    return out;
  }
  bool operator==(const PluckerVector&) const = default;
};

template <class S>
PluckerVector<S> plucker_vector(const Matrix<S>& a) {
  int k = a.rows(), n = a.cols();
  if (k < 1 || n < k) throw std::invalid_argument("plucker_vector: need 1 <= k <= n");
  PluckerVector<S> p;
  p.k = k;
  p.n = n;
  bool any = false;
  for (const Subset& I : k_subsets(n, k)) {
    std::vector<int> cols;
    for (int c : I) cols.push_back(c - 1);
    S minor = a.select_columns(cols).determinant();
    if (!scalar_is_zero(minor)) {
      p.coords.emplace(I, minor);
      any = true;
    }
  }
  if (!any) throw std::invalid_argument("plucker_vector: matrix has rank below its row count");
  return p;
}

template <class S>
std::string to_json_string(const PluckerVector<S>& p) {
  std::ostringstream out;
  out << "{\"k\": " << p.k << ", \"n\": " << p.n << ", \"coords\": {";
  bool first = true;
  for (const auto& [I, val] : p.coords) {
    if (scalar_is_zero(val)) continue;
    if (!first) out << ", ";
    first = false;
    out << '"' << subset_key(I) << "\": \"" << scalar_to_string(val) << '"';
  }
  out << "}}";
  return out.str();
}

PluckerVector<LaurentPolynomial> plucker_from_json_laurent(const std::string& text);
PluckerVector<Rational> plucker_from_json_rational(const std::string& text);
PluckerVector<PrimeFieldElement> plucker_from_json_prime(const std::string& text);

// Matrix serialization used by the command-line tools: row labels are kept
// when present, entries are the scalar strings.
template <class S>
std::string matrix_to_json(const Matrix<S>& m) {
  std::ostringstream out;
  out << "{\"rows\": " << m.rows() << ", \"cols\": " << m.cols();
  if (!m.row_labels.empty()) {
    out << ", \"row_labels\": [";
    for (std::size_t i = 0; i < m.row_labels.size(); ++i)
      out << (i ? ", " : "") << m.row_labels[i];
    out << ']';
  }
  out << ", \"entries\": [";
  for (int r = 0; r < m.rows(); ++r) {
    out << (r ? ", [" : "[");
    for (int c = 0; c < m.cols(); ++c)
      out << (c ? ", \"" : "\"") << scalar_to_string(m.at(r, c)) << '"';
    out << ']';
  }
  out << "]}";
  return out.str();
}

Matrix<LaurentPolynomial> matrix_from_json_laurent(const std::string& text);
Matrix<Rational> matrix_from_json_rational(const std::string& text);
Matrix<PrimeFieldElement> matrix_from_json_prime(const std::string& text);

// ---------------------------------------------------------------------------
// Necklaces, Schubert shapes, matroids

struct GrassmannNecklace {
  int k = 0;
  int n = 0;
  std::vector<Subset> subsets;  // I_1 .. I_n

  bool operator==(const GrassmannNecklace&) const = default;
};

// Checks the defining invariant (indices mod n): if i is in I_i then
// I_{i+1} = (I_i minus {i}) plus one element, else I_{i+1} = I_i.
bool validate_necklace(const GrassmannNecklace& nk);

std::string to_json_string(const GrassmannNecklace& nk);

// I_i = lexicographic minimum of the support with respect to <_i.
template <class S>
GrassmannNecklace grassmann_necklace(const PluckerVector<S>& p) {
  std::vector<Subset> support = p.support();
  if (support.empty()) throw std::invalid_argument("grassmann_necklace: zero vector");
  GrassmannNecklace nk;
  nk.k = p.k;
  nk.n = p.n;
  for (int i = 1; i <= p.n; ++i) {
    const Subset* best = &support[0];
    for (const Subset& cand : support)
      if (shifted_lex_less(cand, *best, i, p.n)) best = &cand;
    nk.subsets.push_back(*best);
  }
  return nk;
}

// Shape of the Schubert cell containing the point: lambda(I) for the
// lexicographically minimal nonzero coordinate I.
template <class S>
Shape schubert_shape(const PluckerVector<S>& p) {
  std::vector<Subset> support = p.support();
  if (support.empty()) throw std::invalid_argument("schubert_shape: zero vector");
  const Subset& imin = *std::min_element(support.begin(), support.end());
  return subset_to_shape(std::set<int>(imin.begin(), imin.end()), p.n);
}

struct Matroid {
  int k = 0;
  int n = 0;
  std::vector<Subset> bases;  // sorted lexicographically

  bool operator==(const Matroid&) const = default;
};

// Exchange axiom: for any bases I, J and i in I there is j in J with
// (I minus {i}) plus {j} again a basis.
bool exchange_axiom_holds(const Matroid& m);

std::string to_json_string(const Matroid& m);

// Bases are the supports of the nonzero coordinates.  The exchange axiom is
// asserted; a violation means the input was not a Plücker vector.
template <class S>
Matroid matroid(const PluckerVector<S>& p) {
  Matroid m;
  m.k = p.k;
  m.n = p.n;
  m.bases = p.support();
  if (m.bases.empty()) throw std::invalid_argument("matroid: zero vector");
  if (!exchange_axiom_holds(m))
    throw std::logic_error("matroid: exchange axiom fails; input is not a Plücker vector");
  return m;
}

// ---------------------------------------------------------------------------
// Box minors

// Factorization data attached to one box b of a Go-diagram.  The in-region
// consists of the boxes weakly southeast of b (b included); reading it in
// the standard order restricted to the region, then the complement, is a
// legal reading order of the whole shape.  w_in/w_out and v_in/v_out are the
// corresponding subword products, so w_in * w_out = w and v_in * v_out = v.
struct BoxFactorization {
  BoxRef box;
  Fill fill;
  Permutation v_in;
  Permutation w_in;
  Permutation v_out;
  Permutation w_out;
  Subset minor_index;  // I_b

  // Fill classes of the out-region boxes, as chip variables p_i / m_i in the
  // standard reading labels: the minor formulas multiply over these.
  std::vector<int> out_plus_labels;
  std::vector<int> out_black_labels;
};

// One entry per box, in the standard reading order.  The minor index is
// I_b = v_in * (w_in)^{-1} applied to I(shape) for plus boxes and
// v_in * s_b * (w_in)^{-1} applied to I(shape) for stones; both reduce to
// the product of the in-region stones other than b, so I_b does not depend
// on the fill of b itself.
std::vector<BoxFactorization> box_minors(const GoDiagram& d);

// I_b of one box from the fills of the in-region boxes other than b; fills
// elsewhere are ignored, which lets identification fill boxes one at a time.
Subset minor_index_partial(const Shape& shape, const std::vector<std::vector<Fill>>& fill,
                           const BoxRef& b);

// ---------------------------------------------------------------------------
// Extremal minors and membership

// Report on the extremal Plücker coordinates of a point parameterized by
// chip weights: the lex-min nonzero coordinate sits at I = w{n,...,n-k+1}
// with value (-1)^(number of blacks) * product of the plus weights p_i, and
// the lex-max sits at I' = v{n,...,n-k+1} with value 1.  For evaluated
// points the product identity is attested by the symbolic run; here the
// value checks degrade to Delta_I nonzero and Delta_I' equal to one.
template <class S>
VerificationReport check_extremal(const GoDiagram& d, const PluckerVector<S>& p) {
  VerificationReport report;
  report.diagram = d;
  report.theorem = "extremal-minors";
  report.passed = true;
  const Shape& shape = d.shape;
  if (p.k != shape.k || p.n != shape.n)
    throw std::invalid_argument("check_extremal: dimension mismatch");

  std::set<int> top;
  for (int x = shape.n - shape.k + 1; x <= shape.n; ++x) top.insert(x);
  std::set<int> iset = shape_to_subset(shape);
  Permutation v = mask_from_diagram(d).product();
  std::set<int> ipset = v.apply_to_set(top);
  Subset expect_min(iset.begin(), iset.end());
  Subset expect_max(ipset.begin(), ipset.end());

  std::vector<Subset> support = p.support();
  auto fail = [&](const std::string& check, const Subset& subset, const std::string& detail) {
    report.passed = false;
    report.counterexample = "{\"check\": \"" + check + "\", \"subset\": \"" + subset_key(subset) +
                            "\", \"detail\": \"" + detail + "\"}";
  };
  if (support.empty()) {
    fail("support", {}, "all coordinates vanish");
    return report;
  }
  Subset lex_min = *std::min_element(support.begin(), support.end());
  Subset lex_max = *std::max_element(support.begin(), support.end());
  if (lex_min != expect_min) {
    fail("lex-min", lex_min, "expected " + subset_key(expect_min));
    return report;
  }
  if (lex_max != expect_max) {
    fail("lex-max", lex_max, "expected " + subset_key(expect_max));
    return report;
  }
  const S& vmax = p.coords.at(expect_max);
  if (!(vmax * vmax == vmax)) {  // nonzero, so this says vmax == 1
    fail("max-value", expect_max, "expected 1, got " + scalar_to_string(vmax));
    return report;
  }
  if constexpr (std::is_same_v<S, LaurentPolynomial>) {
    // Symbolic input: the lex-min value factors over the plus weights.
    LaurentPolynomial expected = LaurentPolynomial::constant(1);
    int blacks = 0;
    for (const BoxRef& b : standard_reading_order(shape)) {
      if (d.at(b) == Fill::Black) ++blacks;
      if (d.at(b) == Fill::Plus)
        expected *= LaurentPolynomial::variable(*chip_variable(d, b));
    }
    if (blacks % 2 != 0) expected = -expected;
    if (!(p.coords.at(expect_min) == expected)) {
      fail("min-value", expect_min, "expected " + expected.to_string() + ", got " +
                                        p.coords.at(expect_min).to_string());
      return report;
    }
  }
  return report;
}

// Deodhar component membership: (1) white-box minors vanish, (2) plus-box
// minors do not, (3) Delta at I(shape) is nonzero, (4) every subset
// lexicographically below I(shape) has zero coordinate.  Black boxes impose
// no condition.
template <class S>
bool membership(const GoDiagram& d, const PluckerVector<S>& p) {
  const Shape& shape = d.shape;
  if (p.k != shape.k || p.n != shape.n)
    throw std::invalid_argument("membership: dimension mismatch");
  std::set<int> iset = shape_to_subset(shape);
  Subset ilambda(iset.begin(), iset.end());
  if (p.is_zero(ilambda)) return false;
  for (const Subset& j : k_subsets(p.n, p.k)) {
    if (!(j < ilambda)) break;  // k_subsets is lex ordered
    if (!p.is_zero(j)) return false;
  }
  for (const BoxFactorization& bf : box_minors(d)) {
    if (bf.fill == Fill::White && !p.is_zero(bf.minor_index)) return false;
    if (bf.fill == Fill::Plus && p.is_zero(bf.minor_index)) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Identification

template <class S>
struct Identification {
  GoDiagram diagram;
  std::map<Variable, S> weights;  // a_i / c_i, standard reading labels
};

// Determines the unique Go-diagram whose component contains the point and
// recovers the network edge weights.  The shape comes from the Schubert
// cell; fills are decided in the standard reading order (a shortening
// generator forces a black stone, otherwise the box minor decides white
// against plus); each weight is then the solution of an affine-linear
// equation in one variable, obtained from the symbolic box minor with the
// earlier weights substituted.  The input must be normalized only up to
// scale: coordinates are divided by the lex-min nonzero one internally.
// Throws when the vector is inconsistent (not a Plücker vector of a point
// on the Grassmannian).
template <class S>
Identification<S> identify(const PluckerVector<S>& p) {
  static_assert(is_field_v<S>, "identify: weight recovery divides, so the scalar must be a field");
  std::vector<Subset> support = p.support();
  if (support.empty()) throw std::invalid_argument("identify: zero vector");
  Subset imin = *std::min_element(support.begin(), support.end());
  const S scale = p.coords.at(imin);
  const S one = scale / scale;
  const S zero = one - one;

  // Normalized coordinates: the canonical representative has Delta = 1 at
  // the lex-min subset, matching the weight-matrix parameterization.
  std::map<Subset, S> norm;
  for (const auto& [I, val] : p.coords)
    if (!scalar_is_zero(val)) norm.emplace(I, val / scale);
  auto coord = [&](const Subset& I) -> S {
    auto it = norm.find(I);
    return it == norm.end() ? zero : it->second;
  };

  Shape shape = subset_to_shape(std::set<int>(imin.begin(), imin.end()), p.n);
  if (shape.k != p.k)
    throw std::invalid_argument("identify: lex-min support size disagrees with k");

  // Fill boxes in the standard reading order.
  std::vector<std::vector<Fill>> fill;
  for (int r = 1; r <= shape.num_rows(); ++r)
    fill.emplace_back(shape.row_length(r), Fill::Plus);
  Permutation prefix = Permutation::identity(shape.n);
  for (const BoxRef& b : standard_reading_order(shape)) {
    int gen = box_generator(shape, b);
    if (prefix.right_descent(gen)) {
      fill[b.row - 1][b.col - 1] = Fill::Black;  // forced: taking s_b shortens
      prefix.mul_right(gen);
    } else if (scalar_is_zero(coord(minor_index_partial(shape, fill, b)))) {
      fill[b.row - 1][b.col - 1] = Fill::White;
      prefix.mul_right(gen);
    } else {
      fill[b.row - 1][b.col - 1] = Fill::Plus;
    }
  }
  GoDiagram d{shape, fill};
  if (!validate(d)) throw std::logic_error("identify: constructed filling is not distinguished");

  // Weight recovery, one affine-linear solve per plus or black box.
  Matrix<LaurentPolynomial> wsym = weight_matrix(d);
  std::map<Variable, S> weights;
  for (const BoxFactorization& bf : box_minors(d)) {
    if (bf.fill == Fill::White) continue;
    Variable var = *edge_variable(d, bf.box);
    std::vector<int> cols;
    for (int c : bf.minor_index) cols.push_back(c - 1);
    LaurentPolynomial minor = wsym.select_columns(cols).determinant();
    if (minor.degree_in(var) > 1 || minor.min_degree_in(var) < 0)
      throw std::logic_error("identify: box minor is not affine-linear in its weight");
    std::map<Variable, S> at0 = weights, at1 = weights;
    at0.emplace(var, zero);
    at1.emplace(var, one);
    S c0 = evaluate(minor, at0, one);
    S c1 = evaluate(minor, at1, one) - c0;
    if (scalar_is_zero(c1))
      throw std::invalid_argument("identify: weight equation for " + var.name() +
                                  " has vanishing leading coefficient");
    S value = (coord(bf.minor_index) - c0) / c1;
    if (bf.fill == Fill::Plus && scalar_is_zero(value))
      throw std::invalid_argument("identify: plus-box weight " + var.name() + " solves to zero");
    weights.emplace(var, value);
  }

  // Consistency: the reconstructed point must reproduce every coordinate.
  Matrix<S> reconstructed(wsym.rows(), wsym.cols(), zero);
  for (int r = 0; r < wsym.rows(); ++r)
    for (int c = 0; c < wsym.cols(); ++c)
      reconstructed.at(r, c) = evaluate(wsym.at(r, c), weights, one);
  PluckerVector<S> check = plucker_vector(reconstructed);
  for (const Subset& I : k_subsets(p.n, p.k)) {
    S want = coord(I);
    auto it = check.coords.find(I);
    S got = it == check.coords.end() ? zero : it->second;
    if (!(want == got))
      throw std::invalid_argument("identify: input is not a Plücker vector (coordinate " +
                                  subset_key(I) + " is off)");
  }
  return Identification<S>{d, weights};
}

// ---------------------------------------------------------------------------
// Matrix embedding

// The k x n matrix A(M) with the identity in the first k columns and
// A(M)[i][j+k] = (-1)^(i+1) * M[k+1-i][j] (1-based), so the minors of an
// arbitrary k x (n-k) matrix M become maximal minors of a full-rank matrix.
template <class S>
Matrix<S> embedded_matrix(const Matrix<S>& m, const S& one) {
  int k = m.rows(), w = m.cols();
  if (k < 1) throw std::invalid_argument("embedded_matrix: need at least one row");
  Matrix<S> a(k, k + w, one - one);
  for (int i = 0; i < k; ++i) a.at(i, i) = one;
  for (int i = 1; i <= k; ++i)
    for (int j = 1; j <= w; ++j) {
      S entry = m.at(k - i, j - 1);  // row k+1-i, 1-based
      if (i % 2 == 0) entry = (entry - entry) - entry;
      a.at(i - 1, k + j - 1) = entry;
    }
  for (int i = 1; i <= k; ++i) a.row_labels.push_back(i);
  return a;
}

template <class S>
PluckerVector<S> embed_matrix(const Matrix<S>& m, const S& one) {
  return plucker_vector(embedded_matrix(m, one));
}

// ---------------------------------------------------------------------------
// Point counts

// (q-1)^t * q^u where t counts plus boxes and u counts black stones.
Integer component_point_count(const GoDiagram& d, const Integer& q);

// Sum of the component counts over every Go-diagram in the k x (n-k)
// rectangle; equals the number of F_q-points of the Grassmannian.
Integer grassmannian_point_count(int k, int n, const Integer& q);

// Dense polynomial in the point-count variable q with integer coefficients.
struct QPolynomial {
  std::vector<Integer> coeffs;  // coeffs[i] multiplies q^i; no trailing zeros

  static QPolynomial zero() { return {}; }
  static QPolynomial one() { return {{Integer(1)}}; }
  static QPolynomial q() { return {{Integer(0), Integer(1)}}; }
  static QPolynomial constant(const Integer& c);

  bool is_zero() const { return coeffs.empty(); }
  int degree() const { return static_cast<int>(coeffs.size()) - 1; }  // zero -> -1

  QPolynomial operator+(const QPolynomial& o) const;
  QPolynomial operator-(const QPolynomial& o) const;
  QPolynomial operator*(const QPolynomial& o) const;
  QPolynomial pow(int e) const;
  bool operator==(const QPolynomial&) const = default;

  Integer evaluate(const Integer& q) const;
  std::string to_string() const;

  void normalize();  // drop trailing zero coefficients
};

QPolynomial grassmannian_point_count_symbolic(int k, int n);

// R-polynomial of the pair (v, w) from a reduced word for w: the sum of
// (q-1)^(number of plus positions) * q^(number of black positions) over the
// distinguished masks with product v.  Empty sum (v not below w) gives the
// zero polynomial.
QPolynomial r_polynomial(const Permutation& v, const ReducedWord& w_word);

}  // namespace deodhar
