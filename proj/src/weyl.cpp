#include "deodhar/weyl.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace deodhar {

Permutation::Permutation(std::vector<int> one_line) : img_(std::move(one_line)) {
  std::vector<bool> seen(img_.size(), false);
  for (int v : img_) {
    if (v < 1 || v > static_cast<int>(img_.size()) || seen[v - 1])
      throw std::invalid_argument("Permutation: not a permutation of 1..n");
    seen[v - 1] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> img(n);
  std::iota(img.begin(), img.end(), 1);
  return Permutation(std::move(img));
}

Permutation Permutation::transposition(int n, int i) {
  if (i < 1 || i >= n) throw std::invalid_argument("transposition: subscript out of range");
  Permutation p = identity(n);
  std::swap(p.img_[i - 1], p.img_[i]);
  return p;
}

int Permutation::apply(int i) const {
  if (i < 1 || i > n()) throw std::invalid_argument("Permutation: argument out of range");
  return img_[i - 1];
}

Permutation Permutation::operator*(const Permutation& o) const {
  if (n() != o.n()) throw std::invalid_argument("Permutation: size mismatch");
  std::vector<int> img(img_.size());
  for (int i = 1; i <= n(); ++i) img[i - 1] = apply(o.apply(i));
  return Permutation(std::move(img));
}

Permutation Permutation::inverse() const {
  std::vector<int> img(img_.size());
  for (int i = 1; i <= n(); ++i) img[img_[i - 1] - 1] = i;
  return Permutation(std::move(img));
}

bool Permutation::is_identity() const {
  for (int i = 1; i <= n(); ++i)
    if (img_[i - 1] != i) return false;
  return true;
}

int Permutation::length() const {
  int inv = 0;
  for (int i = 0; i < n(); ++i)
    for (int j = i + 1; j < n(); ++j)
      if (img_[i] > img_[j]) ++inv;
  return inv;
}

void Permutation::mul_right(int i) {
  if (i < 1 || i >= n()) throw std::invalid_argument("mul_right: subscript out of range");
  std::swap(img_[i - 1], img_[i]);
}

std::set<int> Permutation::apply_to_set(const std::set<int>& s) const {
  std::set<int> out;
  for (int x : s) out.insert(apply(x));
  return out;
}

std::string Permutation::to_string() const {
  std::ostringstream out;
  out << "(";
  for (int i = 0; i < n(); ++i) out << (i ? "," : "") << img_[i];
  out << ")";
  return out.str();
}

bool bruhat_leq(const Permutation& v, const Permutation& w) {
  if (v.n() != w.n()) throw std::invalid_argument("bruhat_leq: size mismatch");
  int n = v.n();
  // Sorted-prefix criterion: sorted {v(1..i)} dominates entrywise for all i.
  std::vector<int> pv, pw;
  for (int i = 1; i <= n; ++i) {
    pv.insert(std::upper_bound(pv.begin(), pv.end(), v.apply(i)), v.apply(i));
    pw.insert(std::upper_bound(pw.begin(), pw.end(), w.apply(i)), w.apply(i));
    for (int j = 0; j < i; ++j)
      if (pv[j] > pw[j]) return false;
  }
  return true;
}

Permutation ReducedWord::product() const {
  Permutation p = Permutation::identity(n);
  for (int i : letters) p.mul_right(i);
  return p;
}

bool ReducedWord::is_reduced() const {
  return product().length() == static_cast<int>(letters.size());
}

Permutation SubexpressionMask::product() const { return prefix(taken.size()); }

Permutation SubexpressionMask::prefix(std::size_t j) const {
  if (taken.size() != word.size())
    throw std::invalid_argument("SubexpressionMask: taken/word length mismatch");
  Permutation p = Permutation::identity(word.n);
  for (std::size_t t = 0; t < j; ++t)
    if (taken[t]) p.mul_right(word.letters[t]);
  return p;
}

MaskClassification classify_mask(const SubexpressionMask& mask) {
  if (mask.taken.size() != mask.word.size())
    throw std::invalid_argument("classify_mask: taken/word length mismatch");
  MaskClassification out;
  Permutation v = Permutation::identity(mask.word.n);
  for (std::size_t j = 0; j < mask.word.size(); ++j) {
    int letter = mask.word.letters[j];
    if (!mask.taken[j]) {
      out.plus.push_back(static_cast<int>(j) + 1);
      continue;
    }
    if (v.right_descent(letter))
      out.black.push_back(static_cast<int>(j) + 1);
    else
      out.white.push_back(static_cast<int>(j) + 1);
    v.mul_right(letter);
  }
  return out;
}

bool is_distinguished(const SubexpressionMask& mask) {
  if (mask.taken.size() != mask.word.size())
    throw std::invalid_argument("is_distinguished: taken/word length mismatch");
  Permutation v = Permutation::identity(mask.word.n);
  for (std::size_t j = 0; j < mask.word.size(); ++j) {
    int letter = mask.word.letters[j];
    if (v.right_descent(letter) && !mask.taken[j]) return false;
    if (mask.taken[j]) v.mul_right(letter);
  }
  return true;
}

SubexpressionMask unique_pds(const Permutation& v, const ReducedWord& word) {
  if (v.n() != word.n) throw std::invalid_argument("unique_pds: size mismatch");
  if (!bruhat_leq(v, word.product()))
    throw std::invalid_argument("unique_pds: v is not below the word's product");
  // Greedy from the right: take a letter exactly when it shortens the
  // remaining target.  Yields the positive distinguished subexpression.
  std::vector<bool> taken(word.size(), false);
  Permutation t = v;
  for (std::size_t j = word.size(); j-- > 0;) {
    int letter = word.letters[j];
    if (t.right_descent(letter)) {
      taken[j] = true;
      t.mul_right(letter);
    }
  }
  if (!t.is_identity())
    throw std::invalid_argument("unique_pds: v is not below the word's product");
  return SubexpressionMask{word, std::move(taken)};
}

namespace {
void enumerate_rec(const ReducedWord& word, std::size_t j, Permutation& v,
                   std::vector<bool>& taken, std::vector<SubexpressionMask>& out) {
  if (j == word.size()) {
    out.push_back(SubexpressionMask{word, taken});
    return;
  }
  int letter = word.letters[j];
  if (v.right_descent(letter)) {
    // Forced: the letter must be taken (black position).
    taken[j] = true;
    v.mul_right(letter);
    enumerate_rec(word, j + 1, v, taken, out);
    v.mul_right(letter);
    taken[j] = false;
    return;
  }
  // Skip first so the output is lexicographic in the taken-vector.
  taken[j] = false;
  enumerate_rec(word, j + 1, v, taken, out);
  taken[j] = true;
  v.mul_right(letter);
  enumerate_rec(word, j + 1, v, taken, out);
  v.mul_right(letter);
  taken[j] = false;
}
}  // namespace

std::vector<SubexpressionMask> enumerate_distinguished(const ReducedWord& word) {
  std::vector<SubexpressionMask> out;
  std::vector<bool> taken(word.size(), false);
  Permutation v = Permutation::identity(word.n);
  enumerate_rec(word, 0, v, taken, out);
  return out;
}

void Shape::validate() const {
  if (k < 1 || n <= k) throw std::invalid_argument("Shape: need 1 <= k < n");
  if (num_rows() > k) throw std::invalid_argument("Shape: more than k rows");
  int prev = n - k;
  for (int len : rows) {
    if (len < 1 || len > prev)
      throw std::invalid_argument("Shape: rows must be weakly decreasing within the rectangle");
    prev = len;
  }
}

int Shape::column_height(int c) const {
  int h = 0;
  for (int len : rows)
    if (len >= c)
      ++h;
    else
      break;
  return h;
}

int Shape::box_count() const {
  int total = 0;
  for (int len : rows) total += len;
  return total;
}

std::set<int> shape_to_subset(const Shape& s) {
  s.validate();
  std::set<int> out;
  for (int r = 1; r <= s.k; ++r) out.insert(r + (s.n - s.k) - s.row_length(r));
  return out;
}

Shape subset_to_shape(const std::set<int>& subset, int n) {
  int k = static_cast<int>(subset.size());
  if (k < 1 || n <= k) throw std::invalid_argument("subset_to_shape: need 1 <= k < n");
  std::vector<int> rows;
  int r = 1;
  for (int i : subset) {
    if (i < 1 || i > n) throw std::invalid_argument("subset_to_shape: element out of range");
    int len = (n - k) + r - i;
    if (len < 0) throw std::invalid_argument("subset_to_shape: subset is not increasing enough");
    if (len > 0) {
      if (static_cast<int>(rows.size()) != r - 1)
        throw std::invalid_argument("subset_to_shape: internal row gap");
      rows.push_back(len);
    }
    ++r;
  }
  // Rows come out top to bottom; a zero row above a positive one is invalid.
  Shape shape{k, n, std::move(rows)};
  shape.validate();
  return shape;
}

int sink_label(const Shape& s, int c) {
  if (c < 1 || c > s.n - s.k) throw std::invalid_argument("sink_label: column out of range");
  return s.column_height(c) + (s.n - s.k) - c + 1;
}

int box_generator(const Shape& s, const BoxRef& b) {
  if (!s.contains(b)) throw std::invalid_argument("box_generator: box outside shape");
  return s.n - s.k + b.row - b.col;
}

ReadingOrder standard_reading_order(const Shape& s) {
  ReadingOrder order;
  for (int r = s.num_rows(); r >= 1; --r)
    for (int c = s.row_length(r); c >= 1; --c) order.push_back(BoxRef{r, c});
  return order;
}

bool is_linear_extension(const Shape& s, const ReadingOrder& order) {
  if (static_cast<int>(order.size()) != s.box_count()) return false;
  std::set<BoxRef> seen;
  for (const BoxRef& b : order) {
    if (!s.contains(b) || seen.count(b)) return false;
    BoxRef right{b.row, b.col + 1}, below{b.row + 1, b.col};
    if (s.contains(right) && !seen.count(right)) return false;
    if (s.contains(below) && !seen.count(below)) return false;
    seen.insert(b);
  }
  return true;
}

namespace {
void extensions_rec(const Shape& s, std::set<BoxRef>& placed, ReadingOrder& prefix,
                    std::vector<ReadingOrder>& out) {
  if (static_cast<int>(prefix.size()) == s.box_count()) {
    out.push_back(prefix);
    return;
  }
  for (int r = 1; r <= s.num_rows(); ++r)
    for (int c = 1; c <= s.row_length(r); ++c) {
      BoxRef b{r, c};
      if (placed.count(b)) continue;
      BoxRef right{r, c + 1}, below{r + 1, c};
      if (s.contains(right) && !placed.count(right)) continue;
      if (s.contains(below) && !placed.count(below)) continue;
      placed.insert(b);
      prefix.push_back(b);
      extensions_rec(s, placed, prefix, out);
      prefix.pop_back();
      placed.erase(b);
    }
}
}  // namespace

std::vector<ReadingOrder> linear_extensions(const Shape& s) {
  std::vector<ReadingOrder> out;
  std::set<BoxRef> placed;
  ReadingOrder prefix;
  extensions_rec(s, placed, prefix, out);
  return out;
}

ReducedWord word_from_shape(const Shape& s, const ReadingOrder& order) {
  s.validate();
  if (!is_linear_extension(s, order))
    throw std::invalid_argument("word_from_shape: order is not a linear extension of the shape");
  ReducedWord word{s.n, {}};
  word.letters.reserve(order.size());
  for (const BoxRef& b : order) word.letters.push_back(box_generator(s, b));
  return word;
}

ReducedWord word_from_shape(const Shape& s) {
  return word_from_shape(s, standard_reading_order(s));
}

Permutation shape_permutation(const Shape& s) { return word_from_shape(s).product(); }

}  // namespace deodhar
