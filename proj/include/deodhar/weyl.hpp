// Symmetric group combinatorics: permutations in one-line notation, reduced
// words, Bruhat order, distinguished subexpression masks, and the partition
// shapes whose box fillings index them.
#pragma once

#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace deodhar {

// Permutation of {1..n}, one-line notation, composition (u*v)(x) = u(v(x)).
class Permutation {
 public:
  explicit Permutation(std::vector<int> one_line);
  static Permutation identity(int n);
  static Permutation transposition(int n, int i);  // adjacent s_i, 1 <= i < n

  int n() const { return static_cast<int>(img_.size()); }
  int apply(int i) const;  // 1-based
  const std::vector<int>& one_line() const { return img_; }

  Permutation operator*(const Permutation& o) const;
  Permutation inverse() const;
  bool operator==(const Permutation&) const = default;
  bool operator<(const Permutation& o) const { return img_ < o.img_; }

  bool is_identity() const;
  int length() const;  // inversion count
  // Right descent: multiplying by s_i on the right shortens.
  bool right_descent(int i) const { return apply(i) > apply(i + 1); }
  // Right multiplication by s_i in place, O(1).
  void mul_right(int i);

  std::set<int> apply_to_set(const std::set<int>& s) const;
  std::string to_string() const;

 private:
  std::vector<int> img_;
};

// v <= w in Bruhat order (sorted-prefix criterion, exact for S_n).
bool bruhat_leq(const Permutation& v, const Permutation& w);

struct ReducedWord {
  int n;                    // ambient S_n
  std::vector<int> letters; // generator subscripts, 1-based

  Permutation product() const;
  bool is_reduced() const;
  std::size_t size() const { return letters.size(); }
};

// Subexpression mask over a reduced word: taken[j] means letter j is used.
struct SubexpressionMask {
  ReducedWord word;
  std::vector<bool> taken;

  Permutation product() const;
  // Prefix product of the first j letters (j = 0..size).
  Permutation prefix(std::size_t j) const;
};

// Positions (1-based) partitioned by how the prefix product moves:
// white = taken and lengthens, black = taken and shortens, plus = skipped.
struct MaskClassification {
  std::vector<int> white;
  std::vector<int> plus;
  std::vector<int> black;
};

MaskClassification classify_mask(const SubexpressionMask& mask);

// Distinguished: whenever the next letter would shorten the prefix product,
// the mask must take it.
bool is_distinguished(const SubexpressionMask& mask);

// The unique positive distinguished subexpression for v inside word.
// Throws if v is not <= product(word).
SubexpressionMask unique_pds(const Permutation& v, const ReducedWord& word);

// All distinguished masks, ordered lexicographically by taken-vector
// (false < true, leftmost position most significant).
std::vector<SubexpressionMask> enumerate_distinguished(const ReducedWord& word);

// Box of a partition shape, 1-based, row 1 on top, col 1 at the left.
struct BoxRef {
  int row;
  int col;
  bool operator==(const BoxRef&) const = default;
  bool operator<(const BoxRef& o) const {
    return row != o.row ? row < o.row : col < o.col;
  }
};

// Partition inside the k x (n-k) rectangle; rows stores the positive parts.
struct Shape {
  int k;
  int n;
  std::vector<int> rows;

  void validate() const;
  int num_rows() const { return static_cast<int>(rows.size()); }
  int row_length(int r) const {  // r = 1..k
    return r <= num_rows() ? rows[r - 1] : 0;
  }
  int column_height(int c) const;  // number of rows with length >= c
  int box_count() const;
  bool contains(const BoxRef& b) const {
    return b.row >= 1 && b.row <= num_rows() && b.col >= 1 && b.col <= rows[b.row - 1];
  }
  bool operator==(const Shape&) const = default;
};

// Vertical-step labels of the shape's southeast border path: the k-subset
// I(shape) of {1..n}.  Row r's east boundary vertex is labeled i_r.
std::set<int> shape_to_subset(const Shape& s);
Shape subset_to_shape(const std::set<int>& subset, int n);

// Boundary label of the sink at the bottom of column c.
int sink_label(const Shape& s, int c);

// Simple-generator subscript attached to a box: n - k + row - col.
int box_generator(const Shape& s, const BoxRef& b);

using ReadingOrder = std::vector<BoxRef>;

// Bottom row right to left, then the row above, ending at the top row.
ReadingOrder standard_reading_order(const Shape& s);

// True when order lists every box exactly once and each box appears after
// the boxes immediately right of and below it.
bool is_linear_extension(const Shape& s, const ReadingOrder& order);

// All linear extensions (small shapes only; used by the property suites).
std::vector<ReadingOrder> linear_extensions(const Shape& s);

// Reduced word read off the shape along the given order.
ReducedWord word_from_shape(const Shape& s, const ReadingOrder& order);
ReducedWord word_from_shape(const Shape& s);

// The Grassmannian permutation w of the shape: product of the standard word;
// satisfies w{n-k+1..n} = I(shape).
Permutation shape_permutation(const Shape& s);

}  // namespace deodhar
