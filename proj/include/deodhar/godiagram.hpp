// Go-diagrams: fillings of a partition shape with pluses, white stones, and
// black stones encoding distinguished subexpression masks.  Text format uses
// '+', 'o', '*' with rows top to bottom ('/' separates rows inline).
#pragma once

#include "deodhar/algebra.hpp"
#include "deodhar/weyl.hpp"

#include <optional>
#include <string>
#include <vector>

namespace deodhar {

enum class Fill : char { Plus = '+', White = 'o', Black = '*' };

struct GoDiagram {
  Shape shape;
  std::vector<std::vector<Fill>> fill;  // fill[r-1][c-1], rows top to bottom

  Fill at(const BoxRef& b) const;
  bool operator==(const GoDiagram&) const = default;
};

// Counts of each fill kind; the component has (q-1)^plus * q^black points.
struct DiagramStats {
  int white = 0;
  int plus = 0;
  int black = 0;
};

DiagramStats stats(const GoDiagram& d);

// Mask positions follow the given reading order: white/black positions are
// taken, plus positions are skipped.
GoDiagram diagram_from_mask(const Shape& shape, const SubexpressionMask& mask,
                            const ReadingOrder& order);
GoDiagram diagram_from_mask(const Shape& shape, const SubexpressionMask& mask);
SubexpressionMask mask_from_diagram(const GoDiagram& d, const ReadingOrder& order);
SubexpressionMask mask_from_diagram(const GoDiagram& d);

// A diagram is valid when its mask is distinguished.  Validity does not
// depend on the choice of linear extension; the standard order is used.
bool validate(const GoDiagram& d);

// No black stones, and no white stone having a plus above it (same column)
// together with a plus to its left (same row).
bool is_le_diagram(const GoDiagram& d);

// 1-based position of the box in the standard reading order.
int reading_label(const Shape& shape, const BoxRef& b);

// Network edge variable of a box: a_i for plus, c_i for black (standard
// reading label i); white boxes carry no variable.
std::optional<Variable> edge_variable(const GoDiagram& d, const BoxRef& b);
// Chip variable: p_i for plus, m_i for black.
std::optional<Variable> chip_variable(const GoDiagram& d, const BoxRef& b);

// Display labels: white "1", plus "p<i>", black "-1,m<i>".
std::vector<std::vector<std::string>> labeled(const GoDiagram& d);

// All shapes inside the k x (n-k) rectangle, ordered by I(shape) lex.
std::vector<Shape> all_shapes(int k, int n);

// All Go-diagrams of one shape, in mask taken-vector lex order.
std::vector<GoDiagram> enumerate_diagrams(const Shape& shape);
// All Go-diagrams of Gr(k,n): shapes by I(shape) lex, masks lex within.
std::vector<GoDiagram> enumerate_diagrams(int k, int n);

std::string to_text(const GoDiagram& d, bool inline_form = false);
GoDiagram diagram_from_text(const std::string& text, int k, int n);

std::string to_json_string(const GoDiagram& d);
GoDiagram diagram_from_json_string(const std::string& json_text);

}  // namespace deodhar
