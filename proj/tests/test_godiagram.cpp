#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "deodhar/godiagram.hpp"

#include <set>

using namespace deodhar;

namespace {

// Independent Le-filling oracle: enumerate {o,+} fillings directly and apply
// the forbidden-pattern rule, without touching mask machinery.
std::set<std::string> le_fillings_by_brute_force(int k, int n) {
  std::set<std::string> out;
  for (const Shape& shape : all_shapes(k, n)) {
    int boxes = shape.box_count();
    for (int bits = 0; bits < (1 << boxes); ++bits) {
      std::vector<std::vector<char>> grid(shape.num_rows());
      int pos = 0;
      for (int r = 1; r <= shape.num_rows(); ++r)
        for (int c = 1; c <= shape.row_length(r); ++c)
          grid[r - 1].push_back((bits >> pos++) & 1 ? '+' : 'o');
      bool ok = true;
      for (int r = 1; r <= shape.num_rows() && ok; ++r)
        for (int c = 1; c <= shape.row_length(r) && ok; ++c) {
          if (grid[r - 1][c - 1] != 'o') continue;
          bool above = false, left = false;
          for (int rr = 1; rr < r; ++rr)
            if (shape.row_length(rr) >= c && grid[rr - 1][c - 1] == '+') above = true;
          for (int cc = 1; cc < c; ++cc)
            if (grid[r - 1][cc - 1] == '+') left = true;
          if (above && left) ok = false;
        }
      if (!ok) continue;
      std::string key = std::to_string(shape.rows.size());
      for (int r = 0; r < shape.num_rows(); ++r) {
        key += '/';
        for (char ch : grid[r]) key += ch;
      }
      out.insert(key);
    }
  }
  return out;
}

std::string filling_key(const GoDiagram& d) {
  std::string key = std::to_string(d.shape.rows.size());
  for (const auto& row : d.fill) {
    key += '/';
    for (Fill f : row) key += static_cast<char>(f);
  }
  return key;
}

}  // namespace

TEST_CASE("text and json round trips") {
  GoDiagram d2 = diagram_from_text("*+/+o", 2, 4);
  CHECK(d2.shape.rows == std::vector<int>{2, 2});
  CHECK(d2.at(BoxRef{1, 1}) == Fill::Black);
  CHECK(d2.at(BoxRef{1, 2}) == Fill::Plus);
  CHECK(d2.at(BoxRef{2, 1}) == Fill::Plus);
  CHECK(d2.at(BoxRef{2, 2}) == Fill::White);
  CHECK(to_text(d2, true) == "*+/+o");
  CHECK(to_text(d2) == "*+\n+o");
  CHECK(diagram_from_text(to_text(d2), 2, 4) == d2);

  std::string js = to_json_string(d2);
  CHECK(diagram_from_json_string(js) == d2);
  GoDiagram parsed = diagram_from_json_string(
      R"({"k":2,"n":4,"shape":[2,2],"fill":[["*","+"],["+","o"]]})");
  CHECK(parsed == d2);

  CHECK_THROWS_AS(diagram_from_text("*x", 2, 4), std::invalid_argument);
  CHECK_THROWS_AS(diagram_from_text("++/+o", 2, 4), std::invalid_argument);
}

TEST_CASE("mask round trip and classification colors") {
  Shape s22{2, 4, {2, 2}};
  for (const GoDiagram& d : enumerate_diagrams(s22)) {
    CHECK(validate(d));
    SubexpressionMask mask = mask_from_diagram(d);
    CHECK(is_distinguished(mask));
    CHECK(diagram_from_mask(s22, mask) == d);
  }
  // The D_2 filling comes from taken positions {1,4}.
  ReducedWord word = word_from_shape(s22);
  SubexpressionMask mask{word, {true, false, false, true}};
  CHECK(diagram_from_mask(s22, mask) == diagram_from_text("*+/+o", 2, 4));
}

TEST_CASE("validity is independent of the reading order") {
  for (const Shape& shape : all_shapes(2, 5)) {
    if (shape.box_count() == 0) continue;
    auto orders = linear_extensions(shape);
    for (const GoDiagram& d : enumerate_diagrams(shape)) {
      for (const auto& order : orders) {
        SubexpressionMask mask = mask_from_diagram(d, order);
        CHECK(is_distinguished(mask));
        CHECK(diagram_from_mask(shape, mask, order) == d);
      }
    }
  }
}

TEST_CASE("reading labels and box variables") {
  GoDiagram fig = diagram_from_text("++++/+*+/*+o/+o", 4, 8);
  CHECK(validate(fig));
  CHECK(reading_label(fig.shape, BoxRef{4, 2}) == 1);
  CHECK(reading_label(fig.shape, BoxRef{3, 1}) == 5);
  CHECK(reading_label(fig.shape, BoxRef{1, 1}) == 12);
  CHECK(edge_variable(fig, BoxRef{3, 1}) == Variable('c', 5));
  CHECK(edge_variable(fig, BoxRef{2, 2}) == Variable('c', 7));
  CHECK(edge_variable(fig, BoxRef{4, 1}) == Variable('a', 2));
  CHECK(!edge_variable(fig, BoxRef{4, 2}).has_value());
  CHECK(chip_variable(fig, BoxRef{3, 1}) == Variable('m', 5));
  CHECK(chip_variable(fig, BoxRef{1, 1}) == Variable('p', 12));
  DiagramStats st = stats(fig);
  CHECK(st.white == 2);
  CHECK(st.black == 2);
  CHECK(st.plus == 8);
}

TEST_CASE("labeled display grids") {
  GoDiagram pds = diagram_from_text("+oo+/+o+/o", 3, 7);
  auto labels = labeled(pds);
  CHECK(labels[0] == std::vector<std::string>{"p8", "1", "1", "p5"});
  CHECK(labels[1] == std::vector<std::string>{"p4", "1", "p2"});
  CHECK(labels[2] == std::vector<std::string>{"1"});

  GoDiagram with_black = diagram_from_text("*++o/+oo/+", 3, 7);
  auto labels2 = labeled(with_black);
  CHECK(labels2[0][0] == "-1,m8");
  CHECK(labels2[0][1] == "p7");
}

TEST_CASE("enumeration is canonical and complete for Gr(2,4)") {
  auto all = enumerate_diagrams(2, 4);
  CHECK(all.size() == 34);
  for (const GoDiagram& d : all) CHECK(validate(d));
  // Shapes ordered by I(shape) lex: the full square comes first, the empty
  // shape last; within a shape masks are taken-vector lex, so all-plus leads.
  CHECK(all.front() == diagram_from_text("++/++", 2, 4));
  CHECK(all.back().shape.rows.empty());
  std::set<std::string> seen;
  for (const GoDiagram& d : all) CHECK(seen.insert(to_json_string(d)).second);
  // Shape block sizes: 15 + 8 + 4 + 4 + 2 + 1.
  std::vector<int> block_sizes;
  for (const Shape& shape : all_shapes(2, 4))
    block_sizes.push_back(static_cast<int>(enumerate_diagrams(shape).size()));
  CHECK(block_sizes == std::vector<int>{15, 8, 4, 4, 2, 1});
}

TEST_CASE("le diagrams match the brute-force filling oracle") {
  auto brute = le_fillings_by_brute_force(2, 4);
  CHECK(brute.size() == 33);
  std::set<std::string> via_diagrams;
  for (const GoDiagram& d : enumerate_diagrams(2, 4)) {
    if (stats(d).black != 0) {
      CHECK(!is_le_diagram(d));
      continue;
    }
    CHECK(is_le_diagram(d));
    via_diagrams.insert(filling_key(d));
  }
  CHECK(via_diagrams == brute);
}

TEST_CASE("stone-only fillings are go-diagrams exactly when le") {
  // Over {o,+} fillings the distinguished condition and the forbidden
  // pattern coincide; black stones appear only beyond le diagrams.
  for (const Shape& shape : all_shapes(2, 4)) {
    int boxes = shape.box_count();
    for (int bits = 0; bits < (1 << boxes); ++bits) {
      GoDiagram d{shape, {}};
      d.fill.resize(shape.num_rows());
      int pos = 0;
      for (int r = 1; r <= shape.num_rows(); ++r)
        for (int c = 1; c <= shape.row_length(r); ++c)
          d.fill[r - 1].push_back((bits >> pos++) & 1 ? Fill::Plus : Fill::White);
      CHECK(validate(d) == is_le_diagram(d));
    }
  }
}
