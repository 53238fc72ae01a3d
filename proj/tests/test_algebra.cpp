#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "deodhar/algebra.hpp"
#include "deodhar/matrix.hpp"

#include <random>

using namespace deodhar;

namespace {

LaurentPolynomial lvar(char kind, int index, int exp = 1) {
  return LaurentPolynomial::variable(Variable(kind, index), exp);
}

LaurentPolynomial lint(long long c) { return LaurentPolynomial::constant(Integer(c)); }

LaurentPolynomial random_laurent(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> nterms(0, 4), coeff(-6, 6), nvars(0, 3), idx(1, 5),
      exp(-2, 3), kind_pick(0, 3);
  const char kinds[] = {'a', 'c', 'p', 'm'};
  LaurentPolynomial out;
  int t = nterms(rng);
  for (int i = 0; i < t; ++i) {
    LaurentPolynomial term = lint(coeff(rng));
    int v = nvars(rng);
    for (int j = 0; j < v; ++j) {
      int e = exp(rng);
      if (e == 0) e = 1;
      term *= lvar(kinds[kind_pick(rng)], idx(rng), e);
    }
    out += term;
  }
  return out;
}

// Independent determinant oracle: plain Gaussian elimination over F_p,
// tracking row-swap signs.  Shares no code with Matrix::determinant.
PrimeFieldElement elimination_det(Matrix<PrimeFieldElement> m) {
  int n = m.rows();
  std::int64_t p = m.at(0, 0).modulus();
  PrimeFieldElement det(1, p);
  for (int c = 0; c < n; ++c) {
    int pivot = -1;
    for (int r = c; r < n; ++r)
      if (!m.at(r, c).is_zero()) {
        pivot = r;
        break;
      }
    if (pivot < 0) return {0, p};
    if (pivot != c) {
      for (int j = 0; j < n; ++j) std::swap(m.at(pivot, j), m.at(c, j));
      det = -det;
    }
    det = det * m.at(c, c);
    PrimeFieldElement inv = m.at(c, c).inverse();
    for (int r = c + 1; r < n; ++r) {
      PrimeFieldElement f = m.at(r, c) * inv;
      for (int j = c; j < n; ++j) m.at(r, j) = m.at(r, j) - f * m.at(c, j);
    }
  }
  return det;
}

Matrix<PrimeFieldElement> random_fp_matrix(std::mt19937_64& rng, int n, std::int64_t p) {
  std::uniform_int_distribution<std::int64_t> pick(0, p - 1);
  Matrix<PrimeFieldElement> m(n, n, PrimeFieldElement(0, p));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m.at(i, j) = PrimeFieldElement(pick(rng), p);
  return m;
}

}  // namespace

TEST_CASE("rational canonical form") {
  Rational r = Rational(2) / Rational(-4);
  CHECK(to_string(r) == "-1/2");
  CHECK(numerator(r) == -1);
  CHECK(denominator(r) == 2);
  CHECK(parse_rational("-1/2") == r);
  CHECK(parse_rational("6/3") == Rational(2));
  CHECK(to_string(Rational(5)) == "5");
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("zebra"), std::invalid_argument);
}

TEST_CASE("prime field basics") {
  PrimeFieldElement three(3, 7);
  CHECK(three.inverse() == PrimeFieldElement(5, 7));
  CHECK((three * three.inverse()).value() == 1);
  CHECK((PrimeFieldElement(6, 7) + PrimeFieldElement(3, 7)).value() == 2);
  CHECK((-PrimeFieldElement(3, 7)).value() == 4);
  CHECK(PrimeFieldElement(-1, 7).value() == 6);
  CHECK_THROWS_AS(PrimeFieldElement(1, 6), std::invalid_argument);
  CHECK_THROWS_AS(PrimeFieldElement(1, 1), std::invalid_argument);
  CHECK_THROWS_AS(PrimeFieldElement(1, 7) / PrimeFieldElement(0, 7), std::domain_error);
  CHECK_THROWS_AS(PrimeFieldElement(1, 7) + PrimeFieldElement(1, 5), std::invalid_argument);
  CHECK(to_string(PrimeFieldElement(3, 7)) == "3 mod 7");
  CHECK(parse_prime_field("3 mod 7") == PrimeFieldElement(3, 7));
}

TEST_CASE("prime field inverses exhaustive over small fields") {
  for (std::int64_t p : {2, 3, 5, 7, 101}) {
    for (std::int64_t v = 1; v < p; ++v) {
      PrimeFieldElement x(v, p);
      CHECK((x * x.inverse()).value() == 1);
    }
  }
}

TEST_CASE("laurent product of conjugates") {
  LaurentPolynomial lhs = (lvar('a', 3) + lvar('c', 4)) * (lvar('a', 3) - lvar('c', 4));
  LaurentPolynomial rhs = lvar('a', 3, 2) - lvar('c', 4, 2);
  CHECK(lhs == rhs);
}

TEST_CASE("laurent canonical form drops zero terms") {
  LaurentPolynomial x = lvar('a', 1) - lvar('a', 1);
  CHECK(x.is_zero());
  CHECK(x.to_string() == "0");
  LaurentPolynomial y = lvar('p', 2) * lvar('p', 2, -1);
  CHECK(y == lint(1));
  CHECK(y.is_constant());
}

TEST_CASE("monomial inverse") {
  LaurentPolynomial m = lvar('a', 3) * lvar('c', 4, 2);
  LaurentPolynomial inv = m.monomial_inverse();
  CHECK(inv == lvar('a', 3, -1) * lvar('c', 4, -2));
  CHECK(m * inv == lint(1));
  LaurentPolynomial neg = -m;
  CHECK(neg * neg.monomial_inverse() == lint(1));
  CHECK_THROWS_AS((m + lint(1)).monomial_inverse(), std::domain_error);
  CHECK_THROWS_AS((lint(2) * m).monomial_inverse(), std::domain_error);
}

TEST_CASE("laurent evaluation into a prime field") {
  LaurentPolynomial poly = lvar('a', 3, 2) - lvar('c', 4);
  std::map<Variable, PrimeFieldElement> asg{
      {Variable('a', 3), PrimeFieldElement(2, 7)},
      {Variable('c', 4), PrimeFieldElement(3, 7)},
  };
  CHECK(evaluate(poly, asg, PrimeFieldElement(1, 7)) == PrimeFieldElement(1, 7));
  std::map<Variable, PrimeFieldElement> missing;
  CHECK_THROWS_AS(evaluate(poly, missing, PrimeFieldElement(1, 7)), std::invalid_argument);
  // Negative exponent at a zero value must fail, not wrap around.
  LaurentPolynomial inv = lvar('a', 3, -1);
  std::map<Variable, PrimeFieldElement> zero_asg{{Variable('a', 3), PrimeFieldElement(0, 7)}};
  CHECK_THROWS_AS(evaluate(inv, zero_asg, PrimeFieldElement(1, 7)), std::domain_error);
}

TEST_CASE("laurent substitution") {
  // a3 -> m5 * p2^-1 turns a polynomial into a Laurent polynomial.
  LaurentPolynomial poly = lvar('a', 3) * lvar('a', 4) + lint(1);
  std::map<Variable, LaurentPolynomial> images{
      {Variable('a', 3), lvar('m', 5) * lvar('p', 2, -1)}};
  LaurentPolynomial got = poly.substitute(images);
  LaurentPolynomial want = lvar('m', 5) * lvar('p', 2, -1) * lvar('a', 4) + lint(1);
  CHECK(got == want);
}

TEST_CASE("laurent ring axioms on random triples") {
  std::mt19937_64 rng(12345);
  for (int trial = 0; trial < 50; ++trial) {
    LaurentPolynomial x = random_laurent(rng), y = random_laurent(rng), z = random_laurent(rng);
    CHECK(x + y == y + x);
    CHECK(x * y == y * x);
    CHECK((x + y) + z == x + (y + z));
    CHECK((x * y) * z == x * (y * z));
    CHECK(x * (y + z) == x * y + x * z);
    CHECK(x - x == LaurentPolynomial());
  }
}

TEST_CASE("laurent serialization round trip") {
  std::mt19937_64 rng(777);
  for (int trial = 0; trial < 50; ++trial) {
    LaurentPolynomial x = random_laurent(rng);
    CHECK(parse_laurent(x.to_string()) == x);
  }
  CHECK(parse_laurent("0") == LaurentPolynomial());
  CHECK(parse_laurent("-1*a3^1*c4^-2 + 7") == lint(7) - lvar('a', 3) * lvar('c', 4, -2));
  CHECK(parse_laurent("a3") == lvar('a', 3));
  CHECK(parse_laurent("2*p10^3") == lint(2) * lvar('p', 10, 3));
  CHECK_THROWS_AS(parse_laurent("x1"), std::invalid_argument);
  CHECK_THROWS_AS(parse_laurent("3*"), std::invalid_argument);
}

TEST_CASE("determinant matches elimination oracle over F_7") {
  std::mt19937_64 rng(2024);
  for (int n = 1; n <= 5; ++n) {
    for (int trial = 0; trial < 20; ++trial) {
      auto m = random_fp_matrix(rng, n, 7);
      CHECK(m.determinant() == elimination_det(m));
    }
  }
}

TEST_CASE("determinant is multiplicative over F_101") {
  std::mt19937_64 rng(31337);
  for (int trial = 0; trial < 20; ++trial) {
    auto a = random_fp_matrix(rng, 4, 101);
    auto b = random_fp_matrix(rng, 4, 101);
    CHECK((a * b).determinant() == a.determinant() * b.determinant());
  }
}

TEST_CASE("symbolic determinant expands exactly") {
  // det [[a1, a2], [c1, c2]] = a1 c2 - a2 c1, division free.
  Matrix<LaurentPolynomial> m(2, 2, LaurentPolynomial());
  m.at(0, 0) = lvar('a', 1);
  m.at(0, 1) = lvar('a', 2);
  m.at(1, 0) = lvar('c', 1);
  m.at(1, 1) = lvar('c', 2);
  CHECK(m.determinant() == lvar('a', 1) * lvar('c', 2) - lvar('a', 2) * lvar('c', 1));
}

TEST_CASE("rref over the rationals") {
  Matrix<Rational> m(2, 3, Rational(0));
  m.at(0, 0) = 2;
  m.at(0, 1) = 4;
  m.at(0, 2) = 6;
  m.at(1, 0) = 1;
  m.at(1, 1) = 2;
  m.at(1, 2) = 4;
  auto [red, pivots] = rref(m);
  CHECK(pivots == std::vector<int>{0, 2});
  CHECK(red.at(0, 0) == 1);
  CHECK(red.at(0, 1) == 2);
  CHECK(red.at(0, 2) == 0);
  CHECK(red.at(1, 0) == 0);
  CHECK(red.at(1, 1) == 0);
  CHECK(red.at(1, 2) == 1);
  CHECK(rank(m) == 2);
}

TEST_CASE("rref is idempotent and normalizes invertible matrices") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 20; ++trial) {
    auto m = random_fp_matrix(rng, 4, 7);
    auto [red, pivots] = rref(m);
    auto [red2, pivots2] = rref(red);
    CHECK(red == red2);
    CHECK(pivots == pivots2);
    if (static_cast<int>(pivots.size()) == 4)
      CHECK(red == Matrix<PrimeFieldElement>::identity(4, PrimeFieldElement(1, 7)));
  }
}

TEST_CASE("labeled matrix products keep labels") {
  auto id = Matrix<Rational>::identity(2, Rational(1));
  id.row_labels = {1, 3};
  id.col_labels = {1, 2};
  auto prod = id * id;
  CHECK(prod.row_labels == std::vector<int>{1, 3});
  CHECK(prod.rows() == 2);
  CHECK(id.row_of_label(3) == 1);
  CHECK_THROWS_AS(id.row_of_label(2), std::invalid_argument);
}
