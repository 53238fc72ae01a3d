// Exact scalar domains: arbitrary-precision rationals, prime fields F_p, and
// sparse Laurent polynomials with integer coefficients in the edge/chip
// variables a_i, c_i, p_i, m_i.  No floating point anywhere.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace deodhar {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

std::string to_string(const Integer& x);
std::string to_string(const Rational& x);
Rational parse_rational(const std::string& s);

bool is_prime(std::int64_t p);

// Element of F_p, p prime.  The modulus travels with the value; mixing moduli
// in one operation is a logic error and throws.
class PrimeFieldElement {
 public:
  PrimeFieldElement(std::int64_t value, std::int64_t p);

  std::int64_t value() const { return v_; }
  std::int64_t modulus() const { return p_; }
  bool is_zero() const { return v_ == 0; }

  PrimeFieldElement operator+(const PrimeFieldElement& o) const;
  PrimeFieldElement operator-(const PrimeFieldElement& o) const;
  PrimeFieldElement operator*(const PrimeFieldElement& o) const;
  PrimeFieldElement operator/(const PrimeFieldElement& o) const;
  PrimeFieldElement operator-() const;
  PrimeFieldElement inverse() const;
  bool operator==(const PrimeFieldElement& o) const = default;

 private:
  std::int64_t v_;
  std::int64_t p_;
};

std::string to_string(const PrimeFieldElement& x);
PrimeFieldElement parse_prime_field(const std::string& s);

// Variable kinds: a (plus-box edge), c (black-box edge), p (plus-box chip),
// m (black-box chip).  Index is the box's reading-order number.
struct Variable {
  char kind;  // one of 'a', 'c', 'p', 'm'
  int index;

  Variable(char k, int i);
  std::string name() const;
  auto operator<=>(const Variable&) const = default;
};

Variable parse_variable(const std::string& s);

// Monomial: sorted by variable, exponents nonzero.  Empty vector = 1.
using Monomial = std::vector<std::pair<Variable, int>>;

class LaurentPolynomial {
 public:
  LaurentPolynomial() = default;  // zero
  static LaurentPolynomial constant(Integer c);
  static LaurentPolynomial variable(const Variable& v, int exp = 1);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_monomial() const { return terms_.size() == 1; }
  // Constant term view; throws unless is_constant().
  Integer constant_value() const;
  const std::map<Monomial, Integer>& terms() const { return terms_; }

  LaurentPolynomial operator+(const LaurentPolynomial& o) const;
  LaurentPolynomial operator-(const LaurentPolynomial& o) const;
  LaurentPolynomial operator*(const LaurentPolynomial& o) const;
  LaurentPolynomial operator-() const;
  LaurentPolynomial& operator+=(const LaurentPolynomial& o);
  LaurentPolynomial& operator-=(const LaurentPolynomial& o);
  LaurentPolynomial& operator*=(const LaurentPolynomial& o);
  bool operator==(const LaurentPolynomial&) const = default;

  LaurentPolynomial pow(int e) const;  // e < 0 needs a monomial base
  // Reciprocal of a single-term polynomial with coefficient +-1.
  LaurentPolynomial monomial_inverse() const;

  // Largest/smallest exponent of v over all terms; 0 if v absent.
  int degree_in(const Variable& v) const;
  int min_degree_in(const Variable& v) const;
  std::vector<Variable> variables() const;

  // Simultaneous substitution.  Unmapped variables stay symbolic.  A variable
  // occurring with a negative exponent must map to an invertible monomial.
  LaurentPolynomial substitute(const std::map<Variable, LaurentPolynomial>& images) const;

  std::string to_string() const;

 private:
  void add_term(const Monomial& m, const Integer& c);
  std::map<Monomial, Integer> terms_;
};

LaurentPolynomial parse_laurent(const std::string& s);

inline std::string to_string(const LaurentPolynomial& x) { return x.to_string(); }

inline Rational scalar_from_integer(const Integer& c, const Rational&) {
  return Rational(c);
}
inline PrimeFieldElement scalar_from_integer(const Integer& c, const PrimeFieldElement& one) {
  Integer r = c % one.modulus();
  if (r < 0) r += one.modulus();
  return PrimeFieldElement(static_cast<std::int64_t>(r), one.modulus());
}

// Full evaluation into a field.  Every variable present must be assigned;
// negative exponents invert in the field and reject zero.
template <class S>
S evaluate(const LaurentPolynomial& poly, const std::map<Variable, S>& assignment,
           const S& one) {
  S acc = one - one;
  for (const auto& [mono, coeff] : poly.terms()) {
    S term = scalar_from_integer(coeff, one);
    for (const auto& [var, exp] : mono) {
      auto it = assignment.find(var);
      if (it == assignment.end())
        throw std::invalid_argument("evaluate: missing assignment for " + var.name());
      S base = it->second;
      int e = exp;
      if (e < 0) {
        base = one / base;  // throws on zero divisor
        e = -e;
      }
      for (int i = 0; i < e; ++i) term = term * base;
    }
    acc = acc + term;
  }
  return acc;
}

// Scalar helpers shared by the generic matrix code.
inline bool scalar_is_zero(const Rational& x) { return x == 0; }
inline bool scalar_is_zero(const Integer& x) { return x == 0; }
inline bool scalar_is_zero(const PrimeFieldElement& x) { return x.is_zero(); }
inline bool scalar_is_zero(const LaurentPolynomial& x) { return x.is_zero(); }

template <class S>
inline constexpr bool is_field_v = false;
template <>
inline constexpr bool is_field_v<Rational> = true;
template <>
inline constexpr bool is_field_v<PrimeFieldElement> = true;

inline std::string scalar_to_string(const Rational& x) { return to_string(x); }
inline std::string scalar_to_string(const Integer& x) { return to_string(x); }
inline std::string scalar_to_string(const PrimeFieldElement& x) { return to_string(x); }
inline std::string scalar_to_string(const LaurentPolynomial& x) { return x.to_string(); }

}  // namespace deodhar
