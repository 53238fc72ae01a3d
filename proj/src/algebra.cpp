#include "deodhar/algebra.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace deodhar {

std::string to_string(const Integer& x) { return x.str(); }

std::string to_string(const Rational& x) {
  if (denominator(x) == 1) return numerator(x).str();
  return numerator(x).str() + "/" + denominator(x).str();
}

Rational parse_rational(const std::string& s) {
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rational(Integer(s));
    Integer num(s.substr(0, slash));
    Integer den(s.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator");
    return Rational(num) / Rational(den);
  } catch (const std::runtime_error&) {
    throw std::invalid_argument("parse_rational: bad input '" + s + "'");
  }
}

bool is_prime(std::int64_t p) {
  if (p < 2) return false;
  if (p % 2 == 0) return p == 2;
  for (std::int64_t d = 3; d <= p / d; d += 2)
    if (p % d == 0) return false;
  return true;
}

PrimeFieldElement::PrimeFieldElement(std::int64_t value, std::int64_t p) : p_(p) {
  if (!is_prime(p)) throw std::invalid_argument("PrimeFieldElement: modulus must be prime");
  v_ = value % p;
  if (v_ < 0) v_ += p;
}

namespace {
void check_same_modulus(const PrimeFieldElement& a, const PrimeFieldElement& b) {
  if (a.modulus() != b.modulus())
    throw std::invalid_argument("PrimeFieldElement: mixed moduli");
}
}  // namespace

PrimeFieldElement PrimeFieldElement::operator+(const PrimeFieldElement& o) const {
  check_same_modulus(*this, o);
  return {v_ + o.v_, p_};
}

PrimeFieldElement PrimeFieldElement::operator-(const PrimeFieldElement& o) const {
  check_same_modulus(*this, o);
  return {v_ - o.v_, p_};
}

PrimeFieldElement PrimeFieldElement::operator*(const PrimeFieldElement& o) const {
  check_same_modulus(*this, o);
  // p fits in 32 bits for every use here; the product fits in int64.
  if (p_ > (1LL << 31)) {
    Integer prod = Integer(v_) * o.v_ % p_;
    return {static_cast<std::int64_t>(prod), p_};
  }
  return {v_ * o.v_ % p_, p_};
}

PrimeFieldElement PrimeFieldElement::operator/(const PrimeFieldElement& o) const {
  return *this * o.inverse();
}

PrimeFieldElement PrimeFieldElement::operator-() const { return {-v_, p_}; }

PrimeFieldElement PrimeFieldElement::inverse() const {
  if (v_ == 0) throw std::domain_error("PrimeFieldElement: inverse of zero");
  // Extended Euclid on (v, p).
  std::int64_t a = v_, b = p_, x0 = 1, x1 = 0;
  while (b != 0) {
    std::int64_t q = a / b;
    std::int64_t t = a - q * b;
    a = b;
    b = t;
    t = x0 - q * x1;
    x0 = x1;
    x1 = t;
  }
  return {x0, p_};
}

std::string to_string(const PrimeFieldElement& x) {
  return std::to_string(x.value()) + " mod " + std::to_string(x.modulus());
}

PrimeFieldElement parse_prime_field(const std::string& s) {
  auto pos = s.find(" mod ");
  if (pos == std::string::npos)
    throw std::invalid_argument("parse_prime_field: expected 'v mod p', got '" + s + "'");
  return {std::stoll(s.substr(0, pos)), std::stoll(s.substr(pos + 5))};
}

Variable::Variable(char k, int i) : kind(k), index(i) {
  if (k != 'a' && k != 'c' && k != 'p' && k != 'm')
    throw std::invalid_argument("Variable: kind must be one of a, c, p, m");
  if (i < 1) throw std::invalid_argument("Variable: index must be positive");
}

std::string Variable::name() const { return std::string(1, kind) + std::to_string(index); }

Variable parse_variable(const std::string& s) {
  if (s.size() < 2) throw std::invalid_argument("parse_variable: bad input '" + s + "'");
  for (std::size_t i = 1; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i])))
      throw std::invalid_argument("parse_variable: bad input '" + s + "'");
  return Variable(s[0], std::stoi(s.substr(1)));
}

LaurentPolynomial LaurentPolynomial::constant(Integer c) {
  LaurentPolynomial r;
  if (c != 0) r.terms_.emplace(Monomial{}, std::move(c));
  return r;
}

LaurentPolynomial LaurentPolynomial::variable(const Variable& v, int exp) {
  LaurentPolynomial r;
  if (exp != 0)
    r.terms_.emplace(Monomial{{v, exp}}, Integer(1));
  else
    r.terms_.emplace(Monomial{}, Integer(1));
  return r;
}

bool LaurentPolynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
}

Integer LaurentPolynomial::constant_value() const {
  if (terms_.empty()) return 0;
  if (!is_constant()) throw std::domain_error("constant_value: polynomial is not constant");
  return terms_.begin()->second;
}

void LaurentPolynomial::add_term(const Monomial& m, const Integer& c) {
  if (c == 0) return;
  auto [it, fresh] = terms_.emplace(m, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPolynomial& LaurentPolynomial::operator+=(const LaurentPolynomial& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

LaurentPolynomial& LaurentPolynomial::operator-=(const LaurentPolynomial& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

namespace {
Monomial mono_mul(const Monomial& x, const Monomial& y) {
  Monomial out;
  out.reserve(x.size() + y.size());
  std::size_t i = 0, j = 0;
  while (i < x.size() || j < y.size()) {
    if (j == y.size() || (i < x.size() && x[i].first < y[j].first)) {
      out.push_back(x[i++]);
    } else if (i == x.size() || y[j].first < x[i].first) {
      out.push_back(y[j++]);
    } else {
      int e = x[i].second + y[j].second;
      if (e != 0) out.emplace_back(x[i].first, e);
      ++i;
      ++j;
    }
  }
  return out;
}
}  // namespace

LaurentPolynomial LaurentPolynomial::operator*(const LaurentPolynomial& o) const {
  LaurentPolynomial r;
  for (const auto& [mx, cx] : terms_)
    for (const auto& [my, cy] : o.terms_) r.add_term(mono_mul(mx, my), cx * cy);
  return r;
}

LaurentPolynomial& LaurentPolynomial::operator*=(const LaurentPolynomial& o) {
  *this = *this * o;
  return *this;
}

LaurentPolynomial LaurentPolynomial::operator+(const LaurentPolynomial& o) const {
  LaurentPolynomial r = *this;
  r += o;
  return r;
}

LaurentPolynomial LaurentPolynomial::operator-(const LaurentPolynomial& o) const {
  LaurentPolynomial r = *this;
  r -= o;
  return r;
}

LaurentPolynomial LaurentPolynomial::operator-() const {
  LaurentPolynomial r;
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
  return r;
}

LaurentPolynomial LaurentPolynomial::pow(int e) const {
  if (e < 0) return monomial_inverse().pow(-e);
  LaurentPolynomial r = constant(1);
  for (int i = 0; i < e; ++i) r *= *this;
  return r;
}

LaurentPolynomial LaurentPolynomial::monomial_inverse() const {
  if (terms_.size() != 1)
    throw std::domain_error("monomial_inverse: not a monomial");
  const auto& [m, c] = *terms_.begin();
  if (c != 1 && c != -1)
    throw std::domain_error("monomial_inverse: coefficient is not a unit");
  Monomial inv = m;
  for (auto& [v, e] : inv) e = -e;
  LaurentPolynomial r;
  r.terms_.emplace(std::move(inv), c);
  return r;
}

int LaurentPolynomial::degree_in(const Variable& v) const {
  int best = 0;
  for (const auto& [m, c] : terms_)
    for (const auto& [var, e] : m)
      if (var == v) best = std::max(best, e);
  return best;
}

int LaurentPolynomial::min_degree_in(const Variable& v) const {
  int best = 0;
  for (const auto& [m, c] : terms_)
    for (const auto& [var, e] : m)
      if (var == v) best = std::min(best, e);
  return best;
}

std::vector<Variable> LaurentPolynomial::variables() const {
  std::vector<Variable> out;
  for (const auto& [m, c] : terms_)
    for (const auto& [v, e] : m)
      if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
  std::sort(out.begin(), out.end());
  return out;
}

LaurentPolynomial LaurentPolynomial::substitute(
    const std::map<Variable, LaurentPolynomial>& images) const {
  LaurentPolynomial acc;
  for (const auto& [m, c] : terms_) {
    LaurentPolynomial term = constant(c);
    for (const auto& [v, e] : m) {
      auto it = images.find(v);
      if (it == images.end()) {
        term *= variable(v, e);
      } else {
        term *= it->second.pow(e);
      }
    }
    acc += term;
  }
  return acc;
}

std::string LaurentPolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (!first) out << " + ";
    first = false;
    out << c.str();
    for (const auto& [v, e] : m) out << "*" << v.name() << "^" << e;
  }
  return out.str();
}

namespace {
// Grammar: poly := term (" + " term)*, term := coeff ("*" var "^" exp)* with
// coeff optional when the term has variables, exponent optional (default 1).
// Whitespace is free.  "0" is the zero polynomial.
struct LaurentParser {
  const std::string& s;
  std::size_t i = 0;

  explicit LaurentParser(const std::string& str) : s(str) {}

  void skip_ws() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }

  bool eat(char c) {
    skip_ws();
    if (i < s.size() && s[i] == c) {
      ++i;
      return true;
    }
    return false;
  }

  Integer parse_int() {
    skip_ws();
    std::size_t start = i;
    if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i == start || (i == start + 1 && !std::isdigit(static_cast<unsigned char>(s[start]))))
      throw std::invalid_argument("parse_laurent: expected integer at offset " +
                                  std::to_string(start) + " in '" + s + "'");
    return Integer(s.substr(start, i - start));
  }

  LaurentPolynomial parse_term() {
    skip_ws();
    Integer coeff = 1;
    bool have_coeff = false;
    if (i < s.size() && (std::isdigit(static_cast<unsigned char>(s[i])) || s[i] == '-' || s[i] == '+')) {
      coeff = parse_int();
      have_coeff = true;
    }
    Monomial mono;
    bool need_separator = have_coeff;
    while (true) {
      std::size_t save = i;
      if (need_separator && !eat('*')) {
        i = save;
        break;
      }
      skip_ws();
      if (i >= s.size() || (s[i] != 'a' && s[i] != 'c' && s[i] != 'p' && s[i] != 'm')) {
        if (need_separator)
          throw std::invalid_argument("parse_laurent: expected variable in '" + s + "'");
        throw std::invalid_argument("parse_laurent: expected term in '" + s + "'");
      }
      char kind = s[i++];
      std::size_t start = i;
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
      if (i == start) throw std::invalid_argument("parse_laurent: bad variable in '" + s + "'");
      int index = std::stoi(s.substr(start, i - start));
      int exp = 1;
      if (eat('^')) exp = static_cast<int>(parse_int());
      mono.emplace_back(Variable(kind, index), exp);
      need_separator = true;
    }
    std::sort(mono.begin(), mono.end());
    Monomial clean;
    for (std::size_t k = 0; k < mono.size(); ++k) {
      if (!clean.empty() && clean.back().first == mono[k].first)
        clean.back().second += mono[k].second;
      else
        clean.push_back(mono[k]);
    }
    std::erase_if(clean, [](const auto& ve) { return ve.second == 0; });
    LaurentPolynomial term = LaurentPolynomial::constant(coeff);
    for (const auto& [v, e] : clean) term *= LaurentPolynomial::variable(v, e);
    return term;
  }

  LaurentPolynomial parse() {
    LaurentPolynomial acc = parse_term();
    while (true) {
      skip_ws();
      if (i >= s.size()) break;
      if (eat('+')) {
        acc += parse_term();
      } else {
        throw std::invalid_argument("parse_laurent: trailing input at offset " +
                                    std::to_string(i) + " in '" + s + "'");
      }
    }
    return acc;
  }
};
}  // namespace

LaurentPolynomial parse_laurent(const std::string& s) {
  LaurentParser parser(s);
  return parser.parse();
}

}  // namespace deodhar
