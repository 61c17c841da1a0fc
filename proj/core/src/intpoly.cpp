#include "fibfield/intpoly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace fibfield {

IntPoly::IntPoly(std::vector<mpz_class> coeffs) : coeffs_(std::move(coeffs)) { canonicalize(); }

IntPoly::IntPoly(std::initializer_list<long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long c : coeffs) coeffs_.emplace_back(c);
  canonicalize();
}

IntPoly IntPoly::constant(const mpz_class& c) { return IntPoly(std::vector<mpz_class>{c}); }

IntPoly IntPoly::monomial(const mpz_class& c, std::size_t k) {
  std::vector<mpz_class> v(k + 1);
  v[k] = c;
  return IntPoly(std::move(v));
}

void IntPoly::canonicalize() {
  while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

std::size_t IntPoly::degree() const {
  if (coeffs_.empty()) throw std::domain_error("degree of zero polynomial undefined");
  return coeffs_.size() - 1;
}

mpz_class IntPoly::coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : mpz_class(0); }

mpz_class IntPoly::evaluate(const mpz_class& x) const {
  mpz_class acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

IntPoly add(const IntPoly& p, const IntPoly& q) {
  const auto& a = p.coeffs();
  const auto& b = q.coeffs();
  std::vector<mpz_class> out(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] += b[i];
  return IntPoly(std::move(out));
}

IntPoly negate(const IntPoly& p) {
  std::vector<mpz_class> out(p.coeffs());
  for (auto& c : out) c = -c;
  return IntPoly(std::move(out));
}

IntPoly multiply(const IntPoly& p, const IntPoly& q) {
  if (p.is_zero() || q.is_zero()) return {};
  const auto& a = p.coeffs();
  const auto& b = q.coeffs();
  std::vector<mpz_class> out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (sgn(a[i]) == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return IntPoly(std::move(out));
}

IntPoly mul_by_x_plus(const IntPoly& p, const IntPoly& q) {
  const auto& a = p.coeffs();
  const auto& b = q.coeffs();
  std::vector<mpz_class> out(std::max(a.size() + 1, b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) out[i + 1] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] += b[i];
  return IntPoly(std::move(out));
}

IntPoly reciprocal(const IntPoly& p) {
  if (p.is_zero()) throw std::invalid_argument("reciprocal of zero undefined");
  std::vector<mpz_class> out(p.coeffs().rbegin(), p.coeffs().rend());
  return IntPoly(std::move(out));
}

namespace {

void require_modulus(const mpz_class& m) {
  if (m < 2) throw std::invalid_argument("modulus must be at least 2");
}

}  // namespace

IntPoly reduce_mod(const IntPoly& p, const mpz_class& m) {
  require_modulus(m);
  std::vector<mpz_class> out(p.coeffs().size());
  for (std::size_t i = 0; i < out.size(); ++i) mpz_fdiv_r(out[i].get_mpz_t(), p.coeffs()[i].get_mpz_t(), m.get_mpz_t());
  return IntPoly(std::move(out));
}

bool is_self_reciprocal(const IntPoly& p, const std::optional<mpz_class>& modulus) {
  if (p.is_zero()) throw std::invalid_argument("self-reciprocal test on zero polynomial");
  if (modulus) {
    const IntPoly r = reduce_mod(p, *modulus);
    // Everything vanished mod m: nothing left to be a palindrome of.
    if (r.is_zero()) return false;
    return is_self_reciprocal(r);
  }
  const auto& c = p.coeffs();
  return std::equal(c.begin(), c.begin() + c.size() / 2, c.rbegin());
}

std::string to_string(const IntPoly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  const auto& c = p.coeffs();
  for (std::size_t k = c.size(); k-- > 0;) {
    if (sgn(c[k]) == 0) continue;
    const mpz_class mag = abs(c[k]);
    if (first) {
      if (sgn(c[k]) < 0) os << '-';
    } else {
      os << (sgn(c[k]) < 0 ? " - " : " + ");
    }
    first = false;
    if (k == 0 || mag != 1) os << mag.get_str();
    if (k >= 1) os << 'x';
    if (k >= 2) os << '^' << k;
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const IntPoly& p) { return os << to_string(p); }

namespace {

class TermParser {
 public:
  explicit TermParser(std::string_view text) : text_(text) {}

  IntPoly parse() {
    skip_ws();
    if (pos_ == text_.size()) fail("empty input");
    std::vector<mpz_class> acc;
    bool first = true;
    while (true) {
      skip_ws();
      if (pos_ == text_.size()) break;
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
        skip_ws();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      first = false;
      auto [c, k] = term();
      if (acc.size() <= k) acc.resize(k + 1);
      acc[k] += sign * c;
    }
    return IntPoly(std::move(acc));
  }

 private:
  std::pair<mpz_class, std::size_t> term() {
    mpz_class c = 1;
    bool have_digits = false;
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ > start) {
      c = mpz_class(std::string(text_.substr(start, pos_ - start)));
      have_digits = true;
    }
    skip_ws();
    if (pos_ < text_.size() && peek() == '*') {
      if (!have_digits) fail("dangling '*'");
      ++pos_;
      skip_ws();
      if (pos_ == text_.size() || peek() != 'x') fail("expected 'x' after '*'");
    }
    if (pos_ < text_.size() && peek() == 'x') {
      ++pos_;
      std::size_t k = 1;
      skip_ws();
      if (pos_ < text_.size() && peek() == '^') {
        ++pos_;
        skip_ws();
        const std::size_t es = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (pos_ == es) fail("expected exponent after '^'");
        k = std::stoull(std::string(text_.substr(es, pos_ - es)));
      }
      return {c, k};
    }
    if (!have_digits) fail("expected a term");
    return {c, 0};
  }

  char peek() const { return text_[pos_]; }
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("parse_int_poly: " + what + " at offset " + std::to_string(pos_));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

IntPoly parse_int_poly(std::string_view text) { return TermParser(text).parse(); }

}  // namespace fibfield
