#ifndef FIBFIELD_INTPOLY_HPP
#define FIBFIELD_INTPOLY_HPP

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace fibfield {

/// Dense polynomial over the integers with arbitrary-precision coefficients.
///
/// coeffs()[i] is the coefficient of x^i. The representation is canonical:
/// the highest stored coefficient is nonzero, and the zero polynomial is the
/// empty sequence. Values are immutable once built.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<mpz_class> coeffs);
  IntPoly(std::initializer_list<long> coeffs);

  static IntPoly constant(const mpz_class& c);
  static IntPoly monomial(const mpz_class& c, std::size_t k);

  bool is_zero() const { return coeffs_.empty(); }

  /// Throws std::domain_error for the zero polynomial.
  std::size_t degree() const;

  const std::vector<mpz_class>& coeffs() const { return coeffs_; }

  /// Coefficient of x^k; zero past the degree.
  mpz_class coeff(std::size_t k) const;

  mpz_class evaluate(const mpz_class& x) const;

  friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.coeffs_ == b.coeffs_; }

 private:
  void canonicalize();

  std::vector<mpz_class> coeffs_;
};

IntPoly add(const IntPoly& p, const IntPoly& q);
IntPoly negate(const IntPoly& p);
IntPoly multiply(const IntPoly& p, const IntPoly& q);

inline IntPoly operator+(const IntPoly& p, const IntPoly& q) { return add(p, q); }
inline IntPoly operator-(const IntPoly& p) { return negate(p); }
inline IntPoly operator-(const IntPoly& p, const IntPoly& q) { return add(p, negate(q)); }
inline IntPoly operator*(const IntPoly& p, const IntPoly& q) { return multiply(p, q); }

/// x*p + q, the Fibonacci recurrence step.
IntPoly mul_by_x_plus(const IntPoly& p, const IntPoly& q);

/// x^deg * p(1/x). Lower degree than p when p has zero constant term.
IntPoly reciprocal(const IntPoly& p);

/// Palindrome test on the coefficient sequence, optionally after reducing
/// coefficients mod `modulus` (the degree is recomputed after reduction).
bool is_self_reciprocal(const IntPoly& p, const std::optional<mpz_class>& modulus = std::nullopt);

/// Coefficients reduced into [0, m).
IntPoly reduce_mod(const IntPoly& p, const mpz_class& m);

/// "x^4 + 3x^2 + 1", "-x^3 - 2x", "0".
std::string to_string(const IntPoly& p);

/// Inverse of to_string. Also accepts an explicit '*' between coefficient
/// and x, repeated exponents (summed), and arbitrary term order.
IntPoly parse_int_poly(std::string_view text);

std::ostream& operator<<(std::ostream& os, const IntPoly& p);

}  // namespace fibfield

#endif  // FIBFIELD_INTPOLY_HPP
