#ifndef FIBFIELD_FIBGEN_HPP
#define FIBFIELD_FIBGEN_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fibfield/intpoly.hpp"
#include "fibfield/numtheory.hpp"

namespace fibfield {

/// f_n by the three-term recurrence f_n = x f_{n-1} + f_{n-2}, f_0 = 0,
/// f_1 = 1. Negative n uses f_{-n} = (-1)^{n+1} f_n.
IntPoly fib_poly_recurrence(std::int64_t n);

/// f_n = sum_j binom(n-j-1, j) x^{n-2j-1}. Throws for negative n.
IntPoly fib_poly_binomial(std::int64_t n);

/// Coefficient of x^k in f_n: binom((n+k-1)/2, k) when n and k have
/// different parity and k <= n-1, zero otherwise.
mpz_class fib_coeff(std::uint64_t n, std::uint64_t k);

/// Dickson polynomial of the second kind,
/// E_n(x, a) = sum_i binom(n-i, i) (-a)^i x^{n-2i}.
IntPoly dickson2(std::uint64_t n, const mpz_class& a);

/// Dickson polynomial of the (k+1)-th kind,
/// D_{n,k}(x, a) = sum_i (n-ki)/(n-i) binom(n-i, i) (-a)^i x^{n-2i},
/// with D_{0,k} = 2 - k. Each term is formed as an exact integer quotient;
/// a nonzero remainder throws std::logic_error.
IntPoly dickson_kind(std::uint64_t n, std::uint64_t k, const mpz_class& a);

/// Expands z / (1 - x z - z^2) as a truncated power series in z (geometric
/// series in x z + z^2, multiplied out with IntPoly coefficients) and checks
/// coefficient m against f_m for every m < n_terms. With a modulus both sides
/// are compared after coefficient reduction.
bool generating_series_check(std::size_t n_terms, const std::optional<mpz_class>& modulus = std::nullopt);

struct ScanHit {
  std::uint64_t n = 0;
  std::uint64_t degree = 0;
  Factorization factorization;
  /// Degree-0 palindrome (only n = 1).
  bool trivial = false;
  /// Known family the hit belongs to, e.g. "41*3^l" or "{3,5}".
  std::optional<std::string> family;
  /// Nontrivial hit not covered by any known family.
  bool flagged = false;

  friend bool operator==(const ScanHit&, const ScanHit&) = default;
};

/// Self-reciprocal members f_1..f_{n_max}, over Z (p = 0) or mod p.
struct ScanReport {
  std::uint64_t p = 0;
  std::uint64_t n_max = 0;
  std::vector<std::uint64_t> hits;
  std::vector<ScanHit> factored_hits;

  std::vector<std::uint64_t> nontrivial_hits() const;
  std::vector<std::uint64_t> flagged_hits() const;

  friend bool operator==(const ScanReport&, const ScanReport&) = default;
};

struct ScanOptions {
  /// 1 runs the sequential recurrence. More than 1 partitions the n-range
  /// across workers, each building f_n independently from binomial sums.
  unsigned threads = 1;
};

/// Throws std::invalid_argument if p is neither 0 nor prime, or n_max == 0.
ScanReport selfreciprocal_scan(std::uint64_t p, std::uint64_t n_max, const ScanOptions& options = {});

/// Family label for n if n is a listed sufficient case for f_n to be
/// self-reciprocal at characteristic p (p = 0 for Z): n = base * p^l for the
/// listed bases when p is 3 or 5, n in {3, 5} otherwise.
std::optional<std::string> known_family(std::uint64_t p, std::uint64_t n);

}  // namespace fibfield

#endif  // FIBFIELD_FIBGEN_HPP
