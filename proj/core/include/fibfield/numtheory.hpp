#ifndef FIBFIELD_NUMTHEORY_HPP
#define FIBFIELD_NUMTHEORY_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace fibfield {

/// Prime-power factorization as (prime, exponent) pairs, primes ascending.
using Factorization = std::vector<std::pair<std::uint64_t, unsigned>>;

bool is_prime(std::uint64_t n);

/// Trial division. n = 0 and n = 1 give an empty factorization.
Factorization factorize(std::uint64_t n);

/// Renders "3^2*5" style; "1" for the empty factorization.
std::string to_string(const Factorization& f);

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m);

/// Exact integer power; throws std::overflow_error past 2^64.
std::uint64_t checked_pow(std::uint64_t base, unsigned exp);

/// Binomial coefficients mod a prime p via Lucas' theorem.
///
/// Factorial tables cover digits up to min(p - 1, max_n), so lookups are
/// O(log_p n) after construction.
class BinomialModP {
 public:
  BinomialModP(std::uint32_t p, std::uint64_t max_n);

  std::uint32_t operator()(std::uint64_t n, std::uint64_t k) const;
  std::uint32_t prime() const { return p_; }

 private:
  std::uint32_t small(std::uint64_t n, std::uint64_t k) const;

  std::uint32_t p_;
  std::vector<std::uint32_t> fact_;
  std::vector<std::uint32_t> inv_fact_;
};

}  // namespace fibfield

#endif  // FIBFIELD_NUMTHEORY_HPP
