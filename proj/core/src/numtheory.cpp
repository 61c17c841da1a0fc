#include "fibfield/numtheory.hpp"

#include <algorithm>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace fibfield {

namespace {
__extension__ typedef unsigned __int128 u128;
}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d <= n / d; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

Factorization factorize(std::uint64_t n) {
  Factorization out;
  if (n < 2) return out;
  for (std::uint64_t d = 2; d <= n / d; d += (d == 2 ? 1 : 2)) {
    unsigned k = 0;
    while (n % d == 0) {
      n /= d;
      ++k;
    }
    if (k > 0) out.emplace_back(d, k);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

std::string to_string(const Factorization& f) {
  if (f.empty()) return "1";
  std::ostringstream os;
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (i) os << '*';
    os << f[i].first;
    if (f[i].second > 1) os << '^' << f[i].second;
  }
  return os.str();
}

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  base %= m;
  while (exp) {
    if (exp & 1) r = mul_mod(r, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return r;
}

std::uint64_t checked_pow(std::uint64_t base, unsigned exp) {
  std::uint64_t r = 1;
  for (unsigned i = 0; i < exp; ++i) {
    if (base != 0 && r > std::numeric_limits<std::uint64_t>::max() / base) {
      throw std::overflow_error("checked_pow: result exceeds 64 bits");
    }
    r *= base;
  }
  return r;
}

BinomialModP::BinomialModP(std::uint32_t p, std::uint64_t max_n) : p_(p) {
  if (!is_prime(p)) throw std::invalid_argument("BinomialModP: modulus must be prime");
  const std::uint64_t size = std::min<std::uint64_t>(p, max_n + 1);
  fact_.resize(size);
  inv_fact_.resize(size);
  fact_[0] = 1 % p;
  for (std::uint64_t i = 1; i < size; ++i) {
    fact_[i] = static_cast<std::uint32_t>(mul_mod(fact_[i - 1], i, p));
  }
  inv_fact_[size - 1] = static_cast<std::uint32_t>(pow_mod(fact_[size - 1], p - 2, p));
  for (std::uint64_t i = size - 1; i > 0; --i) {
    inv_fact_[i - 1] = static_cast<std::uint32_t>(mul_mod(inv_fact_[i], i, p));
  }
}

std::uint32_t BinomialModP::small(std::uint64_t n, std::uint64_t k) const {
  if (k > n) return 0;
  if (n >= fact_.size()) throw std::out_of_range("BinomialModP: n beyond table");
  return static_cast<std::uint32_t>(
      mul_mod(mul_mod(fact_[n], inv_fact_[k], p_), inv_fact_[n - k], p_));
}

std::uint32_t BinomialModP::operator()(std::uint64_t n, std::uint64_t k) const {
  if (k > n) return 0;
  std::uint64_t r = 1;
  while (k > 0 || n > 0) {
    const std::uint64_t nd = n % p_;
    const std::uint64_t kd = k % p_;
    if (kd > nd) return 0;
    r = mul_mod(r, small(nd, kd), p_);
    n /= p_;
    k /= p_;
  }
  return static_cast<std::uint32_t>(r % p_);
}

}  // namespace fibfield
