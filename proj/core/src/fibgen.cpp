#include "fibfield/fibgen.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>
#include <thread>

namespace fibfield {

namespace {

mpz_class binomial(std::uint64_t n, std::uint64_t k) {
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

}  // namespace

IntPoly fib_poly_recurrence(std::int64_t n) {
  if (n < 0) {
    const std::uint64_t m = -static_cast<std::uint64_t>(n);
    IntPoly f = fib_poly_recurrence(static_cast<std::int64_t>(m));
    return (m % 2 == 1) ? f : negate(f);
  }
  IntPoly prev;                          // f_0
  IntPoly cur = IntPoly::constant(1);    // f_1
  if (n == 0) return prev;
  for (std::int64_t i = 2; i <= n; ++i) {
    IntPoly next = mul_by_x_plus(cur, prev);
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

IntPoly fib_poly_binomial(std::int64_t n) {
  if (n < 0) throw std::invalid_argument("fib_poly_binomial: closed form needs n >= 0");
  if (n == 0) return {};
  const auto un = static_cast<std::uint64_t>(n);
  std::vector<mpz_class> c(un);
  for (std::uint64_t j = 0; 2 * j <= un - 1; ++j) c[un - 2 * j - 1] = binomial(un - j - 1, j);
  return IntPoly(std::move(c));
}

mpz_class fib_coeff(std::uint64_t n, std::uint64_t k) {
  if ((n + k) % 2 == 0 || k + 1 > n) return 0;
  return binomial((n + k - 1) / 2, k);
}

IntPoly dickson2(std::uint64_t n, const mpz_class& a) {
  std::vector<mpz_class> c(n + 1);
  const mpz_class neg_a = -a;
  mpz_class power = 1;
  for (std::uint64_t i = 0; 2 * i <= n; ++i) {
    c[n - 2 * i] = binomial(n - i, i) * power;
    power *= neg_a;
  }
  return IntPoly(std::move(c));
}

IntPoly dickson_kind(std::uint64_t n, std::uint64_t k, const mpz_class& a) {
  if (n == 0) return IntPoly::constant(mpz_class(2) - mpz_class(k));
  std::vector<mpz_class> c(n + 1);
  const mpz_class neg_a = -a;
  mpz_class power = 1;
  for (std::uint64_t i = 0; 2 * i <= n; ++i) {
    mpz_class num = binomial(n - i, i) * (mpz_class(n) - mpz_class(k) * mpz_class(i));
    const mpz_class den(n - i);
    mpz_class quot, rem;
    mpz_tdiv_qr(quot.get_mpz_t(), rem.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    if (sgn(rem) != 0) {
      throw std::logic_error("dickson_kind: non-integral term at i=" + std::to_string(i));
    }
    c[n - 2 * i] = quot * power;
    power *= neg_a;
  }
  return IntPoly(std::move(c));
}

bool generating_series_check(std::size_t n_terms, const std::optional<mpz_class>& modulus) {
  if (n_terms < 2) throw std::invalid_argument("generating_series_check: need at least 2 terms");
  using Series = std::vector<IntPoly>;  // index = power of z
  auto trim = [&](IntPoly p) { return modulus ? reduce_mod(p, *modulus) : p; };
  auto series_mul = [&](const Series& a, const Series& b) {
    Series out(n_terms);
    for (std::size_t i = 0; i < n_terms; ++i) {
      if (a[i].is_zero()) continue;
      for (std::size_t j = 0; i + j < n_terms; ++j) {
        if (b[j].is_zero()) continue;
        out[i + j] = out[i + j] + a[i] * b[j];
      }
    }
    for (auto& c : out) c = trim(c);
    return out;
  };

  // 1 / (1 - w) with w = x z + z^2, summed as sum_k w^k; w^k starts at z^k.
  Series w(n_terms);
  w[1] = IntPoly{0, 1};
  if (n_terms > 2) w[2] = IntPoly{1};
  Series inverse(n_terms);
  Series w_pow(n_terms);
  w_pow[0] = IntPoly{1};
  for (std::size_t k = 0; k < n_terms; ++k) {
    for (std::size_t i = 0; i < n_terms; ++i) inverse[i] = inverse[i] + w_pow[i];
    w_pow = series_mul(w_pow, w);
  }
  // Multiplying by z shifts up one place.
  for (std::size_t m = 0; m < n_terms; ++m) {
    const IntPoly coeff = m == 0 ? IntPoly{} : trim(inverse[m - 1]);
    if (coeff != trim(fib_poly_recurrence(static_cast<std::int64_t>(m)))) return false;
  }
  return true;
}

std::optional<std::string> known_family(std::uint64_t p, std::uint64_t n) {
  if (p == 3 || p == 5) {
    static constexpr std::array<std::uint64_t, 5> kBases3 = {1, 5, 41, 5 * 73, 25 * 1181};
    static constexpr std::array<std::uint64_t, 5> kBases5 = {1, 3, 13, 3 * 29, 9 * 7};
    static constexpr std::array<const char*, 5> kNames3 = {"1", "5", "41", "5*73", "5^2*1181"};
    static constexpr std::array<const char*, 5> kNames5 = {"1", "3", "13", "3*29", "3^2*7"};
    if (n == 0) return std::nullopt;
    std::uint64_t m = n;
    while (m % p == 0) m /= p;
    const auto& bases = p == 3 ? kBases3 : kBases5;
    const auto& names = p == 3 ? kNames3 : kNames5;
    for (std::size_t i = 0; i < bases.size(); ++i) {
      if (bases[i] == m) {
        return std::string(names[i]) + "*" + std::to_string(p) + "^l";
      }
    }
    return std::nullopt;
  }
  if (n == 3 || n == 5) return std::string("{3,5}");
  return std::nullopt;
}

std::vector<std::uint64_t> ScanReport::nontrivial_hits() const {
  std::vector<std::uint64_t> out;
  for (const auto& h : factored_hits) {
    if (!h.trivial) out.push_back(h.n);
  }
  return out;
}

std::vector<std::uint64_t> ScanReport::flagged_hits() const {
  std::vector<std::uint64_t> out;
  for (const auto& h : factored_hits) {
    if (h.flagged) out.push_back(h.n);
  }
  return out;
}

namespace {

struct RawHit {
  std::uint64_t n;
  std::uint64_t degree;
};

template <typename Coeffs>
std::optional<std::uint64_t> palindrome_degree(const Coeffs& c) {
  std::size_t len = c.size();
  while (len > 0 && c[len - 1] == 0) --len;
  if (len == 0) return std::nullopt;
  for (std::size_t i = 0; i < len / 2; ++i) {
    if (c[i] != c[len - 1 - i]) return std::nullopt;
  }
  return len - 1;
}

// Residues mod p, sequential recurrence. Coefficients of f_n stay in [0, p).
std::vector<RawHit> scan_mod_p_recurrence(std::uint32_t p, std::uint64_t n_max) {
  std::vector<RawHit> hits;
  std::vector<std::uint32_t> prev;       // f_0
  std::vector<std::uint32_t> cur{1};     // f_1
  for (std::uint64_t n = 1; n <= n_max; ++n) {
    if (auto d = palindrome_degree(cur)) hits.push_back({n, *d});
    std::vector<std::uint32_t> next(cur.size() + 1, 0);
    for (std::size_t i = 0; i < cur.size(); ++i) next[i + 1] = cur[i];
    for (std::size_t i = 0; i < prev.size(); ++i) {
      const std::uint32_t s = next[i] + prev[i];
      next[i] = s >= p ? s - p : s;
    }
    prev = std::move(cur);
    cur = std::move(next);
  }
  return hits;
}

std::vector<RawHit> scan_integers_recurrence(std::uint64_t n_max) {
  std::vector<RawHit> hits;
  IntPoly prev;
  IntPoly cur = IntPoly::constant(1);
  for (std::uint64_t n = 1; n <= n_max; ++n) {
    if (is_self_reciprocal(cur)) hits.push_back({n, cur.degree()});
    IntPoly next = mul_by_x_plus(cur, prev);
    prev = std::move(cur);
    cur = std::move(next);
  }
  return hits;
}

// Single-n check from the binomial form, used by the parallel path. f_n has
// odd-only or even-only exponents, so only the j-indexed sequence matters:
// f_n is a palindrome iff binom(n-1-j, j) is symmetric in j.
std::optional<RawHit> check_one_binomial(std::uint64_t p, std::uint64_t n, const BinomialModP* table) {
  const std::uint64_t terms = (n - 1) / 2 + 1;  // j = 0 .. (n-1)/2
  if (p == 0) {
    std::vector<mpz_class> c(n);
    for (std::uint64_t j = 0; j < terms; ++j) c[n - 2 * j - 1] = binomial(n - j - 1, j);
    if (auto d = palindrome_degree(c)) return RawHit{n, *d};
    return std::nullopt;
  }
  std::vector<std::uint32_t> c(n, 0);
  for (std::uint64_t j = 0; j < terms; ++j) c[n - 2 * j - 1] = (*table)(n - j - 1, j);
  if (auto d = palindrome_degree(c)) return RawHit{n, *d};
  return std::nullopt;
}

std::vector<RawHit> scan_parallel(std::uint64_t p, std::uint64_t n_max, unsigned threads) {
  std::optional<BinomialModP> table;
  if (p != 0) table.emplace(static_cast<std::uint32_t>(p), n_max);
  std::vector<std::vector<RawHit>> partial(threads);
  {
    std::vector<std::jthread> workers;
    workers.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) {
      workers.emplace_back([&, t] {
        // Strided split balances the O(n) per-item cost.
        for (std::uint64_t n = 1 + t; n <= n_max; n += threads) {
          if (auto h = check_one_binomial(p, n, table ? &*table : nullptr)) partial[t].push_back(*h);
        }
      });
    }
  }
  std::vector<RawHit> merged;
  for (auto& v : partial) merged.insert(merged.end(), v.begin(), v.end());
  std::sort(merged.begin(), merged.end(), [](const RawHit& a, const RawHit& b) { return a.n < b.n; });
  return merged;
}

}  // namespace

ScanReport selfreciprocal_scan(std::uint64_t p, std::uint64_t n_max, const ScanOptions& options) {
  if (n_max == 0) throw std::invalid_argument("selfreciprocal_scan: n_max must be positive");
  if (p != 0 && !is_prime(p)) {
    throw std::invalid_argument("selfreciprocal_scan: p must be 0 or prime, got " + std::to_string(p));
  }
  if (p > 0xffffffffull) throw std::invalid_argument("selfreciprocal_scan: p must fit in 32 bits");

  std::vector<RawHit> raw;
  if (options.threads > 1) {
    raw = scan_parallel(p, n_max, options.threads);
  } else if (p == 0) {
    raw = scan_integers_recurrence(n_max);
  } else {
    raw = scan_mod_p_recurrence(static_cast<std::uint32_t>(p), n_max);
  }

  ScanReport report;
  report.p = p;
  report.n_max = n_max;
  for (const auto& h : raw) {
    ScanHit hit;
    hit.n = h.n;
    hit.degree = h.degree;
    hit.factorization = factorize(h.n);
    hit.trivial = h.degree == 0;
    hit.family = known_family(p, h.n);
    hit.flagged = !hit.trivial && !hit.family;
    report.hits.push_back(h.n);
    report.factored_hits.push_back(std::move(hit));
  }
  return report;
}

}  // namespace fibfield
