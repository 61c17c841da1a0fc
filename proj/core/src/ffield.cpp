#include "fibfield/ffield.hpp"

#include <algorithm>
#include <array>
#include <sstream>
#include <stdexcept>

#include "fibfield/numtheory.hpp"

namespace fibfield {

namespace {

constexpr unsigned kMaxDegree = 32;
using Digits = std::array<std::uint32_t, 2 * kMaxDegree>;

// Remainder of `poly` (low-to-high) modulo monic `divisor` over F_p, in place.
void reduce_monic(std::vector<std::uint32_t>& poly, std::span<const std::uint32_t> divisor, std::uint32_t p) {
  const std::size_t d = divisor.size() - 1;
  for (std::size_t k = poly.size(); k-- > d;) {
    const std::uint64_t c = poly[k];
    if (c == 0) continue;
    for (std::size_t i = 0; i <= d; ++i) {
      const std::uint64_t sub = c * divisor[i] % p;
      poly[k - d + i] = static_cast<std::uint32_t>((poly[k - d + i] + p - sub) % p);
    }
  }
  poly.resize(std::min(poly.size(), d));
}

}  // namespace

// ---------------------------------------------------------------- FqElem

const FieldCtx& FqElem::ctx() const {
  if (!ctx_) throw std::logic_error("detached field element");
  return *ctx_;
}

const FieldCtx& FqElem::checked(const FqElem& o) const {
  if (!ctx_ || !o.ctx_) throw std::logic_error("detached field element");
  if (ctx_ != o.ctx_ && !ctx_->same_as(*o.ctx_)) throw std::invalid_argument("field context mismatch");
  return *ctx_;
}

std::vector<std::uint32_t> FqElem::coeffs() const { return ctx().decode(code_); }

bool FqElem::is_one() const { return code_ == 1 % ctx().q(); }

FqElem FqElem::inv() const { return {ctx_, ctx().inv(code_)}; }

FqElem FqElem::pow(std::uint64_t exponent) const { return {ctx_, ctx().pow(code_, exponent)}; }

FqElem FqElem::operator-() const { return {ctx_, ctx().neg(code_)}; }

FqElem& FqElem::operator+=(const FqElem& o) {
  code_ = checked(o).add(code_, o.code_);
  return *this;
}

FqElem& FqElem::operator-=(const FqElem& o) {
  code_ = checked(o).sub(code_, o.code_);
  return *this;
}

FqElem& FqElem::operator*=(const FqElem& o) {
  code_ = checked(o).mul(code_, o.code_);
  return *this;
}

FqElem& FqElem::operator/=(const FqElem& o) {
  const FieldCtx& f = checked(o);
  code_ = f.mul(code_, f.inv(o.code_));
  return *this;
}

bool operator==(const FqElem& a, const FqElem& b) {
  a.checked(b);
  return a.code_ == b.code_;
}

std::string to_string(const FqElem& a) {
  std::ostringstream os;
  os << '(';
  const auto c = a.coeffs();
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i) os << ',';
    os << c[i];
  }
  os << ')';
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const FqElem& a) { return os << to_string(a); }

// -------------------------------------------------------------- FieldCtx

FieldCtx::FieldCtx(std::uint32_t p, unsigned e, std::vector<std::uint32_t> modulus)
    : p_(p), e_(e), q_(static_cast<std::uint32_t>(checked_pow(p, e))), modulus_(std::move(modulus)) {
  pow_p_.resize(e_ + 1);
  pow_p_[0] = 1;
  for (unsigned i = 1; i <= e_; ++i) pow_p_[i] = pow_p_[i - 1] * p_;
  if (q_ <= kTableMaxQ) build_tables();
}

void FieldCtx::build_tables() {
  const std::uint32_t order = q_ - 1;
  const Factorization f = factorize(order);
  std::uint32_t g = 0;
  for (std::uint32_t cand = 1; cand < q_; ++cand) {
    bool primitive = true;
    for (const auto& [r, k] : f) {
      // Schoolbook pow: the tables are not built yet.
      std::uint32_t acc = 1, base = cand;
      for (std::uint64_t n = order / r; n; n >>= 1) {
        if (n & 1) acc = mul_polynomial(acc, base);
        base = mul_polynomial(base, base);
      }
      if (acc == 1) {
        primitive = false;
        break;
      }
    }
    if (primitive) {
      g = cand;
      break;
    }
  }
  if (g == 0) throw std::logic_error("no primitive element; modulus not irreducible");
  exp_.resize(order);
  log_.assign(q_, 0);
  std::uint32_t x = 1;
  for (std::uint32_t i = 0; i < order; ++i) {
    exp_[i] = x;
    log_[x] = i;
    x = mul_polynomial(x, g);
  }
}

FqElem FieldCtx::generator() const {
  std::vector<std::uint32_t> c(e_, 0);
  if (e_ > 1) {
    c[1] = 1;
  }
  return {this, encode(c)};
}

FqElem FieldCtx::element(std::uint32_t code) const {
  if (code >= q_) throw std::out_of_range("element code out of range");
  return {this, code};
}

FqElem FieldCtx::from_int(std::int64_t v) const {
  std::int64_t r = v % static_cast<std::int64_t>(p_);
  if (r < 0) r += p_;
  return {this, static_cast<std::uint32_t>(r)};
}

FqElem FieldCtx::from_coeffs(std::span<const std::uint32_t> coeffs) const {
  if (coeffs.size() > e_) throw std::invalid_argument("too many coefficients for field degree");
  for (auto c : coeffs) {
    if (c >= p_) throw std::invalid_argument("coefficient not reduced mod p");
  }
  return {this, encode(coeffs)};
}

std::vector<FqElem> FieldCtx::enumerate() const {
  std::vector<FqElem> out;
  out.reserve(q_);
  for (std::uint32_t c = 0; c < q_; ++c) out.emplace_back(this, c);
  return out;
}

bool FieldCtx::same_as(const FieldCtx& o) const {
  return this == &o || (p_ == o.p_ && e_ == o.e_ && modulus_ == o.modulus_);
}

std::string FieldCtx::to_string() const {
  std::ostringstream os;
  os << "GF(" << p_ << '^' << e_ << ") mod ";
  bool first = true;
  for (std::size_t k = modulus_.size(); k-- > 0;) {
    const std::uint32_t c = modulus_[k];
    if (c == 0) continue;
    if (!first) os << " + ";
    first = false;
    if (k == 0 || c != 1) os << c;
    if (k >= 1) os << 'x';
    if (k >= 2) os << '^' << k;
  }
  return os.str();
}

std::vector<std::uint32_t> FieldCtx::decode(std::uint32_t code) const {
  std::vector<std::uint32_t> c(e_);
  for (unsigned i = 0; i < e_; ++i) {
    c[i] = code % p_;
    code /= p_;
  }
  return c;
}

std::uint32_t FieldCtx::encode(std::span<const std::uint32_t> coeffs) const {
  std::uint32_t code = 0;
  for (std::size_t i = coeffs.size(); i-- > 0;) code = code * p_ + coeffs[i];
  return code;
}

std::uint32_t FieldCtx::add(std::uint32_t a, std::uint32_t b) const {
  if (e_ == 1) {
    const std::uint32_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  if (p_ == 2) return a ^ b;
  std::uint32_t out = 0;
  for (unsigned i = 0; i < e_; ++i) {
    const std::uint32_t s = a % p_ + b % p_;
    out += (s >= p_ ? s - p_ : s) * pow_p_[i];
    a /= p_;
    b /= p_;
  }
  return out;
}

std::uint32_t FieldCtx::neg(std::uint32_t a) const {
  if (e_ == 1) return a == 0 ? 0 : p_ - a;
  if (p_ == 2) return a;
  std::uint32_t out = 0;
  for (unsigned i = 0; i < e_; ++i) {
    const std::uint32_t d = a % p_;
    out += (d == 0 ? 0 : p_ - d) * pow_p_[i];
    a /= p_;
  }
  return out;
}

std::uint32_t FieldCtx::sub(std::uint32_t a, std::uint32_t b) const { return add(a, neg(b)); }

std::uint32_t FieldCtx::mul_polynomial(std::uint32_t a, std::uint32_t b) const {
  if (e_ == 1) return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % p_);
  Digits da{}, db{};
  for (unsigned i = 0; i < e_; ++i) {
    da[i] = a % p_;
    a /= p_;
    db[i] = b % p_;
    b /= p_;
  }
  std::vector<std::uint32_t> prod(2 * e_ - 1, 0);
  for (unsigned i = 0; i < e_; ++i) {
    if (da[i] == 0) continue;
    for (unsigned j = 0; j < e_; ++j) {
      prod[i + j] = static_cast<std::uint32_t>((prod[i + j] + static_cast<std::uint64_t>(da[i]) * db[j]) % p_);
    }
  }
  reduce_monic(prod, modulus_, p_);
  return encode(prod);
}

std::uint32_t FieldCtx::mul(std::uint32_t a, std::uint32_t b) const {
  if (a == 0 || b == 0) return 0;
  if (!exp_.empty()) {
    const std::uint32_t order = q_ - 1;
    std::uint32_t s = log_[a] + log_[b];
    if (s >= order) s -= order;
    return exp_[s];
  }
  return mul_polynomial(a, b);
}

std::uint32_t FieldCtx::inv(std::uint32_t a) const {
  if (a == 0) throw std::domain_error("inverse of zero");
  if (!exp_.empty()) {
    const std::uint32_t order = q_ - 1;
    return exp_[(order - log_[a]) % order];
  }
  return pow(a, q_ - 2);
}

std::uint32_t FieldCtx::pow(std::uint32_t a, std::uint64_t exponent) const {
  if (exponent == 0) return 1 % q_;
  if (a == 0) return 0;
  if (!exp_.empty()) {
    const std::uint64_t order = q_ - 1;
    return exp_[static_cast<std::uint64_t>(log_[a]) * (exponent % order) % order];
  }
  std::uint32_t acc = 1;
  while (exponent) {
    if (exponent & 1) acc = mul(acc, a);
    a = mul(a, a);
    exponent >>= 1;
  }
  return acc;
}

std::optional<FqElem> FieldCtx::sqrt(const FqElem& a) const {
  if (a.ctx_ptr() != this && !same_as(a.ctx())) throw std::invalid_argument("field context mismatch");
  const std::uint32_t x = a.code();
  if (x == 0) return zero();
  if (p_ == 2) return FqElem(this, pow(x, q_ / 2));
  const std::uint64_t half = (q_ - 1) / 2;
  if (pow(x, half) != 1) return std::nullopt;

  // Tonelli-Shanks on q - 1 = 2^s * r.
  std::uint64_t r = q_ - 1;
  unsigned s = 0;
  while (r % 2 == 0) {
    r /= 2;
    ++s;
  }
  std::uint32_t z = 2;
  while (pow(z, half) == 1) ++z;
  unsigned m = s;
  std::uint32_t c = pow(z, r);
  std::uint32_t t = pow(x, r);
  std::uint32_t root = pow(x, (r + 1) / 2);
  while (t != 1) {
    unsigned i = 0;
    for (std::uint32_t tt = t; tt != 1; tt = mul(tt, tt)) ++i;
    std::uint32_t b = c;
    for (unsigned j = 0; j + i + 1 < m; ++j) b = mul(b, b);
    m = i;
    c = mul(b, b);
    t = mul(t, c);
    root = mul(root, b);
  }
  return FqElem(this, root);
}

// ------------------------------------------------------------- builders

bool is_irreducible(std::span<const std::uint32_t> monic, std::uint32_t p) {
  if (monic.empty() || monic.back() != 1) throw std::invalid_argument("is_irreducible: polynomial must be monic");
  const std::size_t deg = monic.size() - 1;
  if (deg == 0) return false;
  for (std::size_t d = 1; 2 * d <= deg; ++d) {
    // Every monic divisor candidate of degree d, lower coefficients as base-p digits.
    const std::uint64_t count = checked_pow(p, static_cast<unsigned>(d));
    std::vector<std::uint32_t> cand(d + 1, 0);
    cand[d] = 1;
    for (std::uint64_t code = 0; code < count; ++code) {
      std::uint64_t c = code;
      for (std::size_t i = 0; i < d; ++i) {
        cand[i] = static_cast<std::uint32_t>(c % p);
        c /= p;
      }
      std::vector<std::uint32_t> rem(monic.begin(), monic.end());
      reduce_monic(rem, cand, p);
      if (std::all_of(rem.begin(), rem.end(), [](std::uint32_t v) { return v == 0; })) return false;
    }
  }
  return true;
}

FieldHandle make_field(std::uint32_t p, unsigned e, std::uint64_t max_q) {
  if (!is_prime(p)) throw std::invalid_argument("make_field: p=" + std::to_string(p) + " is not prime");
  if (e == 0) throw std::invalid_argument("make_field: extension degree must be positive");
  const std::uint64_t bound = std::min(max_q, FieldCtx::kHardMaxQ);
  std::uint64_t q = 0;
  try {
    q = checked_pow(p, e);
  } catch (const std::overflow_error&) {
    q = bound + 1;
  }
  if (q > bound) {
    throw std::invalid_argument("make_field: q=" + std::to_string(p) + "^" + std::to_string(e) +
                                " exceeds bound " + std::to_string(bound));
  }
  // Least code over the non-leading coefficients.
  std::vector<std::uint32_t> modulus(e + 1, 0);
  modulus[e] = 1;
  for (std::uint64_t code = 0; code < q; ++code) {
    std::uint64_t c = code;
    for (unsigned i = 0; i < e; ++i) {
      modulus[i] = static_cast<std::uint32_t>(c % p);
      c /= p;
    }
    if (is_irreducible(modulus, p)) {
      return FieldHandle(new FieldCtx(p, e, modulus));
    }
  }
  throw std::logic_error("make_field: no irreducible polynomial found");
}

FqElem QuadraticExtension::embed(const FqElem& a) const {
  if (!a.ctx().same_as(*small)) throw std::invalid_argument("embed: element not in the small field");
  return big->element(image[a.code()]);
}

QuadraticExtension embed_quadratic(const FieldHandle& small, std::uint64_t max_q) {
  QuadraticExtension ext;
  ext.small = small;
  ext.big = make_field(small->p(), 2 * small->e(), max_q);
  const FieldCtx& big = *ext.big;
  const auto& mod = small->modulus();

  std::optional<FqElem> root;
  for (const FqElem& u : big.enumerate()) {
    FqElem acc = big.zero();
    for (std::size_t k = mod.size(); k-- > 0;) acc = acc * u + big.from_int(mod[k]);
    if (acc.is_zero()) {
      root = u;
      break;
    }
  }
  if (!root) throw std::logic_error("embed_quadratic: modulus has no root in the extension");
  ext.generator_image = *root;

  std::vector<FqElem> powers(small->e(), big.one());
  for (unsigned i = 1; i < small->e(); ++i) powers[i] = powers[i - 1] * *root;
  ext.image.resize(small->q());
  for (std::uint32_t code = 0; code < small->q(); ++code) {
    const auto c = small->decode(code);
    FqElem acc = big.zero();
    for (unsigned i = 0; i < small->e(); ++i) acc += big.from_int(c[i]) * powers[i];
    ext.image[code] = acc.code();
  }
  return ext;
}

std::pair<FqElem, FqElem> solve_u(const FqElem& x, const QuadraticExtension& ext) {
  const FieldCtx& big = *ext.big;
  const FqElem X = ext.embed(x);
  const FqElem one = big.one();
  if (big.p() != 2) {
    const FqElem disc = X * X + big.from_int(4);
    const auto s = big.sqrt(disc);
    if (!s) throw std::logic_error("solve_u: discriminant has no square root in F_{q^2}");
    const FqElem half = big.from_int(2).inv();
    return {(X + *s) * half, (X - *s) * half};
  }
  std::vector<FqElem> roots;
  for (const FqElem& u : big.enumerate()) {
    if ((u * u - X * u - one).is_zero()) roots.push_back(u);
  }
  if (roots.empty()) throw std::logic_error("solve_u: no root found in F_{q^2}");
  return {roots.front(), roots.back()};
}

}  // namespace fibfield
