#ifndef FIBFIELD_FFIELD_HPP
#define FIBFIELD_FFIELD_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace fibfield {

class FieldCtx;
using FieldHandle = std::shared_ptr<const FieldCtx>;

/// Element of F_{p^e}, stored as the integer code sum_i c_i p^i of its
/// coefficient vector (c_0, ..., c_{e-1}) over F_p[t]/(modulus).
///
/// An element refers to its FieldCtx without owning it; keep the
/// FieldHandle alive for as long as elements are in use. A default
/// constructed element is detached and only usable as a placeholder.
class FqElem {
 public:
  FqElem() = default;
  FqElem(const FieldCtx* ctx, std::uint32_t code) : ctx_(ctx), code_(code) {}

  const FieldCtx& ctx() const;
  const FieldCtx* ctx_ptr() const { return ctx_; }
  std::uint32_t code() const { return code_; }
  std::vector<std::uint32_t> coeffs() const;

  bool is_zero() const { return code_ == 0; }
  bool is_one() const;

  /// Throws std::domain_error for zero.
  FqElem inv() const;
  FqElem pow(std::uint64_t exponent) const;

  FqElem operator-() const;
  FqElem& operator+=(const FqElem& o);
  FqElem& operator-=(const FqElem& o);
  FqElem& operator*=(const FqElem& o);
  FqElem& operator/=(const FqElem& o);

  friend FqElem operator+(FqElem a, const FqElem& b) { return a += b; }
  friend FqElem operator-(FqElem a, const FqElem& b) { return a -= b; }
  friend FqElem operator*(FqElem a, const FqElem& b) { return a *= b; }
  friend FqElem operator/(FqElem a, const FqElem& b) { return a /= b; }

  /// Equal iff same field and same coefficients; throws on ctx mismatch.
  friend bool operator==(const FqElem& a, const FqElem& b);

 private:
  const FieldCtx& checked(const FqElem& o) const;

  const FieldCtx* ctx_ = nullptr;
  std::uint32_t code_ = 0;
};

std::string to_string(const FqElem& a);
std::ostream& operator<<(std::ostream& os, const FqElem& a);

/// F_{p^e} = F_p[t]/(modulus) with arithmetic on element codes.
///
/// Immutable once built. Fields with q <= kTableMaxQ carry exp/log tables
/// over a primitive element; larger ones multiply coefficient vectors.
class FieldCtx {
 public:
  static constexpr std::uint64_t kDefaultMaxQ = 1ull << 20;
  static constexpr std::uint64_t kHardMaxQ = 1ull << 24;
  static constexpr std::uint64_t kTableMaxQ = 1ull << 16;

  FieldCtx(const FieldCtx&) = delete;
  FieldCtx& operator=(const FieldCtx&) = delete;

  std::uint32_t p() const { return p_; }
  unsigned e() const { return e_; }
  std::uint32_t q() const { return q_; }
  /// Monic, low-to-high, length e + 1.
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }

  FqElem zero() const { return {this, 0}; }
  FqElem one() const { return {this, 1}; }
  /// The class of t. For e = 1 (modulus x) this is zero.
  FqElem generator() const;
  FqElem element(std::uint32_t code) const;
  /// Image of an integer in the prime subfield.
  FqElem from_int(std::int64_t v) const;
  FqElem from_coeffs(std::span<const std::uint32_t> coeffs) const;

  /// All q elements in increasing code order.
  std::vector<FqElem> enumerate() const;

  /// Some square root of a, if a is a square.
  std::optional<FqElem> sqrt(const FqElem& a) const;

  bool same_as(const FieldCtx& o) const;

  /// "GF(3^2) mod x^2 + 1".
  std::string to_string() const;

  // Code-level arithmetic; codes must be < q.
  std::uint32_t add(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t neg(std::uint32_t a) const;
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t inv(std::uint32_t a) const;
  std::uint32_t pow(std::uint32_t a, std::uint64_t exponent) const;
  /// Multiplication by reduction of coefficient-vector products, never via
  /// tables.
  std::uint32_t mul_polynomial(std::uint32_t a, std::uint32_t b) const;
  bool has_tables() const { return !exp_.empty(); }

  std::vector<std::uint32_t> decode(std::uint32_t code) const;
  std::uint32_t encode(std::span<const std::uint32_t> coeffs) const;

 private:
  friend FieldHandle make_field(std::uint32_t p, unsigned e, std::uint64_t max_q);
  FieldCtx(std::uint32_t p, unsigned e, std::vector<std::uint32_t> modulus);

  void build_tables();

  std::uint32_t p_;
  unsigned e_;
  std::uint32_t q_;
  std::vector<std::uint32_t> modulus_;
  std::vector<std::uint32_t> pow_p_;
  std::vector<std::uint32_t> exp_;
  std::vector<std::uint32_t> log_;
};

/// F_{p^e} with the monic irreducible modulus of least code
/// sum_i c_i p^i. Throws for composite p, e == 0 or q above the bound.
FieldHandle make_field(std::uint32_t p, unsigned e, std::uint64_t max_q = FieldCtx::kDefaultMaxQ);

/// Exhaustive check for monic factors of degree 1..deg/2 over F_p.
bool is_irreducible(std::span<const std::uint32_t> monic, std::uint32_t p);

/// F_{q^2} together with an embedding of F_q into it.
struct QuadraticExtension {
  FieldHandle small;
  FieldHandle big;
  /// Root in F_{q^2} of the small field's modulus; image of t.
  FqElem generator_image;
  /// small code -> big code.
  std::vector<std::uint32_t> image;

  FqElem embed(const FqElem& a) const;
};

QuadraticExtension embed_quadratic(const FieldHandle& small, std::uint64_t max_q = FieldCtx::kDefaultMaxQ);

/// The two roots of u^2 - x u - 1 = 0 in F_{q^2} (equal when x^2 + 4 = 0).
std::pair<FqElem, FqElem> solve_u(const FqElem& x, const QuadraticExtension& ext);

}  // namespace fibfield

#endif  // FIBFIELD_FFIELD_HPP
