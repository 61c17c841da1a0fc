#ifndef FIBFIELD_FQFUNC_HPP
#define FIBFIELD_FQFUNC_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "fibfield/ffield.hpp"

namespace fibfield {

/// Dense polynomial over F_q; coeffs()[i] multiplies x^i. Canonical: no
/// zero leading coefficient, empty for the zero polynomial.
class FqPoly {
 public:
  explicit FqPoly(FieldHandle ctx) : ctx_(std::move(ctx)) {}
  FqPoly(FieldHandle ctx, std::vector<FqElem> coeffs);

  const FieldHandle& ctx() const { return ctx_; }
  const std::vector<FqElem>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  /// Throws std::domain_error for the zero polynomial.
  std::size_t degree() const;

  FqElem evaluate(const FqElem& x) const;

  friend bool operator==(const FqPoly& a, const FqPoly& b);

 private:
  FieldHandle ctx_;
  std::vector<FqElem> coeffs_;
};

/// Values of a function F_q -> F_q, indexed like FieldCtx::enumerate().
using ValueTable = std::vector<FqElem>;

ValueTable evaluate_all(const FqPoly& p);

/// f_n with coefficients binom(n-j-1, j) reduced into F_q.
FqPoly fib_mod_field(std::uint64_t n, const FieldHandle& ctx);

/// Folds exponent m >= q to ((m - 1) mod (q - 1)) + 1; exponent 0 stays.
FqPoly reduce_mod_xq_minus_x(const FqPoly& p);

/// Equality as functions on F_q, by evaluation at every element.
bool func_equal(const FqPoly& a, const FqPoly& b);

/// Steps n -> n+1 through f_n(x) at every x in F_q at once, via
/// f_{n+1}(x) = x f_n(x) + f_{n-1}(x). Starts at n = 0.
class FibValueSequence {
 public:
  explicit FibValueSequence(FieldHandle ctx);

  std::uint64_t index() const { return n_; }
  const ValueTable& values() const { return cur_; }
  void advance();
  void advance_to(std::uint64_t n);

 private:
  FieldHandle ctx_;
  ValueTable points_;
  ValueTable prev_;
  ValueTable cur_;
  std::uint64_t n_ = 0;
};

enum class PeriodCase { OneMod4OrEvenE, ThreeMod4OddE, Char2 };

std::string to_string(PeriodCase c);

struct PeriodClaim {
  PeriodCase tag;
  std::uint64_t modulus;
};

/// Case from (p mod 4, e mod 2): p(p^{2e}-1)/2, p^{2e}-1 or 2^{2e+1}-2.
PeriodClaim period_modulus(const FieldCtx& ctx);

/// func_equal(f_n, f_{n + modulus}) for n = n_lo .. n_lo + count - 1, on
/// value tables. In characteristic 2 it also checks f_n(0) = n mod 2.
bool verify_period(const FieldHandle& ctx, std::uint64_t n_lo, std::uint64_t count);

/// Checks the closed forms
///   f_{n+1}(u - 1/u) = (u^{n+1} - (-1/u)^{n+1}) / (u + 1/u)
///   f_{n+1}(2b)      = (n+1) b^n, b^2 = -1
/// at every x in F_q against direct evaluation of f_{n+1}(x). The first form
/// is used when x^2 + 4 != 0, with u a root of u^2 - x u - 1 chosen so that
/// u + 1/u != 0; the second when x^2 + 4 = 0 (b = x/2, or b = 1 in
/// characteristic 2 where the condition means x = 0).
bool functional_expression_check(const QuadraticExtension& ext, std::uint64_t n);

bool is_permutation(const ValueTable& values);
bool is_permutation(const FqPoly& p);

/// sum_{a in F_q} p(a)^i.
FqElem power_sum(const ValueTable& values, std::uint64_t i);
FqElem power_sum(const FqPoly& p, std::uint64_t i);

/// is_permutation(p) <=> [power sums vanish for 1 <= i <= q-2 and not at q-1].
bool hermite_consistency(const ValueTable& values);
bool hermite_consistency(const FqPoly& p);

}  // namespace fibfield

#endif  // FIBFIELD_FQFUNC_HPP
