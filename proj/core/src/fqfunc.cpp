#include "fibfield/fqfunc.hpp"

#include <stdexcept>

#include "fibfield/numtheory.hpp"

namespace fibfield {

namespace {

void require_same(const FieldCtx& a, const FieldCtx& b) {
  if (!a.same_as(b)) throw std::invalid_argument("field context mismatch");
}

}  // namespace

FqPoly::FqPoly(FieldHandle ctx, std::vector<FqElem> coeffs) : ctx_(std::move(ctx)), coeffs_(std::move(coeffs)) {
  for (const auto& c : coeffs_) require_same(c.ctx(), *ctx_);
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

std::size_t FqPoly::degree() const {
  if (coeffs_.empty()) throw std::domain_error("degree of zero polynomial undefined");
  return coeffs_.size() - 1;
}

FqElem FqPoly::evaluate(const FqElem& x) const {
  require_same(x.ctx(), *ctx_);
  FqElem acc = ctx_->zero();
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

bool operator==(const FqPoly& a, const FqPoly& b) {
  require_same(*a.ctx_, *b.ctx_);
  return a.coeffs_ == b.coeffs_;
}

ValueTable evaluate_all(const FqPoly& p) {
  ValueTable out;
  out.reserve(p.ctx()->q());
  for (const FqElem& x : p.ctx()->enumerate()) out.push_back(p.evaluate(x));
  return out;
}

FqPoly fib_mod_field(std::uint64_t n, const FieldHandle& ctx) {
  if (n == 0) return FqPoly(ctx);
  const BinomialModP binom(ctx->p(), n);
  std::vector<FqElem> c(n, ctx->zero());
  for (std::uint64_t j = 0; 2 * j <= n - 1; ++j) c[n - 2 * j - 1] = ctx->from_int(binom(n - j - 1, j));
  return FqPoly(ctx, std::move(c));
}

FqPoly reduce_mod_xq_minus_x(const FqPoly& p) {
  const auto& ctx = p.ctx();
  const std::uint64_t q = ctx->q();
  std::vector<FqElem> out(std::min<std::uint64_t>(p.coeffs().size(), q), ctx->zero());
  for (std::uint64_t m = 0; m < p.coeffs().size(); ++m) {
    const std::uint64_t k = m < q ? m : (m - 1) % (q - 1) + 1;
    out[k] += p.coeffs()[m];
  }
  return FqPoly(ctx, std::move(out));
}

bool func_equal(const FqPoly& a, const FqPoly& b) {
  require_same(*a.ctx(), *b.ctx());
  for (const FqElem& x : a.ctx()->enumerate()) {
    if (!(a.evaluate(x) == b.evaluate(x))) return false;
  }
  return true;
}

FibValueSequence::FibValueSequence(FieldHandle ctx)
    : ctx_(std::move(ctx)),
      points_(ctx_->enumerate()),
      prev_(ctx_->q(), ctx_->one()),  // f_{-1} = 1
      cur_(ctx_->q(), ctx_->zero()) {}

void FibValueSequence::advance() {
  for (std::size_t i = 0; i < cur_.size(); ++i) {
    FqElem next = points_[i] * cur_[i] + prev_[i];
    prev_[i] = cur_[i];
    cur_[i] = next;
  }
  ++n_;
}

void FibValueSequence::advance_to(std::uint64_t n) {
  if (n < n_) throw std::invalid_argument("FibValueSequence only moves forward");
  while (n_ < n) advance();
}

std::string to_string(PeriodCase c) {
  switch (c) {
    case PeriodCase::OneMod4OrEvenE:
      return "ONE_MOD4_OR_EVEN_E";
    case PeriodCase::ThreeMod4OddE:
      return "THREE_MOD4_ODD_E";
    case PeriodCase::Char2:
      return "CHAR2";
  }
  return "?";
}

PeriodClaim period_modulus(const FieldCtx& ctx) {
  const std::uint64_t p = ctx.p();
  const unsigned e = ctx.e();
  if (p == 2) return {PeriodCase::Char2, checked_pow(2, 2 * e + 1) - 2};
  const std::uint64_t q2m1 = checked_pow(p, 2 * e) - 1;
  if (p % 4 == 3 && e % 2 == 1) return {PeriodCase::ThreeMod4OddE, q2m1};
  return {PeriodCase::OneMod4OrEvenE, p * q2m1 / 2};
}

bool verify_period(const FieldHandle& ctx, std::uint64_t n_lo, std::uint64_t count) {
  if (n_lo == 0 || count == 0) throw std::invalid_argument("verify_period: n_lo and count must be positive");
  const std::uint64_t modulus = period_modulus(*ctx).modulus;
  const bool char2 = ctx->p() == 2;
  // Index of 0 in enumerate() order is code 0.
  const std::uint64_t last = n_lo + count - 1;

  FibValueSequence lead(ctx);
  lead.advance_to(n_lo);
  std::vector<ValueTable> window;
  window.reserve(count);
  for (std::uint64_t n = n_lo; n <= last; ++n) {
    if (char2 && !(lead.values()[0] == ctx->from_int(static_cast<std::int64_t>(n % 2)))) return false;
    window.push_back(lead.values());
    lead.advance();
  }
  lead.advance_to(n_lo + modulus);
  for (std::uint64_t n = n_lo; n <= last; ++n) {
    if (lead.values() != window[n - n_lo]) return false;
    lead.advance();
  }
  return true;
}

bool functional_expression_check(const QuadraticExtension& ext, std::uint64_t n) {
  const FieldCtx& small = *ext.small;
  const FqPoly f = fib_mod_field(n + 1, ext.small);
  const FqElem four = small.from_int(4);
  for (const FqElem& x : small.enumerate()) {
    const FqElem direct = ext.embed(f.evaluate(x));
    if ((x * x + four).is_zero()) {
      // x = 2b with b^2 = -1; in characteristic 2 this is x = 0, b = 1.
      const FqElem b = small.p() == 2 ? small.one() : x / small.from_int(2);
      const FqElem expected = small.from_int(static_cast<std::int64_t>((n + 1) % small.p())) * b.pow(n);
      if (!(direct == ext.embed(expected))) return false;
      continue;
    }
    auto [u1, u2] = solve_u(x, ext);
    FqElem u = u1;
    if ((u + u.inv()).is_zero()) u = u2;
    const FqElem denom = u + u.inv();
    if (denom.is_zero()) return false;
    const FqElem minus_inv = -u.inv();
    const FqElem formula = (u.pow(n + 1) - minus_inv.pow(n + 1)) / denom;
    if (!(direct == formula)) return false;
  }
  return true;
}

bool is_permutation(const ValueTable& values) {
  if (values.empty()) return false;
  const std::uint32_t q = values.front().ctx().q();
  if (values.size() != q) throw std::invalid_argument("value table must cover all of F_q");
  std::vector<bool> seen(q, false);
  for (const auto& v : values) {
    if (seen[v.code()]) return false;
    seen[v.code()] = true;
  }
  return true;
}

bool is_permutation(const FqPoly& p) { return is_permutation(evaluate_all(p)); }

FqElem power_sum(const ValueTable& values, std::uint64_t i) {
  if (i == 0) throw std::invalid_argument("power_sum: exponent must be positive");
  if (values.empty()) throw std::invalid_argument("power_sum: empty value table");
  FqElem acc = values.front().ctx().zero();
  for (const auto& v : values) acc += v.pow(i);
  return acc;
}

FqElem power_sum(const FqPoly& p, std::uint64_t i) { return power_sum(evaluate_all(p), i); }

bool hermite_consistency(const ValueTable& values) {
  const std::uint64_t q = values.front().ctx().q();
  bool criterion = true;
  for (std::uint64_t i = 1; i + 2 <= q && criterion; ++i) criterion = power_sum(values, i).is_zero();
  if (criterion) criterion = !power_sum(values, q - 1).is_zero();
  return is_permutation(values) == criterion;
}

bool hermite_consistency(const FqPoly& p) { return hermite_consistency(evaluate_all(p)); }

}  // namespace fibfield
