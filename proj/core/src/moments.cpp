#include "fibfield/moments.hpp"

#include <stdexcept>

#include "fibfield/numtheory.hpp"

namespace fibfield {

namespace {

void require_case(const FieldCtx& ctx, PeriodCase want, const char* who) {
  if (period_modulus(ctx).tag != want) {
    throw std::invalid_argument(std::string(who) + ": field " + ctx.to_string() + " is not in case " +
                                to_string(want));
  }
}

std::uint32_t neg_mod(std::uint32_t v, std::uint32_t p) { return v == 0 ? 0 : p - v; }

}  // namespace

std::vector<std::uint32_t> b_table_case1(const FieldCtx& ctx) {
  require_case(ctx, PeriodCase::ThreeMod4OddE, "b_table_case1");
  const std::uint64_t q = ctx.q();
  const std::uint32_t p = ctx.p();
  const BinomialModP binom(p, q);
  const std::uint64_t last = q * q - q + 1;
  std::vector<std::uint32_t> b(last + 1, 0);
  for (std::uint64_t k = 1; k <= last; ++k) {
    const std::uint64_t alpha = k % q;
    const std::uint64_t beta = k / q;
    if (alpha + beta == q) {
      const std::uint32_t c = binom(q - 1, beta);
      b[k] = beta % 2 == 0 ? c : neg_mod(c, p);
    } else if (alpha + beta == 1) {
      b[k] = 1 % p;
    }
  }
  return b;
}

std::vector<std::uint32_t> b_table_case2(const FieldCtx& ctx) {
  require_case(ctx, PeriodCase::OneMod4OrEvenE, "b_table_case2");
  const std::uint64_t q = ctx.q();
  const std::uint64_t p = ctx.p();
  const std::uint64_t s = p * (q * q - 1) / 2;
  std::vector<std::uint32_t> b(s - q + 3, 0);
  const std::uint64_t t_max = p * (q + 1) / 2 - 1;
  for (std::uint64_t t = 0; t <= t_max; ++t) b[1 + t * (q - 1)] = 1;
  return b;
}

namespace {

std::vector<std::uint32_t> recurrence_case1_q3(const std::vector<std::uint32_t>& b, std::uint32_t p) {
  const std::uint64_t q = 3;
  const std::uint64_t period = q * q - 1;
  auto B = [&](std::uint64_t k) { return k < b.size() ? b[k] : 0u; };
  std::vector<std::uint32_t> d(period + 1, 0);
  for (std::uint64_t j = 1; j <= period; ++j) {
    if (j <= q - 1) {
      d[j] = 0;
    } else if (j <= q + 1) {
      d[j] = neg_mod(B(j - (q - 1)), p);
    } else if (j == q * q - (q + 1)) {
      d[j] = neg_mod(B(j + 2), p);
    } else {
      d[j] = 0;  // j >= q^2 - q
    }
  }
  return d;
}

// Shared shape of the q > 3 case-1 and the case-2 recurrences; they differ
// only in the period and where the middle range stops.
std::vector<std::uint32_t> recurrence_general(const std::vector<std::uint32_t>& b, std::uint32_t p,
                                              std::uint64_t q, std::uint64_t period) {
  auto B = [&](std::uint64_t k) { return k < b.size() ? b[k] : 0u; };
  const std::uint64_t boundary = period - q;  // q^2-(q+1) in case 1, s-q in case 2
  std::vector<std::uint32_t> d(period + 1, 0);
  for (std::uint64_t j = 1; j <= period; ++j) {
    if (j <= q - 1) {
      d[j] = 0;
    } else if (j <= q + 1) {
      d[j] = neg_mod(B(j - (q - 1)), p);
    } else if (j < boundary) {
      const std::uint32_t v = (B(j - (q - 1)) + d[j - (q + 1)]) % p;
      d[j] = neg_mod(v, p);
    } else if (j == boundary) {
      d[j] = neg_mod(B(j + 2), p);
    } else {
      d[j] = 0;
    }
  }
  return d;
}

}  // namespace

std::vector<std::uint32_t> d_from_recurrence(const FieldCtx& ctx, PeriodCase which) {
  const std::uint64_t q = ctx.q();
  const std::uint32_t p = ctx.p();
  switch (which) {
    case PeriodCase::ThreeMod4OddE: {
      const auto b = b_table_case1(ctx);
      if (q == 3) return recurrence_case1_q3(b, p);
      return recurrence_general(b, p, q, q * q - 1);
    }
    case PeriodCase::OneMod4OrEvenE: {
      const auto b = b_table_case2(ctx);
      return recurrence_general(b, p, q, static_cast<std::uint64_t>(p) * (q * q - 1) / 2);
    }
    case PeriodCase::Char2:
      break;
  }
  throw std::invalid_argument("d_from_recurrence: only the odd-q cases have a recurrence");
}

std::vector<FqElem> d_oracle(const FieldHandle& ctx, unsigned power, std::uint64_t n_max) {
  if (power == 0) throw std::invalid_argument("d_oracle: power must be positive");
  if (n_max == 0) n_max = period_modulus(*ctx).modulus;
  std::vector<FqElem> d;
  d.reserve(n_max + 1);
  FibValueSequence seq(ctx);
  for (std::uint64_t n = 0; n <= n_max; ++n) {
    FqElem acc = ctx->zero();
    for (const auto& v : seq.values()) acc += power == 1 ? v : v.pow(power);
    d.push_back(acc);
    seq.advance();
  }
  return d;
}

bool MomentSeries::all_agree() const { return !first_disagreement(); }

std::optional<std::uint64_t> MomentSeries::first_disagreement() const {
  for (std::uint64_t n = 1; n < agree.size(); ++n) {
    if (!agree[n]) return n;
  }
  return std::nullopt;
}

const FqElem& MomentSeries::oracle_at(std::uint64_t n) const {
  if (n == 0) throw std::invalid_argument("oracle_at: n must be positive");
  return d_oracle[(n - 1) % period + 1];
}

MomentSeries cross_validate(const FieldHandle& ctx) {
  if (ctx->p() == 2) throw std::invalid_argument("cross_validate: q must be odd");
  MomentSeries s;
  s.ctx = ctx;
  const PeriodClaim claim = period_modulus(*ctx);
  s.tag = claim.tag;
  s.period = claim.modulus;
  s.b = s.tag == PeriodCase::ThreeMod4OddE ? b_table_case1(*ctx) : b_table_case2(*ctx);
  const auto recur = d_from_recurrence(*ctx, s.tag);
  s.d_recur.reserve(recur.size());
  for (auto v : recur) s.d_recur.push_back(ctx->from_int(v));
  s.d_oracle = d_oracle(ctx, 1, s.period);
  s.agree.assign(s.period + 1, true);
  for (std::uint64_t n = 1; n <= s.period; ++n) s.agree[n] = s.d_recur[n] == s.d_oracle[n];
  return s;
}

EvenQReport even_q_relations_check(const FieldHandle& ctx, unsigned power) {
  if (ctx->p() != 2) throw std::invalid_argument("even_q_relations_check: q must be even");
  const std::uint64_t q = ctx->q();
  EvenQReport r;
  r.ctx = ctx;
  r.power = power;
  r.period = 2 * q * q - 2;
  const std::uint64_t P = r.period;
  r.d = d_oracle(ctx, power, 2 * P);
  const auto& d = r.d;
  const FqElem one = ctx->one();

  r.identities.push_back({"d_1 = 1 + d_q", d[1], one + d[q], d[1] == one + d[q]});
  const FqElem rhs = one + d[P - 2] - d[2 * q * q - q - 3];
  r.identities.push_back({"d_{2q^2-2} = 1 + d_{2q^2-4} - d_{2q^2-q-3}", d[P], rhs, d[P] == rhs});

  for (std::uint64_t j = 2; j < P; ++j) {
    if (!d[j].is_zero()) r.otherwise_zero_violations.push_back(j);
  }

  // (z^{q-1} - 1)(z^{q+1} + 1) = z^{2q} - z^{q+1} + z^{q-1} - 1.
  const std::uint64_t top = 2 * q + P;
  std::vector<FqElem> lhs(top + 1, ctx->zero());
  for (std::uint64_t n = 1; n <= P; ++n) {
    lhs[n + 2 * q] += d[n];
    lhs[n + q + 1] -= d[n];
    lhs[n + q - 1] += d[n];
    lhs[n] -= d[n];
  }
  std::vector<FqElem> rhs_poly(top + 1, ctx->zero());
  rhs_poly[2 * q * q + q - 3] += one;
  rhs_poly[q] -= one;
  r.generating_identity_holds = true;
  for (std::uint64_t k = 0; k <= top; ++k) {
    const bool ok = lhs[k] == rhs_poly[k];
    r.generating_terms.push_back({k, lhs[k], rhs_poly[k], ok});
    r.generating_identity_holds = r.generating_identity_holds && ok;
  }

  r.periodic = true;
  for (std::uint64_t n = 1; n <= P; ++n) r.periodic = r.periodic && d[n] == d[n + P];

  if (power == 2) {
    const auto first = d_oracle(ctx, 1, 2 * P);
    r.matches_first_moment = first == d;
  }
  return r;
}

}  // namespace fibfield
