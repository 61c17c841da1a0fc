#ifndef FIBFIELD_MOMENTS_HPP
#define FIBFIELD_MOMENTS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fibfield/ffield.hpp"
#include "fibfield/fqfunc.hpp"

namespace fibfield {

// Tables below are indexed by their natural subscript: slot 0 holds the
// z^0 coefficient (always zero for b, d_0 = 0 for d), so t[k] is b_k / d_k.

/// b_k for 1 <= k <= q^2 - q + 1, the coefficients of
/// z (1 + (z - z^q)^{q-1}) read off digit-wise from k = alpha + beta q.
/// Values in [0, p). Requires p = 3 mod 4 and odd e.
std::vector<std::uint32_t> b_table_case1(const FieldCtx& ctx);

/// b_k for 1 <= k <= s - q + 2, s = p (q^2 - 1) / 2: one exactly at
/// k = 1 + t (q - 1), 0 <= t <= p (q + 1)/2 - 1. Requires p = 1 mod 4, or
/// p = 3 mod 4 with even e.
std::vector<std::uint32_t> b_table_case2(const FieldCtx& ctx);

/// First-moment table d_1..d_period from the piecewise recurrence for the
/// given odd-q case (q = 3 and q > 3 in case 1 are separate paths).
std::vector<std::uint32_t> d_from_recurrence(const FieldCtx& ctx, PeriodCase which);

/// sum_{x in F_q} f_n(x)^power for n = 0 .. n_max by direct evaluation;
/// n_max = 0 means one full period.
std::vector<FqElem> d_oracle(const FieldHandle& ctx, unsigned power, std::uint64_t n_max = 0);

/// Recurrence vs oracle for one odd q.
struct MomentSeries {
  FieldHandle ctx;
  PeriodCase tag;
  std::uint64_t period = 0;
  std::vector<std::uint32_t> b;
  std::vector<FqElem> d_recur;
  std::vector<FqElem> d_oracle;
  /// agree[n] for 1 <= n <= period; slot 0 unused (true).
  std::vector<bool> agree;

  bool all_agree() const;
  std::optional<std::uint64_t> first_disagreement() const;
  /// d_oracle at any n >= 1, folded into one period.
  const FqElem& oracle_at(std::uint64_t n) const;
};

/// Throws std::invalid_argument for even q.
MomentSeries cross_validate(const FieldHandle& ctx);

struct IdentityCheck {
  std::string name;
  FqElem lhs;
  FqElem rhs;
  bool holds = false;
};

struct GeneratingTerm {
  std::uint64_t power = 0;
  FqElem lhs;
  FqElem rhs;
  bool holds = false;
};

/// Evaluation of the even-q first-moment statements against the oracle.
struct EvenQReport {
  FieldHandle ctx;
  unsigned power = 1;
  std::uint64_t period = 0;
  /// Oracle d_0 .. d_{2 period}.
  std::vector<FqElem> d;
  /// d_1 = 1 + d_q and d_P = 1 + d_{P-2} - d_{2q^2-q-3}, P = 2q^2 - 2.
  std::vector<IdentityCheck> identities;
  /// Indices j in [1, P] other than 1 and P with d_j != 0 (the
  /// "d_j = 0 otherwise" reading).
  std::vector<std::uint64_t> otherwise_zero_violations;
  /// (z^{q-1} - 1)(z^{q+1} + 1) sum_{n=1}^{P} d_n z^n vs
  /// z^{2q^2+q-3} - z^q, coefficient by coefficient.
  std::vector<GeneratingTerm> generating_terms;
  bool generating_identity_holds = false;
  /// d_n = d_{n+P} for 1 <= n <= P.
  bool periodic = false;
  /// For power 2: whether the table equals the first-moment table.
  std::optional<bool> matches_first_moment;
};

/// Throws std::invalid_argument for odd q.
EvenQReport even_q_relations_check(const FieldHandle& ctx, unsigned power);

}  // namespace fibfield

#endif  // FIBFIELD_MOMENTS_HPP
