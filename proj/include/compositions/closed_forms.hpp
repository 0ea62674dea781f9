#pragma once

#include <vector>

#include "compositions/bigcount.hpp"
#include "compositions/core.hpp"

namespace compositions {

/// Exact C(a, b); 0 when b > a (vanishing-term convention used by the
/// inclusion-exclusion sums).
BigCount binomial(Index a, Index b);

/// Least positive x with r*x = 1 (mod m); returns 1 for m = 1.
/// Throws NotCoprimeError when gcd(r, m) > 1.
Index mod_inverse(Index r, Index m);

/// s_{r,m,k}(n) = C((n - rk)/m + k - 1, k - 1) when n = rk (mod m) and
/// n >= rk, else 0. Requires gcd(r, m) = 1.
BigCount s_rmk_closed(Index n, Index r, Index m, Index k);

/// One addend of the Pascal-diagonal sum for s_{r,m}(n): the binomial
/// C(row, col) picked at diagonal step lambda.
struct DiagonalTerm {
  Index lambda = 0;
  Index row = 0;
  Index col = 0;
  BigCount value;
};

struct DiagonalSum {
  BigCount total;
  std::vector<DiagonalTerm> terms;
};

/// s_{r,m}(n) as a sum of binomials along a falling diagonal of Pascal's
/// triangle, anchored at column xi - 1 where xi is the least positive residue
/// of r^{-1} n (mod m). Empty sum (total 0) when n < r*xi.
DiagonalSum s_rm_diagonal(Index n, Index r, Index m);

enum class BracketMethod { Expansion, InclusionExclusion };

/// Coefficient of x^n in (1 + x + ... + x^(q-1))^k. Expansion multiplies the
/// polynomial out; InclusionExclusion evaluates the signed binomial sum.
BigCount bracket_coefficient(Index k, Index n, Index q,
                             BracketMethod method = BracketMethod::Expansion);

/// t_{q,k}(n): exactly k parts, each <= q.
BigCount t_qk_closed(Index n, Index q, Index k);

/// u_{q,k}(n) = C(n - qk + k - 1, k - 1): exactly k parts, each >= q.
BigCount u_qk_closed(Index n, Index q, Index k);

/// v_{p,q,k}(n): exactly k parts, each in [p, q].
BigCount v_pqk_closed(Index n, Index p, Index q, Index k);

/// Binet's formula (alpha^n - beta^n)/sqrt(5) in double precision. Exact
/// after rounding up to n = 70; throws OutOfRangeError beyond that.
double binet_estimate(Index n);

}  // namespace compositions
