#pragma once

#include <vector>

#include "compositions/bigcount.hpp"
#include "compositions/core.hpp"

namespace compositions {

// Every family is evaluated bottom-up into a dense table indexed by n, so
// there is no recursion depth to worry about at the index ceiling. The
// *_prefix forms return that table: entry [i] holds f(i) for 1 <= i <= n and
// entry [0] is 0, matching the generating-function convention that the
// coefficient of x^0 vanishes.

/// C(n) = 2^(n-1) via the doubling recurrence C(n) = 2 C(n-1), C(1) = 1.
BigCount count_all(Index n);
std::vector<BigCount> count_all_prefix(Index n);

/// Compositions of n into parts congruent to r (mod m). Normalizes (r, m, n)
/// internally; reducible pairs whose gcd does not divide n count 0.
BigCount s_rm(Index n, Index r, Index m);

/// Table of s_{r,m}(1..n); requires gcd(r, m) = 1.
std::vector<BigCount> s_rm_prefix(Index n, Index r, Index m);

/// Compositions of n into exactly k parts congruent to r (mod m).
/// Requires gcd(r, m) = 1; callers with a reducible pair normalize first.
BigCount s_rmk(Index n, Index r, Index m, Index k);
std::vector<BigCount> s_rmk_prefix(Index n, Index r, Index m, Index k);

/// Compositions with every part <= q.
BigCount t_q(Index n, Index q);
std::vector<BigCount> t_q_prefix(Index n, Index q);

/// Compositions with every part >= q.
BigCount u_q(Index n, Index q);
std::vector<BigCount> u_q_prefix(Index n, Index q);

/// Compositions with every part in [p, q].
BigCount v_pq(Index n, Index p, Index q);
std::vector<BigCount> v_pq_prefix(Index n, Index p, Index q);

}  // namespace compositions
