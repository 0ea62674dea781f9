#pragma once

#include <vector>

#include "compositions/bigcount.hpp"
#include "compositions/core.hpp"

namespace compositions {

/// Dense integer polynomial, index = exponent. Canonical form: trailing zero
/// coefficients trimmed, the zero polynomial is the empty list.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<BigCount> coeffs);

  static Polynomial constant(BigCount c);
  static Polynomial monomial(Index exponent, BigCount coeff = 1);
  /// 1 + x + ... + x^degree (the geometric block used by the bracket forms).
  static Polynomial geometric_block(Index degree);

  bool is_zero() const { return coeffs_.empty(); }
  /// Degree of the zero polynomial is reported as 0.
  Index degree() const { return coeffs_.empty() ? 0 : coeffs_.size() - 1; }
  BigCount coeff(Index i) const;
  const std::vector<BigCount>& coefficients() const { return coeffs_; }

  Polynomial& add_term(Index exponent, const BigCount& c);

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  bool operator==(const Polynomial&) const = default;

 private:
  void trim();
  std::vector<BigCount> coeffs_;
};

/// Power by repeated squaring; pow(p, 0) = 1.
Polynomial pow(const Polynomial& base, Index exponent);

/// numerator / denominator with denominator constant term 1.
struct RationalGF {
  Polynomial numerator;
  Polynomial denominator;
};

struct TruncatedSeries {
  std::vector<BigCount> coefficients;  // length = order + 1
  Index order() const { return coefficients.empty() ? 0 : coefficients.size() - 1; }
  const BigCount& coeff(Index n) const { return coefficients.at(n); }
};

/// Coefficients 0..order of num/den via the linear recurrence the denominator
/// induces: c_n = num_n - sum_{j>=1} den_j c_{n-j}.
TruncatedSeries expand_rational(const RationalGF& gf, Index order);

/// x^r / (1 - x^r - x^m); the two denominator terms merge when r = m.
RationalGF gf_s_rm(Index r, Index m);

/// x^(rk) / (1 - x^m)^k.
RationalGF gf_s_rmk(Index r, Index m, Index k);

/// (x + ... + x^q) / (1 - x - ... - x^q).
RationalGF gf_t_q(Index q);

/// x^q / (1 - x - x^q).
RationalGF gf_u_q(Index q);

/// (x^p + ... + x^q) / (1 - x^p - ... - x^q).
RationalGF gf_v_pq(Index p, Index q);

/// Fixed part-count families: polynomial numerators over denominator 1 for
/// t and v, rational for u.
RationalGF gf_t_qk(Index q, Index k);   // x^k (1 + ... + x^(q-1))^k
RationalGF gf_u_qk(Index q, Index k);   // x^(qk) / (1 - x)^k
RationalGF gf_v_pqk(Index p, Index q, Index k);  // x^(pk) (1 + ... + x^(q-p))^k

/// x / (1 - 2x): the unrestricted family.
RationalGF gf_count_all();

}  // namespace compositions
