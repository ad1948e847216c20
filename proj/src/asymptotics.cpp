#include "tiltgrowth/asymptotics.hpp"

#include <string>

namespace tiltgrowth {

using boost::multiprecision::abs;
using boost::multiprecision::exp;
using boost::multiprecision::log;
using boost::multiprecision::pow;

Exponents exponent_t(int p) {
  if (p < 2) throw std::invalid_argument("exponent_t: p >= 2 required");
  Real lp = log(Real(p));
  Real beta = log(Real(p + 1) / 2) / (2 * lp);
  return {beta - 1, beta};
}

Real exponent_t_infinity() { return Real(-1) / 2; }

namespace {

// T(v) = v (1 - v^{p-1}) / ((1 - v)(1 + v^p)), the k-th summand shape of the
// explicit formula evaluated at v = w^{p^k}.
Real term_T(int p, const Real& v) {
  return v * (1 - pow(v, p - 1)) / ((1 - v) * (1 + pow(v, p)));
}

// Product factor (1 - v^{p+1}) / ((1 - v)(1 + v^p)) at v = w^{p^j}.
Real factor_lambda(int p, const Real& v) {
  return (1 - pow(v, p + 1)) / ((1 - v) * (1 + pow(v, p)));
}

}  // namespace

FValue eval_F(int p, const Real& w, int K) {
  require_prime(p, "eval_F");
  if (!(w > 0 && w < 1))
    throw std::invalid_argument("eval_F: w in (0,1) required");
  if (K < 0) throw std::invalid_argument("eval_F: K >= 0 required");
  Real sum = 0, prod = 1;
  Real v = w;  // w^{p^k}
  FValue out;
  int k = 0;
  for (; k <= K; ++k) {
    Real term = term_T(p, v) * prod;
    sum += term;
    out.tail_estimate = abs(term);
    if (v == 0 || abs(term) < abs(sum) * Real("1e-20")) {
      ++k;
      break;
    }
    prod *= factor_lambda(p, v);
    v = pow(v, p);
  }
  out.value = sum;
  out.terms_used = k;
  return out;
}

Real functional_eq_residual(int p, const Real& w, int K) {
  Real r = term_T(p, w);
  Real lhs = eval_F(p, w, K).value;
  Real rhs = r + (1 + r) * eval_F(p, pow(w, p), K).value;
  return abs(lhs - rhs);
}

Real mahler_eigenvalue(int p, const Real& w) {
  require_prime(p, "mahler_eigenvalue");
  if (!(w > 0 && w < 1))
    throw std::invalid_argument("mahler_eigenvalue: w in (0,1) required");
  return (pow(w, p + 1) - 1) / ((w - 1) * (1 + pow(w, p)));
}

Rat mahler_eigenvalue_limit(int p) { return Rat(p + 1) / 2; }

Real eval_Pi(int p, const Real& w, int J) {
  require_prime(p, "eval_Pi");
  if (!(w > 0 && w < 1))
    throw std::invalid_argument("eval_Pi: w in (0,1) required");
  if (J < 1) throw std::invalid_argument("eval_Pi: J >= 1 required");
  Real lw = log(w);
  Real prod = 1;
  Real scale = Real(2) / (p + 1);
  for (int j = 1; j <= J; ++j) {
    // v = w^{p^-j}; once v rounds to 1 the factor is at its limit
    // (p+1)/2 and every remaining scaled factor equals 1 exactly
    Real v = exp(lw * pow(Real(p), -j));
    if (v == 1) break;
    prod *= scale * factor_lambda(p, v);
  }
  return prod;
}

Real eval_F0(int p, const Real& w, int k_lo, int k_hi, int J) {
  require_prime(p, "eval_F0");
  if (!(w > 0 && w < 1))
    throw std::invalid_argument("eval_F0: w in (0,1) required");
  if (!(k_lo < 0 && k_hi > 0))
    throw std::invalid_argument("eval_F0: need k_lo < 0 < k_hi");
  Real lw = log(w);
  Real lam = Real(p + 1) / 2;
  Real sum = 0;
  for (int k = k_lo; k <= k_hi; ++k) {
    // v = w^{p^k}; for large positive k this underflows to 0 and the term
    // vanishes, which is the correct doubly exponential decay.
    Real v = exp(lw * pow(Real(p), k));
    if (v >= 1 || v == 0) continue;
    sum += term_T(p, v) * eval_Pi(p, v, J) * pow(lam, k);
  }
  Real expo = log(lam) / log(Real(p));  // log_p((p+1)/2)
  return pow(log(1 / w), expo) * sum;
}

RatioProfile ratio_profile(const BigSequence& b, int p, int n_max, char parity,
                           int n_lo) {
  if (parity != 'e' && parity != 'o' && parity != 'a')
    throw std::invalid_argument("ratio_profile: parity must be e, o, or a");
  if (n_lo < 1 || n_lo > n_max)
    throw std::invalid_argument("ratio_profile: need 1 <= n_lo <= n_max");
  if (b.n_max() < n_max)
    throw std::invalid_argument("ratio_profile: sequence too short");
  Real t = exponent_t(p).t;
  RatioProfile prof;
  prof.p = p;
  prof.parity = parity;
  bool first = true;
  for (int n = n_lo; n <= n_max; ++n) {
    if (parity == 'e' && n % 2 != 0) continue;
    if (parity == 'o' && n % 2 != 1) continue;
    // r_n = b_n / (n^t 2^n), via logs to avoid overflow of 2^n as a float
    Real r = exp(log(Real(b.values[n])) - t * log(Real(n)) -
                 n * log(Real(2)));
    prof.rows.emplace_back(n, r);
    if (first || r < prof.min) {
      prof.min = r;
      prof.argmin = n;
    }
    if (first || r > prof.max) {
      prof.max = r;
      prof.argmax = n;
    }
    first = false;
  }
  return prof;
}

RatioProfile ratio_profile(int p, int n_max, char parity, int n_lo) {
  return ratio_profile(b_seq(p, n_max), p, n_max, parity, n_lo);
}

std::vector<std::pair<int, Real>> quadruple_ratio(int n_max) {
  if (n_max < 1)
    throw std::invalid_argument("quadruple_ratio: n_max >= 1 required");
  BigSequence b = b_fast_p2(8 * n_max);
  std::vector<std::pair<int, Real>> out;
  out.reserve(n_max);
  for (int n = 1; n <= n_max; ++n) {
    // a'_{4n}/a'_n = b_{8n} / (2^{6n} b_{2n})
    Real r = exp(log(Real(b.values[8 * n])) - log(Real(b.values[2 * n])) -
                 6 * n * log(Real(2)));
    out.emplace_back(n, r);
  }
  return out;
}

GapReport gap_decay_check(int n_max, int n_lo) {
  RationalSequence d = gap_d(2, n_max);  // gap_d already enforces d_n >= 0
  GapReport rep;
  rep.all_nonnegative = true;
  rep.d0 = d.values[0];
  Real expo = exponent_t(2).t + 1;  // t_2 + 1 (so d_n * n^{t_2+1} is bounded)
  bool first = true;
  for (int n = n_lo; n <= n_max; ++n) {
    Real s = Real(d.values[n]) * pow(Real(n), expo);
    if (first || s > rep.sup_scaled) {
      rep.sup_scaled = s;
      rep.arg_sup = n;
    }
    first = false;
  }
  return rep;
}

}  // namespace tiltgrowth
