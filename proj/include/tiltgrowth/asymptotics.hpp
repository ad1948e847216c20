#pragma once

#include "tiltgrowth/numeric.hpp"
#include "tiltgrowth/sequences.hpp"

#include <vector>

namespace tiltgrowth {

struct Exponents {
  Real t;     // t_p = -1/2 log_p(2 p^2 / (p+1))
  Real beta;  // beta = t_p + 1 = 1/2 log_p((p+1)/2)
};

Exponents exponent_t(int p);
// lim_{p -> infinity} t_p = -1/2.
Real exponent_t_infinity();

struct FValue {
  Real value;
  Real tail_estimate;  // magnitude of the first omitted term
  int terms_used = 0;
};

// F(w) from the explicit bilateral-product formula, outer sum truncated at
// k = K; terms below 1e-20 of the running sum stop the summation early.
FValue eval_F(int p, const Real& w, int K);

// |F(w) - r - (1+r) F(w^p)| with r = w(1-w^{p-1})/((1-w)(1+w^p)).
Real functional_eq_residual(int p, const Real& w, int K);

Real mahler_eigenvalue(int p, const Real& w);
Rat mahler_eigenvalue_limit(int p);  // (p+1)/2

// Pi(w) = prod_{j=1..J} (2/(p+1)) (1-w^{(p+1)p^-j}) / ((1-w^{p^-j})(1+w^{p^-j+1})).
Real eval_Pi(int p, const Real& w, int J);

// F0(w) = ln(w^-1)^{log_p((p+1)/2)} sum_k T(w^{p^k}) Pi(w^{p^k}) ((p+1)/2)^k
// with T(v) = v(1-v^{p-1})/((1-v)(1+v^p)). The default bilateral range
// [-80, 40] keeps the negative-k geometric tail below 1e-12.
Real eval_F0(int p, const Real& w, int k_lo = -80, int k_hi = 40, int J = 60);

struct RatioProfile {
  int p = 2;
  char parity = 'a';  // 'e' even, 'o' odd, 'a' all
  std::vector<std::pair<int, Real>> rows;
  Real min, max;
  int argmin = 0, argmax = 0;
};

// r_n = b_n / (n^{t_p} 2^n) for n in [n_lo, n_max] restricted to the parity.
RatioProfile ratio_profile(int p, int n_max, char parity, int n_lo = 16);
RatioProfile ratio_profile(const BigSequence& b, int p, int n_max, char parity,
                           int n_lo = 16);

// a'_{4n} / a'_n = b_{8n} / (2^{6n} b_{2n}), p = 2 only.
std::vector<std::pair<int, Real>> quadruple_ratio(int n_max);

struct GapReport {
  bool all_nonnegative = false;
  Real sup_scaled;  // sup over [n_lo, n_max] of d_n * n^{t_2 + 1}
  int arg_sup = 0;
  Rat d0;
};

GapReport gap_decay_check(int n_max, int n_lo = 16);

}  // namespace tiltgrowth
