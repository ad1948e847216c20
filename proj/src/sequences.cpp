#include "tiltgrowth/sequences.hpp"

#include <string>

namespace tiltgrowth {

namespace {

Int rat_to_int_checked(const Rat& q, const char* what, int n) {
  if (denominator(q) != 1 || numerator(q) < 0)
    throw internal_consistency_error(std::string(what) +
                                     ": coefficient at n=" + std::to_string(n) +
                                     " is not a nonnegative integer");
  return numerator(q);
}

}  // namespace

BigSequence b_char_zero(int n_max) {
  if (n_max < 0) throw std::invalid_argument("b_char_zero: n_max >= 0 required");
  BigSequence s{P_INFINITY, SeqKind::b, {}};
  s.values.reserve(n_max + 1);
  Int binom = 1;  // C(n, floor(n/2)), updated incrementally
  for (int n = 0; n <= n_max; ++n) {
    s.values.push_back(binom);
    // C(n+1, floor((n+1)/2)) from C(n, floor(n/2)):
    // ratio is (n+1)/(n/2+1) for even n, 2 for odd n... compute directly.
    int h = (n + 1) / 2;
    binom = binom * (n + 1) / (n + 1 - h);
  }
  return s;
}

BigSequence b_fast_p2(int n_max) {
  if (n_max < 0) throw std::invalid_argument("b_fast_p2: n_max >= 0 required");
  BigSequence s{2, SeqKind::b, {Int(1)}};  // b_0 = 1
  for (int n = 1; static_cast<int>(s.values.size()) <= n_max; ++n) {
    // b_{2n-1} = b_{2n} = sum_{k=0}^{n-1} C(n-1,k) 2^{n-1-k} b_k
    Int acc = 0, binom = 1;
    Int pow2 = Int(1) << (n - 1);
    for (int k = 0; k <= n - 1; ++k) {
      acc += binom * pow2 * s.values[k];
      binom = binom * (n - 1 - k) / (k + 1);
      pow2 >>= 1;
    }
    s.values.push_back(acc);
    if (static_cast<int>(s.values.size()) <= n_max) s.values.push_back(acc);
  }
  s.values.resize(n_max + 1);
  return s;
}

ZSeries rp_zseries(int p, int order) {
  // w-form: r_p = w(1 - w^{p-1}) / ((1-w)(1+w^p))
  //             = (w + w^2 + ... + w^{p-1}) * sum_k (-1)^k w^{pk}   (p >= 3)
  // and r_2 = w/(1+w^2), whose z-expansion is exactly z^{-1}.
  const int W = order + 1;
  WSeries g(W);
  for (int k = 0; p * k <= W; ++k)
    for (int j = 1; j <= p - 1 && p * k + j <= W; ++j)
      g.coeffs[p * k + j] += (k % 2 == 0) ? 1 : -1;
  return w_to_z(g);
}

BigSequence b_mahler(int p, int n_max) {
  require_prime(p, "b_mahler");
  if (n_max < 0) throw std::invalid_argument("b_mahler: n_max >= 0 required");
  const int M = n_max;
  ZSeries r = rp_zseries(p, M);
  MonicIntPoly P = chebyshev_P(p);
  const int d = P.degree();
  const int max_power = M + 1;
  const int count = max_power / d;  // inverse powers that matter below truncation
  auto table = inverse_power_table(P, count, max_power);

  // Solve H = r + (1+r) K with K = sum_n H_n P^{-n-1} coefficient by
  // coefficient: kappa_m (coeff of z^{-m-1} in K) only involves H_n with
  // d(n+1) <= m+1, i.e. n < m, so the recursion is well founded.
  std::vector<Rat> H(M + 1), kappa(M + 1, Rat(0));
  for (int m = 0; m <= M; ++m) {
    Rat km = 0;
    for (int n = 0; n < count && d * (n + 1) <= m + 1; ++n)
      if (H[n] != 0 && table[n][m + 1] != 0) km += H[n] * table[n][m + 1];
    kappa[m] = km;
    // (r*K)_m with the z^{-i-1} * z^{-j-1} = z^{-(i+j+1)-1} shift.
    Rat rk = 0;
    for (int i = 0; i + 1 <= m; ++i)
      if (r.coeffs[i] != 0) rk += r.coeffs[i] * kappa[m - 1 - i];
    H[m] = r.coeffs[m] + km + rk;
  }

  BigSequence s{p, SeqKind::b, {}};
  s.values.reserve(M + 1);
  for (int n = 0; n <= M; ++n)
    s.values.push_back(rat_to_int_checked(H[n], "b_mahler", n));
  return s;
}

BigSequence b_seq(int p, int n_max) {
  if (p == P_INFINITY) return b_char_zero(n_max);
  if (p == 2) return b_fast_p2(n_max);
  return b_mahler(p, n_max);
}

BigSequence l_product(int p, int n_max) {
  require_prime(p, "l_product");
  if (n_max < 0) throw std::invalid_argument("l_product: n_max >= 0 required");
  const int W = n_max + 1;
  WSeries h(W);
  h.coeffs[0] = 1;
  for (long pj = 1; pj <= W; pj *= p) {
    // factor 1 + w^{p^j} + ... + w^{(2p-2) p^j}
    WSeries f(W);
    for (long e = 0; e <= 2 * p - 2 && e * pj <= W; ++e) f.coeffs[e * pj] = 1;
    h = w_mul(f, h);  // f is sparse; keep it in the outer loop
  }
  // l_n is the coefficient of z^{-n-1} in L(z) = w h(w).
  WSeries wh(W);
  for (int m = 1; m <= W; ++m) wh.coeffs[m] = h.coeffs[m - 1];
  ZSeries L = w_to_z(wh);
  BigSequence s{p, SeqKind::l, {}};
  s.values.reserve(n_max + 1);
  for (int n = 0; n <= n_max; ++n)
    s.values.push_back(rat_to_int_checked(L.coeffs[n], "l_product", n));
  return s;
}

RationalSequence psi_coeffs(int p, int n_max) {
  if (p != P_INFINITY) require_prime(p, "psi_coeffs");
  BigSequence b = b_seq(p, n_max);
  RationalSequence s{p, RatKind::psi, {}};
  s.values.reserve(n_max + 1);
  Rat pw = 1;  // 2^n
  for (int n = 0; n <= n_max; ++n) {
    Rat c = -Rat(b.values[n]) / pw;
    if (n >= 2) c += Rat(b.values[n - 2]) * 4 / pw;
    s.values.push_back(c);
    pw *= 2;
  }
  return s;
}

BigSequence second_difference_c(int n_max) {
  if (n_max < 0)
    throw std::invalid_argument("second_difference_c: n_max >= 0 required");
  BigSequence b = b_fast_p2(n_max + 4);
  BigSequence s{2, SeqKind::c, {}};
  s.values.reserve(n_max + 1);
  for (int n = 0; n <= n_max; ++n) {
    Int c = b.values[n + 4] - 8 * b.values[n + 2] + 16 * b.values[n];
    if (c < 0)
      throw property_violation_error("second_difference_c: c_" +
                                     std::to_string(n) + " is negative");
    s.values.push_back(std::move(c));
  }
  return s;
}

RationalSequence gap_d(int p, int n_max) {
  BigSequence b = b_seq(p, n_max + 2);
  RationalSequence s{p, RatKind::d, {}};
  s.values.reserve(n_max + 1);
  for (int n = 0; n <= n_max; ++n) {
    Rat d = 1 - Rat(b.values[n + 2]) / (4 * Rat(b.values[n]));
    if (d < 0)
      throw property_violation_error("gap_d: d_" + std::to_string(n) +
                                     " is negative");
    s.values.push_back(std::move(d));
  }
  return s;
}

}  // namespace tiltgrowth
