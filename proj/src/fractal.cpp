#include "tiltgrowth/fractal.hpp"

#include <numeric>
#include <string>

namespace tiltgrowth {

using boost::multiprecision::exp;
using boost::multiprecision::log;
using boost::multiprecision::pow;

BigSequence cantor_seq(int p, long n_max) {
  if (p < 2) throw std::invalid_argument("cantor_seq: p >= 2 required");
  if (n_max < 0) throw std::invalid_argument("cantor_seq: n_max >= 0 required");
  BigSequence s{p, SeqKind::cantor, {}};
  s.values.reserve(n_max + 1);
  for (long n = 0; n <= n_max; ++n) {
    long rest = n;
    int ok = 1;
    while (rest > 0) {
      if (rest % p == 1) {
        ok = 0;
        break;
      }
      rest /= p;
    }
    s.values.push_back(ok);
  }
  return s;
}

Real cantor_tau(int p) {
  if (p < 3)
    throw std::invalid_argument(
        "cantor_tau: p >= 3 required (sequence degenerates at p = 2)");
  return log(Real(p - 1)) / log(Real(p));
}

Staircase cesaro_staircase(int p, long n_max) {
  if (n_max < 1)
    throw std::invalid_argument("cesaro_staircase: n_max >= 1 required");
  Real tau = cantor_tau(p);
  BigSequence ca = cantor_seq(p, n_max);
  Staircase st;
  st.values.reserve(n_max);
  Int run = ca.values[0];
  for (long n = 1; n <= n_max; ++n) {
    run += ca.values[n];
    Real c = Real(run) * pow(Real(n), -tau);
    if (n == 1 || c < st.min) {
      st.min = c;
      st.argmin = n;
    }
    if (n == 1 || c > st.max) {
      st.max = c;
      st.argmax = n;
    }
    st.values.push_back(c);
  }
  return st;
}

Int dim_simple(int p, long n) {
  if (p < 2) throw std::invalid_argument("dim_simple: p >= 2 required");
  if (n < 0) throw std::invalid_argument("dim_simple: n >= 0 required");
  Int d = 1;
  while (n > 0) {
    d *= static_cast<int>(n % p) + 1;
    n /= p;
  }
  return d;
}

GenfunResult simple_dim_genfun(int p, int M) {
  if (M < p) throw std::invalid_argument("simple_dim_genfun: M >= p required");
  GenfunResult r;
  r.coeffs.reserve(M + 1);
  for (int n = 0; n <= M; ++n) r.coeffs.push_back(dim_simple(p, n));
  // Residual of f(z) = (1 + 2z + ... + p z^{p-1}) f(z^p): coefficient n on the
  // right is (a + 1) * f_m for n = a + p m, 0 <= a < p.
  r.residual = 0;
  for (int n = 0; n <= M; ++n) {
    int a = n % p, m = n / p;
    Int rhs = Int(a + 1) * r.coeffs[m];
    Int diff = abs(r.coeffs[n] - rhs);
    if (diff > r.residual) r.residual = diff;
  }
  if (r.residual != 0)
    throw property_violation_error(
        "simple_dim_genfun: functional equation residual is nonzero");
  return r;
}

Real sierpinski_tau(int p) {
  if (p < 2) throw std::invalid_argument("sierpinski_tau: p >= 2 required");
  return 1 + log(Real(p + 1) / 2) / log(Real(p));
}

TauLambda tau_lambda(int p, long q, long m, long n) {
  require_prime(p, "tau_lambda");
  if (n <= 0 || m <= 0 || m > n)
    throw std::invalid_argument("tau_lambda: need 0 < m/n <= 1");
  if (n % p == 0)
    throw std::invalid_argument("tau_lambda: p must not divide n");
  long g = std::gcd(m, n);
  m /= g;
  n /= g;
  if (q >= 2 && m == n)
    throw std::invalid_argument(
        "tau_lambda: lambda = q - m/n must not be a positive integer");
  TauLambda t;
  // minimal N with n | p^N - 1
  Int pw = p;
  t.N = 1;
  while ((pw - 1) % n != 0) {
    pw *= p;
    ++t.N;
  }
  Int r = m * (pw - 1) / n;
  for (long j = 0; j < t.N; ++j) {
    t.r_digits.push_back(static_cast<int>(r % p));
    r /= p;
  }
  Real s = 0;
  for (int d : t.r_digits) s += log(Real(d + 1));
  t.tau = s / (t.N * log(Real(p)));
  return t;
}

WSeries hilbert_series_L(int p, const DigitStream& digits, int M) {
  if (M < 1) throw std::invalid_argument("hilbert_series_L: M >= 1 required");
  WSeries h(M);
  h.coeffs[0] = 1;
  long pj = 1;
  for (long j = 0; 2 * pj <= M; ++j, pj *= p) {
    int nj = digits.digit(j);
    if (nj < 0 || nj > p - 1)
      throw std::invalid_argument("hilbert_series_L: digit out of range");
    if (nj == 0) continue;
    WSeries f(M);
    for (long e = 0; e <= nj && 2 * e * pj <= M; ++e) f.coeffs[2 * e * pj] = 1;
    h = w_mul(f, h);  // f is sparse; keep it in the outer loop
  }
  return h;
}

Real cantor_oscillation(const Real& w, int M) {
  if (!(w > 0 && w < 1))
    throw std::invalid_argument("cantor_oscillation: w in (0,1) required");
  if (M < 1) throw std::invalid_argument("cantor_oscillation: M >= 1 required");
  Real tau = cantor_tau(3);
  Real lw = log(1 / w);  // ln(w^-1) > 0
  Real prod = 1;
  for (int m = -M; m <= M; ++m) {
    // w^{2*3^m} = exp(2*3^m * ln w)
    Real e = 2 * pow(Real(3), m) * log(w);
    Real factor = 1 + exp(e);
    if (m < 0) factor /= 2;
    prod *= factor;
  }
  return pow(lw, tau) * prod;
}

Real random_lambda_tau(int p) {
  require_prime(p, "random_lambda_tau");
  Real s = 0;
  for (int k = 2; k <= p; ++k) s += log(Real(k));
  return s / (p * log(Real(p)));
}

}  // namespace tiltgrowth
