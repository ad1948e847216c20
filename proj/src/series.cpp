#include "tiltgrowth/series.hpp"

#include <algorithm>

namespace tiltgrowth {

SymLaurent sym_add(const SymLaurent& a, const SymLaurent& b) {
  SymLaurent r = a;
  for (const auto& [d, c] : b.half) {
    Int v = r.coeff(d) + c;
    r.set(d, std::move(v));
  }
  return r;
}

SymLaurent sym_sub_scaled(const SymLaurent& a, const Int& m, const SymLaurent& b) {
  SymLaurent r = a;
  for (const auto& [d, c] : b.half) {
    Int v = r.coeff(d) - m * c;
    r.set(d, std::move(v));
  }
  return r;
}

SymLaurent sym_mul(const SymLaurent& a, const SymLaurent& b) {
  // Expand both halves to full support, convolve, keep degrees >= 0.
  std::map<long, Int> full;
  for (const auto& [da, ca] : a.half) {
    for (const auto& [db, cb] : b.half) {
      Int prod = ca * cb;
      full[da + db] += prod;
      if (da != 0) full[-da + db] += prod;
      if (db != 0) full[da - db] += prod;
      if (da != 0 && db != 0) full[-da - db] += prod;
    }
  }
  SymLaurent r;
  for (auto& [d, c] : full)
    if (d >= 0 && c != 0) r.half[d] = std::move(c);
  return r;
}

SymLaurent sym_stretch(const SymLaurent& a, int p) {
  SymLaurent r;
  for (const auto& [d, c] : a.half) r.half[d * p] = c;
  return r;
}

MonicIntPoly chebyshev_P(int p) {
  if (p < 2) throw std::invalid_argument("chebyshev_P: need p >= 2");
  // P_0 = 2, P_1 = z, P_{n+1} = z*P_n - P_{n-1}.
  std::vector<Int> prev = {2}, cur = {0, 1};
  for (int n = 1; n < p; ++n) {
    std::vector<Int> next(n + 2, Int(0));
    for (int i = 0; i <= n; ++i) next[i + 1] += cur[i];
    for (size_t i = 0; i < prev.size(); ++i) next[i] -= prev[i];
    prev = std::move(cur);
    cur = std::move(next);
  }
  return MonicIntPoly{std::move(cur)};
}

ZSeries w_to_z(const WSeries& g) {
  if (g.order() < 1)
    throw std::invalid_argument("w_to_z: input order must be at least 1");
  if (g.coeffs[0] != 0)
    throw not_in_image_error(
        "w_to_z: nonzero constant term; input is not a series in z^{-1}");
  const int M = g.order();
  std::vector<Rat> r = g.coeffs;  // residual, indexed by w-power
  ZSeries out(M - 1);
  // z^{-n-1} = w^{n+1} (1+w^2)^{-n-1} = sum_j (-1)^j C(n+j,j) w^{n+1+2j};
  // the pivot at w^{n+1} has coefficient 1, so the solve is unit-triangular.
  for (int n = 0; n < M; ++n) {
    Rat cn = r[n + 1];
    out.coeffs[n] = cn;
    if (cn == 0) continue;
    Int binom = 1;
    for (int j = 1; n + 1 + 2 * j <= M; ++j) {
      binom = binom * (n + j) / j;
      Rat term = cn * binom;
      if (j % 2 == 1)
        r[n + 1 + 2 * j] += term;
      else
        r[n + 1 + 2 * j] -= term;
    }
  }
  return out;
}

WSeries z_to_w(const ZSeries& c, int order) {
  if (order < 0) throw std::invalid_argument("z_to_w: order must be >= 0");
  const int M = order;
  // inv[k] = coefficient of w^k in (1+w^2)^{-1}.
  WSeries out(M);
  // e = expansion of w^{n+1} (1+w^2)^{-n-1}, updated by e *= w/(1+w^2).
  std::vector<Rat> e(M + 1, Rat(0));
  // e for n = -1 is the constant 1; multiply in w/(1+w^2) each round.
  std::vector<Rat> base(M + 1, Rat(0));
  for (int k = 1; k <= M; k += 2) base[k] = (((k - 1) / 2) % 2 == 0) ? 1 : -1;
  e[0] = 1;
  for (int n = 0; n <= c.order(); ++n) {
    // e <- e * base (truncated)
    std::vector<Rat> next(M + 1, Rat(0));
    for (int i = 0; i <= M; ++i) {
      if (e[i] == 0) continue;
      for (int k = 1; i + k <= M; k += 2) {
        if (base[k] == 0) continue;
        next[i + k] += e[i] * base[k];
      }
    }
    e = std::move(next);
    if (n + 1 > M) break;  // all further contributions exceed the truncation
    if (c.coeffs[n] == 0) continue;
    for (int k = 0; k <= M; ++k)
      if (e[k] != 0) out.coeffs[k] += c.coeffs[n] * e[k];
  }
  return out;
}

std::vector<std::vector<Rat>> inverse_power_table(const MonicIntPoly& P,
                                                  int count, int max_power) {
  const int d = P.degree();
  if (d < 2) throw std::invalid_argument("inverse_power_table: deg P >= 2 required");
  // B = expansion of P(z)^{-1}: write P = z^d (1 + u) with
  // u = sum_{j=1}^{d} a_{d-j} z^{-j}; invert 1+u as a power series in z^{-1}.
  std::vector<Rat> v(max_power + 1, Rat(0));  // v = (1+u)^{-1}
  v[0] = 1;
  for (int k = 1; k <= max_power; ++k) {
    Rat s = 0;
    for (int j = 1; j <= d && j <= k; ++j) {
      const Int& a = P.coeffs[d - j];
      if (a != 0) s += a * v[k - j];
    }
    v[k] = -s;
  }
  std::vector<Rat> B(max_power + 1, Rat(0));
  for (int k = d; k <= max_power; ++k) B[k] = v[k - d];

  std::vector<std::vector<Rat>> table;
  table.reserve(std::max(count, 0));
  std::vector<Rat> g = B;  // P^{-(n+1)} for current n
  for (int n = 0; n < count; ++n) {
    table.push_back(g);
    if (n + 1 == count) break;
    // g <- g * B, truncated; g's lowest term is z^{-d(n+1)}.
    std::vector<Rat> next(max_power + 1, Rat(0));
    const int lo = d * (n + 1);
    for (int i = lo; i <= max_power; ++i) {
      if (g[i] == 0) continue;
      for (int k = d; i + k <= max_power; ++k)
        if (B[k] != 0) next[i + k] += g[i] * B[k];
    }
    g = std::move(next);
  }
  return table;
}

ZSeries compose_inverse_powers(const ZSeries& c, const MonicIntPoly& P) {
  const int d = P.degree();
  if (d < 2)
    throw std::invalid_argument("compose_inverse_powers: deg P >= 2 required");
  const int M = c.order();
  const int max_power = M + 1;
  // Only n with d(n+1) <= max_power contribute below the truncation.
  const int count = std::min(c.order() + 1, max_power / d);
  auto table = inverse_power_table(P, count, max_power);
  ZSeries out(M);
  for (int n = 0; n < count; ++n) {
    if (c.coeffs[n] == 0) continue;
    for (int k = 1; k <= max_power; ++k)
      if (table[n][k] != 0) out.coeffs[k - 1] += c.coeffs[n] * table[n][k];
  }
  return out;
}

WSeries roots_of_unity_average(const WSeries& g, int p) {
  require_prime(p, "roots_of_unity_average");
  WSeries out = g;
  for (int m = 0; m <= out.order(); ++m)
    if (m % p != 0) out.coeffs[m] = 0;
  return out;
}

WSeries w_mul(const WSeries& a, const WSeries& b) {
  const int M = std::min(a.order(), b.order());
  WSeries out(M);
  for (int i = 0; i <= M; ++i) {
    if (a.coeffs[i] == 0) continue;
    for (int j = 0; i + j <= M; ++j)
      if (b.coeffs[j] != 0) out.coeffs[i + j] += a.coeffs[i] * b.coeffs[j];
  }
  return out;
}

WSeries w_add(const WSeries& a, const WSeries& b) {
  const int M = std::min(a.order(), b.order());
  WSeries out(M);
  for (int i = 0; i <= M; ++i) out.coeffs[i] = a.coeffs[i] + b.coeffs[i];
  return out;
}

}  // namespace tiltgrowth
