#include "tiltgrowth/char_oracle.hpp"

#include <mutex>
#include <string>
#include <utility>

namespace tiltgrowth {

namespace {

constexpr int ORACLE_CAP = 200;  // quadratic-size characters beyond this

std::mutex memo_mutex;
std::map<std::pair<int, long>, SymLaurent> tilting_memo;
std::map<std::pair<int, long>, SymLaurent> simple_memo;

SymLaurent weyl_poly(long n) {
  SymLaurent s;
  for (long d = n; d >= 0; d -= 2) s.half[d] = 1;
  return s;
}

SymLaurent tilting_poly(int p, long i) {
  {
    std::lock_guard<std::mutex> lock(memo_mutex);
    auto it = tilting_memo.find({p, i});
    if (it != tilting_memo.end()) return it->second;
  }
  SymLaurent result;
  if (i <= p - 2) {
    result = weyl_poly(i);
  } else {
    // i = p*m + (p-1) + k with 0 <= k <= p-1;
    // ch(T_i) = twist_p(ch(T_m)) * ch(T_{p-1+k}), where
    // ch(T_{p-1+k}) = (u^k + u^-k) * [p]_u for k > 0 and [p]_u for k = 0.
    long k = (i - (p - 1)) % p;
    long m = (i - (p - 1) - k) / p;
    SymLaurent small = weyl_poly(p - 1);  // [p]_u
    if (k > 0) {
      SymLaurent pair;
      pair.half[k] = 1;
      small = sym_mul(pair, small);
    }
    result = sym_mul(sym_stretch(tilting_poly(p, m), p), small);
  }
  std::lock_guard<std::mutex> lock(memo_mutex);
  return tilting_memo.emplace(std::make_pair(p, i), std::move(result))
      .first->second;
}

SymLaurent simple_poly(int p, long n) {
  {
    std::lock_guard<std::mutex> lock(memo_mutex);
    auto it = simple_memo.find({p, n});
    if (it != simple_memo.end()) return it->second;
  }
  SymLaurent result;
  result.half[0] = 1;
  long rest = n;
  int j = 0;
  while (rest > 0) {
    long digit = rest % p;
    rest /= p;
    if (digit > 0) {
      SymLaurent factor = weyl_poly(digit);
      for (int t = 0; t < j; ++t) factor = sym_stretch(factor, p);
      result = sym_mul(result, factor);
    }
    ++j;
  }
  std::lock_guard<std::mutex> lock(memo_mutex);
  return simple_memo.emplace(std::make_pair(p, n), std::move(result))
      .first->second;
}

}  // namespace

Character weyl_char(long n) {
  if (n < 0) throw std::invalid_argument("weyl_char: n >= 0 required");
  return {weyl_poly(n), 0};
}

Character frobenius_twist(const Character& c, int p) {
  return {sym_stretch(c.poly, p), p};
}

Character tilting_char(int p, long i) {
  require_prime(p, "tilting_char");
  if (i < 0) throw std::invalid_argument("tilting_char: i >= 0 required");
  return {tilting_poly(p, i), p};
}

Character simple_char(int p, long n) {
  require_prime(p, "simple_char");
  if (n < 0) throw std::invalid_argument("simple_char: n >= 0 required");
  return {simple_poly(p, n), p};
}

Character tensor_power_char(int n) {
  if (n < 0) throw std::invalid_argument("tensor_power_char: n >= 0 required");
  SymLaurent v;
  v.half[1] = 1;  // u + u^{-1}
  SymLaurent acc;
  acc.half[0] = 1;
  for (int i = 0; i < n; ++i) acc = sym_mul(acc, v);
  return {acc, 0};
}

Decomposition greedy_decompose(const Character& c, Basis basis, int p) {
  require_prime(p, "greedy_decompose");
  Decomposition dec;
  dec.basis = basis;
  SymLaurent rem = c.poly;
  while (!rem.is_zero()) {
    long d = rem.top_degree();
    Int m = rem.coeff(d);
    if (m < 0)
      throw not_in_cone_error(
          "greedy_decompose: negative multiplicity " + m.str() +
          " at weight " + std::to_string(d) +
          "; input is not a character in the chosen basis");
    const SymLaurent& base =
        (basis == Basis::tilting) ? tilting_poly(p, d) : simple_poly(p, d);
    rem = sym_sub_scaled(rem, m, base);
    dec.mults[d] += m;
  }
  return dec;
}

Int oracle_b(int p, int n) {
  if (n < 0 || n > ORACLE_CAP)
    throw std::invalid_argument("oracle_b: n out of range [0, 200]");
  return greedy_decompose(tensor_power_char(n), Basis::tilting, p).total();
}

Int oracle_l(int p, int n) {
  if (n < 0 || n > ORACLE_CAP)
    throw std::invalid_argument("oracle_l: n out of range [0, 200]");
  return greedy_decompose(tensor_power_char(n), Basis::simple, p).total();
}

}  // namespace tiltgrowth
