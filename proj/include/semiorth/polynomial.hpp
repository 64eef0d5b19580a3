#pragma once

// Univariate polynomials over the base field, coefficients low to high.
// Only what idempotent splitting needs: evaluation, division by (t - r),
// and finding one root in the base field.

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "semiorth/matrix.hpp"

namespace semiorth {

template <class K>
K poly_eval(const Vec<K>& p, const K& x) {
  K acc(0);
  for (std::size_t i = p.size(); i-- > 0;) acc = acc * x + p[i];
  return acc;
}

/// Quotient of p by (t - r), assuming r is a root.
template <class K>
Vec<K> divide_by_linear(const Vec<K>& p, const K& r) {
  if (p.size() < 2) return {};
  Vec<K> q(p.size() - 1, K(0));
  K carry(0);
  for (std::size_t i = p.size(); i-- > 1;) {
    carry = carry * r + p[i];
    q[i - 1] = carry;
  }
  return q;
}

namespace detail {

template <class K>
void trim(Vec<K>& p) {
  while (!p.empty() && is_zero(p.back())) p.pop_back();
}

template <class K>
Vec<K> poly_mod(Vec<K> a, const Vec<K>& m) {
  trim(a);
  K lead_inv = inverse(m.back());
  while (a.size() >= m.size()) {
    K f = a.back() * lead_inv;
    std::size_t shift = a.size() - m.size();
    for (std::size_t i = 0; i < m.size(); ++i) a[shift + i] -= f * m[i];
    trim(a);
  }
  return a;
}

template <class K>
Vec<K> poly_mulmod(const Vec<K>& a, const Vec<K>& b, const Vec<K>& m) {
  if (a.empty() || b.empty()) return {};
  Vec<K> r(a.size() + b.size() - 1, K(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return poly_mod(r, m);
}

template <class K>
Vec<K> poly_powmod(Vec<K> base, std::uint64_t e, const Vec<K>& m) {
  Vec<K> r = poly_mod(Vec<K>{K(1)}, m);
  base = poly_mod(base, m);
  while (e) {
    if (e & 1) r = poly_mulmod(r, base, m);
    base = poly_mulmod(base, base, m);
    e >>= 1;
  }
  return r;
}

template <class K>
Vec<K> poly_gcd(Vec<K> a, Vec<K> b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Vec<K> r = poly_mod(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    K inv = inverse(a.back());
    for (auto& c : a) c *= inv;
  }
  return a;
}

inline std::vector<mpz_class> divisors(mpz_class n) {
  std::vector<mpz_class> small, large;
  n = abs(n);
  if (n == 0) return {};
  if (n > mpz_class("1000000000000")) return {1};  // too large to factor by trial division
  for (mpz_class d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    small.push_back(d);
    if (d * d != n) large.push_back(n / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

inline std::optional<Rational> rational_root(const Vec<Rational>& p) {
  Vec<Rational> q = p;
  trim(q);
  if (q.size() < 2) return std::nullopt;
  if (is_zero(q[0])) return Rational(0);
  mpz_class lcm = 1;
  for (const auto& c : q) lcm = lcm * c.get_den() / gcd(lcm, c.get_den());
  std::vector<mpz_class> ints;
  for (const auto& c : q) {
    Rational s = c * lcm;
    ints.push_back(s.get_num());
  }
  for (const auto& num : divisors(ints.front()))
    for (const auto& den : divisors(ints.back()))
      for (int sign : {1, -1}) {
        Rational r(num * sign, den);
        r.canonicalize();
        if (is_zero(poly_eval(q, r))) return r;
      }
  return std::nullopt;
}

inline std::optional<ModP> modp_root(const Vec<ModP>& p, std::uint32_t prime) {
  Vec<ModP> q = p;
  trim(q);
  if (q.size() < 2) return std::nullopt;
  if (prime <= (1u << 20)) {
    for (std::uint32_t x = 0; x < prime; ++x)
      if (is_zero(poly_eval(q, ModP(x, prime)))) return ModP(x, prime);
    return std::nullopt;
  }
  // Product of the linear factors: gcd(q, t^p - t); then equal-degree split.
  Vec<ModP> t{ModP(0, prime), ModP(1, prime)};
  Vec<ModP> tp = poly_powmod(t, prime, q);
  if (tp.size() < 2) tp.resize(2, ModP(0, prime));
  tp[1] -= ModP(1, prime);
  Vec<ModP> h = poly_gcd(q, tp);
  std::mt19937_64 rng(prime);
  while (h.size() > 2) {
    Vec<ModP> shifted{ModP(static_cast<std::int64_t>(rng() % prime), prime), ModP(1, prime)};
    Vec<ModP> w = poly_powmod(shifted, (prime - 1) / 2, h);
    if (w.empty()) w.push_back(ModP(0, prime));
    w[0] -= ModP(1, prime);
    Vec<ModP> g = poly_gcd(h, w);
    if (g.size() >= 2 && g.size() < h.size()) h = g;
  }
  if (h.size() != 2) return std::nullopt;
  return ModP(0, prime) - h[0] / h[1];
}

}  // namespace detail

/// Some root of p in the base field, if one is found.
template <class K>
std::optional<K> find_root(const Vec<K>& p, const Field& f) {
  if constexpr (std::is_same_v<K, Rational>) {
    (void)f;
    return detail::rational_root(p);
  } else {
    return detail::modp_root(p, f.p);
  }
}

}  // namespace semiorth
