#pragma once

// Polynomials over a prime field F_p, coefficients low degree first.

#include <cstdint>
#include <vector>

namespace motivic::ff {

using Poly = std::vector<std::uint32_t>;

inline void trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

inline std::uint32_t inverse(std::uint32_t a, std::uint32_t p) {
  // a^(p-2) mod p
  std::uint64_t r = 1, b = a % p;
  for (std::uint32_t e = p - 2; e != 0; e >>= 1) {
    if (e & 1U) r = r * b % p;
    b = b * b % p;
  }
  return static_cast<std::uint32_t>(r);
}

inline Poly derivative(const Poly& f, std::uint32_t p) {
  Poly d;
  for (std::size_t i = 1; i < f.size(); ++i) d.push_back(static_cast<std::uint32_t>(i % p * f[i] % p));
  trim(d);
  return d;
}

/// Remainder of a by b (b nonzero, trimmed).
inline Poly rem(Poly a, const Poly& b, std::uint32_t p) {
  trim(a);
  const std::uint32_t lead_inv = inverse(b.back(), p);
  while (a.size() >= b.size() && !a.empty()) {
    const std::uint64_t factor = static_cast<std::uint64_t>(a.back()) * lead_inv % p;
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) {
      const std::uint64_t sub = factor * b[i] % p;
      a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + p - sub) % p);
    }
    trim(a);
  }
  return a;
}

/// Degree of gcd(a, b); -1 when both are zero.
inline int gcd_degree(Poly a, Poly b, std::uint32_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = rem(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return static_cast<int>(a.size()) - 1;
}

/// Squarefree over the algebraic closure: gcd(f, f') constant. f nonzero.
inline bool squarefree(const Poly& f, std::uint32_t p) {
  Poly g = f;
  trim(g);
  if (g.size() <= 2) return true;
  return gcd_degree(g, derivative(g, p), p) == 0;
}

}  // namespace motivic::ff
