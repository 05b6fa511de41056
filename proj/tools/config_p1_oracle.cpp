// Offline oracle for the classes of unordered k-tuples of distinct points on
// P^1: counts reduced degree-k divisors over F_q by brute force for several
// primes q and interpolates the counts as a polynomial in q.
//
// Usage: config_p1_oracle [max_k]

#include <gmpxx.h>

#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <vector>

namespace {

using Poly = std::vector<std::uint32_t>;

void trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
  std::int64_t t = 0, nt = 1, r = p, nr = a;
  while (nr != 0) {
    const std::int64_t qq = r / nr;
    t -= qq * nt;
    std::swap(t, nt);
    r -= qq * nr;
    std::swap(r, nr);
  }
  return static_cast<std::uint32_t>((t % p + p) % p);
}

Poly poly_rem(Poly a, const Poly& b, std::uint32_t p) {
  const std::uint32_t li = inv_mod(b.back(), p);
  trim(a);
  while (a.size() >= b.size() && !a.empty()) {
    const std::uint64_t f = std::uint64_t{a.back()} * li % p;
    const std::size_t s = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[s + i] = static_cast<std::uint32_t>((a[s + i] + p - f * b[i] % p) % p);
    trim(a);
  }
  return a;
}

bool separable(const Poly& f, std::uint32_t p) {
  if (f.size() <= 2) return true;
  Poly d;
  for (std::size_t i = 1; i < f.size(); ++i) d.push_back(static_cast<std::uint32_t>(i % p * f[i] % p));
  trim(d);
  if (d.empty()) return false;
  Poly a = f, b = d;
  while (!b.empty()) {
    Poly r = poly_rem(a, b, p);
    a = b;
    b = r;
  }
  return a.size() == 1;
}

std::uint64_t monic_squarefree(int deg, std::uint32_t p) {
  if (deg < 0) return 0;
  Poly f(static_cast<std::size_t>(deg) + 1, 0);
  f.back() = 1;
  std::uint64_t n = 0;
  for (;;) {
    if (separable(f, p)) ++n;
    int i = 0;
    for (; i < deg; ++i) {
      if (++f[static_cast<std::size_t>(i)] < p) break;
      f[static_cast<std::size_t>(i)] = 0;
    }
    if (i >= deg) return n;
  }
}

// Newton divided differences, then expansion to monomial coefficients.
std::vector<mpq_class> interpolate(const std::vector<mpq_class>& xs, const std::vector<mpq_class>& ys) {
  const std::size_t n = xs.size();
  std::vector<mpq_class> dd = ys;
  for (std::size_t j = 1; j < n; ++j)
    for (std::size_t i = n - 1; i >= j; --i) {
      dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - j]);
      if (i == j) break;
    }
  std::vector<mpq_class> c(n, 0);
  for (std::size_t k = n; k-- > 0;) {
    // c <- c * (x - xs[k]) + dd[k]
    std::vector<mpq_class> next(n, 0);
    for (std::size_t i = 0; i + 1 < n; ++i) next[i + 1] += c[i];
    for (std::size_t i = 0; i < n; ++i) next[i] -= c[i] * xs[k];
    next[0] += dd[k];
    c = next;
  }
  return c;
}

}  // namespace

int main(int argc, char** argv) {
  const int max_k = argc > 1 ? std::atoi(argv[1]) : 6;
  const std::vector<std::uint32_t> primes = {2, 3, 5, 7, 11, 13, 17, 19, 23};
  for (int k = 0; k <= max_k; ++k) {
    const std::size_t npts = static_cast<std::size_t>(k) + 2;  // one extra point as a check
    std::vector<mpq_class> xs, ys;
    for (std::size_t i = 0; i < npts && i < primes.size(); ++i) {
      xs.emplace_back(primes[i]);
      ys.emplace_back(static_cast<unsigned long>(monic_squarefree(k, primes[i]) + monic_squarefree(k - 1, primes[i])));
    }
    const auto c = interpolate(xs, ys);
    std::cout << "    {";
    int top = static_cast<int>(c.size()) - 1;
    while (top > 0 && c[static_cast<std::size_t>(top)] == 0) --top;
    for (int i = 0; i <= top; ++i) std::cout << (i ? ", " : "") << c[static_cast<std::size_t>(i)].get_str();
    std::cout << "},  // k = " << k << "\n";
  }
}
