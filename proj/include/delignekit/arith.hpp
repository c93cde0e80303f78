#pragma once

// Integer utilities: gcd/xgcd, powers, integer square roots, binomials,
// deterministic primality, and budgeted factorization (trial division
// followed by Brent's variant of Pollard rho).

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <utility>

#include "delignekit/common.hpp"

namespace delignekit {

using boost::multiprecision::abs;
using boost::multiprecision::gcd;
using boost::multiprecision::lcm;

inline Int pow_int(Int base, unsigned long e) {
  Int r = 1;
  while (e) {
    if (e & 1) r *= base;
    base *= base;
    e >>= 1;
  }
  return r;
}

inline Rat pow_rat(const Rat& base, long e) {
  if (e < 0) {
    if (base == 0) throw division_by_zero_error("pow_rat: 0^negative");
    Rat inv = Rat(den(base), num(base));
    return pow_rat(inv, -e);
  }
  Rat r = 1, b = base;
  unsigned long k = static_cast<unsigned long>(e);
  while (k) {
    if (k & 1) r *= b;
    b *= b;
    k >>= 1;
  }
  return r;
}

// Floor of sqrt for nonnegative n.
inline Int isqrt(const Int& n) {
  if (n < 0) throw std::invalid_argument("isqrt: negative");
  return boost::multiprecision::sqrt(n);
}

inline bool is_perfect_square(const Int& n, Int* root = nullptr) {
  if (n < 0) return false;
  Int r = isqrt(n);
  if (r * r == n) {
    if (root) *root = r;
    return true;
  }
  return false;
}

inline Int binomial(unsigned long n, unsigned long k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  Int r = 1;
  for (unsigned long i = 0; i < k; ++i) {
    r *= Int(n - i);
    r /= Int(i + 1);
  }
  return r;
}

// Extended gcd: returns g = gcd(a,b) >= 0 and u, v with u*a + v*b = g.
inline Int xgcd(const Int& a, const Int& b, Int& u, Int& v) {
  Int old_r = a, r = b;
  Int old_u = 1, uu = 0;
  Int old_v = 0, vv = 1;
  while (r != 0) {
    Int q = old_r / r;
    Int t = old_r - q * r;
    old_r = r;
    r = t;
    t = old_u - q * uu;
    old_u = uu;
    uu = t;
    t = old_v - q * vv;
    old_v = vv;
    vv = t;
  }
  if (old_r < 0) {
    old_r = -old_r;
    old_u = -old_u;
    old_v = -old_v;
  }
  u = old_u;
  v = old_v;
  return old_r;
}

// Floor division (rounds toward -infinity), matching lattice reduction needs.
inline Int floor_div(const Int& a, const Int& b) {
  Int q = a / b, r = a % b;
  if (r != 0 && ((r < 0) != (b < 0))) --q;
  return q;
}

inline Int mod_positive(const Int& a, const Int& m) {
  Int r = a % m;
  if (r < 0) r += abs(m);
  return r;
}

inline Int mulmod(const Int& a, const Int& b, const Int& m) {
  return mod_positive(a * b, m);
}

inline Int powmod(Int base, Int e, const Int& m) {
  base = mod_positive(base, m);
  Int r = 1;
  while (e > 0) {
    if (boost::multiprecision::bit_test(e, 0)) r = mulmod(r, base, m);
    base = mulmod(base, base, m);
    e >>= 1;
  }
  return r;
}

// Deterministic Miller-Rabin.  The listed bases decide primality for all
// n < 3.3e24, far beyond anything this library factors.
inline bool is_prime(const Int& n) {
  if (n < 2) return false;
  for (int p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n == p) return true;
    if (n % p == 0) return false;
  }
  Int d = n - 1;
  unsigned long s = 0;
  while (!boost::multiprecision::bit_test(d, 0)) {
    d >>= 1;
    ++s;
  }
  for (int a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    Int x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (unsigned long i = 0; i + 1 < s; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

namespace detail {

inline Int pollard_rho(const Int& n, DetRng& rng, long step_budget) {
  // Brent's cycle detection with batched gcds.
  if (n % 2 == 0) return 2;
  for (long attempt = 0; attempt < 32; ++attempt) {
    Int y = Int(rng.below(1000000007ull)) % n;
    Int c = 1 + Int(rng.below(1000000007ull)) % (n - 1);
    Int x = y, q = 1, g = 1, ys = y;
    long r = 1, steps = 0;
    const long batch = 128;
    while (g == 1) {
      x = y;
      for (long i = 0; i < r; ++i) y = (mulmod(y, y, n) + c) % n;
      long k = 0;
      while (k < r && g == 1) {
        ys = y;
        long lim = std::min(batch, r - k);
        for (long i = 0; i < lim; ++i) {
          y = (mulmod(y, y, n) + c) % n;
          q = mulmod(q, abs(x - y), n);
        }
        g = gcd(q, n);
        k += lim;
        steps += lim;
        if (steps > step_budget) break;
      }
      r *= 2;
      if (steps > step_budget) break;
    }
    if (g == n) {
      // Backtrack a cycle that collapsed.
      g = 1;
      while (g == 1) {
        ys = (mulmod(ys, ys, n) + c) % n;
        g = gcd(abs(x - ys), n);
      }
    }
    if (g != 1 && g != n) return g;
  }
  throw factorization_budget_error("pollard_rho: budget exceeded for n");
}

}  // namespace detail

// Full factorization n = prod p^e, n > 0.  Throws
// factorization_budget_error if the rho phase stalls.
inline std::map<Int, unsigned> factorize(Int n,
                                         long rho_step_budget = 2000000) {
  if (n <= 0) throw std::invalid_argument("factorize: n must be positive");
  std::map<Int, unsigned> f;
  for (Int p : {Int(2), Int(3), Int(5)}) {
    while (n % p == 0) {
      ++f[p];
      n /= p;
    }
  }
  // Trial division to 10^6, then rho.
  for (Int p = 7; p * p <= n && p <= 1000000; p += 2) {
    while (n % p == 0) {
      ++f[p];
      n /= p;
    }
  }
  if (n == 1) return f;
  // Recursive rho splitting of the remaining part.
  std::vector<Int> stack{n};
  DetRng rng(kFixedSeed ^ 0x9e3779b9ull);
  while (!stack.empty()) {
    Int m = stack.back();
    stack.pop_back();
    if (m == 1) continue;
    if (is_prime(m)) {
      ++f[m];
      continue;
    }
    // Perfect power check speeds rho up on squares.
    Int root;
    if (is_perfect_square(m, &root)) {
      stack.push_back(root);
      stack.push_back(root);
      continue;
    }
    Int d = detail::pollard_rho(m, rng, rho_step_budget);
    stack.push_back(d);
    stack.push_back(m / d);
  }
  return f;
}

// q = p^a with p prime, a >= 1.
inline std::optional<std::pair<Int, unsigned>> prime_power_split(const Int& q) {
  if (q < 2) return std::nullopt;
  auto f = factorize(q);
  if (f.size() != 1) return std::nullopt;
  return std::make_pair(f.begin()->first, f.begin()->second);
}

// Enumerates primes in increasing order, on demand.
class PrimeStream {
 public:
  Int next() {
    while (true) {
      ++current_;
      if (is_prime(current_)) return current_;
    }
  }
  void reset() { current_ = 1; }

 private:
  Int current_ = 1;
};

// All positive divisors of n (given its factorization), unsorted.
inline std::vector<Int> divisors(const std::map<Int, unsigned>& f) {
  std::vector<Int> ds{1};
  for (const auto& [p, e] : f) {
    std::size_t oldsize = ds.size();
    Int pe = 1;
    for (unsigned i = 1; i <= e; ++i) {
      pe *= p;
      for (std::size_t j = 0; j < oldsize; ++j) ds.push_back(ds[j] * pe);
    }
  }
  return ds;
}

}  // namespace delignekit
