#pragma once

// Dense integer polynomials in one variable, coefficients ascending.
// Exact gcds and resultants go through subresultant polynomial remainder
// sequences so coefficient growth stays polynomial.

#include <algorithm>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "delignekit/arith.hpp"
#include "delignekit/common.hpp"

namespace delignekit {

class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<Int> coeffs) : c_(std::move(coeffs)) {
    normalize();
  }
  static IntPolynomial zero() { return IntPolynomial(); }
  static IntPolynomial constant(Int a) { return IntPolynomial({std::move(a)}); }
  // x^k
  static IntPolynomial monomial(std::size_t k, Int a = 1) {
    std::vector<Int> v(k + 1, 0);
    v[k] = std::move(a);
    return IntPolynomial(std::move(v));
  }

  bool is_zero() const { return c_.empty(); }
  // degree of the zero polynomial is -1
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  const Int& leading() const {
    static const Int z = 0;
    return c_.empty() ? z : c_.back();
  }
  bool is_monic() const { return !c_.empty() && c_.back() == 1; }
  const std::vector<Int>& coeffs() const { return c_; }
  Int coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Int(0); }

  friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) {
    return a.c_ == b.c_;
  }
  friend bool operator!=(const IntPolynomial& a, const IntPolynomial& b) {
    return !(a == b);
  }
  // Lexicographic by (degree, coefficients), for deterministic ordering.
  friend bool operator<(const IntPolynomial& a, const IntPolynomial& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    for (std::size_t i = a.c_.size(); i-- > 0;)
      if (a.c_[i] != b.c_[i]) return a.c_[i] < b.c_[i];
    return false;
  }

  friend IntPolynomial operator-(const IntPolynomial& a) {
    std::vector<Int> v = a.c_;
    for (auto& x : v) x = -x;
    return IntPolynomial(std::move(v));
  }
  friend IntPolynomial operator+(const IntPolynomial& a,
                                 const IntPolynomial& b) {
    std::vector<Int> v(std::max(a.c_.size(), b.c_.size()), 0);
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.coeff(i) + b.coeff(i);
    return IntPolynomial(std::move(v));
  }
  friend IntPolynomial operator-(const IntPolynomial& a,
                                 const IntPolynomial& b) {
    return a + (-b);
  }
  friend IntPolynomial operator*(const IntPolynomial& a,
                                 const IntPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return zero();
    std::vector<Int> v(a.c_.size() + b.c_.size() - 1, 0);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
    return IntPolynomial(std::move(v));
  }
  friend IntPolynomial operator*(const Int& s, const IntPolynomial& a) {
    std::vector<Int> v = a.c_;
    for (auto& x : v) x *= s;
    return IntPolynomial(std::move(v));
  }
  friend IntPolynomial operator*(const IntPolynomial& a, const Int& s) {
    return s * a;
  }

  IntPolynomial pow(unsigned long e) const {
    IntPolynomial r = constant(1), b = *this;
    while (e) {
      if (e & 1) r = r * b;
      if (e >>= 1) b = b * b;
    }
    return r;
  }

  Int eval(const Int& x) const {
    Int r = 0;
    for (std::size_t i = c_.size(); i-- > 0;) r = r * x + c_[i];
    return r;
  }
  Rat eval(const Rat& x) const {
    Rat r = 0;
    for (std::size_t i = c_.size(); i-- > 0;) r = r * x + c_[i];
    return r;
  }

  IntPolynomial derivative() const {
    if (c_.size() <= 1) return zero();
    std::vector<Int> v(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) v[i - 1] = Int(i) * c_[i];
    return IntPolynomial(std::move(v));
  }

  Int content() const {
    Int g = 0;
    for (const auto& x : c_) g = gcd(g, x);
    return g;
  }
  // Primitive part with positive leading coefficient.
  IntPolynomial primitive_part() const {
    if (is_zero()) return zero();
    Int g = content();
    if (leading() < 0) g = -g;
    std::vector<Int> v = c_;
    for (auto& x : v) x /= g;
    return IntPolynomial(std::move(v));
  }

  std::string str(const std::string& var = "x") const;

 private:
  void normalize() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<Int> c_;
};

inline std::string IntPolynomial::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = c_.size(); i-- > 0;) {
    if (c_[i] == 0) continue;
    Int a = c_[i];
    if (first) {
      if (a < 0) os << "-";
      first = false;
    } else {
      os << (a < 0 ? " - " : " + ");
    }
    Int aa = abs(a);
    if (i == 0 || aa != 1) os << aa.str();
    if (i > 0) {
      if (aa != 1) os << "*";
      os << var;
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

inline std::ostream& operator<<(std::ostream& os, const IntPolynomial& p) {
  return os << p.str();
}

// Quotient and remainder for a monic divisor; exact over Z.
inline std::pair<IntPolynomial, IntPolynomial> divmod_monic(
    const IntPolynomial& a, const IntPolynomial& b) {
  if (!b.is_monic()) throw std::invalid_argument("divmod_monic: divisor not monic");
  std::vector<Int> r = a.coeffs();
  long db = b.degree();
  if (a.degree() < db) return {IntPolynomial::zero(), a};
  std::vector<Int> q(a.degree() - db + 1, 0);
  for (long i = a.degree(); i >= db; --i) {
    Int f = r[i];
    if (f == 0) continue;
    q[i - db] = f;
    for (long j = 0; j <= db; ++j) r[i - db + j] -= f * b.coeff(j);
  }
  return {IntPolynomial(std::move(q)), IntPolynomial(std::move(r))};
}

// Exact division a / b over Q with an integrality check; throws when b does
// not divide a in Z[x].
inline IntPolynomial div_exact(const IntPolynomial& a, const IntPolynomial& b) {
  if (b.is_zero()) throw division_by_zero_error("div_exact: division by zero");
  if (a.is_zero()) return IntPolynomial::zero();
  long da = a.degree(), db = b.degree();
  if (da < db) throw std::invalid_argument("div_exact: not divisible (degree)");
  std::vector<Rat> r(a.coeffs().begin(), a.coeffs().end());
  std::vector<Rat> q(da - db + 1, Rat(0));
  Rat lb = Rat(b.leading());
  for (long i = da; i >= db; --i) {
    Rat f = r[i] / lb;
    q[i - db] = f;
    if (f == 0) continue;
    for (long j = 0; j <= db; ++j) r[i - db + j] -= f * Rat(b.coeff(j));
  }
  for (long i = 0; i < db; ++i)
    if (r[i] != 0) throw std::invalid_argument("div_exact: not divisible");
  std::vector<Int> qi(q.size());
  for (std::size_t i = 0; i < q.size(); ++i) {
    if (!is_integer(q[i]))
      throw std::invalid_argument("div_exact: quotient not integral");
    qi[i] = num(q[i]);
  }
  return IntPolynomial(std::move(qi));
}

// Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a = q*b + r with deg r < deg b.
inline IntPolynomial pseudo_rem(const IntPolynomial& a, const IntPolynomial& b) {
  if (b.is_zero()) throw division_by_zero_error("pseudo_rem: zero divisor");
  long da = a.degree(), db = b.degree();
  if (da < db) {
    // lc(b)^(delta+1) with delta+1 = 1 by convention when no reduction happens
    return a;
  }
  std::vector<Int> r = a.coeffs();
  Int lb = b.leading();
  long e = da - db + 1;
  for (long i = da; i >= db; --i) {
    Int f = r[i];
    for (auto& x : r) x *= lb;
    --e;
    // after scaling, kill the top term using f*lb^0 scaled once
    for (long j = 0; j <= db; ++j) r[i - db + j] -= f * b.coeff(j);
    r[i] = 0;
    // recompute top index: continue loop
  }
  IntPolynomial rem{std::vector<Int>(r.begin(), r.begin() + db)};
  // fix up remaining power of lb so the exponent is exactly da-db+1
  while (e-- > 0) rem = lb * rem;
  return rem;
}

// Subresultant PRS gcd over Z[x]; result has positive leading coefficient.
inline IntPolynomial poly_gcd(IntPolynomial a, IntPolynomial b) {
  if (a.is_zero()) return b.is_zero() ? b : b.primitive_part() * abs(b.content());
  if (b.is_zero()) return a.primitive_part() * abs(a.content());
  Int cont = gcd(a.content(), b.content());
  a = a.primitive_part();
  b = b.primitive_part();
  if (a.degree() < b.degree()) std::swap(a, b);
  Int g = 1, h = 1;
  while (true) {
    long delta = a.degree() - b.degree();
    IntPolynomial r = pseudo_rem(a, b);
    if (r.is_zero()) break;
    if (r.degree() == 0) {
      b = IntPolynomial::constant(1);
      break;
    }
    a = b;
    Int div = g * pow_int(h, delta);
    {
      std::vector<Int> v = r.coeffs();
      for (auto& x : v) {
        if (x % div != 0)
          throw error("poly_gcd: subresultant division not exact");
        x /= div;
      }
      b = IntPolynomial(std::move(v));
    }
    g = a.leading();
    if (delta >= 1) {
      Int gd = pow_int(g, delta);
      Int hd = pow_int(h, delta - 1);
      if (gd % hd != 0) throw error("poly_gcd: h update not exact");
      h = gd / hd;
    }
  }
  return cont * b.primitive_part();
}

// Resultant of a and b via the subresultant PRS (Cohen, Alg. 3.3.7).
inline Int resultant(IntPolynomial a, IntPolynomial b) {
  if (a.is_zero() || b.is_zero()) return 0;
  if (a.degree() == 0) return pow_int(a.leading(), b.degree());
  if (b.degree() == 0) return pow_int(b.leading(), a.degree());
  int swap_sign = 1;
  if (a.degree() < b.degree()) {
    if ((a.degree() & 1) && (b.degree() & 1)) swap_sign = -1;
    std::swap(a, b);
  }
  Int ca = a.content(), cb = b.content();
  a = IntPolynomial(a.coeffs());
  {
    std::vector<Int> v = a.coeffs();
    for (auto& x : v) x /= ca;
    a = IntPolynomial(std::move(v));
  }
  {
    std::vector<Int> v = b.coeffs();
    for (auto& x : v) x /= cb;
    b = IntPolynomial(std::move(v));
  }
  Int g = 1, h = 1, s = 1;
  Int t = pow_int(ca, b.degree()) * pow_int(cb, a.degree());
  while (true) {
    long delta = a.degree() - b.degree();
    if ((a.degree() & 1) && (b.degree() & 1)) s = -s;
    IntPolynomial r = pseudo_rem(a, b);
    a = b;
    Int div = g * pow_int(h, delta);
    if (r.is_zero()) {
      if (a.degree() > 0) return 0;
      b = IntPolynomial::zero();
      throw error("resultant: unreachable remainder state");
    }
    {
      std::vector<Int> v = r.coeffs();
      for (auto& x : v) {
        if (x % div != 0) throw error("resultant: division not exact");
        x /= div;
      }
      b = IntPolynomial(std::move(v));
    }
    g = a.leading();
    if (delta >= 1) {
      Int gd = pow_int(g, delta), hd = pow_int(h, delta - 1);
      h = gd / hd;
    }
    if (b.degree() == 0) break;
  }
  // a nonconstant, b constant nonzero
  long d = a.degree();
  Int numretop = pow_int(b.leading(), d);
  Int denom = pow_int(h, d - 1);
  if (numretop % denom != 0) throw error("resultant: final division not exact");
  return swap_sign * s * t * (numretop / denom);
}

inline Int discriminant(const IntPolynomial& p) {
  if (p.degree() < 1) throw std::invalid_argument("discriminant: degree < 1");
  Int r = resultant(p, p.derivative());
  long n = p.degree();
  Int sign = ((n * (n - 1) / 2) % 2 == 0) ? 1 : -1;
  Int d = r / p.leading();
  return sign * d;
}

// Radical: product of the distinct irreducible factors, p / gcd(p, p').
inline IntPolynomial radical(const IntPolynomial& p) {
  if (p.degree() <= 0) return p;
  IntPolynomial g = poly_gcd(p, p.derivative());
  return div_exact(p, g).primitive_part();
}

// Clears denominators of a rational coefficient vector; returns the primitive
// integer polynomial (positive leading coefficient) proportional to it.
inline IntPolynomial from_rational_coeffs(const std::vector<Rat>& rc) {
  Int d = 1;
  for (const auto& r : rc) d = lcm(d, den(r));
  std::vector<Int> v(rc.size());
  for (std::size_t i = 0; i < rc.size(); ++i) v[i] = num(rc[i]) * (d / den(rc[i]));
  return IntPolynomial(std::move(v)).primitive_part();
}

}  // namespace delignekit
