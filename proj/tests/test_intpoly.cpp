#include "delignekit/intpoly.hpp"

#include <catch2/catch_amalgamated.hpp>

#include "delignekit/arith.hpp"
#include "delignekit/matrix.hpp"

using namespace delignekit;

namespace {

IntPolynomial P(std::initializer_list<long> cs) {
  std::vector<Int> v;
  for (long c : cs) v.push_back(c);
  return IntPolynomial(std::move(v));
}

// Independent resultant oracle: determinant of the Sylvester matrix.
Int sylvester_resultant(const IntPolynomial& a, const IntPolynomial& b) {
  long m = a.degree(), n = b.degree();
  if (m < 0 || n < 0) return 0;
  if (m == 0 && n == 0) return 1;
  IntMat s(m + n, m + n);
  for (long i = 0; i < n; ++i)
    for (long j = 0; j <= m; ++j) s.at(i, i + j) = a.coeff(m - j);
  for (long i = 0; i < m; ++i)
    for (long j = 0; j <= n; ++j) s.at(n + i, i + j) = b.coeff(n - j);
  return det_bareiss(s);
}

IntPolynomial random_poly(DetRng& rng, long deg, long coeff_range) {
  std::vector<Int> v(deg + 1);
  for (long i = 0; i <= deg; ++i) v[i] = rng.small_signed(coeff_range);
  if (v[deg] == 0) v[deg] = 1;
  return IntPolynomial(std::move(v));
}

}  // namespace

TEST_CASE("basic polynomial arithmetic") {
  IntPolynomial p = P({16, -1, 1});  // x^2 - x + 16
  REQUIRE(p.degree() == 2);
  REQUIRE(p.is_monic());
  REQUIRE(p.eval(Int(2)) == 18);
  REQUIRE(p.str() == "x^2 - x + 16");

  IntPolynomial q = P({-2, 1});  // x - 2
  REQUIRE((p * q).eval(Int(3)) == p.eval(Int(3)) * q.eval(Int(3)));
  REQUIRE(p + (-p) == IntPolynomial::zero());
  REQUIRE(P({0}).is_zero());
  REQUIRE(IntPolynomial::monomial(3).degree() == 3);
}

TEST_CASE("division") {
  IntPolynomial p = P({-6, 11, -6, 1});  // (x-1)(x-2)(x-3)
  auto [q, r] = divmod_monic(p, P({-2, 1}));
  REQUIRE(r.is_zero());
  REQUIRE(q == P({3, -4, 1}));
  REQUIRE(div_exact(p, P({3, -4, 1})) == P({-2, 1}));
  REQUIRE_THROWS_AS(div_exact(p, P({1, 1})), std::invalid_argument);
}

TEST_CASE("gcd and radical") {
  IntPolynomial a = P({-1, 0, 1});       // x^2-1
  IntPolynomial b = P({1, 2, 1});        // (x+1)^2
  REQUIRE(poly_gcd(a, b) == P({1, 1}));  // x+1

  IntPolynomial g = P({64, 15, 1});  // x^2+15x+64
  IntPolynomial h6 = g.pow(3);
  REQUIRE(radical(h6) == g);
  REQUIRE(poly_gcd(g, g.derivative()).degree() == 0);

  // gcd of coprime polynomials is constant
  REQUIRE(poly_gcd(P({1, 0, 1}), P({-2, 0, 1})).degree() == 0);

  // content is carried
  REQUIRE(poly_gcd(P({2, 2}), P({4, 0, 4})) == P({2}));
}

TEST_CASE("resultant matches Sylvester determinant") {
  DetRng rng(7);
  for (int iter = 0; iter < 200; ++iter) {
    long da = 1 + static_cast<long>(rng.below(5));
    long db = 1 + static_cast<long>(rng.below(5));
    IntPolynomial a = random_poly(rng, da, 8);
    IntPolynomial b = random_poly(rng, db, 8);
    CAPTURE(a.str(), b.str());
    REQUIRE(resultant(a, b) == sylvester_resultant(a, b));
  }
}

TEST_CASE("resultant special values") {
  // Res(x^2-2, x^2-3) = (sqrt2^2-3)(−sqrt2^2−3)... = (2-3)^2 = 1
  REQUIRE(resultant(P({-2, 0, 1}), P({-3, 0, 1})) == 1);
  // Res over shared root is zero
  REQUIRE(resultant(P({-1, 1}) * P({1, 1}), P({-1, 1}) * P({2, 1})) == 0);
  // discriminant of x^2+15x+64 is 225-256 = -31
  REQUIRE(discriminant(P({64, 15, 1})) == -31);
  // discriminant of x^2-x+16 is 1-64 = -63
  REQUIRE(discriminant(P({16, -1, 1})) == -63);
  // discriminant of ax^2+bx+c is b^2-4ac
  REQUIRE(discriminant(P({7, 3, 2})) == 9 - 4 * 2 * 7);
}

TEST_CASE("rational coefficient clearing") {
  std::vector<Rat> rc{Rat(1, 2), Rat(0), Rat(1)};
  REQUIRE(from_rational_coeffs(rc) == P({1, 0, 2}));
}

TEST_CASE("integer helpers") {
  REQUIRE(pow_int(3, 5) == 243);
  REQUIRE(isqrt(Int(63)) == 7);
  REQUIRE(is_perfect_square(Int(144)));
  REQUIRE(!is_perfect_square(Int(63)));
  REQUIRE(binomial(6, 3) == 20);
  REQUIRE(is_prime(Int(103)));
  REQUIRE(!is_prime(Int(1)));
  REQUIRE(!is_prime(Int(561)));  // Carmichael
  auto f = factorize(Int(262144));
  REQUIRE(f.size() == 1);
  REQUIRE(f.at(2) == 18);
  auto big = factorize(Int("123456789012345678901"));
  Int prod = 1;
  for (auto& [p, e] : big) {
    REQUIRE(is_prime(p));
    prod *= pow_int(p, e);
  }
  REQUIRE(prod == Int("123456789012345678901"));
  auto pp = prime_power_split(Int(16));
  REQUIRE(pp);
  REQUIRE(pp->first == 2);
  REQUIRE(pp->second == 4);
  REQUIRE(!prime_power_split(Int(12)));
  Int u, v;
  REQUIRE(xgcd(Int(12), Int(18), u, v) == 6);
  REQUIRE(u * 12 + v * 18 == 6);
  REQUIRE(floor_div(Int(-7), Int(2)) == -4);
}
