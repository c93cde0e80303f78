#include "delignekit/matrix.hpp"
#include "delignekit/zlattice.hpp"

#include <catch2/catch_amalgamated.hpp>
#include <set>

using namespace delignekit;

namespace {

IntMat M(long r, long c, std::initializer_list<long> vals) {
  IntMat m(r, c);
  auto it = vals.begin();
  for (long i = 0; i < r; ++i)
    for (long j = 0; j < c; ++j) m.at(i, j) = *it++;
  return m;
}

// Random unimodular matrix as a product of elementary operations.
IntMat random_unimodular(DetRng& rng, long n, int steps = 20) {
  IntMat u = IntMat::identity(n);
  for (int s = 0; s < steps; ++s) {
    long i = static_cast<long>(rng.below(n));
    long j = static_cast<long>(rng.below(n));
    if (i == j) continue;
    Int k = rng.small_signed(3);
    for (long c = 0; c < n; ++c) u.at(i, c) += k * u.at(j, c);
  }
  return u;
}

IntMat random_nonsingular(DetRng& rng, long n, long range) {
  while (true) {
    IntMat m(n, n);
    for (auto& x : m.a) x = rng.small_signed(range);
    if (det_bareiss(m) != 0) return m;
  }
}

}  // namespace

TEST_CASE("determinant") {
  REQUIRE(det_bareiss(M(2, 2, {2, 0, 1, 1})) == 2);
  REQUIRE(det_bareiss(M(3, 3, {1, 2, 3, 4, 5, 6, 7, 8, 9})) == 0);
  REQUIRE(det_bareiss(IntMat::identity(5)) == 1);
}

TEST_CASE("hnf basics") {
  // rows {(2,0),(1,1)} -> rows {(1,1),(0,2)}
  IntMat h = hnf(M(2, 2, {2, 0, 1, 1}));
  REQUIRE(h == M(2, 2, {1, 1, 0, 2}));
  // idempotence
  REQUIRE(hnf(h) == h);
  REQUIRE(hnf(IntMat::identity(4)) == IntMat::identity(4));
}

TEST_CASE("hnf uniqueness under unimodular transforms, plain and modular") {
  DetRng rng(11);
  for (int iter = 0; iter < 100; ++iter) {
    long n = 2 + static_cast<long>(rng.below(5));
    IntMat a = random_nonsingular(rng, n, 6);
    IntMat u = random_unimodular(rng, n);
    IntMat h1 = hnf(a);
    IntMat h2 = hnf(u * a);
    REQUIRE(h1 == h2);
    Int d = abs(det_bareiss(a));
    IntMat h3 = hnf(a, d);
    REQUIRE(h3 == h1);
    IntMat h4 = hnf(u * a, 3 * d);  // any multiple works
    REQUIRE(h4 == h1);
    // |det| preserved by canonicalization
    Int diag = 1;
    for (long i = 0; i < n; ++i) diag *= h1.at(i, i);
    REQUIRE(diag == d);
  }
}

TEST_CASE("left kernel") {
  // rows of a 3x2 rank-2 matrix
  IntMat a = M(3, 2, {1, 0, 0, 1, 1, 1});
  IntMat k = left_kernel(a);
  REQUIRE(k.rows == 1);
  // kernel row is ±(1,1,-1)
  IntMat prod = k * a;
  for (auto& x : prod.a) REQUIRE(x == 0);
  REQUIRE(abs(k.at(0, 2)) == 1);
}

TEST_CASE("snf") {
  DetRng rng(13);
  for (int iter = 0; iter < 100; ++iter) {
    long r = 1 + static_cast<long>(rng.below(5));
    long c = 1 + static_cast<long>(rng.below(5));
    IntMat a(r, c);
    for (auto& x : a.a) x = rng.small_signed(8);
    SnfResult s = snf(a);
    REQUIRE(abs(det_bareiss(s.u)) == 1);
    REQUIRE(abs(det_bareiss(s.v)) == 1);
    IntMat prod = s.u * a * s.v;
    for (long i = 0; i < r; ++i)
      for (long j = 0; j < c; ++j) {
        if (i == j && i < static_cast<long>(s.d.size()))
          REQUIRE(prod.at(i, j) == s.d[i]);
        else
          REQUIRE(prod.at(i, j) == 0);
      }
    for (std::size_t k = 0; k + 1 < s.d.size(); ++k) {
      if (s.d[k] != 0) {
        REQUIRE(s.d[k + 1] % s.d[k] == 0);
      } else {
        REQUIRE(s.d[k + 1] == 0);
      }
      REQUIRE(s.d[k] >= 0);
    }
  }
}

TEST_CASE("charpoly") {
  IntMat c = M(2, 2, {0, -16, 1, 1});  // companion of x^2 - x + 16 (columns)
  IntPolynomial p = charpoly(c);
  REQUIRE(p == IntPolynomial({Int(16), Int(-1), Int(1)}));
  REQUIRE(charpoly(IntMat::identity(3)) ==
          IntPolynomial({Int(-1), Int(3), Int(-3), Int(1)}));
}

TEST_CASE("rational inverse and kernels") {
  RatMat a(2, 2);
  a.at(0, 0) = 2;
  a.at(0, 1) = 1;
  a.at(1, 0) = 1;
  a.at(1, 1) = 1;
  RatMat inv = rat_inverse(a);
  RatMat prod = a * inv;
  REQUIRE(prod == RatMat::identity(2));

  RatMat b(2, 3);
  b.at(0, 0) = 1;
  b.at(0, 1) = 1;
  b.at(0, 2) = 0;
  b.at(1, 0) = 0;
  b.at(1, 1) = 1;
  b.at(1, 2) = 1;
  RatMat k = right_kernel(b);
  REQUIRE(k.rows == 1);
  // b * k^T = 0
  for (long i = 0; i < b.rows; ++i) {
    Rat s = 0;
    for (long j = 0; j < b.cols; ++j) s += b.at(i, j) * k.at(0, j);
    REQUIRE(s == 0);
  }

  auto x = solve_left(b, {Rat(1), Rat(2), Rat(1)});
  REQUIRE(x);
  QVec prod2 = vec_times_mat(*x, b);
  REQUIRE(prod2 == QVec{Rat(1), Rat(2), Rat(1)});
}

TEST_CASE("lattice construction and ops") {
  ZLattice z2 = ZLattice::standard(2);
  ZLattice l = ZLattice::from_int_rows(M(2, 2, {1, 1, 0, 2}));
  REQUIRE(l.contains({Rat(2), Rat(0)}));
  REQUIRE(l.contains({Rat(1), Rat(1)}));
  REQUIRE(!l.contains({Rat(1), Rat(0)}));

  // 2Z^2 + lattice{(1,1),(0,2)} = lattice{(1,1),(0,2)}
  ZLattice two_z2 = z2.scaled(Rat(2));
  REQUIRE(two_z2.sum(l) == l);

  // a + a = a, a ∩ b ⊆ a, a ⊆ a + b
  REQUIRE(l.sum(l) == l);
  ZLattice inter = l.intersect(two_z2);
  REQUIRE(l.contains_lattice(inter));
  REQUIRE(two_z2.contains_lattice(inter));
  REQUIRE(l.sum(two_z2).contains_lattice(l));

  // index
  REQUIRE(l.index_in(z2) == Rat(2));
  REQUIRE(l.index_in(l) == Rat(1));
  REQUIRE(two_z2.index_in(z2) == Rat(4));
  REQUIRE_THROWS_AS(z2.index_in(two_z2), not_sublattice_error);

  // index multiplicativity on a chain
  REQUIRE(two_z2.index_in(l) * l.index_in(z2) == two_z2.index_in(z2));

  // dual of Z^n is Z^n; dual(dual(L)) = L
  RatMat id = RatMat::identity(2);
  REQUIRE(z2.dual(id) == z2);
  REQUIRE(l.dual(id).dual(id) == l);
}

TEST_CASE("enumerate_bounded vs brute force box search") {
  DetRng rng(17);
  for (int iter = 0; iter < 100; ++iter) {
    long n = 1 + static_cast<long>(rng.below(4));
    // random positive definite gram: A^T A + I on a random integer matrix
    IntMat a(n, n);
    for (auto& x : a.a) x = rng.small_signed(2);
    RatMat gram(n, n);
    for (long i = 0; i < n; ++i)
      for (long j = 0; j < n; ++j) {
        Rat s = (i == j) ? 1 : 0;
        for (long k = 0; k < n; ++k) s += Rat(a.at(k, i) * a.at(k, j));
        gram.at(i, j) = s;
      }
    IntMat b = random_nonsingular(rng, n, 3);
    ZLattice l = ZLattice::from_int_rows(b);
    Rat bound = Rat(4 + static_cast<long>(rng.below(8)));

    auto found = l.enumerate_bounded(gram, bound);
    std::set<std::vector<Rat>> got(found.begin(), found.end());
    REQUIRE(got.size() == found.size());  // no duplicates
    auto qform = [&](const QVec& v) {
      QVec gv = vec_times_mat(v, gram);
      return dot(v, gv);
    };
    // every reported vector satisfies the bound and lies in the lattice
    Int maxcoord = 0;
    for (const auto& v : found) {
      REQUIRE(qform(v) <= bound);
      auto coords = l.coords_of(v);
      REQUIRE(coords);
      for (const auto& c : *coords) maxcoord = std::max(maxcoord, abs(c));
      QVec neg = Rat(-1) * v;  // closure under negation
      REQUIRE(got.count(neg) == 1);
    }
    // brute force box slightly beyond the observed coordinate range: the
    // enumeration must not have missed anything inside it
    Int B = maxcoord + 2;
    std::set<std::vector<Rat>> brute;
    std::vector<Int> x(n, 0);
    auto rec = [&](auto&& self, long i) -> void {
      if (i < 0) {
        QVec v(n, Rat(0));
        for (long bi = 0; bi < n; ++bi)
          for (long j = 0; j < n; ++j)
            v[j] += Rat(x[bi] * l.basis_num().at(bi, j), l.denom());
        if (qform(v) <= bound) brute.insert(v);
        return;
      }
      for (Int t = -B; t <= B; ++t) {
        x[i] = t;
        self(self, i - 1);
      }
    };
    rec(rec, n - 1);
    REQUIRE(got == brute);
  }
}

TEST_CASE("lattice preimage") {
  // map Q^1 -> Q^2, x -> (x, 2x); preimage of Z^2 = Z * (1) ∩ (1/2)Z = ... = Z
  RatMat t(1, 2);
  t.at(0, 0) = 1;
  t.at(0, 1) = 2;
  ZLattice pre = lattice_preimage(t, ZLattice::standard(2));
  REQUIRE(pre.ambient_dim() == 1);
  REQUIRE(pre.contains({Rat(1)}));
  REQUIRE(!pre.contains({Rat(1, 2)}));

  // invertible square map: preimage = image under inverse
  RatMat s(2, 2);
  s.at(0, 0) = Rat(1, 2);
  s.at(0, 1) = 0;
  s.at(1, 0) = 0;
  s.at(1, 1) = 3;
  ZLattice pre2 = lattice_preimage(s, ZLattice::standard(2));
  REQUIRE(pre2 == ZLattice::standard(2).transformed(rat_inverse(s)));
}
