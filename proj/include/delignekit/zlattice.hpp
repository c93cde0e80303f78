#pragma once

// Full-rank integer lattices in Q^n with a canonical basis: a single
// denominator and a row-HNF integer matrix.  This is the carrier type for
// every order, fractional ideal and module in the library.

#include <optional>
#include <utility>
#include <vector>

#include "delignekit/arith.hpp"
#include "delignekit/common.hpp"
#include "delignekit/matrix.hpp"

namespace delignekit {

using QVec = std::vector<Rat>;

inline Rat dot(const QVec& a, const QVec& b) {
  Rat s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline QVec operator+(const QVec& a, const QVec& b) {
  QVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}
inline QVec operator-(const QVec& a, const QVec& b) {
  QVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}
inline QVec operator*(const Rat& s, const QVec& a) {
  QVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = s * a[i];
  return r;
}

// x * m for a row vector x.
inline QVec vec_times_mat(const QVec& x, const RatMat& m) {
  QVec r(static_cast<std::size_t>(m.cols), Rat(0));
  for (long i = 0; i < m.rows; ++i) {
    if (x[static_cast<std::size_t>(i)] == 0) continue;
    for (long j = 0; j < m.cols; ++j)
      r[static_cast<std::size_t>(j)] += x[static_cast<std::size_t>(i)] * m.at(i, j);
  }
  return r;
}

inline Rat rat_floor(const Rat& r) {
  return Rat(floor_div(num(r), den(r)));
}
inline Int rat_floor_int(const Rat& r) { return floor_div(num(r), den(r)); }
inline Int rat_round_int(const Rat& r) {
  // floor(r + 1/2)
  return floor_div(2 * num(r) + den(r), 2 * den(r));
}

class ZLattice {
 public:
  ZLattice() = default;

  static ZLattice standard(long n) {
    ZLattice l;
    l.n_ = n;
    l.basis_ = IntMat::identity(n);
    l.den_ = 1;
    return l;
  }

  // Lattice generated by the rows of `rows` / den.  Requires full rank.
  static ZLattice from_int_rows(const IntMat& rows, Int den = 1,
                                std::optional<Int> det_multiple = {}) {
    if (den <= 0) throw std::invalid_argument("ZLattice: denominator <= 0");
    ZLattice l;
    l.n_ = rows.cols;
    IntMat h = hnf(rows, std::move(det_multiple));
    if (h.rows != rows.cols) throw rank_error("ZLattice: rank deficient");
    l.basis_ = std::move(h);
    l.den_ = std::move(den);
    l.reduce();
    return l;
  }

  static ZLattice from_rat_rows(const RatMat& rows,
                                std::optional<Rat> det_hint = {}) {
    Int d = 1;
    for (const auto& x : rows.a) d = lcm(d, den(x));
    IntMat m(rows.rows, rows.cols);
    for (long i = 0; i < rows.rows; ++i)
      for (long j = 0; j < rows.cols; ++j) {
        const Rat& x = rows.at(i, j);
        m.at(i, j) = num(x) * (d / den(x));
      }
    std::optional<Int> hint;
    if (det_hint) {
      // |det| of the scaled integer lattice.
      Rat h = *det_hint * pow_rat(Rat(d), rows.cols);
      if (is_integer(h)) hint = abs(num(h));
    }
    return from_int_rows(m, d, hint);
  }

  long ambient_dim() const { return n_; }
  const IntMat& basis_num() const { return basis_; }
  const Int& denom() const { return den_; }

  QVec basis_row(long i) const {
    QVec v(static_cast<std::size_t>(n_));
    for (long j = 0; j < n_; ++j) v[static_cast<std::size_t>(j)] = Rat(basis_.at(i, j), den_);
    return v;
  }

  RatMat basis_rat() const {
    RatMat m(n_, n_);
    for (long i = 0; i < n_; ++i)
      for (long j = 0; j < n_; ++j) m.at(i, j) = Rat(basis_.at(i, j), den_);
    return m;
  }

  friend bool operator==(const ZLattice& a, const ZLattice& b) {
    return a.n_ == b.n_ && a.den_ == b.den_ && a.basis_ == b.basis_;
  }
  friend bool operator!=(const ZLattice& a, const ZLattice& b) { return !(a == b); }
  // Deterministic total order (for canonical sorting of lattice lists).
  friend bool operator<(const ZLattice& a, const ZLattice& b) {
    if (a.n_ != b.n_) return a.n_ < b.n_;
    if (a.den_ != b.den_) return a.den_ < b.den_;
    return a.basis_.a < b.basis_.a;
  }

  // |det| of the lattice.
  Rat det_abs() const {
    Int d = 1;
    for (long i = 0; i < n_; ++i) d *= basis_.at(i, i);
    return Rat(d, pow_int(den_, static_cast<unsigned long>(n_)));
  }

  // Coordinates x (rational) with x * basis/den = v; integral iff v in L.
  std::optional<std::vector<Rat>> rat_coords_of(const QVec& v) const {
    std::vector<Rat> w(static_cast<std::size_t>(n_));
    for (long j = 0; j < n_; ++j) w[static_cast<std::size_t>(j)] = v[static_cast<std::size_t>(j)] * den_;
    std::vector<Rat> x(static_cast<std::size_t>(n_), Rat(0));
    // basis_ is upper triangular with nonzero diagonal.
    for (long j = 0; j < n_; ++j) {
      Rat acc = w[static_cast<std::size_t>(j)];
      for (long i = 0; i < j; ++i) acc -= x[static_cast<std::size_t>(i)] * basis_.at(i, j);
      x[static_cast<std::size_t>(j)] = acc / basis_.at(j, j);
    }
    return x;
  }

  bool contains(const QVec& v) const {
    auto x = rat_coords_of(v);
    if (!x) return false;
    for (const auto& c : *x)
      if (!is_integer(c)) return false;
    return true;
  }

  // Integer coordinates when v lies in the lattice.
  std::optional<std::vector<Int>> coords_of(const QVec& v) const {
    auto x = rat_coords_of(v);
    if (!x) return std::nullopt;
    std::vector<Int> xi(x->size());
    for (std::size_t i = 0; i < x->size(); ++i) {
      if (!is_integer((*x)[i])) return std::nullopt;
      xi[i] = num((*x)[i]);
    }
    return xi;
  }

  bool contains_lattice(const ZLattice& sub) const {
    for (long i = 0; i < sub.n_; ++i)
      if (!contains(sub.basis_row(i))) return false;
    return true;
  }

  ZLattice sum(const ZLattice& o) const {
    if (n_ != o.n_) throw std::invalid_argument("lattice sum: dimension mismatch");
    Int d = lcm(den_, o.den_);
    IntMat rows(2 * n_, n_);
    Int f1 = d / den_, f2 = d / o.den_;
    for (long i = 0; i < n_; ++i)
      for (long j = 0; j < n_; ++j) {
        rows.at(i, j) = basis_.at(i, j) * f1;
        rows.at(n_ + i, j) = o.basis_.at(i, j) * f2;
      }
    // det of the scaled copy of *this is a multiple of the sum's det.
    Int hint = 1;
    for (long i = 0; i < n_; ++i) hint *= basis_.at(i, i);
    hint *= pow_int(f1, static_cast<unsigned long>(n_));
    ZLattice l;
    l.n_ = n_;
    l.basis_ = hnf(rows, hint);
    if (l.basis_.rows != n_) throw rank_error("lattice sum: rank lost");
    l.den_ = d;
    l.reduce();
    return l;
  }

  // Dual with respect to pairing <v,w> = v * gram * w^T; gram nondegenerate.
  ZLattice dual(const RatMat& gram) const {
    RatMat bt = basis_rat().transpose();
    RatMat gb = gram * bt;
    RatMat inv = rat_inverse(gb);  // throws rank_error if degenerate
    // rows of inv are the dual basis
    return from_rat_rows(inv);
  }

  ZLattice intersect(const ZLattice& o) const {
    if (n_ != o.n_) throw std::invalid_argument("lattice intersect: dimension mismatch");
    RatMat id = RatMat::identity(n_);
    ZLattice d1 = dual(id), d2 = o.dual(id);
    return d1.sum(d2).dual(id);
  }

  // [super : this] for this contained in super.
  Rat index_in(const ZLattice& super) const {
    if (!super.contains_lattice(*this))
      throw not_sublattice_error("index_in: not a sublattice");
    return det_abs() / super.det_abs();
  }

  ZLattice scaled(const Rat& s) const {
    if (s == 0) throw std::invalid_argument("lattice scale by zero");
    ZLattice l;
    l.n_ = n_;
    Rat sa = s < 0 ? -s : s;
    l.basis_ = basis_;
    for (auto& x : l.basis_.a) x *= num(sa);
    l.den_ = den_ * den(sa);
    l.basis_ = hnf(l.basis_);
    l.reduce();
    return l;
  }

  // Image under an invertible linear map x -> x * m (columns = ambient).
  ZLattice transformed(const RatMat& m) const {
    RatMat rows = basis_rat() * m;
    return from_rat_rows(rows);
  }

  // All lattice vectors v with v * gram * v^T <= bound (gram positive
  // definite), including 0; closed under negation.
  std::vector<QVec> enumerate_bounded(const RatMat& gram, const Rat& bound,
                                      long max_count = 50000000) const {
    // Gram matrix of the basis.
    RatMat b = basis_rat();
    RatMat g = b * gram * b.transpose();
    const long n = n_;
    // LDL^T with unit lower L; reject non-positive pivots.
    std::vector<Rat> dvec(static_cast<std::size_t>(n));
    RatMat l = RatMat::identity(n);
    for (long j = 0; j < n; ++j) {
      Rat dj = g.at(j, j);
      for (long k = 0; k < j; ++k)
        dj -= dvec[static_cast<std::size_t>(k)] * l.at(j, k) * l.at(j, k);
      if (dj <= 0)
        throw not_positive_definite_error("enumerate_bounded: form not positive definite");
      dvec[static_cast<std::size_t>(j)] = dj;
      for (long i = j + 1; i < n; ++i) {
        Rat x = g.at(i, j);
        for (long k = 0; k < j; ++k)
          x -= dvec[static_cast<std::size_t>(k)] * l.at(i, k) * l.at(j, k);
        l.at(i, j) = x / dj;
      }
    }
    // Q(x) = sum_i d_i (x_i + sum_{j>i} c_{ij} x_j)^2 with c_ij = l(j,i).
    std::vector<QVec> out;
    std::vector<Int> x(static_cast<std::size_t>(n), 0);
    long count = 0;
    auto emit = [&]() {
      QVec v(static_cast<std::size_t>(n), Rat(0));
      for (long i = 0; i < n; ++i) {
        if (x[static_cast<std::size_t>(i)] == 0) continue;
        for (long j = 0; j < n; ++j)
          v[static_cast<std::size_t>(j)] += Rat(x[static_cast<std::size_t>(i)] * basis_.at(i, j), den_);
      }
      out.push_back(std::move(v));
      if (++count > max_count)
        throw budget_exceeded_error("enumerate_bounded: too many vectors");
    };
    // Recursive descent from coordinate n-1 to 0.
    auto rec = [&](auto&& self, long i, const Rat& budget) -> void {
      if (i < 0) {
        emit();
        return;
      }
      Rat center = 0;
      for (long j = i + 1; j < n; ++j)
        center += l.at(j, i) * Rat(x[static_cast<std::size_t>(j)]);
      const Rat& di = dvec[static_cast<std::size_t>(i)];
      Int start = rat_round_int(-center);
      // upward sweep
      for (Int t = start;; ++t) {
        Rat term = di * (Rat(t) + center) * (Rat(t) + center);
        if (term > budget) break;
        x[static_cast<std::size_t>(i)] = t;
        self(self, i - 1, budget - term);
      }
      // downward sweep
      for (Int t = start - 1;; --t) {
        Rat term = di * (Rat(t) + center) * (Rat(t) + center);
        if (term > budget) break;
        x[static_cast<std::size_t>(i)] = t;
        self(self, i - 1, budget - term);
      }
      x[static_cast<std::size_t>(i)] = 0;
    };
    if (bound >= 0) rec(rec, n - 1, bound);
    return out;
  }

 private:
  void reduce() {
    Int g = den_;
    for (const auto& x : basis_.a) g = gcd(g, x);
    if (g > 1) {
      for (auto& x : basis_.a) x /= g;
      den_ /= g;
    }
  }

  long n_ = 0;
  IntMat basis_;
  Int den_ = 1;
};

// Preimage lattice { x in Q^r : x * t in L } for a rank-r map t (r x n).
inline ZLattice lattice_preimage(const RatMat& t, const ZLattice& l) {
  const long r = t.rows, n = t.cols;
  if (n != l.ambient_dim())
    throw std::invalid_argument("lattice_preimage: dimension mismatch");
  // Rows v of Q^n lying in rowspan(t) are exactly those with v * kern^T = 0.
  RatMat kern = right_kernel(t);  // rows w with t * w^T = 0
  ZLattice inter;  // L ∩ rowspan(t)
  if (kern.rows == 0) {
    inter = l;
  } else {
    // Integer matrix M = B * kern_z^T; kernel rows y give y*B in rowspan(t).
    Int d = 1;
    for (const auto& x : kern.a) d = lcm(d, den(x));
    IntMat kz(kern.rows, kern.cols);
    for (long i = 0; i < kern.rows; ++i)
      for (long j = 0; j < kern.cols; ++j)
        kz.at(i, j) = num(kern.at(i, j)) * (d / den(kern.at(i, j)));
    IntMat m = l.basis_num() * kz.transpose();
    IntMat y = left_kernel(m);
    if (y.rows != r) throw rank_error("lattice_preimage: unexpected rank");
    RatMat rows(r, n);
    for (long i = 0; i < r; ++i) {
      QVec acc(static_cast<std::size_t>(n), Rat(0));
      for (long k = 0; k < n; ++k) {
        if (y.at(i, k) == 0) continue;
        for (long j = 0; j < n; ++j)
          acc[static_cast<std::size_t>(j)] += Rat(y.at(i, k) * l.basis_num().at(k, j), l.denom());
      }
      for (long j = 0; j < n; ++j) rows.at(i, j) = acc[static_cast<std::size_t>(j)];
    }
    // Solve x * t = row for each row.
    RatMat xs(r, r);
    for (long i = 0; i < r; ++i) {
      QVec row(static_cast<std::size_t>(n));
      for (long j = 0; j < n; ++j) row[static_cast<std::size_t>(j)] = rows.at(i, j);
      auto x = solve_left(t, row);
      if (!x) throw error("lattice_preimage: inconsistent system");
      for (long j = 0; j < r; ++j) xs.at(i, j) = (*x)[static_cast<std::size_t>(j)];
    }
    return ZLattice::from_rat_rows(xs);
  }
  // Full-span case: solve directly.
  RatMat xs(r, r);
  for (long i = 0; i < r; ++i) {
    QVec row = inter.basis_row(i);
    auto x = solve_left(t, row);
    if (!x) throw error("lattice_preimage: inconsistent system");
    for (long j = 0; j < r; ++j) xs.at(i, j) = (*x)[static_cast<std::size_t>(j)];
  }
  return ZLattice::from_rat_rows(xs);
}

}  // namespace delignekit
