#pragma once

// Dense exact matrices over Z and Q, plus the normal forms the lattice
// layer is built on: row-style Hermite normal form (with an optional
// modular-determinant variant to control entry growth), Smith normal form
// with transformations, fraction-free determinants, and the
// Faddeev-LeVerrier characteristic polynomial.

#include <optional>
#include <utility>
#include <vector>

#include "delignekit/arith.hpp"
#include "delignekit/common.hpp"
#include "delignekit/intpoly.hpp"

namespace delignekit {

struct IntMat {
  long rows = 0, cols = 0;
  std::vector<Int> a;

  IntMat() = default;
  IntMat(long r, long c) : rows(r), cols(c), a(static_cast<std::size_t>(r * c), 0) {}

  Int& at(long i, long j) { return a[static_cast<std::size_t>(i * cols + j)]; }
  const Int& at(long i, long j) const {
    return a[static_cast<std::size_t>(i * cols + j)];
  }

  static IntMat identity(long n) {
    IntMat m(n, n);
    for (long i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }

  friend bool operator==(const IntMat& x, const IntMat& y) {
    return x.rows == y.rows && x.cols == y.cols && x.a == y.a;
  }

  IntMat transpose() const {
    IntMat t(cols, rows);
    for (long i = 0; i < rows; ++i)
      for (long j = 0; j < cols; ++j) t.at(j, i) = at(i, j);
    return t;
  }

  friend IntMat operator*(const IntMat& x, const IntMat& y) {
    if (x.cols != y.rows) throw std::invalid_argument("IntMat: size mismatch");
    IntMat z(x.rows, y.cols);
    for (long i = 0; i < x.rows; ++i)
      for (long k = 0; k < x.cols; ++k) {
        const Int& xik = x.at(i, k);
        if (xik == 0) continue;
        for (long j = 0; j < y.cols; ++j) z.at(i, j) += xik * y.at(k, j);
      }
    return z;
  }

  friend IntMat operator-(const IntMat& x, const IntMat& y) {
    if (x.rows != y.rows || x.cols != y.cols)
      throw std::invalid_argument("IntMat: size mismatch");
    IntMat z(x.rows, x.cols);
    for (std::size_t i = 0; i < z.a.size(); ++i) z.a[i] = x.a[i] - y.a[i];
    return z;
  }
  friend IntMat operator+(const IntMat& x, const IntMat& y) {
    if (x.rows != y.rows || x.cols != y.cols)
      throw std::invalid_argument("IntMat: size mismatch");
    IntMat z(x.rows, x.cols);
    for (std::size_t i = 0; i < z.a.size(); ++i) z.a[i] = x.a[i] + y.a[i];
    return z;
  }
  friend IntMat operator*(const Int& s, const IntMat& y) {
    IntMat z = y;
    for (auto& v : z.a) v *= s;
    return z;
  }
};

struct RatMat {
  long rows = 0, cols = 0;
  std::vector<Rat> a;

  RatMat() = default;
  RatMat(long r, long c) : rows(r), cols(c), a(static_cast<std::size_t>(r * c), 0) {}
  explicit RatMat(const IntMat& m) : rows(m.rows), cols(m.cols), a(m.a.size()) {
    for (std::size_t i = 0; i < m.a.size(); ++i) a[i] = Rat(m.a[i]);
  }

  Rat& at(long i, long j) { return a[static_cast<std::size_t>(i * cols + j)]; }
  const Rat& at(long i, long j) const {
    return a[static_cast<std::size_t>(i * cols + j)];
  }

  static RatMat identity(long n) {
    RatMat m(n, n);
    for (long i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }

  friend bool operator==(const RatMat& x, const RatMat& y) {
    return x.rows == y.rows && x.cols == y.cols && x.a == y.a;
  }

  RatMat transpose() const {
    RatMat t(cols, rows);
    for (long i = 0; i < rows; ++i)
      for (long j = 0; j < cols; ++j) t.at(j, i) = at(i, j);
    return t;
  }

  friend RatMat operator*(const RatMat& x, const RatMat& y) {
    if (x.cols != y.rows) throw std::invalid_argument("RatMat: size mismatch");
    RatMat z(x.rows, y.cols);
    for (long i = 0; i < x.rows; ++i)
      for (long k = 0; k < x.cols; ++k) {
        const Rat& xik = x.at(i, k);
        if (xik == 0) continue;
        for (long j = 0; j < y.cols; ++j) z.at(i, j) += xik * y.at(k, j);
      }
    return z;
  }
};

// Fraction-free determinant (Bareiss).
inline Int det_bareiss(IntMat m) {
  if (m.rows != m.cols) throw std::invalid_argument("det: not square");
  long n = m.rows;
  if (n == 0) return 1;
  Int sign = 1, prev = 1;
  for (long k = 0; k < n - 1; ++k) {
    if (m.at(k, k) == 0) {
      long p = -1;
      for (long i = k + 1; i < n; ++i)
        if (m.at(i, k) != 0) {
          p = i;
          break;
        }
      if (p < 0) return 0;
      for (long j = 0; j < n; ++j) std::swap(m.at(k, j), m.at(p, j));
      sign = -sign;
    }
    for (long i = k + 1; i < n; ++i)
      for (long j = k + 1; j < n; ++j) {
        m.at(i, j) = (m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j)) / prev;
      }
    prev = m.at(k, k);
  }
  return sign * m.at(n - 1, n - 1);
}

namespace detail {

// Shared HNF worker.  When `modulus` is set, all entries are kept reduced
// into [0, modulus); the caller must guarantee modulus * e_i lies in the row
// lattice (stacking modulus * I achieves that).
inline IntMat hnf_worker(IntMat h, const std::optional<Int>& modulus,
                         IntMat* transform) {
  const long m = h.rows, n = h.cols;
  IntMat u;
  if (transform) u = IntMat::identity(m);
  auto reduce_entry = [&](long i, long j) {
    if (modulus) h.at(i, j) = mod_positive(h.at(i, j), *modulus);
  };
  auto reduce_row = [&](long i) {
    if (modulus)
      for (long j = 0; j < n; ++j) reduce_entry(i, j);
  };
  long row = 0;
  for (long col = 0; col < n && row < m; ++col) {
    long p = -1;
    for (long i = row; i < m; ++i)
      if (h.at(i, col) != 0) {
        p = i;
        break;
      }
    if (p < 0) continue;
    if (p != row) {
      for (long j = 0; j < n; ++j) std::swap(h.at(p, j), h.at(row, j));
      if (transform)
        for (long j = 0; j < m; ++j) std::swap(u.at(p, j), u.at(row, j));
    }
    for (long i = row + 1; i < m; ++i) {
      if (h.at(i, col) == 0) continue;
      Int x, y;
      Int g = xgcd(h.at(row, col), h.at(i, col), x, y);
      Int ar = h.at(row, col) / g, ai = h.at(i, col) / g;
      for (long j = 0; j < n; ++j) {
        Int t = x * h.at(row, j) + y * h.at(i, j);
        h.at(i, j) = ar * h.at(i, j) - ai * h.at(row, j);
        h.at(row, j) = t;
        reduce_entry(i, j);
      }
      if (modulus) reduce_row(row);
      if (transform)
        for (long j = 0; j < m; ++j) {
          Int t = x * u.at(row, j) + y * u.at(i, j);
          u.at(i, j) = ar * u.at(i, j) - ai * u.at(row, j);
          u.at(row, j) = t;
        }
    }
    // The mod reduction can zero the pivot; retry this column.
    if (h.at(row, col) == 0) {
      --col;
      continue;
    }
    if (h.at(row, col) < 0) {
      for (long j = 0; j < n; ++j) h.at(row, j) = -h.at(row, j);
      if (transform)
        for (long j = 0; j < m; ++j) u.at(row, j) = -u.at(row, j);
    }
    for (long i = 0; i < row; ++i) {
      Int q = floor_div(h.at(i, col), h.at(row, col));
      if (q == 0) continue;
      for (long j = 0; j < n; ++j) h.at(i, j) -= q * h.at(row, j);
      if (transform)
        for (long j = 0; j < m; ++j) u.at(i, j) -= q * u.at(row, j);
    }
    ++row;
  }
  if (transform) *transform = u;
  h.rows = row;  // callers may keep the transform to recover kernel rows
  h.a.resize(static_cast<std::size_t>(row * n));
  if (transform) {
    // keep full transform; caller pairs rows of u beyond `row` with kernel
    transform->rows = m;
  }
  return h;
}

}  // namespace detail

// Row-style Hermite normal form of the row lattice of `m`: upper echelon,
// positive pivots, entries above each pivot reduced into [0, pivot).
// Zero rows are dropped; the result has rank(m) rows.
//
// If det_multiple is given (a nonzero multiple of the determinant of the
// full-rank row lattice in Z^cols), the computation runs modulo it, which
// keeps every intermediate entry below |det_multiple|.
inline IntMat hnf(const IntMat& m, std::optional<Int> det_multiple = {}) {
  if (det_multiple) {
    Int d = abs(*det_multiple);
    if (d == 0) throw std::invalid_argument("hnf: zero determinant hint");
    IntMat stacked(m.rows + m.cols, m.cols);
    for (long i = 0; i < m.rows; ++i)
      for (long j = 0; j < m.cols; ++j) stacked.at(i, j) = mod_positive(m.at(i, j), d);
    for (long j = 0; j < m.cols; ++j) stacked.at(m.rows + j, j) = d;
    IntMat h = detail::hnf_worker(std::move(stacked), d, nullptr);
    if (h.rows != m.cols)
      throw rank_error("hnf: modular computation lost rank");
    return h;
  }
  return detail::hnf_worker(m, std::nullopt, nullptr);
}

// HNF together with a unimodular U (rows x rows) such that the first
// hnf.rows rows of U*m equal the HNF and the remaining rows of U span the
// left kernel of m.
struct HnfTransform {
  IntMat h;
  IntMat u;
};

inline HnfTransform hnf_with_transform(const IntMat& m) {
  IntMat u;
  IntMat h = detail::hnf_worker(m, std::nullopt, &u);
  return {std::move(h), std::move(u)};
}

// Basis of { x : x * m = 0 } as rows; saturated (a Z-basis of the kernel).
inline IntMat left_kernel(const IntMat& m) {
  HnfTransform t = hnf_with_transform(m);
  long rank = t.h.rows;
  IntMat k(m.rows - rank, m.rows);
  for (long i = rank; i < m.rows; ++i)
    for (long j = 0; j < m.rows; ++j) k.at(i - rank, j) = t.u.at(i, j);
  return k;
}

// Smith normal form: returns diagonal d (with d_i | d_{i+1}) and unimodular
// U (m x m), V (n x n) with U * A * V = diag(d).
struct SnfResult {
  std::vector<Int> d;
  IntMat u, v;
};

inline SnfResult snf(IntMat a) {
  const long m = a.rows, n = a.cols;
  IntMat u = IntMat::identity(m), v = IntMat::identity(n);
  const long t = std::min(m, n);

  auto diagonalize = [&]() {
    for (long k = 0; k < t; ++k) {
      long pi = -1, pj = -1;
      for (long i = k; i < m && pi < 0; ++i)
        for (long j = k; j < n; ++j)
          if (a.at(i, j) != 0) {
            pi = i;
            pj = j;
            break;
          }
      if (pi < 0) return;
      if (pi != k) {
        for (long j = 0; j < n; ++j) std::swap(a.at(pi, j), a.at(k, j));
        for (long j = 0; j < m; ++j) std::swap(u.at(pi, j), u.at(k, j));
      }
      if (pj != k) {
        for (long i = 0; i < m; ++i) std::swap(a.at(i, pj), a.at(i, k));
        for (long i = 0; i < n; ++i) std::swap(v.at(i, pj), v.at(i, k));
      }
      bool again = true;
      while (again) {
        again = false;
        for (long i = k + 1; i < m; ++i) {
          if (a.at(i, k) == 0) continue;
          Int x, y;
          Int g = xgcd(a.at(k, k), a.at(i, k), x, y);
          Int ak = a.at(k, k) / g, ai = a.at(i, k) / g;
          for (long j = 0; j < n; ++j) {
            Int tt = x * a.at(k, j) + y * a.at(i, j);
            a.at(i, j) = ak * a.at(i, j) - ai * a.at(k, j);
            a.at(k, j) = tt;
          }
          for (long j = 0; j < m; ++j) {
            Int tt = x * u.at(k, j) + y * u.at(i, j);
            u.at(i, j) = ak * u.at(i, j) - ai * u.at(k, j);
            u.at(k, j) = tt;
          }
        }
        for (long j = k + 1; j < n; ++j) {
          if (a.at(k, j) == 0) continue;
          Int x, y;
          Int g = xgcd(a.at(k, k), a.at(k, j), x, y);
          Int ak = a.at(k, k) / g, aj = a.at(k, j) / g;
          for (long i = 0; i < m; ++i) {
            Int tt = x * a.at(i, k) + y * a.at(i, j);
            a.at(i, j) = ak * a.at(i, j) - aj * a.at(i, k);
            a.at(i, k) = tt;
          }
          for (long i = 0; i < n; ++i) {
            Int tt = x * v.at(i, k) + y * v.at(i, j);
            v.at(i, j) = ak * v.at(i, j) - aj * v.at(i, k);
            v.at(i, k) = tt;
          }
          for (long i = k + 1; i < m; ++i)
            if (a.at(i, k) != 0) {
              again = true;
              break;
            }
          if (again) break;
        }
      }
    }
  };

  diagonalize();
  // Restore the divisibility chain with 2x2 block fixes that keep the
  // matrix diagonal: diag(x,y) -> diag(gcd, lcm).
  while (true) {
    long bk = -1, bl = -1;
    for (long k = 0; k < t && bk < 0; ++k)
      for (long l = k + 1; l < t; ++l) {
        const Int& x = a.at(k, k);
        const Int& y = a.at(l, l);
        if ((x == 0 && y != 0) || (x != 0 && y % x != 0)) {
          bk = k;
          bl = l;
          break;
        }
      }
    if (bk < 0) break;
    long k = bk, l = bl;
    if (a.at(k, k) == 0) {
      // move the nonzero entry forward; zeros trail
      for (long j = 0; j < n; ++j) std::swap(a.at(k, j), a.at(l, j));
      for (long j = 0; j < m; ++j) std::swap(u.at(k, j), u.at(l, j));
      for (long i = 0; i < m; ++i) std::swap(a.at(i, k), a.at(i, l));
      for (long i = 0; i < n; ++i) std::swap(v.at(i, k), v.at(i, l));
      continue;
    }
    Int x = a.at(k, k), y = a.at(l, l);
    Int uu, vv;
    Int g = xgcd(x, y, uu, vv);
    // row k += row l
    for (long j = 0; j < n; ++j) a.at(k, j) += a.at(l, j);
    for (long j = 0; j < m; ++j) u.at(k, j) += u.at(l, j);
    // col ops: c_k' = uu*c_k + vv*c_l ; c_l' = -(y/g)*c_k + (x/g)*c_l
    Int yg = y / g, xg = x / g;
    for (long i = 0; i < m; ++i) {
      Int ck = a.at(i, k), cl = a.at(i, l);
      a.at(i, k) = uu * ck + vv * cl;
      a.at(i, l) = -yg * ck + xg * cl;
    }
    for (long i = 0; i < n; ++i) {
      Int ck = v.at(i, k), cl = v.at(i, l);
      v.at(i, k) = uu * ck + vv * cl;
      v.at(i, l) = -yg * ck + xg * cl;
    }
    // row l -= (vv*y/g) * row k clears the fill-in
    Int f = vv * y / g;
    for (long j = 0; j < n; ++j) a.at(l, j) -= f * a.at(k, j);
    for (long j = 0; j < m; ++j) u.at(l, j) -= f * u.at(k, j);
  }
  for (long k = 0; k < t; ++k) {
    if (a.at(k, k) < 0) {
      for (long j = 0; j < n; ++j) a.at(k, j) = -a.at(k, j);
      for (long j = 0; j < m; ++j) u.at(k, j) = -u.at(k, j);
    }
  }
  std::vector<Int> d(static_cast<std::size_t>(t));
  for (long k = 0; k < t; ++k) d[static_cast<std::size_t>(k)] = a.at(k, k);
  return {std::move(d), std::move(u), std::move(v)};
}

// Gauss-Jordan inverse; throws rank_error when singular.
inline RatMat rat_inverse(RatMat m) {
  if (m.rows != m.cols) throw std::invalid_argument("rat_inverse: not square");
  long n = m.rows;
  RatMat inv = RatMat::identity(n);
  for (long k = 0; k < n; ++k) {
    long p = -1;
    for (long i = k; i < n; ++i)
      if (m.at(i, k) != 0) {
        p = i;
        break;
      }
    if (p < 0) throw rank_error("rat_inverse: singular matrix");
    if (p != k)
      for (long j = 0; j < n; ++j) {
        std::swap(m.at(p, j), m.at(k, j));
        std::swap(inv.at(p, j), inv.at(k, j));
      }
    Rat piv = m.at(k, k);
    for (long j = 0; j < n; ++j) {
      m.at(k, j) /= piv;
      inv.at(k, j) /= piv;
    }
    for (long i = 0; i < n; ++i) {
      if (i == k || m.at(i, k) == 0) continue;
      Rat f = m.at(i, k);
      for (long j = 0; j < n; ++j) {
        m.at(i, j) -= f * m.at(k, j);
        inv.at(i, j) -= f * inv.at(k, j);
      }
    }
  }
  return inv;
}

// Reduced row echelon form in place; returns pivot columns.
inline std::vector<long> rref(RatMat& m) {
  std::vector<long> pivots;
  long row = 0;
  for (long col = 0; col < m.cols && row < m.rows; ++col) {
    long p = -1;
    for (long i = row; i < m.rows; ++i)
      if (m.at(i, col) != 0) {
        p = i;
        break;
      }
    if (p < 0) continue;
    if (p != row)
      for (long j = 0; j < m.cols; ++j) std::swap(m.at(p, j), m.at(row, j));
    Rat piv = m.at(row, col);
    for (long j = 0; j < m.cols; ++j) m.at(row, j) /= piv;
    for (long i = 0; i < m.rows; ++i) {
      if (i == row || m.at(i, col) == 0) continue;
      Rat f = m.at(i, col);
      for (long j = 0; j < m.cols; ++j) m.at(i, j) -= f * m.at(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

// Solves x * a = b for a single row vector b; empty optional when
// inconsistent.  If the solution is not unique an arbitrary one is returned.
inline std::optional<std::vector<Rat>> solve_left(const RatMat& a,
                                                  const std::vector<Rat>& b) {
  if (static_cast<long>(b.size()) != a.cols)
    throw std::invalid_argument("solve_left: size mismatch");
  // Transpose to a standard column problem: a^T x^T = b^T.
  RatMat aug(a.cols, a.rows + 1);
  for (long i = 0; i < a.cols; ++i) {
    for (long j = 0; j < a.rows; ++j) aug.at(i, j) = a.at(j, i);
    aug.at(i, a.rows) = b[static_cast<std::size_t>(i)];
  }
  std::vector<long> piv = rref(aug);
  std::vector<Rat> x(static_cast<std::size_t>(a.rows), Rat(0));
  for (std::size_t r = 0; r < piv.size(); ++r) {
    if (piv[r] == a.rows) return std::nullopt;  // inconsistent
    x[static_cast<std::size_t>(piv[r])] = aug.at(static_cast<long>(r), a.rows);
  }
  return x;
}

// Right null space of a (rational): columns x with a * x = 0, returned as
// rows of the result.
inline RatMat right_kernel(const RatMat& a) {
  RatMat m = a;
  std::vector<long> piv = rref(m);
  std::vector<bool> is_pivot(static_cast<std::size_t>(a.cols), false);
  for (long c : piv) is_pivot[static_cast<std::size_t>(c)] = true;
  long free_count = a.cols - static_cast<long>(piv.size());
  RatMat k(free_count, a.cols);
  long kr = 0;
  for (long c = 0; c < a.cols; ++c) {
    if (is_pivot[static_cast<std::size_t>(c)]) continue;
    k.at(kr, c) = 1;
    for (std::size_t r = 0; r < piv.size(); ++r) k.at(kr, piv[r]) = -m.at(static_cast<long>(r), c);
    ++kr;
  }
  return k;
}

// Characteristic polynomial of a square integer matrix (Faddeev-LeVerrier);
// monic of degree n, ascending coefficients.
inline IntPolynomial charpoly(const IntMat& a) {
  if (a.rows != a.cols) throw std::invalid_argument("charpoly: not square");
  long n = a.rows;
  std::vector<Int> c(static_cast<std::size_t>(n) + 1, 0);
  c[static_cast<std::size_t>(n)] = 1;
  IntMat m = a;
  Int ck;
  for (long k = 1; k <= n; ++k) {
    if (k > 1) {
      // m <- a * (m + c_{k-1} I)
      IntMat t = m;
      for (long i = 0; i < n; ++i) t.at(i, i) += ck;
      m = a * t;
    }
    Int tr = 0;
    for (long i = 0; i < n; ++i) tr += m.at(i, i);
    if (tr % k != 0) throw error("charpoly: trace divisibility failed");
    ck = -tr / k;
    c[static_cast<std::size_t>(n - k)] = ck;
  }
  return IntPolynomial(std::move(c));
}

}  // namespace delignekit
