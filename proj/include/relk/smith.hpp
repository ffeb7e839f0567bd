#pragma once

/**
 * @file smith.hpp
 * @brief Dense integer matrices and the Smith normal form.
 *
 * smith_normal_form returns unimodular U, V (and their inverses) with
 * U * M * V = D, D diagonal with d1 | d2 | ... and zeros trailing. Every
 * lattice computation in the library (subgroup presentations, quotients,
 * kernels, homology) is phrased through this one routine.
 */

#include "relk/integer.hpp"

#include <algorithm>
#include <optional>
#include <sstream>
#include <utility>
#include <vector>

namespace relk {

class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static IntMatrix identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  /// Builds a matrix whose columns are the given vectors (all of length rows).
  static IntMatrix from_columns(std::size_t rows, const std::vector<std::vector<Integer>>& cols) {
    IntMatrix m(rows, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
      if (cols[j].size() != rows) throw Error("from_columns: column length mismatch");
      for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
    }
    return m;
  }

  static IntMatrix diagonal(const std::vector<Integer>& d) {
    IntMatrix m(d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Integer& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Integer& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::vector<Integer> column(std::size_t j) const {
    std::vector<Integer> c(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
    return c;
  }

  /// Horizontal concatenation [this | other].
  IntMatrix hcat(const IntMatrix& other) const {
    if (other.rows_ != rows_) throw Error("hcat: row mismatch");
    IntMatrix m(rows_, cols_ + other.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) m(i, j) = (*this)(i, j);
      for (std::size_t j = 0; j < other.cols_; ++j) m(i, cols_ + j) = other(i, j);
    }
    return m;
  }

  IntMatrix operator*(const IntMatrix& o) const {
    if (cols_ != o.rows_) throw Error("IntMatrix product: shape mismatch");
    IntMatrix m(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t k = 0; k < cols_; ++k) {
        const Integer& a = (*this)(i, k);
        if (a == 0) continue;
        for (std::size_t j = 0; j < o.cols_; ++j) m(i, j) += a * o(k, j);
      }
    return m;
  }

  std::vector<Integer> operator*(const std::vector<Integer>& v) const {
    if (v.size() != cols_) throw Error("IntMatrix * vector: shape mismatch");
    std::vector<Integer> out(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) out[i] += (*this)(i, j) * v[j];
    return out;
  }

  bool operator==(const IntMatrix&) const = default;

  std::string str() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < rows_; ++i) {
      os << "[";
      for (std::size_t j = 0; j < cols_; ++j) os << (j ? " " : "") << (*this)(i, j);
      os << "]\n";
    }
    return os.str();
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

/// Exact determinant by fraction-free (Bareiss) elimination.
inline Integer determinant(IntMatrix m) {
  const std::size_t n = m.rows();
  if (n != m.cols()) throw Error("determinant: matrix not square");
  if (n == 0) return 1;
  Integer sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && m(p, k) == 0) ++p;
      if (p == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(p, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

struct SmithForm {
  IntMatrix left;           // U
  IntMatrix diagonal;       // D = U M V
  IntMatrix right;          // V
  IntMatrix left_inverse;   // U^{-1}
  IntMatrix right_inverse;  // V^{-1}
  std::size_t rank = 0;

  const Integer& d(std::size_t i) const { return diagonal(i, i); }
};

namespace detail {

struct SmithState {
  IntMatrix m, u, uinv, v, vinv;

  void add_row(std::size_t dst, std::size_t src, const Integer& q) {  // row_dst += q row_src
    if (q == 0) return;
    for (std::size_t j = 0; j < m.cols(); ++j) m(dst, j) += q * m(src, j);
    for (std::size_t j = 0; j < u.cols(); ++j) u(dst, j) += q * u(src, j);
    for (std::size_t i = 0; i < uinv.rows(); ++i) uinv(i, src) -= q * uinv(i, dst);
  }
  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(a, j), m(b, j));
    for (std::size_t j = 0; j < u.cols(); ++j) std::swap(u(a, j), u(b, j));
    for (std::size_t i = 0; i < uinv.rows(); ++i) std::swap(uinv(i, a), uinv(i, b));
  }
  void negate_row(std::size_t a) {
    for (std::size_t j = 0; j < m.cols(); ++j) m(a, j) = -m(a, j);
    for (std::size_t j = 0; j < u.cols(); ++j) u(a, j) = -u(a, j);
    for (std::size_t i = 0; i < uinv.rows(); ++i) uinv(i, a) = -uinv(i, a);
  }
  void add_col(std::size_t dst, std::size_t src, const Integer& q) {  // col_dst += q col_src
    if (q == 0) return;
    for (std::size_t i = 0; i < m.rows(); ++i) m(i, dst) += q * m(i, src);
    for (std::size_t i = 0; i < v.rows(); ++i) v(i, dst) += q * v(i, src);
    for (std::size_t j = 0; j < vinv.cols(); ++j) vinv(src, j) -= q * vinv(dst, j);
  }
  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < m.rows(); ++i) std::swap(m(i, a), m(i, b));
    for (std::size_t i = 0; i < v.rows(); ++i) std::swap(v(i, a), v(i, b));
    for (std::size_t j = 0; j < vinv.cols(); ++j) std::swap(vinv(a, j), vinv(b, j));
  }
};

inline Integer abs_int(const Integer& x) { return x < 0 ? Integer(-x) : x; }

}  // namespace detail

inline SmithForm smith_normal_form(const IntMatrix& input) {
  const std::size_t r = input.rows(), c = input.cols();
  detail::SmithState s{input, IntMatrix::identity(r), IntMatrix::identity(r), IntMatrix::identity(c),
                       IntMatrix::identity(c)};
  IntMatrix& m = s.m;
  std::size_t t = 0;
  const std::size_t lim = std::min(r, c);
  while (t < lim) {
    // smallest nonzero entry of the trailing block becomes the pivot
    std::optional<std::pair<std::size_t, std::size_t>> best;
    for (std::size_t i = t; i < r; ++i)
      for (std::size_t j = t; j < c; ++j)
        if (m(i, j) != 0 && (!best || detail::abs_int(m(i, j)) < detail::abs_int(m(best->first, best->second))))
          best = std::make_pair(i, j);
    if (!best) break;
    s.swap_rows(t, best->first);
    s.swap_cols(t, best->second);

    for (;;) {
      bool clean = true;
      for (std::size_t i = t + 1; i < r; ++i) {
        if (m(i, t) == 0) continue;
        Integer q = m(i, t) / m(t, t);
        s.add_row(i, t, -q);
        if (m(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < c; ++j) {
        if (m(t, j) == 0) continue;
        Integer q = m(t, j) / m(t, t);
        s.add_col(j, t, -q);
        if (m(t, j) != 0) clean = false;
      }
      if (!clean) {
        // a remainder survived: move the smallest one into the pivot slot
        std::size_t bi = t, bj = t;
        Integer bv = detail::abs_int(m(t, t));
        for (std::size_t i = t + 1; i < r; ++i)
          if (m(i, t) != 0 && detail::abs_int(m(i, t)) < bv) bv = detail::abs_int(m(i, t)), bi = i, bj = t;
        for (std::size_t j = t + 1; j < c; ++j)
          if (m(t, j) != 0 && detail::abs_int(m(t, j)) < bv) bv = detail::abs_int(m(t, j)), bi = t, bj = j;
        s.swap_rows(t, bi);
        s.swap_cols(t, bj);
        continue;
      }
      std::optional<std::size_t> bad_row;
      for (std::size_t i = t + 1; i < r && !bad_row; ++i)
        for (std::size_t j = t + 1; j < c; ++j)
          if (m(i, j) % m(t, t) != 0) {
            bad_row = i;
            break;
          }
      if (!bad_row) break;
      s.add_row(t, *bad_row, 1);
    }
    if (m(t, t) < 0) s.negate_row(t);
    ++t;
  }
  return SmithForm{std::move(s.u), std::move(s.m), std::move(s.v), std::move(s.uinv), std::move(s.vinv), t};
}

/// Integer kernel basis of M (as columns), from the trailing columns of V.
inline IntMatrix integer_kernel(const IntMatrix& m) {
  SmithForm sf = smith_normal_form(m);
  const std::size_t c = m.cols();
  IntMatrix k(c, c - sf.rank);
  for (std::size_t j = sf.rank; j < c; ++j)
    for (std::size_t i = 0; i < c; ++i) k(i, j - sf.rank) = sf.right(i, j);
  return k;
}

/// Solves M x = b over the integers, if a solution exists.
inline std::optional<std::vector<Integer>> solve_integer(const SmithForm& sf, const std::vector<Integer>& b) {
  const std::size_t r = sf.diagonal.rows(), c = sf.diagonal.cols();
  std::vector<Integer> y = sf.left * b;
  std::vector<Integer> z(c);
  for (std::size_t i = 0; i < r; ++i) {
    if (i < sf.rank) {
      if (y[i] % sf.d(i) != 0) return std::nullopt;
      z[i] = y[i] / sf.d(i);
    } else if (y[i] != 0) {
      return std::nullopt;
    }
  }
  return sf.right * z;
}

}  // namespace relk
