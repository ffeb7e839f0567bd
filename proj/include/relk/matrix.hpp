#pragma once

/**
 * @file matrix.hpp
 * @brief Dense matrices over a commutative ring type T, with the
 *        division-free characteristic polynomial (Berkowitz), compound
 *        matrices (exterior powers), block sums and Kronecker products.
 *
 * T needs +, -, *, unary -, == and is_zero()/is_one(). A matrix remembers
 * its ring's zero so that empty or fresh matrices can be built.
 */

#include "relk/integer.hpp"

#include <sstream>
#include <string>
#include <vector>

namespace relk {

template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const T& zero) : rows_(rows), cols_(cols), zero_(zero), d_(rows * cols, zero) {}

  static Matrix identity(std::size_t n, const T& one) {
    Matrix m(n, n, one - one);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = one;
    return m;
  }

  static Matrix diagonal(const std::vector<T>& entries, const T& zero) {
    Matrix m(entries.size(), entries.size(), zero);
    for (std::size_t i = 0; i < entries.size(); ++i) m(i, i) = entries[i];
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const T& zero() const { return zero_; }

  T& operator()(std::size_t i, std::size_t j) { return d_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return d_[i * cols_ + j]; }

  Matrix operator*(const Matrix& o) const {
    if (cols_ != o.rows_) throw Error("Matrix product: shape mismatch");
    Matrix r(rows_, o.cols_, zero_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t k = 0; k < cols_; ++k) {
        const T& a = (*this)(i, k);
        if (a.is_zero()) continue;
        for (std::size_t j = 0; j < o.cols_; ++j) r(i, j) += a * o(k, j);
      }
    return r;
  }

  Matrix operator+(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw Error("Matrix sum: shape mismatch");
    Matrix r = *this;
    for (std::size_t i = 0; i < d_.size(); ++i) r.d_[i] = d_[i] + o.d_[i];
    return r;
  }

  bool operator==(const Matrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && d_ == o.d_; }

  bool is_identity() const {
    if (rows_ != cols_) return false;
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j)
        if (i == j ? !(*this)(i, j).is_one() : !(*this)(i, j).is_zero()) return false;
    return true;
  }

  /// Applies `fn` entrywise (e.g. a ring map A -> B).
  template <class Fn>
  auto mapped(Fn&& fn) const {
    using U = decltype(fn(zero_));
    Matrix<U> r(rows_, cols_, fn(zero_));
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) r(i, j) = fn((*this)(i, j));
    return r;
  }

  std::string str() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < rows_; ++i) {
      os << (i ? "; " : "");
      for (std::size_t j = 0; j < cols_; ++j) os << (j ? ", " : "") << (*this)(i, j).str();
    }
    os << "]";
    return os.str();
  }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  T zero_{};
  std::vector<T> d_;
};

/**
 * Coefficients p_0 = 1, p_1, ..., p_n of det(x I - M) = sum_k p_k x^{n-k},
 * by Berkowitz's algorithm (no divisions). Equivalently det(1 - tM) =
 * sum_k p_k t^k.
 */
template <class T>
std::vector<T> char_poly(const Matrix<T>& m, const T& one) {
  const std::size_t n = m.rows();
  if (n != m.cols()) throw Error("char_poly: matrix not square");
  const T zero = one - one;
  std::vector<T> c{one};
  for (std::size_t r = 0; r < n; ++r) {
    // Toeplitz column: 1, -a_rr, -R S, -R A S, ..., -R A^{r-1} S
    std::vector<T> t{one, -m(r, r)};
    std::vector<T> v(r, zero);  // A^k S, starting with S
    for (std::size_t i = 0; i < r; ++i) v[i] = m(i, r);
    for (std::size_t k = 0; k < r; ++k) {
      T s = zero;
      for (std::size_t i = 0; i < r; ++i) s += m(r, i) * v[i];
      t.push_back(-s);
      if (k + 1 < r) {
        std::vector<T> w(r, zero);
        for (std::size_t i = 0; i < r; ++i)
          for (std::size_t j = 0; j < r; ++j) w[i] += m(i, j) * v[j];
        v = std::move(w);
      }
    }
    std::vector<T> next(r + 2, zero);
    for (std::size_t i = 0; i < r + 2; ++i)
      for (std::size_t j = 0; j <= std::min(i, r); ++j) next[i] += t[i - j] * c[j];
    c = std::move(next);
  }
  return c;
}

/// Division-free determinant.
template <class T>
T determinant(const Matrix<T>& m, const T& one) {
  std::vector<T> p = char_poly(m, one);
  return m.rows() % 2 ? -p.back() : p.back();
}

/// [[a, 0], [0, b]].
template <class T>
Matrix<T> block_sum(const Matrix<T>& a, const Matrix<T>& b) {
  const T& zero = a.rows() ? a.zero() : b.zero();
  Matrix<T> r(a.rows() + b.rows(), a.cols() + b.cols(), zero);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = a(i, j);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) r(a.rows() + i, a.cols() + j) = b(i, j);
  return r;
}

/// Kronecker product, rows indexed by (i_a, i_b) with i_b fastest.
template <class T>
Matrix<T> kronecker(const Matrix<T>& a, const Matrix<T>& b) {
  Matrix<T> r(a.rows() * b.rows(), a.cols() * b.cols(), a.zero());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l) r(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
  return r;
}

/// The k-subsets of {0..n-1} in lexicographic order.
inline std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  if (k > n) return out;
  std::vector<std::size_t> s(k);
  for (std::size_t i = 0; i < k; ++i) s[i] = i;
  for (;;) {
    out.push_back(s);
    std::size_t i = k;
    while (i > 0 && s[i - 1] == n - k + i - 1) --i;
    if (i == 0) break;
    ++s[i - 1];
    for (std::size_t j = i; j < k; ++j) s[j] = s[j - 1] + 1;
  }
  return out;
}

/// The i-th compound matrix (minors on lexicographically ordered i-subsets):
/// the matrix of the i-th exterior power. Size C(n, i); 0 x 0 when i > n.
template <class T>
Matrix<T> compound(const Matrix<T>& m, std::size_t i, const T& one) {
  const std::size_t n = m.rows();
  if (n != m.cols()) throw Error("compound: matrix not square");
  auto rs = subsets(n, i);
  Matrix<T> out(rs.size(), rs.size(), one - one);
  for (std::size_t a = 0; a < rs.size(); ++a)
    for (std::size_t b = 0; b < rs.size(); ++b) {
      Matrix<T> minor(i, i, one - one);
      for (std::size_t x = 0; x < i; ++x)
        for (std::size_t y = 0; y < i; ++y) minor(x, y) = m(rs[a][x], rs[b][y]);
      out(a, b) = determinant(minor, one);
    }
  return out;
}

}  // namespace relk
