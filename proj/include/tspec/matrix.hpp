#ifndef TSPEC_MATRIX_HPP
#define TSPEC_MATRIX_HPP

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tspec/error.hpp"
#include "tspec/rational.hpp"

namespace tspec {

/// Dense row-major matrix over Q.
class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  RatMatrix(std::initializer_list<std::initializer_list<Rational>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto& row : rows) {
      if (row.size() != cols_) throw Error(Errc::DimensionMismatch, "ragged matrix literal");
      data_.insert(data_.end(), row.begin(), row.end());
    }
  }

  static RatMatrix identity(std::size_t n) {
    RatMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  static RatMatrix diagonal(const RatVector& d) {
    RatMatrix m(d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
    return m;
  }

  static RatMatrix column(const RatVector& v) {
    RatMatrix m(v.size(), 1);
    for (std::size_t i = 0; i < v.size(); ++i) m(i, 0) = v[i];
    return m;
  }

  /// Matrix whose columns are the given vectors (all of length `rows`).
  static RatMatrix from_columns(std::size_t rows, const std::vector<RatVector>& cols) {
    RatMatrix m(rows, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
      if (cols[j].size() != rows) throw Error(Errc::DimensionMismatch, "column length mismatch");
      for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
    }
    return m;
  }

  [[nodiscard]] std::size_t rows() const noexcept { return rows_; }
  [[nodiscard]] std::size_t cols() const noexcept { return cols_; }
  [[nodiscard]] bool is_square() const noexcept { return rows_ == cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  [[nodiscard]] const std::vector<Rational>& entries() const noexcept { return data_; }

  [[nodiscard]] RatVector col(std::size_t c) const {
    RatVector v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, c);
    return v;
  }

  [[nodiscard]] RatVector row(std::size_t r) const {
    return RatVector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                     data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
  }

  [[nodiscard]] bool is_zero() const {
    for (const auto& x : data_) {
      if (sgn(x) != 0) return false;
    }
    return true;
  }

  [[nodiscard]] RatMatrix transpose() const {
    RatMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  [[nodiscard]] Rational trace() const {
    if (!is_square()) throw Error(Errc::NotSquare, "trace of non-square matrix");
    Rational t = 0;
    for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
    return t;
  }

  RatMatrix& operator+=(const RatMatrix& o) {
    require_same_shape(o);
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
    return *this;
  }

  RatMatrix& operator-=(const RatMatrix& o) {
    require_same_shape(o);
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
    return *this;
  }

  RatMatrix& operator*=(const Rational& s) {
    if (sgn(s) == 0) {
      for (auto& x : data_) x = 0;
    } else {
      for (auto& x : data_) {
        if (sgn(x) != 0) x *= s;
      }
    }
    return *this;
  }

  friend RatMatrix operator+(RatMatrix a, const RatMatrix& b) { return a += b; }
  friend RatMatrix operator-(RatMatrix a, const RatMatrix& b) { return a -= b; }
  friend RatMatrix operator*(RatMatrix a, const Rational& s) { return a *= s; }
  friend RatMatrix operator*(const Rational& s, RatMatrix a) { return a *= s; }
  friend RatMatrix operator-(RatMatrix a) { return a *= Rational(-1); }

  // Skips zero entries of the left factor; chain-complex differentials are very sparse.
  friend RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) {
    if (a.cols_ != b.rows_) throw Error(Errc::DimensionMismatch, "matrix product shape mismatch");
    RatMatrix c(a.rows_, b.cols_);
    Rational tmp;
    for (std::size_t i = 0; i < a.rows_; ++i) {
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const Rational& aik = a(i, k);
        if (sgn(aik) == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) {
          const Rational& bkj = b(k, j);
          if (sgn(bkj) == 0) continue;
          tmp = aik * bkj;
          c(i, j) += tmp;
        }
      }
    }
    return c;
  }

  friend RatVector operator*(const RatMatrix& a, const RatVector& v) {
    if (a.cols_ != v.size()) throw Error(Errc::DimensionMismatch, "matrix-vector shape mismatch");
    RatVector out(a.rows_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k)
        if (sgn(a(i, k)) != 0 && sgn(v[k]) != 0) out[i] += a(i, k) * v[k];
    return out;
  }

  friend bool operator==(const RatMatrix& a, const RatMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  void require_same_shape(const RatMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
      throw Error(Errc::DimensionMismatch, "matrix shapes differ");
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

inline RatMatrix commutator(const RatMatrix& a, const RatMatrix& b) { return a * b - b * a; }

inline RatMatrix kronecker(const RatMatrix& a, const RatMatrix& b) {
  RatMatrix k(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (sgn(a(i, j)) == 0) continue;
      for (std::size_t p = 0; p < b.rows(); ++p)
        for (std::size_t q = 0; q < b.cols(); ++q)
          if (sgn(b(p, q)) != 0) k(i * b.rows() + p, j * b.cols() + q) = a(i, j) * b(p, q);
    }
  return k;
}

inline RatMatrix hstack(const std::vector<RatMatrix>& blocks, std::size_t rows) {
  std::size_t cols = 0;
  for (const auto& b : blocks) {
    if (b.rows() != rows) throw Error(Errc::DimensionMismatch, "hstack row mismatch");
    cols += b.cols();
  }
  RatMatrix m(rows, cols);
  std::size_t off = 0;
  for (const auto& b : blocks) {
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < b.cols(); ++j) m(i, off + j) = b(i, j);
    off += b.cols();
  }
  return m;
}

inline RatMatrix vstack(const std::vector<RatMatrix>& blocks, std::size_t cols) {
  std::size_t rows = 0;
  for (const auto& b : blocks) {
    if (b.cols() != cols) throw Error(Errc::DimensionMismatch, "vstack column mismatch");
    rows += b.rows();
  }
  RatMatrix m(rows, cols);
  std::size_t off = 0;
  for (const auto& b : blocks) {
    for (std::size_t i = 0; i < b.rows(); ++i)
      for (std::size_t j = 0; j < cols; ++j) m(off + i, j) = b(i, j);
    off += b.rows();
  }
  return m;
}

inline RatMatrix block_diagonal(const RatMatrix& a, const RatMatrix& b) {
  RatMatrix m(a.rows() + b.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = a(i, j);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) m(a.rows() + i, a.cols() + j) = b(i, j);
  return m;
}

inline RatMatrix power(const RatMatrix& m, unsigned exponent) {
  if (!m.is_square()) throw Error(Errc::NotSquare, "power of non-square matrix");
  RatMatrix result = RatMatrix::identity(m.rows());
  RatMatrix base = m;
  while (exponent) {
    if (exponent & 1U) result = result * base;
    exponent >>= 1U;
    if (exponent) base = base * base;
  }
  return result;
}

/// Reduced row echelon form and its pivot columns.
struct Echelon {
  RatMatrix reduced;
  std::vector<std::size_t> pivots;
};

/// Gauss-Jordan elimination over Q. The pivot row for each column is the
/// candidate with the fewest nonzero entries, which limits fill-in on the sparse
/// differentials; the choice has no effect on ranks or spans.
inline Echelon row_reduce(RatMatrix m) {
  Echelon e;
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::size_t r = 0;
  Rational factor;
  Rational tmp;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t best = rows;
    std::size_t best_weight = 0;
    for (std::size_t i = r; i < rows; ++i) {
      if (sgn(m(i, c)) == 0) continue;
      std::size_t weight = 0;
      for (std::size_t j = c; j < cols; ++j) weight += sgn(m(i, j)) != 0;
      if (best == rows || weight < best_weight) {
        best = i;
        best_weight = weight;
      }
    }
    if (best == rows) continue;
    if (best != r)
      for (std::size_t j = 0; j < cols; ++j) std::swap(m(r, j), m(best, j));

    const Rational inv = 1 / m(r, c);
    for (std::size_t j = c; j < cols; ++j)
      if (sgn(m(r, j)) != 0) m(r, j) *= inv;

    std::vector<std::size_t> support;
    for (std::size_t j = c; j < cols; ++j)
      if (sgn(m(r, j)) != 0) support.push_back(j);

    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || sgn(m(i, c)) == 0) continue;
      factor = m(i, c);
      for (std::size_t j : support) {
        tmp = factor * m(r, j);
        m(i, j) -= tmp;
      }
    }
    e.pivots.push_back(c);
    ++r;
  }
  e.reduced = std::move(m);
  return e;
}

inline std::size_t rank(const RatMatrix& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  // Eliminate along the shorter side.
  if (m.rows() > m.cols()) return row_reduce(m.transpose()).pivots.size();
  return row_reduce(m).pivots.size();
}

/// A linear subspace of Q^n, held as a matrix whose columns form a basis.
class Subspace {
 public:
  Subspace() = default;

  static Subspace zero(std::size_t ambient) { return Subspace(ambient, RatMatrix(ambient, 0)); }
  static Subspace full(std::size_t ambient) {
    return Subspace(ambient, RatMatrix::identity(ambient));
  }

  /// Span of the columns of `generators`; dependent columns are discarded.
  static Subspace span(const RatMatrix& generators) {
    const std::size_t n = generators.rows();
    if (generators.cols() == 0) return zero(n);
    const Echelon e = row_reduce(generators.transpose());
    RatMatrix basis(n, e.pivots.size());
    for (std::size_t k = 0; k < e.pivots.size(); ++k)
      for (std::size_t i = 0; i < n; ++i) basis(i, k) = e.reduced(k, i);
    return Subspace(n, std::move(basis));
  }

  static Subspace span(std::size_t ambient, const std::vector<RatVector>& vectors) {
    return span(RatMatrix::from_columns(ambient, vectors));
  }

  [[nodiscard]] std::size_t ambient_dim() const noexcept { return ambient_; }
  [[nodiscard]] std::size_t dim() const noexcept { return basis_.cols(); }
  [[nodiscard]] const RatMatrix& basis() const noexcept { return basis_; }
  [[nodiscard]] RatVector vector(std::size_t k) const { return basis_.col(k); }

  /// Coordinates of v in this basis, or nullopt if v is not in the span.
  [[nodiscard]] std::optional<RatVector> coordinates(const RatVector& v) const {
    if (v.size() != ambient_) throw Error(Errc::AmbientMismatch, "vector length differs from ambient");
    const std::size_t k = dim();
    RatMatrix aug(ambient_, k + 1);
    for (std::size_t i = 0; i < ambient_; ++i) {
      for (std::size_t j = 0; j < k; ++j) aug(i, j) = basis_(i, j);
      aug(i, k) = v[i];
    }
    const Echelon e = row_reduce(aug);
    if (!e.pivots.empty() && e.pivots.back() == k) return std::nullopt;
    RatVector coords(k);
    for (std::size_t r = 0; r < e.pivots.size(); ++r) coords[e.pivots[r]] = e.reduced(r, k);
    return coords;
  }

  [[nodiscard]] bool contains(const RatVector& v) const { return coordinates(v).has_value(); }

  [[nodiscard]] bool contains(const Subspace& other) const {
    if (other.ambient_ != ambient_) throw Error(Errc::AmbientMismatch, "subspace ambient dims differ");
    if (other.dim() > dim()) return false;
    return rank(hstack({basis_, other.basis_}, ambient_)) == dim();
  }

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.dim() == b.dim() && a.contains(b);
  }

 private:
  Subspace(std::size_t ambient, RatMatrix basis) : ambient_(ambient), basis_(std::move(basis)) {}
  friend Subspace kernel(const RatMatrix& m);

  std::size_t ambient_ = 0;
  RatMatrix basis_;
};

inline Subspace kernel(const RatMatrix& m) {
  const std::size_t n = m.cols();
  if (m.rows() == 0) return Subspace::full(n);
  const Echelon e = row_reduce(m);
  std::vector<bool> is_pivot(n, false);
  for (auto p : e.pivots) is_pivot[p] = true;
  RatMatrix basis(n, n - e.pivots.size());
  std::size_t k = 0;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    basis(f, k) = 1;
    for (std::size_t r = 0; r < e.pivots.size(); ++r) basis(e.pivots[r], k) = -e.reduced(r, f);
    ++k;
  }
  return Subspace(n, std::move(basis));
}

inline Subspace image(const RatMatrix& m) { return Subspace::span(m); }

inline Subspace sum(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim())
    throw Error(Errc::AmbientMismatch, "sum of subspaces with different ambient dims");
  return Subspace::span(hstack({a.basis(), b.basis()}, a.ambient_dim()));
}

inline Subspace intersect(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim())
    throw Error(Errc::AmbientMismatch, "intersection of subspaces with different ambient dims");
  const std::size_t n = a.ambient_dim();
  if (a.dim() == 0 || b.dim() == 0) return Subspace::zero(n);
  // Solve A x = B y; the intersection is spanned by A x over the kernel of [A | -B].
  const Subspace rel = kernel(hstack({a.basis(), -b.basis()}, n));
  std::vector<RatVector> vecs;
  for (std::size_t k = 0; k < rel.dim(); ++k) {
    RatVector x = rel.vector(k);
    x.resize(a.dim());
    vecs.push_back(a.basis() * x);
  }
  return Subspace::span(n, vecs);
}

/// Restriction of a linear map to a subspace, as the matrix m * basis.
inline RatMatrix restrict_to(const RatMatrix& m, const Subspace& s) { return m * s.basis(); }

inline Subspace generalized_kernel(const RatMatrix& m, unsigned power_exponent) {
  if (!m.is_square()) throw Error(Errc::NotSquare, "generalized kernel of non-square matrix");
  if (power_exponent == 0) throw Error(Errc::BadParams, "generalized kernel power must be positive");
  return kernel(power(m, power_exponent));
}

}  // namespace tspec

#endif  // TSPEC_MATRIX_HPP
