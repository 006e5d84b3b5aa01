#pragma once

// Exact dense linear algebra over a prime field or the rationals.
//
// Vectors are column matrices. A linear map V -> W is a W.dim x V.dim matrix.
// Subspaces are stored by a basis in reduced row-echelon form, which makes the
// representation canonical: two subspaces are equal iff their bases are equal.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <ostream>
#include <sstream>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "field.hpp"

namespace coringlab {

template <ExactField F>
class Mat {
 public:
  using value_type = typename F::value_type;

  Mat() = default;
  Mat(F field, std::size_t rows, std::size_t cols)
      : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, field_.zero()) {}

  static Mat identity(const F& field, std::size_t n) {
    Mat m(field, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = field.one();
    return m;
  }

  /// Build from small integers, row-major.
  static Mat from_ints(const F& field, std::size_t rows, std::size_t cols, const std::vector<long long>& v) {
    if (v.size() != rows * cols) throw DimensionMismatch("from_ints: wrong entry count");
    Mat m(field, rows, cols);
    for (std::size_t i = 0; i < v.size(); ++i) m.data_[i] = field.from_int(v[i]);
    return m;
  }

  static Mat unit_vector(const F& field, std::size_t n, std::size_t i) {
    Mat m(field, n, 1);
    m(i, 0) = field.one();
    return m;
  }

  const F& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const std::vector<value_type>& data() const { return data_; }

  value_type& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const value_type& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  bool is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [&](const value_type& x) { return field_.is_zero(x); });
  }
  bool is_square() const { return rows_ == cols_; }

  Mat col(std::size_t j) const {
    Mat c(field_, rows_, 1);
    for (std::size_t i = 0; i < rows_; ++i) c(i, 0) = (*this)(i, j);
    return c;
  }
  Mat row(std::size_t i) const {
    Mat r(field_, 1, cols_);
    for (std::size_t j = 0; j < cols_; ++j) r(0, j) = (*this)(i, j);
    return r;
  }
  void set_col(std::size_t j, const Mat& c) {
    if (c.rows_ != rows_ || c.cols_ != 1) throw DimensionMismatch("set_col: shape");
    for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = c(i, 0);
  }
  void set_row(std::size_t i, const Mat& r) {
    if (r.cols_ != cols_ || r.rows_ != 1) throw DimensionMismatch("set_row: shape");
    for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) = r(0, j);
  }

  Mat transpose() const {
    Mat t(field_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  Mat select_cols(const std::vector<std::size_t>& idx) const {
    Mat m(field_, rows_, idx.size());
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t k = 0; k < idx.size(); ++k) m(i, k) = (*this)(i, idx[k]);
    return m;
  }
  Mat select_rows(const std::vector<std::size_t>& idx) const {
    Mat m(field_, idx.size(), cols_);
    for (std::size_t k = 0; k < idx.size(); ++k)
      for (std::size_t j = 0; j < cols_; ++j) m(k, j) = (*this)(idx[k], j);
    return m;
  }

  Mat scaled(const value_type& s) const {
    Mat m = *this;
    for (auto& x : m.data_) x = field_.mul(x, s);
    return m;
  }

  /// Reinterpret a column vector of length r*c as an r x c matrix (row-major).
  Mat reshaped(std::size_t r, std::size_t c) const {
    if (r * c != rows_ * cols_) throw DimensionMismatch("reshape: size");
    Mat m(field_, r, c);
    m.data_ = data_;
    return m;
  }
  /// Row-major flattening into a column vector.
  Mat flattened() const { return reshaped(rows_ * cols_, 1); }

  Mat& operator+=(const Mat& o) {
    check_same_shape(o, "+");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] = field_.add(data_[i], o.data_[i]);
    return *this;
  }
  Mat& operator-=(const Mat& o) {
    check_same_shape(o, "-");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] = field_.sub(data_[i], o.data_[i]);
    return *this;
  }
  friend Mat operator+(Mat a, const Mat& b) { return a += b; }
  friend Mat operator-(Mat a, const Mat& b) { return a -= b; }
  friend Mat operator-(Mat a) {
    for (auto& x : a.data_) x = a.field_.neg(x);
    return a;
  }

  friend Mat operator*(const Mat& a, const Mat& b) {
    if (a.cols_ != b.rows_)
      throw DimensionMismatch("matrix product " + a.shape() + " * " + b.shape());
    Mat c(a.field_, a.rows_, b.cols_);
    const F& k = a.field_;
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t l = 0; l < a.cols_; ++l) {
        const auto& x = a(i, l);
        if (k.is_zero(x)) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) {
          const auto& y = b(l, j);
          if (k.is_zero(y)) continue;
          c(i, j) = k.add(c(i, j), k.mul(x, y));
        }
      }
    return c;
  }

  friend bool operator==(const Mat& a, const Mat& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
    for (std::size_t i = 0; i < a.data_.size(); ++i)
      if (!a.field_.equal(a.data_[i], b.data_[i])) return false;
    return true;
  }

  std::string shape() const { return std::to_string(rows_) + "x" + std::to_string(cols_); }

  std::string str() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < rows_; ++i) {
      os << (i ? ", [" : "[");
      for (std::size_t j = 0; j < cols_; ++j) os << (j ? "," : "") << field_.to_string((*this)(i, j));
      os << "]";
    }
    os << "]";
    return os.str();
  }
  friend std::ostream& operator<<(std::ostream& os, const Mat& m) { return os << m.str(); }

 private:
  void check_same_shape(const Mat& o, const char* op) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
      throw DimensionMismatch(std::string("matrix ") + op + " " + shape() + " vs " + o.shape());
  }

  F field_{};
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<value_type> data_;
};

template <ExactField F>
Mat<F> hstack(const Mat<F>& a, const Mat<F>& b) {
  if (a.rows() != b.rows()) throw DimensionMismatch("hstack rows");
  Mat<F> m(a.field(), a.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = a(i, j);
    for (std::size_t j = 0; j < b.cols(); ++j) m(i, a.cols() + j) = b(i, j);
  }
  return m;
}

template <ExactField F>
Mat<F> vstack(const Mat<F>& a, const Mat<F>& b) {
  if (a.cols() != b.cols()) throw DimensionMismatch("vstack cols");
  Mat<F> m(a.field(), a.rows() + b.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = a(i, j);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) m(a.rows() + i, j) = b(i, j);
  return m;
}

/// Block-diagonal sum of two maps.
template <ExactField F>
Mat<F> direct_sum(const Mat<F>& a, const Mat<F>& b) {
  Mat<F> m(a.field(), a.rows() + b.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = a(i, j);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) m(a.rows() + i, a.cols() + j) = b(i, j);
  return m;
}

template <ExactField F>
struct RrefResult {
  Mat<F> reduced;
  std::vector<std::size_t> pivots;
};

template <ExactField F>
RrefResult<F> rref(Mat<F> m) {
  const F& k = m.field();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t sel = r;
    while (sel < m.rows() && k.is_zero(m(sel, c))) ++sel;
    if (sel == m.rows()) continue;
    if (sel != r)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(sel, j), m(r, j));
    auto piv_inv = k.inv(m(r, c));
    for (std::size_t j = c; j < m.cols(); ++j) m(r, j) = k.mul(m(r, j), piv_inv);
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || k.is_zero(m(i, c))) continue;
      auto factor = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j) m(i, j) = k.sub(m(i, j), k.mul(factor, m(r, j)));
    }
    pivots.push_back(c);
    ++r;
  }
  return {std::move(m), std::move(pivots)};
}

template <ExactField F>
std::size_t rank(const Mat<F>& m) {
  return rref(m).pivots.size();
}

/// Subspace of k^n given by an RREF basis (rows).
template <ExactField F>
class Subspace {
 public:
  Subspace() = default;
  Subspace(const F& field, std::size_t ambient_dim) : basis_(field, 0, ambient_dim), ambient_(ambient_dim) {}

  /// Span of the rows of `rows`.
  static Subspace row_span(const Mat<F>& rows) {
    auto r = rref(rows);
    Subspace s(rows.field(), rows.cols());
    std::vector<std::size_t> keep(r.pivots.size());
    for (std::size_t i = 0; i < keep.size(); ++i) keep[i] = i;
    s.basis_ = r.reduced.select_rows(keep);
    s.pivots_ = std::move(r.pivots);
    return s;
  }
  /// Span of the columns of `cols`.
  static Subspace column_span(const Mat<F>& cols) { return row_span(cols.transpose()); }
  static Subspace full(const F& field, std::size_t n) { return row_span(Mat<F>::identity(field, n)); }

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.rows(); }
  const Mat<F>& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  /// Basis vectors as the columns of an ambient x dim matrix (the inclusion map).
  Mat<F> inclusion() const { return basis_.transpose(); }

  /// Coordinates of a column vector assumed to lie in the subspace.
  Mat<F> coords(const Mat<F>& v) const {
    Mat<F> c(basis_.field(), dim(), v.cols());
    for (std::size_t i = 0; i < dim(); ++i)
      for (std::size_t j = 0; j < v.cols(); ++j) c(i, j) = v(pivots_[i], j);
    return c;
  }
  bool contains(const Mat<F>& v) const { return inclusion() * coords(v) == v; }
  bool contains(const Subspace& o) const { return o.dim() == 0 || contains(o.inclusion()); }

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }

 private:
  Mat<F> basis_;
  std::vector<std::size_t> pivots_;
  std::size_t ambient_ = 0;
};

template <ExactField F>
Subspace<F> subspace_sum(const Subspace<F>& a, const Subspace<F>& b) {
  return Subspace<F>::row_span(vstack(a.basis(), b.basis()));
}

/// Null space {v : m v = 0}.
template <ExactField F>
Subspace<F> kernel(const Mat<F>& m) {
  const F& k = m.field();
  auto r = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : r.pivots) is_pivot[p] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < m.cols(); ++c)
    if (!is_pivot[c]) free_cols.push_back(c);
  Mat<F> basis(k, free_cols.size(), m.cols());
  for (std::size_t f = 0; f < free_cols.size(); ++f) {
    basis(f, free_cols[f]) = k.one();
    for (std::size_t i = 0; i < r.pivots.size(); ++i) basis(f, r.pivots[i]) = k.neg(r.reduced(i, free_cols[f]));
  }
  return Subspace<F>::row_span(basis);
}

template <ExactField F>
Subspace<F> image(const Mat<F>& m) {
  return Subspace<F>::column_span(m);
}

template <ExactField F>
Subspace<F> intersection(const Subspace<F>& a, const Subspace<F>& b) {
  // v = a^T x = b^T y  <=>  [a^T | -b^T] (x;y) = 0
  auto ai = a.inclusion();
  auto bi = b.inclusion();
  auto ker = kernel(hstack(ai, -bi));
  Mat<F> xs = ker.inclusion().select_rows([&] {
    std::vector<std::size_t> idx(a.dim());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    return idx;
  }());
  return Subspace<F>::column_span(ai * xs);
}

/// Cokernel data for ambient / relations. The quotient basis is the set of
/// non-pivot coordinates of the relations' RREF.
template <ExactField F>
struct QuotientData {
  std::size_t ambient_dim = 0;
  Subspace<F> relations;
  std::size_t dim = 0;
  Mat<F> projection;  // dim x ambient
  Mat<F> section;     // ambient x dim
};

template <ExactField F>
QuotientData<F> quotient(std::size_t ambient_dim, const Subspace<F>& relations) {
  if (relations.ambient_dim() != ambient_dim) throw DimensionMismatch("quotient: relations live in another space");
  const F& k = relations.basis().field();
  std::vector<bool> is_pivot(ambient_dim, false);
  for (auto p : relations.pivots()) is_pivot[p] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < ambient_dim; ++c)
    if (!is_pivot[c]) free_cols.push_back(c);

  QuotientData<F> q;
  q.ambient_dim = ambient_dim;
  q.relations = relations;
  q.dim = free_cols.size();
  q.projection = Mat<F>(k, q.dim, ambient_dim);
  q.section = Mat<F>(k, ambient_dim, q.dim);
  // Reducing e_c modulo the RREF rows: pivot coordinates are eliminated, and
  // e_{pivot_i} ~ -sum_{f free} row_i[f] e_f.
  for (std::size_t f = 0; f < free_cols.size(); ++f) {
    q.projection(f, free_cols[f]) = k.one();
    q.section(free_cols[f], f) = k.one();
  }
  const auto& rows = relations.basis();
  for (std::size_t i = 0; i < relations.dim(); ++i) {
    std::size_t pc = relations.pivots()[i];
    for (std::size_t f = 0; f < free_cols.size(); ++f) q.projection(f, pc) = k.neg(rows(i, free_cols[f]));
  }
  return q;
}

/// Some X with a X = b, free variables set to zero; nullopt if inconsistent.
template <ExactField F>
std::optional<Mat<F>> solve(const Mat<F>& a, const Mat<F>& b) {
  if (a.rows() != b.rows()) throw DimensionMismatch("solve: row count");
  const F& k = a.field();
  auto r = rref(hstack(a, b));
  Mat<F> x(k, a.cols(), b.cols());
  for (std::size_t i = 0; i < r.pivots.size(); ++i) {
    if (r.pivots[i] >= a.cols()) return std::nullopt;
    for (std::size_t j = 0; j < b.cols(); ++j) x(r.pivots[i], j) = r.reduced(i, a.cols() + j);
  }
  return x;
}

template <ExactField F>
std::optional<Mat<F>> inverse(const Mat<F>& m) {
  if (!m.is_square()) return std::nullopt;
  auto r = rref(hstack(m, Mat<F>::identity(m.field(), m.rows())));
  if (r.pivots.size() < m.rows() || (m.rows() > 0 && r.pivots[m.rows() - 1] >= m.cols())) return std::nullopt;
  std::vector<std::size_t> right(m.rows());
  for (std::size_t j = 0; j < right.size(); ++j) right[j] = m.cols() + j;
  return r.reduced.select_cols(right);
}

template <ExactField F>
bool is_invertible(const Mat<F>& m) {
  return m.is_square() && rank(m) == m.rows();
}

template <ExactField F>
bool is_injective(const Mat<F>& m) {
  return rank(m) == m.cols();
}

template <ExactField F>
bool is_surjective(const Mat<F>& m) {
  return rank(m) == m.rows();
}

/// Kronecker product; row index i_a * rows(b) + i_b, column index likewise.
template <ExactField F>
Mat<F> kron(const Mat<F>& a, const Mat<F>& b) {
  const F& k = a.field();
  Mat<F> m(k, a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const auto& x = a(i, j);
      if (k.is_zero(x)) continue;
      for (std::size_t p = 0; p < b.rows(); ++p)
        for (std::size_t q = 0; q < b.cols(); ++q)
          m(i * b.rows() + p, j * b.cols() + q) = k.mul(x, b(p, q));
    }
  return m;
}

}  // namespace coringlab
