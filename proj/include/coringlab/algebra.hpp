#pragma once

// Finite-dimensional associative algebras given by structure constants.
// A unit is optional: non-unital (firm) rings are first-class.

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "check_report.hpp"
#include "exactla.hpp"

namespace coringlab {

template <ExactField F>
struct Algebra {
  F field;
  std::size_t dim = 0;
  /// left_mult[i] is the matrix of x |-> e_i x, so its column j is e_i e_j and
  /// its entry (k, j) is the structure constant c[i][j][k].
  std::vector<Mat<F>> left_mult;
  std::optional<Mat<F>> unit;
  std::vector<std::string> labels;
  std::string name;

  bool unital() const { return unit.has_value(); }

  const typename F::value_type& constant(std::size_t i, std::size_t j, std::size_t k) const {
    return left_mult[i](k, j);
  }

  /// Matrix of x |-> x e_j.
  Mat<F> right_mult(std::size_t j) const {
    Mat<F> r(field, dim, dim);
    for (std::size_t i = 0; i < dim; ++i) r.set_col(i, left_mult[i].col(j));
    return r;
  }

  Mat<F> left_mult_by(const Mat<F>& x) const {
    Mat<F> m(field, dim, dim);
    for (std::size_t i = 0; i < dim; ++i)
      if (!field.is_zero(x(i, 0))) m += left_mult[i].scaled(x(i, 0));
    return m;
  }

  Mat<F> product(const Mat<F>& x, const Mat<F>& y) const { return left_mult_by(x) * y; }

  Mat<F> basis_vector(std::size_t i) const { return Mat<F>::unit_vector(field, dim, i); }

  /// dim x dim^2 matrix of the multiplication map A (x)_k A -> A.
  Mat<F> multiplication_map() const {
    Mat<F> m(field, dim, dim * dim);
    for (std::size_t i = 0; i < dim; ++i)
      for (std::size_t j = 0; j < dim; ++j) m.set_col(i * dim + j, left_mult[i].col(j));
    return m;
  }

  std::string label(std::size_t i) const { return i < labels.size() ? labels[i] : "e" + std::to_string(i); }
};

template <ExactField F>
using AlgebraPtr = std::shared_ptr<const Algebra<F>>;

/// Build from a table: products[i][j] = coordinates of e_i e_j.
template <ExactField F>
AlgebraPtr<F> make_algebra(const F& field, std::size_t dim, const std::vector<std::vector<Mat<F>>>& products,
                           std::optional<Mat<F>> unit, std::vector<std::string> labels, std::string name) {
  Algebra<F> a;
  a.field = field;
  a.dim = dim;
  for (std::size_t i = 0; i < dim; ++i) {
    Mat<F> l(field, dim, dim);
    for (std::size_t j = 0; j < dim; ++j) l.set_col(j, products.at(i).at(j));
    a.left_mult.push_back(std::move(l));
  }
  a.unit = std::move(unit);
  a.labels = std::move(labels);
  a.name = std::move(name);
  return std::make_shared<const Algebra<F>>(std::move(a));
}

/// Structure-constant builder from integers: c[i][j] is the coordinate list of e_i e_j.
template <ExactField F>
AlgebraPtr<F> algebra_from_ints(const F& field, const std::vector<std::vector<std::vector<long long>>>& c,
                                std::optional<std::vector<long long>> unit, std::vector<std::string> labels,
                                std::string name) {
  std::size_t n = c.size();
  std::vector<std::vector<Mat<F>>> prods(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) prods[i].push_back(Mat<F>::from_ints(field, n, 1, c.at(i).at(j)));
  std::optional<Mat<F>> u;
  if (unit) u = Mat<F>::from_ints(field, n, 1, *unit);
  return make_algebra(field, n, prods, u, std::move(labels), std::move(name));
}

template <ExactField F>
bool same_algebra(const Algebra<F>& a, const Algebra<F>& b) {
  if (&a == &b) return true;
  if (!(a.field == b.field) || a.dim != b.dim || a.unital() != b.unital()) return false;
  for (std::size_t i = 0; i < a.dim; ++i)
    if (!(a.left_mult[i] == b.left_mult[i])) return false;
  return !a.unital() || *a.unit == *b.unit;
}

template <ExactField F>
bool same_algebra(const AlgebraPtr<F>& a, const AlgebraPtr<F>& b) {
  return a == b || same_algebra(*a, *b);
}

/// Lists every violated associativity / unit identity with basis indices.
template <ExactField F>
CheckReport check_algebra(const Algebra<F>& a) {
  CheckReport rep;
  if (a.left_mult.size() != a.dim) {
    rep.fail("structure tensor has " + std::to_string(a.left_mult.size()) + " slices, expected " + std::to_string(a.dim));
    return rep;
  }
  for (std::size_t i = 0; i < a.dim; ++i)
    for (std::size_t j = 0; j < a.dim; ++j) {
      Mat<F> ij = a.left_mult[i].col(j);
      for (std::size_t k = 0; k < a.dim; ++k) {
        Mat<F> lhs = a.left_mult_by(ij).col(k);
        Mat<F> rhs = a.left_mult[i] * a.left_mult[j].col(k);
        if (!(lhs == rhs))
          rep.fail("associativity fails at (" + a.label(i) + "," + a.label(j) + "," + a.label(k) + ")");
      }
    }
  if (a.unital()) {
    const auto& u = *a.unit;
    Mat<F> lu = a.left_mult_by(u);
    for (std::size_t i = 0; i < a.dim; ++i) {
      Mat<F> e = a.basis_vector(i);
      if (!(lu * e == e)) rep.fail("left unit law fails at " + a.label(i));
      if (!(a.left_mult[i] * u == e)) rep.fail("right unit law fails at " + a.label(i));
    }
  }
  return rep;
}

template <ExactField F>
struct RingHom {
  AlgebraPtr<F> source;
  AlgebraPtr<F> target;
  Mat<F> matrix;  // target.dim x source.dim
  bool unit_preserving = false;

  Mat<F> operator()(const Mat<F>& x) const { return matrix * x; }
};

template <ExactField F>
CheckReport check_hom(const RingHom<F>& f) {
  CheckReport rep;
  const auto& s = *f.source;
  const auto& t = *f.target;
  if (f.matrix.rows() != t.dim || f.matrix.cols() != s.dim) {
    rep.fail("matrix shape " + f.matrix.shape() + " does not match " + std::to_string(t.dim) + "x" + std::to_string(s.dim));
    return rep;
  }
  for (std::size_t i = 0; i < s.dim; ++i)
    for (std::size_t j = 0; j < s.dim; ++j) {
      Mat<F> lhs = f.matrix * s.left_mult[i].col(j);
      Mat<F> rhs = t.product(f.matrix.col(i), f.matrix.col(j));
      if (!(lhs == rhs)) rep.fail("not multiplicative at (" + s.label(i) + "," + s.label(j) + ")");
    }
  if (f.unit_preserving) {
    if (!s.unital() || !t.unital())
      rep.fail("unit-preserving flag set but a unit is missing");
    else if (!(f.matrix * *s.unit == *t.unit))
      rep.fail("unit not preserved");
  }
  return rep;
}

template <ExactField F>
RingHom<F> compose(const RingHom<F>& g, const RingHom<F>& f) {
  return {f.source, g.target, g.matrix * f.matrix, f.unit_preserving && g.unit_preserving};
}

template <ExactField F>
RingHom<F> identity_hom(const AlgebraPtr<F>& a) {
  return {a, a, Mat<F>::identity(a->field, a->dim), a->unital()};
}

// ---------------------------------------------------------------------------
// Standard small algebras.

/// The ground field as a 1-dimensional algebra.
template <ExactField F>
AlgebraPtr<F> ground_algebra(const F& k) {
  return algebra_from_ints(k, {{{1}}}, std::vector<long long>{1}, {"1"}, "k");
}

/// Unital k-algebra structure on k^n with coordinatewise product.
template <ExactField F>
AlgebraPtr<F> product_of_fields(const F& k, std::size_t n) {
  std::vector<std::vector<std::vector<long long>>> c(n, std::vector<std::vector<long long>>(n, std::vector<long long>(n, 0)));
  std::vector<long long> u(n, 1);
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) {
    c[i][i][i] = 1;
    labels.push_back("e" + std::to_string(i + 1));
  }
  return algebra_from_ints(k, c, u, labels, "k^" + std::to_string(n));
}

/// k[x]/(x^n), basis 1, x, ..., x^{n-1}.
template <ExactField F>
AlgebraPtr<F> truncated_polynomials(const F& k, std::size_t n) {
  std::vector<std::vector<std::vector<long long>>> c(n, std::vector<std::vector<long long>>(n, std::vector<long long>(n, 0)));
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) {
    labels.push_back(i == 0 ? "1" : (i == 1 ? "x" : "x" + std::to_string(i)));
    for (std::size_t j = 0; j < n; ++j)
      if (i + j < n) c[i][j][i + j] = 1;
  }
  std::vector<long long> u(n, 0);
  u[0] = 1;
  return algebra_from_ints(k, c, u, labels, "k[x]/(x^" + std::to_string(n) + ")");
}

/// Full matrix algebra M_n(k), basis E_ij in row-major order.
template <ExactField F>
AlgebraPtr<F> matrix_algebra(const F& k, std::size_t n) {
  std::size_t d = n * n;
  std::vector<std::vector<std::vector<long long>>> c(d, std::vector<std::vector<long long>>(d, std::vector<long long>(d, 0)));
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      labels.push_back("E" + std::to_string(i + 1) + std::to_string(j + 1));
      for (std::size_t l = 0; l < n; ++l) c[i * n + j][j * n + l][i * n + l] = 1;
    }
  std::vector<long long> u(d, 0);
  for (std::size_t i = 0; i < n; ++i) u[i * n + i] = 1;
  return algebra_from_ints(k, c, u, labels, "M" + std::to_string(n));
}

/// Upper-triangular 2x2 matrices, basis E11, E12, E22.
template <ExactField F>
AlgebraPtr<F> upper_triangular_2(const F& k) {
  // E11 E11 = E11, E11 E12 = E12, E12 E22 = E12, E22 E22 = E22
  std::vector<std::vector<std::vector<long long>>> c(3, std::vector<std::vector<long long>>(3, std::vector<long long>(3, 0)));
  c[0][0] = {1, 0, 0};
  c[0][1] = {0, 1, 0};
  c[1][2] = {0, 1, 0};
  c[2][2] = {0, 0, 1};
  return algebra_from_ints(k, c, std::vector<long long>{1, 0, 1}, {"E11", "E12", "E22"}, "T2");
}

/// The n-dimensional ring with zero multiplication.
template <ExactField F>
AlgebraPtr<F> null_ring(const F& k, std::size_t n) {
  std::vector<std::vector<std::vector<long long>>> c(n, std::vector<std::vector<long long>>(n, std::vector<long long>(n, 0)));
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back("z" + std::to_string(i + 1));
  return algebra_from_ints(k, c, std::nullopt, labels, "null" + std::to_string(n));
}

/// Row matrices {[[a,b],[0,0]]}: e = E11 is a left unit, f = E12; no two-sided unit.
template <ExactField F>
AlgebraPtr<F> row_algebra(const F& k) {
  std::vector<std::vector<std::vector<long long>>> c(2, std::vector<std::vector<long long>>(2, std::vector<long long>(2, 0)));
  c[0][0] = {1, 0};
  c[0][1] = {0, 1};
  return algebra_from_ints(k, c, std::nullopt, {"e", "f"}, "row");
}

/// GF(4) over GF(2), basis 1, w with w^2 = w + 1.
inline AlgebraPtr<PrimeField> gf4(const PrimeField& k) {
  if (k.p != 2) throw Error("gf4 requires GF(2)");
  return algebra_from_ints(k, {{{1, 0}, {0, 1}}, {{0, 1}, {1, 1}}}, std::vector<long long>{1, 0}, {"1", "w"}, "GF4");
}

/// Inclusion of the ground field via the unit.
template <ExactField F>
RingHom<F> unit_inclusion(const AlgebraPtr<F>& a) {
  if (!a->unital()) throw UnitRequired("unit_inclusion: " + a->name + " has no unit");
  return {ground_algebra(a->field), a, *a->unit, true};
}

}  // namespace coringlab
