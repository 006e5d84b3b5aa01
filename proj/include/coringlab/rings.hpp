#pragma once

// Firm rings, ideals, the Jacobson radical and simple modules.

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "bimod.hpp"

namespace coringlab {

template <ExactField F>
struct FirmWitness {
  Tensor<F> tensor;   // A (x)_A A
  Mat<F> mult_map;    // A (x)_A A -> A
  Mat<F> d;           // its inverse
};

template <ExactField F>
std::optional<FirmWitness<F>> is_firm_ring(const AlgebraPtr<F>& a) {
  auto fd = right_firmness(regular_bimodule(a));
  if (!fd.inverse) return std::nullopt;
  return FirmWitness<F>{fd.tensor, fd.multiplication, *fd.inverse};
}

template <ExactField F>
Subspace<F> image_of(const RingHom<F>& f) {
  return Subspace<F>::column_span(f.matrix);
}

/// T . lambda(B) contained in lambda(B).
template <ExactField F>
bool is_left_ideal_via(const RingHom<F>& hom) {
  auto img = image_of(hom);
  if (img.dim() == 0) return true;
  Mat<F> incl = img.inclusion();
  for (const auto& l : hom.target->left_mult)
    if (!img.contains(l * incl)) return false;
  return true;
}

template <ExactField F>
bool is_two_sided_ideal(const Algebra<F>& a, const Subspace<F>& s) {
  if (s.dim() == 0) return true;
  Mat<F> incl = s.inclusion();
  for (std::size_t i = 0; i < a.dim; ++i)
    if (!s.contains(a.left_mult[i] * incl) || !s.contains(a.right_mult(i) * incl)) return false;
  return true;
}

/// Algebra spanned by a family of square matrices closed under products.
/// Basis is the RREF basis of their span; unit is set when the identity lies in the span.
template <ExactField F>
struct MatrixAlgebra {
  AlgebraPtr<F> algebra;
  std::vector<Mat<F>> basis;  // matrices representing the basis elements
  Subspace<F> span;           // flattened
};

template <ExactField F>
MatrixAlgebra<F> algebra_of_matrices(const F& k, std::size_t n, const std::vector<Mat<F>>& gens, const std::string& name) {
  Mat<F> rows(k, 0, n * n);
  for (const auto& g : gens) rows = vstack(rows, g.flattened().transpose());
  MatrixAlgebra<F> out;
  out.span = Subspace<F>::row_span(rows);
  std::size_t d = out.span.dim();
  for (std::size_t i = 0; i < d; ++i) out.basis.push_back(out.span.basis().row(i).transpose().reshaped(n, n));
  std::vector<std::vector<Mat<F>>> prods(d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      Mat<F> p = (out.basis[i] * out.basis[j]).flattened();
      if (!out.span.contains(p)) throw NotStable("matrix family for " + name + " is not closed under products");
      prods[i].push_back(out.span.coords(p));
    }
  std::optional<Mat<F>> unit;
  Mat<F> id = Mat<F>::identity(k, n).flattened();
  if (out.span.contains(id)) unit = out.span.coords(id);
  out.algebra = make_algebra(k, d, prods, unit, {}, name);
  return out;
}

template <ExactField F>
struct QuotientAlgebra {
  AlgebraPtr<F> algebra;
  RingHom<F> projection;
  Mat<F> section;
};

template <ExactField F>
QuotientAlgebra<F> quotient_algebra(const AlgebraPtr<F>& a, const Subspace<F>& ideal) {
  if (!is_two_sided_ideal(*a, ideal)) throw NotStable("quotient_algebra: subspace is not a two-sided ideal");
  auto q = quotient(a->dim, ideal);
  std::vector<std::vector<Mat<F>>> prods(q.dim);
  for (std::size_t i = 0; i < q.dim; ++i)
    for (std::size_t j = 0; j < q.dim; ++j) prods[i].push_back(q.projection * a->product(q.section.col(i), q.section.col(j)));
  std::optional<Mat<F>> unit;
  if (a->unital()) unit = q.projection * *a->unit;
  auto qa = make_algebra(a->field, q.dim, prods, unit, {}, a->name + "/J");
  return {qa, RingHom<F>{a, qa, q.projection, a->unital()}, q.section};
}

/// Calls `visit` on every vector of k^n when k is finite and the count is at most `cap`;
/// otherwise on vectors with entries in {0, 1, -1}. Returns false if the enumeration
/// was not exhaustive.
template <ExactField F>
bool for_each_vector(const F& k, std::size_t n, std::uint64_t cap, const std::function<void(const Mat<F>&)>& visit) {
  std::uint64_t q = k.order();
  bool exhaustive = q != 0;
  std::vector<long long> values;
  if (exhaustive) {
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < n && exhaustive; ++i) {
      total *= q;
      if (total > cap) exhaustive = false;
    }
  }
  if (exhaustive)
    for (std::uint64_t v = 0; v < q; ++v) values.push_back(static_cast<long long>(v));
  else
    values = {0, 1, -1};
  std::vector<std::size_t> digit(n, 0);
  Mat<F> v(k, n, 1);
  while (true) {
    for (std::size_t i = 0; i < n; ++i) v(i, 0) = k.from_int(values[digit[i]]);
    visit(v);
    std::size_t i = 0;
    while (i < n && ++digit[i] == values.size()) digit[i++] = 0;
    if (i == n) break;
  }
  return exhaustive;
}

template <ExactField F>
bool is_nilpotent_element(const Algebra<F>& a, const Mat<F>& z) {
  Mat<F> l = a.left_mult_by(z);
  Mat<F> p = z;
  for (std::size_t i = 0; i < a.dim; ++i) p = l * p;
  return p.is_zero();
}

/// Radical of the form (x, y) |-> tr(L_{xy}); a two-sided ideal containing J(A).
template <ExactField F>
Subspace<F> trace_form_radical(const Algebra<F>& a) {
  const F& k = a.field;
  Mat<F> g(k, a.dim, a.dim);
  for (std::size_t i = 0; i < a.dim; ++i)
    for (std::size_t j = 0; j < a.dim; ++j) {
      Mat<F> l = a.left_mult_by(a.left_mult[i].col(j));
      auto t = k.zero();
      for (std::size_t d = 0; d < a.dim; ++d) t = k.add(t, l(d, d));
      g(i, j) = t;
    }
  return kernel(g.transpose());
}

template <ExactField F>
Subspace<F> jacobson_radical(const AlgebraPtr<F>& a) {
  if (!a->unital()) throw UnitRequired("jacobson_radical: " + a->name + " has no unit");
  const F& k = a->field;
  Subspace<F> cand = trace_form_radical(*a);
  if (k.characteristic() == 0 || k.characteristic() > a->dim || cand.dim() == 0) return cand;

  // Small characteristic: J = {x in cand : x y nilpotent for every y}.
  std::uint64_t q = k.order();
  std::uint64_t budget = std::uint64_t{1} << 22, total = 1;
  for (std::size_t i = 0; i < cand.dim() + a->dim; ++i) {
    total *= q;
    if (total > budget)
      throw UnsupportedField("jacobson_radical: " + a->name + " too large for exhaustive search over " + k.name());
  }
  Mat<F> incl = cand.inclusion();
  Mat<F> nil_elems(k, a->dim, 0);
  for_each_vector<F>(k, cand.dim(), budget, [&](const Mat<F>& c) {
    Mat<F> x = incl * c;
    if (x.is_zero()) return;
    bool nil = true;
    for_each_vector<F>(k, a->dim, budget, [&](const Mat<F>& y) {
      if (nil && !is_nilpotent_element(*a, a->product(x, y))) nil = false;
    });
    if (nil) nil_elems = hstack(nil_elems, x);
  });
  return Subspace<F>::column_span(nil_elems);
}

template <ExactField F>
bool is_nilpotent_ideal(const Algebra<F>& a, const Subspace<F>& ideal) {
  Subspace<F> power = ideal;
  for (std::size_t m = 0; m <= a.dim && power.dim() > 0; ++m) {
    Mat<F> prods(a.field, a.dim, 0);
    Mat<F> pi = power.inclusion(), ii = ideal.inclusion();
    for (std::size_t i = 0; i < pi.cols(); ++i)
      for (std::size_t j = 0; j < ii.cols(); ++j) prods = hstack(prods, a.product(pi.col(i), ii.col(j)));
    power = Subspace<F>::column_span(prods);
  }
  return power.dim() == 0;
}

/// A simple right module together with the dimension of its endomorphism ring.
template <ExactField F>
struct SimpleModule {
  ModPtr<F> module;
  std::size_t end_dim = 0;
};

/// Pairwise non-isomorphic simple right modules of A/J(A), as right A-modules.
/// Certified complete by the Wedderburn count sum dim(S)^2 / dim End(S) = dim A/J.
template <ExactField F>
std::vector<SimpleModule<F>> simple_right_modules(const AlgebraPtr<F>& a) {
  const F& k = a->field;
  auto qa = quotient_algebra(a, jacobson_radical(a));
  const auto& abar = qa.algebra;
  auto reg = as_right_module(regular_bimodule(abar));

  std::vector<SimpleModule<F>> found;
  std::vector<ModPtr<F>> found_bar;
  std::size_t count = 0;
  while (count < abar->dim) {
    std::optional<Subspace<F>> best;
    for_each_vector<F>(k, abar->dim, std::uint64_t{1} << 14, [&](const Mat<F>& x) {
      if (x.is_zero()) return;
      Mat<F> gens(k, abar->dim, 0);
      for (std::size_t j = 0; j < abar->dim; ++j) gens = hstack(gens, abar->right_mult(j) * x);
      auto ideal = Subspace<F>::column_span(gens);
      if (ideal.dim() == 0 || (best && best->dim() <= ideal.dim())) return;
      auto sub = submodule(reg, ideal).module;
      for (const auto& s : found_bar)
        if (hom_right(s, sub).dim() > 0) return;
      best = ideal;
    });
    if (!best) break;
    auto s_bar = submodule(reg, *best).module;
    std::size_t end_dim = hom_right(s_bar, s_bar).dim();
    found_bar.push_back(s_bar);
    count += s_bar->dim * s_bar->dim / end_dim;
    Bimodule<F> named = *restrict_scalars<F>(s_bar, std::nullopt, qa.projection);
    named.name = "S" + std::to_string(found.size() + 1);
    found.push_back({share(std::move(named)), end_dim});
  }
  if (count != abar->dim)
    throw UnsupportedField("simple_right_modules: could not certify the simple modules of " + a->name + " over " + k.name());
  return found;
}

}  // namespace coringlab
