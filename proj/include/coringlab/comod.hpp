#pragma once

// Right comodules over a coring, comodule Hom-spaces, endomorphism rings and
// cotensor products.

#include <optional>
#include <string>
#include <vector>

#include "corings.hpp"

namespace coringlab {

/// rho : X -> X (x)_A C in the coordinates of tensor_over(carrier, C).
template <ExactField F>
struct Comodule {
  CoringPtr<F> coring;
  ModPtr<F> carrier;
  Mat<F> rho;
  std::string name;
};

/// Same coaction on the carrier with its left structure forgotten.
template <ExactField F>
Comodule<F> as_right_comodule(const Comodule<F>& x) {
  return {x.coring, as_right_module(x.carrier), x.rho, x.name};
}

template <ExactField F>
CheckReport check_comodule(const Comodule<F>& x, const CoringComonad<F>& g) {
  CheckReport rep;
  const auto& c = *x.coring;
  if (!same_algebra(x.carrier->right, c.base)) {
    rep.fail("carrier is not a module over the base of " + c.name);
    return rep;
  }
  const auto& xc = g.G(x.carrier);
  if (x.rho.rows() != xc.result->dim || x.rho.cols() != x.carrier->dim) {
    rep.fail("coaction has shape " + x.rho.shape());
    return rep;
  }
  detail::linearity_failures(x.rho, *as_right_module(x.carrier), *as_right_module(xc.result), "coaction", rep);
  if (!rep.ok()) return rep;
  Mat<F> lhs = g.G_map(x.rho, x.carrier, xc.result) * x.rho;
  Mat<F> rhs = g.delta(x.carrier) * x.rho;
  if (auto m = detail::first_bad_column(lhs, rhs, "coassociativity"); !m.empty()) rep.fail(m);
  Mat<F> counit = g.eps(x.carrier) * x.rho;
  if (auto m = detail::first_bad_column(counit, x.carrier->identity(), "counit law"); !m.empty()) rep.fail(m);
  return rep;
}

template <ExactField F>
CheckReport check_comodule(const Comodule<F>& x) {
  return check_comodule(x, CoringComonad<F>(x.coring));
}

/// rho_2 f = (f (x) C) rho_1 and f is linear for the carrier structures.
template <ExactField F>
bool is_comodule_map(const Mat<F>& f, const Comodule<F>& x, const Comodule<F>& y, const CoringComonad<F>& g) {
  if (f.rows() != y.carrier->dim || f.cols() != x.carrier->dim) return false;
  if (!is_bimodule_map(f, *as_right_module(x.carrier), *as_right_module(y.carrier))) return false;
  return y.rho * f == g.G_map(f, x.carrier, y.carrier) * x.rho;
}

/// C as a right comodule over itself.
template <ExactField F>
Comodule<F> regular_comodule(const CoringPtr<F>& c) {
  return {c, as_right_module(c->carrier), c->delta, c->name};
}

/// (A, a |-> 1 (x) g a).
template <ExactField F>
Comodule<F> comodule_from_grouplike(const Grouplike<F>& gl) {
  const auto& c = *gl.coring;
  const auto& a = c.base;
  if (!a->unital()) throw UnitRequired("comodule_from_grouplike: " + a->name + " has no unit");
  auto x = as_right_module(regular_bimodule(a));
  auto t = tensor_over(x, c.carrier);
  Mat<F> rho(a->field, t.result->dim, a->dim);
  for (std::size_t i = 0; i < a->dim; ++i) rho.set_col(i, t.pure(*a->unit, c.carrier->right_act[i] * gl.g));
  return {gl.coring, x, rho, a->name + "_g"};
}

/// {a in A : a g = g a}.
template <ExactField F>
Subspace<F> coinvariants(const Grouplike<F>& gl) {
  const auto& c = *gl.coring;
  Mat<F> m(c.field(), c.dim(), c.base->dim);
  for (std::size_t i = 0; i < c.base->dim; ++i) m.set_col(i, c.carrier->right_act[i] * gl.g - c.carrier->left_act[i] * gl.g);
  return kernel(m);
}

// ---------------------------------------------------------------------------
// Comodule Hom

template <ExactField F>
struct ComoduleHom {
  HomSpace<F> hom;     // Hom_A(Sigma, X)
  Subspace<F> space;   // Hom_C(Sigma, X) inside hom coordinates
  ModPtr<F> module;    // with the right action inherited from the left structure of Sigma
  Mat<F> inclusion;    // hom coordinates x space coordinates

  std::size_t dim() const { return space.dim(); }
  Mat<F> element(std::size_t i) const { return hom.element_of(inclusion.col(i)); }
};

/// Equalizer of f |-> rho_X f and f |-> (f (x) C) rho_Sigma inside Hom_A(Sigma, X).
template <ExactField F>
ComoduleHom<F> hom_comodules(const Comodule<F>& sigma, const Comodule<F>& x, const CoringComonad<F>& g) {
  ComoduleHom<F> out;
  out.hom = hom_right(sigma.carrier, x.carrier);
  const auto& sc = g.G(sigma.carrier);
  const auto& xc = g.G(x.carrier);
  Mat<F> ic = x.coring->carrier->identity();
  const F& k = sigma.carrier->field();
  Mat<F> diff(k, xc.result->dim * sigma.carrier->dim, out.hom.dim());
  for (std::size_t i = 0; i < out.hom.dim(); ++i) {
    Mat<F> f = out.hom.element(i);
    Mat<F> d = x.rho * f - induced_map(f, ic, sc, xc) * sigma.rho;
    diff.set_col(i, d.flattened());
  }
  out.space = kernel(diff);
  auto sub = submodule(out.hom.module, out.space);
  Bimodule<F> named = *sub.module;
  named.name = "Hom_C(" + sigma.name + "," + x.name + ")";
  out.module = share(std::move(named));
  out.inclusion = sub.inclusion;
  return out;
}

template <ExactField F>
ComoduleHom<F> hom_comodules(const Comodule<F>& sigma, const Comodule<F>& x) {
  return hom_comodules(sigma, x, CoringComonad<F>(sigma.coring));
}

template <ExactField F>
struct EndRing {
  MatrixAlgebra<F> t;                // T = End_C(Sigma), acting on the left of Sigma
  std::optional<RingHom<F>> lambda;  // B -> T, b |-> left multiplication by b
  ModPtr<F> sigma_t;                 // Sigma as a (T,A)-bimodule
};

template <ExactField F>
EndRing<F> end_ring(const Comodule<F>& sigma, const CoringComonad<F>& g) {
  auto s = as_right_comodule(sigma);
  auto h = hom_comodules(s, s, g);
  const F& k = sigma.carrier->field();
  std::vector<Mat<F>> gens;
  for (std::size_t i = 0; i < h.dim(); ++i) gens.push_back(h.element(i));
  EndRing<F> out;
  out.t = algebra_of_matrices(k, sigma.carrier->dim, gens, "End_C(" + sigma.name + ")");
  const auto& b = sigma.carrier->left;
  Mat<F> lam(k, out.t.algebra->dim, b->dim);
  bool ok = true;
  for (std::size_t i = 0; i < b->dim && ok; ++i) {
    Mat<F> v = sigma.carrier->left_act[i].flattened();
    if (!out.t.span.contains(v))
      ok = false;
    else
      lam.set_col(i, out.t.span.coords(v));
  }
  if (ok) out.lambda = RingHom<F>{b, out.t.algebra, lam, b->unital()};
  Bimodule<F> st = *sigma.carrier;
  st.left = out.t.algebra;
  st.left_act = out.t.basis;
  st.name = sigma.name + "_T";
  out.sigma_t = share(std::move(st));
  return out;
}

template <ExactField F>
EndRing<F> end_ring(const Comodule<F>& sigma) {
  return end_ring(sigma, CoringComonad<F>(sigma.coring));
}

// ---------------------------------------------------------------------------
// Cotensor product

template <ExactField F>
struct Cotensor {
  Tensor<F> x_sd;         // X (x)_A Sigma^dagger
  Submodule<F> equalizer;  // X box_C Sigma^dagger inside x_sd.result
};

/// Equalizer of X (x) alpha and rho_X (x) Sigma^dagger, compared inside X (x) (C (x) Sigma^dagger).
/// alpha : Sigma^dagger -> C (x)_A Sigma^dagger in the coordinates of tensor_over(C, Sigma^dagger).
template <ExactField F>
Cotensor<F> cotensor(const Comodule<F>& x, const ModPtr<F>& sigma_dagger, const Mat<F>& alpha) {
  const auto& c = *x.coring;
  auto tt = triple_tensor(x.carrier, c.carrier, sigma_dagger);
  Cotensor<F> out;
  out.x_sd = tensor_over(x.carrier, sigma_dagger);
  Mat<F> lhs = induced_map(x.carrier->identity(), alpha, out.x_sd, tt.m_np);
  Mat<F> rhs = tt.left_to_right * induced_map(x.rho, sigma_dagger->identity(), out.x_sd, tt.mn_p);
  out.equalizer = equalizer_in_mod(out.x_sd.result, lhs, rhs);
  return out;
}

}  // namespace coringlab
