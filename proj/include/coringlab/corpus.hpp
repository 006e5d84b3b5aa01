#pragma once

// The built-in instances I1-I5, the I4 toy used for nu_firm, and seeded random
// coalgebra instances over GF(2).

#include <random>
#include <string>
#include <vector>

#include "galois.hpp"
#include "random.hpp"

namespace coringlab {

/// (B,A)-bimodule A with B acting through iota.
template <ExactField F>
ModPtr<F> restricted_regular(const RingHom<F>& iota, const std::string& name) {
  Bimodule<F> m = *restrict_scalars<F>(regular_bimodule(iota.target), iota, std::nullopt);
  m.name = name;
  return share(std::move(m));
}

/// A = B = Sigma = k, C = k.
template <ExactField F>
GaloisInstance<F> corpus_i1(const F& k) {
  auto a = ground_algebra(k);
  auto c = trivial_coring(a);
  Bimodule<F> s = *regular_bimodule(a);
  s.name = "Sigma";
  return {"i1_trivial", c, {c, share(std::move(s)), c->delta, "Sigma"}, {}, std::nullopt};
}

/// Sweedler coring of GF(4) over GF(2); Sigma = A with the coaction of g = 1 (x) 1.
inline GaloisInstance<PrimeField> corpus_i2() {
  PrimeField k(2);
  auto a = gf4(k);
  auto sw = sweedler_coring(unit_inclusion(a));
  auto sg = comodule_from_grouplike(sw.grouplike);
  Comodule<PrimeField> sigma{sw.coring, restricted_regular(sw.iota, "Sigma"), sg.rho, "Sigma"};
  return {"i2_f4_over_f2", sw.coring, sigma, {sg}, std::nullopt};
}

/// Comatrix coring of Sigma = k^2 over k.
template <ExactField F>
GaloisInstance<F> corpus_i3(const F& k) {
  auto a = ground_algebra(k);
  Bimodule<F> s = *power(regular_bimodule(a), 2);
  s.name = "Sigma";
  auto sigma = share(std::move(s));
  auto db = is_fg_projective(sigma);
  auto cm = comatrix_coring(sigma, *db);
  auto sc = tensor_over(sigma, cm.coring->carrier);
  Mat<F> rho(k, sc.result->dim, sigma->dim);
  for (std::size_t j = 0; j < sigma->dim; ++j)
    for (std::size_t i = 0; i < db->count(); ++i)
      rho.set_col(j, rho.col(j) + sc.pure(db->elements[i], cm.carrier_tensor.pure(cm.dual_coords[i], Mat<F>::unit_vector(k, 2, j))));
  return {"i3_comatrix", cm.coring, {cm.coring, sigma, rho, "Sigma"}, {}, std::nullopt};
}

/// Firm non-unital row ring; the instance is R acting on itself over the trivial coring k.
inline GaloisInstance<PrimeField> corpus_i4() {
  PrimeField k(2);
  auto r = row_algebra(k);
  auto a = ground_algebra(k);
  auto c = trivial_coring(a);
  Bimodule<PrimeField> s = *as_left_module(regular_bimodule(r));
  s.right = c->base;
  s.name = "Sigma";
  auto sigma = share(std::move(s));
  auto sc = tensor_over(sigma, c->carrier);
  Mat<PrimeField> rho(k, sc.result->dim, sigma->dim);
  for (std::size_t j = 0; j < sigma->dim; ++j) rho.set_col(j, sc.pure(Mat<PrimeField>::unit_vector(k, 2, j), *a->unit));
  return {"i4_row_firm", c, {c, sigma, rho, "Sigma"}, {}, std::nullopt};
}

/// Trivial coring on GF(4), B = GF(2), Sigma = A.
inline GaloisInstance<PrimeField> corpus_i5() {
  PrimeField k(2);
  auto a = gf4(k);
  auto c = trivial_coring(a);
  Comodule<PrimeField> sigma{c, restricted_regular(unit_inclusion(a), "Sigma"), c->delta, "Sigma"};
  auto ag = comodule_from_grouplike(Grouplike<PrimeField>{c, *a->unit});
  return {"i5_trivial_f4", c, sigma, {ag}, std::nullopt};
}

inline std::vector<std::string> corpus_ids() {
  return {"i1_trivial", "i2_f4_over_f2", "i3_comatrix", "i4_row_firm", "i5_trivial_f4"};
}

// ---------------------------------------------------------------------------
// Random instances

/// Unital algebras of dimension 1 or 2 over GF(2), up to isomorphism.
inline AlgebraPtr<PrimeField> small_unital_algebra(std::size_t which) {
  PrimeField k(2);
  switch (which % 4) {
    case 0: return ground_algebra(k);
    case 1: return product_of_fields(k, 2);
    case 2: return truncated_polynomials(k, 2);
    default: return gf4(k);
  }
}

/// C = D* for the algebra D; Delta is the transpose of the multiplication, eps the transpose of the unit.
inline CoringPtr<PrimeField> dual_coalgebra(const AlgebraPtr<PrimeField>& d) {
  const PrimeField& k = d->field;
  auto base = ground_algebra(k);
  Bimodule<PrimeField> c = *power(regular_bimodule(base), d->dim);
  c.name = d->name + "*";
  auto carrier = share(std::move(c));
  auto cc = tensor_over(carrier, carrier);
  std::size_t n = d->dim;
  Mat<PrimeField> delta(k, cc.result->dim, n), eps(k, 1, n);
  for (std::size_t m = 0; m < n; ++m) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (!k.is_zero(d->constant(i, j, m)))
          delta.set_col(m, delta.col(m) + cc.pure(Mat<PrimeField>::unit_vector(k, n, i), Mat<PrimeField>::unit_vector(k, n, j))
                                              .scaled(d->constant(i, j, m)));
    eps(0, m) = (*d->unit)(m, 0);
  }
  return make_coring<PrimeField>(carrier, delta, eps, "(" + d->name + ")*");
}

/// Right D*-comodule from a left D-module: rho(u) = sum_i d_i u (x) c_i.
inline Comodule<PrimeField> comodule_from_left_module(const CoringPtr<PrimeField>& c, const ModPtr<PrimeField>& m,
                                                      const std::string& name) {
  const PrimeField& k = m->field();
  Bimodule<PrimeField> s;
  s.left = c->base;
  s.right = c->base;
  s.dim = m->dim;
  s.left_act = {m->identity()};
  s.right_act = {m->identity()};
  s.name = name;
  auto carrier = share(std::move(s));
  auto sc = tensor_over(carrier, c->carrier);
  Mat<PrimeField> rho(k, sc.result->dim, m->dim);
  for (std::size_t j = 0; j < m->dim; ++j)
    for (std::size_t i = 0; i < c->dim(); ++i)
      rho.set_col(j, rho.col(j) + sc.pure(m->left_act[i] * Mat<PrimeField>::unit_vector(k, m->dim, j),
                                          Mat<PrimeField>::unit_vector(k, c->dim(), i)));
  return {c, carrier, rho, name};
}

/// A = B = GF(2), C = D* with dim D <= 2, Sigma a random comodule of dim <= 2.
inline GaloisInstance<PrimeField> random_instance(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  auto d = small_unital_algebra(rng() % 4);
  auto c = dual_coalgebra(d);
  ModPtr<PrimeField> m;
  while (!m) m = random_left_module(d, 2, rng);
  return {"random_" + std::to_string(seed), c, comodule_from_left_module(c, m, "Sigma"), {}, std::nullopt};
}

}  // namespace coringlab
