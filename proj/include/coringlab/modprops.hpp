#pragma once

// Projectivity, flatness, faithful flatness and reflection of isomorphisms.
//
// Flatness and reflection quantify over whole module categories; here they are
// decided on finite probe families, and results say so.

#include <optional>
#include <string>
#include <vector>

#include "rings.hpp"

namespace coringlab {

/// Finite dual basis of a right A-module: u = sum_i e_i . f_i(u).
template <ExactField F>
struct DualBasis {
  std::vector<Mat<F>> elements;     // vectors in Sigma
  std::vector<Mat<F>> functionals;  // A.dim x Sigma.dim matrices
  std::size_t count() const { return elements.size(); }
};

/// Sum_i e_i f_i(u) for every basis vector u, as a matrix (should be the identity).
template <ExactField F>
Mat<F> dual_basis_identity(const Bimodule<F>& sigma, const DualBasis<F>& db) {
  Mat<F> total(sigma.field(), sigma.dim, sigma.dim);
  for (std::size_t i = 0; i < db.count(); ++i)
    for (std::size_t u = 0; u < sigma.dim; ++u) {
      Mat<F> val = db.functionals[i].col(u);
      Mat<F> img = sigma.right_by(val) * db.elements[i];
      for (std::size_t r = 0; r < sigma.dim; ++r) total(r, u) = sigma.field().add(total(r, u), img(r, 0));
    }
  return total;
}

/// Greedy choice of basis vectors generating Sigma as a right module.
template <ExactField F>
std::vector<std::size_t> right_generators(const Bimodule<F>& sigma) {
  const F& k = sigma.field();
  std::vector<std::size_t> gens;
  Subspace<F> covered(k, sigma.dim);
  for (std::size_t i = 0; i < sigma.dim && covered.dim() < sigma.dim; ++i) {
    Mat<F> e = Mat<F>::unit_vector(k, sigma.dim, i);
    if (covered.contains(e)) continue;
    Mat<F> span = e;
    for (const auto& r : sigma.right_act) span = hstack(span, r * e);
    auto next = subspace_sum(covered, Subspace<F>::column_span(span));
    if (next.dim() > covered.dim()) {
      gens.push_back(i);
      covered = next;
    }
  }
  return gens;
}

/// Dual basis when Sigma_A is finitely generated projective: splits A^n -> Sigma.
template <ExactField F>
std::optional<DualBasis<F>> is_fg_projective(const ModPtr<F>& sigma) {
  const auto& a = *sigma->right;
  if (!a.unital()) throw UnitRequired("is_fg_projective: " + a.name + " has no unit");
  const F& k = sigma->field();
  auto gens = right_generators(*sigma);
  std::size_t n = gens.size(), da = a.dim, m = sigma->dim, free_dim = n * da;
  if (m == 0) return DualBasis<F>{};
  // pi(e_i (x) a_j) = u_i a_j
  Mat<F> pi(k, m, free_dim);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < da; ++j) pi.set_col(i * da + j, sigma->right_act[j].col(gens[i]));
  auto free_right = [&](std::size_t j) {
    Mat<F> r(k, free_dim, free_dim);
    Mat<F> rj = a.right_mult(j);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t p = 0; p < da; ++p)
        for (std::size_t q = 0; q < da; ++q) r(i * da + p, i * da + q) = rj(p, q);
    return r;
  };
  // unknown s : Sigma -> A^n, flattened row-major
  Mat<F> im = Mat<F>::identity(k, m), ifree = Mat<F>::identity(k, free_dim);
  Mat<F> sys = kron(pi, im);
  Mat<F> rhs = im.flattened();
  for (std::size_t j = 0; j < da; ++j) {
    sys = vstack(sys, kron(ifree, sigma->right_act[j].transpose()) - kron(free_right(j), im));
    rhs = vstack(rhs, Mat<F>(k, free_dim * m, 1));
  }
  auto sol = solve(sys, rhs);
  if (!sol) return std::nullopt;
  Mat<F> s = sol->reshaped(free_dim, m);
  DualBasis<F> db;
  for (std::size_t i = 0; i < n; ++i) {
    db.elements.push_back(Mat<F>::unit_vector(k, m, gens[i]));
    std::vector<std::size_t> rows;
    for (std::size_t j = 0; j < da; ++j) rows.push_back(i * da + j);
    db.functionals.push_back(s.select_rows(rows));
  }
  return db;
}

// ---------------------------------------------------------------------------
// Probes

/// An injective map of right modules used to test exactness.
template <ExactField F>
struct MonoProbe {
  ModPtr<F> source;
  ModPtr<F> target;
  Mat<F> map;
  std::string name;
};

/// Cyclic submodules of B^2 generated by basis vectors and by sums of two basis vectors,
/// and the right ideals generated by basis elements of B.
template <ExactField F>
std::vector<MonoProbe<F>> default_mono_probes(const AlgebraPtr<F>& b) {
  const F& k = b->field;
  std::vector<MonoProbe<F>> out;
  auto breg = as_right_module(regular_bimodule(b));
  auto add_cyclic = [&](const ModPtr<F>& ambient, const Mat<F>& gen, const std::string& name) {
    auto s = generated_submodule(*ambient, gen, b->unital());
    if (s.dim() == 0) return;
    auto sub = submodule(ambient, s);
    out.push_back({sub.module, ambient, sub.inclusion, name});
  };
  for (std::size_t i = 0; i < b->dim; ++i) add_cyclic(breg, b->basis_vector(i), b->label(i) + "B");
  auto b2 = power(breg, 2);
  for (std::size_t i = 0; i < b2->dim; ++i) {
    add_cyclic(b2, Mat<F>::unit_vector(k, b2->dim, i), "<v" + std::to_string(i) + ">");
    for (std::size_t j = i + 1; j < b2->dim; ++j)
      add_cyclic(b2, Mat<F>::unit_vector(k, b2->dim, i) + Mat<F>::unit_vector(k, b2->dim, j),
                 "<v" + std::to_string(i) + "+v" + std::to_string(j) + ">");
  }
  return out;
}

/// - (x)_B Sigma keeps every probe injective.
template <ExactField F>
struct FlatnessResult {
  bool flat = true;
  bool probe_verified = true;
  std::vector<std::string> failing_probes;
};

template <ExactField F>
FlatnessResult<F> is_flat(const AlgebraPtr<F>& b, const ModPtr<F>& sigma, std::vector<MonoProbe<F>> probes = {},
                          bool include_defaults = true) {
  if (!same_algebra(b, sigma->left)) throw DimensionMismatch("is_flat: Sigma is not a left module over " + b->name);
  if (include_defaults) {
    auto d = default_mono_probes(b);
    probes.insert(probes.end(), d.begin(), d.end());
  }
  FlatnessResult<F> res;
  for (const auto& p : probes) {
    auto ts = tensor_over(p.source, sigma);
    auto tt = tensor_over(p.target, sigma);
    Mat<F> fm = induced_map(p.map, sigma->identity(), ts, tt);
    if (!is_injective(fm)) {
      res.flat = false;
      res.failing_probes.push_back(p.name);
    }
  }
  return res;
}

template <ExactField F>
struct FaithfulFlatnessResult {
  bool faithfully_flat = false;
  bool flat = false;
  bool probe_verified = true;
  std::vector<std::string> killed;  // simple (or probe) modules with zero tensor
};

template <ExactField F>
FaithfulFlatnessResult<F> is_faithfully_flat(const AlgebraPtr<F>& b, const ModPtr<F>& sigma) {
  FaithfulFlatnessResult<F> res;
  res.flat = is_flat(b, sigma).flat;
  if (b->unital()) {
    for (const auto& s : simple_right_modules(b))
      if (tensor_over(s.module, sigma).result->dim == 0) res.killed.push_back(s.module->name);
  } else {
    for (const auto& p : default_mono_probes(b)) {
      if (!is_firm_module(p.source)) continue;
      if (tensor_over(p.source, sigma).result->dim == 0) res.killed.push_back(p.name);
    }
  }
  res.faithfully_flat = res.flat && res.killed.empty();
  return res;
}

/// A map of right B-modules used to test reflection of isomorphisms.
template <ExactField F>
struct MapProbe {
  ModPtr<F> source;
  ModPtr<F> target;
  Mat<F> map;
  std::string name;
};

/// Maps among B, B^2 and the simple modules whose coordinates in a Hom basis are 0/1,
/// at most 2^cap_bits per ordered pair.
template <ExactField F>
std::vector<MapProbe<F>> default_map_probes(const AlgebraPtr<F>& b, std::size_t cap_bits = 10) {
  const F& k = b->field;
  std::vector<ModPtr<F>> objs;
  auto breg = as_right_module(regular_bimodule(b));
  objs.push_back(breg);
  objs.push_back(power(breg, 2));
  if (b->unital())
    for (const auto& s : simple_right_modules(b)) objs.push_back(s.module);
  std::vector<MapProbe<F>> out;
  for (const auto& src : objs)
    for (const auto& dst : objs) {
      auto h = hom_right(src, dst);
      std::size_t d = h.dim();
      std::size_t bits = d < cap_bits ? d : cap_bits;
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << bits); ++mask) {
        Mat<F> c(k, d, 1);
        for (std::size_t i = 0; i < bits; ++i)
          if (mask >> i & 1) c(i, 0) = k.one();
        out.push_back({src, dst, h.element_of(c), src->name + "->" + dst->name + "#" + std::to_string(mask)});
      }
    }
  return out;
}

template <ExactField F>
struct ReflectionResult {
  bool reflects = true;
  bool probe_verified = true;
  std::vector<std::string> counterexamples;
};

/// For every probe f: f (x) Sigma invertible implies f invertible.
template <ExactField F>
ReflectionResult<F> reflects_isos_probe(const AlgebraPtr<F>& b, const ModPtr<F>& sigma, std::vector<MapProbe<F>> probes = {},
                                        bool include_defaults = true) {
  if (include_defaults) {
    auto d = default_map_probes(b);
    probes.insert(probes.end(), d.begin(), d.end());
  }
  ReflectionResult<F> res;
  for (const auto& p : probes) {
    auto ts = tensor_over(p.source, sigma);
    auto tt = tensor_over(p.target, sigma);
    Mat<F> fm = induced_map(p.map, sigma->identity(), ts, tt);
    if (is_invertible(fm) && !is_invertible(p.map)) {
      res.reflects = false;
      res.counterexamples.push_back(p.name);
    }
  }
  return res;
}

}  // namespace coringlab
