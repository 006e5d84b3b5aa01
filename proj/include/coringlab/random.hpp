#pragma once

// Seeded generators for small random modules.

#include <random>

#include "bimod.hpp"

namespace coringlab {

template <ExactField F>
Mat<F> random_vector(const F& k, std::size_t n, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> d(-1, 2);
  Mat<F> v(k, n, 1);
  for (std::size_t i = 0; i < n; ++i) v(i, 0) = k.from_int(d(rng));
  return v;
}

namespace detail {

template <ExactField F>
ModPtr<F> random_quotient_of_free(const ModPtr<F>& one, std::size_t max_dim, std::mt19937_64& rng) {
  const F& k = one->field();
  for (int attempt = 0; attempt < 20; ++attempt) {
    std::size_t n = 1 + rng() % 2;
    auto free = power(one, n);
    std::size_t gens = rng() % 3;
    Mat<F> g(k, free->dim, 0);
    for (std::size_t i = 0; i < gens; ++i) g = hstack(g, random_vector(k, free->dim, rng));
    auto rel = gens == 0 ? Subspace<F>(k, free->dim) : generated_submodule(*free, g);
    auto q = quotient_module(free, rel);
    if (q.module->dim > 0 && q.module->dim <= max_dim) return q.module;
  }
  return nullptr;
}

}  // namespace detail

/// A quotient of a free right A-module of rank 1 or 2 by a random cyclic-generated
/// submodule; nullptr if no attempt landed in 1..max_dim.
template <ExactField F>
ModPtr<F> random_right_module(const AlgebraPtr<F>& a, std::size_t max_dim, std::mt19937_64& rng) {
  return detail::random_quotient_of_free(as_right_module(regular_bimodule(a)), max_dim, rng);
}

template <ExactField F>
ModPtr<F> random_left_module(const AlgebraPtr<F>& a, std::size_t max_dim, std::mt19937_64& rng) {
  return detail::random_quotient_of_free(as_left_module(regular_bimodule(a)), max_dim, rng);
}

}  // namespace coringlab
