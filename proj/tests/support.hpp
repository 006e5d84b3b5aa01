#pragma once

#include <random>

#include "coringlab/coringlab.hpp"

namespace testsupport {

using namespace coringlab;
using F2 = PrimeField;
using Q = RationalField;

inline PrimeField gf(std::uint64_t p) { return PrimeField(p); }

template <ExactField F>
Mat<F> random_mat(const F& k, std::size_t r, std::size_t c, std::mt19937_64& rng, int lo = -2, int hi = 2) {
  std::uniform_int_distribution<int> d(lo, hi);
  Mat<F> m(k, r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = k.from_int(d(rng));
  return m;
}

template <ExactField F>
Mat<F> ints(const F& k, std::size_t r, std::size_t c, std::vector<long long> v) {
  return Mat<F>::from_ints(k, r, c, v);
}

}  // namespace testsupport
