#pragma once

#include <vector>

#include "coringlab/bimod.hpp"

namespace testsupport {

// Independent oracle: ambient dimension minus the rank of the relations,
// listed by looping over basis triples with raw action entries and reduced
// with a separate elimination routine.
template <class F>
std::size_t oracle_tensor_dim(const coringlab::Bimodule<F>& m, const coringlab::Bimodule<F>& n) {
  const F& k = m.field();
  std::size_t amb = m.dim * n.dim;
  std::vector<std::vector<typename F::value_type>> rows;
  for (std::size_t i = 0; i < m.dim; ++i)
    for (std::size_t a = 0; a < m.right_act.size(); ++a)
      for (std::size_t l = 0; l < n.dim; ++l) {
        std::vector<typename F::value_type> v(amb, k.zero());
        for (std::size_t p = 0; p < m.dim; ++p) v[p * n.dim + l] = k.add(v[p * n.dim + l], m.right_act[a](p, i));
        for (std::size_t q = 0; q < n.dim; ++q) v[i * n.dim + q] = k.sub(v[i * n.dim + q], n.left_act[a](q, l));
        rows.push_back(v);
      }
  std::size_t r = 0;
  for (std::size_t c = 0; c < amb; ++c) {
    std::size_t p = r;
    while (p < rows.size() && k.is_zero(rows[p][c])) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[r]);
    for (std::size_t i = r + 1; i < rows.size(); ++i) {
      if (k.is_zero(rows[i][c])) continue;
      auto f = k.mul(rows[i][c], k.inv(rows[r][c]));
      for (std::size_t j = 0; j < amb; ++j) rows[i][j] = k.sub(rows[i][j], k.mul(f, rows[r][j]));
    }
    ++r;
  }
  return amb - r;
}

}  // namespace testsupport
