#pragma once

// Bimodules over finite-dimensional algebras, tensor products over a ring,
// Hom-spaces and equalizers in module categories.
//
// A one-sided module is a bimodule whose other algebra is the ground field.

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "algebra.hpp"

namespace coringlab {

template <ExactField F>
struct Bimodule {
  AlgebraPtr<F> left;
  AlgebraPtr<F> right;
  std::size_t dim = 0;
  std::vector<Mat<F>> left_act;   // matrix of u |-> b_i u
  std::vector<Mat<F>> right_act;  // matrix of u |-> u a_j
  std::string name;

  const F& field() const { return left->field; }

  Mat<F> left_by(const Mat<F>& b) const {
    Mat<F> m(field(), dim, dim);
    for (std::size_t i = 0; i < left_act.size(); ++i)
      if (!field().is_zero(b(i, 0))) m += left_act[i].scaled(b(i, 0));
    return m;
  }
  Mat<F> right_by(const Mat<F>& a) const {
    Mat<F> m(field(), dim, dim);
    for (std::size_t j = 0; j < right_act.size(); ++j)
      if (!field().is_zero(a(j, 0))) m += right_act[j].scaled(a(j, 0));
    return m;
  }
  Mat<F> identity() const { return Mat<F>::identity(field(), dim); }
};

template <ExactField F>
using ModPtr = std::shared_ptr<const Bimodule<F>>;

template <ExactField F>
ModPtr<F> share(Bimodule<F> m) {
  return std::make_shared<const Bimodule<F>>(std::move(m));
}

template <ExactField F>
struct BimoduleMap {
  ModPtr<F> source;
  ModPtr<F> target;
  Mat<F> matrix;
};

template <ExactField F>
CheckReport check_bimodule(const Bimodule<F>& m, bool require_unital_actions = false) {
  CheckReport rep;
  const auto& b = *m.left;
  const auto& a = *m.right;
  if (m.left_act.size() != b.dim || m.right_act.size() != a.dim) {
    rep.fail("action tensor sizes do not match algebra dimensions");
    return rep;
  }
  for (std::size_t i = 0; i < b.dim; ++i)
    for (std::size_t j = 0; j < b.dim; ++j)
      if (!(m.left_act[i] * m.left_act[j] == m.left_by(b.left_mult[i].col(j))))
        rep.fail("left action not associative at (" + b.label(i) + "," + b.label(j) + ")");
  for (std::size_t i = 0; i < a.dim; ++i)
    for (std::size_t j = 0; j < a.dim; ++j)
      if (!(m.right_act[j] * m.right_act[i] == m.right_by(a.left_mult[i].col(j))))
        rep.fail("right action not associative at (" + a.label(i) + "," + a.label(j) + ")");
  for (std::size_t i = 0; i < b.dim; ++i)
    for (std::size_t j = 0; j < a.dim; ++j)
      if (!(m.left_act[i] * m.right_act[j] == m.right_act[j] * m.left_act[i]))
        rep.fail("actions do not commute at (" + b.label(i) + "," + a.label(j) + ")");
  if (require_unital_actions) {
    if (b.unital() && !(m.left_by(*b.unit) == m.identity())) rep.fail("left unit does not act as identity");
    if (a.unital() && !(m.right_by(*a.unit) == m.identity())) rep.fail("right unit does not act as identity");
  }
  return rep;
}

/// f commutes with both actions.
template <ExactField F>
bool is_bimodule_map(const Mat<F>& f, const Bimodule<F>& src, const Bimodule<F>& dst) {
  if (f.rows() != dst.dim || f.cols() != src.dim) return false;
  for (std::size_t i = 0; i < src.left_act.size(); ++i)
    if (!(f * src.left_act[i] == dst.left_act[i] * f)) return false;
  for (std::size_t j = 0; j < src.right_act.size(); ++j)
    if (!(f * src.right_act[j] == dst.right_act[j] * f)) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Constructors

/// A as an (A,A)-bimodule.
template <ExactField F>
ModPtr<F> regular_bimodule(const AlgebraPtr<F>& a) {
  Bimodule<F> m;
  m.left = a;
  m.right = a;
  m.dim = a->dim;
  m.left_act = a->left_mult;
  for (std::size_t j = 0; j < a->dim; ++j) m.right_act.push_back(a->right_mult(j));
  m.name = a->name;
  return share(std::move(m));
}

/// Replace the left algebra by the ground field (forget the left action).
template <ExactField F>
ModPtr<F> as_right_module(const ModPtr<F>& m) {
  if (m->left->dim == 1 && m->left->unital() && m->left->name == "k") return m;
  Bimodule<F> r = *m;
  r.left = ground_algebra(m->field());
  r.left_act = {m->identity()};
  return share(std::move(r));
}

template <ExactField F>
ModPtr<F> as_left_module(const ModPtr<F>& m) {
  Bimodule<F> r = *m;
  r.right = ground_algebra(m->field());
  r.right_act = {m->identity()};
  return share(std::move(r));
}

/// Restriction of scalars along ring homomorphisms into the current algebras.
template <ExactField F>
ModPtr<F> restrict_scalars(const ModPtr<F>& m, const std::optional<RingHom<F>>& on_left,
                           const std::optional<RingHom<F>>& on_right) {
  Bimodule<F> r = *m;
  if (on_left) {
    if (!same_algebra(on_left->target, m->left)) throw DimensionMismatch("restrict_scalars: left target mismatch");
    r.left = on_left->source;
    r.left_act.clear();
    for (std::size_t i = 0; i < on_left->source->dim; ++i) r.left_act.push_back(m->left_by(on_left->matrix.col(i)));
  }
  if (on_right) {
    if (!same_algebra(on_right->target, m->right)) throw DimensionMismatch("restrict_scalars: right target mismatch");
    r.right = on_right->source;
    r.right_act.clear();
    for (std::size_t j = 0; j < on_right->source->dim; ++j) r.right_act.push_back(m->right_by(on_right->matrix.col(j)));
  }
  return share(std::move(r));
}

template <ExactField F>
ModPtr<F> zero_module(const AlgebraPtr<F>& left, const AlgebraPtr<F>& right) {
  Bimodule<F> m;
  m.left = left;
  m.right = right;
  m.dim = 0;
  m.left_act.assign(left->dim, Mat<F>(left->field, 0, 0));
  m.right_act.assign(right->dim, Mat<F>(left->field, 0, 0));
  m.name = "0";
  return share(std::move(m));
}

template <ExactField F>
ModPtr<F> direct_sum(const ModPtr<F>& x, const ModPtr<F>& y) {
  if (!same_algebra(x->left, y->left) || !same_algebra(x->right, y->right))
    throw DimensionMismatch("direct_sum: algebras differ");
  Bimodule<F> m;
  m.left = x->left;
  m.right = x->right;
  m.dim = x->dim + y->dim;
  for (std::size_t i = 0; i < x->left_act.size(); ++i) m.left_act.push_back(direct_sum(x->left_act[i], y->left_act[i]));
  for (std::size_t j = 0; j < x->right_act.size(); ++j)
    m.right_act.push_back(direct_sum(x->right_act[j], y->right_act[j]));
  m.name = x->name + "+" + y->name;
  return share(std::move(m));
}

template <ExactField F>
ModPtr<F> power(const ModPtr<F>& x, std::size_t n) {
  if (n == 0) return zero_module(x->left, x->right);
  ModPtr<F> r = x;
  for (std::size_t i = 1; i < n; ++i) r = direct_sum(r, x);
  Bimodule<F> named = *r;
  named.name = x->name + "^" + std::to_string(n);
  return share(std::move(named));
}

template <ExactField F>
struct Submodule {
  ModPtr<F> module;
  Mat<F> inclusion;  // ambient x sub
};

/// The sub-bimodule carried by `s`; throws NotStable if `s` is not closed under the actions.
template <ExactField F>
Submodule<F> submodule(const ModPtr<F>& m, const Subspace<F>& s) {
  Bimodule<F> sub;
  sub.left = m->left;
  sub.right = m->right;
  sub.dim = s.dim();
  sub.name = "sub(" + m->name + ")";
  Mat<F> incl = s.inclusion();
  auto restrict_action = [&](const Mat<F>& act) {
    Mat<F> img = act * incl;
    if (!s.contains(img)) throw NotStable("subspace of " + m->name + " is not closed under the actions");
    return s.coords(img);
  };
  for (const auto& l : m->left_act) sub.left_act.push_back(restrict_action(l));
  for (const auto& r : m->right_act) sub.right_act.push_back(restrict_action(r));
  return {share(std::move(sub)), incl};
}

template <ExactField F>
struct QuotientModule {
  ModPtr<F> module;
  Mat<F> projection;  // quotient x ambient
  Mat<F> section;
};

template <ExactField F>
QuotientModule<F> quotient_module(const ModPtr<F>& m, const Subspace<F>& s) {
  submodule(m, s);  // stability check
  auto q = quotient(m->dim, s);
  Bimodule<F> r;
  r.left = m->left;
  r.right = m->right;
  r.dim = q.dim;
  r.name = m->name + "/sub";
  for (const auto& l : m->left_act) r.left_act.push_back(q.projection * l * q.section);
  for (const auto& a : m->right_act) r.right_act.push_back(q.projection * a * q.section);
  return {share(std::move(r)), q.projection, q.section};
}

/// Submodule generated by the columns of `gens`.
template <ExactField F>
Subspace<F> generated_submodule(const Bimodule<F>& m, const Mat<F>& gens, bool include_generators = true) {
  Subspace<F> s = include_generators ? Subspace<F>::column_span(gens) : Subspace<F>(m.field(), m.dim);
  if (!include_generators) {
    Mat<F> imgs(m.field(), m.dim, 0);
    for (const auto& l : m.left_act) imgs = hstack(imgs, l * gens);
    for (const auto& r : m.right_act) imgs = hstack(imgs, r * gens);
    for (const auto& l : m.left_act)
      for (const auto& r : m.right_act) imgs = hstack(imgs, l * r * gens);
    s = Subspace<F>::column_span(imgs);
  }
  while (true) {
    Mat<F> cur = s.inclusion();
    Mat<F> all = cur;
    for (const auto& l : m.left_act) all = hstack(all, l * cur);
    for (const auto& r : m.right_act) all = hstack(all, r * cur);
    auto next = Subspace<F>::column_span(all);
    if (next.dim() == s.dim()) return next;
    s = next;
  }
}

// ---------------------------------------------------------------------------
// Tensor product over a ring

template <ExactField F>
struct Tensor {
  ModPtr<F> left;
  ModPtr<F> right;
  ModPtr<F> result;
  QuotientData<F> q;

  std::size_t ambient_index(std::size_t i, std::size_t j) const { return i * right->dim + j; }
  /// Class of the pure tensor of two column vectors.
  Mat<F> pure(const Mat<F>& m, const Mat<F>& n) const { return q.projection * kron(m, n); }
  Mat<F> pure_basis(std::size_t i, std::size_t j) const { return q.projection.col(ambient_index(i, j)); }
};

/// Relations m a (x) n - m (x) a n for all basis triples, as columns.
template <ExactField F>
Mat<F> balancing_relations(const Bimodule<F>& m, const Bimodule<F>& n) {
  const F& k = m.field();
  Mat<F> rel(k, m.dim * n.dim, 0);
  Mat<F> im = m.identity(), in = n.identity();
  for (std::size_t j = 0; j < m.right_act.size(); ++j)
    rel = hstack(rel, kron(m.right_act[j], in) - kron(im, n.left_act[j]));
  return rel;
}

template <ExactField F>
Tensor<F> tensor_over(const ModPtr<F>& m, const ModPtr<F>& n) {
  if (!same_algebra(m->right, n->left))
    throw DimensionMismatch("tensor_over: " + m->name + " is over " + m->right->name + " but " + n->name +
                            " is over " + n->left->name);
  const F& k = m->field();
  Tensor<F> t;
  t.left = m;
  t.right = n;
  t.q = quotient(m->dim * n->dim, Subspace<F>::column_span(balancing_relations(*m, *n)));
  Bimodule<F> r;
  r.left = m->left;
  r.right = n->right;
  r.dim = t.q.dim;
  r.name = "(" + m->name + "@" + n->name + ")";
  Mat<F> in = n->identity(), im = m->identity();
  for (const auto& l : m->left_act) r.left_act.push_back(t.q.projection * kron(l, in) * t.q.section);
  for (const auto& a : n->right_act) r.right_act.push_back(t.q.projection * kron(im, a) * t.q.section);
  (void)k;
  t.result = share(std::move(r));
  return t;
}

/// Descends a map defined on the ambient k-tensor to the balanced quotient.
template <ExactField F>
Mat<F> descend(const Tensor<F>& t, const Mat<F>& ambient_map) {
  if (ambient_map.cols() != t.q.ambient_dim) throw DimensionMismatch("descend: ambient size");
  if (t.q.relations.dim() > 0 && !(ambient_map * t.q.relations.inclusion()).is_zero())
    throw NotBalanced("map on " + t.left->name + " (x) " + t.right->name + " is not balanced");
  return ambient_map * t.q.section;
}

/// Builds the ambient map column by column from a function of basis pairs, then descends.
template <ExactField F>
Mat<F> map_on_tensor(const Tensor<F>& t, std::size_t target_dim,
                     const std::function<Mat<F>(std::size_t, std::size_t)>& on_pair) {
  Mat<F> amb(t.left->field(), target_dim, t.q.ambient_dim);
  for (std::size_t i = 0; i < t.left->dim; ++i)
    for (std::size_t j = 0; j < t.right->dim; ++j) amb.set_col(t.ambient_index(i, j), on_pair(i, j));
  return descend(t, amb);
}

/// Calls fn(p, q, c) for the nonzero terms c m_p (x) n_q of the section of basis element i.
template <ExactField F>
void for_each_term(const Tensor<F>& t, std::size_t i,
                   const std::function<void(std::size_t, std::size_t, const typename F::value_type&)>& fn) {
  const F& k = t.left->field();
  for (std::size_t p = 0; p < t.left->dim; ++p)
    for (std::size_t q = 0; q < t.right->dim; ++q) {
      const auto& c = t.q.section(t.ambient_index(p, q), i);
      if (!k.is_zero(c)) fn(p, q, c);
    }
}

/// f (x) g between balanced tensors.
template <ExactField F>
Mat<F> induced_map(const Mat<F>& f, const Mat<F>& g, const Tensor<F>& src, const Tensor<F>& dst) {
  if (f.cols() != src.left->dim || g.cols() != src.right->dim || f.rows() != dst.left->dim || g.rows() != dst.right->dim)
    throw DimensionMismatch("induced_map: factor shapes do not match the tensors");
  return descend(src, dst.q.projection * kron(f, g));
}

/// (M (x) N) (x) P -> M (x) (N (x) P).
template <ExactField F>
Mat<F> associator(const Tensor<F>& mn, const Tensor<F>& mn_p, const Tensor<F>& np, const Tensor<F>& m_np) {
  Mat<F> amb = m_np.q.projection * kron(m_np.left->identity(), np.q.projection) * kron(mn.q.section, np.right->identity());
  return descend(mn_p, amb);
}

/// M (x) (N (x) P) -> (M (x) N) (x) P.
template <ExactField F>
Mat<F> associator_inverse(const Tensor<F>& mn, const Tensor<F>& mn_p, const Tensor<F>& np, const Tensor<F>& m_np) {
  Mat<F> amb = mn_p.q.projection * kron(mn.q.projection, np.right->identity()) * kron(mn.left->identity(), np.q.section);
  return descend(m_np, amb);
}

/// Both bracketings of a triple tensor product together with the associator.
template <ExactField F>
struct TripleTensor {
  Tensor<F> mn, mn_p, np, m_np;
  Mat<F> left_to_right;  // (MN)P -> M(NP)
  Mat<F> right_to_left;
};

template <ExactField F>
TripleTensor<F> triple_tensor(const ModPtr<F>& m, const ModPtr<F>& n, const ModPtr<F>& p) {
  TripleTensor<F> t;
  t.mn = tensor_over(m, n);
  t.mn_p = tensor_over(t.mn.result, p);
  t.np = tensor_over(n, p);
  t.m_np = tensor_over(m, t.np.result);
  t.left_to_right = associator(t.mn, t.mn_p, t.np, t.m_np);
  t.right_to_left = associator_inverse(t.mn, t.mn_p, t.np, t.m_np);
  return t;
}

// ---------------------------------------------------------------------------
// Hom spaces

/// Hom_A(S, X) for S a (B,A)- and X a (D,A)-bimodule; carries the (D,B)-structure
/// (d f b)(u) = d f(b u). Elements are X.dim x S.dim matrices flattened row-major.
template <ExactField F>
struct HomSpace {
  ModPtr<F> source;
  ModPtr<F> target;
  Subspace<F> space;
  ModPtr<F> module;

  std::size_t dim() const { return space.dim(); }
  Mat<F> element(std::size_t i) const { return space.basis().row(i).transpose().reshaped(target->dim, source->dim); }
  Mat<F> element_of(const Mat<F>& coords) const {
    return (space.inclusion() * coords).reshaped(target->dim, source->dim);
  }
  Mat<F> coords_of(const Mat<F>& f) const {
    Mat<F> v = f.flattened();
    if (!space.contains(v)) throw FactorizationFailure("matrix is not in Hom(" + source->name + "," + target->name + ")");
    return space.coords(v);
  }
  bool contains(const Mat<F>& f) const { return space.contains(f.flattened()); }
};

template <ExactField F>
HomSpace<F> hom_right(const ModPtr<F>& sigma, const ModPtr<F>& x) {
  if (!same_algebra(sigma->right, x->right)) throw DimensionMismatch("hom_right: right algebras differ");
  const F& k = sigma->field();
  Mat<F> is = sigma->identity(), ix = x->identity();
  Mat<F> constraints(k, 0, x->dim * sigma->dim);
  for (std::size_t j = 0; j < sigma->right_act.size(); ++j)
    constraints = vstack(constraints, kron(ix, sigma->right_act[j].transpose()) - kron(x->right_act[j], is));
  HomSpace<F> h;
  h.source = sigma;
  h.target = x;
  h.space = kernel(constraints);
  Bimodule<F> m;
  m.left = x->left;
  m.right = sigma->left;
  m.dim = h.space.dim();
  m.name = "Hom(" + sigma->name + "," + x->name + ")";
  Mat<F> incl = h.space.inclusion();
  for (const auto& d : x->left_act) m.left_act.push_back(h.space.coords(kron(d, is) * incl));
  for (const auto& b : sigma->left_act) m.right_act.push_back(h.space.coords(kron(ix, b.transpose()) * incl));
  h.module = share(std::move(m));
  return h;
}

/// Hom(S, f): post-composition with f : X -> X'.
template <ExactField F>
Mat<F> hom_post(const HomSpace<F>& from, const HomSpace<F>& to, const Mat<F>& f) {
  Mat<F> img = kron(f, from.source->identity()) * from.space.inclusion();
  if (!to.space.contains(img)) throw FactorizationFailure("hom_post: image outside target Hom space");
  return to.space.coords(img);
}

/// Hom(g, X): pre-composition with g : S' -> S.
template <ExactField F>
Mat<F> hom_pre(const HomSpace<F>& from, const HomSpace<F>& to, const Mat<F>& g) {
  Mat<F> img = kron(from.target->identity(), g.transpose()) * from.space.inclusion();
  if (!to.space.contains(img)) throw FactorizationFailure("hom_pre: image outside target Hom space");
  return to.space.coords(img);
}

// ---------------------------------------------------------------------------
// Firmness of modules

template <ExactField F>
struct FirmData {
  Tensor<F> tensor;            // M (x)_A A  or  A (x)_A M
  Mat<F> multiplication;       // varpi
  std::optional<Mat<F>> inverse;  // d, when firm
};

/// varpi^+ : M (x)_A A -> M.
template <ExactField F>
FirmData<F> right_firmness(const ModPtr<F>& m) {
  FirmData<F> fd{tensor_over(m, regular_bimodule(m->right)), {}, {}};
  fd.multiplication = map_on_tensor<F>(fd.tensor, m->dim, [&](std::size_t i, std::size_t j) { return m->right_act[j].col(i); });
  fd.inverse = inverse(fd.multiplication);
  return fd;
}

/// varpi^- : A (x)_A M -> M.
template <ExactField F>
FirmData<F> left_firmness(const ModPtr<F>& m) {
  FirmData<F> fd{tensor_over(regular_bimodule(m->left), m), {}, {}};
  fd.multiplication = map_on_tensor<F>(fd.tensor, m->dim, [&](std::size_t j, std::size_t i) { return m->left_act[j].col(i); });
  fd.inverse = inverse(fd.multiplication);
  return fd;
}

/// d^+_M when M is firm as a right module.
template <ExactField F>
std::optional<Mat<F>> is_firm_module(const ModPtr<F>& m) {
  return right_firmness(m).inverse;
}

template <ExactField F>
std::optional<Mat<F>> is_left_firm_module(const ModPtr<F>& m) {
  return left_firmness(m).inverse;
}

// ---------------------------------------------------------------------------
// Equalizers

/// Equalizer of f, g : M -> N in the bimodule category: ker(f - g) with inherited actions.
template <ExactField F>
Submodule<F> equalizer_in_mod(const ModPtr<F>& source, const Mat<F>& f, const Mat<F>& g) {
  if (f.cols() != source->dim || g.cols() != source->dim || f.rows() != g.rows())
    throw DimensionMismatch("equalizer_in_mod: maps are not parallel");
  return submodule(source, kernel(f - g));
}

/// The unique u with incl * u = h, when h factors through the inclusion.
template <ExactField F>
std::optional<Mat<F>> factor_through(const Mat<F>& incl, const Mat<F>& h) {
  auto x = solve(incl, h);
  if (!x || !(incl * *x == h)) return std::nullopt;
  return x;
}

}  // namespace coringlab
