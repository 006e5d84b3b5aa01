#pragma once

// Canonical maps, the ring S = Sigma (x)_A Sigma*, Sigma^dagger, the nu
// isomorphisms, and one verifier per characterization of Galois comodules.

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "comonadlab.hpp"

namespace coringlab {

// ---------------------------------------------------------------------------
// The ring S

template <ExactField F>
struct SRing {
  AlgebraPtr<F> algebra;
  HomSpace<F> dual;    // Sigma* = Hom_A(Sigma, A)
  Tensor<F> tensor;    // Sigma (x)_A Sigma*
  Mat<F> to_end;       // S -> End(Sigma), flattened
  Mat<F> to_end_dual;  // S -> End(Sigma*), flattened; matrix of phi |-> phi s

  Mat<F> end_of(const Mat<F>& s) const {
    std::size_t n = tensor.left->dim;
    return (to_end * s).reshaped(n, n);
  }
  Mat<F> end_dual_of(const Mat<F>& s) const {
    std::size_t n = dual.dim();
    return (to_end_dual * s).reshaped(n, n);
  }
};

/// mu(x (x) phi (x) y (x) psi) = x phi(y) (x) psi.
template <ExactField F>
SRing<F> build_s_ring(const ModPtr<F>& sigma) {
  const auto& a = sigma->right;
  if (!a->unital()) throw UnitRequired("build_s_ring: " + a->name + " has no unit");
  const F& k = sigma->field();
  SRing<F> s;
  s.dual = hom_right(sigma, regular_bimodule(a));
  s.tensor = tensor_over(sigma, s.dual.module);
  const auto& t = s.tensor;
  std::size_t n = sigma->dim, m = s.dual.dim(), d = t.result->dim;

  Mat<F> amb(k, n * n, t.q.ambient_dim);
  Mat<F> amb_dual(k, m * m, t.q.ambient_dim);
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q < m; ++q) {
      Mat<F> phi = s.dual.element(q);
      Mat<F> e(k, n, n);
      for (std::size_t j = 0; j < n; ++j) e.set_col(j, sigma->right_by(phi.col(j)) * Mat<F>::unit_vector(k, n, p));
      amb.set_col(t.ambient_index(p, q), e.flattened());
      // phi' |-> phi'(x_p) psi_q
      Mat<F> ed(k, m, m);
      for (std::size_t r = 0; r < m; ++r)
        ed.set_col(r, s.dual.module->left_by(s.dual.element(r).col(p)) * Mat<F>::unit_vector(k, m, q));
      amb_dual.set_col(t.ambient_index(p, q), ed.flattened());
    }
  s.to_end = descend(t, amb);
  s.to_end_dual = descend(t, amb_dual);

  std::vector<std::vector<Mat<F>>> prods(d);
  std::vector<Mat<F>> lm;
  for (std::size_t i = 0; i < d; ++i)
    lm.push_back(induced_map(s.end_of(Mat<F>::unit_vector(k, d, i)), s.dual.module->identity(), t, t));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) prods[i].push_back(lm[i].col(j));

  // two-sided unit, if any
  std::optional<Mat<F>> unit;
  if (d > 0) {
    Mat<F> sys(k, 2 * d * d, d), rhs(k, 2 * d * d, 1);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j)
        for (std::size_t r = 0; r < d; ++r) {
          sys(j * d + r, i) = lm[i](r, j);
          sys(d * d + j * d + r, i) = lm[j](r, i);
          if (r == j) rhs(j * d + r, 0) = rhs(d * d + j * d + r, 0) = k.one();
        }
    if (auto e = solve(sys, rhs); e && sys * *e == rhs) unit = *e;
  }
  s.algebra = make_algebra(k, d, prods, unit, {}, "S");
  return s;
}

/// Algebra axioms plus multiplicativity of S -> End(Sigma) and anti-multiplicativity of S -> End(Sigma*).
template <ExactField F>
CheckReport check_s_ring(const SRing<F>& s) {
  CheckReport rep = check_algebra(*s.algebra);
  const auto& a = *s.algebra;
  for (std::size_t i = 0; i < a.dim; ++i)
    for (std::size_t j = 0; j < a.dim; ++j) {
      Mat<F> ei = a.basis_vector(i), ej = a.basis_vector(j), ij = a.left_mult[i].col(j);
      if (!(s.end_of(ij) == s.end_of(ei) * s.end_of(ej))) rep.fail("S -> End(Sigma) not multiplicative");
      if (!(s.end_dual_of(ij) == s.end_dual_of(ej) * s.end_dual_of(ei))) rep.fail("S -> End(Sigma*) not multiplicative");
    }
  return rep;
}

/// iota(b) = sum_i b e_i (x) e_i* for a dual basis of Sigma_A; it factors the left action through S.
template <ExactField F>
RingHom<F> iota_from_dual_basis(const ModPtr<F>& sigma, const SRing<F>& s, const DualBasis<F>& db) {
  const auto& b = sigma->left;
  const F& k = sigma->field();
  Mat<F> m(k, s.algebra->dim, b->dim);
  for (std::size_t l = 0; l < b->dim; ++l)
    for (std::size_t i = 0; i < db.count(); ++i)
      m.set_col(l, m.col(l) + s.tensor.pure(sigma->left_act[l] * db.elements[i], s.dual.coords_of(db.functionals[i])));
  bool unital = b->unital() && s.algebra->unital() && m * *b->unit == *s.algebra->unit;
  return {b, s.algebra, m, unital};
}

// ---------------------------------------------------------------------------
// Sigma^dagger

template <ExactField F>
struct DaggerData {
  SRing<F> s;
  RingHom<F> iota;
  ModPtr<F> sigma_r;       // Sigma with r u = e_r e_r*(u)
  ModPtr<F> dual_r;        // Sigma* with phi r = phi(e_r) e_r*
  Tensor<F> dagger_tensor;  // Sigma* (x)_R R
  ModPtr<F> sigma_dagger;
  std::shared_ptr<const DaggerAdjunction<F>> adj;
};

/// Actions of R on Sigma and Sigma* through iota.
template <ExactField F>
std::pair<ModPtr<F>, ModPtr<F>> install_iota(const ModPtr<F>& sigma, const SRing<F>& s, const RingHom<F>& iota) {
  if (!same_algebra(iota.target, s.algebra)) throw DimensionMismatch("install_iota: iota does not land in S");
  if (auto rep = check_hom(iota); !rep.ok()) throw ValidationError("iota", rep.failures.front());
  const auto& r = iota.source;
  Bimodule<F> sr = *sigma;
  sr.left = r;
  sr.left_act.clear();
  Bimodule<F> dr = *s.dual.module;
  dr.right = r;
  dr.right_act.clear();
  for (std::size_t l = 0; l < r->dim; ++l) {
    sr.left_act.push_back(s.end_of(iota.matrix.col(l)));
    dr.right_act.push_back(s.end_dual_of(iota.matrix.col(l)));
  }
  sr.name = sigma->name;
  dr.name = sigma->name + "*";
  for (const auto* m : {&sr, &dr})
    if (auto rep = check_bimodule(*m); !rep.ok()) throw ValidationError(m->name, rep.failures.front());
  return {share(std::move(sr)), share(std::move(dr))};
}

template <ExactField F>
DaggerData<F> build_sigma_dagger(const ModPtr<F>& sigma, const SRing<F>& s, const RingHom<F>& iota) {
  DaggerData<F> dd{s, iota, {}, {}, {}, {}, {}};
  std::tie(dd.sigma_r, dd.dual_r) = install_iota(sigma, s, iota);
  const auto& r = iota.source;
  const auto& a = sigma->right;
  const F& k = sigma->field();
  if (!is_left_firm_module(dd.sigma_r)) throw NotFirm("build_sigma_dagger: Sigma is not firm over " + r->name);
  auto w = is_firm_ring(r);
  if (!w) throw NotFirm("build_sigma_dagger: " + r->name + " is not firm");
  auto reg = regular_bimodule(r);
  dd.dagger_tensor = tensor_over(dd.dual_r, reg);
  Bimodule<F> named = *dd.dagger_tensor.result;
  named.name = sigma->name + "+";
  dd.sigma_dagger = share(std::move(named));

  // kappa(r) = e_s (x) e_s* (x) r^s with d_R(r) = s (x) r^s and iota(s) = e_s (x) e_s*
  auto tt = triple_tensor(dd.sigma_r, dd.dual_r, reg);
  Mat<F> to_s = induced_map(iota.matrix, reg->identity(), w->tensor, tt.mn_p);
  Mat<F> kappa = tt.left_to_right * to_s * w->d;

  // ev(phi (x) r (x) x) = phi(r x)
  auto sds = tensor_over(dd.sigma_dagger, dd.sigma_r);
  Mat<F> ev = map_on_tensor<F>(sds, a->dim, [&](std::size_t i, std::size_t j) {
    Mat<F> v(k, a->dim, 1);
    for_each_term<F>(dd.dagger_tensor, i, [&](std::size_t p, std::size_t q, const auto& c) {
      v += (s.dual.element(p) * dd.sigma_r->left_act[q].col(j)).scaled(c);
    });
    return v;
  });
  dd.adj = std::make_shared<const DaggerAdjunction<F>>(r, dd.sigma_r, dd.sigma_dagger, kappa, ev);
  return dd;
}

/// (Sigma^dagger (x)_R Sigma, Delta^dagger, eps_A) with Delta^dagger = eta_{Sigma^dagger} (x)_R Sigma.
template <ExactField F>
CoringPtr<F> comatrix_coring_firm(const DaggerData<F>& dd) {
  const auto& adj = *dd.adj;
  const auto& n = dd.sigma_dagger;
  const auto& ln = adj.L(n);
  const auto& rln = adj.R_tensor(ln.result);
  Mat<F> eta_s = adj.L_map(adj.unit(n), n, rln.result);
  const auto& sds = adj.sigma_dagger_sigma();
  auto x_sds = tensor_over(ln.result, sds.result);
  Mat<F> delta = associator(rln, adj.L(rln.result), sds, x_sds) * eta_s;
  Bimodule<F> carrier = *ln.result;
  carrier.name = n->name + "@" + adj.b()->name + adj.sigma()->name;
  return make_coring<F>(share(std::move(carrier)), delta, adj.ev(), "Comatrix+(" + adj.sigma()->name + ")");
}

// ---------------------------------------------------------------------------
// Canonical maps

/// u |-> f(u_[0]) u_[1] for an A-linear functional f on Sigma.
template <ExactField F>
Mat<F> functional_coaction(const Coring<F>& c, const Tensor<F>& sigma_c, const Mat<F>& rho_sigma, const Mat<F>& f) {
  Mat<F> amb(c.field(), c.dim(), sigma_c.q.ambient_dim);
  for (std::size_t x = 0; x < sigma_c.left->dim; ++x)
    for (std::size_t y = 0; y < c.dim(); ++y)
      amb.set_col(sigma_c.ambient_index(x, y), c.carrier->left_by(f.col(x)).col(y));
  return descend(sigma_c, amb) * rho_sigma;
}

/// can(phi (x) u) = phi(u_[0]) u_[1] on Sigma* (x)_B Sigma.
template <ExactField F>
Mat<F> can_coring(const ComatrixCoring<F>& cm, const Comodule<F>& sigma, const CoringComonad<F>& g) {
  const auto& c = *sigma.coring;
  const auto& t = cm.carrier_tensor;
  std::vector<Mat<F>> fc;
  for (std::size_t p = 0; p < cm.dual.dim(); ++p) fc.push_back(functional_coaction(c, g.G(sigma.carrier), sigma.rho, cm.dual.element(p)));
  return map_on_tensor<F>(t, c.dim(), [&](std::size_t p, std::size_t j) { return fc[p].col(j); });
}

/// can+(phi (x) r (x) u) = phi(r u_[0]) u_[1] on Sigma^dagger (x)_R Sigma.
template <ExactField F>
Mat<F> can_dagger(const DaggerData<F>& dd, const Comodule<F>& sigma, const CoringComonad<F>& g) {
  const auto& c = *sigma.coring;
  const auto& sds = dd.adj->sigma_dagger_sigma();
  const auto& sc = g.G(sigma.carrier);
  return map_on_tensor<F>(sds, c.dim(), [&](std::size_t i, std::size_t j) {
    Mat<F> v(c.field(), c.dim(), 1);
    for_each_term<F>(dd.dagger_tensor, i, [&](std::size_t p, std::size_t q, const auto& coef) {
      Mat<F> f = dd.s.dual.element(p) * dd.sigma_r->left_act[q];
      v += functional_coaction(c, sc, sigma.rho, f).col(j).scaled(coef);
    });
    return v;
  });
}

/// alpha_{Sigma^dagger} = (can+ (x)_A Sigma^dagger) o eta_{Sigma^dagger}, into C (x)_A Sigma^dagger.
template <ExactField F>
Mat<F> alpha_sigma_dagger(const DaggerData<F>& dd, const Coring<F>& c, const Mat<F>& can_plus) {
  const auto& adj = *dd.adj;
  const auto& n = dd.sigma_dagger;
  const auto& rln = adj.R_tensor(adj.L_obj(n));
  auto c_sd = tensor_over(c.carrier, n);
  return induced_map(can_plus, n->identity(), rln, c_sd) * adj.unit(n);
}

/// nu_X : Hom_A(Sigma, X) -> X (x)_A Sigma*, f |-> f(e_i) (x) e_i*. B unital.
template <ExactField F>
Mat<F> nu_finite(const HomAdjunction<F>& adj, const SRing<F>& s, const DualBasis<F>& db, const ModPtr<F>& x) {
  if (!adj.b()->unital()) throw UnitRequired("nu_finite: " + adj.b()->name + " has no unit");
  const auto& d = adj.rdata(x);
  auto t = tensor_over(x, s.dual.module);
  Mat<F> m(x->field(), t.result->dim, d.hom.dim());
  for (std::size_t p = 0; p < d.hom.dim(); ++p) {
    Mat<F> f = d.hom.element(p);
    for (std::size_t i = 0; i < db.count(); ++i) m.set_col(p, m.col(p) + t.pure(f * db.elements[i], s.dual.coords_of(db.functionals[i])));
  }
  return m;
}

/// nu_X : Hom_A(Sigma, X) (x)_R R -> X (x)_A Sigma^dagger, h (x) r |-> h(e_s) (x) e_s* (x) r^s.
template <ExactField F>
Mat<F> nu_firm(const HomAdjunction<F>& adj, const DaggerData<F>& dd, const ModPtr<F>& x) {
  const auto& d = adj.rdata(x);
  const auto& dag = *dd.adj;
  const auto& target = dag.R_tensor(x);
  std::vector<Mat<F>> h;
  for (std::size_t p = 0; p < d.hom.dim(); ++p)
    h.push_back(induced_map(d.hom.element(p), dd.sigma_dagger->identity(), dag.sigma_sigma_dagger(), target));
  const auto& r = adj.b();
  if (!d.hb) {
    Mat<F> k1 = dag.kappa() * *r->unit;
    Mat<F> m(x->field(), target.result->dim, d.hom.dim());
    for (std::size_t p = 0; p < h.size(); ++p) m.set_col(p, h[p] * k1);
    return m;
  }
  return map_on_tensor<F>(*d.hb, target.result->dim, [&](std::size_t p, std::size_t q) { return h[p] * dag.kappa().col(q); });
}

// ---------------------------------------------------------------------------
// Instances

template <ExactField F>
struct GaloisInstance {
  std::string id;
  CoringPtr<F> coring;
  Comodule<F> sigma;                   // carrier is a (B,A)-bimodule
  std::vector<Comodule<F>> comodules;  // further comodules used as probes
  std::optional<RingHom<F>> iota;      // R = B -> S; derived from a dual basis when absent
};

template <ExactField F>
struct ProbeComodule {
  std::string name;
  Comodule<F> comodule;
};

/// Everything derived from an instance, computed once.
template <ExactField F>
class GaloisLab {
 public:
  explicit GaloisLab(GaloisInstance<F> inst) : inst_(std::move(inst)) {
    const auto& sigma = inst_.sigma.carrier;
    b_ = sigma->left;
    a_ = sigma->right;
    g_ = std::make_shared<const CoringComonad<F>>(inst_.coring);
    adj_b_ = std::make_shared<const HomAdjunction<F>>(b_, sigma);
    can_.emplace(can_morphism<F>(adj_b_, g_, inst_.sigma.rho));
    sigma_firm_ = is_left_firm_module(sigma).has_value();
    end_.emplace(end_ring(inst_.sigma, *g_));
    adj_t_ = std::make_shared<const HomAdjunction<F>>(end_->t.algebra, end_->sigma_t);
    can_t_.emplace(can_morphism<F>(adj_t_, g_, inst_.sigma.rho));
    if (a_->unital()) {
      db_ = is_fg_projective(sigma);
      s_.emplace(build_s_ring(sigma));
    }
    if (db_ && b_->unital()) {
      comatrix_.emplace(comatrix_coring(sigma, *db_));
      can_fin_ = can_coring(*comatrix_, inst_.sigma, *g_);
    }
    std::optional<RingHom<F>> iota = inst_.iota;
    if (!iota && db_ && s_) iota = iota_from_dual_basis(sigma, *s_, *db_);
    if (iota && s_ && sigma_firm_) {
      dagger_.emplace(build_sigma_dagger(sigma, *s_, *iota));
      can_plus_ = can_dagger(*dagger_, inst_.sigma, *g_);
      alpha_dagger_ = alpha_sigma_dagger(*dagger_, *inst_.coring, *can_plus_);
    }
    build_probes();
  }

  const GaloisInstance<F>& instance() const { return inst_; }
  const AlgebraPtr<F>& a() const { return a_; }
  const AlgebraPtr<F>& b() const { return b_; }
  const ComonadPtr<F>& comonad() const { return g_; }
  const std::shared_ptr<const HomAdjunction<F>>& adj_b() const { return adj_b_; }
  const std::shared_ptr<const HomAdjunction<F>>& adj_t() const { return adj_t_; }
  const ComonadMorphism<F>& can() const { return *can_; }
  const ComonadMorphism<F>& can_t() const { return *can_t_; }
  const EndRing<F>& end() const { return *end_; }
  bool sigma_firm() const { return sigma_firm_; }
  const std::optional<DualBasis<F>>& dual_basis() const { return db_; }
  const std::optional<SRing<F>>& s_ring() const { return s_; }
  const std::optional<ComatrixCoring<F>>& comatrix() const { return comatrix_; }
  const std::optional<Mat<F>>& can_finite() const { return can_fin_; }
  const std::optional<DaggerData<F>>& dagger() const { return dagger_; }
  const std::optional<Mat<F>>& can_plus() const { return can_plus_; }
  const std::optional<Mat<F>>& alpha_dagger() const { return alpha_dagger_; }

  const std::vector<ModPtr<F>>& probe_modules() const { return probe_modules_; }
  const std::vector<ModPtr<F>>& probe_objects() const { return probe_objects_; }
  const std::vector<ProbeComodule<F>>& probe_comodules() const { return probe_comodules_; }

  std::optional<ComonadMorphism<F>> can_dagger_morphism() const {
    if (!dagger_) return std::nullopt;
    return can_morphism<F>(dagger_->adj, g_, inst_.sigma.rho);
  }

 private:
  void build_probes() {
    const F& k = a_->field;
    auto areg = as_right_module(regular_bimodule(a_));
    probe_modules_ = {areg, power(areg, 2), carrier_as_right_module(*inst_.coring), as_right_module(inst_.sigma.carrier)};
    auto breg = as_right_module(regular_bimodule(b_));
    probe_objects_ = {breg, power(breg, 2)};
    if (b_->unital())
      for (const auto& s : simple_right_modules(b_))
        if (s.module->dim != b_->dim) probe_objects_.push_back(s.module);
    probe_comodules_.push_back({"C", regular_comodule(inst_.coring)});
    probe_comodules_.push_back({inst_.sigma.name, as_right_comodule(inst_.sigma)});
    for (std::size_t i = 0; i < 2; ++i) {
      auto kc = K_phi(*can_, probe_objects_[i]);
      kc.name = i == 0 ? "K(B)" : "K(B^2)";
      probe_comodules_.push_back({kc.name, kc});
    }
    for (const auto& c : inst_.comodules) probe_comodules_.push_back({c.name, c});
    (void)k;
  }

  GaloisInstance<F> inst_;
  AlgebraPtr<F> a_, b_;
  ComonadPtr<F> g_;
  std::shared_ptr<const HomAdjunction<F>> adj_b_, adj_t_;
  std::optional<ComonadMorphism<F>> can_, can_t_;
  std::optional<EndRing<F>> end_;
  bool sigma_firm_ = false;
  std::optional<DualBasis<F>> db_;
  std::optional<SRing<F>> s_;
  std::optional<ComatrixCoring<F>> comatrix_;
  std::optional<Mat<F>> can_fin_;
  std::optional<DaggerData<F>> dagger_;
  std::optional<Mat<F>> can_plus_, alpha_dagger_;
  std::vector<ModPtr<F>> probe_modules_, probe_objects_;
  std::vector<ProbeComodule<F>> probe_comodules_;
};

// ---------------------------------------------------------------------------
// Conditions, each on its own code path

struct Condition {
  std::string id;
  std::string statement;
  std::optional<bool> value;  // empty when not evaluable
  bool probe_verified = false;
  std::string note;
};

struct TheoremReport {
  std::string theorem;
  std::vector<Condition> hypotheses;
  std::vector<Condition> conditions;

  /// All evaluable conditions share one truth value.
  bool agree() const {
    std::optional<bool> v;
    for (const auto& c : conditions) {
      if (!c.value) continue;
      if (v && *v != *c.value) return false;
      v = c.value;
    }
    return true;
  }
  bool hypotheses_hold() const {
    for (const auto& h : hypotheses)
      if (h.value && !*h.value) return false;
    return true;
  }
};

namespace cond {

template <ExactField F>
bool phi_iso(const ComonadMorphism<F>& cm, const std::vector<ModPtr<F>>& xs) {
  for (const auto& x : xs)
    if (!is_invertible(cm(x))) return false;
  return true;
}

template <ExactField F>
bool preserves_equalizers(const ComonadMorphism<F>& cm, const std::vector<ProbeComodule<F>>& cs) {
  for (const auto& c : cs)
    if (!L_preserves_equalizer(cm, c.comodule)) return false;
  return true;
}

template <ExactField F>
bool counit_hat_isos(const ComonadMorphism<F>& cm, const std::vector<ProbeComodule<F>>& cs) {
  for (const auto& c : cs)
    if (!is_invertible(counit_hat(cm, c.comodule))) return false;
  return true;
}

template <ExactField F>
bool unit_hat_isos(const ComonadMorphism<F>& cm, const std::vector<ModPtr<F>>& ys) {
  for (const auto& y : ys)
    if (!is_invertible(unit_hat(cm, y))) return false;
  return true;
}

/// Images of all comodule maps Sigma -> X span X.
template <ExactField F>
bool generator(const GaloisLab<F>& lab) {
  auto sigma = as_right_comodule(lab.instance().sigma);
  for (const auto& c : lab.probe_comodules()) {
    auto h = hom_comodules(sigma, c.comodule, *lab.comonad());
    Mat<F> imgs(lab.a()->field, c.comodule.carrier->dim, 0);
    for (std::size_t i = 0; i < h.dim(); ++i) imgs = hstack(imgs, h.element(i));
    if (rank(imgs) != c.comodule.carrier->dim) return false;
  }
  return true;
}

/// f != 0 implies f (x)_B Sigma != 0 on the map probes.
template <ExactField F>
bool L_faithful(const GaloisLab<F>& lab) {
  const auto& adj = *lab.adj_b();
  for (const auto& p : default_map_probes(lab.b())) {
    if (p.map.is_zero()) continue;
    if (adj.L_map(p.map, p.source, p.target).is_zero()) return false;
  }
  return true;
}

/// X box_C Sigma^dagger (x)_R Sigma -> X invertible on the probe comodules.
template <ExactField F>
bool cotensor_full_faithful(const GaloisLab<F>& lab) {
  const auto& dd = *lab.dagger();
  const auto& adj = *dd.adj;
  for (const auto& c : lab.probe_comodules()) {
    auto ct = cotensor(c.comodule, dd.sigma_dagger, *lab.alpha_dagger());
    const auto& sub = ct.equalizer;
    Mat<F> counit = adj.counit(c.comodule.carrier) * adj.L_map(sub.inclusion, sub.module, ct.x_sd.result);
    if (!is_invertible(counit)) return false;
  }
  return true;
}

inline Condition make(std::string id, std::string statement, std::optional<bool> v, bool probe, std::string note = {}) {
  return {std::move(id), std::move(statement), v, probe, std::move(note)};
}

}  // namespace cond

/// Hypothesis: eta-hat at B surjective. Conclusion: B is a left ideal of T.
struct SobreidealResult {
  bool hypothesis = false;
  std::optional<bool> conclusion;
  bool counterexample = false;
};

template <ExactField F>
SobreidealResult lemma_sobreideal(const GaloisLab<F>& lab) {
  SobreidealResult r;
  Mat<F> u = unit_hat(lab.can(), lab.probe_objects().front());
  r.hypothesis = is_surjective(u);
  if (lab.end().lambda) r.conclusion = is_left_ideal_via(*lab.end().lambda);
  r.counterexample = r.hypothesis && r.conclusion && !*r.conclusion;
  return r;
}

/// Galois: can invertible. When both the B- and T-versions exist they must agree.
struct GaloisResult {
  bool galois = false;
  std::string representation;
  std::optional<bool> t_version;
  std::optional<std::size_t> kernel_dim;
};

template <ExactField F>
GaloisResult is_galois(const GaloisLab<F>& lab) {
  GaloisResult r;
  if (lab.can_finite()) {
    r.representation = "comatrix";
    r.galois = is_invertible(*lab.can_finite());
    r.kernel_dim = kernel(*lab.can_finite()).dim();
  } else if (lab.can_plus()) {
    r.representation = "dagger";
    r.galois = is_invertible(*lab.can_plus());
    r.kernel_dim = kernel(*lab.can_plus()).dim();
  } else {
    r.representation = "natural";
    r.galois = cond::phi_iso(lab.can(), lab.probe_modules());
  }
  r.t_version = cond::phi_iso(lab.can_t(), lab.probe_modules());
  return r;
}

template <ExactField F>
std::vector<Condition> standard_hypotheses(const GaloisLab<F>& lab) {
  return {cond::make("B_firm", "B is a firm ring", is_firm_ring(lab.b()).has_value(), false),
          cond::make("Sigma_firm", "Sigma is firm as a left B-module", lab.sigma_firm(), false)};
}

template <ExactField F>
TheoremReport verify_thm_debil(const GaloisLab<F>& lab) {
  TheoremReport r{"debil", standard_hypotheses(lab), {}};
  bool lhs = cond::counit_hat_isos(lab.can(), lab.probe_comodules());
  bool can_iso = cond::phi_iso(lab.can(), lab.probe_modules());
  bool pres = cond::preserves_equalizers(lab.can(), lab.probe_comodules());
  r.conditions.push_back(cond::make("full_faithful", "Hom_C(Sigma,-) (x)_B B is full and faithful", lhs, true));
  r.conditions.push_back(cond::make("can_and_preservation", "can is an isomorphism and - (x)_B Sigma preserves the equalizers",
                                    can_iso && pres, true,
                                    std::string("can iso: ") + (can_iso ? "true" : "false") + ", preserves: " + (pres ? "true" : "false")));
  return r;
}

template <ExactField F>
TheoremReport verify_thm_fuerte(const GaloisLab<F>& lab) {
  TheoremReport r{"fuerte", standard_hypotheses(lab), {}};
  bool units = cond::unit_hat_isos(lab.can(), lab.probe_objects());
  bool counits = cond::counit_hat_isos(lab.can(), lab.probe_comodules());
  bool can_iso = cond::phi_iso(lab.can(), lab.probe_modules());
  bool pres = cond::preserves_equalizers(lab.can(), lab.probe_comodules());
  bool refl = reflects_isos_probe(lab.b(), lab.instance().sigma.carrier).reflects;
  r.conditions.push_back(cond::make("equivalence", "- (x)_B Sigma : Mod-B -> Comod-C is an equivalence", units && counits, true));
  r.conditions.push_back(cond::make("can_preservation_reflection",
                                    "can is an isomorphism, - (x)_B Sigma preserves the equalizers and reflects isomorphisms",
                                    can_iso && pres && refl, true,
                                    std::string("can iso: ") + (can_iso ? "true" : "false") + ", preserves: " + (pres ? "true" : "false") +
                                        ", reflects: " + (refl ? "true" : "false")));
  return r;
}

template <ExactField F>
std::vector<Condition> flat_coring_hypotheses(const GaloisLab<F>& lab) {
  auto h = standard_hypotheses(lab);
  h.insert(h.begin(), cond::make("A_unital", "A is unital", lab.a()->unital(), false));
  h.push_back(cond::make("C_flat", "C is flat as a left A-module", is_flat(lab.a(), lab.instance().coring->carrier).flat, true));
  return h;
}

template <ExactField F>
TheoremReport verify_thm_fielmenteplano(const GaloisLab<F>& lab) {
  TheoremReport r{"fielmenteplano", flat_coring_hypotheses(lab), {}};
  const auto& e = lab.end();
  std::optional<bool> left_ideal;
  if (e.lambda) left_ideal = is_left_ideal_via(*e.lambda);
  r.hypotheses.push_back(cond::make("B_left_ideal_of_T", "B is a left ideal of T = End_C(Sigma)", left_ideal, false,
                                    e.lambda ? "" : "lambda : B -> T is not defined"));
  const auto& sigma = lab.instance().sigma.carrier;
  bool flat_b = is_flat(lab.b(), sigma).flat;
  bool flat_t = is_flat(e.t.algebra, e.sigma_t).flat;
  bool can_t = cond::phi_iso(lab.can_t(), lab.probe_modules());
  bool can_b = cond::phi_iso(lab.can(), lab.probe_modules());
  r.conditions.push_back(cond::make("i", "Hom_C(Sigma,-) : Comod-C -> Mod-T is full and faithful",
                                    cond::counit_hat_isos(lab.can_t(), lab.probe_comodules()), true));
  r.conditions.push_back(cond::make("ii", "Sigma is a generator of Comod-C", cond::generator(lab), true));
  r.conditions.push_back(cond::make("iii", "can_T is an isomorphism and T-Sigma is flat", can_t && flat_t, true));
  r.conditions.push_back(cond::make("iv", "can_B is an isomorphism and B-Sigma is flat", can_b && flat_b, true));
  r.conditions.push_back(cond::make("v", "Hom_C(Sigma,-) (x)_B B is full and faithful",
                                    cond::counit_hat_isos(lab.can(), lab.probe_comodules()), true));
  if (lab.can_plus()) {
    r.conditions.push_back(cond::make("iv'", "can+ is an isomorphism of corings and B-Sigma is flat",
                                      is_invertible(*lab.can_plus()) && flat_b, true));
    r.conditions.push_back(cond::make("v'", "- box_C Sigma+ is full and faithful", cond::cotensor_full_faithful(lab), true));
  } else {
    r.conditions.push_back(cond::make("iv'", "can+ is an isomorphism of corings and B-Sigma is flat", std::nullopt, false, "no iota"));
    r.conditions.push_back(cond::make("v'", "- box_C Sigma+ is full and faithful", std::nullopt, false, "no iota"));
  }
  return r;
}

template <ExactField F>
TheoremReport verify_thm_GE(const GaloisLab<F>& lab) {
  TheoremReport r{"GE", flat_coring_hypotheses(lab), {}};
  const auto& sigma = lab.instance().sigma.carrier;
  const auto& e = lab.end();
  auto ff = is_faithfully_flat(lab.b(), sigma);
  bool units = cond::unit_hat_isos(lab.can(), lab.probe_objects());
  bool counits = cond::counit_hat_isos(lab.can(), lab.probe_comodules());
  bool gen = cond::generator(lab);
  bool can_b = cond::phi_iso(lab.can(), lab.probe_modules());
  bool left_ideal = e.lambda && is_left_ideal_via(*e.lambda);
  r.conditions.push_back(cond::make("i", "- (x)_B Sigma : Mod-B -> Comod-C is an equivalence", units && counits, true));
  r.conditions.push_back(cond::make("ii", "can is an isomorphism and B-Sigma is faithfully flat", can_b && ff.faithfully_flat,
                                    true));
  r.conditions.push_back(cond::make("iii", "Sigma is a generator and - (x)_B Sigma is full and faithful", gen && units, true));
  r.conditions.push_back(cond::make("iv", "Sigma is a generator, - (x)_B Sigma is faithful and B is a left ideal of T",
                                    gen && cond::L_faithful(lab) && left_ideal, true));
  if (lab.can_plus())
    r.conditions.push_back(cond::make("ii'", "can+ is an isomorphism of corings and B-Sigma is faithfully flat",
                                      is_invertible(*lab.can_plus()) && ff.faithfully_flat, true));
  else
    r.conditions.push_back(cond::make("ii'", "can+ is an isomorphism of corings and B-Sigma is faithfully flat", std::nullopt,
                                      false, "no iota"));
  return r;
}

template <ExactField F>
TheoremReport verify_cor_clasico(const GaloisLab<F>& lab) {
  TheoremReport r{"clasico", {}, {}};
  r.hypotheses.push_back(cond::make("B_unital", "B is unital", lab.b()->unital(), false));
  r.hypotheses.push_back(cond::make("A_unital", "A is unital", lab.a()->unital(), false));
  if (!lab.b()->unital()) return r;
  const auto& sigma = lab.instance().sigma.carrier;
  bool c_flat = is_flat(lab.a(), lab.instance().coring->carrier).flat;
  bool equiv = cond::unit_hat_isos(lab.can(), lab.probe_objects()) && cond::counit_hat_isos(lab.can(), lab.probe_comodules());
  bool fgp = lab.dual_basis().has_value();
  bool can_iso = lab.can_finite() && is_invertible(*lab.can_finite());
  bool ff = is_faithfully_flat(lab.b(), sigma).faithfully_flat;
  const auto& lam = lab.end().lambda;
  bool lambda_iso = lam && is_invertible(lam->matrix);
  r.conditions.push_back(cond::make("i", "C is flat over A and - (x)_B Sigma is an equivalence", c_flat && equiv, true));
  r.conditions.push_back(cond::make("ii", "Sigma_A is f.g. projective, can : Sigma* (x)_B Sigma -> C is an isomorphism and B-Sigma is faithfully flat",
                                    fgp && can_iso && ff, true));
  r.conditions.push_back(cond::make("iii", "C is flat over A, Sigma is a f.g. projective generator and lambda : B -> T is an isomorphism",
                                    c_flat && fgp && cond::generator(lab) && lambda_iso, true,
                                    "f.g. projective checked on Sigma_A"));
  return r;
}

// ---------------------------------------------------------------------------
// Commutative diagrams

struct DiagramResult {
  std::string name;
  bool checked = false;
  bool commutes = false;
  std::string note;
};

/// can_B = can_T o (Hom (x)_B Sigma -> Hom (x)_T Sigma), the comparison being invertible.
template <ExactField F>
DiagramResult check_cancan(const GaloisLab<F>& lab) {
  DiagramResult d{"cancan", false, false, {}};
  if (!lab.end().lambda || !is_left_ideal_via(*lab.end().lambda)) {
    d.note = "B is not a left ideal of T";
    return d;
  }
  d.checked = true;
  d.commutes = true;
  for (const auto& x : lab.probe_modules()) {
    const auto& rb = lab.adj_b()->R(x);
    const auto& rt = lab.adj_t()->R(x);
    const auto& tb = lab.adj_b()->L(rb);
    const auto& tt = lab.adj_t()->L(rt);
    Mat<F> p = descend(tb, tt.q.projection);
    if (!is_invertible(p) || !(lab.can()(x) == lab.can_t()(x) * p)) d.commutes = false;
  }
  return d;
}

/// can = (- (x) can) o (nu (x) Sigma) with nu_finite.
template <ExactField F>
DiagramResult check_cancan2(const GaloisLab<F>& lab) {
  DiagramResult d{"cancan2", false, false, {}};
  if (!lab.can_finite()) {
    d.note = "Sigma_A is not f.g. projective or B has no unit";
    return d;
  }
  d.checked = true;
  d.commutes = true;
  const auto& sigma = lab.instance().sigma.carrier;
  const auto& dual = lab.comatrix()->dual.module;
  for (const auto& x : lab.probe_modules()) {
    Mat<F> nu = nu_finite(*lab.adj_b(), *lab.s_ring(), *lab.dual_basis(), x);
    auto tt = triple_tensor(x, dual, sigma);
    Mat<F> l_nu = induced_map(nu, sigma->identity(), lab.adj_b()->L(lab.adj_b()->R(x)), tt.mn_p);
    Mat<F> x_can = induced_map(x->identity(), *lab.can_finite(), tt.m_np, lab.comonad()->G(x));
    if (!is_invertible(nu) || !(lab.can()(x) == x_can * tt.left_to_right * l_nu)) d.commutes = false;
  }
  return d;
}

/// can = (- (x) can+) o (nu (x) Sigma) with nu_firm, and can+_X = X (x) can+.
template <ExactField F>
DiagramResult check_cancan3(const GaloisLab<F>& lab) {
  DiagramResult d{"cancan3", false, false, {}};
  if (!lab.dagger()) {
    d.note = "no iota : B -> S";
    return d;
  }
  d.checked = true;
  d.commutes = true;
  const auto& dd = *lab.dagger();
  auto cm = *lab.can_dagger_morphism();
  for (const auto& x : lab.probe_modules()) {
    Mat<F> nu = nu_firm(*lab.adj_b(), dd, x);
    auto tt = triple_tensor(x, dd.sigma_dagger, dd.sigma_r);
    Mat<F> l_nu = induced_map(nu, dd.sigma_r->identity(), lab.adj_b()->L(lab.adj_b()->R(x)), tt.mn_p);
    Mat<F> x_can = induced_map(x->identity(), *lab.can_plus(), tt.m_np, lab.comonad()->G(x));
    if (!is_invertible(nu) || !(lab.can()(x) == x_can * tt.left_to_right * l_nu)) d.commutes = false;
    // can+_X = X (x) can+
    if (!(cm(x) == x_can * tt.left_to_right)) d.commutes = false;
  }
  return d;
}

template <ExactField F>
std::vector<DiagramResult> verify_diagrams(const GaloisLab<F>& lab) {
  return {check_cancan(lab), check_cancan2(lab), check_cancan3(lab)};
}

}  // namespace coringlab
