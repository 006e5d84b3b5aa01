#pragma once

// Comonad morphisms LR -> G for the representable adjunction L = - (x)_B Sigma,
// G = - (x)_A C: the co-induced and induced representations, the comparison
// functor K_phi and its right adjoint D_phi, and the hypotheses of descent.
//
// Natural transformations are evaluated objectwise: a NatTrans maps an object
// to the matrix of its component.

#include <functional>
#include <memory>
#include <string>

#include "comod.hpp"

namespace coringlab {

template <ExactField F>
using NatTrans = std::function<Mat<F>(const ModPtr<F>&)>;

/// L = - (x)_B Sigma : Mod-B -> Mod-A with a right adjoint R.
template <ExactField F>
class Adjunction {
 public:
  Adjunction(AlgebraPtr<F> b, ModPtr<F> sigma) : b_(std::move(b)), sigma_(std::move(sigma)) {
    if (!same_algebra(b_, sigma_->left)) throw DimensionMismatch("adjunction: Sigma is not a left module over " + b_->name);
  }
  virtual ~Adjunction() = default;

  const AlgebraPtr<F>& b() const { return b_; }
  const ModPtr<F>& sigma() const { return sigma_; }
  const F& field() const { return sigma_->field(); }

  const Tensor<F>& L(const ModPtr<F>& y) const {
    return l_.get(y, [&] { return tensor_over(y, sigma_); });
  }
  const ModPtr<F>& L_obj(const ModPtr<F>& y) const { return L(y).result; }
  Mat<F> L_map(const Mat<F>& f, const ModPtr<F>& y, const ModPtr<F>& y2) const {
    return induced_map(f, sigma_->identity(), L(y), L(y2));
  }

  virtual const ModPtr<F>& R(const ModPtr<F>& x) const = 0;
  virtual Mat<F> R_map(const Mat<F>& f, const ModPtr<F>& x, const ModPtr<F>& x2) const = 0;
  /// eta_Y : Y -> RLY.
  virtual Mat<F> unit(const ModPtr<F>& y) const = 0;
  /// eps_X : LRX -> X.
  virtual Mat<F> counit(const ModPtr<F>& x) const = 0;
  virtual std::string mode() const = 0;

 private:
  AlgebraPtr<F> b_;
  ModPtr<F> sigma_;
  IdentityCache<Bimodule<F>, Tensor<F>> l_;
};

/// R = Hom_A(Sigma, -) (x)_B B. When B is unital the factor (x)_B B is dropped.
template <ExactField F>
class HomAdjunction : public Adjunction<F> {
 public:
  using Adjunction<F>::Adjunction;

  struct RData {
    HomSpace<F> hom;
    std::optional<Tensor<F>> hb;  // Hom (x)_B B when B has no unit
    Mat<F> to_hom;                // f (x) b |-> f b
    ModPtr<F> obj;
  };

  const RData& rdata(const ModPtr<F>& x) const {
    return r_.get(x, [&] {
      RData d{hom_right(this->sigma(), x), std::nullopt, {}, {}};
      if (this->b()->unital()) {
        d.obj = d.hom.module;
        d.to_hom = d.hom.module->identity();
      } else {
        d.hb = tensor_over(d.hom.module, regular_bimodule(this->b()));
        d.obj = d.hb->result;
        const auto& hm = d.hom.module;
        d.to_hom = map_on_tensor<F>(*d.hb, hm->dim, [&](std::size_t p, std::size_t q) { return hm->right_act[q].col(p); });
      }
      return d;
    });
  }

  const ModPtr<F>& R(const ModPtr<F>& x) const override { return rdata(x).obj; }

  Mat<F> R_map(const Mat<F>& f, const ModPtr<F>& x, const ModPtr<F>& x2) const override {
    const auto& d = rdata(x);
    const auto& d2 = rdata(x2);
    Mat<F> post = hom_post(d.hom, d2.hom, f);
    if (!d.hb) return post;
    return induced_map(post, Mat<F>::identity(this->field(), this->b()->dim), *d.hb, *d2.hb);
  }

  Mat<F> unit(const ModPtr<F>& y) const override {
    const auto& ly = this->L(y);
    const auto& d = rdata(ly.result);
    const auto& s = this->sigma();
    // y |-> (u |-> y (x) u)
    Mat<F> to_hom(this->field(), d.hom.dim(), y->dim);
    for (std::size_t i = 0; i < y->dim; ++i) {
      Mat<F> f(this->field(), ly.result->dim, s->dim);
      for (std::size_t j = 0; j < s->dim; ++j) f.set_col(j, ly.pure_basis(i, j));
      to_hom.set_col(i, d.hom.coords_of(f));
    }
    if (!d.hb) return to_hom;
    auto fy = right_firmness(y);
    if (!fy.inverse) throw NotFirm("unit: " + y->name + " is not a firm module");
    return induced_map(to_hom, Mat<F>::identity(this->field(), this->b()->dim), fy.tensor, *d.hb) * *fy.inverse;
  }

  Mat<F> counit(const ModPtr<F>& x) const override {
    const auto& d = rdata(x);
    return map_on_tensor<F>(this->L(d.obj), x->dim,
                            [&](std::size_t i, std::size_t j) { return d.hom.element_of(d.to_hom.col(i)).col(j); });
  }

  std::string mode() const override { return "hom"; }

  /// alpha_X (f (x) b) = [(f (x) C) rho_Sigma] (x) b, computed from the coaction directly.
  Mat<F> alpha_from_coaction(const ModPtr<F>& x, const CoringComonad<F>& g, const Mat<F>& rho_sigma) const {
    const auto& d = rdata(x);
    const auto& gx = g.G(x);
    const auto& d2 = rdata(gx.result);
    const auto& sc = g.G(this->sigma());
    Mat<F> ic = g.coring()->carrier->identity();
    Mat<F> m(this->field(), d2.hom.dim(), d.hom.dim());
    for (std::size_t i = 0; i < d.hom.dim(); ++i)
      m.set_col(i, d2.hom.coords_of(induced_map(d.hom.element(i), ic, sc, gx) * rho_sigma));
    if (!d.hb) return m;
    return induced_map(m, Mat<F>::identity(this->field(), this->b()->dim), *d.hb, *d2.hb);
  }

 private:
  IdentityCache<Bimodule<F>, RData> r_;
};

/// R = - (x)_A Sigma^dagger, with unit and counit supplied by
/// kappa : R -> Sigma (x)_A Sigma^dagger and ev : Sigma^dagger (x)_R Sigma -> A.
template <ExactField F>
class DaggerAdjunction : public Adjunction<F> {
 public:
  DaggerAdjunction(AlgebraPtr<F> r, ModPtr<F> sigma, ModPtr<F> sigma_dagger, Mat<F> kappa, Mat<F> ev)
      : Adjunction<F>(std::move(r), std::move(sigma)), sd_(std::move(sigma_dagger)), kappa_(std::move(kappa)),
        ev_(std::move(ev)) {
    ssd_ = tensor_over(this->sigma(), sd_);
    sds_ = tensor_over(sd_, this->sigma());
  }

  const ModPtr<F>& sigma_dagger() const { return sd_; }
  const Tensor<F>& sigma_sigma_dagger() const { return ssd_; }
  const Tensor<F>& sigma_dagger_sigma() const { return sds_; }
  const Mat<F>& kappa() const { return kappa_; }
  const Mat<F>& ev() const { return ev_; }

  const Tensor<F>& R_tensor(const ModPtr<F>& x) const {
    return r_.get(x, [&] { return tensor_over(x, sd_); });
  }
  const ModPtr<F>& R(const ModPtr<F>& x) const override { return R_tensor(x).result; }

  Mat<F> R_map(const Mat<F>& f, const ModPtr<F>& x, const ModPtr<F>& x2) const override {
    return induced_map(f, sd_->identity(), R_tensor(x), R_tensor(x2));
  }

  Mat<F> unit(const ModPtr<F>& n) const override {
    auto fn = right_firmness(n);
    if (!fn.inverse) throw NotFirm("unit: " + n->name + " is not a firm module");
    auto n_ssd = tensor_over(n, ssd_.result);
    const auto& ln = this->L(n);
    Mat<F> to_ssd = induced_map(n->identity(), kappa_, fn.tensor, n_ssd);
    return associator_inverse(ln, R_tensor(ln.result), ssd_, n_ssd) * to_ssd * *fn.inverse;
  }

  Mat<F> counit(const ModPtr<F>& m) const override {
    const auto& msd = R_tensor(m);
    const auto& msd_s = this->L(msd.result);
    auto m_sds = tensor_over(m, sds_.result);
    Mat<F> act = map_on_tensor<F>(m_sds, m->dim, [&](std::size_t i, std::size_t j) {
      return m->right_by(ev_.col(j)) * Mat<F>::unit_vector(m->field(), m->dim, i);
    });
    return act * associator(msd, msd_s, sds_, m_sds);
  }

  std::string mode() const override { return "dagger"; }

 private:
  ModPtr<F> sd_;
  Mat<F> kappa_;
  Mat<F> ev_;
  Tensor<F> ssd_, sds_;
  IdentityCache<Bimodule<F>, Tensor<F>> r_;
};

template <ExactField F>
using AdjunctionPtr = std::shared_ptr<const Adjunction<F>>;
template <ExactField F>
using ComonadPtr = std::shared_ptr<const CoringComonad<F>>;

/// phi : LR -> G, memoized per object.
template <ExactField F>
class ComonadMorphism {
 public:
  ComonadMorphism(AdjunctionPtr<F> adj, ComonadPtr<F> g, NatTrans<F> phi)
      : adj_(std::move(adj)), g_(std::move(g)), phi_(std::move(phi)), memo_(std::make_shared<Memo>()) {}

  const Adjunction<F>& adj() const { return *adj_; }
  const AdjunctionPtr<F>& adj_ptr() const { return adj_; }
  const CoringComonad<F>& comonad() const { return *g_; }
  const ComonadPtr<F>& comonad_ptr() const { return g_; }

  const Mat<F>& operator()(const ModPtr<F>& x) const {
    return memo_->get(x, [&] { return phi_(x); });
  }
  NatTrans<F> as_nat() const {
    auto self = *this;
    return [self](const ModPtr<F>& x) { return self(x); };
  }

 private:
  using Memo = IdentityCache<Bimodule<F>, Mat<F>>;
  AdjunctionPtr<F> adj_;
  ComonadPtr<F> g_;
  NatTrans<F> phi_;
  std::shared_ptr<Memo> memo_;
};

// ---------------------------------------------------------------------------
// Correspondences

/// alpha = R phi o eta R.
template <ExactField F>
NatTrans<F> alpha_from_phi(const ComonadMorphism<F>& cm) {
  return [cm](const ModPtr<F>& x) {
    const auto& adj = cm.adj();
    const auto& rx = adj.R(x);
    return adj.R_map(cm(x), adj.L_obj(rx), cm.comonad().G_obj(x)) * adj.unit(rx);
  };
}

/// phi = eps G o L alpha.
template <ExactField F>
ComonadMorphism<F> phi_from_alpha(const AdjunctionPtr<F>& adj, const ComonadPtr<F>& g, NatTrans<F> alpha) {
  return ComonadMorphism<F>(adj, g, [adj, g, alpha](const ModPtr<F>& x) {
    const auto& gx = g->G_obj(x);
    return adj->counit(gx) * adj->L_map(alpha(x), adj->R(x), adj->R(gx));
  });
}

/// beta = phi L o L eta.
template <ExactField F>
NatTrans<F> beta_from_phi(const ComonadMorphism<F>& cm) {
  return [cm](const ModPtr<F>& y) {
    const auto& adj = cm.adj();
    const auto& ly = adj.L_obj(y);
    return cm(ly) * adj.L_map(adj.unit(y), y, adj.R(ly));
  };
}

/// phi = G eps o beta R.
template <ExactField F>
ComonadMorphism<F> phi_from_beta(const AdjunctionPtr<F>& adj, const ComonadPtr<F>& g, NatTrans<F> beta) {
  return ComonadMorphism<F>(adj, g, [adj, g, beta](const ModPtr<F>& x) {
    const auto& rx = adj->R(x);
    return g->G_map(adj->counit(x), adj->L_obj(rx), x) * beta(rx);
  });
}

/// beta_Y = Y (x) rho_Sigma, reassociated into (Y (x) Sigma) (x) C.
template <ExactField F>
NatTrans<F> beta_from_coaction(const AdjunctionPtr<F>& adj, const ComonadPtr<F>& g, const Mat<F>& rho_sigma) {
  return [adj, g, rho_sigma](const ModPtr<F>& y) {
    const auto& ly = adj->L(y);
    const auto& sc = g->G(adj->sigma());
    auto y_sc = tensor_over(y, sc.result);
    Mat<F> m = induced_map(y->identity(), rho_sigma, ly, y_sc);
    return associator_inverse(ly, g->G(ly.result), sc, y_sc) * m;
  };
}

/// can = G eps o (R (x) rho_Sigma).
template <ExactField F>
ComonadMorphism<F> can_morphism(const AdjunctionPtr<F>& adj, const ComonadPtr<F>& g, const Mat<F>& rho_sigma) {
  return phi_from_beta(adj, g, beta_from_coaction(adj, g, rho_sigma));
}

/// The comonad LR itself: the identity morphism when G is represented by the same data.
template <ExactField F>
Mat<F> comonad_delta_LR(const Adjunction<F>& adj, const ModPtr<F>& x) {
  const auto& rx = adj.R(x);
  return adj.L_map(adj.unit(rx), rx, adj.R(adj.L_obj(rx)));
}

/// Delta phi = phi^2 delta and eps phi = eps, at X.
template <ExactField F>
CheckReport check_comonad_morphism(const ComonadMorphism<F>& cm, const ModPtr<F>& x) {
  CheckReport rep;
  const auto& adj = cm.adj();
  const auto& g = cm.comonad();
  const auto& rx = adj.R(x);
  const auto& lrx = adj.L_obj(rx);
  Mat<F> lhs = g.delta(x) * cm(x);
  Mat<F> rhs = g.G_map(cm(x), lrx, g.G_obj(x)) * cm(lrx) * comonad_delta_LR(adj, x);
  if (!(lhs == rhs)) rep.fail("Delta phi != phi^2 delta at " + x->name);
  if (!(g.eps(x) * cm(x) == adj.counit(x))) rep.fail("eps phi != eps at " + x->name);
  return rep;
}

/// R eps o alpha = id and R Delta o alpha = alpha G o alpha, at X.
template <ExactField F>
CheckReport check_alpha(const Adjunction<F>& adj, const CoringComonad<F>& g, const NatTrans<F>& alpha, const ModPtr<F>& x) {
  CheckReport rep;
  const auto& gx = g.G_obj(x);
  const auto& ggx = g.G_obj(gx);
  Mat<F> a = alpha(x);
  if (!(adj.R_map(g.eps(x), gx, x) * a == adj.R(x)->identity())) rep.fail("R eps o alpha != id at " + x->name);
  if (!(adj.R_map(g.delta(x), gx, ggx) * a == alpha(gx) * a)) rep.fail("alpha is not coassociative at " + x->name);
  return rep;
}

/// eps L o beta = id and Delta L o beta = G beta o beta, at Y.
template <ExactField F>
CheckReport check_beta(const Adjunction<F>& adj, const CoringComonad<F>& g, const NatTrans<F>& beta, const ModPtr<F>& y) {
  CheckReport rep;
  const auto& ly = adj.L_obj(y);
  Mat<F> b = beta(y);
  if (!(g.eps(ly) * b == ly->identity())) rep.fail("eps o beta != id at " + y->name);
  if (!(g.delta(ly) * b == g.G_map(b, ly, g.G_obj(ly)) * b)) rep.fail("beta is not coassociative at " + y->name);
  return rep;
}

// ---------------------------------------------------------------------------
// K_phi and D_phi

/// (LY, beta_Y).
template <ExactField F>
Comodule<F> K_phi(const ComonadMorphism<F>& cm, const ModPtr<F>& y) {
  auto beta = beta_from_phi(cm);
  const auto& ly = cm.adj().L_obj(y);
  return {cm.comonad().coring(), ly, beta(y), "K(" + y->name + ")"};
}

template <ExactField F>
struct DObject {
  ModPtr<F> object;  // D_phi X
  Mat<F> eq;         // D_phi X -> RX
  Mat<F> alpha;      // alpha_X
  Mat<F> r_rho;      // R rho_X
};

/// Equalizer of alpha_X and R rho_X in Mod-B.
template <ExactField F>
DObject<F> D_phi(const ComonadMorphism<F>& cm, const Comodule<F>& x) {
  const auto& adj = cm.adj();
  if (!adj.b()->unital()) throw UnitRequired("D_phi: equalizers over " + adj.b()->name + " need a unit here");
  const auto& g = cm.comonad();
  DObject<F> d;
  d.alpha = alpha_from_phi(cm)(x.carrier);
  d.r_rho = adj.R_map(x.rho, x.carrier, g.G_obj(x.carrier));
  auto sub = equalizer_in_mod(adj.R(x.carrier), d.alpha, d.r_rho);
  Bimodule<F> named = *sub.module;
  named.name = "D(" + x.name + ")";
  d.object = share(std::move(named));
  d.eq = sub.inclusion;
  return d;
}

/// eta_Y factored through the equalizer D_phi K_phi Y.
template <ExactField F>
Mat<F> unit_hat(const ComonadMorphism<F>& cm, const ModPtr<F>& y) {
  auto d = D_phi(cm, K_phi(cm, y));
  auto u = factor_through(d.eq, cm.adj().unit(y));
  if (!u) throw FactorizationFailure("unit_hat: eta_" + y->name + " does not factor through the equalizer");
  return *u;
}

/// eps_X o L eq_X.
template <ExactField F>
Mat<F> counit_hat(const ComonadMorphism<F>& cm, const Comodule<F>& x, const DObject<F>& d) {
  const auto& adj = cm.adj();
  return adj.counit(x.carrier) * adj.L_map(d.eq, d.object, adj.R(x.carrier));
}

template <ExactField F>
Mat<F> counit_hat(const ComonadMorphism<F>& cm, const Comodule<F>& x) {
  return counit_hat(cm, x, D_phi(cm, x));
}

/// The cofree comodule (GX, Delta_X).
template <ExactField F>
Comodule<F> cofree_comodule(const CoringComonad<F>& g, const ModPtr<F>& x) {
  return {g.coring(), g.G_obj(x), g.delta(x), "G(" + x->name + ")"};
}

/// RX -> RGX => RGGX with contractions R eps_X and R G eps_X, plus eps-hat_{GX} = phi_X.
template <ExactField F>
CheckReport contractible_equalizer_check(const ComonadMorphism<F>& cm, const ModPtr<F>& x) {
  CheckReport rep;
  const auto& adj = cm.adj();
  const auto& g = cm.comonad();
  const auto& gx = g.G_obj(x);
  const auto& ggx = g.G_obj(gx);
  auto alpha = alpha_from_phi(cm);
  Mat<F> a = alpha(x), agx = alpha(gx);
  Mat<F> r_eps = adj.R_map(g.eps(x), gx, x);
  Mat<F> r_delta = adj.R_map(g.delta(x), gx, ggx);
  Mat<F> rg_eps = adj.R_map(g.G_map(g.eps(x), gx, x), ggx, gx);
  if (!(r_eps * a == adj.R(x)->identity())) rep.fail("R eps o alpha != id");
  if (!(r_delta * a == agx * a)) rep.fail("fork does not commute");
  if (!(rg_eps * r_delta == adj.R(gx)->identity())) rep.fail("RG eps o R Delta != id");
  if (!(rg_eps * agx == a * r_eps)) rep.fail("RG eps o alpha G != alpha o R eps");

  auto cof = cofree_comodule(g, x);
  auto d = D_phi(cm, cof);
  auto u = factor_through(d.eq, a);
  if (!u || !is_invertible(*u)) {
    rep.fail("alpha_X does not identify RX with the equalizer at GX");
    return rep;
  }
  Mat<F> eh = counit_hat(cm, cof, d);
  if (!(eh * adj.L_map(*u, adj.R(x), d.object) == cm(x))) rep.fail("eps-hat at GX differs from phi_X");
  return rep;
}

/// L applied to the equalizer D_phi X is the equalizer of the image pair.
template <ExactField F>
bool L_preserves_equalizer(const ComonadMorphism<F>& cm, const Comodule<F>& x) {
  const auto& adj = cm.adj();
  auto d = D_phi(cm, x);
  const auto& rx = adj.R(x.carrier);
  const auto& rgx = adj.R(cm.comonad().G_obj(x.carrier));
  Mat<F> leq = adj.L_map(d.eq, d.object, rx);
  auto target = kernel(adj.L_map(d.alpha, rx, rgx) - adj.L_map(d.r_rho, rx, rgx));
  if (!is_injective(leq)) return false;
  auto img = Subspace<F>::column_span(leq);
  return img.dim() == target.dim() && target.contains(img);
}

/// The two serial squares relating x, phi, alpha and eq.
template <ExactField F>
CheckReport verify_serial_diagram(const ComonadMorphism<F>& cm, const Comodule<F>& x) {
  CheckReport rep;
  const auto& adj = cm.adj();
  const auto& g = cm.comonad();
  const auto& X = x.carrier;
  const auto& gx = g.G_obj(X);
  const auto& rx = adj.R(X);
  auto d = D_phi(cm, x);
  Mat<F> eh = counit_hat(cm, x, d);
  if (!(x.rho * eh == cm(X) * adj.L_map(d.eq, d.object, rx))) rep.fail("x o eps-hat != phi_X o L eq");
  Mat<F> l_alpha = adj.L_map(d.alpha, rx, adj.R(gx));
  Mat<F> l_rrho = adj.L_map(d.r_rho, rx, adj.R(gx));
  if (!(cm(gx) * l_alpha == g.delta(X) * cm(X))) rep.fail("phi_GX o L alpha != Delta o phi");
  if (!(cm(gx) * l_rrho == g.G_map(x.rho, X, gx) * cm(X))) rep.fail("phi_GX o LR x != G x o phi");
  return rep;
}

}  // namespace coringlab
