#pragma once

// Corings over firm algebras, their axioms, constructors and group-likes,
// and the comonad - (x)_A C on right A-modules.

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cache.hpp"
#include "modprops.hpp"

namespace coringlab {

template <ExactField F>
struct Coring {
  AlgebraPtr<F> base;
  ModPtr<F> carrier;  // (A,A)-bimodule
  Tensor<F> cc;       // carrier (x)_A carrier
  Mat<F> delta;       // carrier -> cc.result
  Mat<F> eps;         // carrier -> A
  std::string name;

  const F& field() const { return base->field; }
  std::size_t dim() const { return carrier->dim; }
};

template <ExactField F>
using CoringPtr = std::shared_ptr<const Coring<F>>;

template <ExactField F>
CoringPtr<F> make_coring(const ModPtr<F>& carrier, Mat<F> delta, Mat<F> eps, std::string name) {
  if (!same_algebra(carrier->left, carrier->right)) throw DimensionMismatch("coring carrier must be an (A,A)-bimodule");
  Coring<F> c;
  c.base = carrier->right;
  c.carrier = carrier;
  c.cc = tensor_over(carrier, carrier);
  if (delta.rows() != c.cc.result->dim || delta.cols() != carrier->dim)
    throw DimensionMismatch("comultiplication has shape " + delta.shape());
  if (eps.rows() != c.base->dim || eps.cols() != carrier->dim) throw DimensionMismatch("counit has shape " + eps.shape());
  c.delta = std::move(delta);
  c.eps = std::move(eps);
  c.name = std::move(name);
  return std::make_shared<const Coring<F>>(std::move(c));
}

namespace detail {
template <ExactField F>
std::string first_bad_column(const Mat<F>& lhs, const Mat<F>& rhs, const std::string& what) {
  for (std::size_t j = 0; j < lhs.cols(); ++j)
    if (!(lhs.col(j) == rhs.col(j))) return what + " fails at basis vector c" + std::to_string(j);
  return {};
}
/// Localized failures of f being a bimodule map.
template <ExactField F>
void linearity_failures(const Mat<F>& f, const Bimodule<F>& src, const Bimodule<F>& dst, const std::string& what,
                        CheckReport& rep) {
  auto side = [&](const std::vector<Mat<F>>& s, const std::vector<Mat<F>>& d, const Algebra<F>& alg, const char* name) {
    for (std::size_t i = 0; i < s.size(); ++i) {
      Mat<F> lhs = f * s[i], rhs = d[i] * f;
      for (std::size_t j = 0; j < f.cols(); ++j)
        if (!(lhs.col(j) == rhs.col(j))) {
          rep.fail(what + " is not " + name + "-linear at (" + alg.label(i) + ", c" + std::to_string(j) + ")");
          break;
        }
    }
  };
  side(src.left_act, dst.left_act, *src.left, "left");
  side(src.right_act, dst.right_act, *src.right, "right");
}

}  // namespace detail

template <ExactField F>
CheckReport check_coring(const Coring<F>& c) {
  CheckReport rep;
  rep.merge("carrier", check_bimodule(*c.carrier));
  if (!rep.ok()) return rep;
  auto dr = is_firm_module(c.carrier);
  auto dl = is_left_firm_module(c.carrier);
  if (!dr) rep.fail("carrier is not firm as a right module");
  if (!dl) rep.fail("carrier is not firm as a left module");
  auto areg = regular_bimodule(c.base);
  detail::linearity_failures(c.delta, *c.carrier, *c.cc.result, "comultiplication", rep);
  detail::linearity_failures(c.eps, *c.carrier, *areg, "counit", rep);
  if (!rep.ok()) return rep;

  // (C (x) Delta) Delta = assoc o (Delta (x) C) Delta
  auto tt = triple_tensor(c.carrier, c.carrier, c.carrier);
  Mat<F> ic = c.carrier->identity();
  Mat<F> lhs = induced_map(ic, c.delta, tt.mn, tt.m_np) * c.delta;
  Mat<F> rhs = tt.left_to_right * induced_map(c.delta, ic, tt.mn, tt.mn_p) * c.delta;
  if (auto m = detail::first_bad_column(lhs, rhs, "coassociativity"); !m.empty()) rep.fail(m);

  if (dl && dr) {
    auto lf = left_firmness(c.carrier);
    auto rf = right_firmness(c.carrier);
    Mat<F> left_counit = induced_map(c.eps, ic, c.cc, lf.tensor) * c.delta;
    if (auto m = detail::first_bad_column(left_counit, *lf.inverse, "left counit law"); !m.empty()) rep.fail(m);
    Mat<F> right_counit = induced_map(ic, c.eps, c.cc, rf.tensor) * c.delta;
    if (auto m = detail::first_bad_column(right_counit, *rf.inverse, "right counit law"); !m.empty()) rep.fail(m);
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Constructors

/// C = A with Delta = d_A and eps = id.
template <ExactField F>
CoringPtr<F> trivial_coring(const AlgebraPtr<F>& a) {
  auto w = is_firm_ring(a);
  if (!w) throw NotFirm("trivial_coring: " + a->name + " is not firm");
  // d_A lives in the same coordinates: tensor_over is deterministic
  return make_coring<F>(regular_bimodule(a), w->d, Mat<F>::identity(a->field, a->dim), a->name);
}

template <ExactField F>
struct Grouplike {
  CoringPtr<F> coring;
  Mat<F> g;
};

template <ExactField F>
bool is_grouplike(const Coring<F>& c, const Mat<F>& g) {
  if (!c.base->unital()) throw UnitRequired("is_grouplike: " + c.base->name + " has no unit");
  return c.delta * g == c.cc.pure(g, g) && c.eps * g == *c.base->unit;
}

template <ExactField F>
struct SweedlerCoring {
  CoringPtr<F> coring;
  Grouplike<F> grouplike;
  RingHom<F> iota;
};

/// A (x)_B A with Delta(a (x) a') = (a (x) 1) (x) (1 (x) a') and eps(a (x) a') = a a'.
template <ExactField F>
SweedlerCoring<F> sweedler_coring(const RingHom<F>& iota) {
  const auto& a = iota.target;
  if (!a->unital()) throw UnitRequired("sweedler_coring: " + a->name + " has no unit");
  auto reg = regular_bimodule(a);
  auto ab = restrict_scalars<F>(reg, std::nullopt, iota);  // (A,B)
  auto ba = restrict_scalars<F>(reg, iota, std::nullopt);  // (B,A)
  auto t = tensor_over(ab, ba);
  Bimodule<F> named = *t.result;
  named.name = a->name + "@" + iota.source->name + a->name;
  auto carrier = share(std::move(named));
  auto cc = tensor_over(carrier, carrier);
  const Mat<F>& one = *a->unit;
  Mat<F> delta = map_on_tensor<F>(t, cc.result->dim, [&](std::size_t i, std::size_t j) {
    return cc.pure(t.pure(a->basis_vector(i), one), t.pure(one, a->basis_vector(j)));
  });
  Mat<F> eps = map_on_tensor<F>(t, a->dim, [&](std::size_t i, std::size_t j) { return a->left_mult[i].col(j); });
  auto c = make_coring<F>(carrier, delta, eps, "Sweedler(" + a->name + "/" + iota.source->name + ")");
  return {c, {c, t.pure(one, one)}, iota};
}

template <ExactField F>
struct ComatrixCoring {
  CoringPtr<F> coring;
  HomSpace<F> dual;  // Sigma* = Hom_A(Sigma, A) as an (A,B)-bimodule
  Tensor<F> carrier_tensor;
  DualBasis<F> dual_basis;
  std::vector<Mat<F>> dual_coords;  // coordinates of e_i* in dual
};

/// Sigma* (x)_B Sigma with Delta(phi (x) u) = sum_i (phi (x) e_i) (x) (e_i* (x) u), eps(phi (x) u) = phi(u).
template <ExactField F>
ComatrixCoring<F> comatrix_coring(const ModPtr<F>& sigma, const DualBasis<F>& db) {
  const auto& a = sigma->right;
  ComatrixCoring<F> out;
  out.dual = hom_right(sigma, regular_bimodule(a));
  out.dual_basis = db;
  for (const auto& f : db.functionals) out.dual_coords.push_back(out.dual.coords_of(f));
  out.carrier_tensor = tensor_over(out.dual.module, sigma);
  const auto& t = out.carrier_tensor;
  Bimodule<F> named = *t.result;
  named.name = sigma->name + "*@" + sigma->left->name + sigma->name;
  auto carrier = share(std::move(named));
  auto cc = tensor_over(carrier, carrier);
  const F& k = sigma->field();
  Mat<F> delta = map_on_tensor<F>(t, cc.result->dim, [&](std::size_t p, std::size_t j) {
    Mat<F> col(k, cc.result->dim, 1);
    Mat<F> phi = Mat<F>::unit_vector(k, out.dual.dim(), p);
    for (std::size_t i = 0; i < db.count(); ++i)
      col += cc.pure(t.pure(phi, db.elements[i]), t.pure(out.dual_coords[i], Mat<F>::unit_vector(k, sigma->dim, j)));
    return col;
  });
  Mat<F> eps = map_on_tensor<F>(t, a->dim, [&](std::size_t p, std::size_t j) { return out.dual.element(p).col(j); });
  out.coring = make_coring<F>(carrier, delta, eps, "Comatrix(" + sigma->name + ")");
  return out;
}

/// Delta_dst f = (f (x) f) Delta_src and eps_dst f = eps_src.
template <ExactField F>
bool check_coring_morphism(const Mat<F>& f, const Coring<F>& src, const Coring<F>& dst) {
  if (!same_algebra(src.base, dst.base)) throw DimensionMismatch("check_coring_morphism: base algebras differ");
  if (f.rows() != dst.dim() || f.cols() != src.dim()) return false;
  if (!is_bimodule_map(f, *src.carrier, *dst.carrier)) return false;
  return dst.delta * f == induced_map(f, f, src.cc, dst.cc) * src.delta && dst.eps * f == src.eps;
}

// ---------------------------------------------------------------------------
// The comonad G = - (x)_A C on right A-modules

template <ExactField F>
class CoringComonad {
 public:
  explicit CoringComonad(CoringPtr<F> c) : c_(std::move(c)) {}

  const CoringPtr<F>& coring() const { return c_; }

  /// X (x)_A C.
  const Tensor<F>& G(const ModPtr<F>& x) const {
    return g_.get(x, [&] { return tensor_over(x, c_->carrier); });
  }
  const ModPtr<F>& G_obj(const ModPtr<F>& x) const { return G(x).result; }

  Mat<F> G_map(const Mat<F>& f, const ModPtr<F>& x, const ModPtr<F>& x2) const {
    return induced_map(f, c_->carrier->identity(), G(x), G(x2));
  }

  /// Delta_X : XC -> (XC)C.
  Mat<F> delta(const ModPtr<F>& x) const {
    const auto& xc = G(x);
    const auto& xc_c = G(xc.result);
    const auto& x_cc = xcc_.get(x, [&] { return tensor_over(x, c_->cc.result); });
    return associator_inverse(xc, xc_c, c_->cc, x_cc) * induced_map(x->identity(), c_->delta, xc, x_cc);
  }

  /// eps_X : XC -> X.
  Mat<F> eps(const ModPtr<F>& x) const {
    return map_on_tensor<F>(G(x), x->dim, [&](std::size_t i, std::size_t j) {
      return x->right_by(c_->eps.col(j)) * Mat<F>::unit_vector(x->field(), x->dim, i);
    });
  }

 private:
  CoringPtr<F> c_;
  IdentityCache<Bimodule<F>, Tensor<F>> g_;
  IdentityCache<Bimodule<F>, Tensor<F>> xcc_;
};

/// The carrier of C as an object of Mod-A.
template <ExactField F>
ModPtr<F> carrier_as_right_module(const Coring<F>& c) {
  return as_right_module(c.carrier);
}

}  // namespace coringlab
