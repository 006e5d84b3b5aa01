#pragma once

// Deterministic JSON reports for the command-line tool.

#include <functional>
#include <string>

#include "io.hpp"

namespace coringlab {

inline constexpr const char* kToolVersion = "0.4.0";

struct Report {
  Json body;
  bool ok = true;        // every asserted equivalence held
  bool input_ok = true;  // the instance passed its validators
};

namespace detail {

inline Json check_json(const CheckReport& rep) {
  Json j;
  j["ok"] = rep.ok();
  j["failures"] = rep.failures;
  return j;
}

inline Json condition_json(const Condition& c) {
  Json j;
  j["id"] = c.id;
  j["statement"] = c.statement;
  j["value"] = c.value ? Json(*c.value) : Json(nullptr);
  j["probe_verified"] = c.probe_verified;
  if (!c.note.empty()) j["note"] = c.note;
  return j;
}

/// Runs a section; UnitRequired and NotFirm mark it as not applicable.
inline Json guarded(const std::function<Json()>& fn) {
  try {
    return fn();
  } catch (const UnitRequired& e) {
    return Json{{"applicable", false}, {"reason", e.what()}};
  } catch (const NotFirm& e) {
    return Json{{"applicable", false}, {"reason", e.what()}};
  }
}

template <ExactField F>
const GaloisInstance<F>& need_galois(const InstanceFile<F>& f) {
  if (!f.galois) throw ValidationError(f.id, "the instance declares no \"galois\" binding");
  return *f.galois;
}

}  // namespace detail

template <ExactField F>
Report report_axioms(const InstanceFile<F>& f) {
  Report r;
  Json objs = Json::array();
  for (const auto& [name, rep] : f.checks) {
    Json j = detail::check_json(rep);
    j["name"] = name;
    objs.push_back(j);
    if (!rep.ok()) r.input_ok = false;
  }
  r.body["objects"] = objs;
  r.body["valid"] = r.input_ok;
  return r;
}

template <ExactField F>
Report report_firm(const InstanceFile<F>& f) {
  Report r;
  for (const auto& [name, a] : f.algebras) {
    Json j;
    auto w = is_firm_ring(a);
    j["unital"] = a->unital();
    j["firm"] = w.has_value();
    j["dim"] = a->dim;
    j["dim_A_tensor_A"] = tensor_over(regular_bimodule(a), regular_bimodule(a)).result->dim;
    r.body["algebras"][name] = j;
  }
  for (const auto& [name, m] : f.bimodules) {
    Json j;
    j["left_firm"] = is_left_firm_module(m).has_value();
    j["right_firm"] = is_firm_module(m).has_value();
    r.body["bimodules"][name] = j;
  }
  for (const auto& [name, c] : f.corings) r.body["corings"][name]["dim"] = c->dim();
  return r;
}

template <ExactField F>
Report report_galois(const GaloisLab<F>& lab) {
  Report r;
  auto g = is_galois(lab);
  Json& b = r.body;
  b["is_galois"] = g.galois;
  b["representation"] = g.representation;
  b["can_T_iso_on_probes"] = g.t_version ? Json(*g.t_version) : Json(nullptr);
  if (g.kernel_dim) b["kernel_dim"] = *g.kernel_dim;
  if (lab.can_finite()) {
    b["can"] = matrix_json(*lab.can_finite());
    b["can_rank"] = rank(*lab.can_finite());
    b["kernel_basis"] = matrix_json(kernel(*lab.can_finite()).inclusion());
    b["can_coring_morphism"] = check_coring_morphism(*lab.can_finite(), *lab.comatrix()->coring, *lab.comonad()->coring());
    if (!b["can_coring_morphism"].template get<bool>()) r.ok = false;
  }
  b["T_dim"] = lab.end().t.algebra->dim;
  b["lambda_defined"] = lab.end().lambda.has_value();
  if (lab.end().lambda) {
    b["lambda_iso"] = is_invertible(lab.end().lambda->matrix);
    b["B_left_ideal_of_T"] = is_left_ideal_via(*lab.end().lambda);
  }
  if (lab.s_ring()) {
    b["S_dim"] = lab.s_ring()->algebra->dim;
    b["S_unital"] = lab.s_ring()->algebra->unital();
    auto rep = check_s_ring(*lab.s_ring());
    b["S_check"] = detail::check_json(rep);
    if (!rep.ok()) r.ok = false;
  }
  if (lab.dagger()) {
    const auto& dd = *lab.dagger();
    auto cp = comatrix_coring_firm(dd);
    bool morph = check_coring_morphism(*lab.can_plus(), *cp, *lab.comonad()->coring());
    b["sigma_dagger_dim"] = dd.sigma_dagger->dim;
    b["can_dagger"] = matrix_json(*lab.can_plus());
    b["can_dagger_invertible"] = is_invertible(*lab.can_plus());
    b["can_dagger_coring_morphism"] = morph;
    b["firm_comatrix_coring"] = detail::check_json(check_coring(*cp));
    if (!morph || !check_coring(*cp).ok()) r.ok = false;
  }
  Json nus = Json::array();
  for (const auto& x : lab.probe_modules()) {
    Json j;
    j["probe"] = x->name;
    if (lab.comatrix()) j["nu_finite_invertible"] = is_invertible(nu_finite(*lab.adj_b(), *lab.s_ring(), *lab.dual_basis(), x));
    if (lab.dagger()) j["nu_firm_invertible"] = is_invertible(nu_firm(*lab.adj_b(), *lab.dagger(), x));
    for (const char* key : {"nu_finite_invertible", "nu_firm_invertible"})
      if (j.contains(key) && !j[key].template get<bool>()) r.ok = false;
    nus.push_back(j);
  }
  b["nu"] = nus;
  b["sobreideal"] = detail::guarded([&] {
    auto s = lemma_sobreideal(lab);
    if (s.counterexample) r.ok = false;
    return Json{{"hypothesis", s.hypothesis},
                {"conclusion", s.conclusion ? Json(*s.conclusion) : Json(nullptr)},
                {"counterexample", s.counterexample}};
  });
  auto cancan = check_cancan(lab);
  b["cancan"] = {{"checked", cancan.checked}, {"commutes", cancan.commutes}, {"note", cancan.note}};
  if (cancan.checked && !cancan.commutes) r.ok = false;
  return r;
}

template <ExactField F>
Report report_theorem(const GaloisLab<F>& lab, const std::string& which) {
  Report r;
  r.body = detail::guarded([&] {
    TheoremReport t;
    if (which == "debil")
      t = verify_thm_debil(lab);
    else if (which == "fuerte")
      t = verify_thm_fuerte(lab);
    else if (which == "ff")
      t = verify_thm_fielmenteplano(lab);
    else if (which == "ge")
      t = verify_thm_GE(lab);
    else if (which == "clasico")
      t = verify_cor_clasico(lab);
    else
      throw ParseError(0, "unknown theorem '" + which + "'");
    Json j;
    j["theorem"] = t.theorem;
    j["hypotheses"] = Json::array();
    for (const auto& c : t.hypotheses) j["hypotheses"].push_back(detail::condition_json(c));
    j["conditions"] = Json::array();
    for (const auto& c : t.conditions) j["conditions"].push_back(detail::condition_json(c));
    j["agree"] = t.agree();
    j["hypotheses_hold"] = t.hypotheses_hold();
    // the equivalence is only claimed under the hypotheses
    if (t.hypotheses_hold() && !t.agree()) r.ok = false;
    return j;
  });
  return r;
}

template <ExactField F>
Report report_diagrams(const GaloisLab<F>& lab) {
  Report r;
  Json ds = Json::array();
  for (const auto& d : verify_diagrams(lab)) {
    ds.push_back({{"name", d.name}, {"checked", d.checked}, {"commutes", d.commutes}, {"note", d.note}});
    if (d.checked && !d.commutes) r.ok = false;
  }
  r.body["diagrams"] = ds;
  r.body["contractible_equalizer"] = detail::guarded([&] {
    Json out = Json::array();
    for (const auto& x : lab.probe_modules()) {
      auto rep = contractible_equalizer_check(lab.can(), x);
      if (!rep.ok()) r.ok = false;
      Json j = detail::check_json(rep);
      j["probe"] = x->name;
      out.push_back(j);
    }
    return out;
  });
  r.body["serial"] = detail::guarded([&] {
    Json out = Json::array();
    for (const auto& c : lab.probe_comodules()) {
      auto rep = verify_serial_diagram(lab.can(), c.comodule);
      if (!rep.ok()) r.ok = false;
      Json j = detail::check_json(rep);
      j["probe"] = c.name;
      out.push_back(j);
    }
    return out;
  });
  if (lab.dagger() && lab.b()->unital()) {
    // Hom_C(Sigma,-) and - box_C Sigma+ as right adjoints: equal dimensions at each probe
    Json out = Json::array();
    auto sigma = as_right_comodule(lab.instance().sigma);
    for (const auto& c : lab.probe_comodules()) {
      auto h = hom_comodules(sigma, c.comodule, *lab.comonad());
      auto ct = cotensor(c.comodule, lab.dagger()->sigma_dagger, *lab.alpha_dagger());
      bool same = h.dim() == ct.equalizer.module->dim;
      if (!same) r.ok = false;
      out.push_back({{"probe", c.name}, {"hom_dim", h.dim()}, {"cotensor_dim", ct.equalizer.module->dim}});
    }
    r.body["cotensor_vs_hom"] = out;
  }
  return r;
}

template <ExactField F>
Report report_correspondences(const GaloisLab<F>& lab) {
  Report r;
  const auto& can = lab.can();
  auto alpha = alpha_from_phi(can);
  auto beta = beta_from_phi(can);
  auto phi_a = phi_from_alpha<F>(can.adj_ptr(), can.comonad_ptr(), alpha);
  auto phi_b = phi_from_beta<F>(can.adj_ptr(), can.comonad_ptr(), beta);
  Json xs = Json::array();
  for (const auto& x : lab.probe_modules()) {
    Json j;
    j["probe"] = x->name;
    j["phi_alpha_phi"] = phi_a(x) == can(x);
    j["phi_beta_phi"] = phi_b(x) == can(x);
    j["comonad_morphism"] = detail::check_json(check_comonad_morphism(can, x));
    j["alpha_laws"] = detail::check_json(check_alpha(can.adj(), can.comonad(), alpha, x));
    j["alpha_phi_alpha"] = alpha_from_phi(phi_a)(x) == alpha(x);
    if (!j["phi_alpha_phi"].template get<bool>() || !j["phi_beta_phi"].template get<bool>() ||
        !j["comonad_morphism"]["ok"].template get<bool>() || !j["alpha_laws"]["ok"].template get<bool>() ||
        !j["alpha_phi_alpha"].template get<bool>())
      r.ok = false;
    xs.push_back(j);
  }
  r.body["modules"] = xs;
  Json ys = Json::array();
  for (const auto& y : lab.probe_objects()) {
    Json j;
    j["probe"] = y->name;
    j["beta_laws"] = detail::check_json(check_beta(can.adj(), can.comonad(), beta, y));
    j["beta_phi_beta"] = beta_from_phi(phi_b)(y) == beta(y);
    if (!j["beta_laws"]["ok"].template get<bool>() || !j["beta_phi_beta"].template get<bool>()) r.ok = false;
    ys.push_back(j);
  }
  r.body["objects"] = ys;
  // the coaction of Sigma gives back can
  Json beta_rho;
  beta_rho["matches_coaction"] = beta_from_coaction<F>(can.adj_ptr(), can.comonad_ptr(), lab.instance().sigma.rho)(
                                     lab.probe_objects().front()) == beta(lab.probe_objects().front());
  r.body["beta_from_coaction"] = beta_rho;
  return r;
}

template <ExactField F>
Report report_equivalence(const GaloisLab<F>& lab) {
  Report r;
  r.body = detail::guarded([&] {
    Json out;
    bool all = true;
    for (const auto& y : lab.probe_objects()) {
      Mat<F> u = unit_hat(lab.can(), y);
      bool iso = is_invertible(u);
      all = all && iso;
      out["unit_hat"].push_back({{"probe", y->name}, {"source_dim", u.cols()}, {"target_dim", u.rows()}, {"iso", iso}});
    }
    for (const auto& c : lab.probe_comodules()) {
      auto d = D_phi(lab.can(), c.comodule);
      Mat<F> e = counit_hat(lab.can(), c.comodule, d);
      bool iso = is_invertible(e);
      all = all && iso;
      out["counit_hat"].push_back({{"probe", c.name}, {"D_dim", d.object->dim}, {"comodule_dim", c.comodule.carrier->dim}, {"iso", iso}});
    }
    out["equivalence_on_probes"] = all;
    return out;
  });
  return r;
}

/// Dispatch one command on a loaded instance.
template <ExactField F>
Report run_command(const std::string& command, const InstanceFile<F>& f) {
  Report r;
  if (command == "axioms") {
    r = report_axioms(f);
  } else if (command == "firm") {
    r = report_firm(f);
  } else {
    GaloisLab<F> lab(detail::need_galois(f));
    if (command == "galois")
      r = report_galois(lab);
    else if (command.rfind("theorem:", 0) == 0)
      r = report_theorem(lab, command.substr(8));
    else if (command == "diagrams")
      r = report_diagrams(lab);
    else if (command == "correspondences")
      r = report_correspondences(lab);
    else if (command == "equivalence")
      r = report_equivalence(lab);
    else
      throw ParseError(0, "unknown command '" + command + "'");
  }
  r.body["command"] = command;
  r.body["instance"] = f.id;
  r.body["field"] = field_tag_of(f.field);
  r.body["tool_version"] = kToolVersion;
  r.body["ok"] = r.ok;
  return r;
}

/// Random instance wrapped as an instance file.
inline InstanceFile<PrimeField> random_instance_file(std::uint64_t seed) {
  auto gi = random_instance(seed);
  InstanceFile<PrimeField> f{gi.id, PrimeField(2), {}, {}, {}, {}, {}, {}, gi, {}};
  f.algebras["k"] = gi.coring->base;
  f.bimodules["Sigma"] = gi.sigma.carrier;
  f.corings["C"] = gi.coring;
  f.comodules["Sigma"] = gi.sigma;
  f.checks.emplace_back("C", check_coring(*gi.coring));
  f.checks.emplace_back("Sigma", check_comodule(gi.sigma));
  return f;
}

/// Indented "key: value" lines.
inline void text_lines(const Json& j, const std::string& indent, std::string& out) {
  for (auto it = j.begin(); it != j.end(); ++it) {
    std::string key = j.is_object() ? it.key() : "-";
    const Json& v = it.value();
    if (v.is_structured() && !v.empty()) {
      bool flat = v.is_array() && std::all_of(v.begin(), v.end(), [](const Json& e) { return e.is_primitive(); });
      if (flat) {
        out += indent + key + ": " + v.dump() + "\n";
      } else {
        out += indent + key + ":\n";
        text_lines(v, indent + "  ", out);
      }
    } else {
      out += indent + key + ": " + (v.is_string() ? v.template get<std::string>() : v.dump()) + "\n";
    }
  }
}

inline std::string render(const Json& body, bool text) {
  if (!text) return body.dump(2) + "\n";
  std::string out;
  text_lines(body, "", out);
  return out;
}

}  // namespace coringlab
