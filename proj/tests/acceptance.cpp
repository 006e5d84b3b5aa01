// One line per acceptance criterion; exit 1 if any criterion is red.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "oracle.hpp"
#include "support.hpp"

using namespace testsupport;

namespace {

const std::string corpus_dir = CORINGLAB_CORPUS_DIR;
const std::string golden_dir = CORINGLAB_GOLDEN_DIR;
const std::string cli = CORINGLAB_CLI;

F2 k2 = gf(2);

struct Outcome {
  bool pass = true;
  std::vector<std::string> notes;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      notes.push_back(what);
    }
  }
};

template <ExactField F>
InstanceFile<F> load(const std::string& id, const F& k, bool validate = true) {
  return build_instance(read_source(corpus_dir + "/" + id + ".json"), k, validate);
}

template <class Fn>
void each_lab(Fn&& fn) {
  fn("I1", GaloisLab<F2>(corpus_i1(k2)));
  fn("I2", GaloisLab<F2>(corpus_i2()));
  fn("I3", GaloisLab<Q>(corpus_i3(Q{})));
  fn("I5", GaloisLab<F2>(corpus_i5()));
}

// 1
Outcome axiom_suite() {
  Outcome o;
  auto start = std::chrono::steady_clock::now();
  for (const auto& id : corpus_ids()) {
    auto src = read_source(corpus_dir + "/" + id + ".json");
    bool valid = field_characteristic(field_tag(src)) == 0 ? build_instance(src, Q{}, false).valid()
                                                            : build_instance(src, k2, false).valid();
    o.require(valid, id + " fails its validators");
  }
  std::size_t mutants = 0;
  for (const auto& e : std::filesystem::directory_iterator(corpus_dir + "/mutants")) {
    auto f = build_instance(read_source(e.path().string()), k2, false);
    bool localized = false;
    for (const auto& [name, rep] : f.checks)
      if (!rep.ok() && !name.empty() && !rep.failures.front().empty()) localized = true;
    o.require(!f.valid() && localized, e.path().filename().string() + " is not rejected with a localized report");
    ++mutants;
  }
  o.require(mutants >= 10, "only " + std::to_string(mutants) + " mutants");
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  o.require(secs < 5.0, "took " + std::to_string(secs) + " s");
  return o;
}

// 2
template <ExactField F>
void round_trips(Outcome& o, const std::string& name, const GaloisLab<F>& lab) {
  const auto& can = lab.can();
  auto via_alpha = phi_from_alpha<F>(can.adj_ptr(), can.comonad_ptr(), alpha_from_phi(can));
  auto via_beta = phi_from_beta<F>(can.adj_ptr(), can.comonad_ptr(), beta_from_phi(can));
  for (const auto& x : lab.probe_modules()) {
    o.require(via_alpha(x) == can(x), name + ": alpha round trip at " + x->name);
    o.require(via_beta(x) == can(x), name + ": beta round trip at " + x->name);
    for (const ComonadMorphism<F>* m : {&can, static_cast<const ComonadMorphism<F>*>(&via_alpha),
                                        static_cast<const ComonadMorphism<F>*>(&via_beta)})
      o.require(check_comonad_morphism(*m, x).ok(), name + ": comonad morphism laws at " + x->name);
  }
}

Outcome correspondences() {
  Outcome o;
  each_lab([&](const std::string& name, const auto& lab) { round_trips(o, name, lab); });
  for (std::uint64_t seed = 1; seed <= 50; ++seed) {
    auto inst = random_instance(seed);
    o.require(inst.coring->dim() <= 2, "random coring too large");
    round_trips(o, "seed " + std::to_string(seed), GaloisLab<F2>(inst));
  }
  return o;
}

// 3
template <ExactField F>
void tensor_trials(Outcome& o, const F& k, std::uint64_t seed, int trials) {
  std::mt19937_64 rng(seed);
  std::vector<AlgebraPtr<F>> algs = {ground_algebra(k), truncated_polynomials(k, 2), product_of_fields(k, 2),
                                     truncated_polynomials(k, 3), upper_triangular_2(k), product_of_fields(k, 3)};
  for (int done = 0; done < trials;) {
    auto a = algs[rng() % algs.size()];
    auto m = random_right_module(a, 3, rng);
    auto n = random_left_module(a, 3, rng);
    if (!m || !n) continue;
    o.require(tensor_over(m, n).result->dim == oracle_tensor_dim(*m, *n), "tensor dimension over " + a->name);
    ++done;
  }
}

Outcome tensor_oracle() {
  Outcome o;
  tensor_trials(o, gf(2), 2001, 40);
  tensor_trials(o, gf(3), 2002, 30);
  tensor_trials(o, Q{}, 2003, 30);
  return o;
}

// 4
Outcome contractible_equalizer() {
  Outcome o;
  each_lab([&](const std::string& name, const auto& lab) {
    for (const auto& x : lab.probe_modules()) {
      auto r = contractible_equalizer_check(lab.can(), x);
      o.require(r.ok(), name + " at " + x->name + ": " + (r.ok() ? "" : r.failures.front()));
    }
  });
  return o;
}

// 5
Outcome debil_fuerte() {
  Outcome o;
  bool seen_true = false, seen_false = false;
  each_lab([&](const std::string& name, const auto& lab) {
    for (const auto& r : {verify_thm_debil(lab), verify_thm_fuerte(lab)}) {
      o.require(r.hypotheses_hold(), name + " " + r.theorem + ": hypotheses fail");
      o.require(r.agree(), name + " " + r.theorem + ": conditions disagree");
      for (const auto& c : r.conditions)
        if (c.value) (*c.value ? seen_true : seen_false) = true;
    }
  });
  o.require(seen_true && seen_false, "a true and a false instance must both occur");
  return o;
}

// 6
std::string condition_values(const TheoremReport& r) {
  std::string s;
  for (const auto& c : r.conditions) s += " " + c.id + "=" + (c.value ? (*c.value ? "T" : "F") : "-");
  return s;
}

Outcome flat_and_ge() {
  Outcome o;
  GaloisLab<F2> i2(corpus_i2()), i5(corpus_i5());
  for (const auto& r : {verify_thm_fielmenteplano(i2), verify_thm_GE(i2)})
    for (const auto& c : r.conditions) o.require(c.value == std::optional<bool>(true), "I2 " + r.theorem + " " + c.id);
  for (const auto& r : {verify_thm_fielmenteplano(i5), verify_thm_GE(i5)}) {
    bool all_false = true;
    for (const auto& c : r.conditions)
      if (c.value && *c.value) all_false = false;
    if (!all_false || !r.agree()) {
      std::string why = "I5 " + r.theorem + ":" + condition_values(r);
      for (const auto& h : r.hypotheses)
        if (h.value == std::optional<bool>(false)) why += "; hypothesis " + h.id + " is false";
      o.require(false, why);
    }
  }
  const auto& lam = i2.end().lambda;
  o.require(lam && is_invertible(lam->matrix), "I2: lambda : F2 -> T is not an isomorphism");
  o.require(i2.dual_basis().has_value() && cond::generator(i2), "I2: Sigma is not a f.g. projective generator");
  return o;
}

// 7
Outcome galois_witnesses() {
  Outcome o;
  GaloisLab<F2> i2(corpus_i2()), i5(corpus_i5());
  o.require(i5.can_finite() && kernel(*i5.can_finite()).dim() == 2, "I5: ker can is not 2-dimensional");
  o.require(i2.can_finite() && i2.can_finite()->shape() == "4x4" && is_invertible(*i2.can_finite()),
            "I2: can is not an invertible 4x4 matrix");
  auto check3 = [&](const std::string& name, const auto& lab) {
    auto d = check_cancan3(lab);
    o.require(d.checked && d.commutes, name + ": cancan3 " + (d.checked ? "does not commute" : d.note));
  };
  check3("I2", i2);
  check3("I3", GaloisLab<Q>(corpus_i3(Q{})));
  check3("I4", GaloisLab<F2>(corpus_i4()));
  check3("I5", i5);
  return o;
}

// 8
Outcome firmness() {
  Outcome o;
  auto r = load("i4_row_firm", k2).algebras.at("R");
  o.require(!r->unital(), "I4: R has a unit");
  auto w = is_firm_ring(r);
  o.require(w.has_value(), "I4: R is not firm");
  if (w) {
    o.require(w->tensor.result->dim == 2, "I4: dim R (x)_R R != 2");
    o.require(w->d * w->mult_map == w->tensor.result->identity() && w->mult_map * w->d == Mat<F2>::identity(k2, 2),
              "I4: d is not a two-sided inverse");
  }
  o.require(!is_firm_ring(null_ring(k2, 2)).has_value(), "null ring of dimension 2 certified firm");
  return o;
}

// 9
std::string run_cli(const std::string& args) {
  std::string out;
  FILE* p = popen((cli + " " + args + " 2>/dev/null").c_str(), "r");
  if (!p) return out;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, p)) > 0) out.append(buf, n);
  pclose(p);
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Outcome goldens() {
  Outcome o;
  std::size_t compared = 0;
  for (const auto& e : std::filesystem::directory_iterator(golden_dir)) {
    std::string file = e.path().filename().string();
    auto sep = file.find("__");
    std::string id = file.substr(0, sep);
    std::string command = file.substr(sep + 2, file.size() - sep - 2 - 5);
    if (command.rfind("theorem_", 0) == 0) command[7] = ':';
    std::string args = command + " ";
    if (id.rfind("random_seed", 0) == 0)
      args += "random --seed " + id.substr(11);
    else
      args += corpus_dir + "/" + id + ".json";
    std::string want = read_file(e.path().string());
    std::string first = run_cli(args), second = run_cli(args);
    o.require(first == want && second == want, file + " differs");
    ++compared;
  }
  o.require(compared > 0, "no golden files");
  return o;
}

}  // namespace

int main() {
  std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"axiom suite on the corpus and mutants", axiom_suite},
      {"alpha/beta/phi round trips", correspondences},
      {"tensor dimension oracle", tensor_oracle},
      {"contractible equalizer and eps-hat at GX", contractible_equalizer},
      {"debil/fuerte condition agreement", debil_fuerte},
      {"fielmenteplano/GE on I2 and I5, clasico on I2", flat_and_ge},
      {"Galois witnesses and cancan3", galois_witnesses},
      {"firmness certificates", firmness},
      {"golden CLI reports", goldens},
  };
  bool all = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    all = all && o.pass;
    std::cout << "criterion " << i + 1 << ": " << (o.pass ? "PASS" : "FAIL") << "  " << criteria[i].first << "\n";
    for (std::size_t j = 0; j < o.notes.size() && j < 8; ++j) std::cout << "    " << o.notes[j] << "\n";
  }
  return all ? 0 : 1;
}
