#pragma once

// Instance files: JSON with basis-label keys, row-major matrices and a field tag.
// Loading builds and validates the object graph; explicit_json writes it back with
// every constructor expanded.

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "corpus.hpp"

namespace coringlab {

using Json = nlohmann::json;
using SrcJson = nlohmann::ordered_json;  // keeps declaration order

/// Raw text plus a parsed document; keeps the text to locate errors.
struct SourceDoc {
  std::string text;
  SrcJson doc;

  /// First line mentioning "key", 0 if none.
  std::size_t line_of(const std::string& key) const {
    auto pos = text.find("\"" + key + "\"");
    if (pos == std::string::npos) return 0;
    return 1 + static_cast<std::size_t>(std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(pos), '\n'));
  }
};

inline SourceDoc parse_source(std::string text) {
  SourceDoc s{std::move(text), {}};
  try {
    s.doc = SrcJson::parse(s.text);
  } catch (const SrcJson::parse_error& e) {
    std::size_t upto = std::min<std::size_t>(e.byte, s.text.size());
    auto line = 1 + static_cast<std::size_t>(std::count(s.text.begin(), s.text.begin() + static_cast<std::ptrdiff_t>(upto), '\n'));
    std::string msg = e.what();
    if (auto p = msg.find("syntax error"); p != std::string::npos) msg = msg.substr(p);
    throw ParseError(line, msg);
  }
  if (!s.doc.is_object()) throw ParseError(1, "top level must be an object");
  return s;
}

inline SourceDoc read_source(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_source(ss.str());
}

inline std::string field_tag(const SourceDoc& s) {
  if (!s.doc.contains("field") || !s.doc["field"].is_string()) throw ParseError(s.line_of("field"), "missing string \"field\"");
  return s.doc["field"].template get<std::string>();
}

/// "GF(p)" -> p, "Q" -> 0.
inline std::uint64_t field_characteristic(const std::string& tag) {
  if (tag == "Q") return 0;
  if (tag.rfind("GF(", 0) == 0 && tag.back() == ')') {
    std::string p = tag.substr(3, tag.size() - 4);
    if (!p.empty() && std::all_of(p.begin(), p.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
      return std::stoull(p);
  }
  throw ParseError(0, "unknown field tag '" + tag + "'");
}

template <ExactField F>
std::string field_tag_of(const F& k) {
  return k.characteristic() == 0 ? "Q" : k.name();
}

// ---------------------------------------------------------------------------
// Scalars and matrices

template <ExactField F>
Json scalar_json(const F& k, const typename F::value_type& v) {
  std::string s = k.to_string(v);
  if (s.find('/') == std::string::npos && s.size() < 18) return std::stoll(s);
  return s;
}

template <ExactField F>
Json matrix_json(const Mat<F>& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json r = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) r.push_back(scalar_json(m.field(), m(i, j)));
    rows.push_back(std::move(r));
  }
  return rows;
}

template <ExactField F>
Json vector_json(const Mat<F>& v) {
  Json out = Json::array();
  for (std::size_t i = 0; i < v.rows(); ++i) out.push_back(scalar_json(v.field(), v(i, 0)));
  return out;
}

/// Sparse element keyed by basis labels.
template <ExactField F>
Json element_json(const Algebra<F>& a, const Mat<F>& v) {
  Json out = Json::object();
  for (std::size_t i = 0; i < a.dim; ++i)
    if (!a.field.is_zero(v(i, 0))) out[a.label(i)] = scalar_json(a.field, v(i, 0));
  return out;
}

/// Builds objects of one instance file, reporting errors against the source text.
template <ExactField F>
class Reader {
 public:
  Reader(const SourceDoc& src, F k) : src_(src), k_(std::move(k)) {}

  [[noreturn]] void fail(const std::string& key, const std::string& msg) const { throw ParseError(src_.line_of(key), msg); }

  const SrcJson& need(const SrcJson& obj, const std::string& key, const std::string& where) const {
    if (!obj.is_object() || !obj.contains(key)) fail(where, where + ": missing \"" + key + "\"");
    return obj[key];
  }
  std::string need_string(const SrcJson& obj, const std::string& key, const std::string& where) const {
    const auto& v = need(obj, key, where);
    if (!v.is_string()) fail(where, where + ": \"" + key + "\" must be a string");
    return v.template get<std::string>();
  }

  typename F::value_type scalar(const SrcJson& v, const std::string& where) const {
    try {
      if (v.is_number_integer()) return k_.from_int(v.template get<long long>());
      if (v.is_string()) return k_.parse(v.template get<std::string>());
    } catch (const ParseError&) {
      throw;
    } catch (const std::exception& e) {
      fail(where, where + ": " + e.what());
    }
    fail(where, where + ": entries must be integers or strings");
  }

  Mat<F> matrix(const SrcJson& v, std::size_t rows, std::size_t cols, const std::string& where) const {
    if (!v.is_array() || v.size() != rows) fail(where, where + ": expected " + std::to_string(rows) + " rows");
    Mat<F> m(k_, rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
      if (!v[i].is_array() || v[i].size() != cols)
        fail(where, where + ": row " + std::to_string(i) + " must have " + std::to_string(cols) + " entries");
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = scalar(v[i][j], where);
    }
    return m;
  }

  Mat<F> vector(const SrcJson& v, std::size_t n, const std::string& where) const {
    if (!v.is_array() || v.size() != n) fail(where, where + ": expected " + std::to_string(n) + " entries");
    Mat<F> m(k_, n, 1);
    for (std::size_t i = 0; i < n; ++i) m(i, 0) = scalar(v[i], where);
    return m;
  }

  Mat<F> element(const SrcJson& v, const Algebra<F>& a, const std::string& where) const {
    if (!v.is_object()) fail(where, where + ": element must be an object keyed by basis labels");
    Mat<F> m(k_, a.dim, 1);
    for (auto it = v.begin(); it != v.end(); ++it) m(label_index(a, it.key(), where), 0) = scalar(it.value(), where);
    return m;
  }

  std::size_t label_index(const Algebra<F>& a, const std::string& label, const std::string& where) const {
    for (std::size_t i = 0; i < a.dim; ++i)
      if (a.label(i) == label) return i;
    fail(where, where + ": unknown basis label '" + label + "' of " + a.name);
  }

  const F& field() const { return k_; }

 private:
  const SourceDoc& src_;
  F k_;
};

// ---------------------------------------------------------------------------
// The object graph

template <ExactField F>
struct InstanceFile {
  std::string id;
  F field;
  std::map<std::string, AlgebraPtr<F>> algebras;
  std::map<std::string, RingHom<F>> homs;
  std::map<std::string, ModPtr<F>> bimodules;
  std::map<std::string, CoringPtr<F>> corings;
  std::map<std::string, Grouplike<F>> grouplikes;  // canonical group-likes of constructed corings
  std::map<std::string, Comodule<F>> comodules;
  std::optional<GaloisInstance<F>> galois;
  std::vector<std::pair<std::string, CheckReport>> checks;  // validator output per object

  bool valid() const {
    for (const auto& [name, rep] : checks)
      if (!rep.ok()) return false;
    return true;
  }
};

namespace detail {

struct StopBuild {};

template <ExactField F>
AlgebraPtr<F> read_algebra(const Reader<F>& rd, const std::string& name, const SrcJson& j) {
  const auto& basis = rd.need(j, "basis", name);
  if (!basis.is_array()) rd.fail(name, name + ": \"basis\" must be a list of labels");
  std::vector<std::string> labels;
  for (const auto& l : basis) {
    if (!l.is_string()) rd.fail(name, name + ": basis labels must be strings");
    labels.push_back(l.template get<std::string>());
  }
  std::size_t n = labels.size();
  Algebra<F> shape;
  shape.field = rd.field();
  shape.dim = n;
  shape.labels = labels;
  shape.name = name;
  std::vector<std::vector<Mat<F>>> prods(n, std::vector<Mat<F>>(n, Mat<F>(rd.field(), n, 1)));
  if (j.contains("products")) {
    const auto& p = j["products"];
    if (!p.is_object()) rd.fail(name, name + ": \"products\" must be an object");
    for (auto it = p.begin(); it != p.end(); ++it) {
      std::size_t a = rd.label_index(shape, it.key(), name);
      if (!it.value().is_object()) rd.fail(name, name + ": products of " + it.key() + " must be an object");
      for (auto jt = it.value().begin(); jt != it.value().end(); ++jt)
        prods[a][rd.label_index(shape, jt.key(), name)] = rd.element(jt.value(), shape, name);
    }
  }
  std::optional<Mat<F>> unit;
  if (j.contains("unit") && !j["unit"].is_null()) unit = rd.element(j["unit"], shape, name);
  return make_algebra(rd.field(), n, prods, unit, labels, name);
}

template <ExactField F>
void read_action(const Reader<F>& rd, const SrcJson& acts, const Algebra<F>& alg, std::size_t dim, const std::string& where,
                   std::vector<Mat<F>>& out) {
  if (!acts.is_object()) rd.fail(where, where + ": actions must be an object keyed by basis labels");
  out.assign(alg.dim, Mat<F>(rd.field(), dim, dim));
  std::vector<bool> seen(alg.dim, false);
  for (auto it = acts.begin(); it != acts.end(); ++it) {
    std::size_t i = rd.label_index(alg, it.key(), where);
    out[i] = rd.matrix(it.value(), dim, dim, where);
    seen[i] = true;
  }
  for (std::size_t i = 0; i < alg.dim; ++i)
    if (!seen[i]) rd.fail(where, where + ": no action given for basis element " + alg.label(i));
}

}  // namespace detail

/// Build the object graph. With validate, the first failing validator throws ValidationError.
template <ExactField F>
InstanceFile<F> build_instance(const SourceDoc& src, const F& k, bool validate = true) {
  Reader<F> rd(src, k);
  const SrcJson& doc = src.doc;
  InstanceFile<F> f{doc.value("id", std::string("instance")), k, {}, {}, {}, {}, {}, {}, std::nullopt, {}};
  std::string current;
  auto check = [&](const std::string& name, CheckReport rep) {
    if (validate && !rep.ok()) throw ValidationError(name, rep.failures.front());
    bool bad = !rep.ok();
    f.checks.emplace_back(name, std::move(rep));
    if (bad) throw detail::StopBuild{};  // dependents of a broken object are not built
  };
  auto section = [&](const char* key) -> SrcJson {
    if (!doc.contains(key)) return SrcJson::object();
    if (!doc[key].is_object()) rd.fail(key, std::string("\"") + key + "\" must be an object");
    return doc[key];
  };
  auto algebra = [&](const std::string& name) -> const AlgebraPtr<F>& {
    auto it = f.algebras.find(name);
    if (it == f.algebras.end()) rd.fail(name, "unknown algebra '" + name + "'");
    return it->second;
  };
  auto hom = [&](const std::string& name) -> const RingHom<F>& {
    auto it = f.homs.find(name);
    if (it == f.homs.end()) rd.fail(name, "unknown ring homomorphism '" + name + "'");
    return it->second;
  };
  auto bimodule = [&](const std::string& name) -> const ModPtr<F>& {
    auto it = f.bimodules.find(name);
    if (it == f.bimodules.end()) rd.fail(name, "unknown bimodule '" + name + "'");
    return it->second;
  };
  auto coring = [&](const std::string& name) -> const CoringPtr<F>& {
    auto it = f.corings.find(name);
    if (it == f.corings.end()) rd.fail(name, "unknown coring '" + name + "'");
    return it->second;
  };
  auto comodule = [&](const std::string& name) -> const Comodule<F>& {
    auto it = f.comodules.find(name);
    if (it == f.comodules.end()) rd.fail(name, "unknown comodule '" + name + "'");
    return it->second;
  };

  try {
    SrcJson algs = section("algebras");
    for (auto it = algs.begin(); it != algs.end(); ++it) {
      current = it.key();
      auto a = detail::read_algebra(rd, it.key(), it.value());
      check(it.key(), check_algebra(*a));
      f.algebras[it.key()] = a;
    }

    SrcJson homs = section("homs");
    for (auto it = homs.begin(); it != homs.end(); ++it) {
      const auto& name = it.key();
      current = name;
      const auto& j = it.value();
      const auto& s = algebra(rd.need_string(j, "source", name));
      const auto& t = algebra(rd.need_string(j, "target", name));
      Mat<F> m(k, t->dim, s->dim);
      const auto& images = rd.need(j, "images", name);
      if (!images.is_object()) rd.fail(name, name + ": \"images\" must be an object");
      for (auto jt = images.begin(); jt != images.end(); ++jt)
        m.set_col(rd.label_index(*s, jt.key(), name), rd.element(jt.value(), *t, name));
      bool unital = j.value("unital", s->unital() && t->unital());
      RingHom<F> h{s, t, m, unital};
      check(name, check_hom(h));
      f.homs.emplace(name, h);
    }

    SrcJson mods = section("bimodules");
    for (auto it = mods.begin(); it != mods.end(); ++it) {
      const auto& name = it.key();
      current = name;
      const auto& j = it.value();
      ModPtr<F> m;
      if (j.contains("regular")) {
        const auto& a = algebra(rd.need_string(j, "regular", name));
        m = regular_bimodule(a);
        std::optional<RingHom<F>> l, r;
        if (j.contains("left_via")) l = hom(rd.need_string(j, "left_via", name));
        if (j.contains("right_via")) r = hom(rd.need_string(j, "right_via", name));
        if (l || r) m = restrict_scalars<F>(m, l, r);
      } else if (j.contains("power")) {
        const auto& base = bimodule(rd.need_string(j, "power", name));
        const auto& e = rd.need(j, "exponent", name);
        if (!e.is_number_unsigned()) rd.fail(name, name + ": \"exponent\" must be a non-negative integer");
        m = power(base, e.template get<std::size_t>());
      } else {
        Bimodule<F> b;
        b.left = algebra(rd.need_string(j, "left", name));
        b.right = algebra(rd.need_string(j, "right", name));
        const auto& d = rd.need(j, "dim", name);
        if (!d.is_number_unsigned()) rd.fail(name, name + ": \"dim\" must be a non-negative integer");
        b.dim = d.template get<std::size_t>();
        detail::read_action(rd, rd.need(j, "left_action", name), *b.left, b.dim, name, b.left_act);
        detail::read_action(rd, rd.need(j, "right_action", name), *b.right, b.dim, name, b.right_act);
        m = share(std::move(b));
      }
      Bimodule<F> named = *m;
      named.name = name;
      m = share(std::move(named));
      check(name, check_bimodule(*m));
      f.bimodules[name] = m;
    }

    SrcJson cors = section("corings");
    for (auto it = cors.begin(); it != cors.end(); ++it) {
      const auto& name = it.key();
      current = name;
      const auto& j = it.value();
      std::string ctor = rd.need_string(j, "constructor", name);
      CoringPtr<F> c;
      try {
        if (ctor == "trivial") {
          c = trivial_coring(algebra(rd.need_string(j, "algebra", name)));
          f.grouplikes.emplace(name, Grouplike<F>{c, c->base->unital() ? *c->base->unit : Mat<F>(k, c->dim(), 1)});
        } else if (ctor == "sweedler") {
          auto sw = sweedler_coring(hom(rd.need_string(j, "hom", name)));
          c = sw.coring;
          f.grouplikes.emplace(name, sw.grouplike);
        } else if (ctor == "comatrix") {
          const auto& sigma = bimodule(rd.need_string(j, "sigma", name));
          auto db = is_fg_projective(sigma);
          if (!db) throw ValidationError(name, "Sigma is not finitely generated projective over " + sigma->right->name);
          c = comatrix_coring(sigma, *db).coring;
        } else if (ctor == "explicit") {
          const auto& carrier = bimodule(rd.need_string(j, "carrier", name));
          auto cc = tensor_over(carrier, carrier);
          Mat<F> delta = rd.matrix(rd.need(j, "delta", name), cc.result->dim, carrier->dim, name);
          Mat<F> eps = rd.matrix(rd.need(j, "eps", name), carrier->right->dim, carrier->dim, name);
          c = make_coring<F>(carrier, delta, eps, name);
        } else {
          rd.fail(name, name + ": unknown coring constructor '" + ctor + "'");
        }
      } catch (const NotFirm& e) {
        throw ValidationError(name, e.what());
      } catch (const UnitRequired& e) {
        throw ValidationError(name, e.what());
      } catch (const DimensionMismatch& e) {
        throw ValidationError(name, e.what());
      }
      Coring<F> named = *c;
      named.name = name;
      c = std::make_shared<const Coring<F>>(std::move(named));
      if (f.grouplikes.count(name)) f.grouplikes.at(name).coring = c;
      check(name, check_coring(*c));
      f.corings[name] = c;
    }

    SrcJson comods = section("comodules");
    for (auto it = comods.begin(); it != comods.end(); ++it) {
      const auto& name = it.key();
      current = name;
      const auto& j = it.value();
      std::string cname = rd.need_string(j, "coring", name);
      const auto& c = coring(cname);
      Comodule<F> x;
      if (j.value("regular", false)) {
        x = regular_comodule(c);
      } else if (j.contains("grouplike")) {
        Grouplike<F> gl{c, {}};
        const auto& g = j["grouplike"];
        if (g.is_string() && g.template get<std::string>() == "canonical") {
          if (!f.grouplikes.count(cname)) rd.fail(name, name + ": coring " + cname + " has no canonical group-like");
          gl = f.grouplikes.at(cname);
        } else {
          gl.g = rd.vector(g, c->dim(), name);
        }
        if (!is_grouplike(*c, gl.g)) throw ValidationError(name, "not a group-like element of " + cname);
        x = comodule_from_grouplike(gl);
        if (j.contains("carrier")) {
          const auto& m = bimodule(rd.need_string(j, "carrier", name));
          if (m->dim != x.carrier->dim || m->right_act != x.carrier->right_act)
            throw ValidationError(name, "carrier is not " + c->base->name + " as a right module");
          x.carrier = m;
        }
      } else if (j.value("comatrix", false)) {
        const auto& m = bimodule(rd.need_string(j, "carrier", name));
        auto db = is_fg_projective(m);
        if (!db) throw ValidationError(name, "carrier is not finitely generated projective");
        auto cm = comatrix_coring(m, *db);
        if (!(cm.coring->delta == c->delta) || !(cm.coring->eps == c->eps) || cm.coring->dim() != c->dim())
          throw ValidationError(name, cname + " is not the comatrix coring of " + m->name);
        auto sc = tensor_over(m, c->carrier);
        Mat<F> rho(k, sc.result->dim, m->dim);
        for (std::size_t u = 0; u < m->dim; ++u)
          for (std::size_t i = 0; i < db->count(); ++i)
            rho.set_col(u, rho.col(u) + sc.pure(db->elements[i], cm.carrier_tensor.pure(cm.dual_coords[i], Mat<F>::unit_vector(k, m->dim, u))));
        x = {c, m, rho, name};
      } else {
        const auto& m = bimodule(rd.need_string(j, "carrier", name));
        if (!same_algebra(m->right, c->base)) throw ValidationError(name, "carrier is not a module over the base of " + cname);
        auto sc = tensor_over(m, c->carrier);
        x = {c, m, rd.matrix(rd.need(j, "rho", name), sc.result->dim, m->dim, name), name};
      }
      x.name = name;
      check(name, check_comodule(x));
      f.comodules[name] = x;
    }

    if (doc.contains("galois")) {
      current = "galois";
      const auto& g = doc["galois"];
      GaloisInstance<F> gi;
      gi.id = f.id;
      gi.sigma = comodule(rd.need_string(g, "sigma", "galois"));
      gi.coring = gi.sigma.coring;
      if (g.contains("probes")) {
        if (!g["probes"].is_array()) rd.fail("probes", "galois: \"probes\" must be a list of comodule names");
        for (const auto& p : g["probes"]) {
          if (!p.is_string()) rd.fail("probes", "galois: probe names must be strings");
          gi.comodules.push_back(comodule(p.template get<std::string>()));
        }
      }
      if (g.contains("iota")) {
        const auto& sigma = gi.sigma.carrier;
        if (!sigma->right->unital()) throw ValidationError("galois", "iota needs a unital base algebra");
        auto s = build_s_ring(sigma);
        gi.iota = RingHom<F>{sigma->left, s.algebra, rd.matrix(g["iota"], s.algebra->dim, sigma->left->dim, "iota"), false};
        check("iota", check_hom(*gi.iota));
      }
      f.galois = gi;
    }
  } catch (const detail::StopBuild&) {
  } catch (const ValidationError& e) {
    if (validate) throw;
    f.checks.emplace_back(e.object, CheckReport{{e.what()}});
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    if (validate) throw ValidationError(current, e.what());
    f.checks.emplace_back(current, CheckReport{{e.what()}});
  }
  return f;
}

/// Merge the comodules of a probe file into an instance document and append them to the probes.
inline void merge_probe_file(SourceDoc& inst, const SourceDoc& probes) {
  if (!probes.doc.contains("comodules") || !probes.doc["comodules"].is_object())
    throw ParseError(probes.line_of("comodules"), "probe file needs a \"comodules\" object");
  for (auto it = probes.doc["comodules"].begin(); it != probes.doc["comodules"].end(); ++it) {
    if (inst.doc["comodules"].contains(it.key())) throw ValidationError(it.key(), "probe comodule name already used");
    inst.doc["comodules"][it.key()] = it.value();
    if (inst.doc.contains("galois")) inst.doc["galois"]["probes"].push_back(it.key());
  }
}

// ---------------------------------------------------------------------------
// Explicit serialization

template <ExactField F>
class Writer {
 public:
  explicit Writer(const F& k) : k_(k) { doc_["field"] = field_tag_of(k); }

  std::string algebra(const AlgebraPtr<F>& a) {
    for (const auto& [name, p] : algs_)
      if (same_algebra(p, a)) return name;
    std::string name = fresh(a->name, doc_["algebras"]);
    SrcJson j;
    SrcJson basis = SrcJson::array();
    for (std::size_t i = 0; i < a->dim; ++i) basis.push_back(a->label(i));
    j["basis"] = basis;
    SrcJson prods = SrcJson::object();
    for (std::size_t i = 0; i < a->dim; ++i)
      for (std::size_t l = 0; l < a->dim; ++l) {
        SrcJson e = element_json(*a, a->left_mult[i].col(l));
        if (!e.empty()) prods[a->label(i)][a->label(l)] = e;
      }
    j["products"] = prods;
    if (a->unital()) j["unit"] = element_json(*a, *a->unit);
    doc_["algebras"][name] = j;
    algs_.emplace_back(name, a);
    return name;
  }

  std::string bimodule(const ModPtr<F>& m, const std::string& preferred) {
    for (const auto& [name, p] : mods_)
      if (p == m) return name;
    std::string name = fresh(preferred, doc_["bimodules"]);
    SrcJson j;
    j["left"] = algebra(m->left);
    j["right"] = algebra(m->right);
    j["dim"] = m->dim;
    for (std::size_t i = 0; i < m->left->dim; ++i) j["left_action"][m->left->label(i)] = matrix_json(m->left_act[i]);
    for (std::size_t i = 0; i < m->right->dim; ++i) j["right_action"][m->right->label(i)] = matrix_json(m->right_act[i]);
    if (m->left->dim == 0) j["left_action"] = SrcJson::object();
    if (m->right->dim == 0) j["right_action"] = SrcJson::object();
    doc_["bimodules"][name] = j;
    mods_.emplace_back(name, m);
    return name;
  }

  std::string coring(const CoringPtr<F>& c, const std::string& preferred) {
    for (const auto& [name, p] : cors_)
      if (p == c) return name;
    std::string name = fresh(preferred, doc_["corings"]);
    SrcJson j;
    j["constructor"] = "explicit";
    j["carrier"] = bimodule(c->carrier, name + "_carrier");
    j["delta"] = matrix_json(c->delta);
    j["eps"] = matrix_json(c->eps);
    doc_["corings"][name] = j;
    cors_.emplace_back(name, c);
    return name;
  }

  std::string comodule(const Comodule<F>& x, const std::string& preferred) {
    std::string name = fresh(preferred, doc_["comodules"]);
    SrcJson j;
    j["coring"] = coring(x.coring, "C");
    j["carrier"] = bimodule(x.carrier, name);
    j["rho"] = matrix_json(x.rho);
    doc_["comodules"][name] = j;
    return name;
  }

  SrcJson& doc() { return doc_; }

 private:
  static std::string fresh(const std::string& base, const SrcJson& taken) {
    std::string b = base.empty() ? "X" : base;
    if (!taken.is_object() || !taken.contains(b)) return b;
    for (std::size_t i = 2;; ++i)
      if (!taken.contains(b + "_" + std::to_string(i))) return b + "_" + std::to_string(i);
  }

  F k_;
  SrcJson doc_;
  std::vector<std::pair<std::string, AlgebraPtr<F>>> algs_;
  std::vector<std::pair<std::string, ModPtr<F>>> mods_;
  std::vector<std::pair<std::string, CoringPtr<F>>> cors_;
};

/// Every object written out explicitly; loading the result rebuilds the same matrices.
template <ExactField F>
SrcJson explicit_json(const InstanceFile<F>& f) {
  Writer<F> w(f.field);
  w.doc()["id"] = f.id;
  for (const auto& [name, a] : f.algebras) w.algebra(a);
  for (const auto& [name, m] : f.bimodules) w.bimodule(m, name);
  for (const auto& [name, c] : f.corings) w.coring(c, name);
  for (const auto& [name, h] : f.homs) {
    SrcJson j;
    j["source"] = w.algebra(h.source);
    j["target"] = w.algebra(h.target);
    for (std::size_t i = 0; i < h.source->dim; ++i) j["images"][h.source->label(i)] = element_json(*h.target, h.matrix.col(i));
    j["unital"] = h.unit_preserving;
    w.doc()["homs"][name] = j;
  }
  for (const auto& [name, x] : f.comodules) w.comodule(x, name);
  if (f.galois) {
    SrcJson g;
    for (const auto& [name, x] : f.comodules) {
      if (x.rho == f.galois->sigma.rho && x.carrier == f.galois->sigma.carrier) g["sigma"] = name;
      for (const auto& p : f.galois->comodules)
        if (x.rho == p.rho && x.carrier == p.carrier) g["probes"].push_back(name);
    }
    if (f.galois->iota) g["iota"] = matrix_json(f.galois->iota->matrix);
    w.doc()["galois"] = g;
  }
  return w.doc();
}

/// Same object graph up to names: algebras, bimodule actions, coring and comodule matrices.
template <ExactField F>
bool same_instance(const InstanceFile<F>& a, const InstanceFile<F>& b) {
  auto same_mod = [](const ModPtr<F>& x, const ModPtr<F>& y) {
    return x->dim == y->dim && same_algebra(x->left, y->left) && same_algebra(x->right, y->right) &&
           x->left_act == y->left_act && x->right_act == y->right_act;
  };
  if (a.algebras.size() > b.algebras.size() || a.bimodules.size() > b.bimodules.size()) return false;
  for (const auto& [name, x] : a.algebras)
    if (!b.algebras.count(name) || !same_algebra(x, b.algebras.at(name))) return false;
  for (const auto& [name, x] : a.bimodules)
    if (!b.bimodules.count(name) || !same_mod(x, b.bimodules.at(name))) return false;
  for (const auto& [name, c] : a.corings) {
    if (!b.corings.count(name)) return false;
    const auto& d = b.corings.at(name);
    if (!same_mod(c->carrier, d->carrier) || !(c->delta == d->delta) || !(c->eps == d->eps)) return false;
  }
  for (const auto& [name, x] : a.comodules) {
    if (!b.comodules.count(name)) return false;
    const auto& y = b.comodules.at(name);
    if (!same_mod(x.carrier, y.carrier) || !(x.rho == y.rho)) return false;
  }
  return a.galois.has_value() == b.galois.has_value();
}

}  // namespace coringlab
