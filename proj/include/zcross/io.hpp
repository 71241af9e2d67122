#pragma once

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include <json.hpp>

#include "zcross/abgroup.hpp"
#include "zcross/crossedcat.hpp"
#include "zcross/equivariant.hpp"
#include "zcross/lattice.hpp"
#include "zcross/pointedcat.hpp"
#include "zcross/qform.hpp"
#include "zcross/report.hpp"
#include "zcross/scalar.hpp"

namespace zcross::io {

using Json = nlohmann::ordered_json;

inline Error bad(const std::string& msg) { return Error(ErrorKind::InvalidInput, msg); }

// Reads a JSON value given inline (starting with '[' or '{') or as a file path.
inline Json load(const std::string& arg) {
  std::string text = arg;
  auto first = arg.find_first_not_of(" \t\r\n");
  if (first == std::string::npos || (arg[first] != '[' && arg[first] != '{')) {
    std::ifstream in(arg);
    if (!in) throw bad("cannot open " + arg);
    std::stringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  }
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw bad(std::string("malformed JSON: ") + e.what());
  }
}

inline std::int64_t get_int(const Json& j, const std::string& what) {
  if (j.is_number_integer()) return j.get<std::int64_t>();
  if (j.is_string()) {
    Rat r = parse_rat(j.get<std::string>());
    if (r.denominator() == 1) return r.numerator();
  }
  throw bad(what + " must be an integer");
}

inline const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw bad(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

// Scalars

inline Json to_json(const Rat& r) { return to_string(r); }
inline Json to_json(const Phase& p) { return p.str(); }
inline Json to_json(const ScaledScalar& s) { return Json{{"m", to_string(s.m)}, {"r", s.r.str()}}; }

inline Rat rat_from(const Json& j) {
  if (j.is_number_integer()) return Rat(j.get<std::int64_t>());
  if (j.is_string()) return parse_rat(j.get<std::string>());
  throw bad("expected a rational string");
}
inline Phase phase_from(const Json& j) { return Phase(rat_from(j)); }
inline ScaledScalar scaled_from(const Json& j) {
  if (!j.is_object()) return ScaledScalar(phase_from(j));
  Rat m = rat_from(field(j, "m"));
  if (m <= Rat(0)) throw bad("magnitude must be positive");
  return ScaledScalar(m, phase_from(field(j, "r")));
}

inline Json to_json(const CycSum& s) {
  Json c = Json::array();
  for (const auto& x : s.coefficient_strings()) c.push_back(x);
  return Json{{"conductor", s.conductor()}, {"coefficients", c}};
}

// Groups, forms, subgroups

inline Json to_json(const AbGroup& g) { return Json{{"invariant_factors", g.factors()}}; }

inline AbGroup group_from(const Json& j) {
  const Json& f = j.is_array() ? j : field(j, "invariant_factors");
  std::vector<std::int64_t> n;
  for (const auto& x : f) n.push_back(get_int(x, "invariant factor"));
  return AbGroup(n);
}

inline Json to_json(const QuadForm& q) {
  Json v = Json::array(), p = Json::array();
  for (const auto& x : q.gen_values()) v.push_back(x.str());
  for (const auto& x : q.gen_pairs()) p.push_back(x.str());
  return Json{{"invariant_factors", q.group().factors()}, {"values", v}, {"pairs", p}};
}

// {"invariant_factors":[...], "values":[Q(g_i)...], "pairs":[B(g_i,g_j)...]}
inline QuadForm form_from(const Json& j) {
  AbGroup g = group_from(j.contains("group") ? j.at("group") : j);
  std::vector<Phase> v, p;
  for (const auto& x : field(j, "values")) v.push_back(phase_from(x));
  if (j.contains("pairs"))
    for (const auto& x : j.at("pairs")) p.push_back(phase_from(x));
  return QuadForm(g, v, p);
}

inline Elem elem_from(const AbGroup& g, const Json& j) {
  Elem e;
  if (j.is_number_integer()) {
    if (g.rank() != 1) throw bad("scalar element needs a cyclic group");
    e.push_back(j.get<std::int64_t>());
  } else {
    for (const auto& x : j) e.push_back(get_int(x, "element coordinate"));
  }
  if (e.size() != g.rank()) throw bad("element has the wrong number of coordinates");
  return g.reduce(e);
}

// Either a list of generators or {"generators":[...]}.
inline Subgroup subgroup_from(const AbGroup& g, const Json& j) {
  const Json& gens = j.is_array() ? j : field(j, "generators");
  std::vector<Elem> es;
  for (const auto& x : gens) es.push_back(elem_from(g, x));
  return Subgroup::generated(g, es);
}

inline Json to_json(const Subgroup& h) {
  Json gens = Json::array(), elems = Json::array();
  for (const auto& x : h.generators()) gens.push_back(x);
  for (auto i : h.elements()) elems.push_back(h.parent().elem(i));
  return Json{{"generators", gens}, {"elements", elems}};
}

inline IntMat matrix_from(const Json& j, const std::string& what) {
  const Json& m = j.is_array() ? j : field(j, "gram");
  IntMat out;
  for (const auto& row : m) {
    if (!row.is_array()) throw bad(what + " must be a list of rows");
    IntVec r;
    for (const auto& x : row) r.push_back(get_int(x, what + " entry"));
    out.push_back(r);
  }
  return out;
}

inline Json to_json(const Presentation& p, const AbGroup& parent) {
  Json sec = Json::array();
  for (auto s : p.section) sec.push_back(parent.elem(s));
  return Json{{"group", to_json(p.group)}, {"section", sec}};
}

// Cochains

inline Json to_json(const Cochain& c) {
  Json v = Json::array();
  for (std::size_t f = 0; f < c.size(); ++f) v.push_back(c.at(f).str());
  return Json{{"group", to_json(c.group())}, {"arity", c.arity()}, {"values", v}};
}

inline Json to_json(const AbelianCocycle& c) { return Json{{"sigma", to_json(c.sigma)}, {"omega", to_json(c.omega)}}; }

inline Cochain cochain_from(const Json& j) {
  AbGroup g = group_from(field(j, "group"));
  int arity = static_cast<int>(get_int(field(j, "arity"), "arity"));
  const Json& v = field(j, "values");
  std::size_t expect = 1;
  for (int i = 0; i < arity; ++i) expect *= static_cast<std::size_t>(g.order());
  if (v.size() != expect) throw bad("cochain has " + std::to_string(v.size()) + " values, expected " + std::to_string(expect));
  auto t = tables_for(g);
  return Cochain::build(t, arity, [&](const std::int64_t* i) {
    std::size_t f = 0;
    for (int k = 0; k < arity; ++k) f = f * static_cast<std::size_t>(g.order()) + static_cast<std::size_t>(i[k]);
    return phase_from(v[f]);
  });
}

// Reports

inline Json to_json(const Report& r) {
  Json v = Json::array();
  for (const auto& x : r.violations) {
    Json e{{"check", x.check}, {"index", x.index}};
    if (!x.detail.empty()) e["detail"] = x.detail;
    v.push_back(e);
  }
  return Json{{"name", r.name}, {"ok", r.ok()}, {"visited", r.visited}, {"total", r.total}, {"complete", r.complete}, {"violations", v}};
}

// Crossed categories

namespace detail {

inline std::tuple<int, int, int> unkey3(std::uint64_t k) {
  return {static_cast<int>((k >> 20) & 1023), static_cast<int>((k >> 10) & 1023), static_cast<int>(k & 1023)};
}

template <class Table>
std::vector<std::uint64_t> sorted_keys(const Table& t) {
  std::vector<std::uint64_t> keys;
  for (const auto& kv : t) keys.push_back(kv.first);
  std::sort(keys.begin(), keys.end());
  return keys;
}

}  // namespace detail

inline Json to_json(const CrossedCat& c) {
  Json j;
  j["kind"] = c.kind;
  j["group"] = to_json(c.group);
  j["labels"] = c.labels;
  j["grade"] = c.grade;
  j["act"] = c.act;
  Json t2 = Json::array(), theta = Json::array();
  for (const auto& x : c.t2) t2.push_back(to_json(x));
  for (const auto& x : c.theta) theta.push_back(x.str());
  j["t2"] = t2;
  j["theta"] = theta;
  j["epsilon_sign"] = c.epsilon_sign;
  j["alpha"] = to_json(c.alpha);
  j["beta"] = to_json(c.beta);
  Json fusion = Json::array();
  for (int x = 0; x < c.size(); ++x)
    for (int y = 0; y < c.size(); ++y)
      if (!c.fusion(x, y).empty()) fusion.push_back(Json{x, y, c.fusion(x, y)});
  j["fusion"] = fusion;
  Json f = Json::array(), r = Json::array(), tau = Json::array();
  for (auto k : detail::sorted_keys(c.f_table())) {
    auto [a, b, cc] = detail::unkey3(k >> 30);
    auto [d, e, ff] = detail::unkey3(k & ((std::uint64_t{1} << 30) - 1));
    f.push_back(Json{a, b, cc, d, e, ff, to_json(c.f_table().at(k))});
  }
  for (auto k : detail::sorted_keys(c.r_table())) {
    auto [x, y, z] = detail::unkey3(k);
    r.push_back(Json{x, y, z, to_json(c.r_table().at(k))});
  }
  for (auto k : detail::sorted_keys(c.tau_table())) {
    auto [x, y, z] = detail::unkey3(k);
    tau.push_back(Json{x, y, z, to_json(c.tau_table().at(k))});
  }
  j["F"] = f;
  j["R"] = r;
  j["tau"] = tau;
  return j;
}

inline CrossedCat crossed_from(const Json& j) {
  try {
    AbGroup g = group_from(field(j, "group"));
    auto labels = field(j, "labels").get<std::vector<std::string>>();
    auto grade = field(j, "grade").get<std::vector<int>>();
    if (labels.size() != grade.size()) throw bad("labels and grade differ in length");
    const auto s = static_cast<int>(labels.size());
    if (s < g.order()) throw bad("fewer labels than untwisted simples");
    std::vector<std::string> twisted(labels.begin() + g.order(), labels.end());
    CrossedCat c(j.value("kind", std::string("custom")), g, twisted);
    for (int x = 0; x < s; ++x) {
      if (grade[static_cast<std::size_t>(x)] != (x < g.order() ? 0 : 1)) throw bad("untwisted simples must come first");
      c.labels[static_cast<std::size_t>(x)] = labels[static_cast<std::size_t>(x)];
    }
    auto check = [&](int x) {
      if (x < 0 || x >= s) throw bad("simple index " + std::to_string(x) + " out of range");
      return x;
    };
    if (j.contains("act")) {
      auto act = j.at("act").get<std::vector<int>>();
      if (static_cast<int>(act.size()) != s) throw bad("act has the wrong length");
      for (int x = 0; x < s; ++x) c.act[static_cast<std::size_t>(x)] = check(act[static_cast<std::size_t>(x)]);
    }
    if (j.contains("t2")) {
      if (static_cast<int>(j.at("t2").size()) != s) throw bad("t2 has the wrong length");
      for (int x = 0; x < s; ++x) c.t2[static_cast<std::size_t>(x)] = scaled_from(j.at("t2")[static_cast<std::size_t>(x)]);
    }
    if (j.contains("theta")) {
      if (static_cast<int>(j.at("theta").size()) != s) throw bad("theta has the wrong length");
      for (int x = 0; x < s; ++x) c.theta[static_cast<std::size_t>(x)] = phase_from(j.at("theta")[static_cast<std::size_t>(x)]);
    }
    c.epsilon_sign = static_cast<int>(j.value("epsilon_sign", 1));
    if (j.contains("alpha")) c.alpha = scaled_from(j.at("alpha"));
    if (j.contains("beta")) c.beta = scaled_from(j.at("beta"));
    for (const auto& e : field(j, "fusion")) {
      std::vector<int> zs;
      for (const auto& z : e.at(2)) zs.push_back(check(z.get<int>()));
      c.set_fusion(check(e.at(0).get<int>()), check(e.at(1).get<int>()), zs);
    }
    for (const auto& e : field(j, "F")) {
      if (e.size() != 7) throw bad("associator entries have 7 fields");
      c.set_f(check(e[0].get<int>()), check(e[1].get<int>()), check(e[2].get<int>()), check(e[3].get<int>()), check(e[4].get<int>()), check(e[5].get<int>()), scaled_from(e[6]));
    }
    for (const auto& e : field(j, "R")) {
      if (e.size() != 4) throw bad("braiding entries have 4 fields");
      c.set_r(check(e[0].get<int>()), check(e[1].get<int>()), check(e[2].get<int>()), scaled_from(e[3]));
    }
    for (const auto& e : field(j, "tau")) {
      if (e.size() != 4) throw bad("tensor structure entries have 4 fields");
      c.set_tau(check(e[0].get<int>()), check(e[1].get<int>()), check(e[2].get<int>()), scaled_from(e[3]));
    }
    c.finalize();
    return c;
  } catch (const nlohmann::json::exception& e) {
    throw bad(std::string("malformed category: ") + e.what());
  }
}

// Equivariantisation

inline Json to_json(const Fingerprint& f) {
  Json fs = Json::array(), spec = Json::array();
  for (const auto& p : f.frobenius_schur) fs.push_back(p.str());
  for (const auto& [d, t] : f.spectrum) spec.push_back(Json{{"dim", to_json(d)}, {"twist", t.str()}});
  return Json{{"frobenius_schur", fs}, {"spectrum", spec}};
}

inline Json to_json(const EquivariantCat& e, const EqModularData& md) {
  Json simples = Json::array();
  for (int i = 0; i < e.size(); ++i) {
    const auto& s = e.simples[static_cast<std::size_t>(i)];
    Json st = Json::array();
    for (const auto& p : s.structure) st.push_back(p.str());
    simples.push_back(Json{{"label", s.label}, {"components", s.components}, {"structure", st}, {"sign", s.sign},
                           {"dim", to_json(e.dims[static_cast<std::size_t>(i)])}, {"twist", e.theta[static_cast<std::size_t>(i)].str()},
                           {"dual", e.dual[static_cast<std::size_t>(i)]}});
  }
  Json s = Json::array();
  for (const auto& row : md.s_tilde) {
    Json r = Json::array();
    for (const auto& x : row) r.push_back(to_json(x));
    s.push_back(r);
  }
  Json t = Json::array();
  for (const auto& p : md.t) t.push_back(p.str());
  return Json{{"simples", simples},
              {"fusion", e.fusion},
              {"T", t},
              {"S_tilde", s},
              {"global_dim_sq", to_json(md.global_dim_sq)},
              {"symmetric", md.symmetric},
              {"invertibility", invertibility_name(md.invertibility)}};
}

}  // namespace zcross::io
