#pragma once

// JSON readers and writers for patterns, permutations, words, mutations,
// moment graphs and basis tables.

#include <string>
#include <vector>

#include "json.hpp"
#include "sympat/affine_perm.hpp"
#include "sympat/coxeter_c.hpp"
#include "sympat/error.hpp"
#include "sympat/gkm.hpp"
#include "sympat/moment_graph.hpp"
#include "sympat/mutations.hpp"
#include "sympat/pattern.hpp"

namespace sympat::io {

using Json = nlohmann::json;

namespace detail {

inline const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) throw InvalidInput("expected a JSON object");
  auto it = j.find(key);
  if (it == j.end()) throw InvalidInput(std::string("missing field \"") + key + "\"");
  return *it;
}

template <class T>
T get(const Json& j, const char* key) {
  try {
    return field(j, key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput(std::string("field \"") + key + "\": " + e.what());
  }
}

}  // namespace detail

inline Json parse(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InvalidInput(std::string("malformed JSON: ") + e.what());
  }
}

inline Json pattern_to_json(const JugglingPattern& J) {
  Json sets = Json::array();
  for (const auto& s : J.sets()) sets.push_back(s.elements());
  return {{"n", J.n()}, {"sets", sets}};
}

inline JugglingPattern pattern_from_json(const Json& j) {
  const int n = detail::get<int>(j, "n");
  if (n < 1 || n > kHardMaxN) throw InvalidInput("n out of range");
  auto sets = detail::get<std::vector<std::vector<int>>>(j, "sets");
  if (static_cast<int>(sets.size()) != 2 * n)
    throw InvalidInput("expected " + std::to_string(2 * n) + " sets, got " + std::to_string(sets.size()));
  for (std::size_t v = 0; v < sets.size(); ++v) {
    try {
      IndexSet check(n, sets[v]);
      (void)check;
    } catch (const InvalidInput& e) {
      throw InvalidInput("vertex " + std::to_string(v) + ": " + e.what());
    }
  }
  return JugglingPattern(n, sets);
}

inline Json perm_to_json(const AffinePermutation& f) {
  return {{"n", f.n()}, {"k", f.k()}, {"window", f.window()}};
}

inline AffinePermutation perm_from_json(const Json& j) {
  const int n = detail::get<int>(j, "n");
  if (n < 1 || n > kHardMaxN) throw InvalidInput("n out of range");
  AffinePermutation f(n, detail::get<std::vector<long>>(j, "window"));
  if (j.contains("k") && detail::get<int>(j, "k") != f.k())
    throw InvalidInput("declared k = " + std::to_string(detail::get<int>(j, "k")) +
                       " but the window has k = " + std::to_string(f.k()));
  return f;
}

inline Json word_to_json(const TypeCWord& w) { return {{"n", w.n}, {"letters", w.letters}}; }

inline TypeCWord word_from_json(const Json& j) {
  TypeCWord w{detail::get<int>(j, "n"), detail::get<std::vector<int>>(j, "letters")};
  for (int l : w.letters)
    if (l < -1 || l > w.n - 1) throw InvalidInput("letter " + std::to_string(l) + " out of range");
  return w;
}

inline Json mutation_to_json(const Mutation& m) {
  return {{"vertex", m.vertex}, {"value", m.value}, {"run_length", m.run_length}, {"shift", m.shift}};
}

inline Mutation mutation_from_json(const Json& j) {
  return {detail::get<int>(j, "vertex"), detail::get<int>(j, "value"),
          detail::get<int>(j, "run_length"), detail::get<int>(j, "shift")};
}

inline Json symplectic_mutation_to_json(const SymplecticMutation& sm) {
  Json runs = Json::array();
  for (const auto& r : sm.runs()) runs.push_back(mutation_to_json(r));
  return {{"kind", sm.kind == SymplecticMutation::Kind::Single ? "single" : "correction_pair"},
          {"runs", runs},
          {"upper", pattern_to_json(sm.upper)},
          {"lower", pattern_to_json(sm.lower)}};
}

inline Json character_to_json(const Character& c) { return {{"z", c.z}, {"gamma", c.gamma}}; }

inline Character character_from_json(const Json& j, int n) {
  return Character(n, detail::get<long>(j, "z"), detail::get<std::vector<long>>(j, "gamma"));
}

inline Json graph_to_json(const MomentGraph& G) {
  Json vs = Json::array(), es = Json::array();
  for (const auto& v : G.vertices())
    vs.push_back({{"id", v.id}, {"pattern", pattern_to_json(v.pattern)}, {"dim", v.dim}});
  for (const auto& e : G.edges())
    es.push_back({{"lo", e.lo}, {"hi", e.hi}, {"char", character_to_json(e.character)}});
  return {{"n", G.n()}, {"vertices", vs}, {"edges", es}};
}

inline MomentGraph graph_from_json(const Json& j) {
  const int n = detail::get<int>(j, "n");
  std::vector<GraphVertex> vs;
  for (const auto& v : detail::field(j, "vertices"))
    vs.push_back({detail::get<int>(v, "id"), pattern_from_json(detail::field(v, "pattern")),
                  detail::get<int>(v, "dim")});
  std::vector<GraphEdge> es;
  for (const auto& e : detail::field(j, "edges"))
    es.push_back({detail::get<int>(e, "lo"), detail::get<int>(e, "hi"),
                  character_from_json(detail::field(e, "char"), n), std::nullopt});
  return MomentGraph(n, std::move(vs), std::move(es));
}

inline Json poly_to_json(const MultiPoly& p) {
  Json terms = Json::array();
  for (const auto& [m, c] : p.terms()) terms.push_back(Json::array({m, c.str()}));
  return terms;
}

inline MultiPoly poly_from_json(const Json& j, int n) {
  if (!j.is_array()) throw InvalidInput("polynomial must be an array of [exponents, coefficient]");
  MultiPoly p(n);
  for (const auto& t : j) {
    if (!t.is_array() || t.size() != 2 || !t[1].is_string())
      throw InvalidInput("polynomial term must be [exponents, \"coefficient\"]");
    Monomial m;
    try {
      m = t[0].get<Monomial>();
    } catch (const nlohmann::json::exception& e) {
      throw InvalidInput(std::string("bad exponent vector: ") + e.what());
    }
    p.add_term(m, parse_rational(t[1].get<std::string>()));
  }
  return p;
}

inline Json basis_to_json(const BasisTable& t) {
  Json classes = Json::array();
  for (const auto& c : t.classes) {
    Json comps = Json::object();
    for (const auto& [v, p] : c.components) comps[std::to_string(v)] = poly_to_json(p);
    classes.push_back({{"vertex", c.vertex}, {"degree", c.degree}, {"components", comps}});
  }
  return {{"n", t.n}, {"classes", classes}};
}

inline BasisTable basis_from_json(const Json& j) {
  BasisTable t{detail::get<int>(j, "n"), {}};
  for (const auto& c : detail::field(j, "classes")) {
    GKMClass cls{t.n, detail::get<int>(c, "vertex"), detail::get<int>(c, "degree"), {}};
    const Json& comps = detail::field(c, "components");
    if (!comps.is_object()) throw InvalidInput("components must be an object keyed by vertex id");
    for (const auto& [key, val] : comps.items()) {
      int v;
      try {
        v = std::stoi(key);
      } catch (const std::exception&) {
        throw InvalidInput("component key \"" + key + "\" is not a vertex id");
      }
      cls.components[v] = poly_from_json(val, t.n);
    }
    t.classes.push_back(std::move(cls));
  }
  return t;
}

}  // namespace sympat::io
