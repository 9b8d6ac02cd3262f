#pragma once

// Mutations (segment moves) between juggling patterns, corrections and
// symplectic mutations.

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sympat/error.hpp"
#include "sympat/pattern.hpp"

namespace sympat {

// Removes value + m from J_{vertex + m} and inserts value + shift + m, for
// m in [0, run_length).
struct Mutation {
  int vertex = 0;
  int value = 1;
  int run_length = 1;
  int shift = 1;

  bool operator==(const Mutation&) const = default;
  auto operator<=>(const Mutation&) const = default;

  std::string str() const {
    return "mutation(vertex " + std::to_string(vertex) + ", value " + std::to_string(value) +
           ", run " + std::to_string(run_length) + ", shift " + std::to_string(shift) + ")";
  }
};

// Result of applying `mu` to the larger pattern `upper`, or nullopt when `mu`
// is not a mutation out of `upper`.
inline std::optional<JugglingPattern> apply_mutation(const JugglingPattern& upper,
                                                     const Mutation& mu) {
  const int N = upper.period();
  if (mu.run_length < 1 || mu.shift < 1 || mu.value < 1) return std::nullopt;
  if (mu.value + mu.shift + mu.run_length - 1 > N || mu.run_length >= N) return std::nullopt;
  std::vector<IndexSet> sets = upper.sets();
  for (int m = 0; m < mu.run_length; ++m) {
    const int v = mod(mu.vertex + m, N);
    const int removed = mu.value + m;
    const int inserted = mu.value + mu.shift + m;
    if (!sets[v].contains(removed) || sets[v].contains(inserted)) return std::nullopt;
    sets[v] = sets[v].without(removed).with(inserted);
  }
  const int closing = mu.value + mu.shift + mu.run_length;
  if (closing != N + 1) {
    const int v = mod(mu.vertex + mu.run_length, N);
    if (!upper.at(v).contains(closing) || !sets[v].contains(closing)) return std::nullopt;
  }
  if (JugglingPattern::violation(upper.n(), sets)) return std::nullopt;
  return JugglingPattern::unchecked(upper.n(), std::move(sets));
}

// Every mutation out of `upper` with its result, ordered by
// (vertex, value, run_length, shift).
inline std::vector<std::pair<Mutation, JugglingPattern>> mutations_from(
    const JugglingPattern& upper) {
  std::vector<std::pair<Mutation, JugglingPattern>> out;
  const int N = upper.period();
  for (int a = 0; a < N; ++a)
    for (int x : upper.at(a).elements())
      for (int len = 1; x + len <= N && len < N; ++len)
        for (int s = 1; x + s + len - 1 <= N; ++s)
          if (auto lower = apply_mutation(upper, {a, x, len, s}))
            out.emplace_back(Mutation{a, x, len, s}, std::move(*lower));
  return out;
}

// The mutation taking `upper` to `lower` when their difference is a single
// run; nullopt for equal, incomparable or multi-run pairs.
inline std::optional<Mutation> single_mutation_between(const JugglingPattern& upper,
                                                       const JugglingPattern& lower) {
  if (upper.n() != lower.n()) throw InvalidInput("single_mutation_between: rank mismatch");
  if (upper == lower || !pattern_leq(lower, upper)) return std::nullopt;
  const int N = upper.period();
  std::vector<bool> affected(N, false);
  int count = 0;
  for (int v = 0; v < N; ++v) {
    const auto removed = upper.at(v).mask() & ~lower.at(v).mask();
    const auto added = lower.at(v).mask() & ~upper.at(v).mask();
    if (removed == 0) continue;
    if (std::popcount(removed) != 1 || std::popcount(added) != 1) return std::nullopt;
    affected[v] = true;
    ++count;
  }
  if (count == 0 || count == N) return std::nullopt;
  int start = -1;
  for (int v = 0; v < N; ++v)
    if (affected[v] && !affected[mod(v - 1, N)]) {
      if (start != -1) return std::nullopt;  // more than one cyclic interval
      start = v;
    }
  const int x = std::countr_zero(upper.at(start).mask() & ~lower.at(start).mask()) + 1;
  const int y = std::countr_zero(lower.at(start).mask() & ~upper.at(start).mask()) + 1;
  Mutation mu{start, x, count, y - x};
  auto result = apply_mutation(upper, mu);
  if (!result || *result != lower) return std::nullopt;
  return mu;
}

// The tau-mirror of `mu`: opposite vertices, tilde-paired values, equal shift.
inline Mutation mirror_mutation(const Mutation& mu, int n) {
  const int N = 2 * n;
  return {mod(-(mu.vertex + mu.run_length - 1), N),
          N + 2 - mu.value - mu.shift - mu.run_length, mu.run_length, mu.shift};
}

// Correction of `mu`, which must have produced the non-symplectic
// `intermediate` out of a symplectic pattern.
inline Mutation correction_of(const Mutation& mu, const JugglingPattern& intermediate) {
  if (is_symplectic(intermediate))
    throw InvalidInput("correction_of: intermediate pattern is already symplectic");
  const Mutation corr = mirror_mutation(mu, intermediate.n());
  auto result = apply_mutation(intermediate, corr);
  if (!result || !is_symplectic(*result))
    throw InvalidInput("correction_of: " + mu.str() + " has no correction on " +
                       intermediate.str());
  return corr;
}

struct SymplecticMutation {
  enum class Kind { Single, CorrectionPair };
  Kind kind = Kind::Single;
  Mutation first;
  std::optional<Mutation> second;  // the correction, for CorrectionPair
  JugglingPattern upper;
  JugglingPattern lower;

  std::vector<Mutation> runs() const {
    std::vector<Mutation> r{first};
    if (second) r.push_back(*second);
    return r;
  }
};

// Symplectic lower patterns reachable from symplectic `upper` by one
// symplectic mutation, each with a witness. A single mutation is preferred
// over a correction pair when both exist.
inline std::vector<SymplecticMutation> down_mutations(const JugglingPattern& upper) {
  if (!is_symplectic(upper))
    throw InvalidInput("down_mutations: " + upper.str() + " is not symplectic");
  std::map<JugglingPattern, SymplecticMutation> found;
  std::vector<JugglingPattern> order;
  for (auto& [mu, mid] : mutations_from(upper)) {
    if (is_symplectic(mid)) {
      SymplecticMutation sm{SymplecticMutation::Kind::Single, mu, std::nullopt, upper, mid};
      auto [it, inserted] = found.emplace(mid, sm);
      if (inserted)
        order.push_back(mid);
      else if (it->second.kind != SymplecticMutation::Kind::Single)
        it->second = sm;
      continue;
    }
    const Mutation corr = mirror_mutation(mu, upper.n());
    auto lower = apply_mutation(mid, corr);
    if (!lower || !is_symplectic(*lower)) continue;
    SymplecticMutation sm{SymplecticMutation::Kind::CorrectionPair, mu, corr, upper, *lower};
    if (found.emplace(*lower, sm).second) order.push_back(*lower);
  }
  std::vector<SymplecticMutation> out;
  out.reserve(order.size());
  for (const auto& p : order) out.push_back(found.at(p));
  return out;
}

inline std::optional<SymplecticMutation> symplectic_mutation_between(
    const JugglingPattern& upper, const JugglingPattern& lower) {
  if (!is_symplectic(upper) || !is_symplectic(lower))
    throw InvalidInput("symplectic_mutation_between: both patterns must be symplectic");
  if (upper == lower || !pattern_leq(lower, upper)) return std::nullopt;
  if (auto mu = single_mutation_between(upper, lower))
    return SymplecticMutation{SymplecticMutation::Kind::Single, *mu, std::nullopt, upper, lower};
  for (auto& [mu, mid] : mutations_from(upper)) {
    if (is_symplectic(mid)) continue;
    const Mutation corr = mirror_mutation(mu, upper.n());
    auto result = apply_mutation(mid, corr);
    if (result && *result == lower)
      return SymplecticMutation{SymplecticMutation::Kind::CorrectionPair, mu, corr, upper, lower};
  }
  return std::nullopt;
}

// Down-neighbors of J paired with their witnesses.
inline std::vector<std::pair<SymplecticMutation, JugglingPattern>> down_neighbors(
    const JugglingPattern& J) {
  std::vector<std::pair<SymplecticMutation, JugglingPattern>> out;
  for (auto& sm : down_mutations(J)) {
    JugglingPattern lower = sm.lower;
    out.emplace_back(std::move(sm), std::move(lower));
  }
  return out;
}

}  // namespace sympat
