#pragma once

#include <set>
#include <string>
#include <utility>
#include <vector>

#include "jzero/constraints.hpp"
#include "jzero/feature_structure.hpp"
#include "jzero/token_env.hpp"

namespace jzero {

// One consistent assignment of entities to the tokens of an analysis.
struct Interpretation {
  // Every present token of the structure, in token-id order.
  std::vector<std::pair<Token, std::string>> bindings;
  std::vector<std::string> rules;
  std::size_t alternative = 0;

  // nullptr when the token is not bound.
  const std::string* value_of(TokenId id) const;

  friend bool operator==(const Interpretation& a, const Interpretation& b);
};

// Enumerates, for each delta in order, every assignment of `candidates` to
// the unpinned identity classes that respects all distinct pairs. Classes
// pinned to an atom take the atom's symbol. Tokens listed as absent by a
// delta are not reported; they still have to admit some value.
//
// Output is ordered by (alternative, candidate indices in token-id order) and
// free of duplicate bindings; the first alternative producing a binding keeps
// it. An empty delta list counts as one empty delta.
std::vector<Interpretation> enumerate_interpretations(const FeatureStructure& fs,
                                                      const TokenEnv& env,
                                                      const std::vector<EnvDelta>& deltas,
                                                      const std::vector<std::string>& candidates);

// Same contract, computed without the union-find: constants are propagated
// naively over the recorded facts, the full assignment space is generated,
// and every fact is re-checked on every assignment.
std::vector<Interpretation> brute_force_oracle(const FeatureStructure& fs, const TokenEnv& env,
                                               const std::vector<EnvDelta>& deltas,
                                               const std::vector<std::string>& candidates);

// Bindings plus alternative index, for set comparison.
using InterpretationKey = std::pair<std::size_t, std::vector<std::pair<TokenId, std::string>>>;
std::set<InterpretationKey> as_set(const std::vector<Interpretation>& interpretations);

}  // namespace jzero
