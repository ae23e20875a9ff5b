#pragma once

#include "jzero/feature_structure.hpp"
#include "jzero/token_env.hpp"

namespace jzero {

struct Unified {
  FeatureStructure fs;
  TokenEnv env;
};

// Persistent unification: neither input nor env is modified.
//
//   complex/complex  feature-wise, union of features
//   token/token      identity added to the env; the left token is kept
//   token/atom       the token's class is pinned to the atom; the atom is kept
//   atom/atom        equal symbols only
//   empty complex    unit element, unifies with anything
//
// Throws UnifyFailure carrying the feature path of the clash.
Unified unify(const FeatureStructure& a, const FeatureStructure& b, const TokenEnv& env);

}  // namespace jzero
