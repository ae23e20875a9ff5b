#pragma once

// Random small feature structures, envs and constraint sets shared by the
// property tests and the acceptance harness.

#include <optional>
#include <random>
#include <string>
#include <vector>

#include "jzero/constraints.hpp"
#include "jzero/errors.hpp"
#include "jzero/feature_structure.hpp"
#include "jzero/token_env.hpp"
#include "jzero/unify.hpp"

namespace jzero::testing {

// Tokens drawn from a small shared pool so that structures share variables.
inline Token pool_token(TokenId id) { return Token{id, "v" + std::to_string(id)}; }

class FsGenerator {
 public:
  explicit FsGenerator(std::uint32_t seed, TokenId pool = 4) : rng_(seed), pool_(pool) {}

  FeatureStructure structure(int depth = 2) { return complex(depth); }

  // A random env over the token pool; facts that would be inconsistent are
  // skipped, so the result is always consistent.
  TokenEnv env(int facts = 3) {
    TokenEnv out;
    for (int i = 0; i < facts; ++i) {
      Term a = term();
      Term b = term();
      try {
        out = coin() ? out.add_identity(a, b) : out.add_distinct(a, b);
      } catch (const Inconsistent&) {
      }
    }
    return out;
  }

  Term term() {
    if (pick(4) == 0) return Atom{atom_symbol()};
    return pool_token(static_cast<TokenId>(pick(pool_)));
  }

  std::mt19937& rng() { return rng_; }
  std::size_t pick(std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng_); }
  bool coin() { return pick(2) == 0; }

 private:
  std::string atom_symbol() { return std::string(1, static_cast<char>('p' + pick(3))); }

  FeatureStructure leaf() {
    switch (pick(3)) {
      case 0:
        return FeatureStructure::atom(atom_symbol());
      default:
        return FeatureStructure::token(pool_token(static_cast<TokenId>(pick(pool_))));
    }
  }

  FeatureStructure complex(int depth) {
    static const char* kNames[] = {"f", "g", "h"};
    FeatureStructure::Features f;
    for (const char* name : kNames) {
      std::size_t roll = pick(4);
      if (roll == 0) continue;
      if (roll == 1 && depth > 0) {
        f.emplace(name, complex(depth - 1));
      } else {
        f.emplace(name, leaf());
      }
    }
    return FeatureStructure::complex(std::move(f));
  }

  std::mt19937 rng_;
  TokenId pool_;
};

// Canonical text of a unification result: tags per identity class,
// numbered by first occurrence, so results equal up to token renaming print
// identically.
inline std::string canonical(const FeatureStructure& fs, const TokenEnv& env) {
  return render(fs, env, RenderOptions{false});
}

struct PropertyReport {
  int instances = 0;
  std::vector<std::string> violations;
};

// Unit law, commutativity and associativity up to token renaming, failure
// monotonicity, and env consistency after every unification.
inline PropertyReport check_unify_properties(std::uint32_t seed, int instances) {
  PropertyReport report;
  FsGenerator gen(seed);
  auto attempt = [](const FeatureStructure& x, const FeatureStructure& y,
                    const TokenEnv& e) -> std::optional<Unified> {
    try {
      return unify(x, y, e);
    } catch (const UnifyFailure&) {
      return std::nullopt;
    }
  };
  auto fail = [&](int i, const std::string& what) {
    report.violations.push_back("instance " + std::to_string(i) + ": " + what);
  };
  for (int i = 0; i < instances; ++i, ++report.instances) {
    TokenEnv env = gen.env();
    FeatureStructure a = gen.structure();
    FeatureStructure b = gen.structure();
    FeatureStructure c = gen.structure();
    if (!env.consistent()) fail(i, "generated env inconsistent");

    for (const auto& r : {attempt(a, FeatureStructure{}, env), attempt(FeatureStructure{}, a, env)}) {
      if (!r || canonical(r->fs, r->env) != canonical(a, env)) fail(i, "unit law");
    }

    auto ab = attempt(a, b, env);
    auto ba = attempt(b, a, env);
    if (ab.has_value() != ba.has_value() ||
        (ab && canonical(ab->fs, ab->env) != canonical(ba->fs, ba->env))) {
      fail(i, "commutativity");
    }

    std::optional<Unified> left;
    if (ab) left = attempt(ab->fs, c, ab->env);
    std::optional<Unified> right;
    if (auto bc = attempt(b, c, env)) right = attempt(a, bc->fs, bc->env);
    if (left.has_value() != right.has_value() ||
        (left && canonical(left->fs, left->env) != canonical(right->fs, right->env))) {
      fail(i, "associativity");
    }

    if (!ab) {
      if (auto ac = attempt(a, c, env); ac && attempt(ac->fs, b, ac->env)) {
        fail(i, "failure monotonicity");
      }
    }

    for (const auto* r : {&ab, &ba, &left, &right}) {
      if (*r && !(*r)->env.consistent()) fail(i, "inconsistent env after unification");
    }
  }
  return report;
}

struct OracleInstance {
  FeatureStructure fs;
  TokenEnv env;
  std::vector<EnvDelta> deltas;
  std::vector<std::string> candidates;
};

// At most four tokens and three candidate entities. Constants may fall
// outside the candidate list.
inline OracleInstance random_oracle_instance(std::uint32_t seed) {
  std::mt19937 rng(seed);
  auto pick = [&](std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng); };
  static const std::vector<std::string> kEntities = {"A", "B", "C"};
  static const std::vector<std::string> kRoles = {"agent", "experiencer", "observer", "patient"};

  OracleInstance inst;
  std::size_t n_tokens = 1 + pick(4);
  std::vector<Token> toks;
  for (std::size_t i = 0; i < n_tokens; ++i) toks.push_back(Token{static_cast<TokenId>(i), "r"});
  FeatureStructure::Features f;
  f.emplace("rel", FeatureStructure::atom("p"));
  for (std::size_t i = 0; i < n_tokens; ++i) f.emplace(kRoles[i], FeatureStructure::token(toks[i]));
  inst.fs = FeatureStructure::complex(std::move(f));
  inst.candidates.assign(kEntities.begin(), kEntities.begin() + static_cast<long>(pick(4)));

  auto term = [&]() -> Term {
    if (pick(5) == 0) return Atom{pick(2) == 0 ? kEntities[pick(3)] : std::string("Z")};
    return toks[pick(n_tokens)];
  };
  for (std::size_t i = pick(4); i > 0; --i) {
    try {
      inst.env = pick(2) == 0 ? inst.env.add_identity(term(), term()) : inst.env.add_distinct(term(), term());
    } catch (const Inconsistent&) {
    }
  }
  for (std::size_t d = 1 + pick(3); d > 0; --d) {
    EnvDelta delta;
    delta.alternative = inst.deltas.size();
    delta.rules = {"R"};
    for (std::size_t r = pick(3); r > 0; --r) {
      auto kind = pick(3) == 0 ? TokenEnv::Fact::Kind::distinct : TokenEnv::Fact::Kind::identity;
      delta.requirements.push_back({kind, term(), term()});
    }
    if (pick(4) == 0) delta.absent.push_back(toks[pick(n_tokens)]);
    inst.deltas.push_back(std::move(delta));
  }
  return inst;
}

}  // namespace jzero::testing
