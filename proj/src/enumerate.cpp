#include "jzero/enumerate.hpp"

#include <algorithm>
#include <map>
#include <optional>

#include "jzero/errors.hpp"

namespace jzero {

const std::string* Interpretation::value_of(TokenId id) const {
  for (const auto& [tok, value] : bindings) {
    if (tok.id == id) return &value;
  }
  return nullptr;
}

bool operator==(const Interpretation& a, const Interpretation& b) {
  if (a.alternative != b.alternative || a.rules != b.rules) return false;
  if (a.bindings.size() != b.bindings.size()) return false;
  for (std::size_t i = 0; i < a.bindings.size(); ++i) {
    if (a.bindings[i].first.id != b.bindings[i].first.id ||
        a.bindings[i].second != b.bindings[i].second) {
      return false;
    }
  }
  return true;
}

std::set<InterpretationKey> as_set(const std::vector<Interpretation>& interpretations) {
  std::set<InterpretationKey> out;
  for (const auto& i : interpretations) {
    std::vector<std::pair<TokenId, std::string>> b;
    for (const auto& [tok, value] : i.bindings) b.emplace_back(tok.id, value);
    out.emplace(i.alternative, std::move(b));
  }
  return out;
}

namespace {

const EnvDelta kEmptyDelta{};

// Every token the analysis talks about: the structure's own tokens, then any
// token that only occurs in facts or requirements.
std::vector<Token> universe(const FeatureStructure& fs, const std::vector<TokenEnv::Fact>& facts,
                            const EnvDelta& delta) {
  std::vector<Token> out = fs.tokens();
  std::set<TokenId> seen;
  for (const auto& t : out) seen.insert(t.id);
  auto add = [&](const Term& term) {
    if (const auto* t = std::get_if<Token>(&term); t && seen.insert(t->id).second) {
      out.push_back(*t);
    }
  };
  for (const auto& f : facts) {
    add(f.lhs);
    add(f.rhs);
  }
  for (const auto& r : delta.requirements) {
    add(r.lhs);
    add(r.rhs);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Token> present_tokens(const FeatureStructure& fs, const EnvDelta& delta) {
  std::vector<Token> out;
  for (const auto& t : fs.tokens()) {
    if (std::find(delta.absent.begin(), delta.absent.end(), t) == delta.absent.end()) {
      out.push_back(t);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Rank of a value for ordering: its candidate index, or past the end for
// constants outside the candidate list.
std::size_t rank(const std::vector<std::string>& candidates, const std::string& value) {
  auto it = std::find(candidates.begin(), candidates.end(), value);
  return static_cast<std::size_t>(it - candidates.begin());
}

// Orders by (alternative, candidate ranks) and drops repeated bindings.
std::vector<Interpretation> finish(std::vector<Interpretation> found,
                                   const std::vector<std::string>& candidates) {
  auto key = [&](const Interpretation& i) {
    std::vector<std::pair<std::size_t, std::string>> k;
    for (const auto& [_, value] : i.bindings) k.emplace_back(rank(candidates, value), value);
    return k;
  };
  std::stable_sort(found.begin(), found.end(), [&](const Interpretation& a, const Interpretation& b) {
    if (a.alternative != b.alternative) return a.alternative < b.alternative;
    return key(a) < key(b);
  });
  std::vector<Interpretation> out;
  std::set<std::vector<std::pair<TokenId, std::string>>> seen;
  for (auto& i : found) {
    std::vector<std::pair<TokenId, std::string>> b;
    for (const auto& [tok, value] : i.bindings) b.emplace_back(tok.id, value);
    if (seen.insert(std::move(b)).second) out.push_back(std::move(i));
  }
  return out;
}

class ClassSearch {
 public:
  ClassSearch(const TokenEnv& env, const std::vector<Token>& all, const std::vector<Token>& present,
              const std::vector<std::string>& candidates)
      : env_(env), present_(present), candidates_(candidates) {
    // Classes in order of their smallest token.
    for (const auto& t : all) {
      Term rep = env.representative(t);
      if (index_.contains(rep)) continue;
      index_.emplace(rep, classes_.size());
      Class c{rep, std::nullopt};
      if (auto a = env.constant_of(t)) c.fixed = a->symbol;
      classes_.push_back(std::move(c));
    }
    for (const auto& [a, b] : env.distinct_pairs()) {
      auto ia = class_of(a);
      auto ib = class_of(b);
      if (ia && ib) {
        pairs_.emplace_back(*ia, *ib);
      } else if (ia || ib) {
        // A class against a constant that no token shares.
        const Term& other = ia ? b : a;
        if (const auto* atom = std::get_if<Atom>(&other)) {
          against_const_.emplace_back(ia ? *ia : *ib, atom->symbol);
        }
      }
    }
    values_.resize(classes_.size());
  }

  template <typename Emit>
  void run(Emit&& emit) {
    search(0, emit);
  }

 private:
  struct Class {
    Term rep;
    std::optional<std::string> fixed;
  };

  std::optional<std::size_t> class_of(const Term& t) const {
    auto it = index_.find(env_.representative(t));
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  bool ok_up_to(std::size_t k) const {
    for (const auto& [a, b] : pairs_) {
      if (a <= k && b <= k && values_[a] == values_[b]) return false;
    }
    for (const auto& [a, symbol] : against_const_) {
      if (a <= k && values_[a] == symbol) return false;
    }
    return true;
  }

  template <typename Emit>
  void search(std::size_t k, Emit& emit) {
    if (k == classes_.size()) {
      std::vector<std::pair<Token, std::string>> bindings;
      for (const auto& t : present_) bindings.emplace_back(t, values_[*class_of(t)]);
      emit(std::move(bindings));
      return;
    }
    if (classes_[k].fixed) {
      values_[k] = *classes_[k].fixed;
      if (ok_up_to(k)) search(k + 1, emit);
      return;
    }
    for (const auto& c : candidates_) {
      values_[k] = c;
      if (ok_up_to(k)) search(k + 1, emit);
    }
  }

  const TokenEnv& env_;
  const std::vector<Token>& present_;
  const std::vector<std::string>& candidates_;
  std::vector<Class> classes_;
  std::map<Term, std::size_t> index_;
  std::vector<std::pair<std::size_t, std::size_t>> pairs_;
  std::vector<std::pair<std::size_t, std::string>> against_const_;
  std::vector<std::string> values_;
};

}  // namespace

std::vector<Interpretation> enumerate_interpretations(const FeatureStructure& fs,
                                                      const TokenEnv& env,
                                                      const std::vector<EnvDelta>& deltas,
                                                      const std::vector<std::string>& candidates) {
  std::vector<Interpretation> found;
  const std::vector<EnvDelta> one{kEmptyDelta};
  for (const auto& delta : deltas.empty() ? one : deltas) {
    TokenEnv extended;
    try {
      extended = apply(delta, env);
    } catch (const Inconsistent&) {
      continue;
    }
    auto all = universe(fs, extended.facts(), delta);
    auto present = present_tokens(fs, delta);
    ClassSearch search(extended, all, present, candidates);
    search.run([&](std::vector<std::pair<Token, std::string>> bindings) {
      found.push_back(Interpretation{std::move(bindings), delta.rules, delta.alternative});
    });
  }
  return finish(std::move(found), candidates);
}

namespace {

using Value = std::optional<std::string>;

// The constant each token is forced to by identity facts, found by repeated
// passes until nothing changes. Returns nullopt when two constants collide.
std::optional<std::map<TokenId, std::string>> propagate_constants(
    const std::vector<std::pair<Term, Term>>& identities) {
  std::map<TokenId, std::string> pinned;
  auto value = [&](const Term& t) -> Value {
    if (const auto* a = std::get_if<Atom>(&t)) return a->symbol;
    auto it = pinned.find(std::get<Token>(t).id);
    if (it == pinned.end()) return std::nullopt;
    return it->second;
  };
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& [l, r] : identities) {
      Value vl = value(l);
      Value vr = value(r);
      if (vl && vr) {
        if (*vl != *vr) return std::nullopt;
        continue;
      }
      if (vl && std::holds_alternative<Token>(r)) {
        pinned[std::get<Token>(r).id] = *vl;
        changed = true;
      } else if (vr && std::holds_alternative<Token>(l)) {
        pinned[std::get<Token>(l).id] = *vr;
        changed = true;
      }
    }
  }
  return pinned;
}

}  // namespace

std::vector<Interpretation> brute_force_oracle(const FeatureStructure& fs, const TokenEnv& env,
                                               const std::vector<EnvDelta>& deltas,
                                               const std::vector<std::string>& candidates) {
  std::vector<Interpretation> found;
  const std::vector<EnvDelta> one{kEmptyDelta};
  for (const auto& delta : deltas.empty() ? one : deltas) {
    std::vector<std::pair<Term, Term>> identities;
    std::vector<std::pair<Term, Term>> distincts;
    for (const auto& f : env.facts()) {
      (f.kind == TokenEnv::Fact::Kind::identity ? identities : distincts).emplace_back(f.lhs, f.rhs);
    }
    for (const auto& r : delta.requirements) {
      (r.kind == TokenEnv::Fact::Kind::identity ? identities : distincts).emplace_back(r.lhs, r.rhs);
    }
    auto pinned = propagate_constants(identities);
    if (!pinned) continue;

    auto all = universe(fs, env.facts(), delta);
    auto present = present_tokens(fs, delta);
    std::vector<std::vector<std::string>> domains;
    for (const auto& t : all) {
      auto it = pinned->find(t.id);
      domains.push_back(it != pinned->end() ? std::vector<std::string>{it->second} : candidates);
    }
    if (std::any_of(domains.begin(), domains.end(), [](const auto& d) { return d.empty(); })) {
      continue;
    }

    std::map<TokenId, std::size_t> slot;
    for (std::size_t i = 0; i < all.size(); ++i) slot[all[i].id] = i;
    std::vector<std::size_t> odometer(all.size(), 0);
    auto value = [&](const Term& t) -> const std::string& {
      if (const auto* a = std::get_if<Atom>(&t)) return a->symbol;
      std::size_t i = slot.at(std::get<Token>(t).id);
      return domains[i][odometer[i]];
    };
    while (true) {
      bool ok = true;
      for (const auto& [l, r] : identities) ok = ok && value(l) == value(r);
      for (const auto& [l, r] : distincts) ok = ok && value(l) != value(r);
      if (ok) {
        std::vector<std::pair<Token, std::string>> bindings;
        for (const auto& t : present) bindings.emplace_back(t, value(t));
        found.push_back(Interpretation{std::move(bindings), delta.rules, delta.alternative});
      }
      std::size_t i = 0;
      while (i < all.size() && ++odometer[i] == domains[i].size()) odometer[i++] = 0;
      if (i == all.size()) break;
    }
  }
  return finish(std::move(found), candidates);
}

}  // namespace jzero
