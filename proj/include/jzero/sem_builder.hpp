#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "jzero/feature_structure.hpp"
#include "jzero/lexicon.hpp"
#include "jzero/morphology.hpp"
#include "jzero/segment.hpp"
#include "jzero/token.hpp"
#include "jzero/token_env.hpp"

namespace jzero {

struct DiscourseContext {
  std::string speaker = "speaker";
  std::optional<std::string> hearer;
  std::optional<std::string> topic;
  // Candidate antecedents in preference order.
  std::vector<std::string> entities;
  // Whether the speaker is itself a candidate antecedent.
  bool speaker_candidate = true;

  // Antecedent candidates in order: the topic (if not listed), the
  // entities, then the speaker (if a candidate and not listed).
  std::vector<std::string> candidates() const;

  // Throws Error unless the speaker is named, entity names are unique and
  // the topic (if any) is among the entities.
  void validate() const;
};

struct ClauseSem {
  FeatureStructure fs;
  // One fresh token per omitted or introduced role (observer, affected, and
  // zero arguments). Roles that merely alias another role are not listed.
  std::map<Role, Token> zeros;
  // Every role filler of the clause, aliases included.
  std::map<Role, Term> roles;
  PredicateAnalysis pred;
  // The observer exists but need not be bound (subjective verbs).
  bool observer_optional = false;
  // Role of the grammatical subject, used for -te control.
  Role subject = Role::agent;

  const Term* role(Role r) const {
    auto it = roles.find(r);
    return it == roles.end() ? nullptr : &it->second;
  }
};

struct Built {
  ClauseSem sem;
  TokenEnv env;
};

// Active predicates. Passives are forwarded to build_passive_sem.
// Throws BuildError when an overt filler names a role the predicate does not
// subcategorize.
Built build_clause_sem(const PredicateAnalysis& pred, const std::map<Role, std::string>& overt,
                       TokenFactory& tokens, const TokenEnv& env);

// `subject` is the ga-marked phrase of the passive clause, if overt. The
// remaining overt fillers address the base verb's roles. Throws BuildError
// for passives of non-verb stems.
Built build_passive_sem(const PredicateAnalysis& pred, const std::optional<Argument>& subject,
                        const std::map<Role, std::string>& overt, TokenFactory& tokens,
                        const TokenEnv& env);

// Maps the overt arguments of a segmented clause onto roles and builds it.
// Unattached phrases are appended to `unattached`.
Built build_from_clause(const ClauseUnit& clause, TokenFactory& tokens, const TokenEnv& env,
                        std::vector<std::string>* unattached = nullptr);

// Sentence-final garu: observer = speaker. Sentence-final bare subjective
// adjective: experiencer = speaker. No-op unless `is_sentence_final`.
// Throws Inconsistent when the env already contradicts the rule.
TokenEnv apply_sentence_final_rules(const ClauseSem& sem, bool is_sentence_final,
                                    const DiscourseContext& ctx, const TokenEnv& env);

struct ComplexSem {
  FeatureStructure fs;
  // Absent for temporal links.
  std::optional<Token> motivated;
  // The subordinate clause, possibly given an optional observer (subjective
  // adjectives under concessive or conditional links).
  ClauseSem sub;
};

// {matrix-sem: main, sub-sem: {rel: <conjunct>, motivated: m, soa: sub}}.
// `sub.fs` may itself be a complex structure when clauses nest.
ComplexSem build_complex_sem(const ClauseSem& sub, LinkType link, const std::string& conjunct,
                             const ClauseSem& main, TokenFactory& tokens);

// Attaches a -te/tutu/nagara VP to its host clause and identifies the
// conjunct's subject with the host's subject.
Built attach_vp_conjunct(const ClauseSem& vp, const std::string& conjunct, const ClauseSem& host,
                         const TokenEnv& env);

}  // namespace jzero
