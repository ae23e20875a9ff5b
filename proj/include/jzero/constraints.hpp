#pragma once

#include <filesystem>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "jzero/lexicon.hpp"
#include "jzero/morphology.hpp"
#include "jzero/sem_builder.hpp"
#include "jzero/token_env.hpp"

namespace jzero {

// Predicate patterns of the rule table: subordinate-clause predicate shapes
// and main-clause semantic classes.
enum class Pattern {
  subjective_adjective_garu,
  verb_ta_garu,
  subjective_verb,
  subjective_adjective,
  intransitive_passive,
  transitive_passive,
  action,
  state,
};

std::string_view to_string(Pattern p);
std::optional<Pattern> parse_pattern(std::string_view text);

enum class MainClass { action, state };

// The main-clause class comes from the lexicon flags action/state.
std::optional<MainClass> main_class_of(const PredicateAnalysis& pred);

struct TemplateRequirement {
  TokenEnv::Fact::Kind kind = TokenEnv::Fact::Kind::identity;
  Role lhs = Role::motivated;
  // The first of these the clause actually has is used.
  std::vector<Role> rhs;
};

using Alternative = std::vector<TemplateRequirement>;

struct Applicability {
  std::set<LinkType> links;
  std::vector<Pattern> patterns;
};

struct ConstraintRule {
  std::string name;
  bool main_clause = false;
  std::vector<Applicability> rows;
  // Disjunction of conjunctions.
  std::vector<Alternative> alternatives;

  bool applies(LinkType link, Pattern pattern) const;
};

class RuleTable {
 public:
  // Tab-separated rows: name, link types, patterns, template. A row whose
  // name repeats the previous one and whose template is empty adds another
  // applicability row to that rule. Throws ParseError.
  static RuleTable parse(std::string_view text);
  static RuleTable load(const std::filesystem::path& file);
  static const RuleTable& builtin();

  const std::vector<ConstraintRule>& rules() const { return rules_; }
  const ConstraintRule* find(std::string_view name) const;

  // Human-readable rendering that mirrors the printed tables row for row.
  std::string render() const;

 private:
  std::vector<ConstraintRule> rules_;
};

// The subordinate-clause pattern of a predicate; nullopt for category 1.
std::optional<Pattern> sub_pattern_of(const PredicateAnalysis& pred);

// nullptr means no rule (category 1). Throws std::invalid_argument for
// temporal links.
const ConstraintRule* select_sub_rule(const RuleTable& table, const PredicateAnalysis& pred,
                                      LinkType link);
const ConstraintRule* select_sub_rule(const RuleTable& table, Category category, Passive passive,
                                      LinkType link);

// Throws UnsupportedMainClass when the class has no row.
const ConstraintRule& select_main_rule(const RuleTable& table, LinkType link, MainClass cls);
const ConstraintRule& select_main_rule(const RuleTable& table, LinkType link,
                                       const PredicateAnalysis& main);

struct Requirement {
  TokenEnv::Fact::Kind kind = TokenEnv::Fact::Kind::identity;
  Term lhs;
  Term rhs;
};

// One way of extending the env. `absent` lists optional tokens that do not
// exist under this alternative.
struct EnvDelta {
  std::vector<std::string> rules;
  std::size_t alternative = 0;
  std::vector<Requirement> requirements;
  std::vector<Token> absent;
};

// One delta per template alternative. S-rules read roles from `sub`,
// M-rules from `main`. Throws RuleRoleMissing when a referenced role is
// absent with no fallback, and UnsupportedConstruction when S3 meets a
// directional auxiliary.
std::vector<EnvDelta> emit_constraints(const ConstraintRule& rule, const ClauseSem& sub,
                                       const ClauseSem& main, const Token& motivated);

// Cartesian product of per-rule alternatives, numbered in mixed radix with
// the last rule varying fastest.
std::vector<EnvDelta> combine(const std::vector<std::vector<EnvDelta>>& per_rule);

// S-rule deltas may only mention the subordinate clause and its motivated
// token; M-rule deltas only pair motivated with a main-clause filler.
bool is_local(const ConstraintRule& rule, const EnvDelta& delta, const ClauseSem& sub,
              const ClauseSem& main, const Token& motivated);

// Applies requirements to env. Throws Inconsistent.
TokenEnv apply(const EnvDelta& delta, const TokenEnv& env);

}  // namespace jzero
