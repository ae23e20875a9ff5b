#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "jzero/constraints.hpp"
#include "jzero/enumerate.hpp"
#include "jzero/feature_structure.hpp"
#include "jzero/lexicon.hpp"
#include "jzero/sem_builder.hpp"
#include "jzero/token_env.hpp"

namespace jzero {

// Context files hold "key: value" lines: speaker, hearer, topic, entities
// (comma-separated) and speaker_candidate (true|false). '#' starts a comment.
// Keys not given keep their value from `base`. Throws ParseError.
DiscourseContext parse_context(std::string_view text, const DiscourseContext& base = {});
DiscourseContext load_context(const std::filesystem::path& file);

// A gold reading: label -> entity, e.g. {"exp": "Hanako", "agt": "speaker"}.
using Gold = std::map<std::string, std::string>;

struct CorpusEntry {
  std::string sentence;
  std::size_t line = 0;
  std::vector<Gold> gold;
  std::vector<std::string> notes;
  // "key: value" context lines that override the run's context.
  std::vector<std::string> context;
};

// One sentence per line; "gold:", "note:" and "context:" lines attach to the
// sentence above them. Throws ParseError.
std::vector<CorpusEntry> parse_corpus(std::string_view text);
std::vector<CorpusEntry> load_corpus(const std::filesystem::path& file);
Gold parse_gold(std::string_view bindings, std::size_t line = 0);

struct ClauseReport {
  // "sub", "vp" or "main".
  std::string kind;
  std::string text;
  std::string predicate;
  std::string category;
  // For sub and vp clauses: the particle that closes them.
  std::string conjunct;
  std::optional<LinkType> link;
};

struct RuleApplication {
  std::string rule;
  // 1-based surface index of the subordinate clause whose link it serves.
  std::size_t clause = 0;
  // Rendered requirements per alternative, in label terms.
  std::vector<std::string> alternatives;
  bool local = true;
};

struct AnalysisReport {
  std::string input;
  std::optional<std::string> topic;
  std::vector<ClauseReport> clauses;
  std::vector<RuleApplication> rules;
  FeatureStructure fs;
  TokenEnv env;
  std::vector<EnvDelta> deltas;
  std::vector<std::string> candidates;
  // Token id -> display label such as "exp1" or "agt".
  std::map<TokenId, std::string> labels;
  std::vector<Interpretation> interpretations;
  std::vector<std::string> warnings;

  std::string label(const Token& t) const;
  // label=entity pairs in token-id order.
  std::vector<std::pair<std::string, std::string>> labeled(const Interpretation& i) const;
  // True when some interpretation agrees with every pair of the gold reading.
  bool contains(const Gold& gold) const;
};

// Runs segmentation, construction, rule selection and enumeration for one
// sentence. Throws MorphError, BuildError, Inconsistent or Error.
AnalysisReport analyze(std::string_view sentence, const DiscourseContext& ctx,
                       const Lexicon& lexicon = Lexicon::builtin(),
                       const RuleTable& rules = RuleTable::builtin());

// Whether the brute-force oracle reproduces the report's interpretations.
bool oracle_agrees(const AnalysisReport& report);

std::string render_text(const AnalysisReport& report);
// One JSON object with fields input, clauses, rules, interpretations,
// warnings.
std::string render_json(const AnalysisReport& report, int indent = 2);

}  // namespace jzero
