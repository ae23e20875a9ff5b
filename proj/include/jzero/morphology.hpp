#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "jzero/lexicon.hpp"

namespace jzero {

// Predicate categories. Both passives share number 6; Passive tells them apart.
enum class Category {
  non_subjective = 1,
  subjective_verb = 2,
  subjective_adjective = 3,
  subjective_adjective_garu = 4,
  verb_ta_garu = 5,
  passive = 6,
};

enum class Passive { none, transitive, intransitive };
enum class Tense { present, past };
enum class Polarity { positive, negative };
enum class AdjEnding { none, i, ku };

struct PredicateAnalysis {
  LexEntry stem;
  Category category = Category::non_subjective;
  bool has_garu = false;
  bool has_ta_garu = false;
  Passive passive = Passive::none;
  Tense tense = Tense::present;
  Polarity polarity = Polarity::positive;
  bool progressive = false;
  // Aspectual perfective "i" closing the chain (i-te, i-nagara, ...).
  bool perfective = false;
  AdjEnding ending = AdjEnding::none;
  // Ending written on the stem ("atui") rather than as its own morpheme.
  bool fused_ending = false;
  // Directional auxiliary after -te ("yat", "kureru", ...).
  std::optional<std::string> directional;

  // Category 1 predicates carry no constraint downstream.
  bool no_constraint() const { return category == Category::non_subjective; }
};

std::string describe(const PredicateAnalysis& pred);
std::string category_label(const PredicateAnalysis& pred);

// The closed suffix inventory. Used by segmentation to tell suffixes from
// content words.
bool is_suffix_morpheme(std::string_view m);
bool is_directional_aux(std::string_view m);

// Recognizes a predicate stem at the front of `morphemes`: the longest
// predicate lexicon entry, or an adjective stem with a fused i/ku ending.
// Returns the number of morphemes consumed, 0 if none.
struct StemMatch {
  const LexEntry* entry = nullptr;
  std::size_t length = 0;
  AdjEnding fused = AdjEnding::none;
};
StemMatch match_stem(std::span<const std::string> morphemes, const Lexicon& lexicon);

// `span` is a stem followed by its suffix chain. Throws MorphError (position
// relative to the span) for unknown suffixes or ill-ordered chains.
PredicateAnalysis analyze_predicate(std::span<const std::string> span, const Lexicon& lexicon);

// Inverse of analyze_predicate.
std::vector<std::string> render_predicate(const PredicateAnalysis& pred);

enum class LinkType { cause = 1, concession = 2, conditional = 3, temporal = 4 };

std::string_view to_string(LinkType link);

bool is_conjunct_particle(std::string_view particle);

// nullopt means te/tutu/nagara without perfective i: a VP conjunct, not a
// clause conjunct. Throws Error for particles outside the inventory.
std::optional<LinkType> classify_conjunct(std::string_view particle, bool perfective);

}  // namespace jzero
