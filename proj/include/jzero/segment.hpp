#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "jzero/lexicon.hpp"
#include "jzero/morphology.hpp"

namespace jzero {

// Half-open morpheme index range.
struct Span {
  std::size_t begin = 0;
  std::size_t end = 0;

  std::size_t size() const { return end - begin; }
  friend bool operator==(const Span&, const Span&) = default;
};

// An overt noun phrase and the particle that marks it.
struct Argument {
  Span span;
  // The value the phrase contributes: a noun's gloss, a proper name, or the
  // hyphen-joined morphemes of a nominalized complement.
  std::string value;
  std::string particle;
  // Head noun; empty for names and complements.
  std::optional<LexEntry> head;
  bool complement = false;
};

struct ClauseUnit {
  Span span;
  Span predicate;
  PredicateAnalysis analysis;
  std::vector<Argument> args;
  // Material that attached to nothing (bare nouns, unknown case marking).
  std::vector<Span> stray;
};

struct SubClause {
  ClauseUnit clause;
  std::string conjunct;
  std::size_t conjunct_pos = 0;
  LinkType link = LinkType::cause;
};

struct VpConjunct {
  ClauseUnit clause;
  std::string conjunct;
  std::size_t conjunct_pos = 0;
  // Index of the clause the conjunct attaches to: a sub-clause index, or
  // sub_clauses.size() for the main clause.
  std::size_t host = 0;
};

struct ClauseSplit {
  std::vector<std::string> morphemes;
  std::optional<std::string> topic;
  std::optional<Span> topic_span;
  std::vector<SubClause> sub_clauses;
  ClauseUnit main_clause;
  std::vector<VpConjunct> vp_conjuncts;
};

// Splits a romanized sentence on whitespace; a trailing "." is dropped.
std::vector<std::string> tokenize(std::string_view sentence);

// Throws MorphError for unknown morphemes (with their position) and when no
// main-clause predicate is found.
ClauseSplit segment(std::span<const std::string> morphemes, const Lexicon& lexicon);
ClauseSplit segment(std::string_view sentence, const Lexicon& lexicon);

// True when topic, sub-clauses, conjunct particles, VP conjuncts and the main
// clause cover every morpheme exactly once.
bool partitions_input(const ClauseSplit& split);

std::string join_span(const ClauseSplit& split, Span span);

}  // namespace jzero
