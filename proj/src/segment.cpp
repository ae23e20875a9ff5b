#include "jzero/segment.hpp"

#include <cctype>

#include "jzero/errors.hpp"
#include "text_util.hpp"

namespace jzero {

namespace {

struct Unit {
  enum class Kind { stem, suffix, nominal, name, particle, conjunct, adverb };
  Span span;
  Kind kind;
  const LexEntry* entry = nullptr;
};

bool has_conjunct_entry(const Lexicon& lex, std::string_view m) {
  return lex.find(m, Pos::conjunct) != nullptr;
}

// Longest non-predicate, non-conjunct lexicon entry at the front.
std::pair<const LexEntry*, std::size_t> match_word(std::span<const std::string> ms,
                                                   const Lexicon& lex) {
  std::size_t longest = std::min(lex.max_morphemes(), ms.size());
  for (std::size_t len = longest; len >= 1; --len) {
    std::string surface = text::join(ms.subspan(0, len), " ");
    for (const auto* e : lex.lookup(surface)) {
      if (!e->is_predicate() && e->pos != Pos::conjunct) return {e, len};
    }
  }
  return {nullptr, 0};
}

class Segmenter {
 public:
  Segmenter(std::span<const std::string> morphemes, const Lexicon& lex)
      : ms_(morphemes), lex_(lex) {
    split_.morphemes.assign(morphemes.begin(), morphemes.end());
  }

  ClauseSplit run() {
    const std::size_t n = ms_.size();
    std::size_t i = 0;
    while (i < n) {
      const std::string& m = ms_[i];
      std::string_view next = i + 1 < n ? std::string_view(ms_[i + 1]) : std::string_view{};

      if (pred_open_ && has_conjunct_entry(lex_, m) && !(m == "te" && is_directional_aux(next))) {
        close_with_conjunct(i);
        ++i;
        continue;
      }
      if (m == "wa" && !split_.topic && units_.size() == unit_start_ + 1 &&
          (units_.back().kind == Unit::Kind::nominal || units_.back().kind == Unit::Kind::name)) {
        const Unit& np = units_.back();
        split_.topic = value_of(np);
        split_.topic_span = Span{span_start_, i + 1};
        push(Unit{{i, i + 1}, Unit::Kind::particle, lex_.find("wa", Pos::particle)});
        restart(i + 1);
        ++i;
        continue;
      }
      if (pred_open_ && m == "te" && is_directional_aux(next)) {
        push(Unit{{i, i + 2}, Unit::Kind::suffix});
        i += 2;
        continue;
      }
      if (pred_open_ && is_suffix_morpheme(m)) {
        push(Unit{{i, i + 1}, Unit::Kind::suffix});
        ++i;
        continue;
      }

      auto rest = ms_.subspan(i);
      StemMatch stem = match_stem(rest, lex_);
      auto [word, word_len] = match_word(rest, lex_);
      if (stem.entry != nullptr && stem.length >= word_len) {
        push(Unit{{i, i + stem.length}, Unit::Kind::stem, stem.entry});
        pred_open_ = true;
        pred_start_ = i;
        i += stem.length;
        continue;
      }
      if (word != nullptr) {
        Unit::Kind kind = word->is_nominal()       ? Unit::Kind::nominal
                          : word->pos == Pos::adverb ? Unit::Kind::adverb
                                                     : Unit::Kind::particle;
        push(Unit{{i, i + word_len}, kind, word});
        pred_open_ = false;
        i += word_len;
        continue;
      }
      if (std::isupper(static_cast<unsigned char>(m.front()))) {
        push(Unit{{i, i + 1}, Unit::Kind::name});
        pred_open_ = false;
        ++i;
        continue;
      }
      if (has_conjunct_entry(lex_, m)) {
        throw MorphError("conjunctive particle '" + m + "' without a preceding predicate", i);
      }
      throw MorphError("unknown morpheme '" + m + "'", i);
    }

    if (!pred_open_) throw MorphError("no main-clause predicate found", n);
    split_.main_clause = close_clause(n);
    return std::move(split_);
  }

 private:
  void push(Unit u) { units_.push_back(u); }

  void restart(std::size_t next_span) {
    span_start_ = next_span;
    unit_start_ = units_.size();
    pred_open_ = false;
  }

  std::string value_of(const Unit& u) const {
    if (u.kind == Unit::Kind::nominal && u.entry != nullptr && !u.entry->gloss.empty()) {
      return u.entry->gloss;
    }
    return text::join(std::span(ms_.begin() + u.span.begin, u.span.size()), "-");
  }

  void close_with_conjunct(std::size_t pos) {
    ClauseUnit clause = close_clause(pos);
    const std::string& particle = ms_[pos];
    auto link = classify_conjunct(particle, clause.analysis.perfective);
    if (link) {
      split_.sub_clauses.push_back(SubClause{std::move(clause), particle, pos, *link});
    } else {
      split_.vp_conjuncts.push_back(
          VpConjunct{std::move(clause), particle, pos, split_.sub_clauses.size()});
    }
    push(Unit{{pos, pos + 1}, Unit::Kind::conjunct, lex_.find(particle, Pos::conjunct)});
    restart(pos + 1);
  }

  ClauseUnit close_clause(std::size_t end) {
    ClauseUnit c;
    c.span = Span{span_start_, end};
    c.predicate = Span{pred_start_, end};
    try {
      c.analysis = analyze_predicate(ms_.subspan(pred_start_, end - pred_start_), lex_);
    } catch (const MorphError& e) {
      throw MorphError(e.what(), pred_start_ + e.position());
    }
    parse_arguments(c);
    return c;
  }

  void parse_arguments(ClauseUnit& c) const {
    std::vector<const Unit*> pending;
    bool nominalized = false;
    auto pending_span = [&] { return Span{pending.front()->span.begin, pending.back()->span.end}; };

    for (std::size_t k = unit_start_; k < units_.size(); ++k) {
      const Unit& u = units_[k];
      if (u.span.begin >= c.predicate.begin) break;
      switch (u.kind) {
        case Unit::Kind::adverb:
          break;
        case Unit::Kind::nominal:
        case Unit::Kind::name:
        case Unit::Kind::stem:
        case Unit::Kind::suffix:
        case Unit::Kind::conjunct:
          pending.push_back(&u);
          break;
        case Unit::Kind::particle: {
          const std::string& p = ms_[u.span.begin];
          if (p == "no" && !pending.empty()) {
            auto prev = pending.back()->kind;
            if (prev == Unit::Kind::stem || prev == Unit::Kind::suffix) {
              // Nominalized clause: it swallows everything before it.
              nominalized = true;
              c.args.clear();
              pending.clear();
              for (std::size_t j = unit_start_; j <= k; ++j) pending.push_back(&units_[j]);
            } else {
              pending.push_back(&u);
            }
            break;
          }
          if (pending.empty()) {
            c.stray.push_back(u.span);
            break;
          }
          Argument arg;
          arg.span = pending_span();
          arg.particle = p;
          arg.complement = nominalized;
          if (!nominalized && pending.size() == 1) {
            arg.value = value_of(*pending.front());
          } else {
            arg.value = text::join(std::span(ms_.begin() + arg.span.begin, arg.span.size()), "-");
          }
          if (!nominalized) {
            for (auto it = pending.rbegin(); it != pending.rend(); ++it) {
              if ((*it)->kind == Unit::Kind::nominal) {
                arg.head = *(*it)->entry;
                break;
              }
            }
          }
          c.args.push_back(std::move(arg));
          pending.clear();
          nominalized = false;
          break;
        }
      }
    }
    if (!pending.empty()) c.stray.push_back(pending_span());
  }

  std::span<const std::string> ms_;
  const Lexicon& lex_;
  ClauseSplit split_;
  std::vector<Unit> units_;
  std::size_t span_start_ = 0;
  std::size_t unit_start_ = 0;
  std::size_t pred_start_ = 0;
  bool pred_open_ = false;
};

}  // namespace

std::vector<std::string> tokenize(std::string_view sentence) {
  auto out = text::split_ws(sentence);
  if (!out.empty()) {
    std::string& last = out.back();
    if (last == ".") {
      out.pop_back();
    } else if (last.size() > 1 && last.back() == '.') {
      last.pop_back();
    }
  }
  return out;
}

ClauseSplit segment(std::span<const std::string> morphemes, const Lexicon& lexicon) {
  return Segmenter(morphemes, lexicon).run();
}

ClauseSplit segment(std::string_view sentence, const Lexicon& lexicon) {
  auto ms = tokenize(sentence);
  return segment(std::span<const std::string>(ms), lexicon);
}

bool partitions_input(const ClauseSplit& split) {
  std::vector<int> hits(split.morphemes.size(), 0);
  auto mark = [&](Span s) {
    for (auto i = s.begin; i < s.end && i < hits.size(); ++i) ++hits[i];
  };
  if (split.topic_span) mark(*split.topic_span);
  for (const auto& s : split.sub_clauses) {
    mark(s.clause.span);
    mark({s.conjunct_pos, s.conjunct_pos + 1});
  }
  for (const auto& v : split.vp_conjuncts) {
    mark(v.clause.span);
    mark({v.conjunct_pos, v.conjunct_pos + 1});
  }
  mark(split.main_clause.span);
  for (int h : hits) {
    if (h != 1) return false;
  }
  return true;
}

std::string join_span(const ClauseSplit& split, Span span) {
  return text::join(std::span(split.morphemes.begin() + span.begin, span.size()), " ");
}

}  // namespace jzero
