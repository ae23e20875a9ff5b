#include "jzero/morphology.hpp"

#include <algorithm>
#include <array>

#include "jzero/errors.hpp"
#include "text_util.hpp"

namespace jzero {

namespace {

constexpr std::array<std::string_view, 16> kSuffixes = {
    "ta", "gar", "gat", "garu", "are", "anakat", "nai", "teiru",
    "i",  "ku",  "yat", "yaru", "kure", "kureru", "gari", "gare"};

constexpr std::array<std::string_view, 4> kDirectional = {"yat", "yaru", "kure", "kureru"};

bool is_adjective(Pos pos) { return pos == Pos::subjective_adjective || pos == Pos::adjective; }

bool is_verb(Pos pos) { return pos == Pos::verb; }

// Walks a suffix chain left to right.
class ChainReader {
 public:
  ChainReader(std::span<const std::string> span, std::size_t start) : span_(span), pos_(start) {}

  bool done() const { return pos_ >= span_.size(); }
  std::string_view peek(std::size_t ahead = 0) const {
    return pos_ + ahead < span_.size() ? std::string_view(span_[pos_ + ahead]) : std::string_view{};
  }
  bool accept(std::string_view m) {
    if (peek() != m) return false;
    ++pos_;
    return true;
  }
  std::size_t position() const { return pos_; }
  [[noreturn]] void fail(const std::string& what) const { throw MorphError(what, pos_); }

 private:
  std::span<const std::string> span_;
  std::size_t pos_;
};

bool is_garu_form(std::string_view m) {
  return m == "gar" || m == "gat" || m == "garu" || m == "gari" || m == "gare";
}

// garu allophones are fixed by what follows: gat before ta/teiru/te, gar
// before negation, garu at the end.
void read_garu(ChainReader& r) {
  std::string_view form = r.peek();
  std::string_view next = r.peek(1);
  if (form == "gari" || form == "gare") r.fail("unsupported garu inflection '" + std::string(form) + "'");
  bool ok = (form == "gat" && (next == "ta" || next == "teiru" || next == "te")) ||
            (form == "gar" && (next == "anakat" || next == "nai")) ||
            (form == "garu" && next.empty());
  if (!ok) {
    if (next == "are") {
      r.fail("passive attaches to verb stems only");
    }
    r.fail("garu form '" + std::string(form) + "' cannot precede '" + std::string(next) + "'");
  }
  r.accept(form);
}

}  // namespace

bool is_suffix_morpheme(std::string_view m) {
  return std::find(kSuffixes.begin(), kSuffixes.end(), m) != kSuffixes.end();
}

bool is_directional_aux(std::string_view m) {
  return std::find(kDirectional.begin(), kDirectional.end(), m) != kDirectional.end();
}

StemMatch match_stem(std::span<const std::string> morphemes, const Lexicon& lexicon) {
  std::size_t longest = std::min(lexicon.max_morphemes(), morphemes.size());
  for (std::size_t len = longest; len >= 1; --len) {
    std::string surface = text::join(morphemes.subspan(0, len), " ");
    for (const auto* e : lexicon.lookup(surface)) {
      if (e->is_predicate()) return {e, len, AdjEnding::none};
    }
  }
  if (morphemes.empty()) return {};

  const std::string& m = morphemes.front();
  auto try_ending = [&](std::string_view ending, AdjEnding kind) -> StemMatch {
    if (m.size() <= ending.size() || !m.ends_with(ending)) return {};
    std::string stem = m.substr(0, m.size() - ending.size());
    for (const auto* e : lexicon.lookup(stem)) {
      if (is_adjective(e->pos) && !e->has_flag("na")) return {e, 1, kind};
    }
    return {};
  };
  if (auto s = try_ending("ku", AdjEnding::ku); s.entry) return s;
  if (auto s = try_ending("i", AdjEnding::i); s.entry) return s;
  return {};
}

PredicateAnalysis analyze_predicate(std::span<const std::string> span, const Lexicon& lexicon) {
  if (span.empty()) throw MorphError("empty predicate span", 0);
  StemMatch stem = match_stem(span, lexicon);
  if (stem.entry == nullptr) throw MorphError("no predicate stem '" + span.front() + "'", 0);

  PredicateAnalysis a;
  a.stem = *stem.entry;
  const Pos pos = a.stem.pos;
  ChainReader r(span, stem.length);

  if (stem.fused != AdjEnding::none) {
    a.ending = stem.fused;
    a.fused_ending = true;
  } else if (is_adjective(pos) && (r.peek() == "i" || r.peek() == "ku")) {
    a.ending = r.peek() == "i" ? AdjEnding::i : AdjEnding::ku;
    r.accept(r.peek());
  }

  if (a.ending != AdjEnding::none) {
    if (!r.done()) r.fail("unexpected '" + std::string(r.peek()) + "' after adjective ending");
  } else {
    if (r.peek() == "are") {
      if (!is_verb(pos)) r.fail("passive attaches to verb stems only");
      r.accept("are");
      a.passive = a.stem.has_flag("intransitive") ? Passive::intransitive : Passive::transitive;
    }

    if (r.peek() == "ta" && is_garu_form(r.peek(1))) {
      if (!is_verb(pos)) r.fail("ta-garu attaches to verb stems only");
      if (a.passive != Passive::none) r.fail("passive cannot combine with ta-garu");
      r.accept("ta");
      read_garu(r);
      a.has_ta_garu = true;
    } else if (is_garu_form(r.peek())) {
      if (pos != Pos::subjective_adjective) {
        r.fail("garu attaches to subjective adjectives or verb + ta");
      }
      read_garu(r);
      a.has_garu = true;
    }
    if (r.peek() == "are") r.fail("passive attaches to verb stems only");

    if (r.accept("anakat")) {
      if (r.peek() != "ta") r.fail("anakat must be followed by ta");
      a.polarity = Polarity::negative;
    } else if (r.accept("nai")) {
      a.polarity = Polarity::negative;
      if (!r.done()) r.fail("unexpected '" + std::string(r.peek()) + "' after nai");
    }

    if (r.accept("teiru")) {
      a.progressive = true;
    } else if (r.peek() == "te" && is_directional_aux(r.peek(1))) {
      r.accept("te");
      std::string aux(r.peek());
      r.accept(aux);
      bool needs_ta = aux == "yat" || aux == "kure";
      if (needs_ta != (r.peek() == "ta")) r.fail("ill-formed directional auxiliary '" + aux + "'");
      a.directional = aux;
    }

    if (r.accept("ta")) a.tense = Tense::past;
    if (!a.progressive && a.tense == Tense::present && a.polarity == Polarity::positive &&
        !a.directional && r.peek() == "i" && r.peek(1).empty() && is_verb(pos)) {
      r.accept("i");
      a.perfective = true;
    }
    if (!r.done()) {
      if (!is_suffix_morpheme(r.peek())) r.fail("unknown suffix '" + std::string(r.peek()) + "'");
      r.fail("suffix '" + std::string(r.peek()) + "' out of order");
    }
  }

  switch (pos) {
    case Pos::verb:
      a.category = a.passive != Passive::none ? Category::passive
                   : a.has_ta_garu            ? Category::verb_ta_garu
                                              : Category::non_subjective;
      break;
    case Pos::subjective_verb:
      a.category = Category::subjective_verb;
      break;
    case Pos::subjective_adjective:
      a.category = a.has_garu ? Category::subjective_adjective_garu : Category::subjective_adjective;
      break;
    default:
      a.category = Category::non_subjective;
      break;
  }
  return a;
}

std::vector<std::string> render_predicate(const PredicateAnalysis& a) {
  std::vector<std::string> out;
  const char* ending = a.ending == AdjEnding::i ? "i" : a.ending == AdjEnding::ku ? "ku" : "";
  if (a.fused_ending) {
    out.push_back(a.stem.surface + ending);
    return out;
  }
  for (auto& m : text::split_ws(a.stem.surface)) out.push_back(std::move(m));
  if (a.ending != AdjEnding::none) {
    out.emplace_back(ending);
    return out;
  }
  if (a.passive != Passive::none) out.emplace_back("are");
  if (a.has_ta_garu) out.emplace_back("ta");
  if (a.has_garu || a.has_ta_garu) {
    bool before_ta = a.polarity == Polarity::positive &&
                     (a.tense == Tense::past || a.progressive || a.directional);
    out.emplace_back(a.polarity == Polarity::negative ? "gar" : before_ta ? "gat" : "garu");
  }
  if (a.polarity == Polarity::negative) out.emplace_back(a.tense == Tense::past ? "anakat" : "nai");
  if (a.progressive) out.emplace_back("teiru");
  if (a.directional) {
    out.emplace_back("te");
    out.push_back(*a.directional);
  }
  if (a.tense == Tense::past) out.emplace_back("ta");
  if (a.perfective) out.emplace_back("i");
  return out;
}

std::string category_label(const PredicateAnalysis& a) {
  std::string label = std::to_string(static_cast<int>(a.category));
  if (a.passive == Passive::intransitive) label += "-intransitive";
  if (a.passive == Passive::transitive) label += "-transitive";
  return label;
}

std::string describe(const PredicateAnalysis& a) {
  std::string out = a.stem.surface + " (" + std::string(to_string(a.stem.pos)) + ") category " +
                    category_label(a);
  if (a.has_garu) out += " garu";
  if (a.has_ta_garu) out += " ta-garu";
  out += a.tense == Tense::past ? " past" : " present";
  if (a.polarity == Polarity::negative) out += " negative";
  if (a.progressive) out += " progressive";
  if (a.perfective) out += " perfective";
  if (a.directional) out += " directional:" + *a.directional;
  if (a.no_constraint()) out += " [no-constraint]";
  return out;
}

std::string_view to_string(LinkType link) {
  switch (link) {
    case LinkType::cause: return "cause";
    case LinkType::concession: return "concession";
    case LinkType::conditional: return "conditional";
    case LinkType::temporal: return "temporal";
  }
  return "?";
}

namespace {

struct ConjunctRow {
  std::string_view particle;
  std::optional<LinkType> plain;
  std::optional<LinkType> perfective;
};

constexpr std::array<ConjunctRow, 16> kConjuncts = {{
    {"node", LinkType::cause, LinkType::cause},
    {"kara", LinkType::cause, LinkType::cause},
    {"noni", LinkType::concession, LinkType::concession},
    {"ga", LinkType::concession, LinkType::concession},
    {"keredomo", LinkType::concession, LinkType::concession},
    {"temo", LinkType::concession, LinkType::concession},
    {"te", std::nullopt, LinkType::concession},
    {"tutu", std::nullopt, LinkType::concession},
    {"nagara", std::nullopt, LinkType::concession},
    {"to", LinkType::conditional, LinkType::conditional},
    {"nara", LinkType::conditional, LinkType::conditional},
    {"tara", LinkType::conditional, LinkType::conditional},
    {"reba", LinkType::conditional, LinkType::conditional},
    {"toki", LinkType::temporal, LinkType::temporal},
    {"ato", LinkType::temporal, LinkType::temporal},
    {"mae", LinkType::temporal, LinkType::temporal},
}};

}  // namespace

bool is_conjunct_particle(std::string_view particle) {
  return std::any_of(kConjuncts.begin(), kConjuncts.end(),
                     [&](const ConjunctRow& row) { return row.particle == particle; });
}

std::optional<LinkType> classify_conjunct(std::string_view particle, bool perfective) {
  for (const auto& row : kConjuncts) {
    if (row.particle == particle) return perfective ? row.perfective : row.plain;
  }
  throw Error("unknown conjunctive particle '" + std::string(particle) + "'");
}

}  // namespace jzero
