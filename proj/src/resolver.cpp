#include "jzero/resolver.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

#include "jzero/errors.hpp"
#include "jzero/segment.hpp"
#include "text_util.hpp"

namespace jzero {

namespace {

std::string read_file(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw Error("cannot open " + file.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

bool parse_bool(std::string_view v, std::size_t line) {
  if (v == "true" || v == "yes") return true;
  if (v == "false" || v == "no") return false;
  throw ParseError("expected true or false, got '" + std::string(v) + "'", line);
}

}  // namespace

DiscourseContext parse_context(std::string_view text, const DiscourseContext& base) {
  DiscourseContext ctx = base;
  std::size_t line_no = 0;
  for (auto raw : text::lines(text)) {
    ++line_no;
    auto line = text::trim(raw.substr(0, raw.find('#')));
    if (line.empty()) continue;
    auto colon = line.find(':');
    if (colon == std::string_view::npos) throw ParseError("expected 'key: value'", line_no);
    auto key = text::trim(line.substr(0, colon));
    auto value = text::trim(line.substr(colon + 1));
    if (key == "speaker") {
      if (value.empty()) throw ParseError("empty speaker", line_no);
      ctx.speaker = value;
    } else if (key == "hearer") {
      ctx.hearer = value.empty() ? std::nullopt : std::optional<std::string>(value);
    } else if (key == "topic") {
      ctx.topic = value.empty() ? std::nullopt : std::optional<std::string>(value);
    } else if (key == "entities") {
      ctx.entities.clear();
      if (!value.empty()) {
        for (auto e : text::split(value, ',')) {
          auto name = text::trim(e);
          if (name.empty()) throw ParseError("empty entity name", line_no);
          ctx.entities.emplace_back(name);
        }
      }
    } else if (key == "speaker_candidate") {
      ctx.speaker_candidate = parse_bool(value, line_no);
    } else {
      throw ParseError("unknown context key '" + std::string(key) + "'", line_no);
    }
  }
  ctx.validate();
  return ctx;
}

DiscourseContext load_context(const std::filesystem::path& file) {
  return parse_context(read_file(file));
}

Gold parse_gold(std::string_view bindings, std::size_t line) {
  Gold gold;
  for (const auto& pair : text::split_ws(bindings)) {
    auto eq = pair.find('=');
    if (eq == std::string::npos || eq == 0 || eq + 1 == pair.size()) {
      throw ParseError("expected label=entity, got '" + pair + "'", line);
    }
    std::string label = pair.substr(0, eq);
    if (!gold.emplace(label, pair.substr(eq + 1)).second) {
      throw ParseError("label '" + label + "' given twice", line);
    }
  }
  if (gold.empty()) throw ParseError("empty gold reading", line);
  return gold;
}

std::vector<CorpusEntry> parse_corpus(std::string_view text) {
  std::vector<CorpusEntry> out;
  std::size_t line_no = 0;
  for (auto raw : text::lines(text)) {
    ++line_no;
    auto line = text::trim(raw);
    if (line.empty() || line.front() == '#') continue;
    for (std::string_view key : {"gold:", "note:", "context:"}) {
      if (!line.starts_with(key)) continue;
      if (out.empty()) throw ParseError(std::string(key) + " line before any sentence", line_no);
      auto value = text::trim(line.substr(key.size()));
      if (key == "gold:") {
        out.back().gold.push_back(parse_gold(value, line_no));
      } else if (key == "note:") {
        out.back().notes.emplace_back(value);
      } else {
        out.back().context.emplace_back(value);
      }
      line = {};
      break;
    }
    if (line.empty()) continue;
    out.push_back(CorpusEntry{std::string(line), line_no, {}, {}, {}});
  }
  return out;
}

std::vector<CorpusEntry> load_corpus(const std::filesystem::path& file) {
  return parse_corpus(read_file(file));
}

std::string AnalysisReport::label(const Token& t) const {
  auto it = labels.find(t.id);
  return it != labels.end() ? it->second : "t" + std::to_string(t.id);
}

std::vector<std::pair<std::string, std::string>> AnalysisReport::labeled(
    const Interpretation& i) const {
  std::vector<std::pair<std::string, std::string>> out;
  for (const auto& [tok, value] : i.bindings) out.emplace_back(label(tok), value);
  return out;
}

bool AnalysisReport::contains(const Gold& gold) const {
  return std::any_of(interpretations.begin(), interpretations.end(), [&](const Interpretation& i) {
    auto pairs = labeled(i);
    return std::all_of(gold.begin(), gold.end(), [&](const auto& g) {
      return std::find(pairs.begin(), pairs.end(), std::pair{g.first, g.second}) != pairs.end();
    });
  });
}

namespace {

struct Level {
  RuleApplication app;
  std::vector<EnvDelta> deltas;
};

// Labels are role abbreviations; when one abbreviation occurs in several
// clauses, each gets the 1-based clause index as a suffix.
std::map<TokenId, std::string> make_labels(const std::vector<Token>& tokens,
                                           const std::map<TokenId, std::size_t>& clause_of) {
  std::map<std::string, std::set<std::size_t>> clauses_per_origin;
  auto clause = [&](const Token& t) {
    auto it = clause_of.find(t.id);
    return it == clause_of.end() ? std::size_t{0} : it->second;
  };
  for (const auto& t : tokens) clauses_per_origin[t.origin].insert(clause(t));
  std::map<TokenId, std::string> out;
  std::set<std::string> used;
  for (const auto& t : tokens) {
    std::string label = t.origin;
    if (clauses_per_origin[t.origin].size() > 1) label += std::to_string(clause(t));
    if (!used.insert(label).second) label += "_" + std::to_string(t.id);
    out.emplace(t.id, label);
  }
  return out;
}

std::string term_label(const Term& t, const std::map<TokenId, std::string>& labels) {
  if (const auto* a = std::get_if<Atom>(&t)) return a->symbol;
  auto id = std::get<Token>(t).id;
  auto it = labels.find(id);
  return it != labels.end() ? it->second : "t" + std::to_string(id);
}

std::string render_delta(const EnvDelta& d, const std::map<TokenId, std::string>& labels) {
  std::vector<std::string> parts;
  for (const auto& r : d.requirements) {
    parts.push_back(term_label(r.lhs, labels) +
                    (r.kind == TokenEnv::Fact::Kind::identity ? " = " : " ≠ ") +
                    term_label(r.rhs, labels));
  }
  for (const auto& t : d.absent) parts.push_back(term_label(t, labels) + " absent");
  return text::join(parts, ", ");
}

}  // namespace

AnalysisReport analyze(std::string_view sentence, const DiscourseContext& ctx_in,
                       const Lexicon& lexicon, const RuleTable& table) {
  ctx_in.validate();
  AnalysisReport report;
  report.input = std::string(text::trim(sentence));

  ClauseSplit split = segment(sentence, lexicon);
  DiscourseContext ctx = ctx_in;
  if (split.topic) {
    report.topic = split.topic;
    ctx.topic = split.topic;
  }
  report.candidates = ctx.candidates();

  // Build every clause in surface order so token ids follow the text.
  enum class Kind { sub, vp, main };
  struct Slot {
    std::size_t begin;
    Kind kind;
    std::size_t index;
  };
  std::vector<Slot> order;
  for (std::size_t i = 0; i < split.sub_clauses.size(); ++i) {
    order.push_back({split.sub_clauses[i].clause.span.begin, Kind::sub, i});
  }
  for (std::size_t i = 0; i < split.vp_conjuncts.size(); ++i) {
    order.push_back({split.vp_conjuncts[i].clause.span.begin, Kind::vp, i});
  }
  order.push_back({split.main_clause.span.begin, Kind::main, 0});
  std::sort(order.begin(), order.end(),
            [](const Slot& a, const Slot& b) { return a.begin < b.begin; });

  TokenFactory tokens;
  TokenEnv env;
  std::vector<std::string> unattached;
  std::vector<ClauseSem> subs(split.sub_clauses.size());
  std::vector<ClauseSem> vps(split.vp_conjuncts.size());
  ClauseSem main;
  std::vector<std::size_t> sub_number(subs.size());
  std::map<TokenId, std::size_t> clause_of;

  for (std::size_t n = 0; n < order.size(); ++n) {
    const Slot& slot = order[n];
    const ClauseUnit& unit = slot.kind == Kind::sub  ? split.sub_clauses[slot.index].clause
                             : slot.kind == Kind::vp ? split.vp_conjuncts[slot.index].clause
                                                     : split.main_clause;
    Built built = build_from_clause(unit, tokens, env, &unattached);
    env = built.env;
    for (const auto& [_, t] : built.sem.zeros) clause_of[t.id] = n + 1;

    ClauseReport cr;
    cr.text = join_span(split, unit.span);
    cr.predicate = describe(unit.analysis);
    cr.category = category_label(unit.analysis);
    for (const auto& s : unit.stray) {
      report.warnings.push_back("clause " + std::to_string(n + 1) + ": unattached material '" +
                                join_span(split, s) + "'");
    }
    switch (slot.kind) {
      case Kind::sub:
        cr.kind = "sub";
        cr.conjunct = split.sub_clauses[slot.index].conjunct;
        cr.link = split.sub_clauses[slot.index].link;
        subs[slot.index] = std::move(built.sem);
        sub_number[slot.index] = n + 1;
        break;
      case Kind::vp:
        cr.kind = "vp";
        cr.conjunct = split.vp_conjuncts[slot.index].conjunct;
        vps[slot.index] = std::move(built.sem);
        break;
      case Kind::main:
        cr.kind = "main";
        main = std::move(built.sem);
        break;
    }
    report.clauses.push_back(std::move(cr));
  }
  for (const auto& u : unattached) {
    report.warnings.push_back("phrase '" + u + "' fills no role");
  }

  // Optional observers that no rule gets to decide on do not exist.
  std::vector<Token> absent;
  auto optional_observer = [](const ClauseSem& c) -> std::optional<Token> {
    if (!c.observer_optional) return std::nullopt;
    const Term* o = c.role(Role::observer);
    if (o == nullptr || !std::holds_alternative<Token>(*o)) return std::nullopt;
    return std::get<Token>(*o);
  };

  for (std::size_t i = 0; i < vps.size(); ++i) {
    const auto& vp = split.vp_conjuncts[i];
    ClauseSem& host = vp.host < subs.size() ? subs[vp.host] : main;
    Built attached = attach_vp_conjunct(vps[i], vp.conjunct, host, env);
    host = std::move(attached.sem);
    env = attached.env;
    if (auto o = optional_observer(vps[i])) absent.push_back(*o);
  }

  env = apply_sentence_final_rules(main, true, ctx, env);
  if (auto o = optional_observer(main)) absent.push_back(*o);

  // Left-nested complex structure: each subordinate clause wraps everything
  // before it and attaches to the clause that follows.
  FeatureStructure acc = subs.empty() ? main.fs : subs.front().fs;
  std::vector<Level> levels;
  for (std::size_t k = 0; k < subs.size(); ++k) {
    const SubClause& sc = split.sub_clauses[k];
    const ClauseSem& host = k + 1 < subs.size() ? subs[k + 1] : main;
    const std::size_t number = sub_number[k];
    ClauseSem sub = subs[k];
    sub.fs = acc;
    ComplexSem complex = build_complex_sem(sub, sc.link, sc.conjunct, host, tokens);
    acc = complex.fs;
    for (const auto& [_, t] : complex.sub.zeros) clause_of.try_emplace(t.id, number);
    if (!complex.motivated) {
      report.warnings.push_back("clause " + std::to_string(number) + ": temporal link '" +
                                sc.conjunct + "' carries no constraint");
      if (auto o = optional_observer(complex.sub)) absent.push_back(*o);
      continue;
    }
    clause_of[complex.motivated->id] = number;

    bool sub_rule_applied = false;
    if (const ConstraintRule* rule = select_sub_rule(table, complex.sub.pred, sc.link)) {
      try {
        Level level{{rule->name, number, {}, true},
                    emit_constraints(*rule, complex.sub, host, *complex.motivated)};
        for (const auto& d : level.deltas) {
          level.app.local = level.app.local && is_local(*rule, d, complex.sub, host, *complex.motivated);
        }
        levels.push_back(std::move(level));
        sub_rule_applied = true;
      } catch (const UnsupportedConstruction& e) {
        report.warnings.push_back("clause " + std::to_string(number) + ": " + e.what() +
                                  "; " + rule->name + " skipped");
      }
    } else {
      report.warnings.push_back("clause " + std::to_string(number) +
                                ": no subordinate-clause constraint derived (category 1 predicate)");
    }
    if (!sub_rule_applied) {
      if (auto o = optional_observer(complex.sub)) absent.push_back(*o);
    }

    try {
      const ConstraintRule& rule = select_main_rule(table, sc.link, host.pred);
      Level level{{rule.name, number, {}, true},
                  emit_constraints(rule, complex.sub, host, *complex.motivated)};
      for (const auto& d : level.deltas) {
        level.app.local = level.app.local && is_local(rule, d, complex.sub, host, *complex.motivated);
      }
      levels.push_back(std::move(level));
    } catch (const UnsupportedMainClass& e) {
      report.warnings.push_back("clause " + std::to_string(number) + ": " + e.what());
    }
  }

  std::vector<std::vector<EnvDelta>> per_rule;
  for (const auto& l : levels) per_rule.push_back(l.deltas);
  report.deltas = combine(per_rule);
  for (auto& d : report.deltas) d.absent.insert(d.absent.end(), absent.begin(), absent.end());

  report.fs = acc;
  report.env = env;
  report.labels = make_labels(acc.tokens(), clause_of);
  for (auto& l : levels) {
    for (const auto& d : l.deltas) l.app.alternatives.push_back(render_delta(d, report.labels));
    report.rules.push_back(std::move(l.app));
  }
  report.interpretations =
      enumerate_interpretations(report.fs, report.env, report.deltas, report.candidates);
  return report;
}

bool oracle_agrees(const AnalysisReport& report) {
  auto oracle = brute_force_oracle(report.fs, report.env, report.deltas, report.candidates);
  return as_set(oracle) == as_set(report.interpretations);
}

std::string render_text(const AnalysisReport& r) {
  std::ostringstream os;
  os << "sentence: " << r.input << '\n';
  if (r.topic) os << "topic: " << *r.topic << '\n';
  os << "clauses:\n";
  for (std::size_t i = 0; i < r.clauses.size(); ++i) {
    const auto& c = r.clauses[i];
    os << "  " << i + 1 << ". " << c.kind << " \"" << c.text << "\"";
    if (!c.conjunct.empty()) {
      os << " + " << c.conjunct;
      if (c.link) os << " (" << to_string(*c.link) << ")";
    }
    os << "\n     " << c.predicate << '\n';
  }
  os << "structure:\n";
  std::istringstream fs(render(r.fs, r.env));
  for (std::string line; std::getline(fs, line);) os << "  " << line << '\n';
  os << "rules:";
  if (r.rules.empty()) os << " none";
  os << '\n';
  for (const auto& a : r.rules) {
    os << "  " << a.rule << " (clause " << a.clause << "): " << text::join(a.alternatives, "  |  ")
       << (a.local ? "" : "  [NOT LOCAL]") << '\n';
  }
  os << "candidates: " << text::join(r.candidates, ", ") << '\n';
  os << "interpretations: " << r.interpretations.size() << '\n';
  for (std::size_t i = 0; i < r.interpretations.size(); ++i) {
    const auto& interp = r.interpretations[i];
    std::vector<std::string> pairs;
    for (const auto& [label, value] : r.labeled(interp)) pairs.push_back(label + "=" + value);
    os << "  " << i + 1 << ". " << text::join(pairs, " ");
    if (!interp.rules.empty()) {
      os << "  [" << text::join(interp.rules, "+") << " alt " << interp.alternative << "]";
    }
    os << '\n';
  }
  for (const auto& w : r.warnings) os << "warning: " << w << '\n';
  return os.str();
}

std::string render_json(const AnalysisReport& r, int indent) {
  using nlohmann::ordered_json;
  ordered_json j;
  j["input"] = r.input;
  j["topic"] = r.topic ? ordered_json(*r.topic) : ordered_json(nullptr);
  j["clauses"] = ordered_json::array();
  for (const auto& c : r.clauses) {
    ordered_json cj;
    cj["kind"] = c.kind;
    cj["text"] = c.text;
    cj["predicate"] = c.predicate;
    cj["category"] = c.category;
    if (!c.conjunct.empty()) cj["conjunct"] = c.conjunct;
    if (c.link) cj["link"] = std::string(to_string(*c.link));
    j["clauses"].push_back(std::move(cj));
  }
  j["rules"] = ordered_json::array();
  for (const auto& a : r.rules) {
    j["rules"].push_back(ordered_json{
        {"rule", a.rule}, {"clause", a.clause}, {"alternatives", a.alternatives}, {"local", a.local}});
  }
  j["candidates"] = r.candidates;
  j["interpretations"] = ordered_json::array();
  for (const auto& i : r.interpretations) {
    ordered_json bindings = ordered_json::object();
    for (const auto& [label, value] : r.labeled(i)) bindings[label] = value;
    j["interpretations"].push_back(
        ordered_json{{"bindings", std::move(bindings)}, {"rules", i.rules}, {"alternative", i.alternative}});
  }
  j["warnings"] = r.warnings;
  return j.dump(indent);
}

}  // namespace jzero
