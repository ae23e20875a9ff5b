#include "jzero/constraints.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "builtin_data.hpp"
#include "jzero/errors.hpp"
#include "text_util.hpp"

namespace jzero {

namespace {

struct PatternName {
  Pattern pattern;
  std::string_view key;
  std::string_view phrase;
};

constexpr std::array<PatternName, 8> kPatterns = {{
    {Pattern::subjective_adjective_garu, "subjective-adjective+garu", "subjective adjective + garu"},
    {Pattern::verb_ta_garu, "verb+ta+garu", "verb + ta + garu"},
    {Pattern::subjective_verb, "subjective-verb", "subjective verb"},
    {Pattern::subjective_adjective, "subjective-adjective", "subjective adjective (without garu)"},
    {Pattern::intransitive_passive, "intransitive-passive", "intransitive passive"},
    {Pattern::transitive_passive, "transitive-passive", "transitive passive"},
    {Pattern::action, "action", "action"},
    {Pattern::state, "state*", "state*"},
}};

bool is_main_pattern(Pattern p) { return p == Pattern::action || p == Pattern::state; }

std::string_view phrase(Pattern p) {
  for (const auto& n : kPatterns) {
    if (n.pattern == p) return n.phrase;
  }
  return "?";
}

std::set<LinkType> parse_links(std::string_view text, std::size_t line) {
  std::set<LinkType> out;
  for (auto item : text::split(text, ',')) {
    item = text::trim(item);
    if (item == "1") out.insert(LinkType::cause);
    else if (item == "2") out.insert(LinkType::concession);
    else if (item == "3") out.insert(LinkType::conditional);
    else throw ParseError("bad link type '" + std::string(item) + "'", line);
  }
  return out;
}

Role parse_role_or_throw(std::string_view text, std::size_t line) {
  auto r = parse_role(text::trim(text));
  if (!r) throw ParseError("unknown role '" + std::string(text::trim(text)) + "'", line);
  return *r;
}

TemplateRequirement parse_requirement(std::string_view text, std::size_t line) {
  TemplateRequirement req;
  std::size_t op = text.find("!=");
  std::size_t op_len = 2;
  if (op != std::string_view::npos) {
    req.kind = TokenEnv::Fact::Kind::distinct;
  } else {
    op = text.find('=');
    op_len = 1;
    if (op == std::string_view::npos) throw ParseError("requirement without '='", line);
  }
  req.lhs = parse_role_or_throw(text.substr(0, op), line);
  std::string_view rhs = text.substr(op + op_len);
  std::size_t pos = 0;
  while (true) {
    std::size_t e = rhs.find(" else ", pos);
    req.rhs.push_back(parse_role_or_throw(rhs.substr(pos, e - pos), line));
    if (e == std::string_view::npos) break;
    pos = e + 6;
  }
  return req;
}

std::string link_list(const std::set<LinkType>& links) {
  std::vector<std::string> parts;
  for (LinkType l : links) parts.push_back(std::to_string(static_cast<int>(l)));
  return text::join(parts, ",");
}

std::string pad(std::string s, std::size_t width) {
  // Pads by code points so that "∨" and friends do not skew columns.
  std::size_t cps = 0;
  for (unsigned char c : s) cps += (c & 0xC0) != 0x80;
  if (cps < width) s.append(width - cps, ' ');
  return s;
}

std::string render_template(const ConstraintRule& rule) {
  std::string lhs_prefix = rule.main_clause ? "sub-clause:SEM:" : "";
  bool simple = std::all_of(rule.alternatives.begin(), rule.alternatives.end(), [&](const Alternative& a) {
    return a.size() == 1 && a[0].kind == TokenEnv::Fact::Kind::identity &&
           a[0].lhs == rule.alternatives[0][0].lhs;
  });
  if (simple) {
    const auto& first = rule.alternatives[0][0];
    std::string out = lhs_prefix + std::string(to_string(first.lhs));
    if (first.rhs.size() > 1) {
      // Conditional fallback chain.
      for (std::size_t i = 0; i < first.rhs.size(); ++i) {
        std::string role(to_string(first.rhs[i]));
        out += " = " + role;
        out += i + 1 < first.rhs.size() ? " : if " + role + " exists," : " : otherwise";
      }
      return out;
    }
    std::vector<std::string> rhs;
    for (const auto& a : rule.alternatives) rhs.emplace_back(to_string(a[0].rhs[0]));
    return out + " = " + text::join(rhs, " ∨ ");
  }
  std::vector<std::string> alts;
  for (const auto& a : rule.alternatives) {
    std::vector<std::string> reqs;
    for (const auto& r : a) {
      std::vector<std::string> rhs;
      for (Role x : r.rhs) rhs.emplace_back(to_string(x));
      reqs.push_back(lhs_prefix + std::string(to_string(r.lhs)) +
                     (r.kind == TokenEnv::Fact::Kind::identity ? " = " : " ≠ ") +
                     text::join(rhs, " else "));
    }
    alts.push_back(text::join(reqs, " ∧ "));
  }
  return text::join(alts, " ∨ ");
}

}  // namespace

std::string_view to_string(Pattern p) {
  for (const auto& n : kPatterns) {
    if (n.pattern == p) return n.key;
  }
  return "?";
}

std::optional<Pattern> parse_pattern(std::string_view text) {
  for (const auto& n : kPatterns) {
    if (n.key == text) return n.pattern;
  }
  return std::nullopt;
}

std::optional<MainClass> main_class_of(const PredicateAnalysis& pred) {
  if (pred.stem.has_flag("action")) return MainClass::action;
  if (pred.stem.has_flag("state")) return MainClass::state;
  return std::nullopt;
}

bool ConstraintRule::applies(LinkType link, Pattern pattern) const {
  return std::any_of(rows.begin(), rows.end(), [&](const Applicability& row) {
    return row.links.contains(link) &&
           std::find(row.patterns.begin(), row.patterns.end(), pattern) != row.patterns.end();
  });
}

RuleTable RuleTable::parse(std::string_view text) {
  RuleTable table;
  std::size_t line_no = 0;
  for (auto line : text::lines(text)) {
    ++line_no;
    if (text::trim(line).empty() || text::trim(line).front() == '#') continue;
    auto cols = text::split(line, '\t');
    if (cols.size() < 3 || cols.size() > 4) throw ParseError("expected 3 or 4 columns", line_no);

    std::string name(text::trim(cols[0]));
    if (name.empty()) throw ParseError("empty rule name", line_no);
    Applicability row;
    row.links = parse_links(cols[1], line_no);
    for (auto p : text::split(cols[2], ',')) {
      auto pattern = parse_pattern(text::trim(p));
      if (!pattern) throw ParseError("unknown pattern '" + std::string(text::trim(p)) + "'", line_no);
      row.patterns.push_back(*pattern);
    }
    bool main = std::all_of(row.patterns.begin(), row.patterns.end(), is_main_pattern);
    if (!main && std::any_of(row.patterns.begin(), row.patterns.end(), is_main_pattern)) {
      throw ParseError("rule mixes clause patterns with main-clause classes", line_no);
    }

    std::string_view tmpl = cols.size() == 4 ? text::trim(cols[3]) : std::string_view{};
    if (tmpl.empty()) {
      if (table.rules_.empty() || table.rules_.back().name != name) {
        throw ParseError("continuation row for '" + name + "' does not follow its rule", line_no);
      }
      if (table.rules_.back().main_clause != main) {
        throw ParseError("continuation row changes clause side", line_no);
      }
      table.rules_.back().rows.push_back(std::move(row));
      continue;
    }
    if (table.find(name) != nullptr) throw ParseError("duplicate rule '" + name + "'", line_no);

    ConstraintRule rule;
    rule.name = name;
    rule.main_clause = main;
    rule.rows.push_back(std::move(row));
    for (auto alt_text : text::split(tmpl, '|')) {
      Alternative alt;
      for (auto req : text::split(alt_text, '&')) {
        if (text::trim(req).empty()) throw ParseError("empty requirement", line_no);
        if (req.find('=') == std::string_view::npos && !rule.alternatives.empty()) {
          // "a = b | c" abbreviates "a = b | a = c".
          TemplateRequirement r = rule.alternatives.back().front();
          r.rhs = {parse_role_or_throw(req, line_no)};
          alt.push_back(std::move(r));
          continue;
        }
        alt.push_back(parse_requirement(req, line_no));
      }
      rule.alternatives.push_back(std::move(alt));
    }
    table.rules_.push_back(std::move(rule));
  }
  return table;
}

RuleTable RuleTable::load(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw Error("cannot open rule table " + file.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse(buf.str());
}

const RuleTable& RuleTable::builtin() {
  static const RuleTable kTable = parse(data::builtin_rules());
  return kTable;
}

const ConstraintRule* RuleTable::find(std::string_view name) const {
  for (const auto& r : rules_) {
    if (r.name == name) return &r;
  }
  return nullptr;
}

std::string RuleTable::render() const {
  std::ostringstream os;
  auto section = [&](bool main, std::string_view title, std::string_view column) {
    os << title << '\n';
    os << pad("name", 4) << " | " << pad("type", 5) << " | " << column << '\n';
    for (const auto& rule : rules_) {
      if (rule.main_clause != main) continue;
      bool first_line = true;
      for (const auto& row : rule.rows) {
        bool first_in_row = true;
        for (Pattern p : row.patterns) {
          os << pad(first_line ? rule.name : "", 4) << " | "
             << pad(first_in_row ? link_list(row.links) : "", 5) << " | " << phrase(p) << '\n';
          first_line = false;
          first_in_row = false;
        }
      }
      os << pad("", 4) << " | constraint: " << render_template(rule) << '\n';
    }
  };
  section(false, "Constraints in Subordinate Clause", "predicate");
  os << '\n';
  section(true, "Constraints in Main Clause", "predicate category");
  return os.str();
}

std::optional<Pattern> sub_pattern_of(const PredicateAnalysis& pred) {
  switch (pred.category) {
    case Category::non_subjective: return std::nullopt;
    case Category::subjective_verb: return Pattern::subjective_verb;
    case Category::subjective_adjective: return Pattern::subjective_adjective;
    case Category::subjective_adjective_garu: return Pattern::subjective_adjective_garu;
    case Category::verb_ta_garu: return Pattern::verb_ta_garu;
    case Category::passive:
      return pred.passive == Passive::intransitive ? Pattern::intransitive_passive
                                                   : Pattern::transitive_passive;
  }
  return std::nullopt;
}

const ConstraintRule* select_sub_rule(const RuleTable& table, Category category, Passive passive,
                                      LinkType link) {
  PredicateAnalysis probe;
  probe.category = category;
  probe.passive = passive;
  return select_sub_rule(table, probe, link);
}

const ConstraintRule* select_sub_rule(const RuleTable& table, const PredicateAnalysis& pred,
                                      LinkType link) {
  if (link == LinkType::temporal) throw std::invalid_argument("temporal links carry no rule");
  auto pattern = sub_pattern_of(pred);
  if (!pattern) return nullptr;
  for (const auto& rule : table.rules()) {
    if (!rule.main_clause && rule.applies(link, *pattern)) return &rule;
  }
  return nullptr;
}

const ConstraintRule& select_main_rule(const RuleTable& table, LinkType link, MainClass cls) {
  if (link == LinkType::temporal) throw std::invalid_argument("temporal links carry no rule");
  Pattern pattern = cls == MainClass::action ? Pattern::action : Pattern::state;
  for (const auto& rule : table.rules()) {
    if (rule.main_clause && rule.applies(link, pattern)) return rule;
  }
  throw UnsupportedMainClass("no main-clause rule for " + std::string(to_string(pattern)));
}

const ConstraintRule& select_main_rule(const RuleTable& table, LinkType link,
                                       const PredicateAnalysis& main) {
  auto cls = main_class_of(main);
  if (!cls) {
    throw UnsupportedMainClass("main predicate '" + main.stem.surface +
                               "' is neither an action nor a state*");
  }
  return select_main_rule(table, link, *cls);
}

std::vector<EnvDelta> emit_constraints(const ConstraintRule& rule, const ClauseSem& sub,
                                       const ClauseSem& main, const Token& motivated) {
  if (rule.name == "S3" && (sub.pred.directional || main.pred.directional)) {
    throw UnsupportedConstruction("S3 with a directional auxiliary (yaru/kureru) is not analyzed");
  }
  const ClauseSem& clause = rule.main_clause ? main : sub;

  auto resolve = [&](Role r) -> std::optional<Term> {
    if (r == Role::motivated) return Term{motivated};
    if (const Term* t = clause.role(r)) return *t;
    return std::nullopt;
  };

  std::vector<EnvDelta> out;
  for (std::size_t i = 0; i < rule.alternatives.size(); ++i) {
    EnvDelta delta;
    delta.rules = {rule.name};
    delta.alternative = i;
    bool binds_observer = false;
    for (const auto& req : rule.alternatives[i]) {
      auto lhs = resolve(req.lhs);
      if (!lhs) throw RuleRoleMissing(rule.name + ": clause has no " + std::string(to_string(req.lhs)));
      std::optional<Term> rhs;
      for (Role r : req.rhs) {
        if ((rhs = resolve(r))) {
          binds_observer = binds_observer || r == Role::observer;
          break;
        }
      }
      if (!rhs) {
        throw RuleRoleMissing(rule.name + ": clause has no " + std::string(to_string(req.rhs.front())));
      }
      binds_observer = binds_observer || req.lhs == Role::observer;
      delta.requirements.push_back({req.kind, *lhs, *rhs});
    }
    if (clause.observer_optional && !binds_observer) {
      if (const Term* o = clause.role(Role::observer)) {
        if (const auto* tok = std::get_if<Token>(o)) delta.absent.push_back(*tok);
      }
    }
    out.push_back(std::move(delta));
  }
  return out;
}

std::vector<EnvDelta> combine(const std::vector<std::vector<EnvDelta>>& per_rule) {
  std::vector<EnvDelta> acc(1);
  for (const auto& options : per_rule) {
    if (options.empty()) continue;
    std::vector<EnvDelta> next;
    for (const auto& base : acc) {
      for (const auto& opt : options) {
        EnvDelta d = base;
        d.alternative = base.alternative * options.size() + opt.alternative;
        d.rules.insert(d.rules.end(), opt.rules.begin(), opt.rules.end());
        d.requirements.insert(d.requirements.end(), opt.requirements.begin(), opt.requirements.end());
        d.absent.insert(d.absent.end(), opt.absent.begin(), opt.absent.end());
        next.push_back(std::move(d));
      }
    }
    acc = std::move(next);
  }
  return acc;
}

namespace {

bool is_filler_of(const ClauseSem& clause, const Term& t) {
  for (const auto& [_, filler] : clause.roles) {
    if (filler == t) return true;
  }
  return false;
}

}  // namespace

bool is_local(const ConstraintRule& rule, const EnvDelta& delta, const ClauseSem& sub,
              const ClauseSem& main, const Token& motivated) {
  const Term mot{motivated};
  for (const auto& req : delta.requirements) {
    if (rule.main_clause) {
      bool ok = (req.lhs == mot && is_filler_of(main, req.rhs)) ||
                (req.rhs == mot && is_filler_of(main, req.lhs));
      if (!ok) return false;
    } else {
      for (const Term* t : {&req.lhs, &req.rhs}) {
        if (*t != mot && !is_filler_of(sub, *t)) return false;
      }
    }
  }
  return true;
}

TokenEnv apply(const EnvDelta& delta, const TokenEnv& env) {
  TokenEnv out = env;
  for (const auto& req : delta.requirements) {
    out = req.kind == TokenEnv::Fact::Kind::identity ? out.add_identity(req.lhs, req.rhs)
                                                     : out.add_distinct(req.lhs, req.rhs);
  }
  return out;
}

}  // namespace jzero
