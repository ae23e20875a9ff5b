#include "jzero/sem_builder.hpp"

#include <algorithm>
#include <set>

#include "jzero/errors.hpp"

namespace jzero {

void DiscourseContext::validate() const {
  if (speaker.empty()) throw Error("context has no speaker");
  std::set<std::string> seen;
  for (const auto& e : entities) {
    if (e.empty()) throw Error("empty entity name");
    if (!seen.insert(e).second) throw Error("duplicate entity '" + e + "'");
  }
  if (topic && !seen.contains(*topic)) throw Error("topic '" + *topic + "' is not an entity");
}

std::vector<std::string> DiscourseContext::candidates() const {
  std::vector<std::string> out;
  auto add = [&](const std::string& e) {
    if (std::find(out.begin(), out.end(), e) == out.end()) out.push_back(e);
  };
  if (topic && std::find(entities.begin(), entities.end(), *topic) == entities.end()) add(*topic);
  for (const auto& e : entities) add(e);
  if (speaker_candidate) add(speaker);
  return out;
}

namespace {

using Features = FeatureStructure::Features;

FeatureStructure term_fs(const Term& t) {
  if (const auto* tok = std::get_if<Token>(&t)) return FeatureStructure::token(*tok);
  return FeatureStructure::atom(std::get<Atom>(t).symbol);
}

void add_tense(Features& f, const PredicateAnalysis& pred) {
  f.emplace(feat::tense, FeatureStructure::atom(pred.tense == Tense::past ? "past" : "present"));
  if (pred.polarity == Polarity::negative) {
    f.emplace(feat::polarity, FeatureStructure::atom("negative"));
  }
}

bool subcategorizes(const LexEntry& e, Role r) {
  for (const auto& slot : e.roles) {
    if (slot.role == r) return true;
    for (Role a : slot.aliases) {
      if (a == r) return true;
    }
  }
  return false;
}

class ClauseAssembler {
 public:
  ClauseAssembler(const PredicateAnalysis& pred, TokenFactory& tokens) : tokens_(tokens) {
    sem_.pred = pred;
  }

  // The filler for a role: overt atom if given, otherwise a fresh zero.
  Term fill(Role r, const std::map<Role, std::string>& overt) {
    if (auto it = overt.find(r); it != overt.end()) {
      Term t = Atom{it->second};
      sem_.roles.emplace(r, t);
      return t;
    }
    return introduce(r);
  }

  Term introduce(Role r) {
    Token t = tokens_.fresh(std::string(abbreviation(r)));
    sem_.zeros.emplace(r, t);
    sem_.roles.emplace(r, t);
    return t;
  }

  void alias(Role r, const Term& t) { sem_.roles.emplace(r, t); }

  // The base soa: rel plus every subcategorized slot.
  Features slots(const std::map<Role, std::string>& overt, const std::string& rel) {
    Features f;
    f.emplace(feat::rel, FeatureStructure::atom(rel));
    for (const auto& slot : sem_.pred.stem.roles) {
      Term t = fill(slot.role, overt);
      f.emplace(std::string(to_string(slot.role)), term_fs(t));
      for (Role a : slot.aliases) {
        alias(a, t);
        f.emplace(std::string(to_string(a)), term_fs(t));
      }
    }
    return f;
  }

  ClauseSem& sem() { return sem_; }

 private:
  TokenFactory& tokens_;
  ClauseSem sem_;
};

void check_overt(const LexEntry& stem, const std::map<Role, std::string>& overt) {
  for (const auto& [role, _] : overt) {
    if (!subcategorizes(stem, role)) {
      throw BuildError("'" + stem.surface + "' does not take a " + std::string(to_string(role)));
    }
  }
}

}  // namespace

Built build_clause_sem(const PredicateAnalysis& pred, const std::map<Role, std::string>& overt,
                       TokenFactory& tokens, const TokenEnv& env) {
  if (pred.passive != Passive::none) {
    std::optional<Argument> subject;
    std::map<Role, std::string> rest = overt;
    Role subject_role = pred.passive == Passive::intransitive ? Role::affected
                        : pred.stem.roles.size() > 1      ? pred.stem.roles[1].role
                                                          : Role::patient;
    if (auto it = rest.find(subject_role); it != rest.end()) {
      subject = Argument{{}, it->second, "ga", std::nullopt, false};
      rest.erase(it);
    }
    return build_passive_sem(pred, subject, rest, tokens, env);
  }
  const int category = static_cast<int>(pred.category);
  if (category < 1 || category > 6) throw BuildError("invalid predicate category");
  check_overt(pred.stem, overt);

  ClauseAssembler as(pred, tokens);
  TokenEnv out = env;
  const auto& stem = pred.stem;

  if (pred.has_ta_garu) {
    // {rel: V-tai, experiencer: e, soa: {rel: V, <subject>: e, ...}}
    if (stem.roles.empty()) throw BuildError("'" + stem.surface + "' lists no roles");
    Role wanter = stem.roles.front().role;
    Term e = Atom{};
    if (auto it = overt.find(wanter); it != overt.end()) {
      e = Atom{it->second};
      as.alias(Role::experiencer, e);
    } else {
      e = as.introduce(Role::experiencer);
    }
    as.alias(wanter, e);
    std::map<Role, std::string> rest = overt;
    rest.erase(wanter);
    Features inner;
    inner.emplace(feat::rel, FeatureStructure::atom(stem.rel()));
    for (const auto& slot : stem.roles) {
      Term t = slot.role == wanter ? e : as.fill(slot.role, rest);
      inner.emplace(std::string(to_string(slot.role)), term_fs(t));
      for (Role a : slot.aliases) {
        as.alias(a, t);
        inner.emplace(std::string(to_string(a)), term_fs(t));
      }
    }
    Features desire;
    desire.emplace(feat::rel, FeatureStructure::atom(stem.rel() + "-tai"));
    desire.emplace("experiencer", term_fs(e));
    desire.emplace(feat::soa, FeatureStructure::complex(std::move(inner)));
    add_tense(desire, pred);
    as.sem().fs = FeatureStructure::complex(std::move(desire));
    as.sem().subject = Role::experiencer;
  } else {
    Features base = as.slots(overt, stem.rel());
    add_tense(base, pred);
    as.sem().subject = stem.roles.empty() ? Role::agent : stem.roles.front().role;
    if (pred.category == Category::subjective_verb) {
      Term o = as.introduce(Role::observer);
      base.emplace(feat::observer, term_fs(o));
      as.sem().observer_optional = true;
    }
    as.sem().fs = FeatureStructure::complex(std::move(base));
  }

  if (pred.has_garu || pred.has_ta_garu) {
    const Term* e = as.sem().role(Role::experiencer);
    if (e == nullptr) throw BuildError("garu clause without an experiencer");
    Term experiencer = *e;
    Term o = as.introduce(Role::observer);
    Features wrap;
    wrap.emplace(feat::rel, FeatureStructure::atom("garu"));
    wrap.emplace(feat::observer, term_fs(o));
    wrap.emplace(feat::soa, as.sem().fs);
    as.sem().fs = FeatureStructure::complex(std::move(wrap));
    out = out.add_distinct(o, experiencer);
  }
  return {std::move(as.sem()), std::move(out)};
}

Built build_passive_sem(const PredicateAnalysis& pred, const std::optional<Argument>& subject,
                        const std::map<Role, std::string>& overt, TokenFactory& tokens,
                        const TokenEnv& env) {
  if (pred.stem.pos != Pos::verb) {
    throw BuildError("passive of non-verb stem '" + pred.stem.surface + "'");
  }
  if (pred.passive == Passive::none) throw BuildError("'" + pred.stem.surface + "' is not passive");
  check_overt(pred.stem, overt);

  ClauseAssembler as(pred, tokens);
  std::map<Role, std::string> fillers = overt;
  bool with_affected = false;
  Role subject_role = Role::affected;

  if (pred.passive == Passive::intransitive) {
    // The surface subject is the adversely affected person.
    with_affected = true;
  } else {
    // Transitive: the surface subject is the base verb's second argument.
    subject_role = pred.stem.roles.size() > 1 ? pred.stem.roles[1].role : Role::patient;
    if (subject) {
      fillers[subject_role] = subject->value;
      with_affected =
          subject->head && (subject->head->is_relational() || subject->head->is_possessable());
    }
  }

  Features f = as.slots(fillers, pred.stem.rel());
  if (with_affected) {
    Term a = Atom{};
    if (pred.passive == Passive::intransitive && subject) {
      a = Atom{subject->value};
      as.alias(Role::affected, a);
    } else {
      a = as.introduce(Role::affected);
    }
    f.emplace("affected", term_fs(a));
  }
  add_tense(f, pred);
  as.sem().fs = FeatureStructure::complex(std::move(f));
  as.sem().subject = subject_role;
  return {std::move(as.sem()), env};
}

Built build_from_clause(const ClauseUnit& clause, TokenFactory& tokens, const TokenEnv& env,
                        std::vector<std::string>* unattached) {
  const PredicateAnalysis& pred = clause.analysis;
  const auto& slots = pred.stem.roles;
  std::map<Role, std::string> overt;
  std::optional<Argument> passive_subject;

  auto object_slot = [&]() -> std::optional<Role> {
    for (std::size_t i = 1; i < slots.size(); ++i) {
      if (slots[i].role == Role::object || slots[i].role == Role::patient) return slots[i].role;
    }
    return std::nullopt;
  };
  auto reject = [&](const Argument& a) {
    if (unattached) unattached->push_back(a.value + " " + a.particle);
  };

  for (const auto& arg : clause.args) {
    std::optional<Role> role;
    if (pred.passive == Passive::none) {
      if (arg.particle == "ga" && !slots.empty()) role = slots.front().role;
      if (arg.particle == "o" || arg.particle == "wo") role = object_slot();
    } else if (arg.particle == "ga") {
      passive_subject = arg;
      continue;
    } else if (arg.particle == "ni" && !slots.empty()) {
      role = slots.front().role;
    }
    if (!role || overt.contains(*role)) {
      reject(arg);
      continue;
    }
    overt.emplace(*role, arg.value);
  }

  if (pred.passive != Passive::none) {
    return build_passive_sem(pred, passive_subject, overt, tokens, env);
  }
  return build_clause_sem(pred, overt, tokens, env);
}

TokenEnv apply_sentence_final_rules(const ClauseSem& sem, bool is_sentence_final,
                                    const DiscourseContext& ctx, const TokenEnv& env) {
  if (!is_sentence_final) return env;
  const Atom speaker{ctx.speaker};
  if (sem.pred.has_garu || sem.pred.has_ta_garu) {
    const Term* o = sem.role(Role::observer);
    if (o == nullptr) throw BuildError("garu clause without an observer");
    return env.add_identity(*o, speaker);
  }
  if (sem.pred.category == Category::subjective_adjective) {
    const Term* e = sem.role(Role::experiencer);
    if (e == nullptr) throw BuildError("subjective adjective without an experiencer");
    return env.add_identity(*e, speaker);
  }
  return env;
}

ComplexSem build_complex_sem(const ClauseSem& sub, LinkType link, const std::string& conjunct,
                             const ClauseSem& main, TokenFactory& tokens) {
  ComplexSem out{FeatureStructure{}, std::nullopt, sub};
  Features wrapper;
  wrapper.emplace(feat::rel, FeatureStructure::atom(conjunct));
  if (link != LinkType::temporal) {
    Token m = tokens.fresh(std::string(abbreviation(Role::motivated)));
    out.motivated = m;
    wrapper.emplace(feat::motivated, FeatureStructure::token(m));
    bool needs_observer = sub.pred.category == Category::subjective_adjective &&
                          (link == LinkType::concession || link == LinkType::conditional) &&
                          sub.role(Role::observer) == nullptr;
    if (needs_observer) {
      Token o = tokens.fresh(std::string(abbreviation(Role::observer)));
      out.sub.zeros.emplace(Role::observer, o);
      out.sub.roles.emplace(Role::observer, o);
      out.sub.observer_optional = true;
      wrapper.emplace(feat::observer, FeatureStructure::token(o));
    }
  }
  wrapper.emplace(feat::soa, sub.fs);

  Features top;
  top.emplace(feat::matrix_sem, main.fs);
  top.emplace(feat::sub_sem, FeatureStructure::complex(std::move(wrapper)));
  out.fs = FeatureStructure::complex(std::move(top));
  return out;
}

Built attach_vp_conjunct(const ClauseSem& vp, const std::string& conjunct, const ClauseSem& host,
                         const TokenEnv& env) {
  const Term* vp_subject = vp.role(vp.subject);
  const Term* host_subject = host.role(host.subject);
  if (vp_subject == nullptr || host_subject == nullptr) {
    throw BuildError("VP conjunct control needs a subject on both sides");
  }
  ClauseSem out = host;
  Features conj;
  conj.emplace(feat::rel, FeatureStructure::atom(conjunct));
  conj.emplace(feat::soa, vp.fs);
  out.fs = host.fs.with(feat::conjunct, FeatureStructure::complex(std::move(conj)));
  return {std::move(out), env.add_identity(*vp_subject, *host_subject)};
}

}  // namespace jzero
