#include "jzero/constraints.hpp"

#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "jzero/errors.hpp"
#include "jzero/segment.hpp"

namespace jzero {
namespace {

PredicateAnalysis pred(std::string_view text) {
  auto ms = tokenize(text);
  return analyze_predicate(ms, Lexicon::builtin());
}

const RuleTable& table() { return RuleTable::builtin(); }

// The selection conditions written out independently of the data file.
std::string expected_sub_rule(Category c, Passive p, LinkType link) {
  int cat = static_cast<int>(c);
  int l = static_cast<int>(link);
  if ((cat == 4 || cat == 5) && (l == 1 || l == 3)) return "S1";
  if (((cat == 4 || cat == 5) && l == 2) || cat == 2) return "S2";
  if (cat == 3 && l == 1) return "S3";
  if (cat == 3) return "S4";
  if (cat == 6 && p == Passive::intransitive) return "S5";
  if (cat == 6 && p == Passive::transitive) return "S6";
  return "";
}

TEST(ConstraintsTest, SubRuleSelectionIsExhaustivelyAsSpecified) {
  struct Case {
    Category c;
    Passive p;
  };
  const Case cases[] = {{Category::non_subjective, Passive::none},
                        {Category::subjective_verb, Passive::none},
                        {Category::subjective_adjective, Passive::none},
                        {Category::subjective_adjective_garu, Passive::none},
                        {Category::verb_ta_garu, Passive::none},
                        {Category::passive, Passive::intransitive},
                        {Category::passive, Passive::transitive}};
  int checked = 0;
  for (const auto& c : cases) {
    for (LinkType link : {LinkType::cause, LinkType::concession, LinkType::conditional}) {
      const ConstraintRule* rule = select_sub_rule(table(), c.c, c.p, link);
      std::string got = rule ? rule->name : "";
      EXPECT_EQ(got, expected_sub_rule(c.c, c.p, link))
          << "category " << static_cast<int>(c.c) << " link " << static_cast<int>(link);
      ++checked;
    }
  }
  EXPECT_EQ(checked, 21);
  EXPECT_THROW((void)select_sub_rule(table(), Category::subjective_verb, Passive::none, LinkType::temporal),
               std::invalid_argument);
}

TEST(ConstraintsTest, MainRuleSelection) {
  for (LinkType link : {LinkType::cause, LinkType::concession, LinkType::conditional}) {
    EXPECT_EQ(select_main_rule(table(), link, MainClass::action).name, "M1");
    EXPECT_EQ(select_main_rule(table(), link, MainClass::state).name, "M2");
  }
  EXPECT_EQ(select_main_rule(table(), LinkType::cause, pred("okor are ta")).name, "M1");
  EXPECT_EQ(select_main_rule(table(), LinkType::cause, pred("komaru")).name, "M2");
  EXPECT_THROW((void)select_main_rule(table(), LinkType::cause, pred("sin ta")), UnsupportedMainClass);
  EXPECT_THROW((void)select_main_rule(table(), LinkType::cause, pred("samu i")), UnsupportedMainClass);
}

struct Pair {
  ClauseSem sub;
  ClauseSem main;
  Token motivated;
  TokenEnv env;
};

Pair build(std::string_view sub_text, std::string_view main_text, LinkType link) {
  TokenFactory tokens;
  Built sub = build_clause_sem(pred(sub_text), {}, tokens, TokenEnv{});
  Built main = build_clause_sem(pred(main_text), {}, tokens, sub.env);
  ComplexSem c = build_complex_sem(sub.sem, link, "node", main.sem, tokens);
  return {c.sub, main.sem, *c.motivated, main.env};
}

TEST(ConstraintsTest, AlternativeCounts) {
  struct Case {
    std::string_view sub;
    LinkType link;
    std::string_view rule;
    std::size_t count;
  };
  const Case cases[] = {{"samu gat ta", LinkType::cause, "S1", 1},
                        {"samu gat ta", LinkType::concession, "S2", 2},
                        {"komaru", LinkType::cause, "S2", 2},
                        {"atui", LinkType::cause, "S3", 1},
                        {"atui", LinkType::concession, "S4", 2},
                        {"sin are ta", LinkType::cause, "S5", 1},
                        {"yar are ta", LinkType::cause, "S6", 1}};
  for (const auto& c : cases) {
    Pair p = build(c.sub, "sime ta", c.link);
    const ConstraintRule* rule = select_sub_rule(table(), p.sub.pred, c.link);
    ASSERT_NE(rule, nullptr) << c.sub;
    EXPECT_EQ(rule->name, c.rule);
    EXPECT_EQ(emit_constraints(*rule, p.sub, p.main, p.motivated).size(), c.count) << c.sub;
  }
  Pair p = build("samu gat ta", "komaru", LinkType::cause);
  EXPECT_EQ(emit_constraints(*table().find("M1"), p.sub, build("samu gat ta", "sime ta", LinkType::cause).main,
                             p.motivated)
                .size(),
            1u);
  EXPECT_EQ(emit_constraints(*table().find("M2"), p.sub, p.main, p.motivated).size(), 1u);
}

TEST(ConstraintsTest, S1BindsMotivatedToObserver) {
  Pair p = build("samu gat ta", "sime ta", LinkType::cause);
  auto deltas = emit_constraints(*table().find("S1"), p.sub, p.main, p.motivated);
  ASSERT_EQ(deltas.size(), 1u);
  ASSERT_EQ(deltas[0].requirements.size(), 1u);
  EXPECT_EQ(deltas[0].requirements[0].lhs, Term{p.motivated});
  EXPECT_EQ(deltas[0].requirements[0].rhs, *p.sub.role(Role::observer));
}

TEST(ConstraintsTest, SubjectiveVerbObserverIsAbsentWhenUnbound) {
  Pair p = build("komaru", "sime ta", LinkType::cause);
  auto deltas = emit_constraints(*table().find("S2"), p.sub, p.main, p.motivated);
  ASSERT_EQ(deltas.size(), 2u);
  EXPECT_TRUE(deltas[0].absent.empty());
  ASSERT_EQ(deltas[1].absent.size(), 1u);
  EXPECT_EQ(Term{deltas[1].absent[0]}, *p.sub.role(Role::observer));
}

TEST(ConstraintsTest, S6FallsBackToPatient) {
  TokenFactory tokens;
  Built sub = build_passive_sem(pred("nusum are ta"), std::nullopt, {}, tokens, TokenEnv{});
  Built main = build_clause_sem(pred("sime ta"), {}, tokens, sub.env);
  ComplexSem c = build_complex_sem(sub.sem, LinkType::cause, "node", main.sem, tokens);
  auto deltas = emit_constraints(*table().find("S6"), c.sub, main.sem, *c.motivated);
  ASSERT_EQ(deltas.size(), 1u);
  EXPECT_EQ(deltas[0].requirements[0].rhs, *c.sub.role(Role::patient));

  TokenFactory tokens2;
  Built henchman = build_from_clause(segment("kobun ga yar are ta", Lexicon::builtin()).main_clause,
                                     tokens2, TokenEnv{});
  Built main2 = build_clause_sem(pred("sime ta"), {}, tokens2, henchman.env);
  ComplexSem c2 = build_complex_sem(henchman.sem, LinkType::cause, "node", main2.sem, tokens2);
  ASSERT_NE(c2.sub.role(Role::affected), nullptr);
  auto d2 = emit_constraints(*table().find("S6"), c2.sub, main2.sem, *c2.motivated);
  EXPECT_EQ(d2[0].requirements[0].rhs, *c2.sub.role(Role::affected));
}

TEST(ConstraintsTest, MissingRoleIsReported) {
  Pair p = build("samu gat ta", "sime ta", LinkType::cause);
  EXPECT_THROW((void)emit_constraints(*table().find("M2"), p.sub, p.main, p.motivated), RuleRoleMissing);
}

TEST(ConstraintsTest, S3GuardRejectsDirectionals) {
  Pair p = build("atui", "sime te yat ta", LinkType::cause);
  EXPECT_THROW((void)emit_constraints(*table().find("S3"), p.sub, p.main, p.motivated),
               UnsupportedConstruction);
}

TEST(ConstraintsTest, CombineIsAMixedRadixProduct) {
  auto d = [](std::string rule, std::size_t alt) {
    EnvDelta e;
    e.rules = {rule};
    e.alternative = alt;
    return e;
  };
  auto out = combine({{d("S2", 0), d("S2", 1)}, {d("M1", 0)}, {d("S4", 0), d("S4", 1)}});
  ASSERT_EQ(out.size(), 4u);
  for (std::size_t i = 0; i < out.size(); ++i) {
    EXPECT_EQ(out[i].alternative, i);
    EXPECT_EQ(out[i].rules, (std::vector<std::string>{"S2", "M1", "S4"}));
  }
  EXPECT_EQ(combine({}).size(), 1u);
}

TEST(ConstraintsTest, LocalityHoldsForEmittedDeltas) {
  for (auto sub : {"samu gat ta", "komaru", "atui", "sin are ta", "yar are ta", "nokori ta gat ta"}) {
    for (LinkType link : {LinkType::cause, LinkType::concession, LinkType::conditional}) {
      Pair p = build(sub, "sime ta", link);
      const ConstraintRule* s = select_sub_rule(table(), p.sub.pred, link);
      ASSERT_NE(s, nullptr);
      for (const auto& delta : emit_constraints(*s, p.sub, p.main, p.motivated)) {
        EXPECT_TRUE(is_local(*s, delta, p.sub, p.main, p.motivated));
        EXPECT_FALSE(is_local(*table().find("M1"), delta, p.sub, p.main, p.motivated));
      }
      const ConstraintRule& m = *table().find("M1");
      for (const auto& delta : emit_constraints(m, p.sub, p.main, p.motivated)) {
        EXPECT_TRUE(is_local(m, delta, p.sub, p.main, p.motivated));
      }
    }
  }
}

TEST(ConstraintsTest, ApplyThreadsRequirements) {
  Pair p = build("samu gat ta", "sime ta", LinkType::cause);
  auto s1 = emit_constraints(*table().find("S1"), p.sub, p.main, p.motivated);
  auto m1 = emit_constraints(*table().find("M1"), p.sub, p.main, p.motivated);
  TokenEnv env = apply(combine({s1, m1})[0], p.env);
  EXPECT_TRUE(env.same_class(*p.main.role(Role::agent), *p.sub.role(Role::observer)));
  EXPECT_THROW((void)env.add_identity(*p.main.role(Role::agent), *p.sub.role(Role::experiencer)),
               Inconsistent);
}

TEST(RuleTableTest, RendersLikeThePrintedTables) {
  std::ifstream in(JZERO_TEST_DATA_DIR "/rule_tables.golden");
  ASSERT_TRUE(in) << "missing golden file";
  std::stringstream golden;
  golden << in.rdbuf();
  EXPECT_EQ(table().render(), golden.str());
}

TEST(RuleTableTest, LoadsFromFileLikeTheBuiltin) {
  RuleTable t = RuleTable::load(JZERO_DATA_DIR "/rules.tsv");
  EXPECT_EQ(t.render(), table().render());
}

TEST(RuleTableTest, ParseErrors) {
  auto line_of = [](std::string_view text) -> std::size_t {
    try {
      (void)RuleTable::parse(text);
    } catch (const ParseError& e) {
      return e.line();
    }
    return 0;
  };
  EXPECT_EQ(line_of("S1\t1\tsubjective-verb\tmotivated = hero\n"), 1u);
  EXPECT_EQ(line_of("# c\nS1\t5\tsubjective-verb\tmotivated = observer\n"), 2u);
  EXPECT_EQ(line_of("S1\t1\tnoun\tmotivated = observer\n"), 1u);
  EXPECT_EQ(line_of("S1\t1\tsubjective-verb\n"), 1u);
  EXPECT_EQ(line_of("S1\t1\taction, subjective-verb\tmotivated = agent\n"), 1u);
  EXPECT_EQ(line_of("S1\t1\tsubjective-verb\tmotivated = observer\nS1\t2\taction\tmotivated = agent\n"), 2u);
  EXPECT_EQ(line_of("S1\t1\tsubjective-verb\tmotivated observer\n"), 1u);
}

TEST(RuleTableTest, DistinctnessAndConjunctions) {
  RuleTable t = RuleTable::parse("X\t1\tsubjective-verb\tmotivated = observer & experiencer != observer\n");
  const ConstraintRule* x = t.find("X");
  ASSERT_NE(x, nullptr);
  ASSERT_EQ(x->alternatives.size(), 1u);
  ASSERT_EQ(x->alternatives[0].size(), 2u);
  EXPECT_EQ(x->alternatives[0][1].kind, TokenEnv::Fact::Kind::distinct);
  EXPECT_EQ(x->alternatives[0][1].lhs, Role::experiencer);
}

}  // namespace
}  // namespace jzero
