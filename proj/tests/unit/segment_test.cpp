#include "jzero/segment.hpp"

#include <gtest/gtest.h>

#include "jzero/errors.hpp"

namespace jzero {
namespace {

ClauseSplit split(std::string_view s) { return segment(s, Lexicon::builtin()); }

TEST(SegmentTest, TokenizeDropsFinalPeriod) {
  EXPECT_EQ(tokenize("samu gat ta."), (std::vector<std::string>{"samu", "gat", "ta"}));
  EXPECT_EQ(tokenize("samu i ."), (std::vector<std::string>{"samu", "i"}));
  EXPECT_EQ(tokenize("  a   b "), (std::vector<std::string>{"a", "b"}));
}

TEST(SegmentTest, TopicSubordinateAndMain) {
  ClauseSplit s = split("Hanako wa samu gat ta node mado o sime ta");
  ASSERT_TRUE(s.topic.has_value());
  EXPECT_EQ(*s.topic, "Hanako");
  ASSERT_EQ(s.sub_clauses.size(), 1u);
  EXPECT_EQ(join_span(s, s.sub_clauses[0].clause.span), "samu gat ta");
  EXPECT_EQ(s.sub_clauses[0].conjunct, "node");
  EXPECT_EQ(s.sub_clauses[0].link, LinkType::cause);
  EXPECT_EQ(join_span(s, s.main_clause.span), "mado o sime ta");
  ASSERT_EQ(s.main_clause.args.size(), 1u);
  EXPECT_EQ(s.main_clause.args[0].value, "window");
  EXPECT_EQ(s.main_clause.args[0].particle, "o");
  EXPECT_TRUE(partitions_input(s));
}

TEST(SegmentTest, TeWithoutPerfectiveIsAVpConjunct) {
  ClauseSplit s = split("Hanako wa samuku te mado o sime ta");
  EXPECT_TRUE(s.sub_clauses.empty());
  ASSERT_EQ(s.vp_conjuncts.size(), 1u);
  EXPECT_EQ(join_span(s, s.vp_conjuncts[0].clause.span), "samuku");
  EXPECT_EQ(s.vp_conjuncts[0].host, 0u);
  EXPECT_TRUE(partitions_input(s));
}

TEST(SegmentTest, TeBeforeADirectionalStaysInThePredicate) {
  ClauseSplit s = split("samu gat ta node mado o sime te yat ta");
  ASSERT_EQ(s.sub_clauses.size(), 1u);
  EXPECT_EQ(s.main_clause.analysis.directional, "yat");
  EXPECT_TRUE(partitions_input(s));
}

TEST(SegmentTest, MultiMorphemeEntriesAndAdverbs) {
  ClauseSplit s = split("kurusi gat ta noni kekkyoku kusuri o nom anakat ta");
  EXPECT_EQ(s.sub_clauses[0].link, LinkType::concession);
  EXPECT_EQ(s.main_clause.analysis.stem.surface, "nom");
  ClauseSplit t = split("kobun ga yar are ta node sikaesi ni it ta");
  EXPECT_EQ(t.main_clause.analysis.stem.surface, "sikaesi ni it");
  ASSERT_EQ(t.sub_clauses[0].clause.args.size(), 1u);
  ASSERT_TRUE(t.sub_clauses[0].clause.args[0].head.has_value());
  EXPECT_EQ(t.sub_clauses[0].clause.args[0].head->surface, "kobun");
}

TEST(SegmentTest, NominalizedComplement) {
  ClauseSplit s = split("Taro wa gakkou e iku no wo iya gat ta node okor are ta");
  EXPECT_EQ(*s.topic, "Taro");
  ASSERT_EQ(s.sub_clauses.size(), 1u);
  const auto& args = s.sub_clauses[0].clause.args;
  ASSERT_EQ(args.size(), 1u);
  EXPECT_TRUE(args[0].complement);
  EXPECT_EQ(args[0].value, "gakkou-e-iku-no");
  EXPECT_EQ(args[0].particle, "wo");
  EXPECT_TRUE(partitions_input(s));
}

TEST(SegmentTest, TwoSubordinateClauses) {
  ClauseSplit s = split("samu gat ta node mado o sime ta noni kanasimi mo si nai");
  ASSERT_EQ(s.sub_clauses.size(), 2u);
  EXPECT_EQ(s.sub_clauses[1].conjunct, "noni");
  EXPECT_TRUE(partitions_input(s));
}

TEST(SegmentTest, ErrorsPointAtMorphemes) {
  try {
    (void)split("samu gat ta node mado o zzz ta");
    FAIL();
  } catch (const MorphError& e) {
    EXPECT_EQ(e.position(), 6u);
  }
  try {
    (void)split("node mado o sime ta");
    FAIL();
  } catch (const MorphError& e) {
    EXPECT_EQ(e.position(), 0u);
  }
  EXPECT_THROW((void)split("Hanako wa mado o"), MorphError);
}

}  // namespace
}  // namespace jzero
