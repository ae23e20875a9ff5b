#include "jzero/lexicon.hpp"

#include <gtest/gtest.h>

#include "jzero/errors.hpp"

namespace jzero {
namespace {

std::size_t error_line(std::string_view text) {
  try {
    (void)Lexicon::parse(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  return 0;
}

TEST(LexiconTest, BuiltinCoversTheFragment) {
  const Lexicon& lex = Lexicon::builtin();
  ASSERT_NE(lex.find("samu", Pos::subjective_adjective), nullptr);
  ASSERT_NE(lex.find("komaru", Pos::subjective_verb), nullptr);
  ASSERT_NE(lex.find("kobun", Pos::relational_noun), nullptr);
  ASSERT_NE(lex.find("node", Pos::conjunct), nullptr);
  EXPECT_TRUE(lex.find("kobun", Pos::relational_noun)->is_relational());
  EXPECT_TRUE(lex.find("saihu", Pos::noun)->is_possessable());
  EXPECT_GE(lex.max_morphemes(), 3u);
}

TEST(LexiconTest, SameSurfaceDifferentPos) {
  auto entries = Lexicon::builtin().lookup("ga");
  ASSERT_EQ(entries.size(), 2u);
  EXPECT_NE(entries[0]->pos, entries[1]->pos);
}

TEST(LexiconTest, RelNames) {
  const Lexicon& lex = Lexicon::builtin();
  EXPECT_EQ(lex.find("samu", Pos::subjective_adjective)->rel(), "samu-i");
  EXPECT_EQ(lex.find("iya", Pos::subjective_adjective)->rel(), "iya");
  EXPECT_EQ(lex.find("oi dasi", Pos::verb)->rel(), "oi-dasi");
  EXPECT_EQ(lex.find("sime", Pos::verb)->rel(), "sime");
}

TEST(LexiconTest, RoleAliases) {
  const LexEntry* e = Lexicon::builtin().find("kanasimi mo si", Pos::verb);
  ASSERT_NE(e, nullptr);
  ASSERT_EQ(e->roles.size(), 1u);
  EXPECT_EQ(e->roles[0].role, Role::experiencer);
  ASSERT_EQ(e->roles[0].aliases.size(), 1u);
  EXPECT_EQ(e->roles[0].aliases[0], Role::agent);
  EXPECT_EQ(e->morpheme_count(), 3u);
}

TEST(LexiconTest, ParsesCommentsAndBlankLines) {
  Lexicon lex = Lexicon::parse("# comment\n\nfoo\tverb\tdo foo\tagent\taction\n");
  ASSERT_EQ(lex.entries().size(), 1u);
  EXPECT_EQ(lex.entries()[0].gloss, "do foo");
  EXPECT_TRUE(lex.entries()[0].has_flag("action"));
}

TEST(LexiconTest, ErrorsCarryLineNumbers) {
  EXPECT_EQ(error_line("foo\tverb\tx\tagent\n\nbar\tthing\tx\n"), 3u);
  EXPECT_EQ(error_line("foo\tverb\tx\thero\n"), 1u);
  EXPECT_EQ(error_line("foo\tverb\tx\tagent\tshiny\n"), 1u);
  EXPECT_EQ(error_line("foo\tverb\tx\n"), 1u);
  EXPECT_EQ(error_line("foo\tnoun\tx\nfoo\tnoun\ty\n"), 2u);
  EXPECT_EQ(error_line("foo\tnoun\tx\t\t\textra\n"), 1u);
}

TEST(LexiconTest, UnknownPosMessage) {
  try {
    (void)Lexicon::parse("foo\tthing\tx\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("unknown pos tag 'thing'"), std::string::npos);
  }
}

TEST(LexiconTest, RoleNamesRoundTrip) {
  for (Role r : {Role::agent, Role::experiencer, Role::patient, Role::object, Role::affected,
                 Role::observer, Role::motivated}) {
    EXPECT_EQ(parse_role(to_string(r)), r);
    EXPECT_EQ(abbreviation(r).size(), 3u);
  }
  EXPECT_FALSE(parse_role("hero").has_value());
}

}  // namespace
}  // namespace jzero
