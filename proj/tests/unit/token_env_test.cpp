#include "jzero/token_env.hpp"

#include <gtest/gtest.h>

#include "jzero/errors.hpp"
#include "support/random_instances.hpp"

namespace jzero {
namespace {

const Token a{0, "a"};
const Token b{1, "b"};
const Token c{2, "c"};

TEST(TokenEnvTest, IdentityIsTransitive) {
  TokenEnv env = TokenEnv{}.add_identity(a, b).add_identity(b, c);
  EXPECT_TRUE(env.same_class(a, c));
  EXPECT_TRUE(env.consistent());
}

TEST(TokenEnvTest, OperationsLeaveTheReceiverUntouched) {
  TokenEnv base;
  TokenEnv merged = base.add_identity(a, b);
  EXPECT_FALSE(base.same_class(a, b));
  EXPECT_TRUE(merged.same_class(a, b));
  EXPECT_TRUE(base.facts().empty());
  EXPECT_EQ(merged.facts().size(), 1u);
}

TEST(TokenEnvTest, MergingADistinctPairIsInconsistent) {
  TokenEnv env = TokenEnv{}.add_distinct(a, c).add_identity(a, b);
  EXPECT_THROW((void)env.add_identity(b, c), Inconsistent);
}

TEST(TokenEnvTest, DistinctWithinOneClassIsInconsistent) {
  TokenEnv env = TokenEnv{}.add_identity(a, b);
  EXPECT_THROW((void)env.add_distinct(b, a), Inconsistent);
  EXPECT_THROW((void)env.add_distinct(a, a), Inconsistent);
}

TEST(TokenEnvTest, RepeatedDistinctIsANoOp) {
  TokenEnv env = TokenEnv{}.add_distinct(a, b).add_distinct(b, a);
  EXPECT_EQ(env.distinct_pairs().size(), 1u);
}

TEST(TokenEnvTest, AtomsPinClasses) {
  TokenEnv env = TokenEnv{}.add_identity(a, b).add_identity(b, Atom{"Hanako"});
  ASSERT_TRUE(env.constant_of(a).has_value());
  EXPECT_EQ(env.constant_of(a)->symbol, "Hanako");
  EXPECT_FALSE(env.constant_of(c).has_value());
}

TEST(TokenEnvTest, TwoConstantsNeverShareAClass) {
  TokenEnv env = TokenEnv{}.add_identity(a, Atom{"Hanako"}).add_identity(b, Atom{"speaker"});
  EXPECT_THROW((void)env.add_identity(a, b), Inconsistent);
  EXPECT_NO_THROW((void)env.add_identity(a, Atom{"Hanako"}));
}

TEST(TokenEnvTest, DistinctFromAConstant) {
  TokenEnv env = TokenEnv{}.add_distinct(a, Atom{"speaker"});
  EXPECT_THROW((void)env.add_identity(a, Atom{"speaker"}), Inconsistent);
  EXPECT_NO_THROW((void)env.add_identity(a, Atom{"Hanako"}));
}

TEST(TokenEnvTest, RandomMutationSequencesStayConsistent) {
  testing::FsGenerator gen(7);
  for (int round = 0; round < 300; ++round) {
    TokenEnv env;
    for (int step = 0; step < 8; ++step) {
      Term x = gen.term();
      Term y = gen.term();
      try {
        env = gen.coin() ? env.add_identity(x, y) : env.add_distinct(x, y);
      } catch (const Inconsistent&) {
        // The receiver must be unaffected by a rejected step.
      }
      ASSERT_TRUE(env.consistent()) << "round " << round << " step " << step;
    }
  }
}

}  // namespace
}  // namespace jzero
