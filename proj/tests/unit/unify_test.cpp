#include "jzero/unify.hpp"

#include <gtest/gtest.h>

#include "jzero/errors.hpp"
#include "support/random_instances.hpp"

namespace jzero {
namespace {

using Features = FeatureStructure::Features;

TEST(UnifyTest, ComplexStructuresMergeFeatureWise) {
  FeatureStructure a = FeatureStructure::complex({{"rel", FeatureStructure::atom("sime")}});
  FeatureStructure b = FeatureStructure::complex({{"object", FeatureStructure::atom("window")}});
  Unified u = unify(a, b, TokenEnv{});
  EXPECT_EQ(u.fs.get("rel")->atom_value(), "sime");
  EXPECT_EQ(u.fs.get("object")->atom_value(), "window");
}

TEST(UnifyTest, TokensBecomeIdentical) {
  Token x{0, "agt"};
  Token y{1, "obs"};
  FeatureStructure a = FeatureStructure::complex({{"agent", FeatureStructure::token(x)}});
  FeatureStructure b = FeatureStructure::complex({{"agent", FeatureStructure::token(y)}});
  Unified u = unify(a, b, TokenEnv{});
  EXPECT_EQ(u.fs.get("agent")->token_value(), x);
  EXPECT_TRUE(u.env.same_class(x, y));
}

TEST(UnifyTest, TokenAgainstAtomPinsTheToken) {
  Token x{0, "agt"};
  Unified u = unify(FeatureStructure::token(x), FeatureStructure::atom("Hanako"), TokenEnv{});
  EXPECT_EQ(u.fs.kind(), FeatureStructure::Kind::atom);
  EXPECT_EQ(u.env.constant_of(x)->symbol, "Hanako");
}

TEST(UnifyTest, ClashReportsThePath) {
  FeatureStructure a = FeatureStructure::complex(
      {{"soa", FeatureStructure::complex({{"rel", FeatureStructure::atom("samu-i")}})}});
  FeatureStructure b = FeatureStructure::complex(
      {{"soa", FeatureStructure::complex({{"rel", FeatureStructure::atom("atu-i")}})}});
  try {
    (void)unify(a, b, TokenEnv{});
    FAIL() << "expected a clash";
  } catch (const UnifyFailure& e) {
    EXPECT_EQ(e.path(), "soa|rel");
    EXPECT_EQ(e.left(), "samu-i");
    EXPECT_EQ(e.right(), "atu-i");
  }
}

TEST(UnifyTest, DistinctTokensDoNotUnify) {
  Token x{0, "obs"};
  Token y{1, "exp"};
  TokenEnv env = TokenEnv{}.add_distinct(x, y);
  EXPECT_THROW((void)unify(FeatureStructure::token(x), FeatureStructure::token(y), env), UnifyFailure);
}

TEST(UnifyTest, ComplexAgainstAtomFails) {
  FeatureStructure a = FeatureStructure::complex({{"f", FeatureStructure::atom("x")}});
  EXPECT_THROW((void)unify(a, FeatureStructure::atom("x"), TokenEnv{}), UnifyFailure);
}

TEST(UnifyTest, InputsAreNotModified) {
  Token x{0, "a"};
  Token y{1, "b"};
  FeatureStructure a = FeatureStructure::complex({{"f", FeatureStructure::token(x)}});
  FeatureStructure b = FeatureStructure::complex({{"f", FeatureStructure::token(y)},
                                                  {"g", FeatureStructure::atom("z")}});
  FeatureStructure a_copy = a;
  TokenEnv env;
  (void)unify(a, b, env);
  EXPECT_TRUE(a == a_copy);
  EXPECT_TRUE(env.facts().empty());
}

TEST(UnifyPropertyTest, ThousandRandomInstancesSatisfyTheAlgebraicLaws) {
  auto report = testing::check_unify_properties(20240611, 1000);
  EXPECT_EQ(report.instances, 1000);
  for (const auto& v : report.violations) ADD_FAILURE() << v;
}

TEST(UnifyPropertyTest, SomeRandomInstancesFailAndSomeSucceed) {
  // Guards against a generator that only exercises one branch.
  testing::FsGenerator gen(99);
  int failures = 0;
  int successes = 0;
  for (int i = 0; i < 300; ++i) {
    TokenEnv env = gen.env();
    try {
      (void)unify(gen.structure(), gen.structure(), env);
      ++successes;
    } catch (const UnifyFailure&) {
      ++failures;
    }
  }
  EXPECT_GT(failures, 20);
  EXPECT_GT(successes, 20);
}

}  // namespace
}  // namespace jzero
