#pragma once

#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "jzero/token.hpp"
#include "jzero/token_env.hpp"

namespace jzero {

// Feature names used by the semantic structures.
namespace feat {
inline constexpr std::string_view rel = "rel";
inline constexpr std::string_view soa = "soa";
inline constexpr std::string_view tense = "tense";
inline constexpr std::string_view polarity = "polarity";
inline constexpr std::string_view observer = "observer";
inline constexpr std::string_view motivated = "motivated";
inline constexpr std::string_view matrix_sem = "matrix-sem";
inline constexpr std::string_view sub_sem = "sub-sem";
inline constexpr std::string_view conjunct = "conjunct";
// Reserved for syntactic HEAD content; never populated.
inline constexpr std::string_view head = "head";
}  // namespace feat

// Role-bearing features only ever hold a token or an atom.
bool is_role_feature(std::string_view name);

// An immutable rooted DAG of feature-value pairs. Nodes are shared between
// structures; reentrancy is expressed by the same Token occurring at several
// paths. A default-constructed structure is the empty complex node, which
// unifies with anything.
class FeatureStructure {
 public:
  enum class Kind { atom, token, complex };
  using Features = std::map<std::string, FeatureStructure, std::less<>>;

  FeatureStructure();

  static FeatureStructure atom(std::string symbol);
  static FeatureStructure token(Token t);
  // Throws std::invalid_argument if a role feature holds a complex value or
  // soa holds a non-complex value.
  static FeatureStructure complex(Features features);

  Kind kind() const;
  bool is_empty() const { return kind() == Kind::complex && features().empty(); }

  const std::string& atom_value() const;
  const Token& token_value() const;
  const Features& features() const;

  // nullptr when absent (or when this is not a complex node).
  const FeatureStructure* get(std::string_view feature) const;
  const FeatureStructure* at_path(std::initializer_list<std::string_view> path) const;

  // Copy with one feature added or replaced.
  FeatureStructure with(std::string_view feature, FeatureStructure value) const;

  // Distinct tokens in depth-first order of first occurrence.
  std::vector<Token> tokens() const;

  friend bool operator==(const FeatureStructure& a, const FeatureStructure& b);

 private:
  struct Node;
  explicit FeatureStructure(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

struct RenderOptions {
  bool origins = true;
};

// Bracketed attribute-value notation, one feature per line, rel first.
// Tokens print as #n tags numbered by first occurrence.
std::string render(const FeatureStructure& fs, RenderOptions opts = {});
// As above, but tokens in one identity class share a tag, pinned classes show
// their constant, and distinct pairs among the printed tags are listed.
std::string render(const FeatureStructure& fs, const TokenEnv& env, RenderOptions opts = {});

}  // namespace jzero
