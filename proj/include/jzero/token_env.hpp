#pragma once

#include <map>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "jzero/token.hpp"

namespace jzero {

// Identity (union-find) plus "not token identical" pairs over terms.
//
// An env is a value: every operation returns a new env and leaves the
// receiver untouched, so alternative branches can share a common prefix.
// Atoms take part as constants. Two different atoms never share a class.
class TokenEnv {
 public:
  struct Fact {
    enum class Kind { identity, distinct };
    Kind kind;
    Term lhs;
    Term rhs;
  };

  // Throws Inconsistent when the merge would put both members of a distinct
  // pair (or two different atoms) into one class.
  [[nodiscard]] TokenEnv add_identity(const Term& a, const Term& b) const;
  // Throws Inconsistent when a and b are already in one class.
  [[nodiscard]] TokenEnv add_distinct(const Term& a, const Term& b) const;

  Term representative(const Term& t) const;
  bool same_class(const Term& a, const Term& b) const {
    return representative(a) == representative(b);
  }
  // The atom the class of t is pinned to, if any.
  std::optional<Atom> constant_of(const Term& t) const;

  // Full recheck of every distinct pair; always true for envs built through
  // the public operations.
  bool consistent() const;

  // Everything asserted so far, in order. Lets an independent checker
  // re-derive the theory without going through the union-find.
  const std::vector<Fact>& facts() const { return facts_; }
  const std::set<std::pair<Term, Term>>& distinct_pairs() const { return distinct_; }

 private:
  Term find(const Term& t) const;
  bool violates_distinct() const;

  std::map<Term, Term> parent_;
  std::map<Term, std::size_t> size_;
  std::set<std::pair<Term, Term>> distinct_;
  std::vector<Fact> facts_;
};

}  // namespace jzero
