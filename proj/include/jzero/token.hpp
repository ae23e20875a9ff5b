#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <variant>

namespace jzero {

using TokenId = std::uint32_t;

// A variable standing for a (possibly omitted) participant. Identity is the
// id alone; origin is a debug label such as "obs" or "exp".
struct Token {
  TokenId id = 0;
  std::string origin;

  friend bool operator==(const Token& a, const Token& b) { return a.id == b.id; }
  friend std::strong_ordering operator<=>(const Token& a, const Token& b) { return a.id <=> b.id; }
};

// Hands out tokens for one analysis. Ids start at 0 and are never reused.
class TokenFactory {
 public:
  Token fresh(std::string origin) { return Token{next_++, std::move(origin)}; }
  TokenId issued() const { return next_; }

 private:
  TokenId next_ = 0;
};

// A constant: an overt entity or a discourse referent name.
struct Atom {
  std::string symbol;

  friend bool operator==(const Atom&, const Atom&) = default;
  friend auto operator<=>(const Atom&, const Atom&) = default;
};

// Either side of an identity or distinctness requirement.
using Term = std::variant<Token, Atom>;

std::string to_string(const Term& term);

}  // namespace jzero
