#include "jzero/token_env.hpp"

#include "jzero/errors.hpp"

namespace jzero {

std::string to_string(const Term& term) {
  if (const auto* tok = std::get_if<Token>(&term)) {
    return "t" + std::to_string(tok->id) + "(" + tok->origin + ")";
  }
  return std::get<Atom>(term).symbol;
}

namespace {

std::pair<Term, Term> ordered(const Term& a, const Term& b) {
  return a < b ? std::pair{a, b} : std::pair{b, a};
}

bool is_atom(const Term& t) { return std::holds_alternative<Atom>(t); }

}  // namespace

Term TokenEnv::find(const Term& t) const {
  Term cur = t;
  for (auto it = parent_.find(cur); it != parent_.end(); it = parent_.find(cur)) {
    cur = it->second;
  }
  return cur;
}

Term TokenEnv::representative(const Term& t) const { return find(t); }

std::optional<Atom> TokenEnv::constant_of(const Term& t) const {
  Term root = find(t);
  if (const auto* atom = std::get_if<Atom>(&root)) return *atom;
  return std::nullopt;
}

bool TokenEnv::violates_distinct() const {
  for (const auto& [x, y] : distinct_) {
    if (find(x) == find(y)) return true;
  }
  return false;
}

bool TokenEnv::consistent() const { return !violates_distinct(); }

TokenEnv TokenEnv::add_identity(const Term& a, const Term& b) const {
  TokenEnv next = *this;
  next.facts_.push_back({Fact::Kind::identity, a, b});
  Term ra = find(a);
  Term rb = find(b);
  if (ra == rb) return next;
  if (is_atom(ra) && is_atom(rb)) {
    throw Inconsistent("cannot identify " + to_string(a) + " with " + to_string(b) +
                       ": classes are pinned to different constants");
  }

  // Atoms stay roots so that constant_of is a root lookup.
  auto size_of = [&](const Term& r) {
    auto it = next.size_.find(r);
    return it == next.size_.end() ? std::size_t{1} : it->second;
  };
  bool a_root = is_atom(ra) || (!is_atom(rb) && size_of(ra) >= size_of(rb));
  const Term& root = a_root ? ra : rb;
  const Term& child = a_root ? rb : ra;
  next.size_[root] = size_of(ra) + size_of(rb);
  next.parent_[child] = root;

  if (next.violates_distinct()) {
    throw Inconsistent("identifying " + to_string(a) + " with " + to_string(b) +
                       " merges a distinct pair");
  }
  return next;
}

TokenEnv TokenEnv::add_distinct(const Term& a, const Term& b) const {
  if (find(a) == find(b)) {
    throw Inconsistent(to_string(a) + " and " + to_string(b) +
                       " are already token identical");
  }
  TokenEnv next = *this;
  if (next.distinct_.insert(ordered(a, b)).second) {
    next.facts_.push_back({Fact::Kind::distinct, a, b});
  }
  return next;
}

}  // namespace jzero
