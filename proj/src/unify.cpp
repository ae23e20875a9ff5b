#include "jzero/unify.hpp"

#include "jzero/errors.hpp"

namespace jzero {

namespace {

using Kind = FeatureStructure::Kind;

std::string describe(const FeatureStructure& fs) {
  switch (fs.kind()) {
    case Kind::atom:
      return fs.atom_value();
    case Kind::token:
      return to_string(fs.token_value());
    case Kind::complex:
      return "[complex]";
  }
  return "?";
}

std::string extend(const std::string& path, const std::string& feature) {
  return path.empty() ? feature : path + "|" + feature;
}

FeatureStructure unify_at(const FeatureStructure& a, const FeatureStructure& b, TokenEnv& env,
                          const std::string& path) {
  if (a.is_empty()) return b;
  if (b.is_empty()) return a;

  auto merge_terms = [&](const Term& x, const Term& y) {
    try {
      env = env.add_identity(x, y);
    } catch (const Inconsistent&) {
      throw UnifyFailure(path, describe(a), describe(b));
    }
  };

  if (a.kind() == Kind::token && b.kind() == Kind::token) {
    merge_terms(a.token_value(), b.token_value());
    return a;
  }
  if (a.kind() == Kind::token && b.kind() == Kind::atom) {
    merge_terms(a.token_value(), Atom{b.atom_value()});
    return b;
  }
  if (a.kind() == Kind::atom && b.kind() == Kind::token) {
    merge_terms(b.token_value(), Atom{a.atom_value()});
    return a;
  }
  if (a.kind() == Kind::atom && b.kind() == Kind::atom) {
    if (a.atom_value() != b.atom_value()) throw UnifyFailure(path, describe(a), describe(b));
    return a;
  }
  if (a.kind() != Kind::complex || b.kind() != Kind::complex) {
    throw UnifyFailure(path, describe(a), describe(b));
  }

  FeatureStructure::Features merged = a.features();
  for (const auto& [name, value] : b.features()) {
    auto it = merged.find(name);
    if (it == merged.end()) {
      merged.emplace(name, value);
    } else {
      it->second = unify_at(it->second, value, env, extend(path, name));
    }
  }
  return FeatureStructure::complex(std::move(merged));
}

}  // namespace

Unified unify(const FeatureStructure& a, const FeatureStructure& b, const TokenEnv& env) {
  TokenEnv work = env;
  FeatureStructure fs = unify_at(a, b, work, "");
  return {std::move(fs), std::move(work)};
}

}  // namespace jzero
