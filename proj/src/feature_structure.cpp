#include "jzero/feature_structure.hpp"

#include <algorithm>
#include <array>
#include <set>
#include <sstream>
#include <stdexcept>
#include <variant>

namespace jzero {

struct FeatureStructure::Node {
  std::variant<Atom, Token, Features> value;
};

bool is_role_feature(std::string_view name) {
  static constexpr std::array<std::string_view, 7> kRoles = {
      "agent", "experiencer", "patient", "affected", "observer", "motivated", "object"};
  return std::find(kRoles.begin(), kRoles.end(), name) != kRoles.end();
}

FeatureStructure::FeatureStructure() {
  static const auto kEmpty = std::make_shared<const Node>(Node{Features{}});
  node_ = kEmpty;
}

FeatureStructure FeatureStructure::atom(std::string symbol) {
  return FeatureStructure(std::make_shared<const Node>(Node{Atom{std::move(symbol)}}));
}

FeatureStructure FeatureStructure::token(Token t) {
  return FeatureStructure(std::make_shared<const Node>(Node{std::move(t)}));
}

FeatureStructure FeatureStructure::complex(Features features) {
  for (const auto& [name, value] : features) {
    if (is_role_feature(name) && value.kind() == Kind::complex) {
      throw std::invalid_argument("role feature '" + name + "' cannot hold a complex value");
    }
    if (name == feat::soa && value.kind() != Kind::complex) {
      throw std::invalid_argument("soa must hold a complex value");
    }
  }
  return FeatureStructure(std::make_shared<const Node>(Node{std::move(features)}));
}

FeatureStructure::Kind FeatureStructure::kind() const {
  return static_cast<Kind>(node_->value.index());
}

const std::string& FeatureStructure::atom_value() const {
  return std::get<Atom>(node_->value).symbol;
}

const Token& FeatureStructure::token_value() const { return std::get<Token>(node_->value); }

const FeatureStructure::Features& FeatureStructure::features() const {
  return std::get<Features>(node_->value);
}

const FeatureStructure* FeatureStructure::get(std::string_view feature) const {
  if (kind() != Kind::complex) return nullptr;
  const auto& fs = features();
  auto it = fs.find(feature);
  return it == fs.end() ? nullptr : &it->second;
}

const FeatureStructure* FeatureStructure::at_path(
    std::initializer_list<std::string_view> path) const {
  const FeatureStructure* cur = this;
  for (auto step : path) {
    cur = cur->get(step);
    if (cur == nullptr) return nullptr;
  }
  return cur;
}

FeatureStructure FeatureStructure::with(std::string_view feature, FeatureStructure value) const {
  if (kind() != Kind::complex) throw std::invalid_argument("with() on a non-complex node");
  Features copy = features();
  copy.insert_or_assign(std::string(feature), std::move(value));
  return complex(std::move(copy));
}

namespace {

void collect_tokens(const FeatureStructure& fs, std::vector<Token>& out,
                    std::set<TokenId>& seen) {
  switch (fs.kind()) {
    case FeatureStructure::Kind::token:
      if (seen.insert(fs.token_value().id).second) out.push_back(fs.token_value());
      break;
    case FeatureStructure::Kind::complex:
      for (const auto& [_, v] : fs.features()) collect_tokens(v, out, seen);
      break;
    case FeatureStructure::Kind::atom:
      break;
  }
}

}  // namespace

std::vector<Token> FeatureStructure::tokens() const {
  std::vector<Token> out;
  std::set<TokenId> seen;
  collect_tokens(*this, out, seen);
  return out;
}

bool operator==(const FeatureStructure& a, const FeatureStructure& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case FeatureStructure::Kind::atom:
      return a.atom_value() == b.atom_value();
    case FeatureStructure::Kind::token:
      return a.token_value() == b.token_value();
    case FeatureStructure::Kind::complex:
      return a.features() == b.features();
  }
  return false;
}

namespace {

class Renderer {
 public:
  Renderer(const TokenEnv* env, RenderOptions opts) : env_(env), opts_(opts) {}

  std::vector<std::string> lines(const FeatureStructure& fs) {
    switch (fs.kind()) {
      case FeatureStructure::Kind::atom:
        return {fs.atom_value()};
      case FeatureStructure::Kind::token:
        return {token_text(fs.token_value())};
      case FeatureStructure::Kind::complex:
        return complex_lines(fs);
    }
    return {};
  }

  std::vector<std::string> where_lines() const {
    if (env_ == nullptr) return {};
    std::set<std::string> out;
    for (const auto& [x, y] : env_->distinct_pairs()) {
      auto lx = term_label(x);
      auto ly = term_label(y);
      if (!lx || !ly) continue;
      if (*ly < *lx) std::swap(lx, ly);
      out.insert("where " + *lx + " ≠ " + *ly);
    }
    return {out.begin(), out.end()};
  }

 private:
  std::vector<std::string> complex_lines(const FeatureStructure& fs) {
    const auto& features = fs.features();
    if (features.empty()) return {"[]"};
    std::vector<const std::pair<const std::string, FeatureStructure>*> order;
    if (auto it = features.find(feat::rel); it != features.end()) order.push_back(&*it);
    for (const auto& kv : features) {
      if (kv.first != feat::rel) order.push_back(&kv);
    }

    std::vector<std::string> out;
    for (const auto* kv : order) {
      std::string lead = kv->first + ": ";
      auto sub = lines(kv->second);
      out.push_back(lead + sub.front());
      std::string pad(lead.size(), ' ');
      for (std::size_t i = 1; i < sub.size(); ++i) out.push_back(pad + sub[i]);
    }
    out.front() = "[" + out.front();
    for (std::size_t i = 1; i < out.size(); ++i) out[i] = " " + out[i];
    out.back() += "]";
    return out;
  }

  Term class_of(const Token& t) const {
    return env_ != nullptr ? env_->representative(t) : Term{t};
  }

  std::string token_text(const Token& t) {
    Term key = class_of(t);
    auto [it, inserted] = tags_.try_emplace(key, tags_.size() + 1);
    std::string text = "#" + std::to_string(it->second);
    if (opts_.origins) text += "<" + t.origin + ">";
    if (env_ != nullptr) {
      if (auto c = env_->constant_of(t)) text += "=" + c->symbol;
    }
    return text;
  }

  std::optional<std::string> term_label(const Term& t) const {
    Term key = env_->representative(t);
    if (auto it = tags_.find(key); it != tags_.end()) {
      return "#" + std::to_string(it->second);
    }
    if (const auto* atom = std::get_if<Atom>(&t)) return atom->symbol;
    return std::nullopt;
  }

  const TokenEnv* env_;
  RenderOptions opts_;
  std::map<Term, std::size_t> tags_;
};

std::string join_lines(const std::vector<std::string>& a, const std::vector<std::string>& b) {
  std::ostringstream os;
  for (const auto& l : a) os << l << '\n';
  for (const auto& l : b) os << l << '\n';
  return os.str();
}

}  // namespace

std::string render(const FeatureStructure& fs, RenderOptions opts) {
  Renderer r(nullptr, opts);
  return join_lines(r.lines(fs), {});
}

std::string render(const FeatureStructure& fs, const TokenEnv& env, RenderOptions opts) {
  Renderer r(&env, opts);
  auto body = r.lines(fs);
  return join_lines(body, r.where_lines());
}

}  // namespace jzero
