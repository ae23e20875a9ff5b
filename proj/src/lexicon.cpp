#include "jzero/lexicon.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <sstream>
#include <utility>

#include "builtin_data.hpp"
#include "jzero/errors.hpp"
#include "text_util.hpp"

namespace jzero {

namespace {

constexpr std::array<std::pair<Pos, std::string_view>, 10> kPosNames = {{
    {Pos::verb, "verb"},
    {Pos::subjective_verb, "subjective-verb"},
    {Pos::subjective_adjective, "subjective-adjective"},
    {Pos::adjective, "adjective"},
    {Pos::noun, "noun"},
    {Pos::relational_noun, "relational-noun"},
    {Pos::particle, "particle"},
    {Pos::conjunct, "conjunct"},
    {Pos::aux, "aux"},
    {Pos::adverb, "adverb"},
}};

constexpr std::array<std::pair<Role, std::string_view>, 7> kRoleNames = {{
    {Role::agent, "agent"},
    {Role::experiencer, "experiencer"},
    {Role::patient, "patient"},
    {Role::object, "object"},
    {Role::affected, "affected"},
    {Role::observer, "observer"},
    {Role::motivated, "motivated"},
}};

constexpr std::array<std::string_view, 6> kFlags = {
    "relational", "possessable", "intransitive", "action", "state", "na"};

}  // namespace

std::string_view to_string(Pos pos) {
  for (const auto& [p, name] : kPosNames) {
    if (p == pos) return name;
  }
  return "?";
}

std::optional<Pos> parse_pos(std::string_view text) {
  for (const auto& [p, name] : kPosNames) {
    if (name == text) return p;
  }
  return std::nullopt;
}

std::string_view to_string(Role role) {
  for (const auto& [r, name] : kRoleNames) {
    if (r == role) return name;
  }
  return "?";
}

std::optional<Role> parse_role(std::string_view text) {
  for (const auto& [r, name] : kRoleNames) {
    if (name == text) return r;
  }
  return std::nullopt;
}

std::string_view abbreviation(Role role) {
  switch (role) {
    case Role::agent: return "agt";
    case Role::experiencer: return "exp";
    case Role::patient: return "pat";
    case Role::object: return "obj";
    case Role::affected: return "aff";
    case Role::observer: return "obs";
    case Role::motivated: return "mot";
  }
  return "?";
}

bool LexEntry::is_predicate() const {
  return pos == Pos::verb || pos == Pos::subjective_verb || pos == Pos::subjective_adjective ||
         pos == Pos::adjective;
}

std::string LexEntry::rel() const {
  std::string name = surface;
  std::replace(name.begin(), name.end(), ' ', '-');
  bool i_adjective = (pos == Pos::subjective_adjective || pos == Pos::adjective) && !has_flag("na");
  return i_adjective ? name + "-i" : name;
}

std::size_t LexEntry::morpheme_count() const { return text::split_ws(surface).size(); }

Lexicon Lexicon::parse(std::string_view text) {
  Lexicon lex;
  std::size_t line_no = 0;
  for (auto line : text::lines(text)) {
    ++line_no;
    if (text::trim(line).empty() || text::trim(line).front() == '#') continue;
    auto cols = text::split(line, '\t');
    if (cols.size() < 2) throw ParseError("expected at least surface and pos columns", line_no);
    if (cols.size() > 5) throw ParseError("too many columns", line_no);

    LexEntry entry;
    entry.surface = text::join(text::split_ws(cols[0]), " ");
    if (entry.surface.empty()) throw ParseError("empty surface", line_no);
    auto pos = parse_pos(text::trim(cols[1]));
    if (!pos) throw ParseError("unknown pos tag '" + std::string(text::trim(cols[1])) + "'", line_no);
    entry.pos = *pos;
    if (cols.size() > 2) entry.gloss = std::string(text::trim(cols[2]));

    if (cols.size() > 3) {
      for (auto item : text::split(cols[3], ',')) {
        item = text::trim(item);
        if (item.empty()) continue;
        RoleSlot slot{};
        bool first = true;
        for (auto part : text::split(item, '=')) {
          auto role = parse_role(text::trim(part));
          if (!role) throw ParseError("unknown role '" + std::string(text::trim(part)) + "'", line_no);
          if (first) {
            slot.role = *role;
            first = false;
          } else {
            slot.aliases.push_back(*role);
          }
        }
        entry.roles.push_back(std::move(slot));
      }
    }
    if (cols.size() > 4) {
      for (auto flag : text::split(cols[4], ',')) {
        flag = text::trim(flag);
        if (flag.empty()) continue;
        if (std::find(kFlags.begin(), kFlags.end(), flag) == kFlags.end()) {
          throw ParseError("unknown flag '" + std::string(flag) + "'", line_no);
        }
        entry.flags.emplace(flag);
      }
    }

    if (entry.is_predicate() && entry.roles.empty()) {
      throw ParseError("predicate '" + entry.surface + "' lists no roles", line_no);
    }
    if (lex.find(entry.surface, entry.pos) != nullptr) {
      throw ParseError("duplicate entry '" + entry.surface + "' (" +
                           std::string(to_string(entry.pos)) + ")",
                       line_no);
    }
    lex.max_morphemes_ = std::max(lex.max_morphemes_, entry.morpheme_count());
    lex.entries_.push_back(std::move(entry));
  }
  return lex;
}

Lexicon Lexicon::load(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw Error("cannot open lexicon " + file.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse(buf.str());
}

const Lexicon& Lexicon::builtin() {
  static const Lexicon kLexicon = parse(data::builtin_lexicon());
  return kLexicon;
}

std::vector<const LexEntry*> Lexicon::lookup(std::string_view surface) const {
  std::vector<const LexEntry*> out;
  for (const auto& e : entries_) {
    if (e.surface == surface) out.push_back(&e);
  }
  return out;
}

const LexEntry* Lexicon::find(std::string_view surface, Pos pos) const {
  for (const auto& e : entries_) {
    if (e.surface == surface && e.pos == pos) return &e;
  }
  return nullptr;
}

}  // namespace jzero
