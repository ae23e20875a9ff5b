#pragma once

#include <filesystem>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace jzero {

enum class Pos {
  verb,
  subjective_verb,
  subjective_adjective,
  adjective,
  noun,
  relational_noun,
  particle,
  conjunct,
  aux,
  adverb,
};

std::string_view to_string(Pos pos);
std::optional<Pos> parse_pos(std::string_view text);

enum class Role { agent, experiencer, patient, object, affected, observer, motivated };

std::string_view to_string(Role role);
std::optional<Role> parse_role(std::string_view text);
// Short label used for zero arguments: "agt", "exp", ...
std::string_view abbreviation(Role role);

// One subcategorized argument. Aliases name further roles that are filled by
// the very same token (written "experiencer=agent" in the lexicon).
struct RoleSlot {
  Role role;
  std::vector<Role> aliases;

  friend bool operator==(const RoleSlot&, const RoleSlot&) = default;
};

struct LexEntry {
  // Space-separated morphemes; multi-morpheme entries are matched greedily.
  std::string surface;
  Pos pos;
  std::string gloss;
  std::vector<RoleSlot> roles;
  std::set<std::string, std::less<>> flags;

  bool has_flag(std::string_view f) const { return flags.contains(f); }
  bool is_predicate() const;
  bool is_nominal() const { return pos == Pos::noun || pos == Pos::relational_noun; }
  bool is_relational() const { return pos == Pos::relational_noun || has_flag("relational"); }
  bool is_possessable() const { return has_flag("possessable"); }
  // Relation name used as the rel value: "samu-i", "sime", "oi-dasi".
  std::string rel() const;
  std::size_t morpheme_count() const;
};

class Lexicon {
 public:
  // Throws ParseError (with line number) on malformed lines, unknown pos tags,
  // unknown roles or flags, predicates without roles, and duplicate
  // (surface, pos) pairs.
  static Lexicon parse(std::string_view text);
  static Lexicon load(const std::filesystem::path& file);
  // The bundled lexicon covering the example fragment.
  static const Lexicon& builtin();

  const std::vector<LexEntry>& entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }

  // All entries with this exact surface.
  std::vector<const LexEntry*> lookup(std::string_view surface) const;
  const LexEntry* find(std::string_view surface, Pos pos) const;
  std::size_t max_morphemes() const { return max_morphemes_; }

 private:
  std::vector<LexEntry> entries_;
  std::size_t max_morphemes_ = 1;
};

}  // namespace jzero
