// resolve: zero-pronoun candidate resolver for romanized Japanese sentences.
//
//   resolve <sentence-file> --context <ctx> [--lexicon <tsv>] [--rules <tsv>]
//           [--format text|json] [--oracle-check]
//
// Exit status: 0 when every sentence has at least one interpretation, 2 when
// some sentence has none, 1 on errors (including gold or oracle mismatches).

#include <future>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "CLI11.hpp"
#include "jzero/errors.hpp"
#include "jzero/resolver.hpp"

namespace {

struct Outcome {
  std::string text;
  bool error = false;
  bool empty = false;
};

Outcome run_one(const jzero::CorpusEntry& entry, const jzero::DiscourseContext& base,
                const jzero::Lexicon& lexicon, const jzero::RuleTable& rules, bool json,
                bool oracle_check) {
  Outcome out;
  const std::string where = "line " + std::to_string(entry.line);
  try {
    jzero::DiscourseContext ctx = base;
    for (const auto& c : entry.context) ctx = jzero::parse_context(c, ctx);
    jzero::AnalysisReport report = jzero::analyze(entry.sentence, ctx, lexicon, rules);
    out.empty = report.interpretations.empty();

    std::vector<std::string> checks;
    for (const auto& gold : entry.gold) {
      bool ok = report.contains(gold);
      out.error = out.error || !ok;
      std::string g;
      for (const auto& [label, value] : gold) g += (g.empty() ? "" : " ") + label + "=" + value;
      checks.push_back(std::string(ok ? "gold ok: " : "gold MISSING: ") + g);
    }
    if (oracle_check) {
      bool ok = jzero::oracle_agrees(report);
      out.error = out.error || !ok;
      checks.push_back(ok ? "oracle: agrees" : "oracle: DISAGREES");
    }
    bool all_local = true;
    for (const auto& r : report.rules) all_local = all_local && r.local;
    if (!all_local) {
      out.error = true;
      checks.push_back("locality: VIOLATED");
    }

    if (json) {
      auto j = nlohmann::ordered_json::parse(jzero::render_json(report));
      j["line"] = entry.line;
      if (!checks.empty()) j["checks"] = checks;
      out.text = j.dump(2);
    } else {
      out.text = "# " + where + "\n" + jzero::render_text(report);
      for (const auto& n : entry.notes) out.text += "note: " + n + "\n";
      for (const auto& c : checks) out.text += c + "\n";
    }
  } catch (const std::exception& e) {
    out.error = true;
    if (json) {
      out.text = nlohmann::ordered_json{{"input", entry.sentence}, {"line", entry.line}, {"error", e.what()}}
                     .dump(2);
    } else {
      out.text = "# " + where + "\nsentence: " + entry.sentence + "\nerror: " + e.what() + "\n";
    }
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Enumerate antecedent assignments for zero pronouns in complex sentences"};
  std::string sentence_file;
  std::string context_file;
  std::string lexicon_file;
  std::string rules_file;
  std::string format = "text";
  bool oracle_check = false;
  bool sequential = false;
  app.add_option("sentence-file", sentence_file, "Sentences, one per line (gold:/note:/context: lines allowed)")
      ->required()
      ->check(CLI::ExistingFile);
  app.add_option("--context", context_file, "Discourse context file")->required()->check(CLI::ExistingFile);
  app.add_option("--lexicon", lexicon_file, "Lexicon TSV replacing the bundled one")->check(CLI::ExistingFile);
  app.add_option("--rules", rules_file, "Rule table TSV replacing the bundled one")->check(CLI::ExistingFile);
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_flag("--oracle-check", oracle_check, "Re-derive every result by brute force and compare");
  app.add_flag("--sequential", sequential, "Analyze sentences one after another");
  CLI11_PARSE(app, argc, argv);

  std::optional<jzero::Lexicon> own_lexicon;
  std::optional<jzero::RuleTable> own_rules;
  std::vector<jzero::CorpusEntry> corpus;
  jzero::DiscourseContext ctx;
  const jzero::Lexicon* lexicon = nullptr;
  const jzero::RuleTable* rules = nullptr;
  try {
    if (!lexicon_file.empty()) own_lexicon = jzero::Lexicon::load(lexicon_file);
    if (!rules_file.empty()) own_rules = jzero::RuleTable::load(rules_file);
    ctx = jzero::load_context(context_file);
    corpus = jzero::load_corpus(sentence_file);
    lexicon = own_lexicon ? &*own_lexicon : &jzero::Lexicon::builtin();
    rules = own_rules ? &*own_rules : &jzero::RuleTable::builtin();
  } catch (const std::exception& e) {
    std::cerr << "resolve: " << e.what() << '\n';
    return 1;
  }
  const bool json = format == "json";

  std::vector<Outcome> outcomes;
  if (sequential) {
    for (const auto& entry : corpus) {
      outcomes.push_back(run_one(entry, ctx, *lexicon, *rules, json, oracle_check));
    }
  } else {
    std::vector<std::future<Outcome>> tasks;
    for (const auto& entry : corpus) {
      tasks.push_back(std::async(std::launch::async, run_one, std::cref(entry), std::cref(ctx),
                                 std::cref(*lexicon), std::cref(*rules), json, oracle_check));
    }
    for (auto& t : tasks) outcomes.push_back(t.get());
  }

  bool error = false;
  bool empty = false;
  if (json) std::cout << "[\n";
  for (std::size_t i = 0; i < outcomes.size(); ++i) {
    const auto& o = outcomes[i];
    error = error || o.error;
    empty = empty || o.empty;
    if (json) {
      std::cout << o.text << (i + 1 < outcomes.size() ? ",\n" : "\n");
    } else {
      std::cout << (i ? "\n" : "") << o.text;
    }
  }
  if (json) std::cout << "]\n";
  if (error) return 1;
  return empty ? 2 : 0;
}
