#include <optional>
#include <string>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "jzero/errors.hpp"
#include "jzero/morphology.hpp"
#include "jzero/resolver.hpp"
#include "jzero/segment.hpp"

namespace py = pybind11;

namespace {

struct Resources {
  std::optional<jzero::Lexicon> lexicon;
  std::optional<jzero::RuleTable> rules;

  const jzero::Lexicon& lex() const { return lexicon ? *lexicon : jzero::Lexicon::builtin(); }
  const jzero::RuleTable& table() const { return rules ? *rules : jzero::RuleTable::builtin(); }
};

Resources load(const std::optional<std::string>& lexicon, const std::optional<std::string>& rules) {
  Resources r;
  if (lexicon) r.lexicon = jzero::Lexicon::load(*lexicon);
  if (rules) r.rules = jzero::RuleTable::load(*rules);
  return r;
}

jzero::DiscourseContext context_of(const std::optional<std::string>& text) {
  return text ? jzero::parse_context(*text) : jzero::DiscourseContext{};
}

}  // namespace

PYBIND11_MODULE(_jzero, m) {
  m.doc() = "Zero-pronoun antecedent constraints for romanized Japanese complex sentences.";

  auto error = py::register_exception<jzero::Error>(m, "Error");
  py::register_exception<jzero::ParseError>(m, "ParseError", error.ptr());
  py::register_exception<jzero::MorphError>(m, "MorphError", error.ptr());
  py::register_exception<jzero::BuildError>(m, "BuildError", error.ptr());
  py::register_exception<jzero::Inconsistent>(m, "Inconsistent", error.ptr());

  m.def(
      "analyze_json",
      [](const std::string& sentence, const std::optional<std::string>& context,
         const std::optional<std::string>& lexicon, const std::optional<std::string>& rules) {
        Resources res = load(lexicon, rules);
        auto report = jzero::analyze(sentence, context_of(context), res.lex(), res.table());
        return jzero::render_json(report, -1);
      },
      py::arg("sentence"), py::arg("context") = py::none(), py::arg("lexicon") = py::none(),
      py::arg("rules") = py::none(),
      "Analyze one sentence; returns the JSON report as a string.");

  m.def(
      "analyze_text",
      [](const std::string& sentence, const std::optional<std::string>& context) {
        return jzero::render_text(jzero::analyze(sentence, context_of(context)));
      },
      py::arg("sentence"), py::arg("context") = py::none(), "Human-readable report for one sentence.");

  m.def(
      "oracle_agrees",
      [](const std::string& sentence, const std::optional<std::string>& context) {
        return jzero::oracle_agrees(jzero::analyze(sentence, context_of(context)));
      },
      py::arg("sentence"), py::arg("context") = py::none(),
      "Whether brute-force enumeration reproduces the interpretations.");

  m.def(
      "segment",
      [](const std::string& sentence) {
        auto split = jzero::segment(sentence, jzero::Lexicon::builtin());
        py::list clauses;
        for (const auto& s : split.sub_clauses) {
          clauses.append(py::make_tuple("sub", jzero::join_span(split, s.clause.span), s.conjunct));
        }
        for (const auto& v : split.vp_conjuncts) {
          clauses.append(py::make_tuple("vp", jzero::join_span(split, v.clause.span), v.conjunct));
        }
        clauses.append(py::make_tuple("main", jzero::join_span(split, split.main_clause.span), ""));
        py::dict out;
        out["topic"] = split.topic;
        out["clauses"] = clauses;
        return out;
      },
      py::arg("sentence"), "Split a sentence into topic, clauses and conjunct particles.");

  m.def(
      "describe_predicate",
      [](const std::string& predicate) {
        auto ms = jzero::tokenize(predicate);
        return jzero::describe(jzero::analyze_predicate(ms, jzero::Lexicon::builtin()));
      },
      py::arg("predicate"), "Morphological analysis of a stem plus suffix chain.");

  m.def(
      "rule_table", [] { return jzero::RuleTable::builtin().render(); },
      "The bundled constraint rules rendered as tables.");
}
