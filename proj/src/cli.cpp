#include "sentcx/cli.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "sentcx/analysis.hpp"
#include "sentcx/corpus.hpp"
#include "sentcx/syntax.hpp"
#include "sentcx/transforms.hpp"

namespace sentcx {
namespace {

struct Settings {
  std::string input;
  std::string mode = "internal";
  std::vector<std::string> facets;
  std::string format = "markdown";
  bool oracle = false;
  std::size_t oracle_budget = kDefaultOracleBudget;
  bool strict = false;
  bool witness = false;
  std::string output;
};

void add_common_options(CLI::App& cmd, Settings& s) {
  cmd.add_option("--mode", s.mode, "surface, internal or both")
      ->check(CLI::IsMember({"surface", "internal", "both"}));
  cmd.add_flag("--oracle", s.oracle,
               "cross-check every class against exhaustive enumeration");
  cmd.add_option("--oracle-budget", s.oracle_budget,
                 "intermediate states the oracle may visit per sentence");
  cmd.add_option("--output", s.output, "write to this file instead of stdout");
}

std::vector<Mode> modes_of(const Settings& s) {
  if (s.mode == "both") return {Mode::Surface, Mode::Internal};
  return {*mode_from_string(s.mode)};
}

AnalyzeOptions analyze_options(const Settings& s) {
  AnalyzeOptions o;
  o.surface = s.mode != "internal";
  o.internal = s.mode != "surface";
  o.oracle = s.oracle;
  o.oracle_budget = s.oracle_budget;
  return o;
}

class Runner {
 public:
  Runner(const Settings& s, std::istream& in, std::ostream& out,
         std::ostream& err)
      : s_(s), in_(in), out_(out), err_(err) {}

  int analyze() {
    std::optional<std::vector<ItemResult>> results = load_and_analyze();
    if (!results) return kExitItemError;
    std::string text;
    for (const ItemResult& r : *results) text += item_result_jsonl(r);
    if (!emit(text)) return kExitItemError;
    return finish(*results);
  }

  int summarize() {
    std::vector<ItemKind> facet;
    for (const std::string& f : s_.facets) {
      auto kind = item_kind_from_string(f);
      if (!kind) {
        err_ << "sentcx: unknown --facet kind '" << f << "'\n";
        return kExitUsage;
      }
      facet.push_back(*kind);
    }
    std::optional<std::vector<ItemResult>> results = load_and_analyze();
    if (!results) return kExitItemError;
    TableFormat format =
        s_.format == "csv" ? TableFormat::Csv : TableFormat::Markdown;
    std::vector<Mode> modes = modes_of(s_);
    std::string text;
    for (Mode mode : modes) {
      if (modes.size() > 1) {
        if (!text.empty()) text += '\n';
        text += "# ";
        text += to_string(mode);
        text += '\n';
      }
      text += emit_table(aggregate(*results, facet, mode), format);
    }
    if (!emit(text)) return kExitItemError;
    return finish(*results);
  }

  int classify_one() {
    std::optional<Formula> formula;
    try {
      formula = parse_formula(s_.input);
    } catch (const ParseError& e) {
      err_ << "sentcx: " << e.what() << '\n';
      return kExitItemError;
    }
    Formula closed = universal_closure(*formula);
    std::vector<Mode> modes = modes_of(s_);
    std::string text;
    bool disagreement = false;
    for (Mode mode : modes) {
      Classification c = classify(closed, mode);
      std::string label =
          modes.size() > 1 ? std::string(to_string(mode)) + " " : "";
      text += label + c.complexity.to_string() + '\n';
      if (s_.witness) {
        text += label + print_formula(c.witness.to_formula()) + '\n';
      }
      if (s_.oracle) {
        std::optional<ComplexityClass> expected = oracle_for(closed, mode);
        if (!expected) {
          err_ << "sentcx: warning: oracle budget exceeded ("
               << to_string(mode) << ")\n";
        } else if (*expected != c.complexity) {
          err_ << "sentcx: oracle disagreement (" << to_string(mode)
               << "): minimizer " << c.complexity << ", oracle " << *expected
               << '\n';
          disagreement = true;
        }
      }
    }
    if (!emit(text)) return kExitItemError;
    return disagreement ? kExitOracleDisagreement : kExitOk;
  }

 private:
  std::optional<ComplexityClass> oracle_for(const Formula& closed, Mode mode) {
    try {
      return oracle_class_explicit(closed, mode, s_.oracle_budget);
    } catch (const BudgetExceeded&) {
    }
    try {
      return oracle_class(closed, mode, s_.oracle_budget);
    } catch (const BudgetExceeded&) {
      return std::nullopt;
    }
  }

  std::optional<std::vector<ItemResult>> load_and_analyze() {
    CorpusReadOptions options;
    options.strict = s_.strict;
    CorpusReadResult corpus;
    if (s_.input == "-") {
      corpus = read_corpus(in_, options);
    } else {
      std::ifstream file(s_.input);
      if (!file) {
        err_ << "sentcx: cannot open '" << s_.input << "'\n";
        return std::nullopt;
      }
      corpus = read_corpus(file, options);
    }
    for (const CorpusDiagnostic& w : corpus.warnings) {
      err_ << s_.input << ':' << w.line << ": warning: " << w.message << '\n';
    }
    for (const CorpusDiagnostic& e : corpus.errors) {
      err_ << s_.input << ':' << e.line << ": error: " << e.message << '\n';
    }
    if (s_.strict && !corpus.ok()) return std::nullopt;

    std::vector<ItemResult> results =
        analyze_items(corpus.items, analyze_options(s_));
    for (const ItemResult& r : results) {
      if (!r.error) continue;
      err_ << s_.input << ": error: item '" << r.name << "': " << *r.error
           << '\n';
      if (s_.strict) return std::nullopt;
    }
    return results;
  }

  int finish(const std::vector<ItemResult>& results) {
    bool disagreement = false;
    for (const ItemResult& r : results) {
      for (Mode mode : {Mode::Surface, Mode::Internal}) {
        const std::optional<ModeResult>& m = r.result(mode);
        if (!m || !s_.oracle) continue;
        if (!m->oracle) {
          err_ << "sentcx: warning: oracle budget exceeded for item '"
               << r.name << "' (" << to_string(mode) << ")\n";
        } else if (m->oracle_disagrees()) {
          err_ << "sentcx: oracle disagreement for item '" << r.name << "' ("
               << to_string(mode) << "): minimizer " << m->complexity
               << ", oracle " << *m->oracle << '\n';
          disagreement = true;
        }
      }
    }
    if (disagreement) return kExitOracleDisagreement;
    return kExitOk;
  }

  bool emit(const std::string& text) {
    if (s_.output.empty()) {
      out_ << text;
      out_.flush();
      return true;
    }
    std::ofstream file(s_.output, std::ios::binary);
    file << text;
    if (!file) {
      err_ << "sentcx: cannot write '" << s_.output << "'\n";
      return false;
    }
    return true;
  }

  const Settings& s_;
  std::istream& in_;
  std::ostream& out_;
  std::ostream& err_;
};

}  // namespace

int cli_main(const std::vector<std::string>& args, std::istream& in,
             std::ostream& out, std::ostream& err) {
  CLI::App app{"Quantifier-alternation complexity of first-order sentences"};
  app.name(args.empty() ? "sentcx" : args[0]);
  app.require_subcommand(1);

  Settings s;
  CLI::App* analyze = app.add_subcommand("analyze", "classify every corpus item");
  analyze->add_option("corpus", s.input, "JSON Lines corpus, or - for stdin")
      ->required();
  add_common_options(*analyze, s);
  analyze->add_flag("--strict", s.strict, "abort on the first corpus error");

  CLI::App* summarize =
      app.add_subcommand("summarize", "tabulate Pi/Sigma levels of a corpus");
  summarize->add_option("corpus", s.input, "JSON Lines corpus, or - for stdin")
      ->required();
  add_common_options(*summarize, s);
  summarize->add_flag("--strict", s.strict, "abort on the first corpus error");
  summarize->add_option("--facet", s.facets, "count only items of this kind");
  summarize->add_option("--format", s.format, "csv or markdown")
      ->check(CLI::IsMember({"csv", "markdown"}));

  CLI::App* classify_cmd =
      app.add_subcommand("classify", "classify one formula");
  classify_cmd->add_option("formula", s.input, "formula text")->required();
  add_common_options(*classify_cmd, s);
  classify_cmd->add_flag("--witness", s.witness,
                         "also print a minimal prenex witness");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  if (!reversed.empty()) reversed.pop_back();
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    std::vector<CLI::App*> chosen = app.get_subcommands();
    out << (chosen.empty() ? app.help() : chosen.front()->help());
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << app.get_name() << ": " << e.what() << '\n';
    err << "Run with --help for more information.\n";
    return kExitUsage;
  }

  Runner runner(s, in, out, err);
  if (analyze->parsed()) return runner.analyze();
  if (summarize->parsed()) return runner.summarize();
  return runner.classify_one();
}

}  // namespace sentcx
