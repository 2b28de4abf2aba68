// Writes the expected classes and summary tables for a fixture corpus,
// using only the exhaustive oracle. Output goes next to the corpus:
//
//   fixture_oracle tests/fixtures/mini.jsonl
//     -> mini.expected.jsonl, mini.summary.csv, mini.summary.md,
//        mini.definitional.csv

#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "json.hpp"
#include "sentcx/corpus.hpp"
#include "sentcx/oracle.hpp"
#include "sentcx/transforms.hpp"

using namespace sentcx;

namespace {

ComplexityClass exhaustive(const Formula& f, Mode mode) {
  try {
    return oracle_class_explicit(f, mode);
  } catch (const BudgetExceeded&) {
    return oracle_class(f, mode);
  }
}

struct Counts {
  std::map<int, std::pair<int, int>> rows;
  int pi = 0;
  int sigma = 0;
  void add(const ComplexityClass& c) {
    auto& row = rows[c.level()];
    if (c.kind() != ClassKind::Sigma) {
      ++row.first;
      ++pi;
    }
    if (c.kind() != ClassKind::Pi) {
      ++row.second;
      ++sigma;
    }
  }
  int top() const { return rows.empty() ? -1 : rows.rbegin()->first; }
  std::pair<int, int> at(int level) const {
    auto it = rows.find(level);
    return it == rows.end() ? std::pair<int, int>{0, 0} : it->second;
  }
};

std::string csv(const Counts& c) {
  std::ostringstream out;
  out << "n,pi_count,sigma_count\n";
  for (int n = 0; n <= c.top(); ++n) {
    out << n << ',' << c.at(n).first << ',' << c.at(n).second << '\n';
  }
  out << "total," << c.pi << ',' << c.sigma << '\n';
  return out.str();
}

std::string markdown(const Counts& c) {
  std::ostringstream out;
  out << "| n | Π_n | Σ_n |\n|---|---|---|\n";
  for (int n = 0; n <= c.top(); ++n) {
    out << "| " << n << " | " << c.at(n).first << " | " << c.at(n).second
        << " |\n";
  }
  out << "| Total | " << c.pi << " | " << c.sigma << " |\n";
  return out.str();
}

void write(const std::filesystem::path& path, const std::string& text) {
  std::ofstream(path, std::ios::binary) << text;
  std::cout << "wrote " << path.string() << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: fixture_oracle <corpus.jsonl>\n";
    return 2;
  }
  std::filesystem::path corpus_path = argv[1];
  std::ifstream in(corpus_path);
  CorpusReadResult corpus = read_corpus(in, CorpusReadOptions{true});
  if (!corpus.ok()) {
    std::cerr << corpus_path.string() << ':' << corpus.errors[0].line << ": "
              << corpus.errors[0].message << '\n';
    return 1;
  }

  std::string expected;
  Counts all;
  Counts definitional;
  for (const CorpusItem& item : corpus.items) {
    Formula closed = universal_closure(item.formula);
    for (Mode mode : {Mode::Surface, Mode::Internal}) {
      ComplexityClass c = exhaustive(closed, mode);
      nlohmann::ordered_json line;
      line["name"] = item.name;
      line["kind"] = std::string(to_string(item.kind));
      line["mode"] = std::string(to_string(mode));
      line["class"] = c.to_string();
      expected += line.dump() + '\n';
      if (mode != Mode::Internal) continue;
      all.add(c);
      if (item.kind == ItemKind::DefinitionalTheorem) definitional.add(c);
    }
  }

  std::filesystem::path dir = corpus_path.parent_path();
  std::string stem = corpus_path.stem().string();
  write(dir / (stem + ".expected.jsonl"), expected);
  write(dir / (stem + ".summary.csv"), csv(all));
  write(dir / (stem + ".summary.md"), markdown(all));
  write(dir / (stem + ".definitional.csv"), csv(definitional));
  return 0;
}
