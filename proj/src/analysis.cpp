#include "sentcx/analysis.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <utility>

#include "json.hpp"
#include "sentcx/syntax.hpp"
#include "sentcx/transforms.hpp"

namespace sentcx {

bool ItemResult::oracle_disagrees() const {
  return (surface && surface->oracle_disagrees()) ||
         (internal && internal->oracle_disagrees());
}

namespace {

struct SymbolUse {
  bool predicate;
  std::string name;
  std::size_t arity;
};

void collect_term_uses(const Term& t, std::vector<SymbolUse>& out) {
  if (t.is_variable()) return;
  out.push_back({false, t.name(), t.args().size()});
  for (const Term& a : t.args()) collect_term_uses(a, out);
}

void collect_uses(const Formula& f, std::vector<SymbolUse>& out) {
  switch (f.kind()) {
    case FormulaKind::Atom:
      out.push_back({true, f.predicate(), f.args().size()});
      [[fallthrough]];
    case FormulaKind::Equality:
      for (const Term& t : f.args()) collect_term_uses(t, out);
      return;
    case FormulaKind::Not:
    case FormulaKind::Forall:
    case FormulaKind::Exists:
      collect_uses(f.operand(), out);
      return;
    case FormulaKind::And:
    case FormulaKind::Or:
    case FormulaKind::Implies:
    case FormulaKind::Iff:
      collect_uses(f.left(), out);
      collect_uses(f.right(), out);
      return;
    default:
      return;
  }
}

std::optional<ComplexityClass> run_oracle(const Formula& closed, Mode mode,
                                          std::size_t budget) {
  try {
    return oracle_class_explicit(closed, mode, budget);
  } catch (const BudgetExceeded&) {
  }
  try {
    return oracle_class(closed, mode, budget);
  } catch (const BudgetExceeded&) {
    return std::nullopt;
  }
}

ModeResult classify_mode(const Formula& closed, Mode mode,
                         const AnalyzeOptions& options) {
  Classification c = classify(closed, mode);
  ModeResult out{c.complexity, print_prefix(c.witness.prefix), std::nullopt};
  if (options.oracle) out.oracle = run_oracle(closed, mode, options.oracle_budget);
  return out;
}

}  // namespace

std::vector<std::optional<std::string>> signature_errors(
    std::span<const CorpusItem> items) {
  // (is_predicate, name) -> (arity, item that fixed it)
  std::map<std::pair<bool, std::string>, std::pair<std::size_t, std::string>>
      fixed;
  std::vector<std::optional<std::string>> out(items.size());
  for (std::size_t i = 0; i < items.size(); ++i) {
    std::vector<SymbolUse> uses;
    collect_uses(items[i].formula, uses);
    std::map<std::pair<bool, std::string>, std::size_t> local;
    for (const SymbolUse& u : uses) {
      const char* what = u.predicate ? "predicate" : "function";
      auto key = std::make_pair(u.predicate, u.name);
      auto global = fixed.find(key);
      if (global != fixed.end() && global->second.first != u.arity) {
        out[i] = std::string(what) + " '" + u.name + "' used with arity " +
                 std::to_string(u.arity) + ", but item '" +
                 global->second.second + "' fixed arity " +
                 std::to_string(global->second.first);
        break;
      }
      auto [it, inserted] = local.emplace(key, u.arity);
      if (!inserted && it->second != u.arity) {
        out[i] = std::string(what) + " '" + u.name +
                 "' used with arities " + std::to_string(it->second) +
                 " and " + std::to_string(u.arity);
        break;
      }
    }
    if (out[i]) continue;
    for (const auto& [key, arity] : local) {
      fixed.try_emplace(key, arity, items[i].name);
    }
  }
  return out;
}

ItemResult analyze_item(const CorpusItem& item,
                        const AnalyzeOptions& options) {
  ItemResult r;
  r.name = item.name;
  r.kind = item.kind;
  try {
    Formula closed = universal_closure(item.formula);
    if (options.surface) r.surface = classify_mode(closed, Mode::Surface, options);
    if (options.internal) {
      r.internal = classify_mode(closed, Mode::Internal, options);
    }
  } catch (const std::exception& e) {
    r.surface.reset();
    r.internal.reset();
    r.error = e.what();
  }
  return r;
}

std::vector<ItemResult> analyze_items_serial(std::span<const CorpusItem> items,
                                             const AnalyzeOptions& options) {
  std::vector<std::optional<std::string>> conflicts = signature_errors(items);
  std::vector<ItemResult> results(items.size());
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (conflicts[i]) {
      results[i].name = items[i].name;
      results[i].kind = items[i].kind;
      results[i].error = *conflicts[i];
      continue;
    }
    results[i] = analyze_item(items[i], options);
  }
  return results;
}

std::vector<ItemResult> analyze_items(std::span<const CorpusItem> items,
                                      const AnalyzeOptions& options) {
  std::vector<std::optional<std::string>> conflicts = signature_errors(items);
  std::vector<ItemResult> results(items.size());
  const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(items.size());
#pragma omp parallel for schedule(dynamic, 16)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    if (conflicts[i]) {
      results[i].name = items[i].name;
      results[i].kind = items[i].kind;
      results[i].error = *conflicts[i];
      continue;
    }
    results[i] = analyze_item(items[i], options);
  }
  return results;
}

void ComplexityTable::add(const ComplexityClass& c) {
  std::size_t level = static_cast<std::size_t>(c.level());
  while (rows.size() <= level) {
    rows.push_back(TableRow{static_cast<int>(rows.size()), 0, 0});
  }
  TableRow& row = rows[level];
  if (c.kind() != ClassKind::Sigma) {
    ++row.pi_count;
    ++total_pi;
  }
  if (c.kind() != ClassKind::Pi) {
    ++row.sigma_count;
    ++total_sigma;
  }
}

void ComplexityTable::merge(const ComplexityTable& other) {
  while (rows.size() < other.rows.size()) {
    rows.push_back(TableRow{static_cast<int>(rows.size()), 0, 0});
  }
  for (const TableRow& r : other.rows) {
    rows[static_cast<std::size_t>(r.level)].pi_count += r.pi_count;
    rows[static_cast<std::size_t>(r.level)].sigma_count += r.sigma_count;
  }
  total_pi += other.total_pi;
  total_sigma += other.total_sigma;
}

ComplexityTable aggregate(std::span<const ItemResult> results,
                          std::span<const ItemKind> facet, Mode mode) {
  ComplexityTable table;
  table.facet.assign(facet.begin(), facet.end());
  table.mode = mode;
  for (const ItemResult& r : results) {
    if (r.error) continue;
    if (!facet.empty() &&
        std::find(facet.begin(), facet.end(), r.kind) == facet.end()) {
      continue;
    }
    const std::optional<ModeResult>& m = r.result(mode);
    if (!m) continue;
    table.add(m->complexity);
  }
  return table;
}

std::string emit_table(const ComplexityTable& table, TableFormat format) {
  std::ostringstream out;
  if (format == TableFormat::Csv) {
    out << "n,pi_count,sigma_count\n";
    for (const TableRow& r : table.rows) {
      out << r.level << ',' << r.pi_count << ',' << r.sigma_count << '\n';
    }
    out << "total," << table.total_pi << ',' << table.total_sigma << '\n';
    return out.str();
  }
  out << "| n | Π_n | Σ_n |\n";
  out << "|---|---|---|\n";
  for (const TableRow& r : table.rows) {
    out << "| " << r.level << " | " << r.pi_count << " | " << r.sigma_count
        << " |\n";
  }
  out << "| Total | " << table.total_pi << " | " << table.total_sigma
      << " |\n";
  return out.str();
}

std::string item_result_jsonl(const ItemResult& result) {
  using Json = nlohmann::ordered_json;
  std::string out;
  if (result.error) {
    Json j;
    j["name"] = result.name;
    j["kind"] = std::string(to_string(result.kind));
    j["error"] = *result.error;
    out += j.dump();
    out += '\n';
    return out;
  }
  for (Mode mode : {Mode::Surface, Mode::Internal}) {
    const std::optional<ModeResult>& m = result.result(mode);
    if (!m) continue;
    Json j;
    j["name"] = result.name;
    j["kind"] = std::string(to_string(result.kind));
    j["mode"] = std::string(to_string(mode));
    j["class"] = std::string(m->complexity.kind_name());
    j["level"] = m->complexity.level();
    j["prefix"] = m->witness_prefix;
    if (m->oracle) j["oracle"] = m->oracle->to_string();
    out += j.dump();
    out += '\n';
  }
  return out;
}

}  // namespace sentcx
