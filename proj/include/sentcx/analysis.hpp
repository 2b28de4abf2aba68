// Batch classification of corpus items and Pi/Sigma tabulation.

#ifndef SENTCX_ANALYSIS_HPP
#define SENTCX_ANALYSIS_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sentcx/complexity.hpp"
#include "sentcx/corpus.hpp"
#include "sentcx/minimizer.hpp"
#include "sentcx/oracle.hpp"

namespace sentcx {

struct ModeResult {
  ComplexityClass complexity;
  /// Printed prefix of the minimal witness, e.g. "![X_1]: ?[Y_1]:".
  std::string witness_prefix;
  /// Set when the oracle cross-check ran to completion.
  std::optional<ComplexityClass> oracle;

  bool oracle_disagrees() const { return oracle && *oracle != complexity; }

  friend bool operator==(const ModeResult&, const ModeResult&) = default;
};

struct ItemResult {
  std::string name;
  ItemKind kind = ItemKind::Other;
  std::optional<ModeResult> surface;
  std::optional<ModeResult> internal;
  std::optional<std::string> error;

  const std::optional<ModeResult>& result(Mode mode) const {
    return mode == Mode::Surface ? surface : internal;
  }
  bool oracle_disagrees() const;

  friend bool operator==(const ItemResult&, const ItemResult&) = default;
};

struct AnalyzeOptions {
  bool surface = false;
  bool internal = true;
  /// Cross-check each class against exhaustive enumeration.
  bool oracle = false;
  std::size_t oracle_budget = kDefaultOracleBudget;
};

/// Per-item arity conflicts against the corpus signature. The first item
/// that uses a predicate or function symbol fixes its arity; later items
/// that disagree (or disagree with themselves) get an error message.
std::vector<std::optional<std::string>> signature_errors(
    std::span<const CorpusItem> items);

/// Closes every item universally and classifies it in each requested mode.
/// Per-item failures are recorded in ItemResult::error; results are in
/// input order. Items are processed on an OpenMP worker pool.
std::vector<ItemResult> analyze_items(std::span<const CorpusItem> items,
                                      const AnalyzeOptions& options = {});

/// Single-threaded reference for analyze_items; identical output.
std::vector<ItemResult> analyze_items_serial(std::span<const CorpusItem> items,
                                             const AnalyzeOptions& options = {});

/// One analyzed item; the unit of work shared by both drivers.
ItemResult analyze_item(const CorpusItem& item, const AnalyzeOptions& options);

struct TableRow {
  int level = 0;
  std::uint64_t pi_count = 0;
  std::uint64_t sigma_count = 0;

  friend bool operator==(const TableRow&, const TableRow&) = default;
};

struct ComplexityTable {
  /// Dense in level from 0 up to the highest observed level.
  std::vector<TableRow> rows;
  std::uint64_t total_pi = 0;
  std::uint64_t total_sigma = 0;
  /// Kinds counted; empty means every kind.
  std::vector<ItemKind> facet;
  Mode mode = Mode::Internal;

  /// Quantifier-free sentences count in both columns at level 0.
  void add(const ComplexityClass& c);
  /// Associative and commutative.
  void merge(const ComplexityTable& other);
};

/// Tabulates results for `mode`, skipping failed items and kinds outside a
/// non-empty `facet`.
ComplexityTable aggregate(std::span<const ItemResult> results,
                          std::span<const ItemKind> facet, Mode mode);

enum class TableFormat : std::uint8_t { Csv, Markdown };

std::string emit_table(const ComplexityTable& table, TableFormat format);

/// JSON Lines for one item: a line per requested mode, or a single error
/// line ({"name":...,"kind":...,"error":...}).
std::string item_result_jsonl(const ItemResult& result);

}  // namespace sentcx

#endif  // SENTCX_ANALYSIS_HPP
