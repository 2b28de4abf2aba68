// Corpus files: JSON Lines, one kind-tagged sentence per line.
//
//   {"name":"t1","kind":"theorem","formula":"![X]: p(X)"}
//
// "name", "kind" and "formula" are required strings; an optional "source"
// string is carried through untouched.

#ifndef SENTCX_CORPUS_HPP
#define SENTCX_CORPUS_HPP

#include <cstddef>
#include <istream>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sentcx/formula.hpp"

namespace sentcx {

enum class ItemKind : std::uint8_t {
  Theorem,
  DefinitionalTheorem,
  Lemma,
  Property,
  RewriteRule,
  Identification,
  RedefinitionCompatibility,
  SchemeInstance,
  ExistenceCondition,
  UniquenessCondition,
  TypeNonEmptiness,
  Other,
};

inline constexpr ItemKind kAllItemKinds[] = {
    ItemKind::Theorem,           ItemKind::DefinitionalTheorem,
    ItemKind::Lemma,             ItemKind::Property,
    ItemKind::RewriteRule,       ItemKind::Identification,
    ItemKind::RedefinitionCompatibility, ItemKind::SchemeInstance,
    ItemKind::ExistenceCondition, ItemKind::UniquenessCondition,
    ItemKind::TypeNonEmptiness,  ItemKind::Other,
};

/// snake_case name, e.g. "definitional_theorem".
std::string_view to_string(ItemKind kind);
std::optional<ItemKind> item_kind_from_string(std::string_view text);

struct CorpusItem {
  std::string name;
  ItemKind kind;
  Formula formula;
  std::string source_text;  // the "formula" field as written
  std::optional<std::string> source;
};

struct CorpusDiagnostic {
  std::size_t line;  // 1-based line in the corpus file
  std::string message;
};

struct CorpusReadResult {
  std::vector<CorpusItem> items;
  std::vector<CorpusDiagnostic> errors;
  std::vector<CorpusDiagnostic> warnings;

  bool ok() const { return errors.empty(); }
};

struct CorpusReadOptions {
  /// Stop at the first error instead of skipping the offending line.
  bool strict = false;
};

/// Items come back in file order. Blank lines are ignored; unknown kinds
/// become ItemKind::Other with a warning; duplicate names are errors.
CorpusReadResult read_corpus(std::istream& in, CorpusReadOptions options = {});

}  // namespace sentcx

#endif  // SENTCX_CORPUS_HPP
