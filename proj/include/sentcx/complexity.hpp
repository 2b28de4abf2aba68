// The Pi/Sigma sentence-complexity hierarchy over prenex prefixes.

#ifndef SENTCX_COMPLEXITY_HPP
#define SENTCX_COMPLEXITY_HPP

#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sentcx/formula.hpp"

namespace sentcx {

enum class ClassKind : std::uint8_t { QuantifierFree, Pi, Sigma };

/// (kind, level) with QuantifierFree exactly at level 0.
class ComplexityClass {
 public:
  static ComplexityClass quantifier_free() { return {}; }
  /// Throws std::invalid_argument unless level >= 1.
  static ComplexityClass pi(int level);
  static ComplexityClass sigma(int level);

  ComplexityClass() = default;

  ClassKind kind() const { return kind_; }
  int level() const { return level_; }

  /// "Pi", "Sigma" or "QF".
  std::string_view kind_name() const;
  /// "Pi 2", "QF 0".
  std::string to_string() const;
  static std::optional<ComplexityClass> from_string(std::string_view text);

  friend bool operator==(const ComplexityClass&,
                         const ComplexityClass&) = default;

 private:
  ComplexityClass(ClassKind kind, int level) : kind_(kind), level_(level) {}

  ClassKind kind_ = ClassKind::QuantifierFree;
  int level_ = 0;
};

std::ostream& operator<<(std::ostream& os, const ComplexityClass& c);

/// Alternating block word: one entry per maximal run of like quantifiers.
class PrefixPattern {
 public:
  PrefixPattern() = default;
  /// Collapses maximal runs of `kinds`.
  static PrefixPattern collapse(std::span<const Quantifier> kinds);

  std::span<const Quantifier> blocks() const { return blocks_; }
  std::size_t block_count() const { return blocks_.size(); }
  bool empty() const { return blocks_.empty(); }

  friend bool operator==(const PrefixPattern&, const PrefixPattern&) = default;

 private:
  std::vector<Quantifier> blocks_;
};

ComplexityClass classify_prefix(std::span<const Quantifier> prefix);

struct PrenexForm {
  std::vector<std::pair<Quantifier, std::string>> prefix;
  Formula matrix;

  std::vector<Quantifier> kinds() const;
  /// The prefix wrapped around the matrix, outermost binder first.
  Formula to_formula() const;

  friend bool operator==(const PrenexForm&, const PrenexForm&) = default;
};

/// Splits the leading quantifiers off `f`. The matrix need not be
/// quantifier-free.
PrenexForm split_prefix(const Formula& f);

}  // namespace sentcx

#endif  // SENTCX_COMPLEXITY_HPP
