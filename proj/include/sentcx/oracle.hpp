// Exhaustive prenexing, kept independent of the minimizer so the two can be
// checked against each other.
//
// enumerate_prenex_forms() runs the rewrite system literally: breadth-first
// over whole formulas, one rule application per step, de-duplicating visited
// states, collecting every normal form. It is exact but only practical for
// a handful of quantifiers.
//
// reachable_prefixes() computes the same set of prefixes, projected to
// quantifier kinds, compositionally: a quantifier prepends its kind, a
// binary node takes all interleavings of its children's prefixes. The
// language is stored as a hash-consed DAG (one node per distinct residual
// language), so every reachable prefix is represented without being listed.

#ifndef SENTCX_ORACLE_HPP
#define SENTCX_ORACLE_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "sentcx/complexity.hpp"
#include "sentcx/formula.hpp"
#include "sentcx/minimizer.hpp"

namespace sentcx {

inline constexpr std::size_t kDefaultOracleBudget = 1'000'000;

class BudgetExceeded : public std::runtime_error {
 public:
  explicit BudgetExceeded(std::size_t budget)
      : std::runtime_error("oracle budget of " + std::to_string(budget) +
                           " exceeded"),
        budget_(budget) {}
  std::size_t budget() const { return budget_; }

 private:
  std::size_t budget_;
};

/// All normal forms of the prenexing rewrite system applied to to_nnf(f)
/// (renamed apart first if its binders collide). `f` should be closed.
/// Throws BudgetExceeded once more than `budget` distinct intermediate
/// formulas have been visited.
std::vector<PrenexForm> enumerate_prenex_forms(
    const Formula& f, std::size_t budget = kDefaultOracleBudget);

/// One rewrite step at any position; exposed for tests.
std::vector<Formula> prenex_rewrite_steps(const Formula& f);

/// A finite language over {Universal, Existential}.
class PrefixLanguage {
 public:
  using NodeId = std::uint32_t;
  static constexpr NodeId kEmptySet = 0;
  static constexpr NodeId kEmptyWord = 1;

  explicit PrefixLanguage(std::size_t budget = kDefaultOracleBudget);

  NodeId prepend(Quantifier q, NodeId lang);
  NodeId unite(NodeId a, NodeId b);
  /// All interleavings of a word from `a` with a word from `b`.
  NodeId shuffle(NodeId a, NodeId b);

  bool contains(NodeId lang, std::span<const Quantifier> word) const;
  /// Number of words; saturates at UINT64_MAX.
  std::uint64_t word_count(NodeId lang) const;
  /// Lists words (lexicographic, Universal first); for small languages only.
  std::vector<std::vector<Quantifier>> words(NodeId lang) const;
  /// Minimum over all words of classify_prefix(word). Requires a non-empty
  /// language; Pi wins a tie.
  ComplexityClass min_class(NodeId lang) const;

  std::size_t node_count() const { return nodes_.size(); }

 private:
  struct Node {
    NodeId next[2];
    bool accepts;
  };
  struct PairHash {
    std::size_t operator()(std::uint64_t k) const {
      k ^= k >> 33;
      k *= 0xff51afd7ed558ccdULL;
      k ^= k >> 33;
      return static_cast<std::size_t>(k);
    }
  };

  NodeId make(NodeId universal, NodeId existential, bool accepts);
  static std::uint64_t key(NodeId a, NodeId b) {
    return (static_cast<std::uint64_t>(a) << 32) | b;
  }

  std::size_t budget_;
  std::vector<Node> nodes_;
  std::unordered_map<std::uint64_t, NodeId, PairHash> unique_[2];
  std::unordered_map<std::uint64_t, NodeId, PairHash> union_memo_;
  std::unordered_map<std::uint64_t, NodeId, PairHash> shuffle_memo_;
};

struct PrefixSet {
  PrefixLanguage language;
  PrefixLanguage::NodeId root;
};

/// Kind projection of every prefix reachable from to_nnf(f). Throws
/// BudgetExceeded when the DAG would exceed `budget` nodes.
PrefixSet reachable_prefixes(const Formula& f,
                             std::size_t budget = kDefaultOracleBudget);

/// Minimum over all enumerated prefixes of normalize(f, mode).
ComplexityClass oracle_class(const Formula& f, Mode mode,
                             std::size_t budget = kDefaultOracleBudget);

/// Same, via enumerate_prenex_forms.
ComplexityClass oracle_class_explicit(const Formula& f, Mode mode,
                                      std::size_t budget = kDefaultOracleBudget);

}  // namespace sentcx

#endif  // SENTCX_ORACLE_HPP
