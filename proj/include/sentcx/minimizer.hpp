// Minimal quantifier-alternation class of a sentence under the prenexing
// rules (pull a quantifier out of either side of & or |, drop a vacuous
// quantifier).
//
// The minimizer never builds prenex forms. For every subformula it keeps,
// per leading quantifier kind t, the least number of alternating blocks of a
// t-led pattern into which some reachable prefix embeds. Embedding is
// monotone in the pattern, and a shuffle of two prefixes embeds into a
// pattern exactly when both prefixes do, so two numbers per node suffice.
// Agreement with exhaustive enumeration (oracle.hpp) is checked by tests.

#ifndef SENTCX_MINIMIZER_HPP
#define SENTCX_MINIMIZER_HPP

#include <optional>
#include <string_view>

#include "sentcx/complexity.hpp"
#include "sentcx/formula.hpp"

namespace sentcx {

enum class Mode : std::uint8_t { Surface, Internal };

std::string_view to_string(Mode mode);
std::optional<Mode> mode_from_string(std::string_view text);

struct PatternSet {
  std::optional<int> best_universal_start;
  std::optional<int> best_existential_start;
  bool reaches_empty = false;

  std::optional<int> best(Quantifier q) const {
    return q == Quantifier::Universal ? best_universal_start
                                      : best_existential_start;
  }

  friend bool operator==(const PatternSet&, const PatternSet&) = default;
};

/// `f` must be in negation normal form (std::invalid_argument otherwise).
/// The result is invariant under renaming of bound variables, so `f` need
/// not be renamed apart; shared subtrees are evaluated once.
PatternSet pattern_of(const Formula& f);

/// Lowest level among the populated entries; Pi wins a tie.
ComplexityClass class_of(const PatternSet& p);

/// The formula the classifier works on: to_internal (Internal mode only)
/// followed by to_nnf.
Formula normalize(const Formula& f, Mode mode);

/// `f` should be closed; callers apply universal_closure first.
ComplexityClass minimal_class(const Formula& f, Mode mode);

/// A reachable prenex form of normalize(f, mode), renamed apart, whose prefix
/// classifies to minimal_class(f, mode). Quantifiers are placed in the
/// earliest block of the chosen pattern; within a block they keep the
/// left-to-right, outside-in order of the formula.
PrenexForm minimal_witness(const Formula& f, Mode mode);

struct Classification {
  ComplexityClass complexity;
  PrenexForm witness;
};

Classification classify(const Formula& f, Mode mode);

}  // namespace sentcx

#endif  // SENTCX_MINIMIZER_HPP
