// Binding discipline and equivalence-preserving rewrites over Formula.
//
// All functions are pure. Transforms that may meet shared subtrees (the Iff
// expansions duplicate their operands) memoize on node identity, so a
// formula stored as a DAG is processed once per distinct node.

#ifndef SENTCX_TRANSFORMS_HPP
#define SENTCX_TRANSFORMS_HPP

#include <set>
#include <string>
#include <vector>

#include "sentcx/formula.hpp"

namespace sentcx {

std::set<std::string> free_vars(const Formula& f);

/// Free variables in order of first free occurrence, left to right.
std::vector<std::string> free_vars_in_order(const Formula& f);

bool occurs_free(const std::string& var, const Formula& f);

/// Bound variable of every quantifier node, in pre-order.
std::vector<std::string> bound_vars(const Formula& f);

/// Closes `f` universally; the first free variable becomes the outermost
/// binder. Closed formulas are returned unchanged.
Formula universal_closure(const Formula& f);

/// Rewrites into the internal battery {forall, and, not} over atoms,
/// equalities, verum and falsum:
///   a => b   ~> ~(a & ~b)
///   a | b    ~> ~(~a & ~b)
///   a <=> b  ~> ~(a & ~b) & ~(b & ~a)
///   ?x. a    ~> ~!x. ~a
Formula to_internal(const Formula& f);

/// Negation normal form over {and, or, forall, exists} with negation only
/// on atoms and equalities. `<=>` expands by polarity: (a & b) | (~a & ~b)
/// when positive, (a & ~b) | (~a & b) when negated.
Formula to_nnf(const Formula& f);

/// Alpha-renames every binder to a distinct fresh name `base_k`, where `k`
/// counts per base name in pre-order and skips names already free in `f`.
Formula rename_apart(const Formula& f);

/// True when binders are pairwise distinct and disjoint from free variables.
bool is_renamed_apart(const Formula& f);

/// Structural scans used by tests and assertions.
bool in_internal_battery(const Formula& f);
bool in_nnf(const Formula& f);
bool is_quantifier_free(const Formula& f);
std::size_t quantifier_count(const Formula& f);

}  // namespace sentcx

#endif  // SENTCX_TRANSFORMS_HPP
