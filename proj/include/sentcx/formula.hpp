// First-order terms and formulas.
//
// Formulas are immutable trees of shared nodes: copying a Formula copies a
// pointer, and transforms rebuild only the spine they change. Structural
// equality and a hash are available in O(1) for the common unequal case
// because every node caches its hash and size at construction.

#ifndef SENTCX_FORMULA_HPP
#define SENTCX_FORMULA_HPP

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace sentcx {

class Term {
 public:
  enum class Kind : std::uint8_t { Variable, Application };

  static Term variable(std::string name);
  /// Constants are 0-ary applications.
  static Term application(std::string function, std::vector<Term> args = {});

  Kind kind() const { return kind_; }
  bool is_variable() const { return kind_ == Kind::Variable; }
  const std::string& name() const { return name_; }
  std::span<const Term> args() const { return args_; }
  std::size_t hash() const { return hash_; }

  friend bool operator==(const Term& a, const Term& b);

 private:
  Term(Kind kind, std::string name, std::vector<Term> args);

  Kind kind_;
  std::string name_;
  std::vector<Term> args_;
  std::size_t hash_;
};

enum class Quantifier : std::uint8_t { Universal, Existential };

inline Quantifier dual(Quantifier q) {
  return q == Quantifier::Universal ? Quantifier::Existential
                                    : Quantifier::Universal;
}

enum class FormulaKind : std::uint8_t {
  Verum,
  Falsum,
  Atom,
  Equality,
  Not,
  And,
  Or,
  Implies,
  Iff,
  Forall,
  Exists,
};

const char* to_string(FormulaKind kind);

class Formula {
 public:
  static Formula verum();
  static Formula falsum();
  static Formula atom(std::string predicate, std::vector<Term> args = {});
  static Formula equality(Term lhs, Term rhs);
  static Formula negation(Formula f);
  static Formula conjunction(Formula l, Formula r);
  static Formula disjunction(Formula l, Formula r);
  static Formula implication(Formula l, Formula r);
  static Formula equivalence(Formula l, Formula r);
  static Formula forall(std::string var, Formula body);
  static Formula exists(std::string var, Formula body);

  /// `kind` must be one of And, Or, Implies, Iff.
  static Formula binary(FormulaKind kind, Formula l, Formula r);
  static Formula quantified(Quantifier q, std::string var, Formula body);

  FormulaKind kind() const;

  bool is_literal_base() const;  // Atom, Equality, Verum, Falsum
  bool is_binary() const;
  bool is_quantifier() const;
  Quantifier quantifier() const;  // requires is_quantifier()

  /// Predicate name for atoms, bound variable for quantifiers.
  const std::string& symbol() const;
  const std::string& predicate() const { return symbol(); }
  const std::string& variable() const { return symbol(); }

  /// Atom arguments; for Equality the two sides.
  std::span<const Term> args() const;
  const Term& lhs() const { return args()[0]; }
  const Term& rhs() const { return args()[1]; }

  /// Operand of Not, body of a quantifier, or left side of a binary node.
  const Formula& left() const;
  const Formula& right() const;
  const Formula& operand() const { return left(); }
  const Formula& body() const { return left(); }

  std::size_t hash() const;
  /// Number of formula nodes (terms not counted).
  std::size_t size() const;
  /// Identity of the shared node; stable for the lifetime of any copy.
  const void* id() const { return node_.get(); }

  friend bool operator==(const Formula& a, const Formula& b);

 private:
  struct Node;
  Formula() = default;
  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

struct FormulaHash {
  std::size_t operator()(const Formula& f) const { return f.hash(); }
};

}  // namespace sentcx

#endif  // SENTCX_FORMULA_HPP
