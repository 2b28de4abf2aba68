#include "sentcx/formula.hpp"

#include <cassert>
#include <functional>
#include <stdexcept>
#include <utility>

namespace sentcx {
namespace {

std::size_t mix(std::size_t seed, std::size_t v) {
  // boost::hash_combine with the 64-bit golden ratio constant.
  return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 12) + (seed >> 4));
}

}  // namespace

Term::Term(Kind kind, std::string name, std::vector<Term> args)
    : kind_(kind), name_(std::move(name)), args_(std::move(args)) {
  std::size_t h = mix(static_cast<std::size_t>(kind_) + 17,
                      std::hash<std::string>{}(name_));
  for (const Term& a : args_) h = mix(h, a.hash_);
  hash_ = h;
}

Term Term::variable(std::string name) {
  return Term(Kind::Variable, std::move(name), {});
}

Term Term::application(std::string function, std::vector<Term> args) {
  return Term(Kind::Application, std::move(function), std::move(args));
}

bool operator==(const Term& a, const Term& b) {
  return a.hash_ == b.hash_ && a.kind_ == b.kind_ && a.name_ == b.name_ &&
         a.args_ == b.args_;
}

const char* to_string(FormulaKind kind) {
  switch (kind) {
    case FormulaKind::Verum: return "verum";
    case FormulaKind::Falsum: return "falsum";
    case FormulaKind::Atom: return "atom";
    case FormulaKind::Equality: return "equality";
    case FormulaKind::Not: return "not";
    case FormulaKind::And: return "and";
    case FormulaKind::Or: return "or";
    case FormulaKind::Implies: return "implies";
    case FormulaKind::Iff: return "iff";
    case FormulaKind::Forall: return "forall";
    case FormulaKind::Exists: return "exists";
  }
  return "?";
}

struct Formula::Node {
  FormulaKind kind;
  std::string symbol;
  std::vector<Term> args;
  Formula children[2];
  std::size_t hash;
  std::size_t size;

  Node(FormulaKind k, std::string sym, std::vector<Term> a, Formula l,
       Formula r)
      : kind(k), symbol(std::move(sym)), args(std::move(a)) {
    children[0] = std::move(l);
    children[1] = std::move(r);
    std::size_t h = mix(static_cast<std::size_t>(kind) * 0x51ed27ULL + 3,
                        std::hash<std::string>{}(symbol));
    for (const Term& t : args) h = mix(h, t.hash());
    std::size_t n = 1;
    for (const Formula& c : children) {
      if (!c.node_) continue;
      h = mix(h, c.node_->hash);
      n += c.node_->size;
    }
    hash = h;
    size = n;
  }
};

Formula Formula::verum() {
  static const Formula v(std::make_shared<const Node>(
      FormulaKind::Verum, std::string{}, std::vector<Term>{}, Formula{},
      Formula{}));
  return v;
}

Formula Formula::falsum() {
  static const Formula v(std::make_shared<const Node>(
      FormulaKind::Falsum, std::string{}, std::vector<Term>{}, Formula{},
      Formula{}));
  return v;
}

Formula Formula::atom(std::string predicate, std::vector<Term> args) {
  return Formula(std::make_shared<const Node>(FormulaKind::Atom,
                                              std::move(predicate),
                                              std::move(args), Formula{},
                                              Formula{}));
}

Formula Formula::equality(Term lhs, Term rhs) {
  std::vector<Term> args;
  args.reserve(2);
  args.push_back(std::move(lhs));
  args.push_back(std::move(rhs));
  return Formula(std::make_shared<const Node>(
      FormulaKind::Equality, std::string{}, std::move(args), Formula{},
      Formula{}));
}

Formula Formula::negation(Formula f) {
  return Formula(std::make_shared<const Node>(FormulaKind::Not, std::string{},
                                              std::vector<Term>{},
                                              std::move(f), Formula{}));
}

Formula Formula::binary(FormulaKind kind, Formula l, Formula r) {
  if (kind != FormulaKind::And && kind != FormulaKind::Or &&
      kind != FormulaKind::Implies && kind != FormulaKind::Iff) {
    throw std::invalid_argument("Formula::binary: not a binary connective");
  }
  return Formula(std::make_shared<const Node>(kind, std::string{},
                                              std::vector<Term>{},
                                              std::move(l), std::move(r)));
}

Formula Formula::conjunction(Formula l, Formula r) {
  return binary(FormulaKind::And, std::move(l), std::move(r));
}
Formula Formula::disjunction(Formula l, Formula r) {
  return binary(FormulaKind::Or, std::move(l), std::move(r));
}
Formula Formula::implication(Formula l, Formula r) {
  return binary(FormulaKind::Implies, std::move(l), std::move(r));
}
Formula Formula::equivalence(Formula l, Formula r) {
  return binary(FormulaKind::Iff, std::move(l), std::move(r));
}

Formula Formula::quantified(Quantifier q, std::string var, Formula body) {
  FormulaKind kind =
      q == Quantifier::Universal ? FormulaKind::Forall : FormulaKind::Exists;
  return Formula(std::make_shared<const Node>(kind, std::move(var),
                                              std::vector<Term>{},
                                              std::move(body), Formula{}));
}

Formula Formula::forall(std::string var, Formula body) {
  return quantified(Quantifier::Universal, std::move(var), std::move(body));
}
Formula Formula::exists(std::string var, Formula body) {
  return quantified(Quantifier::Existential, std::move(var), std::move(body));
}

FormulaKind Formula::kind() const { return node_->kind; }

bool Formula::is_literal_base() const {
  switch (node_->kind) {
    case FormulaKind::Verum:
    case FormulaKind::Falsum:
    case FormulaKind::Atom:
    case FormulaKind::Equality:
      return true;
    default:
      return false;
  }
}

bool Formula::is_binary() const {
  switch (node_->kind) {
    case FormulaKind::And:
    case FormulaKind::Or:
    case FormulaKind::Implies:
    case FormulaKind::Iff:
      return true;
    default:
      return false;
  }
}

bool Formula::is_quantifier() const {
  return node_->kind == FormulaKind::Forall ||
         node_->kind == FormulaKind::Exists;
}

Quantifier Formula::quantifier() const {
  assert(is_quantifier());
  return node_->kind == FormulaKind::Forall ? Quantifier::Universal
                                            : Quantifier::Existential;
}

const std::string& Formula::symbol() const { return node_->symbol; }

std::span<const Term> Formula::args() const { return node_->args; }

const Formula& Formula::left() const {
  assert(node_->children[0].node_);
  return node_->children[0];
}

const Formula& Formula::right() const {
  assert(node_->children[1].node_);
  return node_->children[1];
}

std::size_t Formula::hash() const { return node_->hash; }

std::size_t Formula::size() const { return node_->size; }

bool operator==(const Formula& a, const Formula& b) {
  const Formula::Node* x = a.node_.get();
  const Formula::Node* y = b.node_.get();
  if (x == y) return true;
  if (!x || !y) return false;
  if (x->hash != y->hash || x->size != y->size || x->kind != y->kind) {
    return false;
  }
  return x->symbol == y->symbol && x->args == y->args &&
         x->children[0] == y->children[0] && x->children[1] == y->children[1];
}

}  // namespace sentcx
