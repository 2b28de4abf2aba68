#include "sentcx/evaluate.hpp"

#include <optional>
#include <utility>

namespace sentcx {

Interpretation::Interpretation(std::uint32_t domain_size)
    : domain_size_(domain_size) {
  if (domain_size == 0) {
    throw std::invalid_argument("Interpretation: domain must be non-empty");
  }
}

namespace {

std::size_t table_size(std::uint32_t domain, std::size_t arity) {
  std::size_t n = 1;
  for (std::size_t i = 0; i < arity; ++i) n *= domain;
  return n;
}

}  // namespace

void Interpretation::set_function(const std::string& name, std::size_t arity,
                                  std::vector<Element> values) {
  if (values.size() != table_size(domain_size_, arity)) {
    throw std::invalid_argument("function table for '" + name +
                                "' has the wrong size");
  }
  for (Element v : values) {
    if (v >= domain_size_) {
      throw std::invalid_argument("function table for '" + name +
                                  "' leaves the domain");
    }
  }
  functions_[name] = Table{arity, std::move(values)};
}

void Interpretation::set_predicate(const std::string& name, std::size_t arity,
                                   std::vector<bool> values) {
  if (values.size() != table_size(domain_size_, arity)) {
    throw std::invalid_argument("predicate table for '" + name +
                                "' has the wrong size");
  }
  std::vector<Element> bits(values.begin(), values.end());
  predicates_[name] = Table{arity, std::move(bits)};
}

std::size_t Interpretation::index_of(const std::string& name,
                                     const Table& table,
                                     std::span<const Element> args) const {
  if (args.size() != table.arity) {
    throw EvaluationError(name, "arity mismatch for '" + name + "': table has " +
                                    std::to_string(table.arity) +
                                    ", used with " +
                                    std::to_string(args.size()));
  }
  std::size_t idx = 0;
  for (Element a : args) idx = idx * domain_size_ + a;
  return idx;
}

Element Interpretation::apply(const std::string& name,
                              std::span<const Element> args) const {
  auto it = functions_.find(name);
  if (it == functions_.end()) {
    throw EvaluationError(name, "no interpretation for function '" + name +
                                    "'");
  }
  return it->second.values[index_of(name, it->second, args)];
}

bool Interpretation::holds(const std::string& name,
                           std::span<const Element> args) const {
  auto it = predicates_.find(name);
  if (it == predicates_.end()) {
    throw EvaluationError(name, "no interpretation for predicate '" + name +
                                    "'");
  }
  return it->second.values[index_of(name, it->second, args)] != 0;
}

namespace {

class Evaluator {
 public:
  Evaluator(const Interpretation& m, Environment env)
      : m_(m), env_(std::move(env)) {}

  bool eval(const Formula& f) {
    switch (f.kind()) {
      case FormulaKind::Verum: return true;
      case FormulaKind::Falsum: return false;
      case FormulaKind::Atom: {
        std::vector<Element> args;
        args.reserve(f.args().size());
        for (const Term& t : f.args()) args.push_back(value(t));
        return m_.holds(f.predicate(), args);
      }
      case FormulaKind::Equality:
        return value(f.lhs()) == value(f.rhs());
      case FormulaKind::Not: return !eval(f.operand());
      case FormulaKind::And: return eval(f.left()) && eval(f.right());
      case FormulaKind::Or: return eval(f.left()) || eval(f.right());
      case FormulaKind::Implies: return !eval(f.left()) || eval(f.right());
      case FormulaKind::Iff: return eval(f.left()) == eval(f.right());
      case FormulaKind::Forall:
      case FormulaKind::Exists: {
        bool universal = f.kind() == FormulaKind::Forall;
        auto saved = env_.find(f.variable());
        std::optional<Element> previous;
        if (saved != env_.end()) previous = saved->second;
        bool result = universal;
        for (Element d = 0; d < m_.domain_size(); ++d) {
          env_[f.variable()] = d;
          if (eval(f.body()) != universal) {
            result = !universal;
            break;
          }
        }
        if (previous) {
          env_[f.variable()] = *previous;
        } else {
          env_.erase(f.variable());
        }
        return result;
      }
    }
    return false;
  }

 private:
  Element value(const Term& t) {
    if (t.is_variable()) {
      auto it = env_.find(t.name());
      if (it == env_.end()) {
        throw EvaluationError(t.name(),
                              "unbound variable '" + t.name() + "'");
      }
      return it->second;
    }
    std::vector<Element> args;
    args.reserve(t.args().size());
    for (const Term& a : t.args()) args.push_back(value(a));
    return m_.apply(t.name(), args);
  }

  const Interpretation& m_;
  Environment env_;
};

}  // namespace

bool evaluate(const Formula& f, const Interpretation& m,
              const Environment& env) {
  return Evaluator(m, env).eval(f);
}

}  // namespace sentcx
