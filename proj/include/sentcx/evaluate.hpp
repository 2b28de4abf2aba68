// Finite-model satisfaction, used as a semantic oracle for the transforms.

#ifndef SENTCX_EVALUATE_HPP
#define SENTCX_EVALUATE_HPP

#include <cstdint>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "sentcx/formula.hpp"

namespace sentcx {

using Element = std::uint32_t;
using Environment = std::map<std::string, Element>;

class EvaluationError : public std::runtime_error {
 public:
  EvaluationError(std::string symbol, const std::string& what)
      : std::runtime_error(what), symbol_(std::move(symbol)) {}
  const std::string& symbol() const { return symbol_; }

 private:
  std::string symbol_;
};

/// A structure over the domain {0, ..., size-1}. Tables are indexed by the
/// argument tuple read as a base-`size` number, first argument most
/// significant. Equality is always identity.
class Interpretation {
 public:
  explicit Interpretation(std::uint32_t domain_size);

  std::uint32_t domain_size() const { return domain_size_; }

  /// `values` must have domain_size^arity entries, each below domain_size.
  void set_function(const std::string& name, std::size_t arity,
                    std::vector<Element> values);
  /// `values` must have domain_size^arity entries.
  void set_predicate(const std::string& name, std::size_t arity,
                     std::vector<bool> values);

  Element apply(const std::string& name, std::span<const Element> args) const;
  bool holds(const std::string& name, std::span<const Element> args) const;

 private:
  struct Table {
    std::size_t arity;
    std::vector<Element> values;
  };
  std::size_t index_of(const std::string& name, const Table& table,
                       std::span<const Element> args) const;

  std::uint32_t domain_size_;
  std::map<std::string, Table> functions_;
  std::map<std::string, Table> predicates_;
};

/// Tarskian truth of `f` in `m` under `env`. Throws EvaluationError for a
/// missing symbol, an arity mismatch, or an unbound variable.
bool evaluate(const Formula& f, const Interpretation& m,
              const Environment& env = {});

}  // namespace sentcx

#endif  // SENTCX_EVALUATE_HPP
