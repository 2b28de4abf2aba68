// Random formulas and finite structures for property tests.

#ifndef SENTCX_TESTS_GENERATORS_HPP
#define SENTCX_TESTS_GENERATORS_HPP

#include <random>
#include <string>
#include <vector>

#include "sentcx/evaluate.hpp"
#include "sentcx/formula.hpp"

namespace sentcx::testing {

struct GenParams {
  int max_depth = 6;
  int max_quantifiers = 10;
  bool closed = true;
  bool iff = true;
  bool implies = true;
  bool equality = true;
  bool functions = true;
  /// Probability that a non-leaf slot becomes a quantifier.
  double quantifier_rate = 0.45;
  /// Leaf probability grows linearly with depth.
  double leaf_rate = 0.07;
};

// Signature: predicates p/1, q/2, r/1; function f/1; constants a, b.
// Binders draw from a small name pool, so shadowing and vacuous binders
// both occur.
class FormulaGen {
 public:
  FormulaGen(std::mt19937_64& rng, GenParams params)
      : rng_(rng), params_(params) {}

  Formula next() {
    quantifiers_left_ = params_.max_quantifiers;
    scope_.clear();
    return gen(0);
  }

 private:
  bool chance(double p) { return std::bernoulli_distribution(p)(rng_); }
  int pick(int n) { return std::uniform_int_distribution<int>(0, n - 1)(rng_); }

  Term term(int depth) {
    bool var = !scope_.empty() && chance(0.75);
    if (!params_.closed && chance(0.1)) return Term::variable("W");
    if (var) return Term::variable(scope_[pick(static_cast<int>(scope_.size()))]);
    if (params_.functions && depth < 2 && chance(0.25)) {
      return Term::application("f", {term(depth + 1)});
    }
    return Term::application(chance(0.5) ? "a" : "b");
  }

  Formula leaf() {
    int roll = pick(params_.equality ? 10 : 9);
    switch (roll) {
      case 0: return chance(0.5) ? Formula::verum() : Formula::falsum();
      case 1: case 2: case 3: return Formula::atom("p", {term(0)});
      case 4: case 5: case 6: return Formula::atom("q", {term(0), term(0)});
      case 7: case 8: return Formula::atom("r", {term(0)});
      default: return Formula::equality(term(0), term(0));
    }
  }

  Formula gen(int depth) {
    if (depth >= params_.max_depth - 1 || chance(params_.leaf_rate * depth)) {
      return leaf();
    }
    if (quantifiers_left_ > 0 && chance(params_.quantifier_rate)) {
      --quantifiers_left_;
      static const char* pool[] = {"X", "Y", "Z", "U"};
      std::string var = pool[pick(4)];
      scope_.push_back(var);
      Formula body = gen(depth + 1);
      scope_.pop_back();
      return chance(0.5) ? Formula::forall(var, body)
                         : Formula::exists(var, body);
    }
    int options = 3 + (params_.implies ? 1 : 0) + (params_.iff ? 1 : 0);
    int roll = pick(options);
    if (roll == 0) return Formula::negation(gen(depth + 1));
    Formula l = gen(depth + 1);
    Formula r = gen(depth + 1);
    if (roll == 1) return Formula::conjunction(l, r);
    if (roll == 2) return Formula::disjunction(l, r);
    if (roll == 3 && params_.implies) return Formula::implication(l, r);
    return Formula::equivalence(l, r);
  }

  std::mt19937_64& rng_;
  GenParams params_;
  int quantifiers_left_ = 0;
  std::vector<std::string> scope_;
};

inline Interpretation random_interpretation(std::mt19937_64& rng,
                                            std::uint32_t domain) {
  Interpretation m(domain);
  std::uniform_int_distribution<Element> element(0, domain - 1);
  std::bernoulli_distribution bit(0.5);
  auto bits = [&](std::size_t n) {
    std::vector<bool> v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = bit(rng);
    return v;
  };
  m.set_predicate("p", 1, bits(domain));
  m.set_predicate("q", 2, bits(std::size_t{domain} * domain));
  m.set_predicate("r", 1, bits(domain));
  std::vector<Element> f(domain);
  for (auto& v : f) v = element(rng);
  m.set_function("f", 1, f);
  m.set_function("a", 0, {element(rng)});
  m.set_function("b", 0, {element(rng)});
  return m;
}

}  // namespace sentcx::testing

#endif  // SENTCX_TESTS_GENERATORS_HPP
