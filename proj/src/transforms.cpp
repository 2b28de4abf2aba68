#include "sentcx/transforms.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>
#include <unordered_set>
#include <utility>

namespace sentcx {
namespace {

// Scoped set of bound names: a multiset so shadowing unwinds correctly.
class BoundScope {
 public:
  void push(const std::string& v) { ++counts_[v]; }
  void pop(const std::string& v) {
    auto it = counts_.find(v);
    if (--it->second == 0) counts_.erase(it);
  }
  bool contains(const std::string& v) const { return counts_.count(v) != 0; }

 private:
  std::unordered_map<std::string, int> counts_;
};

template <typename Visit>
void visit_term_vars(const Term& t, Visit&& visit) {
  if (t.is_variable()) {
    visit(t.name());
    return;
  }
  for (const Term& a : t.args()) visit_term_vars(a, visit);
}

// Calls `visit(name)` for every free variable occurrence, left to right.
template <typename Visit>
void visit_free(const Formula& f, BoundScope& bound, Visit&& visit) {
  switch (f.kind()) {
    case FormulaKind::Verum:
    case FormulaKind::Falsum:
      return;
    case FormulaKind::Atom:
    case FormulaKind::Equality:
      for (const Term& t : f.args()) {
        visit_term_vars(t, [&](const std::string& v) {
          if (!bound.contains(v)) visit(v);
        });
      }
      return;
    case FormulaKind::Not:
      visit_free(f.operand(), bound, visit);
      return;
    case FormulaKind::And:
    case FormulaKind::Or:
    case FormulaKind::Implies:
    case FormulaKind::Iff:
      visit_free(f.left(), bound, visit);
      visit_free(f.right(), bound, visit);
      return;
    case FormulaKind::Forall:
    case FormulaKind::Exists:
      bound.push(f.variable());
      visit_free(f.body(), bound, visit);
      bound.pop(f.variable());
      return;
  }
}

bool term_mentions(const Term& t, const std::string& var) {
  if (t.is_variable()) return t.name() == var;
  for (const Term& a : t.args()) {
    if (term_mentions(a, var)) return true;
  }
  return false;
}

// Rebuilds a binary or unary node only when a child changed identity.
Formula rebuild_unary(const Formula& f, Formula child) {
  if (child.id() == f.operand().id()) return f;
  if (f.kind() == FormulaKind::Not) return Formula::negation(std::move(child));
  return Formula::quantified(f.quantifier(), f.variable(), std::move(child));
}

Formula rebuild_binary(const Formula& f, Formula l, Formula r) {
  if (l.id() == f.left().id() && r.id() == f.right().id()) return f;
  return Formula::binary(f.kind(), std::move(l), std::move(r));
}

class InternalRewriter {
 public:
  Formula run(const Formula& f) {
    auto it = memo_.find(f.id());
    if (it != memo_.end()) return it->second;
    Formula out = rewrite(f);
    memo_.emplace(f.id(), out);
    return out;
  }

 private:
  Formula rewrite(const Formula& f) {
    using F = Formula;
    switch (f.kind()) {
      case FormulaKind::Verum:
      case FormulaKind::Falsum:
      case FormulaKind::Atom:
      case FormulaKind::Equality:
        return f;
      case FormulaKind::Not:
      case FormulaKind::Forall:
        return rebuild_unary(f, run(f.operand()));
      case FormulaKind::And:
        return rebuild_binary(f, run(f.left()), run(f.right()));
      case FormulaKind::Or:
        return F::negation(F::conjunction(F::negation(run(f.left())),
                                          F::negation(run(f.right()))));
      case FormulaKind::Implies:
        return F::negation(
            F::conjunction(run(f.left()), F::negation(run(f.right()))));
      case FormulaKind::Iff: {
        F l = run(f.left());
        F r = run(f.right());
        return F::conjunction(F::negation(F::conjunction(l, F::negation(r))),
                              F::negation(F::conjunction(r, F::negation(l))));
      }
      case FormulaKind::Exists:
        return F::negation(
            F::forall(f.variable(), F::negation(run(f.body()))));
    }
    return f;
  }

  std::unordered_map<const void*, Formula> memo_;
};

class NnfRewriter {
 public:
  Formula run(const Formula& f, bool positive) {
    auto& memo = memo_[positive ? 1 : 0];
    auto it = memo.find(f.id());
    if (it != memo.end()) return it->second;
    Formula out = rewrite(f, positive);
    memo.emplace(f.id(), out);
    return out;
  }

 private:
  Formula rewrite(const Formula& f, bool pos) {
    using F = Formula;
    switch (f.kind()) {
      case FormulaKind::Verum:
        return pos ? f : F::falsum();
      case FormulaKind::Falsum:
        return pos ? f : F::verum();
      case FormulaKind::Atom:
      case FormulaKind::Equality:
        return pos ? f : F::negation(f);
      case FormulaKind::Not:
        return run(f.operand(), !pos);
      case FormulaKind::And:
      case FormulaKind::Or: {
        bool is_and = (f.kind() == FormulaKind::And) == pos;
        F l = run(f.left(), pos);
        F r = run(f.right(), pos);
        if (pos) return rebuild_binary(f, std::move(l), std::move(r));
        return is_and ? F::conjunction(std::move(l), std::move(r))
                      : F::disjunction(std::move(l), std::move(r));
      }
      case FormulaKind::Implies:
        if (pos) {
          return F::disjunction(run(f.left(), false), run(f.right(), true));
        }
        return F::conjunction(run(f.left(), true), run(f.right(), false));
      case FormulaKind::Iff: {
        F lp = run(f.left(), true);
        F ln = run(f.left(), false);
        F rp = run(f.right(), true);
        F rn = run(f.right(), false);
        if (pos) {
          return F::disjunction(F::conjunction(lp, rp), F::conjunction(ln, rn));
        }
        return F::disjunction(F::conjunction(lp, rn), F::conjunction(ln, rp));
      }
      case FormulaKind::Forall:
      case FormulaKind::Exists: {
        F body = run(f.body(), pos);
        if (pos) return rebuild_unary(f, std::move(body));
        return F::quantified(dual(f.quantifier()), f.variable(),
                             std::move(body));
      }
    }
    return f;
  }

  std::unordered_map<const void*, Formula> memo_[2];
};

class Renamer {
 public:
  explicit Renamer(const Formula& f) {
    BoundScope bound;
    visit_free(f, bound, [&](const std::string& v) { taken_.insert(v); });
  }

  Formula run(const Formula& f) {
    switch (f.kind()) {
      case FormulaKind::Verum:
      case FormulaKind::Falsum:
        return f;
      case FormulaKind::Atom: {
        std::vector<Term> args;
        args.reserve(f.args().size());
        for (const Term& t : f.args()) args.push_back(subst(t));
        return Formula::atom(f.predicate(), std::move(args));
      }
      case FormulaKind::Equality:
        return Formula::equality(subst(f.lhs()), subst(f.rhs()));
      case FormulaKind::Not:
        return Formula::negation(run(f.operand()));
      case FormulaKind::And:
      case FormulaKind::Or:
      case FormulaKind::Implies:
      case FormulaKind::Iff: {
        Formula l = run(f.left());
        Formula r = run(f.right());
        return Formula::binary(f.kind(), std::move(l), std::move(r));
      }
      case FormulaKind::Forall:
      case FormulaKind::Exists: {
        std::string fresh = next_name(f.variable());
        scope_[f.variable()].push_back(fresh);
        Formula body = run(f.body());
        scope_[f.variable()].pop_back();
        return Formula::quantified(f.quantifier(), std::move(fresh),
                                   std::move(body));
      }
    }
    return f;
  }

 private:
  std::string next_name(const std::string& base) {
    int& k = counters_[base];
    std::string candidate;
    do {
      candidate = base + "_" + std::to_string(++k);
    } while (taken_.count(candidate) != 0);
    taken_.insert(candidate);
    return candidate;
  }

  Term subst(const Term& t) {
    if (t.is_variable()) {
      auto it = scope_.find(t.name());
      if (it == scope_.end() || it->second.empty()) return t;
      return Term::variable(it->second.back());
    }
    std::vector<Term> args;
    args.reserve(t.args().size());
    for (const Term& a : t.args()) args.push_back(subst(a));
    return Term::application(t.name(), std::move(args));
  }

  std::unordered_set<std::string> taken_;
  std::unordered_map<std::string, int> counters_;
  std::unordered_map<std::string, std::vector<std::string>> scope_;
};

template <typename Pred>
bool all_nodes(const Formula& f, Pred&& pred) {
  if (!pred(f)) return false;
  switch (f.kind()) {
    case FormulaKind::Not:
    case FormulaKind::Forall:
    case FormulaKind::Exists:
      return all_nodes(f.operand(), pred);
    case FormulaKind::And:
    case FormulaKind::Or:
    case FormulaKind::Implies:
    case FormulaKind::Iff:
      return all_nodes(f.left(), pred) && all_nodes(f.right(), pred);
    default:
      return true;
  }
}

}  // namespace

std::set<std::string> free_vars(const Formula& f) {
  std::set<std::string> out;
  BoundScope bound;
  visit_free(f, bound, [&](const std::string& v) { out.insert(v); });
  return out;
}

std::vector<std::string> free_vars_in_order(const Formula& f) {
  std::vector<std::string> out;
  std::unordered_set<std::string> seen;
  BoundScope bound;
  visit_free(f, bound, [&](const std::string& v) {
    if (seen.insert(v).second) out.push_back(v);
  });
  return out;
}

bool occurs_free(const std::string& var, const Formula& f) {
  switch (f.kind()) {
    case FormulaKind::Verum:
    case FormulaKind::Falsum:
      return false;
    case FormulaKind::Atom:
    case FormulaKind::Equality:
      return std::any_of(f.args().begin(), f.args().end(),
                         [&](const Term& t) { return term_mentions(t, var); });
    case FormulaKind::Not:
      return occurs_free(var, f.operand());
    case FormulaKind::Forall:
    case FormulaKind::Exists:
      return f.variable() != var && occurs_free(var, f.body());
    default:
      return occurs_free(var, f.left()) || occurs_free(var, f.right());
  }
}

std::vector<std::string> bound_vars(const Formula& f) {
  std::vector<std::string> out;
  all_nodes(f, [&](const Formula& g) {
    if (g.is_quantifier()) out.push_back(g.variable());
    return true;
  });
  return out;
}

Formula universal_closure(const Formula& f) {
  std::vector<std::string> vars = free_vars_in_order(f);
  Formula out = f;
  for (auto it = vars.rbegin(); it != vars.rend(); ++it) {
    out = Formula::forall(*it, std::move(out));
  }
  return out;
}

Formula to_internal(const Formula& f) { return InternalRewriter{}.run(f); }

Formula to_nnf(const Formula& f) { return NnfRewriter{}.run(f, true); }

Formula rename_apart(const Formula& f) { return Renamer(f).run(f); }

bool is_renamed_apart(const Formula& f) {
  std::set<std::string> seen = free_vars(f);
  for (const std::string& v : bound_vars(f)) {
    if (!seen.insert(v).second) return false;
  }
  return true;
}

bool in_internal_battery(const Formula& f) {
  return all_nodes(f, [](const Formula& g) {
    switch (g.kind()) {
      case FormulaKind::Or:
      case FormulaKind::Implies:
      case FormulaKind::Iff:
      case FormulaKind::Exists:
        return false;
      default:
        return true;
    }
  });
}

bool in_nnf(const Formula& f) {
  return all_nodes(f, [](const Formula& g) {
    switch (g.kind()) {
      case FormulaKind::Implies:
      case FormulaKind::Iff:
        return false;
      case FormulaKind::Not:
        return g.operand().kind() == FormulaKind::Atom ||
               g.operand().kind() == FormulaKind::Equality;
      default:
        return true;
    }
  });
}

bool is_quantifier_free(const Formula& f) {
  return all_nodes(f, [](const Formula& g) { return !g.is_quantifier(); });
}

std::size_t quantifier_count(const Formula& f) {
  std::size_t n = 0;
  all_nodes(f, [&](const Formula& g) {
    if (g.is_quantifier()) ++n;
    return true;
  });
  return n;
}

}  // namespace sentcx
