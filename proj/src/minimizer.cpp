#include "sentcx/minimizer.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "sentcx/transforms.hpp"

namespace sentcx {
namespace {

constexpr int kUnreachable = std::numeric_limits<int>::max() / 4;

using VarList = std::vector<std::string>;  // sorted, unique

void collect_term_vars(const Term& t, VarList& out) {
  if (t.is_variable()) {
    out.push_back(t.name());
    return;
  }
  for (const Term& a : t.args()) collect_term_vars(a, out);
}

bool contains(const VarList& vars, const std::string& v) {
  return std::binary_search(vars.begin(), vars.end(), v);
}

// Free variables per node, memoized on node identity.
class FreeVarCache {
 public:
  const VarList& of(const Formula& f) {
    auto it = memo_.find(f.id());
    if (it != memo_.end()) return it->second;
    VarList out;
    switch (f.kind()) {
      case FormulaKind::Verum:
      case FormulaKind::Falsum:
        break;
      case FormulaKind::Atom:
      case FormulaKind::Equality:
        for (const Term& t : f.args()) collect_term_vars(t, out);
        std::sort(out.begin(), out.end());
        out.erase(std::unique(out.begin(), out.end()), out.end());
        break;
      case FormulaKind::Not:
        out = of(f.operand());
        break;
      case FormulaKind::Forall:
      case FormulaKind::Exists:
        out = of(f.body());
        out.erase(std::remove(out.begin(), out.end(), f.variable()),
                  out.end());
        break;
      default: {
        const VarList& l = of(f.left());
        const VarList& r = of(f.right());
        std::set_union(l.begin(), l.end(), r.begin(), r.end(),
                       std::back_inserter(out));
      }
    }
    return memo_.emplace(f.id(), std::move(out)).first->second;
  }

 private:
  std::unordered_map<const void*, VarList> memo_;
};

int value_or_unreachable(const std::optional<int>& v) {
  return v ? *v : kUnreachable;
}

// Blocks needed to embed `p` into a t-led alternating pattern.
int embed_cost(const PatternSet& p, Quantifier t) {
  if (p.reaches_empty) return 0;
  int same = value_or_unreachable(p.best(t));
  int other = value_or_unreachable(p.best(dual(t)));
  return std::min(same, other >= kUnreachable ? kUnreachable : other + 1);
}

std::optional<int> as_optional(int v) {
  if (v >= kUnreachable) return std::nullopt;
  return v;
}

class PatternComputer {
 public:
  PatternSet run(const Formula& f) {
    auto it = memo_.find(f.id());
    if (it != memo_.end()) return it->second;
    PatternSet out = compute(f);
    memo_.emplace(f.id(), out);
    return out;
  }

 private:
  PatternSet compute(const Formula& f) {
    switch (f.kind()) {
      case FormulaKind::Verum:
      case FormulaKind::Falsum:
      case FormulaKind::Atom:
      case FormulaKind::Equality:
        return PatternSet{std::nullopt, std::nullopt, true};
      case FormulaKind::Not:
        if (!f.operand().is_literal_base() ||
            f.operand().kind() == FormulaKind::Verum ||
            f.operand().kind() == FormulaKind::Falsum) {
          throw std::invalid_argument(
              "pattern_of: negation above a non-atomic formula");
        }
        return PatternSet{std::nullopt, std::nullopt, true};
      case FormulaKind::Implies:
      case FormulaKind::Iff:
        throw std::invalid_argument(
            "pattern_of: formula is not in negation normal form");
      case FormulaKind::Forall:
      case FormulaKind::Exists: {
        PatternSet body = run(f.body());
        if (!contains(fv_.of(f.body()), f.variable())) return body;
        Quantifier q = f.quantifier();
        int cost = body.reaches_empty ? 1 : embed_cost(body, q);
        PatternSet out;
        if (q == Quantifier::Universal) {
          out.best_universal_start = as_optional(cost);
        } else {
          out.best_existential_start = as_optional(cost);
        }
        return out;
      }
      case FormulaKind::And:
      case FormulaKind::Or: {
        PatternSet l = run(f.left());
        PatternSet r = run(f.right());
        if (l.reaches_empty && r.reaches_empty) return l;
        PatternSet out;
        for (Quantifier t : {Quantifier::Universal, Quantifier::Existential}) {
          int cost = std::max(embed_cost(l, t), embed_cost(r, t));
          (t == Quantifier::Universal ? out.best_universal_start
                                      : out.best_existential_start) =
              as_optional(cost);
        }
        return out;
      }
    }
    return {};
  }

  FreeVarCache fv_;
  std::unordered_map<const void*, PatternSet> memo_;
};

// Places every non-vacuous quantifier in the earliest admissible block of
// the pattern led by `lead`, then orders by (block, pre-order position).
class WitnessBuilder {
 public:
  explicit WitnessBuilder(Quantifier lead) : lead_(lead) {}

  PrenexForm build(const Formula& renamed, bool quantifier_free) {
    Formula matrix = strip(renamed, quantifier_free ? 0 : 1);
    std::stable_sort(placed_.begin(), placed_.end(),
                     [](const Placed& a, const Placed& b) {
                       return a.block < b.block;
                     });
    PrenexForm out{{}, std::move(matrix)};
    out.prefix.reserve(placed_.size());
    for (Placed& p : placed_) out.prefix.emplace_back(p.kind, std::move(p.var));
    return out;
  }

 private:
  struct Placed {
    int block;
    Quantifier kind;
    std::string var;
  };

  Quantifier block_kind(int block) const {
    return block % 2 == 1 ? lead_ : dual(lead_);
  }

  // Returns `f` without quantifiers; `block` is the current block (1-based).
  Formula strip(const Formula& f, int block) {
    switch (f.kind()) {
      case FormulaKind::Forall:
      case FormulaKind::Exists: {
        int b = block;
        if (contains(fv_.of(f.body()), f.variable())) {
          if (block_kind(b) != f.quantifier()) ++b;
          placed_.push_back(Placed{b, f.quantifier(), f.variable()});
        }
        return strip(f.body(), b);
      }
      case FormulaKind::And:
      case FormulaKind::Or: {
        Formula l = strip(f.left(), block);
        Formula r = strip(f.right(), block);
        return Formula::binary(f.kind(), std::move(l), std::move(r));
      }
      default:
        return f;
    }
  }

  Quantifier lead_;
  FreeVarCache fv_;
  std::vector<Placed> placed_;
};

}  // namespace

std::string_view to_string(Mode mode) {
  return mode == Mode::Surface ? "surface" : "internal";
}

std::optional<Mode> mode_from_string(std::string_view text) {
  if (text == "surface") return Mode::Surface;
  if (text == "internal") return Mode::Internal;
  return std::nullopt;
}

PatternSet pattern_of(const Formula& f) { return PatternComputer{}.run(f); }

ComplexityClass class_of(const PatternSet& p) {
  if (p.reaches_empty) return ComplexityClass::quantifier_free();
  int u = value_or_unreachable(p.best_universal_start);
  int e = value_or_unreachable(p.best_existential_start);
  if (u >= kUnreachable && e >= kUnreachable) {
    throw std::logic_error("class_of: empty pattern set");
  }
  return u <= e ? ComplexityClass::pi(u) : ComplexityClass::sigma(e);
}

Formula normalize(const Formula& f, Mode mode) {
  return to_nnf(mode == Mode::Internal ? to_internal(f) : f);
}

ComplexityClass minimal_class(const Formula& f, Mode mode) {
  return class_of(pattern_of(normalize(f, mode)));
}

Classification classify(const Formula& f, Mode mode) {
  Formula nnf = normalize(f, mode);
  ComplexityClass c = class_of(pattern_of(nnf));
  Quantifier lead = c.kind() == ClassKind::Sigma ? Quantifier::Existential
                                                 : Quantifier::Universal;
  PrenexForm witness =
      WitnessBuilder(lead).build(rename_apart(nnf),
                                 c.kind() == ClassKind::QuantifierFree);
  return Classification{c, std::move(witness)};
}

PrenexForm minimal_witness(const Formula& f, Mode mode) {
  return classify(f, mode).witness;
}

}  // namespace sentcx
