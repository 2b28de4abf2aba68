#include "sentcx/oracle.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <unordered_set>

#include "sentcx/transforms.hpp"

namespace sentcx {
namespace {

bool better(const ComplexityClass& a, const ComplexityClass& b) {
  if (a.level() != b.level()) return a.level() < b.level();
  return a.kind() == ClassKind::Pi && b.kind() == ClassKind::Sigma;
}

void append_steps(const Formula& f, std::vector<Formula>& out) {
  switch (f.kind()) {
    case FormulaKind::And:
    case FormulaKind::Or: {
      const Formula& l = f.left();
      const Formula& r = f.right();
      if (l.is_quantifier()) {
        out.push_back(Formula::quantified(
            l.quantifier(), l.variable(),
            Formula::binary(f.kind(), l.body(), r)));
      }
      if (r.is_quantifier()) {
        out.push_back(Formula::quantified(
            r.quantifier(), r.variable(),
            Formula::binary(f.kind(), l, r.body())));
      }
      std::vector<Formula> inner;
      append_steps(l, inner);
      for (Formula& s : inner) {
        out.push_back(Formula::binary(f.kind(), std::move(s), r));
      }
      inner.clear();
      append_steps(r, inner);
      for (Formula& s : inner) {
        out.push_back(Formula::binary(f.kind(), l, std::move(s)));
      }
      return;
    }
    case FormulaKind::Forall:
    case FormulaKind::Exists: {
      if (!occurs_free(f.variable(), f.body())) out.push_back(f.body());
      std::vector<Formula> inner;
      append_steps(f.body(), inner);
      for (Formula& s : inner) {
        out.push_back(
            Formula::quantified(f.quantifier(), f.variable(), std::move(s)));
      }
      return;
    }
    default:
      return;
  }
}

}  // namespace

std::vector<Formula> prenex_rewrite_steps(const Formula& f) {
  std::vector<Formula> out;
  append_steps(f, out);
  return out;
}

std::vector<PrenexForm> enumerate_prenex_forms(const Formula& f,
                                               std::size_t budget) {
  Formula start = to_nnf(f);
  if (!is_renamed_apart(start)) start = rename_apart(start);

  std::unordered_set<Formula, FormulaHash> visited{start};
  std::deque<Formula> frontier{start};
  std::vector<PrenexForm> normal_forms;
  while (!frontier.empty()) {
    Formula g = std::move(frontier.front());
    frontier.pop_front();
    std::vector<Formula> steps = prenex_rewrite_steps(g);
    if (steps.empty()) {
      PrenexForm form = split_prefix(g);
      if (!is_quantifier_free(form.matrix)) {
        throw std::logic_error("enumerate_prenex_forms: stuck non-prenex form");
      }
      normal_forms.push_back(std::move(form));
      continue;
    }
    for (Formula& s : steps) {
      if (!visited.insert(s).second) continue;
      if (visited.size() > budget) throw BudgetExceeded(budget);
      frontier.push_back(std::move(s));
    }
  }
  return normal_forms;
}

PrefixLanguage::PrefixLanguage(std::size_t budget) : budget_(budget) {
  nodes_.push_back(Node{{kEmptySet, kEmptySet}, false});
  nodes_.push_back(Node{{kEmptySet, kEmptySet}, true});
}

PrefixLanguage::NodeId PrefixLanguage::make(NodeId universal,
                                            NodeId existential,
                                            bool accepts) {
  if (universal == kEmptySet && existential == kEmptySet) {
    return accepts ? kEmptyWord : kEmptySet;
  }
  auto& table = unique_[accepts ? 1 : 0];
  auto [it, inserted] = table.try_emplace(key(universal, existential), 0);
  if (!inserted) return it->second;
  if (nodes_.size() >= budget_) {
    table.erase(it);
    throw BudgetExceeded(budget_);
  }
  it->second = static_cast<NodeId>(nodes_.size());
  nodes_.push_back(Node{{universal, existential}, accepts});
  return it->second;
}

PrefixLanguage::NodeId PrefixLanguage::prepend(Quantifier q, NodeId lang) {
  if (lang == kEmptySet) return kEmptySet;
  return q == Quantifier::Universal ? make(lang, kEmptySet, false)
                                    : make(kEmptySet, lang, false);
}

PrefixLanguage::NodeId PrefixLanguage::unite(NodeId a, NodeId b) {
  if (a == kEmptySet || a == b) return b;
  if (b == kEmptySet) return a;
  if (a > b) std::swap(a, b);
  auto found = union_memo_.find(key(a, b));
  if (found != union_memo_.end()) return found->second;
  const Node x = nodes_[a];
  const Node y = nodes_[b];
  NodeId u = unite(x.next[0], y.next[0]);
  NodeId e = unite(x.next[1], y.next[1]);
  NodeId out = make(u, e, x.accepts || y.accepts);
  union_memo_.emplace(key(a, b), out);
  return out;
}

PrefixLanguage::NodeId PrefixLanguage::shuffle(NodeId a, NodeId b) {
  if (a == kEmptySet || b == kEmptySet) return kEmptySet;
  if (a == kEmptyWord) return b;
  if (b == kEmptyWord) return a;
  if (a > b) std::swap(a, b);
  auto found = shuffle_memo_.find(key(a, b));
  if (found != shuffle_memo_.end()) return found->second;
  const Node x = nodes_[a];
  const Node y = nodes_[b];
  NodeId next[2];
  for (int c = 0; c < 2; ++c) {
    NodeId left_first = shuffle(x.next[c], b);
    NodeId right_first = shuffle(a, y.next[c]);
    next[c] = unite(left_first, right_first);
  }
  NodeId out = make(next[0], next[1], x.accepts && y.accepts);
  shuffle_memo_.emplace(key(a, b), out);
  return out;
}

bool PrefixLanguage::contains(NodeId lang,
                              std::span<const Quantifier> word) const {
  for (Quantifier q : word) {
    if (lang == kEmptySet) return false;
    lang = nodes_[lang].next[q == Quantifier::Universal ? 0 : 1];
  }
  return nodes_[lang].accepts;
}

std::uint64_t PrefixLanguage::word_count(NodeId lang) const {
  constexpr std::uint64_t kMax = std::numeric_limits<std::uint64_t>::max();
  std::vector<std::uint64_t> count(nodes_.size(), 0);
  std::vector<bool> done(nodes_.size(), false);
  // Children always have smaller ids than their parents (hash-consing builds
  // bottom-up), so a forward sweep is a topological order.
  for (NodeId n = 0; n <= lang; ++n) {
    const Node& node = nodes_[n];
    std::uint64_t c = node.accepts ? 1 : 0;
    for (NodeId child : node.next) {
      if (child == kEmptySet) continue;
      c = (kMax - c < count[child]) ? kMax : c + count[child];
    }
    count[n] = c;
    done[n] = true;
  }
  return count[lang];
}

std::vector<std::vector<Quantifier>> PrefixLanguage::words(
    NodeId lang) const {
  std::vector<std::vector<Quantifier>> out;
  std::vector<Quantifier> current;
  auto walk = [&](auto&& self, NodeId n) -> void {
    if (n == kEmptySet) return;
    if (nodes_[n].accepts) out.push_back(current);
    for (int c = 0; c < 2; ++c) {
      current.push_back(c == 0 ? Quantifier::Universal
                               : Quantifier::Existential);
      self(self, nodes_[n].next[c]);
      current.pop_back();
    }
  };
  walk(walk, lang);
  return out;
}

ComplexityClass PrefixLanguage::min_class(NodeId lang) const {
  if (lang == kEmptySet) {
    throw std::invalid_argument("PrefixLanguage::min_class: empty language");
  }
  if (nodes_[lang].accepts) return ComplexityClass::quantifier_free();
  constexpr int kInf = std::numeric_limits<int>::max() / 4;
  // blocks[n][k]: fewest additional blocks to finish a word from n when the
  // previous letter has kind k.
  std::vector<int> blocks(nodes_.size() * 2, kInf);
  for (NodeId n = 1; n <= lang; ++n) {
    const Node& node = nodes_[n];
    for (int last = 0; last < 2; ++last) {
      int best = node.accepts ? 0 : kInf;
      for (int c = 0; c < 2; ++c) {
        NodeId child = node.next[c];
        if (child == kEmptySet) continue;
        int rest = blocks[child * 2 + c];
        if (rest >= kInf) continue;
        best = std::min(best, rest + (c == last ? 0 : 1));
      }
      blocks[n * 2 + last] = best;
    }
  }
  const Node& root = nodes_[lang];
  int pi = root.next[0] == kEmptySet ? kInf : 1 + blocks[root.next[0] * 2 + 0];
  int sigma =
      root.next[1] == kEmptySet ? kInf : 1 + blocks[root.next[1] * 2 + 1];
  return pi <= sigma ? ComplexityClass::pi(pi) : ComplexityClass::sigma(sigma);
}

namespace {

class PrefixBuilder {
 public:
  explicit PrefixBuilder(PrefixLanguage& lang) : lang_(lang) {}

  PrefixLanguage::NodeId run(const Formula& f) {
    auto it = memo_.find(f.id());
    if (it != memo_.end()) return it->second;
    PrefixLanguage::NodeId out = build(f);
    memo_.emplace(f.id(), out);
    return out;
  }

 private:
  PrefixLanguage::NodeId build(const Formula& f) {
    switch (f.kind()) {
      case FormulaKind::Forall:
      case FormulaKind::Exists: {
        PrefixLanguage::NodeId body = run(f.body());
        if (!occurs_free(f.variable(), f.body())) return body;
        return lang_.prepend(f.quantifier(), body);
      }
      case FormulaKind::And:
      case FormulaKind::Or:
        return lang_.shuffle(run(f.left()), run(f.right()));
      case FormulaKind::Not:
      case FormulaKind::Implies:
      case FormulaKind::Iff:
        if (!is_quantifier_free(f)) {
          throw std::invalid_argument(
              "reachable_prefixes: input is not in negation normal form");
        }
        return PrefixLanguage::kEmptyWord;
      default:
        return PrefixLanguage::kEmptyWord;
    }
  }

  PrefixLanguage& lang_;
  std::unordered_map<const void*, PrefixLanguage::NodeId> memo_;
};

}  // namespace

PrefixSet reachable_prefixes(const Formula& f, std::size_t budget) {
  PrefixSet out{PrefixLanguage(budget), PrefixLanguage::kEmptySet};
  Formula nnf = to_nnf(f);
  out.root = PrefixBuilder(out.language).run(nnf);
  return out;
}

ComplexityClass oracle_class(const Formula& f, Mode mode, std::size_t budget) {
  PrefixSet set =
      reachable_prefixes(mode == Mode::Internal ? to_internal(f) : f, budget);
  return set.language.min_class(set.root);
}

ComplexityClass oracle_class_explicit(const Formula& f, Mode mode,
                                      std::size_t budget) {
  std::vector<PrenexForm> forms = enumerate_prenex_forms(
      mode == Mode::Internal ? to_internal(f) : f, budget);
  std::optional<ComplexityClass> best;
  for (const PrenexForm& form : forms) {
    std::vector<Quantifier> kinds = form.kinds();
    ComplexityClass c = classify_prefix(kinds);
    if (!best || better(c, *best)) best = c;
  }
  if (!best) throw std::logic_error("oracle_class_explicit: no normal form");
  return *best;
}

}  // namespace sentcx
