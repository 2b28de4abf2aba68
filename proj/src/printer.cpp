#include "sentcx/syntax.hpp"

namespace sentcx {
namespace {

// Binding strength; larger binds tighter.
int precedence(const Formula& f) {
  switch (f.kind()) {
    case FormulaKind::Iff: return 1;
    case FormulaKind::Implies: return 2;
    case FormulaKind::Or: return 3;
    case FormulaKind::And: return 4;
    default: return 5;
  }
}

void print_term_to(const Term& t, std::string& out) {
  out += t.name();
  if (t.is_variable() || t.args().empty()) return;
  out += '(';
  bool first = true;
  for (const Term& a : t.args()) {
    if (!first) out += ',';
    first = false;
    print_term_to(a, out);
  }
  out += ')';
}

void print_to(const Formula& f, std::string& out);

void print_wrapped(const Formula& f, bool parens, std::string& out) {
  if (parens) out += '(';
  print_to(f, out);
  if (parens) out += ')';
}

void print_to(const Formula& f, std::string& out) {
  switch (f.kind()) {
    case FormulaKind::Verum:
      out += "$true";
      return;
    case FormulaKind::Falsum:
      out += "$false";
      return;
    case FormulaKind::Atom: {
      out += f.predicate();
      if (f.args().empty()) return;
      out += '(';
      bool first = true;
      for (const Term& a : f.args()) {
        if (!first) out += ',';
        first = false;
        print_term_to(a, out);
      }
      out += ')';
      return;
    }
    case FormulaKind::Equality:
      print_term_to(f.lhs(), out);
      out += " = ";
      print_term_to(f.rhs(), out);
      return;
    case FormulaKind::Not:
      out += '~';
      print_wrapped(f.operand(), precedence(f.operand()) < 5, out);
      return;
    case FormulaKind::Forall:
    case FormulaKind::Exists:
      out += f.kind() == FormulaKind::Forall ? "![" : "?[";
      out += f.variable();
      out += "]: ";
      print_wrapped(f.body(), precedence(f.body()) < 5, out);
      return;
    case FormulaKind::And:
    case FormulaKind::Or: {
      int p = precedence(f);
      print_wrapped(f.left(), precedence(f.left()) < p, out);
      out += f.kind() == FormulaKind::And ? " & " : " | ";
      print_wrapped(f.right(), precedence(f.right()) <= p, out);
      return;
    }
    case FormulaKind::Implies:
      print_wrapped(f.left(), precedence(f.left()) <= 2, out);
      out += " => ";
      print_wrapped(f.right(), precedence(f.right()) < 2, out);
      return;
    case FormulaKind::Iff:
      // '=>' never appears unparenthesized next to '<=>'.
      print_wrapped(f.left(), precedence(f.left()) <= 2, out);
      out += " <=> ";
      print_wrapped(f.right(), precedence(f.right()) == 2, out);
      return;
  }
}

}  // namespace

std::string print_term(const Term& t) {
  std::string out;
  print_term_to(t, out);
  return out;
}

std::string print_formula(const Formula& f) {
  std::string out;
  print_to(f, out);
  return out;
}

std::string print_prefix(
    std::span<const std::pair<Quantifier, std::string>> prefix) {
  std::string out;
  for (const auto& [q, var] : prefix) {
    if (!out.empty()) out += ' ';
    out += q == Quantifier::Universal ? "![" : "?[";
    out += var;
    out += "]:";
  }
  return out;
}

}  // namespace sentcx
