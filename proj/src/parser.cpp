#include <cctype>
#include <optional>

#include "sentcx/syntax.hpp"

namespace sentcx {
namespace {

std::string describe(const std::string& message,
                     const std::vector<std::string>& expected) {
  if (expected.empty()) return message;
  std::string out = message + " (expected ";
  for (std::size_t i = 0; i < expected.size(); ++i) {
    if (i > 0) out += i + 1 == expected.size() ? " or " : ", ";
    out += expected[i];
  }
  return out + ")";
}

}  // namespace

ParseError::ParseError(std::size_t line, std::size_t column,
                       std::string message, std::vector<std::string> expected)
    : std::runtime_error("line " + std::to_string(line) + ", column " +
                         std::to_string(column) + ": " +
                         describe(message, expected)),
      line_(line),
      column_(column),
      message_(std::move(message)),
      expected_(std::move(expected)) {}

namespace {

enum class Tok {
  End,
  LParen,
  RParen,
  LBracket,
  RBracket,
  Comma,
  Colon,
  Tilde,
  Amp,
  Bar,
  Implies,
  Iff,
  Eq,
  Neq,
  Bang,
  Question,
  True,
  False,
  Variable,
  Functor,
};

const char* spelling(Tok t) {
  switch (t) {
    case Tok::End: return "end of input";
    case Tok::LParen: return "'('";
    case Tok::RParen: return "')'";
    case Tok::LBracket: return "'['";
    case Tok::RBracket: return "']'";
    case Tok::Comma: return "','";
    case Tok::Colon: return "':'";
    case Tok::Tilde: return "'~'";
    case Tok::Amp: return "'&'";
    case Tok::Bar: return "'|'";
    case Tok::Implies: return "'=>'";
    case Tok::Iff: return "'<=>'";
    case Tok::Eq: return "'='";
    case Tok::Neq: return "'!='";
    case Tok::Bang: return "'!'";
    case Tok::Question: return "'?'";
    case Tok::True: return "'$true'";
    case Tok::False: return "'$false'";
    case Tok::Variable: return "variable";
    case Tok::Functor: return "identifier";
  }
  return "token";
}

// Nesting guard so hostile input cannot exhaust the stack.
constexpr int kMaxDepth = 1000;

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) { advance(); }

  Formula parse() {
    Formula f = formula();
    if (tok_ != Tok::End) fail("unexpected " + current(), follow_set());
    return f;
  }

 private:
  struct DepthGuard {
    explicit DepthGuard(Parser& p) : p(p) {
      if (++p.depth_ > kMaxDepth) p.fail("nesting too deep", {});
    }
    ~DepthGuard() { --p.depth_; }
    Parser& p;
  };

  static bool ident_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  }

  void advance() {
    for (;;) {
      while (pos_ < text_.size() &&
             (text_[pos_] == ' ' || text_[pos_] == '\t' ||
              text_[pos_] == '\n' || text_[pos_] == '\r')) {
        ++pos_;
      }
      if (pos_ < text_.size() && text_[pos_] == '%') {
        while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
        continue;
      }
      break;
    }
    start_ = pos_;
    lexeme_ = {};
    if (pos_ >= text_.size()) {
      tok_ = Tok::End;
      return;
    }
    char c = text_[pos_];
    auto single = [&](Tok t) {
      ++pos_;
      tok_ = t;
    };
    auto starts_with = [&](std::string_view s) {
      return text_.substr(pos_, s.size()) == s;
    };
    switch (c) {
      case '(': return single(Tok::LParen);
      case ')': return single(Tok::RParen);
      case '[': return single(Tok::LBracket);
      case ']': return single(Tok::RBracket);
      case ',': return single(Tok::Comma);
      case ':': return single(Tok::Colon);
      case '~': return single(Tok::Tilde);
      case '&': return single(Tok::Amp);
      case '|': return single(Tok::Bar);
      case '?': return single(Tok::Question);
      case '!':
        if (starts_with("!=")) {
          pos_ += 2;
          tok_ = Tok::Neq;
          return;
        }
        return single(Tok::Bang);
      case '=':
        if (starts_with("=>")) {
          pos_ += 2;
          tok_ = Tok::Implies;
          return;
        }
        return single(Tok::Eq);
      case '<':
        if (starts_with("<=>")) {
          pos_ += 3;
          tok_ = Tok::Iff;
          return;
        }
        break;
      case '$':
        if (starts_with("$true") &&
            (pos_ + 5 >= text_.size() || !ident_char(text_[pos_ + 5]))) {
          pos_ += 5;
          tok_ = Tok::True;
          return;
        }
        if (starts_with("$false") &&
            (pos_ + 6 >= text_.size() || !ident_char(text_[pos_ + 6]))) {
          pos_ += 6;
          tok_ = Tok::False;
          return;
        }
        break;
      default:
        if (std::isalpha(static_cast<unsigned char>(c))) {
          std::size_t end = pos_ + 1;
          while (end < text_.size() && ident_char(text_[end])) ++end;
          lexeme_ = text_.substr(pos_, end - pos_);
          tok_ = std::isupper(static_cast<unsigned char>(c)) ? Tok::Variable
                                                              : Tok::Functor;
          pos_ = end;
          return;
        }
        break;
    }
    std::string shown;
    if (static_cast<unsigned char>(c) < 0x20 ||
        static_cast<unsigned char>(c) >= 0x7f) {
      static const char* hex = "0123456789abcdef";
      shown = "byte 0x";
      shown += hex[static_cast<unsigned char>(c) >> 4];
      shown += hex[static_cast<unsigned char>(c) & 15];
    } else {
      shown = std::string("'") + c + "'";
    }
    fail("unexpected character " + shown, {});
  }

  std::string current() const {
    if (tok_ == Tok::Variable || tok_ == Tok::Functor) {
      return std::string(spelling(tok_)) + " '" + std::string(lexeme_) + "'";
    }
    return spelling(tok_);
  }

  [[noreturn]] void fail(const std::string& message,
                         std::vector<std::string> expected) const {
    std::size_t line = 1, column = 1;
    for (std::size_t i = 0; i < start_ && i < text_.size(); ++i) {
      if (text_[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw ParseError(line, column, message, std::move(expected));
  }

  std::vector<std::string> follow_set() const {
    return {"'&'", "'|'", "'=>'", "'<=>'", "end of input"};
  }

  static std::vector<std::string> formula_start() {
    return {"'~'", "'!'", "'?'", "'('", "'$true'", "'$false'", "variable",
            "identifier"};
  }

  void expect(Tok t) {
    if (tok_ != t) fail("unexpected " + current(), {spelling(t)});
    advance();
  }

  Formula formula() {
    DepthGuard guard(*this);
    Formula l = disjunction();
    if (tok_ == Tok::Implies) {
      advance();
      return Formula::implication(std::move(l), chain(Tok::Implies));
    }
    if (tok_ == Tok::Iff) {
      advance();
      return Formula::equivalence(std::move(l), chain(Tok::Iff));
    }
    return l;
  }

  // Right-associative run of one of '=>' / '<=>'.
  Formula chain(Tok op) {
    DepthGuard guard(*this);
    Formula l = disjunction();
    Tok other = op == Tok::Implies ? Tok::Iff : Tok::Implies;
    if (tok_ == other) {
      fail(std::string("cannot mix ") + spelling(op) + " and " +
               spelling(other) + " without parentheses",
           {});
    }
    if (tok_ != op) return l;
    advance();
    Formula r = chain(op);
    return op == Tok::Implies ? Formula::implication(std::move(l), std::move(r))
                              : Formula::equivalence(std::move(l), std::move(r));
  }

  // Each operator of a left-associated run deepens the tree by one, so it
  // counts against the nesting guard like a parenthesis would.
  Formula disjunction() {
    int saved = depth_;
    Formula l = conjunction();
    while (tok_ == Tok::Bar) {
      if (++depth_ > kMaxDepth) fail("nesting too deep", {});
      advance();
      l = Formula::disjunction(std::move(l), conjunction());
    }
    depth_ = saved;
    return l;
  }

  Formula conjunction() {
    int saved = depth_;
    Formula l = unary();
    while (tok_ == Tok::Amp) {
      if (++depth_ > kMaxDepth) fail("nesting too deep", {});
      advance();
      l = Formula::conjunction(std::move(l), unary());
    }
    depth_ = saved;
    return l;
  }

  Formula unary() {
    DepthGuard guard(*this);
    switch (tok_) {
      case Tok::Tilde:
        advance();
        return Formula::negation(unary());
      case Tok::Bang:
      case Tok::Question: {
        Quantifier q = tok_ == Tok::Bang ? Quantifier::Universal
                                         : Quantifier::Existential;
        advance();
        expect(Tok::LBracket);
        std::vector<std::string> vars;
        for (;;) {
          if (tok_ != Tok::Variable) {
            fail("unexpected " + current(), {"variable"});
          }
          vars.emplace_back(lexeme_);
          advance();
          if (tok_ == Tok::Comma) {
            advance();
            continue;
          }
          if (tok_ != Tok::RBracket) {
            fail("unexpected " + current(), {"','", "']'"});
          }
          advance();
          break;
        }
        expect(Tok::Colon);
        Formula body = unary();
        for (auto it = vars.rbegin(); it != vars.rend(); ++it) {
          body = Formula::quantified(q, *it, std::move(body));
        }
        return body;
      }
      case Tok::LParen: {
        advance();
        Formula f = formula();
        if (tok_ != Tok::RParen) {
          fail("unexpected " + current(),
               {"')'", "'&'", "'|'", "'=>'", "'<=>'"});
        }
        advance();
        return f;
      }
      case Tok::True:
        advance();
        return Formula::verum();
      case Tok::False:
        advance();
        return Formula::falsum();
      case Tok::Variable:
      case Tok::Functor:
        return atomic();
      default:
        fail("unexpected " + current(), formula_start());
    }
  }

  Formula atomic() {
    std::size_t at = start_;
    Term lhs = term();
    if (tok_ == Tok::Eq || tok_ == Tok::Neq) {
      bool negated = tok_ == Tok::Neq;
      advance();
      Formula eq = Formula::equality(std::move(lhs), term());
      return negated ? Formula::negation(std::move(eq)) : eq;
    }
    if (lhs.is_variable()) {
      start_ = at;
      fail("a variable is not a formula", {"'='", "'!='"});
    }
    std::vector<Term> args(lhs.args().begin(), lhs.args().end());
    return Formula::atom(lhs.name(), std::move(args));
  }

  Term term() {
    DepthGuard guard(*this);
    if (tok_ == Tok::Variable) {
      std::string name(lexeme_);
      advance();
      return Term::variable(std::move(name));
    }
    if (tok_ != Tok::Functor) {
      fail("unexpected " + current(), {"variable", "identifier"});
    }
    std::string name(lexeme_);
    advance();
    std::vector<Term> args;
    if (tok_ == Tok::LParen) {
      advance();
      for (;;) {
        args.push_back(term());
        if (tok_ == Tok::Comma) {
          advance();
          continue;
        }
        if (tok_ != Tok::RParen) fail("unexpected " + current(), {"','", "')'"});
        advance();
        break;
      }
    }
    return Term::application(std::move(name), std::move(args));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t start_ = 0;
  Tok tok_ = Tok::End;
  std::string_view lexeme_;
  int depth_ = 0;
};

}  // namespace

Formula parse_formula(std::string_view text) { return Parser(text).parse(); }

}  // namespace sentcx
