#include "sentcx/complexity.hpp"

#include <charconv>
#include <stdexcept>

namespace sentcx {

ComplexityClass ComplexityClass::pi(int level) {
  if (level < 1) throw std::invalid_argument("Pi level must be >= 1");
  return ComplexityClass(ClassKind::Pi, level);
}

ComplexityClass ComplexityClass::sigma(int level) {
  if (level < 1) throw std::invalid_argument("Sigma level must be >= 1");
  return ComplexityClass(ClassKind::Sigma, level);
}

std::string_view ComplexityClass::kind_name() const {
  switch (kind_) {
    case ClassKind::Pi: return "Pi";
    case ClassKind::Sigma: return "Sigma";
    case ClassKind::QuantifierFree: return "QF";
  }
  return "QF";
}

std::string ComplexityClass::to_string() const {
  std::string out(kind_name());
  out += ' ';
  out += std::to_string(level_);
  return out;
}

std::optional<ComplexityClass> ComplexityClass::from_string(
    std::string_view text) {
  auto space = text.find(' ');
  if (space == std::string_view::npos) return std::nullopt;
  std::string_view kind = text.substr(0, space);
  std::string_view digits = text.substr(space + 1);
  int level = 0;
  auto [ptr, ec] =
      std::from_chars(digits.data(), digits.data() + digits.size(), level);
  if (ec != std::errc{} || ptr != digits.data() + digits.size()) {
    return std::nullopt;
  }
  if (kind == "QF" && level == 0) return quantifier_free();
  if (level < 1) return std::nullopt;
  if (kind == "Pi") return pi(level);
  if (kind == "Sigma") return sigma(level);
  return std::nullopt;
}

std::ostream& operator<<(std::ostream& os, const ComplexityClass& c) {
  return os << c.to_string();
}

PrefixPattern PrefixPattern::collapse(std::span<const Quantifier> kinds) {
  PrefixPattern p;
  for (Quantifier q : kinds) {
    if (p.blocks_.empty() || p.blocks_.back() != q) p.blocks_.push_back(q);
  }
  return p;
}

ComplexityClass classify_prefix(std::span<const Quantifier> prefix) {
  PrefixPattern p = PrefixPattern::collapse(prefix);
  if (p.empty()) return ComplexityClass::quantifier_free();
  int level = static_cast<int>(p.block_count());
  return p.blocks().front() == Quantifier::Universal
             ? ComplexityClass::pi(level)
             : ComplexityClass::sigma(level);
}

std::vector<Quantifier> PrenexForm::kinds() const {
  std::vector<Quantifier> out;
  out.reserve(prefix.size());
  for (const auto& [q, v] : prefix) out.push_back(q);
  return out;
}

Formula PrenexForm::to_formula() const {
  Formula out = matrix;
  for (auto it = prefix.rbegin(); it != prefix.rend(); ++it) {
    out = Formula::quantified(it->first, it->second, std::move(out));
  }
  return out;
}

PrenexForm split_prefix(const Formula& f) {
  PrenexForm out{{}, f};
  while (out.matrix.is_quantifier()) {
    out.prefix.emplace_back(out.matrix.quantifier(), out.matrix.variable());
    Formula body = out.matrix.body();
    out.matrix = std::move(body);
  }
  return out;
}

}  // namespace sentcx
