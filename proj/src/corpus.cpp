#include "sentcx/corpus.hpp"

#include "json.hpp"
#include <unordered_set>

#include "sentcx/syntax.hpp"

namespace sentcx {

std::string_view to_string(ItemKind kind) {
  switch (kind) {
    case ItemKind::Theorem: return "theorem";
    case ItemKind::DefinitionalTheorem: return "definitional_theorem";
    case ItemKind::Lemma: return "lemma";
    case ItemKind::Property: return "property";
    case ItemKind::RewriteRule: return "rewrite_rule";
    case ItemKind::Identification: return "identification";
    case ItemKind::RedefinitionCompatibility:
      return "redefinition_compatibility";
    case ItemKind::SchemeInstance: return "scheme_instance";
    case ItemKind::ExistenceCondition: return "existence_condition";
    case ItemKind::UniquenessCondition: return "uniqueness_condition";
    case ItemKind::TypeNonEmptiness: return "type_non_emptiness";
    case ItemKind::Other: return "other";
  }
  return "other";
}

std::optional<ItemKind> item_kind_from_string(std::string_view text) {
  for (ItemKind k : kAllItemKinds) {
    if (to_string(k) == text) return k;
  }
  return std::nullopt;
}

namespace {

std::optional<std::string> string_field(const nlohmann::json& obj,
                                        const char* field,
                                        std::string& problem) {
  auto it = obj.find(field);
  if (it == obj.end()) {
    problem = std::string("missing required field \"") + field + "\"";
    return std::nullopt;
  }
  if (!it->is_string()) {
    problem = std::string("field \"") + field + "\" must be a string";
    return std::nullopt;
  }
  return it->get<std::string>();
}

}  // namespace

CorpusReadResult read_corpus(std::istream& in, CorpusReadOptions options) {
  CorpusReadResult result;
  std::unordered_set<std::string> names;
  std::string line;
  std::size_t line_no = 0;
  auto error = [&](std::string message) {
    result.errors.push_back({line_no, std::move(message)});
    return options.strict;
  };

  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) continue;

    nlohmann::json obj;
    try {
      obj = nlohmann::json::parse(line);
    } catch (const nlohmann::json::parse_error& e) {
      if (error(std::string("malformed JSON: ") + e.what())) break;
      continue;
    }
    if (!obj.is_object()) {
      if (error("expected a JSON object")) break;
      continue;
    }

    std::string problem;
    auto name = string_field(obj, "name", problem);
    auto kind_text = name ? string_field(obj, "kind", problem) : std::nullopt;
    auto text = kind_text ? string_field(obj, "formula", problem) : std::nullopt;
    if (!text) {
      if (error(problem)) break;
      continue;
    }
    if (name->empty()) {
      if (error("\"name\" must be non-empty")) break;
      continue;
    }
    std::optional<std::string> source;
    if (auto it = obj.find("source"); it != obj.end()) {
      if (!it->is_string()) {
        if (error("field \"source\" must be a string")) break;
        continue;
      }
      source = it->get<std::string>();
    }

    std::optional<ItemKind> kind = item_kind_from_string(*kind_text);
    if (!kind) {
      result.warnings.push_back(
          {line_no, "unknown kind \"" + *kind_text + "\" treated as other"});
      kind = ItemKind::Other;
    }

    std::optional<Formula> formula;
    try {
      formula = parse_formula(*text);
    } catch (const ParseError& e) {
      if (error("item \"" + *name + "\": " + e.what())) break;
      continue;
    }
    if (!names.insert(*name).second) {
      if (error("duplicate item name \"" + *name + "\"")) break;
      continue;
    }
    result.items.push_back(CorpusItem{std::move(*name), *kind,
                                      std::move(*formula), std::move(*text),
                                      std::move(source)});
  }
  return result;
}

}  // namespace sentcx
