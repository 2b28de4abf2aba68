#include <fstream>
#include <set>
#include <random>
#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "sentcx/analysis.hpp"
#include "sentcx/syntax.hpp"
#include "sentcx/transforms.hpp"
#include "support/generators.hpp"

using namespace sentcx;

namespace {

CorpusItem item(std::string name, std::string_view formula,
                ItemKind kind = ItemKind::Theorem) {
  return CorpusItem{std::move(name), kind, parse_formula(formula),
                    std::string(formula), std::nullopt};
}

ItemResult with_class(std::string name, ComplexityClass c,
                      ItemKind kind = ItemKind::Theorem) {
  ItemResult r;
  r.name = std::move(name);
  r.kind = kind;
  r.internal = ModeResult{c, "", std::nullopt};
  return r;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

std::vector<CorpusItem> fixture() {
  std::ifstream in(SENTCX_FIXTURE_DIR "/mini.jsonl");
  CorpusReadResult r = read_corpus(in);
  REQUIRE(r.ok());
  return r.items;
}

AnalyzeOptions both_modes() {
  AnalyzeOptions o;
  o.surface = true;
  o.internal = true;
  return o;
}

std::vector<ItemResult> three_results() {
  return {with_class("a", ComplexityClass::pi(1)),
          with_class("b", ComplexityClass::pi(2)),
          with_class("c", ComplexityClass::quantifier_free())};
}

}  // namespace

TEST_CASE("analyze_items") {
  std::vector<CorpusItem> items{item("t1", "![X]: p(X)")};
  std::vector<ItemResult> r = analyze_items(items, both_modes());
  REQUIRE(r.size() == 1);
  CHECK(r[0].name == "t1");
  CHECK(r[0].surface->complexity == ComplexityClass::pi(1));
  CHECK(r[0].internal->complexity == ComplexityClass::pi(1));
  CHECK(r[0].internal->witness_prefix == "![X_1]:");

  items = {item("e1", "![X]: ((![Y]: c(X,Y)) => p(X))")};
  r = analyze_items(items);
  CHECK_FALSE(r[0].surface);
  CHECK(r[0].internal->complexity == ComplexityClass::pi(2));
  CHECK(r[0].internal->witness_prefix == "![X_1]: ?[Y_1]:");

  items = {item("d1", "zero = empty", ItemKind::DefinitionalTheorem)};
  r = analyze_items(items);
  CHECK(r[0].internal->complexity == ComplexityClass::quantifier_free());
  ComplexityTable t = aggregate(r, {}, Mode::Internal);
  REQUIRE(t.rows.size() == 1);
  CHECK(t.rows[0] == TableRow{0, 1, 1});
}

TEST_CASE("analyze_items closes free variables universally") {
  std::vector<CorpusItem> items{item("r", "union(empty, X) = X"),
                                item("s", "?[Y]: in(X, Y)")};
  std::vector<ItemResult> r = analyze_items(items);
  CHECK(r[0].internal->complexity == ComplexityClass::pi(1));
  CHECK(r[1].internal->complexity == ComplexityClass::pi(2));
}

TEST_CASE("arity conflicts become per-item errors") {
  std::vector<CorpusItem> items{
      item("a", "![X]: p(X)"),          item("b", "![X]: p(X, X)"),
      item("c", "q(f(a)) & q(f(a, a))"), item("d", "f(a) = b"),
      item("e", "p(a, a, a) => p(a)"),  item("f", "p(f(b))"),
      item("g", "q(p)"),                item("h", "f = b")};
  std::vector<std::optional<std::string>> errors = signature_errors(items);
  CHECK_FALSE(errors[0]);
  REQUIRE(errors[1]);
  CHECK(*errors[1] ==
        "predicate 'p' used with arity 2, but item 'a' fixed arity 1");
  REQUIRE(errors[2]);
  CHECK(errors[2]->find("function 'f' used with arities 1 and 2") == 0);
  CHECK_FALSE(errors[3]);
  CHECK(errors[4]);
  CHECK_FALSE(errors[5]);
  // Predicates and functions live in separate namespaces.
  CHECK_FALSE(errors[6]);
  REQUIRE(errors[7]);
  CHECK(errors[7]->find("function 'f' used with arity 0") == 0);

  std::vector<ItemResult> r = analyze_items(items);
  CHECK(r[1].error);
  CHECK_FALSE(r[1].internal);
  CHECK(r[3].internal->complexity == ComplexityClass::quantifier_free());
  ComplexityTable t = aggregate(r, {}, Mode::Internal);
  CHECK(t.total_pi + t.total_sigma == 7);
}

TEST_CASE("aggregate") {
  std::vector<ItemResult> results = three_results();
  ComplexityTable t = aggregate(results, {}, Mode::Internal);
  CHECK(t.rows == std::vector<TableRow>{{0, 1, 1}, {1, 1, 0}, {2, 1, 0}});
  CHECK(t.total_pi == 3);
  CHECK(t.total_sigma == 1);

  ComplexityTable empty = aggregate({}, {}, Mode::Internal);
  CHECK(empty.rows.empty());
  CHECK(empty.total_pi == 0);
  CHECK(empty.total_sigma == 0);

  std::vector<ItemResult> mixed{
      with_class("t", ComplexityClass::sigma(3)),
      with_class("d", ComplexityClass::pi(2), ItemKind::DefinitionalTheorem),
      with_class("d2", ComplexityClass::quantifier_free(),
                 ItemKind::DefinitionalTheorem)};
  std::vector<ItemKind> facet{ItemKind::DefinitionalTheorem};
  ComplexityTable defs = aggregate(mixed, facet, Mode::Internal);
  CHECK(defs.rows == std::vector<TableRow>{{0, 1, 1}, {1, 0, 0}, {2, 1, 0}});
  CHECK(defs.total_pi == 2);
  CHECK(defs.total_sigma == 1);
  CHECK(defs.facet == facet);

  // Only the requested mode is counted.
  CHECK(aggregate(mixed, {}, Mode::Surface).rows.empty());
}

TEST_CASE("emit_table") {
  ComplexityTable single;
  single.add(ComplexityClass::quantifier_free());
  CHECK(emit_table(single, TableFormat::Csv) ==
        "n,pi_count,sigma_count\n0,1,1\ntotal,1,1\n");

  CHECK(emit_table(ComplexityTable{}, TableFormat::Csv) ==
        "n,pi_count,sigma_count\ntotal,0,0\n");

  std::vector<ItemResult> results = three_results();
  ComplexityTable t = aggregate(results, {}, Mode::Internal);
  CHECK(emit_table(t, TableFormat::Markdown) ==
        slurp(SENTCX_FIXTURE_DIR "/three_items.md"));
  CHECK(emit_table(ComplexityTable{}, TableFormat::Markdown) ==
        "| n | Π_n | Σ_n |\n|---|---|---|\n| Total | 0 | 0 |\n");
}

TEST_CASE("item_result_jsonl") {
  std::vector<CorpusItem> items{item("e1", "![X]: ((![Y]: c(X,Y)) => p(X))")};
  AnalyzeOptions o = both_modes();
  o.oracle = true;
  std::vector<ItemResult> r = analyze_items(items, o);
  CHECK(item_result_jsonl(r[0]) ==
        "{\"name\":\"e1\",\"kind\":\"theorem\",\"mode\":\"surface\","
        "\"class\":\"Pi\",\"level\":2,\"prefix\":\"![X_1]: ?[Y_1]:\","
        "\"oracle\":\"Pi 2\"}\n"
        "{\"name\":\"e1\",\"kind\":\"theorem\",\"mode\":\"internal\","
        "\"class\":\"Pi\",\"level\":2,\"prefix\":\"![X_1]: ?[Y_1]:\","
        "\"oracle\":\"Pi 2\"}\n");

  ItemResult failed;
  failed.name = "x";
  failed.kind = ItemKind::Lemma;
  failed.error = "boom";
  CHECK(item_result_jsonl(failed) ==
        "{\"name\":\"x\",\"kind\":\"lemma\",\"error\":\"boom\"}\n");

  ItemResult qf = with_class("q", ComplexityClass::quantifier_free());
  CHECK(item_result_jsonl(qf) ==
        "{\"name\":\"q\",\"kind\":\"theorem\",\"mode\":\"internal\","
        "\"class\":\"QF\",\"level\":0,\"prefix\":\"\"}\n");
}

TEST_CASE("oracle disagreement is reported per mode") {
  ModeResult agree{ComplexityClass::pi(1), "", ComplexityClass::pi(1)};
  ModeResult differ{ComplexityClass::pi(1), "", ComplexityClass::sigma(1)};
  ModeResult unchecked{ComplexityClass::pi(1), "", std::nullopt};
  CHECK_FALSE(agree.oracle_disagrees());
  CHECK(differ.oracle_disagrees());
  CHECK_FALSE(unchecked.oracle_disagrees());
  ItemResult r;
  r.internal = agree;
  CHECK_FALSE(r.oracle_disagrees());
  r.surface = differ;
  CHECK(r.oracle_disagrees());
}

TEST_CASE("fixture corpus matches the oracle expectations") {
  std::vector<CorpusItem> items = fixture();
  REQUIRE(items.size() == 30);
  std::set<ItemKind> kinds;
  for (const CorpusItem& i : items) kinds.insert(i.kind);
  CHECK(kinds.size() == std::size(kAllItemKinds));

  AnalyzeOptions o = both_modes();
  o.oracle = true;
  std::vector<ItemResult> results = analyze_items(items, o);

  std::istringstream expected(slurp(SENTCX_FIXTURE_DIR "/mini.expected.jsonl"));
  std::string line;
  std::size_t checked = 0;
  while (std::getline(expected, line)) {
    nlohmann::json j = nlohmann::json::parse(line);
    const ItemResult& r = results[checked / 2];
    CHECK(r.name == j["name"].get<std::string>());
    Mode mode = *mode_from_string(j["mode"].get<std::string>());
    const std::optional<ModeResult>& m = r.result(mode);
    REQUIRE(m);
    CHECK(m->complexity.to_string() == j["class"].get<std::string>());
    CHECK(m->oracle == m->complexity);
    ++checked;
  }
  CHECK(checked == 60);
}

TEST_CASE("definitional items never land in Sigma_k, k > 0") {
  std::vector<CorpusItem> items = fixture();
  std::vector<ItemResult> results = analyze_items(items, both_modes());
  int definitional = 0;
  for (const ItemResult& r : results) {
    if (r.kind != ItemKind::DefinitionalTheorem) continue;
    ++definitional;
    for (Mode mode : {Mode::Surface, Mode::Internal}) {
      INFO(r.name);
      CHECK(r.result(mode)->complexity.kind() != ClassKind::Sigma);
    }
  }
  CHECK(definitional >= 5);
}

TEST_CASE("property: closed biconditional and equation definitions are never Sigma") {
  // forall params. (defined(params) <=> definiens), with and without
  // parameters, over arbitrary definientia.
  std::mt19937_64 rng(12);
  testing::GenParams params;
  params.closed = false;
  testing::FormulaGen gen(rng, params);
  for (int i = 0; i < 3000; ++i) {
    Formula definiens = gen.next();
    Formula head = i % 2 ? Formula::atom("defined", {Term::variable("W")})
                         : Formula::atom("defined", {});
    Formula def = universal_closure(Formula::equivalence(head, definiens));
    INFO(print_formula(def));
    for (Mode mode : {Mode::Surface, Mode::Internal}) {
      REQUIRE(minimal_class(def, mode).kind() != ClassKind::Sigma);
    }
  }
}

TEST_CASE("property: merge is associative and commutative") {
  std::mt19937_64 rng(13);
  std::uniform_int_distribution<int> level(0, 6);
  std::bernoulli_distribution pi(0.6);
  auto random_table = [&] {
    ComplexityTable t;
    for (int i = 0; i < 20; ++i) {
      int n = level(rng);
      t.add(n == 0 ? ComplexityClass::quantifier_free()
            : pi(rng) ? ComplexityClass::pi(n)
                      : ComplexityClass::sigma(n));
    }
    return t;
  };
  for (int i = 0; i < 200; ++i) {
    ComplexityTable a = random_table(), b = random_table(), c = random_table();
    ComplexityTable ab_c = a;
    ab_c.merge(b);
    ab_c.merge(c);
    ComplexityTable bc = b;
    bc.merge(c);
    ComplexityTable a_bc = a;
    a_bc.merge(bc);
    ComplexityTable ba = b;
    ba.merge(a);
    ComplexityTable ab = a;
    ab.merge(b);
    REQUIRE(ab_c.rows == a_bc.rows);
    REQUIRE(ab_c.total_pi == a_bc.total_pi);
    REQUIRE(ab.rows == ba.rows);
    REQUIRE(ab.total_sigma == ba.total_sigma);
  }
}

TEST_CASE("property: table counts match analyzed items") {
  std::mt19937_64 rng(14);
  testing::FormulaGen gen(rng, {});
  std::vector<CorpusItem> items;
  for (int i = 0; i < 500; ++i) {
    items.push_back({"i" + std::to_string(i), kAllItemKinds[i % 12],
                     gen.next(), "", std::nullopt});
  }
  std::vector<ItemResult> results = analyze_items(items);
  ComplexityTable t = aggregate(results, {}, Mode::Internal);
  std::uint64_t qf = 0;
  for (const ItemResult& r : results) {
    if (r.internal->complexity.kind() == ClassKind::QuantifierFree) ++qf;
  }
  std::uint64_t sum = 0;
  for (const TableRow& row : t.rows) sum += row.pi_count + row.sigma_count;
  CHECK(sum == results.size() + qf);
  CHECK(t.total_pi + t.total_sigma == sum);
  REQUIRE_FALSE(t.rows.empty());
  CHECK((t.rows.back().pi_count + t.rows.back().sigma_count) > 0);
}

TEST_CASE("property: parallel analysis equals the serial reference") {
  std::mt19937_64 rng(15);
  testing::FormulaGen gen(rng, {});
  std::vector<CorpusItem> items;
  for (int i = 0; i < 3000; ++i) {
    items.push_back({"i" + std::to_string(i), kAllItemKinds[i % 12],
                     gen.next(), "", std::nullopt});
  }
  items.push_back(item("bad", "p(a, a, a, a, a)"));
  AnalyzeOptions o = both_modes();
  std::vector<ItemResult> serial = analyze_items_serial(items, o);
  std::vector<ItemResult> parallel = analyze_items(items, o);
  std::vector<ItemResult> again = analyze_items(items, o);
  REQUIRE(serial.size() == parallel.size());
  CHECK(serial.back().error);
  std::string a, b, c;
  for (std::size_t i = 0; i < serial.size(); ++i) {
    REQUIRE(serial[i] == parallel[i]);
    a += item_result_jsonl(serial[i]);
    b += item_result_jsonl(parallel[i]);
    c += item_result_jsonl(again[i]);
  }
  CHECK(a == b);
  CHECK(b == c);
}
