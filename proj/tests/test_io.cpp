#include <random>

#include <catch2/catch_amalgamated.hpp>

#include "support/oracles.hpp"

using namespace bckalg;

namespace {

std::string table_block(const std::string& doc) { return doc.substr(doc.find("table:\n")); }

const char* kTwoChain =
    "kind: bck\n"
    "order: 2\n"
    "elements: 0 a\n"
    "zero: 0\n"
    "table:\n"
    "0 0\n"
    "a 0\n";

std::string replace(std::string s, const std::string& from, const std::string& to) {
  auto p = s.find(from);
  REQUIRE(p != std::string::npos);
  return s.replace(p, from.size(), to);
}

}  // namespace

TEST_CASE("parse fixtures", "[io]") {
  auto b1 = oracle::load("ex3_1_bck.alg");
  CHECK(b1.kind() == Kind::BCK);
  CHECK(b1.table() == CayleyTable({{0, 0, 0, 0}, {1, 0, 0, 0}, {2, 1, 0, 0}, {3, 2, 1, 0}}));
  CHECK(b1.unit() == Element{3});

  auto w6 = oracle::load("ex3_6_wajsberg.alg");
  for (Element x = 0; x < 8; ++x) CHECK((*w6.complement())[x] == w6.op(x, w6.zero()));
  CHECK(w6.name((*w6.complement())[1]) == "V");
}

TEST_CASE("fixtures are canonical documents", "[io][property]") {
  for (int k = 1; k <= 7; ++k)
    for (const char* kind : {"_bck.alg", "_wajsberg.alg"}) {
      const auto path = oracle::fixture("ex3_" + std::to_string(k) + kind);
      const auto text = read_file(path);
      INFO(path);
      auto doc = parse_document(text);
      CHECK(render_document(doc) == text);
      CHECK(parse_document(render_document(doc)).algebra == doc.algebra);
    }
}

TEST_CASE("render", "[io]") {
  auto t = new_algebra(Kind::BCK, {"0"}, CayleyTable({{0}}), {Element{0}, std::nullopt});
  CHECK(render_algebra(t) == "kind: bck\norder: 1\nelements: 0\nzero: 0\ntable:\n0\n");

  auto doc = load_document(oracle::fixture("ex3_2_bck.alg"));
  CHECK(render_document(doc) == read_file(oracle::fixture("ex3_2_bck.alg")));

  auto chain = lukasiewicz_chain(4, {"O", "A", "B", "E"});
  CHECK(table_block(render_algebra(chain)) == table_block(read_file(oracle::fixture("ex3_1_wajsberg.alg"))));
  CHECK(render_algebra(chain) == render_algebra(oracle::load("ex3_1_wajsberg.alg")));
}

TEST_CASE("parse errors", "[io]") {
  CHECK_NOTHROW(parse_algebra(kTwoChain));
  CHECK_THROWS_AS(parse_algebra(replace(kTwoChain, "kind: bck", "kind: group")), ParseError);
  CHECK_THROWS_AS(parse_algebra(replace(kTwoChain, "elements: 0 a", "elements: 0 a b")), ParseError);
  CHECK_THROWS_AS(parse_algebra(replace(kTwoChain, "a 0\n", "a 0\n0 0\n")), ParseError);
  CHECK_THROWS_AS(parse_algebra(replace(kTwoChain, "a 0\n", "a 0 0\n")), ParseError);
  CHECK_THROWS_AS(parse_algebra(replace(kTwoChain, "a 0\n", "q 0\n")), ParseError);
  CHECK_THROWS_AS(parse_algebra(replace(kTwoChain, "zero: 0\n", "")), ParseError);
  CHECK_THROWS_AS(parse_algebra(replace(kTwoChain, "zero: 0\n", "zero: 0\nzero: a\n")), ParseError);
  CHECK_THROWS_AS(parse_algebra(replace(kTwoChain, "zero: 0\n", "zero: 0\ncolour: red\n")), ParseError);
  CHECK_THROWS_AS(parse_algebra(replace(kTwoChain, "order: 2", "order: two")), ParseError);
  CHECK_THROWS_AS(parse_algebra(replace(kTwoChain, "table:\n0 0\na 0\n", "")), ParseError);
  CHECK_THROWS_AS(parse_algebra(replace(kTwoChain, "elements: 0 a", "elements: 0 0")), ParseError);
  // complement disagrees with 1*x
  CHECK_THROWS_AS(parse_algebra(replace(kTwoChain, "zero: 0\n", "zero: 0\ncomplement: 0 0\n")), ParseError);

  // 3 names but a 4x4 table
  std::string w = read_file(oracle::fixture("ex3_1_bck.alg"));
  CHECK_THROWS_AS(parse_algebra(replace(replace(w, "order: 4", "order: 3"), "elements: O A B E", "elements: O A B")),
                  ParseError);
  // wajsberg without a one
  std::string wj = read_file(oracle::fixture("ex3_1_wajsberg.alg"));
  CHECK_THROWS_AS(parse_algebra(replace(wj, "one: E\n", "")), ParseError);
  CHECK_THROWS_AS(parse_algebra(replace(wj, "complement: E B A O", "complement: E A B O")), ParseError);
  CHECK_THROWS_AS(load_algebra(oracle::fixture("does_not_exist.alg")), ParseError);
}

TEST_CASE("comments and blank lines are tolerated", "[io]") {
  std::string text = std::string("# first\n\n#second\n") + kTwoChain + "\n";
  auto doc = parse_document(text);
  CHECK(doc.comments == std::vector<std::string>{"first", "second"});
  CHECK(render_document(doc) == std::string("# first\n# second\n") + kTwoChain);
}

TEST_CASE("render/parse is a fixed point on random algebras", "[io][property]") {
  std::mt19937 rng(20261016);
  for (int round = 0; round < 200; ++round) {
    const std::size_t n = 1 + rng() % 7;
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    auto t = CayleyTable::generate(n, [&](Element, Element) { return pick(rng); });
    std::vector<std::string> names;
    for (std::size_t i = 0; i < n; ++i) names.push_back("e" + std::to_string(i) + (rng() % 2 ? "x" : ""));
    auto a = new_algebra(Kind::BCK, names, t, {pick(rng), std::nullopt});
    auto text = render_algebra(a);
    auto b = parse_algebra(text);
    CHECK(b == a);
    CHECK(render_algebra(b) == text);
  }
}
