#include <catch2/catch_amalgamated.hpp>

#include "support/oracles.hpp"

using namespace bckalg;

namespace {

std::vector<std::vector<std::size_t>> factor_lists(std::size_t n) {
  std::vector<std::vector<std::size_t>> out;
  for (const auto& f : factorizations(n)) out.push_back(f.factors);
  return out;
}

}  // namespace

TEST_CASE("factorizations", "[enumerate]") {
  CHECK(factor_lists(4) == std::vector<std::vector<std::size_t>>{{4}, {2, 2}});
  CHECK(factor_lists(7) == std::vector<std::vector<std::size_t>>{{7}});
  CHECK(factor_lists(12) == std::vector<std::vector<std::size_t>>{{12}, {2, 6}, {3, 4}, {2, 2, 3}});
  CHECK(factorizations(1).empty());
  CHECK_THROWS_AS(factorizations(0), PreconditionError);
  CHECK(factorizations(12)[3].label() == "2x2x3");
}

TEST_CASE("factorizations match the brute-force oracle", "[enumerate][property]") {
  for (std::size_t n = 2; n <= 64; ++n) {
    INFO("n=" << n);
    auto expected = oracle::unordered_factorizations(n);
    auto got = factor_lists(n);
    CHECK(std::set<std::vector<std::size_t>>(got.begin(), got.end()) == expected);
    CHECK(got.size() == expected.size());
    for (const auto& f : factorizations(n)) {
      std::size_t product = 1;
      for (auto r : f.factors) product *= r;
      CHECK(product == n);
      CHECK(std::is_sorted(f.factors.begin(), f.factors.end()));
      CHECK(f.factors.front() >= 2);
    }
  }
  // frozen from the oracle
  const std::vector<std::size_t> pis{1, 1, 2, 1, 2, 1, 3, 2, 2, 1, 4};
  for (std::size_t n = 2; n <= 12; ++n) CHECK(pi(n) == pis[n - 2]);
}

TEST_CASE("lukasiewicz chains reproduce the printed chain tables", "[enumerate]") {
  CHECK(lukasiewicz_chain(4).table() == oracle::load("ex3_1_wajsberg.alg").table());
  CHECK(lukasiewicz_chain(6).table() == oracle::load("ex3_3_wajsberg.alg").table());
  CHECK(lukasiewicz_chain(8).table() == oracle::load("ex3_6_wajsberg.alg").table());
  CHECK(lukasiewicz_chain(8, {"O", "X", "Y", "Z", "T", "U", "V", "E"}) == oracle::load("ex3_6_wajsberg.alg"));
  CHECK_THROWS_AS(lukasiewicz_chain(1), PreconditionError);
  for (std::size_t n = 2; n <= 12; ++n) CHECK(check_wajsberg(lukasiewicz_chain(n)).passed());
}

TEST_CASE("chains have a subalgebra of every smaller size", "[enumerate][property]") {
  for (std::size_t n = 2; n <= 10; ++n) {
    auto b = wajsberg_to_bck(lukasiewicz_chain(n));
    for (std::size_t k = 1; k <= n; ++k) {
      Subset prefix;
      for (Element i = 0; i < k; ++i) prefix.insert(i);
      CHECK(is_subalgebra(b, prefix));
    }
  }
}

TEST_CASE("direct products", "[enumerate]") {
  auto c3 = lukasiewicz_chain(3);
  CHECK(direct_product({c3}) == c3);
  CHECK_THROWS_AS(direct_product({}), PreconditionError);

  auto c2c2 = direct_product({lukasiewicz_chain(2), lukasiewicz_chain(2)});
  CHECK(c2c2.order() == 4);
  CHECK(c2c2.names() == std::vector<std::string>{"(0,0)", "(0,1)", "(1,0)", "(1,1)"});
  CHECK(c2c2.unit() == Element{3});
  CHECK(c2c2.zero() == 0);
  CHECK(check_wajsberg(c2c2).passed());
  auto w2 = oracle::load("ex3_2_wajsberg.alg");
  CHECK(find_isomorphism(w2, c2c2));
  CHECK(oracle::brute_isomorphic(w2, c2c2));

  auto c2c3 = direct_product({lukasiewicz_chain(2), lukasiewicz_chain(3)});
  CHECK(check_wajsberg(c2c3).passed());
  CHECK(find_isomorphism(oracle::load("ex3_4_wajsberg.alg"), c2c3));
  CHECK(find_isomorphism(oracle::load("ex3_5_wajsberg.alg"), c2c3));
}

TEST_CASE("direct product is associative and commutative up to isomorphism", "[enumerate][property]") {
  auto c2 = lukasiewicz_chain(2), c3 = lukasiewicz_chain(3), c4 = lukasiewicz_chain(4);
  CHECK(find_isomorphism(direct_product({c2, c3}), direct_product({c3, c2})));
  CHECK(find_isomorphism(direct_product({c2, c4}), direct_product({c4, c2})));
  CHECK(find_isomorphism(direct_product({direct_product({c2, c3}), c2}), direct_product({c2, direct_product({c3, c2})})));
  CHECK(find_isomorphism(direct_product({c2, c2, c3}), direct_product({direct_product({c2, c2}), c3})));
}

TEST_CASE("enumerate_wajsberg", "[enumerate]") {
  auto four = enumerate_wajsberg(4);
  REQUIRE(four.size() == 2);
  CHECK(four[0].algebra.table() == lukasiewicz_chain(4).table());
  CHECK(four[1].factorization.factors == std::vector<std::size_t>{2, 2});
  CHECK(enumerate_wajsberg(5).size() == 1);
  auto eight = enumerate_wajsberg(8);
  REQUIRE(eight.size() == 3);
  CHECK(eight[1].factorization.label() == "2x4");
  CHECK(eight[2].factorization.label() == "2x2x2");
  CHECK_THROWS_AS(enumerate_wajsberg(1), PreconditionError);
  for (std::size_t n = 2; n <= 12; ++n)
    for (const auto& e : enumerate_wajsberg(n)) {
      CHECK(e.algebra.order() == n);
      CHECK(check_wajsberg(e.algebra).passed());
    }
}

TEST_CASE("find_isomorphism", "[enumerate]") {
  auto b1 = oracle::load("ex3_1_bck.alg");
  auto chain = wajsberg_to_bck(lukasiewicz_chain(4));
  auto f = find_isomorphism(b1, chain);
  REQUIRE(f);
  CHECK(*f == std::vector<Element>{0, 1, 2, 3});
  CHECK_FALSE(find_isomorphism(b1, oracle::load("ex3_2_bck.alg")));

  auto b4 = oracle::load("ex3_4_bck.alg");
  auto self = find_isomorphism(b4, b4);
  REQUIRE(self);
  CHECK(check_morphism(*self, b4, b4).passed());

  CHECK_THROWS_AS(find_isomorphism(b1, lukasiewicz_chain(4)), PreconditionError);
  CHECK_FALSE(find_isomorphism(b1, wajsberg_to_bck(lukasiewicz_chain(5))));
}

TEST_CASE("find_isomorphism agrees with brute force", "[enumerate][property]") {
  // every pair of bck algebras of order 3 and a sample of order 4
  auto three = oracle::all_bck_algebras(3);
  for (const auto& a : three)
    for (const auto& b : three) {
      auto f = find_isomorphism(a, b);
      CHECK(f.has_value() == oracle::brute_isomorphic(a, b));
      if (f) CHECK(check_morphism(*f, a, b).passed());
    }
  auto four = oracle::all_bck_algebras(4);
  for (std::size_t i = 0; i < four.size(); i += 7)
    for (std::size_t j = 0; j < four.size(); j += 11) {
      auto f = find_isomorphism(four[i], four[j]);
      CHECK(f.has_value() == oracle::brute_isomorphic(four[i], four[j]));
    }
}

TEST_CASE("isomorphic algebras have identical check profiles", "[enumerate][property]") {
  auto four = oracle::all_bck_algebras(4);
  for (std::size_t i = 0; i < four.size(); i += 3)
    for (std::size_t j = i; j < four.size(); j += 5)
      if (find_isomorphism(four[i], four[j])) {
        CHECK(is_commutative(four[i]).passed() == is_commutative(four[j]).passed());
        CHECK(is_implicative(four[i]).passed() == is_implicative(four[j]).passed());
        CHECK(is_positive_implicative(four[i]).passed() == is_positive_implicative(four[j]).passed());
      }
}

TEST_CASE("poset_isomorphic", "[enumerate]") {
  auto b1 = oracle::load("ex3_1_bck.alg");
  CHECK(poset_isomorphic(wajsberg_to_bck(lukasiewicz_chain(4)), b1));
  CHECK(poset_isomorphic(lukasiewicz_chain(4), b1));
  CHECK_FALSE(poset_isomorphic(b1, oracle::load("ex3_2_bck.alg")));
  auto eight = enumerate_wajsberg(8);
  for (std::size_t i = 0; i < eight.size(); ++i)
    for (std::size_t j = i + 1; j < eight.size(); ++j) CHECK_FALSE(poset_isomorphic(eight[i].algebra, eight[j].algebra));
}
