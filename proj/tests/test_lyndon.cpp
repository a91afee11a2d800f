#include "polyfree/lyndon.hpp"

#include <random>

#include "doctest.h"
#include "oracles.hpp"

using namespace polyfree;

namespace {

LyndonWord W(std::vector<int> letters) { return LyndonWord(std::move(letters)); }

FreeLieElement gen(int letter, int trunc) {
  return FreeLieElement::generator(letter, trunc);
}

}  // namespace

TEST_CASE("lyndon word invariants") {
  CHECK(LyndonWord::is_lyndon(std::vector<int>{0}));
  CHECK(LyndonWord::is_lyndon(std::vector<int>{0, 1}));
  CHECK(LyndonWord::is_lyndon(std::vector<int>{0, 0, 1}));
  CHECK_FALSE(LyndonWord::is_lyndon(std::vector<int>{1, 0}));
  CHECK_FALSE(LyndonWord::is_lyndon(std::vector<int>{0, 1, 0, 1}));
  CHECK_FALSE(LyndonWord::is_lyndon(std::vector<int>{0, 0}));
  CHECK_THROWS_AS(W({1, 0}), std::invalid_argument);
}

TEST_CASE("lyndon_words enumeration") {
  // (2,1) -> [x, y]
  auto w1 = lyndon_words(2, 1);
  REQUIRE(w1.size() == 2);
  CHECK(w1[0] == W({0}));
  CHECK(w1[1] == W({1}));

  // (2,3) -> [xxy, xyy]
  auto w3 = lyndon_words(2, 3);
  REQUIRE(w3.size() == 2);
  CHECK(w3[0] == W({0, 0, 1}));
  CHECK(w3[1] == W({0, 1, 1}));

  // (2,4) -> [xxxy, xxyy, xyyy]
  auto w4 = lyndon_words(2, 4);
  REQUIRE(w4.size() == 3);
  CHECK(w4[0] == W({0, 0, 0, 1}));
  CHECK(w4[1] == W({0, 0, 1, 1}));
  CHECK(w4[2] == W({0, 1, 1, 1}));

  CHECK_THROWS_AS(lyndon_words(0, 1), std::invalid_argument);
  CHECK_THROWS_AS(lyndon_words(2, 0), std::invalid_argument);
}

TEST_CASE("enumeration agrees with the rotation-minimality oracle") {
  for (int k = 1; k <= 4; ++k) {
    for (int w = 1; w <= 8; ++w) {
      auto fast = lyndon_words(k, w);
      auto brute = polyfree::testing::brute_force_lyndon(k, w);
      REQUIRE(fast.size() == brute.size());
      for (size_t i = 0; i < fast.size(); ++i) CHECK(fast[i].letters() == brute[i]);
    }
  }
}

TEST_CASE("witt dimensions") {
  CHECK(witt_dimension(2, 1) == 2);
  CHECK(witt_dimension(3, 3) == 8);  // (3^3 - 3)/3
  CHECK(witt_dimension(2, 6) == 9);
  CHECK_THROWS_AS(witt_dimension(0, 1), std::invalid_argument);

  for (int k = 1; k <= 4; ++k)
    for (int w = 1; w <= 8; ++w)
      CHECK(witt_dimension(k, w) == Int(static_cast<long>(lyndon_words(k, w).size())));
}

TEST_CASE("standard factorization") {
  CHECK(standard_factorization(W({0, 1})) == std::pair(W({0}), W({1})));
  CHECK(standard_factorization(W({0, 0, 1})) == std::pair(W({0}), W({0, 1})));
  CHECK(standard_factorization(W({0, 1, 1})) == std::pair(W({0, 1}), W({1})));
  CHECK_THROWS_AS(standard_factorization(W({0})), std::invalid_argument);

  // The right factor is the longest proper Lyndon suffix.
  for (int k = 2; k <= 3; ++k)
    for (int w = 2; w <= 6; ++w)
      for (const auto& word : lyndon_words(k, w)) {
        auto [u, v] = standard_factorization(word);
        CHECK(LyndonWord::concat(u, v) == word);
        for (int p = 1; p < word.weight() - v.weight(); ++p) {
          std::vector<int> suffix(word.letters().begin() + p, word.letters().end());
          CHECK_FALSE(LyndonWord::is_lyndon(suffix));
        }
      }
}

TEST_CASE("basic brackets") {
  const int T = 4;
  CHECK(free_bracket(gen(0, T), gen(0, T), T).is_zero());

  FreeLieElement xy = free_bracket(gen(0, T), gen(1, T), T);
  FreeLieElement expected(T);
  expected.add(W({0, 1}), 1);
  CHECK(xy == expected);

  // [x, [x,y]] = +\lambda(xxy), [[x,y], x] = -\lambda(xxy)
  FreeLieElement xxy = free_bracket(gen(0, T), xy, T);
  FreeLieElement exp2(T);
  exp2.add(W({0, 0, 1}), 1);
  CHECK(xxy == exp2);
  CHECK(free_bracket(xy, gen(0, T), T) == -xxy);

  // truncation discards overflow
  CHECK(free_bracket(gen(0, 1), gen(1, 1), 1).is_zero());
}

TEST_CASE("expansion oracle on basics") {
  // x -> x
  AssocPoly ex = expand(gen(0, 3));
  CHECK(ex == AssocPoly::word({0}));

  // (xy) -> xy - yx
  AssocPoly exy = expand(FreeLieElement::basis_term(W({0, 1}), 3));
  AssocPoly want = AssocPoly::word({0, 1});
  want -= AssocPoly::word({1, 0});
  CHECK(exy == want);

  // (xxy) -> xxy - 2 xyx + yxx
  AssocPoly exxy = expand(FreeLieElement::basis_term(W({0, 0, 1}), 3));
  AssocPoly want2 = AssocPoly::word({0, 0, 1});
  want2.add({0, 1, 0}, -2);
  want2.add({1, 0, 0}, 1);
  CHECK(exxy == want2);
}

TEST_CASE("bracket agrees with the associative commutator on all basis pairs") {
  for (int k = 2; k <= 3; ++k) {
    std::vector<LyndonWord> basis;
    for (int w = 1; w <= 5; ++w)
      for (auto& word : lyndon_words(k, w)) basis.push_back(word);
    for (const auto& a : basis)
      for (const auto& b : basis) {
        int w = a.weight() + b.weight();
        if (w > 6) continue;
        FreeLieElement ea = FreeLieElement::basis_term(a, w);
        FreeLieElement eb = FreeLieElement::basis_term(b, w);
        AssocPoly lhs = expand(free_bracket(ea, eb, w));
        AssocPoly rhs = expand(ea) * expand(eb);
        rhs -= expand(eb) * expand(ea);
        CHECK(lhs == rhs);
      }
  }
}

TEST_CASE("antisymmetry and Jacobi on random elements") {
  std::mt19937_64 rng(12345);
  for (int iter = 0; iter < 40; ++iter) {
    const int T = 6;
    FreeLieElement x = polyfree::testing::random_free_element(rng, 3, 3, 4);
    FreeLieElement y = polyfree::testing::random_free_element(rng, 3, 3, 4);
    FreeLieElement z = polyfree::testing::random_free_element(rng, 3, 2, 3);

    FreeLieElement anti = free_bracket(x, y, T);
    anti += free_bracket(y, x, T);
    CHECK(anti.is_zero());

    FreeLieElement jac = free_bracket(x, free_bracket(y, z, T), T);
    jac += free_bracket(y, free_bracket(z, x, T), T);
    jac += free_bracket(z, free_bracket(x, y, T), T);
    CHECK(jac.is_zero());
  }
}

TEST_CASE("bilinearity") {
  std::mt19937_64 rng(999);
  for (int iter = 0; iter < 20; ++iter) {
    const int T = 5;
    FreeLieElement x = polyfree::testing::random_free_element(rng, 2, 3, 3);
    FreeLieElement y = polyfree::testing::random_free_element(rng, 2, 2, 3);
    FreeLieElement z = polyfree::testing::random_free_element(rng, 2, 2, 3);
    FreeLieElement sum = y;
    sum += z;
    FreeLieElement lhs = free_bracket(x, sum, T);
    FreeLieElement rhs = free_bracket(x, y, T);
    rhs += free_bracket(x, z, T);
    CHECK(lhs == rhs);
  }
}
