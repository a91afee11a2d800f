#include "polyfree/algebra.hpp"

#include <thread>

#include "doctest.h"

using namespace polyfree;

namespace {

LieElement gen(const AlgebraSpec& a, const std::string& name, int trunc = 4) {
  return a.generator(name, trunc);
}

LieElement br(const AlgebraSpec& a, const std::string& x, const std::string& y,
              int trunc = 4) {
  return bracket(a, gen(a, x, trunc), gen(a, y, trunc), trunc);
}

}  // namespace

TEST_CASE("family construction basics") {
  AlgebraSpec m3 = AlgebraSpec::mccool_plus(3);
  CHECK(m3.layer_count() == 2);
  CHECK(m3.layer_rank(0) == 1);
  CHECK(m3.layer_rank(1) == 2);
  CHECK(m3.generator_names() ==
        std::vector<std::string>{"B[1,2]", "B[1,3]", "B[2,3]"});
  CHECK(m3.top_layer_generators() == std::vector<std::string>{"B[1,3]", "B[2,3]"});

  CHECK_THROWS_AS(AlgebraSpec::mccool_plus(1), std::invalid_argument);
  CHECK_THROWS_AS(AlgebraSpec::surface_orbit(2, 1), std::invalid_argument);
  CHECK_THROWS_AS(AlgebraSpec::monomial_orbit(0, 2), std::invalid_argument);
  CHECK_THROWS_AS(
      AlgebraSpec::custom("dup", {{"g", "g"}}, {}),
      std::invalid_argument);
}

TEST_CASE("mccool action table") {
  AlgebraSpec a = AlgebraSpec::mccool_plus(3);

  // act(B[1,2], B[1,3]) = 0
  CHECK(br(a, "B[1,2]", "B[1,3]").is_zero());

  // act(B[1,2], B[2,3]) = [B[2,3], B[1,3]] = -(B[1,3] B[2,3])
  LieElement v = br(a, "B[1,2]", "B[2,3]");
  LieElement expected = br(a, "B[2,3]", "B[1,3]");
  CHECK(v == expected);
  REQUIRE(v.terms().size() == 1);
  CHECK(v.terms().begin()->second == -1);
  CHECK(v.terms().begin()->first == BasisKey{1, LyndonWord({0, 1})});

  // within the top layer the bracket is free
  LieElement w = br(a, "B[1,3]", "B[2,3]");
  REQUIRE(w.terms().size() == 1);
  CHECK(w.terms().begin()->second == 1);
}

TEST_CASE("drinfeld_kohno differs from mccool exactly at act(B[i,j], B[i,l])") {
  AlgebraSpec dk = AlgebraSpec::drinfeld_kohno(3);
  AlgebraSpec mc = AlgebraSpec::mccool_plus(3);
  CHECK(br(mc, "B[1,2]", "B[1,3]").is_zero());
  LieElement v = br(dk, "B[1,2]", "B[1,3]");
  CHECK(v == br(dk, "B[1,3]", "B[2,3]"));
  CHECK(br(dk, "B[1,2]", "B[2,3]") == br(mc, "B[1,2]", "B[2,3]"));
}

TEST_CASE("monomial action table") {
  AlgebraSpec a = AlgebraSpec::monomial_orbit(2, 2);

  // act(Z[1], B[1,2;1]) = -[Z[2], B[1,2;1]] - [B[1,2;2], B[1,2;1]]
  LieElement got = br(a, "Z[1]", "B[1,2;1]");
  LieElement expected = -br(a, "Z[2]", "B[1,2;1]");
  expected -= br(a, "B[1,2;2]", "B[1,2;1]");
  CHECK(got == expected);
  CHECK_FALSE(got.is_zero());

  // the first relation family: [Z1 + Z2 + B[1,2;1] + B[1,2;2], Y] = 0
  LieElement delta = gen(a, "Z[1]");
  delta += gen(a, "Z[2]");
  delta += gen(a, "B[1,2;1]");
  delta += gen(a, "B[1,2;2]");
  for (const auto& y : {"Z[2]", "B[1,2;1]", "B[1,2;2]"})
    CHECK(bracket(a, delta, gen(a, y), 4).is_zero());
}

TEST_CASE("surface action table with additive labels") {
  AlgebraSpec a = AlgebraSpec::surface_orbit(3, 3);

  // act(B[1,2;s], B[1,3;t]) = [B[1,3;t], B[2,3;t-s]]
  for (int s = 0; s < 3; ++s)
    for (int t = 0; t < 3; ++t) {
      auto nm = [](int i, int j, int lab) {
        return "B[" + std::to_string(i) + "," + std::to_string(j) + ";" +
               std::to_string(((lab % 3) + 3) % 3) + "]";
      };
      CHECK(br(a, nm(1, 2, s), nm(1, 3, t)) ==
            br(a, nm(1, 3, t), nm(2, 3, t - s)));
      CHECK(br(a, nm(1, 2, s), nm(2, 3, t)) ==
            br(a, nm(2, 3, t), nm(1, 3, t + s)));
    }

  // disjoint index pairs commute: need n >= 4
  AlgebraSpec b = AlgebraSpec::surface_orbit(2, 4);
  CHECK(bracket(b, b.generator("B[1,2;0]", 4), b.generator("B[3,4;1]", 4), 4)
            .is_zero());
}

TEST_CASE("weight bases") {
  AlgebraSpec m3 = AlgebraSpec::mccool_plus(3);
  auto w1 = weight_basis(m3, 1);
  REQUIRE(w1.size() == 3);
  CHECK(basis_key_to_string(m3, w1[0]) == "B[1,2]");
  CHECK(basis_key_to_string(m3, w1[1]) == "B[1,3]");
  CHECK(basis_key_to_string(m3, w1[2]) == "B[2,3]");

  auto w2 = weight_basis(m3, 2);
  REQUIRE(w2.size() == 1);  // Witt(1,2)=0, Witt(2,2)=1
  CHECK(basis_key_to_string(m3, w2[0]) == "[B[1,3],B[2,3]]");

  AlgebraSpec mo = AlgebraSpec::monomial_orbit(2, 2);
  auto mow1 = weight_basis(mo, 1);
  REQUIRE(mow1.size() == 4);
  CHECK(basis_key_to_string(mo, mow1[0]) == "Z[1]");
  CHECK(basis_key_to_string(mo, mow1[1]) == "Z[2]");
  CHECK(basis_key_to_string(mo, mow1[2]) == "B[1,2;1]");
  CHECK(basis_key_to_string(mo, mow1[3]) == "B[1,2;2]");

  // graded dimension identities of the additive decompositions
  for (int q = 1; q <= 4; ++q) {
    AlgebraSpec m5 = AlgebraSpec::mccool_plus(5);
    Int expect = 0;
    for (int k = 2; k <= 5; ++k) expect += witt_dimension(k - 1, q);
    CHECK(Int(static_cast<long>(weight_basis(m5, q).size())) == expect);

    AlgebraSpec mon = AlgebraSpec::monomial_orbit(2, 3);
    Int expect2 = 0;
    for (int j = 0; j <= 2; ++j) expect2 += witt_dimension(2 * j + 1, q);
    CHECK(Int(static_cast<long>(weight_basis(mon, q).size())) == expect2);
  }
}

TEST_CASE("consistency validation passes for the shipped families") {
  CHECK(validate_consistency(AlgebraSpec::mccool_plus(4), 4).pass());
  CHECK(validate_consistency(AlgebraSpec::drinfeld_kohno(4), 4).pass());
  CHECK(validate_consistency(AlgebraSpec::monomial_orbit(2, 2), 4).pass());
  CHECK(validate_consistency(AlgebraSpec::surface_orbit(2, 3), 4).pass());
  CHECK(validate_consistency(AlgebraSpec::poison_model(), 4).pass());
  CHECK(validate_consistency(
            AlgebraSpec::product(AlgebraSpec::free_algebra(2), AlgebraSpec::abelian(2)), 4)
            .pass());
}

TEST_CASE("corrupted action is reported with a failing triple") {
  // Two layers admit any generator action (the outer layer is free), so the
  // corruption must couple three layers to break Jacobi.
  AlgebraSpec good = AlgebraSpec::mccool_plus(4);
  AlgebraSpec bad = good.with_action_override("B[1,2]", "B[2,3]", LieElement(2));
  ConsistencyReport r = validate_consistency(bad, 4);
  REQUIRE_FALSE(r.pass());
  bool found = false;
  for (const auto& v : r.violations) {
    auto name = [&](const BasisKey& k) { return basis_key_to_string(bad, k); };
    if (name(v.x) == "B[1,2]" && name(v.y) == "B[2,3]" && name(v.z) == "B[3,4]")
      found = true;
  }
  CHECK(found);

  // A two-layer override stays consistent: the action table is unconstrained.
  AlgebraSpec flat = AlgebraSpec::mccool_plus(3).with_action_override(
      "B[1,2]", "B[2,3]", LieElement(2));
  CHECK(validate_consistency(flat, 4).pass());
}

TEST_CASE("poison model: a3 is central") {
  AlgebraSpec h = AlgebraSpec::poison_model();
  LieElement a3 = h.generator("a3", 5);
  for (int w = 1; w <= 4; ++w)
    for (const auto& k : weight_basis(h, w)) {
      LieElement x = LieElement::basis_term(k, 5);
      CHECK(bracket(h, a3, x, 5).is_zero());
    }
  // but phi1, phi2 do not commute
  CHECK_FALSE(br(h, "phi1", "phi2").is_zero());
}

TEST_CASE("pure braid center element commutes with every generator") {
  for (int n = 3; n <= 5; ++n) {
    AlgebraSpec dk = AlgebraSpec::drinfeld_kohno(n);
    LieElement delta(4);
    for (const auto& name : dk.generator_names()) delta += dk.generator(name, 4);
    for (const auto& name : dk.generator_names())
      CHECK(bracket(dk, delta, dk.generator(name, 4), 4).is_zero());
  }
}

TEST_CASE("concurrent brackets agree with serial evaluation") {
  AlgebraSpec a = AlgebraSpec::monomial_orbit(2, 2);
  auto keys = weight_basis(a, 1);
  auto k2 = weight_basis(a, 2);
  keys.insert(keys.end(), k2.begin(), k2.end());

  std::vector<LieElement> serial;
  for (const auto& x : keys)
    for (const auto& y : keys)
      serial.push_back(bracket(a, LieElement::basis_term(x, 4),
                               LieElement::basis_term(y, 4), 4));

  std::vector<LieElement> parallel(serial.size());
  std::vector<std::thread> workers;
  const int nthreads = 4;
  for (int t = 0; t < nthreads; ++t) {
    workers.emplace_back([&, t]() {
      size_t i = 0;
      for (size_t xi = 0; xi < keys.size(); ++xi)
        for (size_t yi = 0; yi < keys.size(); ++yi, ++i) {
          if (i % nthreads != static_cast<size_t>(t)) continue;
          parallel[i] = bracket(a, LieElement::basis_term(keys[xi], 4),
                                LieElement::basis_term(keys[yi], 4), 4);
        }
    });
  }
  for (auto& w : workers) w.join();
  for (size_t i = 0; i < serial.size(); ++i) CHECK(parallel[i] == serial[i]);
}

TEST_CASE("bracket rejects foreign elements") {
  AlgebraSpec m3 = AlgebraSpec::mccool_plus(3);
  AlgebraSpec m4 = AlgebraSpec::mccool_plus(4);
  LieElement foreign = m4.generator("B[1,4]", 3);  // layer 2 does not exist in m3
  CHECK_THROWS_AS(bracket(m3, foreign, m3.generator("B[1,2]", 3), 3),
                  std::domain_error);
}

TEST_CASE("truncation silently drops overflow") {
  AlgebraSpec m3 = AlgebraSpec::mccool_plus(3);
  LieElement x = m3.generator("B[1,3]", 1);
  LieElement y = m3.generator("B[2,3]", 1);
  CHECK(bracket(m3, x, y, 1).is_zero());
  CHECK_FALSE(bracket(m3, x, y, 2).is_zero());
}
