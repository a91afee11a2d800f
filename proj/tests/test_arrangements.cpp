#include "polyfree/arrangements.hpp"

#include <map>

#include "doctest.h"

using namespace polyfree;

namespace {

std::map<std::string, size_t> set_sizes(const IncidenceReport& r) {
  std::map<std::string, size_t> out;
  for (const auto& [h, pairs] : r.sets) out[h.label()] = pairs.size();
  return out;
}

}  // namespace

TEST_CASE("incidence for r=1, n=1") {
  IncidenceReport r = incidence_sets(1, 1);
  CHECK(r.ell == 2);
  CHECK(r.total == 1);
  CHECK(r.is_partition);
  REQUIRE(r.sets.size() == 1);
  CHECK(r.sets[0].first.label() == "H_1");
  CHECK(r.sets[0].second == std::vector<std::pair<int, int>>{{1, 2}});
}

TEST_CASE("incidence sizes for r=2, n=2") {
  IncidenceReport r = incidence_sets(2, 2);
  CHECK(r.ell == 5);
  CHECK(r.total == 10);
  CHECK(r.is_partition);
  auto sizes = set_sizes(r);
  CHECK(sizes["H_1"] == 3);
  CHECK(sizes["H_2"] == 3);
  CHECK(sizes["H_{1,2}^{(1)}"] == 2);
  CHECK(sizes["H_{1,2}^{(2)}"] == 2);
}

TEST_CASE("incidence sizes for r=3, n=2") {
  IncidenceReport r = incidence_sets(3, 2);
  CHECK(r.ell == 7);
  CHECK(r.total == 21);
  CHECK(r.is_partition);
  auto sizes = set_sizes(r);
  CHECK(sizes["H_1"] == 6);
  CHECK(sizes["H_2"] == 6);
  for (int p = 1; p <= 3; ++p)
    CHECK(sizes["H_{1,2}^{(" + std::to_string(p) + ")}"] == 3);
}

TEST_CASE("partition holds for all r <= 3, n <= 3") {
  for (int r = 1; r <= 3; ++r)
    for (int n = 1; n <= 3; ++n) {
      IncidenceReport rep = incidence_sets(r, n);
      CHECK(rep.is_partition);
      CHECK(rep.total == static_cast<long>(rep.ell) * (rep.ell - 1) / 2);
      CHECK(verify_partition(r, n));
    }
}

TEST_CASE("induced generator images for r=1, n=2") {
  LieMap g = induced_generator_images(1, 2);
  CHECK(apply(g, g.domain.generator("Z[1]", 1), 1) ==
        g.codomain.generator("B[1,2]", 1));
  CHECK(apply(g, g.domain.generator("Z[2]", 1), 1) ==
        g.codomain.generator("B[1,3]", 1));
  CHECK(apply(g, g.domain.generator("B[1,2;1]", 1), 1) ==
        g.codomain.generator("B[2,3]", 1));
}

TEST_CASE("induced generator images for r=2, n=2") {
  LieMap g = induced_generator_images(2, 2);
  LieElement z1 = apply(g, g.domain.generator("Z[1]", 1), 1);
  LieElement want(1);
  want += g.codomain.generator("B[1,2]", 1);
  want += g.codomain.generator("B[1,3]", 1);
  want += g.codomain.generator("B[2,3]", 1);
  CHECK(z1 == want);
  CHECK(verify_hom(g, 3).pass());
}

TEST_CASE("cyclotomic arithmetic") {
  CHECK(cyclotomic_polynomial(1) == std::vector<Int>{-1, 1});
  CHECK(cyclotomic_polynomial(2) == std::vector<Int>{1, 1});
  CHECK(cyclotomic_polynomial(3) == std::vector<Int>{1, 1, 1});
  CHECK(cyclotomic_polynomial(6) == std::vector<Int>{1, -1, 1});

  // zeta_3^3 = 1 and 1 + zeta_3 + zeta_3^2 = 0
  Cyclotomic z = Cyclotomic::root_power(3, 1);
  Cyclotomic z3 = z * z * z;
  CHECK(z3 == Cyclotomic::integer(3, 1));
  Cyclotomic s = Cyclotomic::integer(3, 1);
  s += z;
  s += z * z;
  CHECK(s.is_zero());

  // zeta_2 = -1
  CHECK(Cyclotomic::root_power(2, 1) == Cyclotomic::integer(2, -1));
}

TEST_CASE("slf_check on rational inputs") {
  // B = {x}, factors (x, -x): difference 2x is proportional to x
  RootMapInput fibered;
  fibered.base_forms.push_back(AffineForm::from_ints({Int(1)}, Int(0)));
  fibered.fiber_factors.push_back(AffineForm::from_ints({Int(1)}, Int(0)));
  fibered.fiber_factors.push_back(AffineForm::from_ints({Int(-1)}, Int(0)));
  CHECK(slf_check(fibered));

  // B = {}, factors (0, x): roots collide on x = 0 which is not in B
  RootMapInput bad;
  bad.fiber_factors.push_back(AffineForm::from_ints({Int(0)}, Int(0)));
  bad.fiber_factors.push_back(AffineForm::from_ints({Int(1)}, Int(0)));
  CHECK_FALSE(slf_check(bad));

  // parallel graphs never meet: difference is the constant 1
  RootMapInput parallel;
  parallel.fiber_factors.push_back(AffineForm::from_ints({Int(1)}, Int(0)));
  parallel.fiber_factors.push_back(AffineForm::from_ints({Int(1)}, Int(1)));
  CHECK(slf_check(parallel));

  // coincident roots: reject (false, not an error)
  RootMapInput coincident;
  coincident.base_forms.push_back(AffineForm::from_ints({Int(1)}, Int(0)));
  coincident.fiber_factors.push_back(AffineForm::from_ints({Int(1)}, Int(0)));
  coincident.fiber_factors.push_back(AffineForm::from_ints({Int(1)}, Int(0)));
  CHECK_FALSE(slf_check(coincident));

  // zero base form is invalid input
  RootMapInput zero_base;
  zero_base.base_forms.push_back(AffineForm::from_ints({Int(0)}, Int(0)));
  zero_base.fiber_factors.push_back(AffineForm::from_ints({Int(1)}, Int(0)));
  zero_base.fiber_factors.push_back(AffineForm::from_ints({Int(0)}, Int(0)));
  CHECK_THROWS_AS(slf_check(zero_base), std::invalid_argument);
}

TEST_CASE("slf_check accepts the monomial family") {
  for (int r = 1; r <= 3; ++r)
    for (int n = 1; n <= 3; ++n) CHECK(slf_check(monomial_root_map(r, n)));
}

TEST_CASE("slf_check rejects the monomial family with a missing base form") {
  RootMapInput input = monomial_root_map(2, 2);
  input.base_forms.pop_back();  // drop x1 - zeta^2 x2
  CHECK_FALSE(slf_check(input));
}
