#include "polyfree/invariants.hpp"

#include <random>
#include <set>

#include "doctest.h"
#include "oracles.hpp"

using namespace polyfree;

namespace {

Lattice span_of(int ambient, const std::vector<std::vector<long>>& rows) {
  std::vector<std::vector<Int>> r;
  for (const auto& row : rows) r.emplace_back(row.begin(), row.end());
  return Lattice(ambient, IntMatrix::from_rows(r));
}

}  // namespace

TEST_CASE("mccool(3): centralizer of the top layer") {
  AlgebraSpec a = AlgebraSpec::mccool_plus(3);
  CentralizerProfile p = centralizer_profile(a, {"B[1,3]", "B[2,3]"}, 3);

  // weight 1: rank-1 lattice spanned by B[1,2] + B[1,3]
  REQUIRE(p.weights.size() == 3);
  CHECK(lattice_equal(p.weights[0].lattice, span_of(3, {{1, 1, 0}})));
  CHECK(p.weights[1].lattice.is_empty());
  CHECK(p.weights[2].lattice.is_empty());
}

TEST_CASE("mccool(n): centralizer of the top layer is the rank-1 diagonal") {
  for (int n = 3; n <= 4; ++n) {
    AlgebraSpec a = AlgebraSpec::mccool_plus(n);
    CentralizerProfile p = centralizer_profile(a, a.top_layer_generators(), 3);
    // expected weight-1 vector: sum of B[1,j] over j
    std::vector<long> diag;
    for (const auto& name : a.generator_names())
      diag.push_back(name.substr(0, 4) == "B[1," ? 1 : 0);
    CHECK(lattice_equal(p.weights[0].lattice, span_of((int)diag.size(), {diag})));
    CHECK(p.weights[1].lattice.is_empty());
    CHECK(p.weights[2].lattice.is_empty());
  }
}

TEST_CASE("monomial(2,2): centralizer of the top layer is the diagonal") {
  AlgebraSpec a = AlgebraSpec::monomial_orbit(2, 2);
  CentralizerProfile p =
      centralizer_profile(a, {"Z[2]", "B[1,2;1]", "B[1,2;2]"}, 3);
  CHECK(lattice_equal(p.weights[0].lattice, span_of(4, {{1, 1, 1, 1}})));
  CHECK(p.weights[1].lattice.is_empty());
  CHECK(p.weights[2].lattice.is_empty());
}

TEST_CASE("centers") {
  // drinfeld_kohno(4): weight 1 spans Delta_4, weights 2..3 empty
  AlgebraSpec dk = AlgebraSpec::drinfeld_kohno(4);
  CentralizerProfile c = center_profile(dk, 3);
  CHECK(lattice_equal(c.weights[0].lattice, span_of(6, {{1, 1, 1, 1, 1, 1}})));
  CHECK(c.weights[1].lattice.is_empty());
  CHECK(c.weights[2].lattice.is_empty());
  CHECK(c.concentrated_in_weight1_cyclic());

  // poison: center is exactly Z a3
  AlgebraSpec h = AlgebraSpec::poison_model();
  CentralizerProfile hc = center_profile(h, 3);
  CHECK(lattice_equal(hc.weights[0].lattice, span_of(3, {{0, 0, 1}})));
  CHECK(hc.weights[1].lattice.is_empty());
  CHECK(hc.weights[2].lattice.is_empty());

  // surface_orbit(1,2): a single rank-1 layer is abelian
  AlgebraSpec s = AlgebraSpec::surface_orbit(1, 2);
  CentralizerProfile sc = center_profile(s, 3);
  CHECK(lattice_equal(sc.weights[0].lattice, span_of(1, {{1}})));

  // mccool(3): center = Z (B[1,2] + B[1,3])
  CentralizerProfile mc = center_profile(AlgebraSpec::mccool_plus(3), 3);
  CHECK(lattice_equal(mc.weights[0].lattice, span_of(3, {{1, 1, 0}})));
}

TEST_CASE("center profiles are cyclic and concentrated in weight 1") {
  std::vector<AlgebraSpec> instances;
  instances.push_back(AlgebraSpec::mccool_plus(4));
  instances.push_back(AlgebraSpec::drinfeld_kohno(3));
  instances.push_back(AlgebraSpec::monomial_orbit(2, 2));
  instances.push_back(AlgebraSpec::monomial_orbit(3, 2));
  instances.push_back(AlgebraSpec::surface_orbit(2, 3));
  instances.push_back(AlgebraSpec::poison_model());
  instances.push_back(AlgebraSpec::free_algebra(2));
  for (const auto& a : instances)
    CHECK(center_profile(a, 3).concentrated_in_weight1_cyclic());
}

TEST_CASE("adkernel comparisons") {
  AlgebraSpec m4 = AlgebraSpec::mccool_plus(4);
  CHECK(adkernel_compare(m4, m4.top_layer_generators(), 3));

  AlgebraSpec mo = AlgebraSpec::monomial_orbit(2, 2);
  CHECK(adkernel_compare(mo, mo.top_layer_generators(), 3));

  // everything centralizes a3, but the center is only Z a3
  AlgebraSpec h = AlgebraSpec::poison_model();
  CHECK_FALSE(adkernel_compare(h, {"a3"}, 3));
}

TEST_CASE("unknown generator is rejected") {
  AlgebraSpec a = AlgebraSpec::mccool_plus(3);
  CHECK_THROWS_AS(centralizer_profile(a, {"B[9,9]"}, 2), std::domain_error);
  CHECK_THROWS_AS(centralizer_profile(a, {}, 2), std::invalid_argument);
}

namespace {

// Labels of the terms of a weight-1 surface element, split by index pair.
struct SurfaceSupport {
  std::set<int> low;  // B[1,2;s]
  std::set<int> mid;  // B[1,3;s]
  std::set<int> top;  // B[2,3;s]
};

SurfaceSupport support_of(const LieElement& x, int m) {
  SurfaceSupport s;
  for (const auto& [k, c] : x.terms()) {
    int idx = k.word.letters()[0];
    if (k.layer == 0) {
      s.low.insert(idx % m);
    } else if (idx < m) {
      s.mid.insert(idx % m);
    } else {
      s.top.insert(idx % m);
    }
  }
  return s;
}

// tau is fresh for x when no bracket pair collides against B[1,3;tau]:
// tau - sigma must avoid the B[2,3] labels for every B[1,2;sigma] term, and
// tau must avoid the B[1,3] labels.
std::vector<int> fresh_labels(const SurfaceSupport& s, int m) {
  std::vector<int> out;
  for (int tau = 0; tau < m; ++tau) {
    bool ok = s.mid.count(tau) == 0;
    for (int sigma : s.low)
      if (s.top.count(((tau - sigma) % m + m) % m)) ok = false;
    if (ok) out.push_back(tau);
  }
  return out;
}

}  // namespace

TEST_CASE("fresh-label bracket mechanism in surface_orbit(m,3)") {
  const int m = 5;
  AlgebraSpec a = AlgebraSpec::surface_orbit(m, 3);
  const auto names = a.generator_names();
  std::mt19937_64 rng(4242);
  std::uniform_int_distribution<int> pick(0, static_cast<int>(names.size()) - 1);
  std::uniform_int_distribution<int> coeff(1, 3);
  std::uniform_int_distribution<int> sign(0, 1);
  std::uniform_int_distribution<int> nterms(1, 3);

  int done = 0;
  while (done < 30) {
    LieElement x(2);
    for (int t = nterms(rng); t > 0; --t) {
      LieElement g = a.generator(names[pick(rng)], 2);
      g.scale(Int((sign(rng) ? 1 : -1) * coeff(rng)));
      x += g;
    }
    if (x.is_zero()) continue;
    auto fresh = fresh_labels(support_of(x, m), m);
    if (fresh.empty()) continue;
    LieElement probe = a.generator("B[1,3;" + std::to_string(fresh[0]) + "]", 2);
    CHECK_FALSE(bracket(a, x, probe, 2).is_zero());
    ++done;
  }
}

TEST_CASE("surface_orbit(m,3) top-layer centralizer is empty at weight 1") {
  for (int m : {2, 3}) {
    AlgebraSpec a = AlgebraSpec::surface_orbit(m, 3);
    auto top = a.top_layer_generators();
    CentralizerProfile p = centralizer_profile(a, top, 1);
    CHECK(p.weights[0].lattice.is_empty());

    // independent dense solve: Bareiss rank of the constraint matrix
    IntMatrix constraints = centralizer_constraints(a, top, 1);
    CHECK(polyfree::testing::bareiss_rank(constraints) == constraints.cols());
  }
}
