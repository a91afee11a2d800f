#pragma once

// Lie algebra homomorphisms given by weight-1 generator images: application,
// verification, per-weight injectivity, the pullback construction of the
// cyclic-orbit family from the pure-braid action, and dictionary-based
// algebra comparison.

#include <map>
#include <string>
#include <vector>

#include "polyfree/algebra.hpp"
#include "polyfree/intlin.hpp"

namespace polyfree {

/// Homomorphism candidate: weight-1 images for every domain generator.
struct LieMap {
  AlgebraSpec domain;
  AlgebraSpec codomain;
  std::map<std::string, LieElement> images;  // generator name -> weight-1 image

  LieMap(AlgebraSpec dom, AlgebraSpec codom,
         std::map<std::string, LieElement> imgs);

  static LieMap identity(const AlgebraSpec& a);
};

/// Image of x: basis keys map to nested codomain brackets of generator images
/// along the standard factorization; linear extension, truncated.
LieElement apply(const LieMap& f, const LieElement& x, int truncation);

/// Violations of f([x,y]) = [f(x), f(y)] over domain basis pairs with
/// combined weight <= max_weight.
struct HomReport {
  struct Violation {
    BasisKey x, y;
    LieElement expected;  // f([x,y])
    LieElement actual;    // [f(x), f(y)]
  };
  std::vector<Violation> violations;
  long checked = 0;
  bool pass() const { return violations.empty(); }
};
HomReport verify_hom(const LieMap& f, int max_weight);

/// True iff f is injective on the weight-w component over Z: the integer
/// matrix of f on weight_basis(domain, w) has full column rank, which for a
/// kernel over Z is the same as an empty kernel lattice. A homomorphism
/// defined by weight-1 images preserves the grading, so injectivity on each
/// weight component 1..W is injectivity on the whole sum through weight W.
bool injectivity_rank_check(const LieMap& f, int weight);

/// Integer matrix of f at one weight; rows index weight_basis(codomain, w),
/// columns index weight_basis(domain, w).
IntMatrix weight_matrix(const LieMap& f, int weight);

/// Bijection of generator names between two algebras.
using GeneratorDictionary = std::map<std::string, std::string>;

/// True iff the dictionary-induced generator correspondence is a Lie algebra
/// homomorphism in both directions through max_weight (then a weight-wise
/// isomorphism). Throws if the dictionary is not a bijection of generators.
bool algebras_equal(const AlgebraSpec& a, const AlgebraSpec& b,
                    const GeneratorDictionary& dictionary, int max_weight);

/// The cyclic-orbit algebra on n+1 points, constructed as monomial_orbit(r,n)
/// extended by a free top layer on r*n+1 generators whose action is pulled
/// back from the pure-braid algebra on r*n+2 strands along the incidence map.
AlgebraSpec pullback_algebra(int r, int n);

/// The frozen generator dictionary between the top layer of
/// monomial_orbit(r, n+1) and the top braid layer: index (1-based) into the
/// braid fiber {B[k, l+1]} for each top-layer generator, in layer order
/// (Z[n+1] first, then B[i,n+1;p] by (i,p)).
std::vector<int> pullback_fiber_dictionary(int r, int n);

}  // namespace polyfree
