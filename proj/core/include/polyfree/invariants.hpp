#pragma once

// Weight-by-weight centralizers of generator sets, centers, and the
// comparison of the adjoint kernel with its restriction to an ideal.

#include <string>
#include <vector>

#include "polyfree/algebra.hpp"
#include "polyfree/intlin.hpp"

namespace polyfree {

/// Per-weight lattices of centralizing elements, in coordinates of
/// weight_basis(A, w). Lattices are saturated (they are integer kernels).
struct CentralizerProfile {
  struct WeightComponent {
    int weight = 0;
    std::vector<BasisKey> basis;
    Lattice lattice;
  };
  std::string algebra;
  std::vector<std::string> generators;  // the set being centralized
  std::vector<WeightComponent> weights;

  /// Rank at a given weight (0 when the weight is absent).
  int rank_at(int w) const;
  /// True iff every lattice outside weight 1 is empty and the weight-1 rank
  /// is at most 1.
  bool concentrated_in_weight1_cyclic() const;
};

/// Lattice of weight-w elements X with [X, g] = 0 for every g in S, for each
/// w <= max_weight. Vanishing against weight-1 generators of a subalgebra
/// implies vanishing against the whole subalgebra they generate, so this is
/// the centralizer of that subalgebra. S contains generator names.
CentralizerProfile centralizer_profile(const AlgebraSpec& a,
                                       const std::vector<std::string>& s,
                                       int max_weight);

/// Centralizer of the whole algebra: S = all weight-1 generators.
CentralizerProfile center_profile(const AlgebraSpec& a, int max_weight);

/// True iff the center and the centralizer of the given ideal generators
/// coincide (lattice_equal per weight) through max_weight.
bool adkernel_compare(const AlgebraSpec& a,
                      const std::vector<std::string>& ideal_generators,
                      int max_weight);

/// Constraint matrix for one weight: rows express bracket(e, g) over
/// weight_basis(a, w+1), one block per g in S; columns index weight_basis(a, w).
IntMatrix centralizer_constraints(const AlgebraSpec& a,
                                  const std::vector<std::string>& s, int w);

}  // namespace polyfree
