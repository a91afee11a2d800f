#pragma once

// Symbolic layer for the monomial hyperplane arrangement: the orbit point
// map, incidence sets against the braid arrangement, the induced generator
// images, and the distinct-roots criterion for strictly linearly fibered
// defining polynomials.

#include <string>
#include <utility>
#include <vector>

#include "polyfree/integer.hpp"
#include "polyfree/maps.hpp"

namespace polyfree {

/// A hyperplane of the monomial arrangement in C^n with r-th roots of unity:
/// either {x_i = 0} or {x_i = zeta^p x_j} with 1 <= i < j <= n, 1 <= p <= r.
struct MonomialHyperplane {
  enum class Kind { Coordinate, Difference };
  Kind kind = Kind::Coordinate;
  int i = 1, j = 0, p = 0;

  std::string label() const;  // "H_1", "H_{1,2}^{(1)}"
  bool operator==(const MonomialHyperplane&) const = default;
};

/// All hyperplanes of the arrangement, coordinate ones first, then
/// differences ordered by (i, j, p).
std::vector<MonomialHyperplane> monomial_arrangement(int r, int n);

/// One coordinate of the orbit point map: 0, zeta^e * x_i, or zeta^e * z
/// (the fiber coordinate of the extended map).
struct SymbolicCoordinate {
  enum class Kind { Zero, Monomial, Fiber };
  Kind kind = Kind::Zero;
  int exponent = 0;  // reduced mod r
  int var = 0;

  bool operator==(const SymbolicCoordinate&) const = default;
};

/// Coordinates (0, x_1, zeta x_1, ..., zeta^{r-1} x_n); with_fiber appends z.
std::vector<SymbolicCoordinate> point_map_coordinates(int r, int n, bool with_fiber);

/// Which braid hyperplanes {y_a = y_b} contain the image of each source
/// hyperplane, by symbolic substitution and exact comparison.
struct IncidenceReport {
  int r = 1, n = 1;
  int ell = 2;  // r*n + 1
  std::vector<std::pair<MonomialHyperplane, std::vector<std::pair<int, int>>>> sets;
  bool is_partition = false;
  long total = 0;  // sum of the set sizes; C(ell, 2) when a partition
};

IncidenceReport incidence_sets(int r, int n);

/// True iff the incidence sets are pairwise disjoint and cover all
/// binomial(ell, 2) braid hyperplanes.
bool verify_partition(int r, int n);

/// The induced map monomial_orbit(r,n) -> drinfeld_kohno(r*n+1): each
/// generator goes to the sum of the braid generators of its incidence set.
LieMap induced_generator_images(int r, int n);

/// Braid fiber index (1-based) for each top-layer generator of
/// monomial_orbit(r, n+1), derived symbolically from the extended point map.
/// Must agree with the frozen pullback_fiber_dictionary.
std::vector<int> derived_fiber_indices(int r, int n);

// ---------------------------------------------------------------------------
// Strictly-linearly-fibered root map check
// ---------------------------------------------------------------------------

/// Exact element of Z[zeta_r]: a polynomial in zeta reduced modulo the r-th
/// cyclotomic polynomial. Order 1 is plain integer arithmetic.
class Cyclotomic {
 public:
  Cyclotomic() : order_(1), c_(1, Int(0)) {}
  explicit Cyclotomic(int order);

  static Cyclotomic integer(int order, const Int& v);
  static Cyclotomic root_power(int order, int e);  // zeta^e

  int order() const { return order_; }
  bool is_zero() const;

  Cyclotomic& operator+=(const Cyclotomic& o);
  Cyclotomic& operator-=(const Cyclotomic& o);
  friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b);
  bool operator==(const Cyclotomic& o) const = default;

 private:
  int order_;
  std::vector<Int> c_;  // coefficients of 1, zeta, ..., zeta^(deg-1)
  void reduce(std::vector<Int>& raw) const;
};

/// Monic r-th cyclotomic polynomial, coefficients of t^0..t^deg.
std::vector<Int> cyclotomic_polynomial(int r);

/// Affine form sum_i coef[i]*x_i + constant with coefficients in Z[zeta_r].
struct AffineForm {
  int order = 1;
  std::vector<Cyclotomic> coef;
  Cyclotomic constant;

  static AffineForm from_ints(const std::vector<Int>& coef, const Int& constant);
  static AffineForm zero(int order, int nvars);
  static AffineForm monomial(int order, int nvars, int var, int exponent);

  bool is_zero() const;
  bool is_nonzero_constant() const;
  bool operator==(const AffineForm&) const = default;
};

/// Base arrangement forms plus the fiber root functions g_1..g_m of the
/// defining factorization (z - g_1)...(z - g_m).
struct RootMapInput {
  std::vector<AffineForm> base_forms;
  std::vector<AffineForm> fiber_factors;
};

/// True iff every difference g_j - g_k of fiber roots is a nonzero constant
/// or a nonzero scalar multiple of a base form, so roots collide only over
/// the base arrangement. Throws on a zero base form.
bool slf_check(const RootMapInput& input);

/// The monomial family instance: base arrangement of C^n, fiber roots
/// {0} union {zeta^a x_i}.
RootMapInput monomial_root_map(int r, int n);

}  // namespace polyfree
