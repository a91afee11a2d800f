#pragma once

// Exact integer linear algebra over arbitrary-precision integers: Hermite
// normal form, kernel lattice bases, ranks, Smith invariants, and lattice
// equality. The computational substrate for centralizers and injectivity
// checks.

#include <stdexcept>
#include <vector>

#include "polyfree/integer.hpp"

namespace polyfree {

/// Dense matrix of arbitrary-precision integers, row-major.
class IntMatrix {
 public:
  IntMatrix() : rows_(0), cols_(0) {}
  IntMatrix(int rows, int cols);
  static IntMatrix identity(int n);
  static IntMatrix from_rows(const std::vector<std::vector<Int>>& rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Int& at(int r, int c) { return data_[static_cast<size_t>(r) * cols_ + c]; }
  const Int& at(int r, int c) const {
    return data_[static_cast<size_t>(r) * cols_ + c];
  }

  IntMatrix transposed() const;
  bool operator==(const IntMatrix& o) const = default;

 private:
  int rows_, cols_;
  std::vector<Int> data_;
};

/// Row-style Hermite normal form of the row span of M: zero rows removed,
/// positive pivots, entries above each pivot reduced into [0, pivot). This is
/// the canonical basis of the lattice generated by the rows.
IntMatrix hermite_normal_form(const IntMatrix& m);

/// Rank over the rationals.
int rank(const IntMatrix& m);

/// Subgroup of Z^ambient given by the rows of a canonical (HNF) basis matrix.
class Lattice {
 public:
  Lattice() : ambient_(0) {}
  /// Canonicalizes the generators via HNF.
  Lattice(int ambient, const IntMatrix& generators);

  int ambient() const { return ambient_; }
  int rank() const { return basis_.rows(); }
  bool is_empty() const { return basis_.rows() == 0; }
  const IntMatrix& basis() const { return basis_; }

 private:
  int ambient_;
  IntMatrix basis_;
};

/// Basis of {v in Z^cols : M v = 0}. Kernels of integer matrices are
/// saturated, so the result is a primitive lattice.
Lattice kernel_basis(const IntMatrix& m);

/// True iff the two lattices generate the same subgroup of Z^n (canonical
/// HNFs compared entry-wise). Throws on ambient mismatch.
bool lattice_equal(const Lattice& a, const Lattice& b);

/// Diagonal of the Smith normal form (nonnegative, each dividing the next,
/// zeros trimmed). A lattice basis is primitive iff all invariants are 1.
std::vector<Int> smith_invariants(const IntMatrix& m);

}  // namespace polyfree
