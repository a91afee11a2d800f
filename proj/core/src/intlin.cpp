#include "polyfree/intlin.hpp"

#include <algorithm>
#include <map>
#include <utility>

namespace polyfree {

IntMatrix::IntMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
  if (rows < 0 || cols < 0) throw std::invalid_argument("IntMatrix: negative size");
  data_.assign(static_cast<size_t>(rows) * cols, Int(0));
}

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<Int>>& rows) {
  int r = static_cast<int>(rows.size());
  int c = r == 0 ? 0 : static_cast<int>(rows[0].size());
  IntMatrix m(r, c);
  for (int i = 0; i < r; ++i) {
    if (static_cast<int>(rows[i].size()) != c)
      throw std::invalid_argument("IntMatrix: ragged rows");
    for (int j = 0; j < c; ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

IntMatrix IntMatrix::transposed() const {
  IntMatrix t(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

namespace {

void swap_rows(IntMatrix& m, int a, int b) {
  if (a == b) return;
  for (int j = 0; j < m.cols(); ++j) std::swap(m.at(a, j), m.at(b, j));
}

// row[a] -= q * row[b]
void row_axpy(IntMatrix& m, int a, int b, const Int& q) {
  if (q == 0) return;
  for (int j = 0; j < m.cols(); ++j) m.at(a, j) -= q * m.at(b, j);
}

}  // namespace

IntMatrix hermite_normal_form(const IntMatrix& input) {
  IntMatrix m = input;
  const int rows = m.rows(), cols = m.cols();
  int r = 0;  // next pivot row
  for (int c = 0; c < cols && r < rows; ++c) {
    // Euclidean elimination in column c, rows r..: repeatedly reduce by the
    // entry of smallest absolute value (first such row on ties).
    while (true) {
      int pivot = -1;
      for (int i = r; i < rows; ++i) {
        if (m.at(i, c) == 0) continue;
        if (pivot < 0 || mpz_cmpabs(m.at(i, c).get_mpz_t(), m.at(pivot, c).get_mpz_t()) < 0)
          pivot = i;
      }
      if (pivot < 0) break;
      swap_rows(m, r, pivot);
      bool cleared = true;
      for (int i = r + 1; i < rows; ++i) {
        if (m.at(i, c) == 0) continue;
        Int q = m.at(i, c) / m.at(r, c);  // truncated division
        row_axpy(m, i, r, q);
        if (m.at(i, c) != 0) cleared = false;
      }
      if (cleared) break;
    }
    if (m.at(r, c) == 0) continue;
    if (m.at(r, c) < 0)
      for (int j = 0; j < cols; ++j) m.at(r, j) = -m.at(r, j);
    // Reduce entries above the pivot into [0, pivot).
    for (int i = 0; i < r; ++i) {
      Int q;
      mpz_fdiv_q(q.get_mpz_t(), m.at(i, c).get_mpz_t(), m.at(r, c).get_mpz_t());
      row_axpy(m, i, r, q);
    }
    ++r;
  }
  IntMatrix out(r, cols);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < cols; ++j) out.at(i, j) = m.at(i, j);
  return out;
}

namespace {

// Kernel- and rank-preserving row echelon accumulation: rows are sifted into
// a pivot-column map by integer gcd reduction. With stop_at_full_rank the
// sift aborts once the column count is reached (the kernel is already
// trivial). Tall sparse constraint matrices reduce to at most `cols` rows.
std::map<int, std::vector<Int>> echelon_rows(const IntMatrix& m,
                                             bool stop_at_full_rank) {
  const int rows = m.rows(), cols = m.cols();
  std::map<int, std::vector<Int>> echelon;
  for (int i = 0; i < rows; ++i) {
    if (stop_at_full_rank && static_cast<int>(echelon.size()) == cols) break;
    std::vector<Int> row(cols);
    bool nonzero = false;
    for (int j = 0; j < cols; ++j) {
      row[j] = m.at(i, j);
      if (row[j] != 0) nonzero = true;
    }
    if (!nonzero) continue;
    for (int c = 0; c < cols; ++c) {
      if (row[c] == 0) continue;
      auto it = echelon.find(c);
      if (it == echelon.end()) {
        echelon.emplace(c, std::move(row));
        break;
      }
      std::vector<Int>& e = it->second;
      while (row[c] != 0) {
        Int q = row[c] / e[c];
        if (q != 0)
          for (int j = c; j < cols; ++j) row[j] -= q * e[j];
        if (row[c] == 0) break;
        std::swap(row, e);
      }
    }
  }
  return echelon;
}

}  // namespace

int rank(const IntMatrix& m) {
  return static_cast<int>(echelon_rows(m, false).size());
}

Lattice::Lattice(int ambient, const IntMatrix& generators) : ambient_(ambient) {
  if (generators.rows() > 0 && generators.cols() != ambient)
    throw std::invalid_argument("Lattice: generator width != ambient dimension");
  IntMatrix g = generators;
  if (g.rows() == 0) g = IntMatrix(0, ambient);
  basis_ = hermite_normal_form(g);
}

Lattice kernel_basis(const IntMatrix& m) {
  const int cols = m.cols();
  // Row ops do not change the kernel: sift into a compact echelon first.
  auto sifted = echelon_rows(m, true);
  if (static_cast<int>(sifted.size()) == cols)
    return Lattice(cols, IntMatrix(0, cols));
  IntMatrix a(static_cast<int>(sifted.size()), cols);
  {
    int i = 0;
    for (const auto& [c, row] : sifted) {
      for (int j = 0; j < cols; ++j) a.at(i, j) = row[j];
      ++i;
    }
  }
  const int rows = a.rows();
  // Column echelon reduction of a with the same column operations mirrored on
  // an identity matrix u; the u-columns over zero columns of the reduced a
  // span the integer kernel.
  IntMatrix u = IntMatrix::identity(cols);
  auto col_axpy = [&](int dst, int src, const Int& q) {
    if (q == 0) return;
    for (int i = 0; i < rows; ++i) a.at(i, dst) -= q * a.at(i, src);
    for (int i = 0; i < cols; ++i) u.at(i, dst) -= q * u.at(i, src);
  };
  auto col_swap = [&](int x, int y) {
    if (x == y) return;
    for (int i = 0; i < rows; ++i) std::swap(a.at(i, x), a.at(i, y));
    for (int i = 0; i < cols; ++i) std::swap(u.at(i, x), u.at(i, y));
  };

  int fixed = 0;  // pivot columns moved to the front
  for (int i = 0; i < rows && fixed < cols; ++i) {
    while (true) {
      int pivot = -1;
      for (int c = fixed; c < cols; ++c) {
        if (a.at(i, c) == 0) continue;
        if (pivot < 0 || mpz_cmpabs(a.at(i, c).get_mpz_t(), a.at(i, pivot).get_mpz_t()) < 0)
          pivot = c;
      }
      if (pivot < 0) break;  // row has no support in the active columns
      bool cleared = true;
      for (int c = fixed; c < cols; ++c) {
        if (c == pivot || a.at(i, c) == 0) continue;
        Int q = a.at(i, c) / a.at(i, pivot);
        col_axpy(c, pivot, q);
        if (a.at(i, c) != 0) cleared = false;
      }
      if (cleared) {
        col_swap(fixed, pivot);
        ++fixed;
        break;
      }
    }
  }

  IntMatrix gen(cols - fixed, cols);
  for (int k = fixed; k < cols; ++k)
    for (int i = 0; i < cols; ++i) gen.at(k - fixed, i) = u.at(i, k);
  return Lattice(cols, gen);
}

bool lattice_equal(const Lattice& a, const Lattice& b) {
  if (a.ambient() != b.ambient())
    throw std::invalid_argument("lattice_equal: ambient dimension mismatch");
  return a.basis() == b.basis();
}

std::vector<Int> smith_invariants(const IntMatrix& input) {
  IntMatrix m = input;
  const int rows = m.rows(), cols = m.cols();
  const int n = std::min(rows, cols);
  std::vector<Int> inv;
  int t = 0;  // current corner
  while (t < n) {
    // Find the nonzero entry of least absolute value in the trailing block.
    int pr = -1, pc = -1;
    for (int i = t; i < rows; ++i)
      for (int j = t; j < cols; ++j) {
        if (m.at(i, j) == 0) continue;
        if (pr < 0 || mpz_cmpabs(m.at(i, j).get_mpz_t(), m.at(pr, pc).get_mpz_t()) < 0) {
          pr = i;
          pc = j;
        }
      }
    if (pr < 0) break;
    swap_rows(m, t, pr);
    for (int i = 0; i < rows; ++i) std::swap(m.at(i, t), m.at(i, pc));

    bool clean = true;
    for (int i = t + 1; i < rows; ++i) {
      Int q = m.at(i, t) / m.at(t, t);
      row_axpy(m, i, t, q);
      if (m.at(i, t) != 0) clean = false;
    }
    for (int j = t + 1; j < cols; ++j) {
      Int q = m.at(t, j) / m.at(t, t);
      if (q != 0)
        for (int i = 0; i < rows; ++i) m.at(i, j) -= q * m.at(i, t);
      if (m.at(t, j) != 0) clean = false;
    }
    if (!clean) continue;  // rerun with a smaller corner entry

    // Enforce divisibility: the corner must divide the rest of the block.
    bool divides = true;
    for (int i = t + 1; i < rows && divides; ++i)
      for (int j = t + 1; j < cols && divides; ++j) {
        if (m.at(i, j) % m.at(t, t) != 0) {
          row_axpy(m, t, i, Int(-1));  // fold row i into row t, then redo
          divides = false;
        }
      }
    if (!divides) continue;

    Int d = m.at(t, t);
    if (d < 0) d = -d;
    inv.push_back(d);
    ++t;
  }
  return inv;
}

}  // namespace polyfree
