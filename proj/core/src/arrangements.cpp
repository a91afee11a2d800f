#include "polyfree/arrangements.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace polyfree {

namespace {

void require(bool cond, const std::string& msg) {
  if (!cond) throw std::invalid_argument(msg);
}

int mod(int x, int m) {
  int y = x % m;
  return y < 0 ? y + m : y;
}

}  // namespace

// ---------------------------------------------------------------------------
// Arrangement and incidence
// ---------------------------------------------------------------------------

std::string MonomialHyperplane::label() const {
  std::ostringstream os;
  if (kind == Kind::Coordinate) {
    os << "H_" << i;
  } else {
    os << "H_{" << i << "," << j << "}^{(" << p << ")}";
  }
  return os.str();
}

std::vector<MonomialHyperplane> monomial_arrangement(int r, int n) {
  require(r >= 1 && n >= 1, "monomial_arrangement: parameters must be >= 1");
  std::vector<MonomialHyperplane> out;
  for (int i = 1; i <= n; ++i)
    out.push_back({MonomialHyperplane::Kind::Coordinate, i, 0, 0});
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      for (int p = 1; p <= r; ++p)
        out.push_back({MonomialHyperplane::Kind::Difference, i, j, p});
  return out;
}

std::vector<SymbolicCoordinate> point_map_coordinates(int r, int n, bool with_fiber) {
  std::vector<SymbolicCoordinate> coords;
  coords.push_back({SymbolicCoordinate::Kind::Zero, 0, 0});
  for (int i = 1; i <= n; ++i)
    for (int a = 0; a < r; ++a)
      coords.push_back({SymbolicCoordinate::Kind::Monomial, a, i});
  if (with_fiber) coords.push_back({SymbolicCoordinate::Kind::Fiber, 0, 0});
  return coords;
}

namespace {

// Restrict one symbolic coordinate to a source hyperplane: x_i -> 0 on a
// coordinate hyperplane, x_i -> zeta^p x_j (or zeta^p z when j is the fiber
// variable) on a difference hyperplane.
SymbolicCoordinate restrict_to(const SymbolicCoordinate& c,
                               const MonomialHyperplane& h, int r, int fiber_var) {
  if (c.kind != SymbolicCoordinate::Kind::Monomial || c.var != h.i) return c;
  if (h.kind == MonomialHyperplane::Kind::Coordinate)
    return {SymbolicCoordinate::Kind::Zero, 0, 0};
  int e = mod(c.exponent + h.p, r);
  if (h.j == fiber_var) return {SymbolicCoordinate::Kind::Fiber, e, 0};
  return {SymbolicCoordinate::Kind::Monomial, e, h.j};
}

}  // namespace

IncidenceReport incidence_sets(int r, int n) {
  require(r >= 1 && n >= 1, "incidence_sets: parameters must be >= 1");
  const auto coords = point_map_coordinates(r, n, false);
  const int ell = static_cast<int>(coords.size());

  IncidenceReport report;
  report.r = r;
  report.n = n;
  report.ell = ell;

  std::set<std::pair<int, int>> seen;
  bool disjoint = true;
  for (const auto& h : monomial_arrangement(r, n)) {
    std::vector<SymbolicCoordinate> restricted;
    restricted.reserve(coords.size());
    for (const auto& c : coords) restricted.push_back(restrict_to(c, h, r, 0));
    std::vector<std::pair<int, int>> pairs;
    for (int a = 1; a <= ell; ++a)
      for (int b = a + 1; b <= ell; ++b)
        if (restricted[a - 1] == restricted[b - 1]) {
          pairs.emplace_back(a, b);
          if (!seen.insert({a, b}).second) disjoint = false;
        }
    report.total += static_cast<long>(pairs.size());
    report.sets.emplace_back(h, std::move(pairs));
  }
  const long all = static_cast<long>(ell) * (ell - 1) / 2;
  report.is_partition = disjoint && static_cast<long>(seen.size()) == all;
  return report;
}

bool verify_partition(int r, int n) { return incidence_sets(r, n).is_partition; }

LieMap induced_generator_images(int r, int n) {
  IncidenceReport report = incidence_sets(r, n);
  AlgebraSpec domain = AlgebraSpec::monomial_orbit(r, n);
  AlgebraSpec codomain = AlgebraSpec::drinfeld_kohno(report.ell);

  std::map<std::string, LieElement> images;
  for (const auto& [h, pairs] : report.sets) {
    std::string name;
    if (h.kind == MonomialHyperplane::Kind::Coordinate) {
      name = "Z[" + std::to_string(h.i) + "]";
    } else {
      name = "B[" + std::to_string(h.i) + "," + std::to_string(h.j) + ";" +
             std::to_string(h.p) + "]";
    }
    LieElement img(1);
    for (const auto& [a, b] : pairs) {
      img += codomain.generator(
          "B[" + std::to_string(a) + "," + std::to_string(b) + "]", 1);
    }
    images.emplace(name, std::move(img));
  }
  return LieMap(std::move(domain), std::move(codomain), std::move(images));
}

std::vector<int> derived_fiber_indices(int r, int n) {
  require(r >= 1 && n >= 1, "derived_fiber_indices: parameters must be >= 1");
  const int fiber_var = n + 1;
  const auto coords = point_map_coordinates(r, n, true);
  const int ell = static_cast<int>(coords.size()) - 1;  // r*n + 1

  // Fiber hyperplanes of the (r, n+1) arrangement, in top-layer generator
  // order: Z[n+1] first, then B[i,n+1;p] by (i,p).
  std::vector<MonomialHyperplane> fiber;
  fiber.push_back({MonomialHyperplane::Kind::Coordinate, fiber_var, 0, 0});
  for (int i = 1; i <= n; ++i)
    for (int p = 1; p <= r; ++p)
      fiber.push_back({MonomialHyperplane::Kind::Difference, i, fiber_var, p});

  std::vector<int> indices;
  for (const auto& h : fiber) {
    // Substitute; on a coordinate fiber hyperplane z itself vanishes.
    std::vector<SymbolicCoordinate> restricted;
    for (const auto& c : coords) {
      SymbolicCoordinate rc = c;
      if (h.kind == MonomialHyperplane::Kind::Coordinate) {
        if (rc.kind == SymbolicCoordinate::Kind::Fiber)
          rc = {SymbolicCoordinate::Kind::Zero, 0, 0};
      } else {
        rc = restrict_to(rc, h, r, fiber_var);
      }
      restricted.push_back(rc);
    }
    int found = 0, where = 0;
    for (int a = 1; a <= ell; ++a)
      if (restricted[a - 1] == restricted[ell]) {
        ++found;
        where = a;
      }
    if (found != 1)
      throw std::logic_error("derived_fiber_indices: fiber image not in a unique"
                             " braid hyperplane");
    indices.push_back(where);
  }
  return indices;
}

// ---------------------------------------------------------------------------
// Cyclotomic arithmetic
// ---------------------------------------------------------------------------

namespace {

// quotient of exact division by a monic divisor
std::vector<Int> poly_div_exact(std::vector<Int> num, const std::vector<Int>& den) {
  const int dn = static_cast<int>(num.size()) - 1;
  const int dd = static_cast<int>(den.size()) - 1;
  std::vector<Int> q(dn - dd + 1, Int(0));
  for (int k = dn - dd; k >= 0; --k) {
    Int c = num[k + dd];
    q[k] = c;
    if (c == 0) continue;
    for (int t = 0; t <= dd; ++t) num[k + t] -= c * den[t];
  }
  for (const Int& c : num)
    if (c != 0) throw std::logic_error("poly_div_exact: not divisible");
  return q;
}

}  // namespace

std::vector<Int> cyclotomic_polynomial(int r) {
  if (r < 1) throw std::invalid_argument("cyclotomic_polynomial: r must be >= 1");
  // t^r - 1 divided by the product of the lower cyclotomic polynomials.
  std::vector<Int> num(r + 1, Int(0));
  num[0] = -1;
  num[r] = 1;
  for (int d = 1; d < r; ++d) {
    if (r % d != 0) continue;
    num = poly_div_exact(std::move(num), cyclotomic_polynomial(d));
  }
  return num;
}

Cyclotomic::Cyclotomic(int order) : order_(order) {
  if (order < 1) throw std::invalid_argument("Cyclotomic: order must be >= 1");
  c_.assign(std::max<size_t>(1, cyclotomic_polynomial(order).size() - 1), Int(0));
}

Cyclotomic Cyclotomic::integer(int order, const Int& v) {
  Cyclotomic x(order);
  x.c_[0] = v;
  return x;
}

Cyclotomic Cyclotomic::root_power(int order, int e) {
  Cyclotomic x(order);
  std::vector<Int> raw(mod(e, order) + 1, Int(0));
  raw.back() = 1;
  x.reduce(raw);
  std::copy(raw.begin(), raw.end(), x.c_.begin());
  return x;
}

void Cyclotomic::reduce(std::vector<Int>& raw) const {
  const std::vector<Int> phi = cyclotomic_polynomial(order_);
  const int deg = static_cast<int>(phi.size()) - 1;
  for (int k = static_cast<int>(raw.size()) - 1; k >= deg; --k) {
    Int c = raw[k];
    if (c == 0) continue;
    for (int t = 0; t <= deg; ++t) raw[k - deg + t] -= c * phi[t];
  }
  raw.resize(deg, Int(0));
  raw.resize(std::max(1, deg), Int(0));
}

bool Cyclotomic::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](const Int& v) { return v == 0; });
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& o) {
  if (order_ != o.order_) throw std::invalid_argument("Cyclotomic: order mismatch");
  for (size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& o) {
  if (order_ != o.order_) throw std::invalid_argument("Cyclotomic: order mismatch");
  for (size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.order_ != b.order_) throw std::invalid_argument("Cyclotomic: order mismatch");
  std::vector<Int> raw(a.c_.size() + b.c_.size() - 1, Int(0));
  for (size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (size_t j = 0; j < b.c_.size(); ++j) raw[i + j] += a.c_[i] * b.c_[j];
  }
  Cyclotomic out(a.order_);
  out.reduce(raw);
  std::copy(raw.begin(), raw.end(), out.c_.begin());
  return out;
}

// ---------------------------------------------------------------------------
// Affine forms and the distinct-roots criterion
// ---------------------------------------------------------------------------

AffineForm AffineForm::from_ints(const std::vector<Int>& coef, const Int& constant) {
  AffineForm f;
  f.order = 1;
  for (const Int& c : coef) f.coef.push_back(Cyclotomic::integer(1, c));
  f.constant = Cyclotomic::integer(1, constant);
  return f;
}

AffineForm AffineForm::zero(int order, int nvars) {
  AffineForm f;
  f.order = order;
  f.coef.assign(nvars, Cyclotomic(order));
  f.constant = Cyclotomic(order);
  return f;
}

AffineForm AffineForm::monomial(int order, int nvars, int var, int exponent) {
  AffineForm f = zero(order, nvars);
  if (var < 1 || var > nvars)
    throw std::invalid_argument("AffineForm::monomial: variable out of range");
  f.coef[var - 1] = Cyclotomic::root_power(order, exponent);
  return f;
}

bool AffineForm::is_zero() const {
  if (!constant.is_zero()) return false;
  return std::all_of(coef.begin(), coef.end(),
                     [](const Cyclotomic& c) { return c.is_zero(); });
}

bool AffineForm::is_nonzero_constant() const {
  if (constant.is_zero()) return false;
  return std::all_of(coef.begin(), coef.end(),
                     [](const Cyclotomic& c) { return c.is_zero(); });
}

namespace {

std::vector<Cyclotomic> flatten(const AffineForm& f) {
  std::vector<Cyclotomic> v = f.coef;
  v.push_back(f.constant);
  return v;
}

// f = c * b for some nonzero scalar c in the fraction field: both nonzero and
// all 2x2 minors of the stacked coefficient vectors vanish.
bool proportional(const AffineForm& f, const AffineForm& b) {
  if (f.is_zero() || b.is_zero()) return false;
  const auto fv = flatten(f);
  const auto bv = flatten(b);
  for (size_t i = 0; i < fv.size(); ++i)
    for (size_t j = i + 1; j < fv.size(); ++j) {
      Cyclotomic lhs = fv[i] * bv[j];
      Cyclotomic rhs = fv[j] * bv[i];
      lhs -= rhs;
      if (!lhs.is_zero()) return false;
    }
  return true;
}

}  // namespace

bool slf_check(const RootMapInput& input) {
  if (input.fiber_factors.empty())
    throw std::invalid_argument("slf_check: no fiber factors");
  int order = input.fiber_factors.front().order;
  size_t nvars = input.fiber_factors.front().coef.size();
  for (const auto& f : input.fiber_factors)
    if (f.order != order || f.coef.size() != nvars)
      throw std::invalid_argument("slf_check: inconsistent fiber factors");
  for (const auto& b : input.base_forms) {
    if (b.order != order || b.coef.size() != nvars)
      throw std::invalid_argument("slf_check: inconsistent base forms");
    if (b.is_zero())
      throw std::invalid_argument("slf_check: zero base form");
  }

  for (size_t j = 0; j < input.fiber_factors.size(); ++j) {
    for (size_t k = j + 1; k < input.fiber_factors.size(); ++k) {
      AffineForm d = input.fiber_factors[j];
      for (size_t t = 0; t < nvars; ++t) d.coef[t] -= input.fiber_factors[k].coef[t];
      d.constant -= input.fiber_factors[k].constant;
      if (d.is_zero()) return false;  // roots coincide everywhere
      if (d.is_nonzero_constant()) continue;
      bool matched = false;
      for (const auto& b : input.base_forms)
        if (proportional(d, b)) {
          matched = true;
          break;
        }
      if (!matched) return false;
    }
  }
  return true;
}

RootMapInput monomial_root_map(int r, int n) {
  require(r >= 1 && n >= 1, "monomial_root_map: parameters must be >= 1");
  RootMapInput input;
  for (int i = 1; i <= n; ++i)
    input.base_forms.push_back(AffineForm::monomial(r, n, i, 0));
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      for (int p = 1; p <= r; ++p) {
        AffineForm f = AffineForm::monomial(r, n, i, 0);
        AffineForm zj = AffineForm::monomial(r, n, j, p);
        for (int t = 0; t < n; ++t) f.coef[t] -= zj.coef[t];
        input.base_forms.push_back(std::move(f));
      }
  // Fiber roots: z = 0 and z = zeta^a x_i.
  input.fiber_factors.push_back(AffineForm::zero(r, n));
  for (int i = 1; i <= n; ++i)
    for (int a = 0; a < r; ++a)
      input.fiber_factors.push_back(AffineForm::monomial(r, n, i, a));
  return input;
}

}  // namespace polyfree
