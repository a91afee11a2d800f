#include "polyfree/algebra.hpp"

#include <algorithm>
#include <random>
#include <sstream>

namespace polyfree {

namespace {

void require(bool cond, const std::string& msg) {
  if (!cond) throw std::invalid_argument(msg);
}

std::string zname(int k) {
  std::ostringstream os;
  os << "Z[" << k << "]";
  return os.str();
}

std::string bname(int i, int j) {
  std::ostringstream os;
  os << "B[" << i << "," << j << "]";
  return os.str();
}

std::string bname(int i, int j, int label) {
  std::ostringstream os;
  os << "B[" << i << "," << j << ";" << label << "]";
  return os.str();
}

int mod_into(int x, int m, int lo) {
  // reduce x into [lo, lo+m)
  int y = (x - lo) % m;
  if (y < 0) y += m;
  return y + lo;
}

}  // namespace

// ---------------------------------------------------------------------------
// LieElement
// ---------------------------------------------------------------------------

LieElement::LieElement(int truncation) : truncation_(truncation) {
  require(truncation >= 1, "LieElement: truncation must be >= 1");
}

LieElement LieElement::basis_term(const BasisKey& k, int truncation) {
  LieElement e(truncation);
  e.add(k, 1);
  return e;
}

void LieElement::add(const BasisKey& k, const Int& c) {
  if (c == 0 || k.weight() > truncation_) return;
  auto it = terms_.find(k);
  if (it == terms_.end()) {
    terms_.emplace(k, c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

LieElement& LieElement::operator+=(const LieElement& o) {
  for (const auto& [k, c] : o.terms_) add(k, c);
  return *this;
}

LieElement& LieElement::operator-=(const LieElement& o) {
  for (const auto& [k, c] : o.terms_) add(k, -c);
  return *this;
}

LieElement& LieElement::scale(const Int& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [k, coeff] : terms_) coeff *= c;
  return *this;
}

LieElement LieElement::operator-() const {
  LieElement r = *this;
  for (auto& [k, coeff] : r.terms_) coeff = -coeff;
  return r;
}

int LieElement::max_weight() const {
  int w = 0;
  for (const auto& [k, c] : terms_) w = std::max(w, k.weight());
  return w;
}

// ---------------------------------------------------------------------------
// AlgebraSpec internals
// ---------------------------------------------------------------------------

struct AlgebraSpec::Impl {
  std::string family;
  std::vector<LayerSpec> layers;
  std::map<std::string, GenRef> by_name;
  std::map<std::pair<GenRef, GenRef>, LieElement> action;
  std::vector<ActionEntry> action_list;

  mutable std::mutex cache_mu;
  mutable std::map<std::pair<BasisKey, BasisKey>, LieElement> act_cache;
};

namespace {

// Free bracket of two single-layer elements, expressed back in basis keys.
LieElement layer_bracket(int layer, const LieElement& x, const LieElement& y,
                         int truncation) {
  FreeLieElement fx(truncation), fy(truncation);
  for (const auto& [k, c] : x.terms()) fx.add(k.word, c);
  for (const auto& [k, c] : y.terms()) fy.add(k.word, c);
  FreeLieElement fb = free_bracket(fx, fy, truncation);
  LieElement out(truncation);
  for (const auto& [w, c] : fb.terms()) out.add(BasisKey{layer, w}, c);
  return out;
}

LieElement act_star(const AlgebraSpec::Impl& im, const BasisKey& a,
                    const BasisKey& b);

// Action of a basis key on a whole (single-layer) element, linearly.
LieElement act_elem(const AlgebraSpec::Impl& im, const BasisKey& actor,
                    const LieElement& e, int truncation) {
  LieElement out(truncation);
  for (const auto& [k, c] : e.terms()) {
    LieElement t = act_star(im, actor, k);
    t.scale(c);
    out += t;
  }
  return out;
}

// Derivation extension of the generator action table: actor in an outer
// layer, target basis key in an inner layer; result lives in the target
// layer with weight = wt(actor) + wt(target).
LieElement act_star(const AlgebraSpec::Impl& im, const BasisKey& a,
                    const BasisKey& b) {
  const std::pair<BasisKey, BasisKey> key{a, b};
  {
    std::lock_guard<std::mutex> lock(im.cache_mu);
    auto it = im.act_cache.find(key);
    if (it != im.act_cache.end()) return it->second;
  }

  const int w = a.weight() + b.weight();
  LieElement res(w);
  if (a.weight() == 1 && b.weight() == 1) {
    GenRef ga{a.layer, a.word.letters()[0]};
    GenRef gb{b.layer, b.word.letters()[0]};
    auto it = im.action.find({ga, gb});
    if (it != im.action.end()) res = it->second;
  } else if (a.weight() == 1) {
    // act(g, [u,v]) = [act(g,u), v] + [u, act(g,v)]
    auto [u, v] = standard_factorization(b.word);
    BasisKey bu{b.layer, u}, bv{b.layer, v};
    res = layer_bracket(b.layer, act_star(im, a, bu),
                        LieElement::basis_term(bv, v.weight()), w);
    res += layer_bracket(b.layer, LieElement::basis_term(bu, u.weight()),
                         act_star(im, a, bv), w);
  } else {
    // act([u,v], t) = act(u, act(v, t)) - act(v, act(u, t))
    auto [u, v] = standard_factorization(a.word);
    BasisKey au{a.layer, u}, av{a.layer, v};
    res = act_elem(im, au, act_star(im, av, b), w);
    res -= act_elem(im, av, act_star(im, au, b), w);
  }

  {
    std::lock_guard<std::mutex> lock(im.cache_mu);
    im.act_cache.emplace(key, res);
  }
  return res;
}

}  // namespace

// ---------------------------------------------------------------------------
// Construction
// ---------------------------------------------------------------------------

AlgebraSpec AlgebraSpec::custom(std::string family,
                                std::vector<std::vector<std::string>> layer_generators,
                                std::vector<ActionEntry> actions) {
  auto impl = std::make_shared<Impl>();
  impl->family = std::move(family);
  require(!layer_generators.empty(), "AlgebraSpec: no layers");
  int id = 0;
  for (auto& gens : layer_generators) {
    require(!gens.empty(), "AlgebraSpec: empty layer");
    LayerSpec layer;
    layer.id = id;
    layer.generators = gens;
    for (int idx = 0; idx < static_cast<int>(gens.size()); ++idx) {
      auto [it, fresh] = impl->by_name.emplace(gens[idx], GenRef{id, idx});
      require(fresh, "AlgebraSpec: duplicate generator name '" + gens[idx] + "'");
    }
    impl->layers.push_back(std::move(layer));
    ++id;
  }
  for (auto& e : actions) {
    require(e.actor.layer >= 0 && e.actor.layer < id &&
                e.target.layer >= 0 && e.target.layer < id,
            "AlgebraSpec: action layer out of range");
    require(e.actor.layer < e.target.layer,
            "AlgebraSpec: action must go from an outer layer to an inner one");
    require(e.actor.index >= 0 &&
                e.actor.index < static_cast<int>(impl->layers[e.actor.layer].generators.size()),
            "AlgebraSpec: actor index out of range");
    require(e.target.index >= 0 &&
                e.target.index < static_cast<int>(impl->layers[e.target.layer].generators.size()),
            "AlgebraSpec: target index out of range");
    for (const auto& [k, c] : e.value.terms()) {
      require(k.layer == e.target.layer && k.weight() == 2,
              "AlgebraSpec: action values must be weight-2 in the target layer");
      require(k.word.max_letter() <
                  static_cast<int>(impl->layers[k.layer].generators.size()),
              "AlgebraSpec: action value letter out of range");
    }
    if (e.value.is_zero()) continue;
    auto [it, fresh] = impl->action.emplace(std::make_pair(e.actor, e.target), e.value);
    require(fresh, "AlgebraSpec: duplicate action entry");
    impl->action_list.push_back(e);
  }
  std::sort(impl->action_list.begin(), impl->action_list.end(),
            [](const ActionEntry& a, const ActionEntry& b) {
              return std::make_pair(a.actor, a.target) <
                     std::make_pair(b.actor, b.target);
            });
  return AlgebraSpec(std::move(impl));
}

AlgebraSpec AlgebraSpec::free_algebra(const std::vector<std::string>& names) {
  return custom("free(" + std::to_string(names.size()) + ")", {names}, {});
}

AlgebraSpec AlgebraSpec::free_algebra(int k) {
  require(k >= 1, "free_algebra: k must be >= 1");
  std::vector<std::string> names;
  for (int i = 1; i <= k; ++i) names.push_back("x" + std::to_string(i));
  return free_algebra(names);
}

AlgebraSpec AlgebraSpec::abelian(const std::vector<std::string>& names) {
  require(!names.empty(), "abelian: need at least one generator");
  std::vector<std::vector<std::string>> layers;
  for (const auto& n : names) layers.push_back({n});
  return custom("abelian(" + std::to_string(names.size()) + ")", layers, {});
}

AlgebraSpec AlgebraSpec::abelian(int k) {
  require(k >= 1, "abelian: k must be >= 1");
  std::vector<std::string> names;
  for (int i = 1; i <= k; ++i) names.push_back("e" + std::to_string(i));
  return abelian(names);
}

namespace {

// Weight-2 value [g_x, g_y] inside one layer, from generator indices.
LieElement gen_pair_bracket(int layer, int x, int y) {
  FreeLieElement b = basis_bracket(LyndonWord({x}), LyndonWord({y}), 2);
  LieElement out(2);
  for (const auto& [w, c] : b.terms()) out.add(BasisKey{layer, w}, c);
  return out;
}

// Shared layer scheme of the McCool and pure-braid families: layer k-2 is
// free on {B[i,k] : 1 <= i < k}, for k = 2..n.
std::vector<std::vector<std::string>> triangular_layers(int n) {
  std::vector<std::vector<std::string>> layers;
  for (int k = 2; k <= n; ++k) {
    std::vector<std::string> gens;
    for (int i = 1; i < k; ++i) gens.push_back(bname(i, k));
    layers.push_back(std::move(gens));
  }
  return layers;
}

}  // namespace

AlgebraSpec AlgebraSpec::mccool_plus(int n) {
  require(n >= 2, "mccool_plus: n must be >= 2");
  std::vector<ActionEntry> actions;
  // act(B[i,j], B[k,l]) with j < l: zero unless k == j, where
  // [B[i,j], B[j,l]] = [B[j,l], B[i,l]].
  for (int j = 2; j < n + 1; ++j)
    for (int i = 1; i < j; ++i)
      for (int l = j + 1; l <= n; ++l) {
        GenRef actor{j - 2, i - 1};
        GenRef target{l - 2, j - 1};  // B[j,l]
        actions.push_back({actor, target, gen_pair_bracket(l - 2, j - 1, i - 1)});
      }
  return custom("mccool_plus(" + std::to_string(n) + ")", triangular_layers(n),
                std::move(actions));
}

AlgebraSpec AlgebraSpec::drinfeld_kohno(int n) {
  require(n >= 2, "drinfeld_kohno: n must be >= 2");
  std::vector<ActionEntry> actions;
  // act(B[i,j], B[j,l]) = [B[j,l], B[i,l]];  act(B[i,j], B[i,l]) = [B[i,l], B[j,l]].
  for (int j = 2; j < n + 1; ++j)
    for (int i = 1; i < j; ++i)
      for (int l = j + 1; l <= n; ++l) {
        GenRef actor{j - 2, i - 1};
        actions.push_back(
            {actor, GenRef{l - 2, j - 1}, gen_pair_bracket(l - 2, j - 1, i - 1)});
        actions.push_back(
            {actor, GenRef{l - 2, i - 1}, gen_pair_bracket(l - 2, i - 1, j - 1)});
      }
  return custom("drinfeld_kohno(" + std::to_string(n) + ")", triangular_layers(n),
                std::move(actions));
}

AlgebraSpec AlgebraSpec::monomial_orbit(int r, int n) {
  require(r >= 1, "monomial_orbit: r must be >= 1");
  require(n >= 1, "monomial_orbit: n must be >= 1");
  // Layer j (0-based) is free of rank r*j + 1 on Z[j+1], B[i,j+1;p].
  std::vector<std::vector<std::string>> layers;
  for (int j = 0; j < n; ++j) {
    std::vector<std::string> gens;
    gens.push_back(zname(j + 1));
    for (int i = 1; i <= j; ++i)
      for (int p = 1; p <= r; ++p) gens.push_back(bname(i, j + 1, p));
    layers.push_back(std::move(gens));
  }
  // Generator indices within layer l-1: Z[l] at 0, B[i,l;p] at 1+(i-1)r+(p-1).
  auto z_idx = [](int) { return 0; };
  auto b_idx = [r](int i, int p) { return 1 + (i - 1) * r + (p - 1); };
  auto lab = [r](int p) { return mod_into(p, r, 1); };

  std::vector<ActionEntry> actions;
  for (int l = 2; l <= n; ++l) {
    const int L = l - 1;  // target layer id
    // act(Z[j], Z[l]) = sum_p [Z[l], B[j,l;p]]
    for (int j = 1; j < l; ++j) {
      LieElement v(2);
      for (int p = 1; p <= r; ++p) v += gen_pair_bracket(L, z_idx(l), b_idx(j, p));
      actions.push_back({GenRef{j - 1, 0}, GenRef{L, z_idx(l)}, v});
    }
    // act(Z[i], B[i,l;p]) = -[Z[l], B[i,l;p]] - sum_q [B[i,l;q], B[i,l;p]]
    for (int i = 1; i < l; ++i)
      for (int p = 1; p <= r; ++p) {
        LieElement v = -gen_pair_bracket(L, z_idx(l), b_idx(i, p));
        for (int q = 1; q <= r; ++q) {
          LieElement t = gen_pair_bracket(L, b_idx(i, q), b_idx(i, p));
          t.scale(-1);
          v += t;
        }
        actions.push_back({GenRef{i - 1, 0}, GenRef{L, b_idx(i, p)}, v});
      }
    // act(B[i,j;p], B[i,l;q]) = -[B[j,l;q-p], B[i,l;q]]
    // act(B[i,j;p], B[j,l;q]) = -[B[i,l;p+q], B[j,l;q]]
    for (int j = 2; j < l; ++j)
      for (int i = 1; i < j; ++i)
        for (int p = 1; p <= r; ++p) {
          GenRef actor{j - 1, b_idx(i, p)};
          for (int q = 1; q <= r; ++q) {
            LieElement v1 = gen_pair_bracket(L, b_idx(j, lab(q - p)), b_idx(i, q));
            v1.scale(-1);
            actions.push_back({actor, GenRef{L, b_idx(i, q)}, v1});
            LieElement v2 = gen_pair_bracket(L, b_idx(i, lab(p + q)), b_idx(j, q));
            v2.scale(-1);
            actions.push_back({actor, GenRef{L, b_idx(j, q)}, v2});
          }
        }
  }
  return custom("monomial_orbit(" + std::to_string(r) + "," + std::to_string(n) + ")",
                std::move(layers), std::move(actions));
}

AlgebraSpec AlgebraSpec::surface_orbit(int m, int n) {
  require(m >= 1, "surface_orbit: m must be >= 1");
  require(n >= 2, "surface_orbit: n must be >= 2");
  // Layer j-2 is free on {B[i,j;s] : 1 <= i < j, s in Z/m}, labels additive.
  std::vector<std::vector<std::string>> layers;
  for (int j = 2; j <= n; ++j) {
    std::vector<std::string> gens;
    for (int i = 1; i < j; ++i)
      for (int s = 0; s < m; ++s) gens.push_back(bname(i, j, s));
    layers.push_back(std::move(gens));
  }
  auto idx = [m](int i, int s) { return (i - 1) * m + mod_into(s, m, 0); };

  std::vector<ActionEntry> actions;
  for (int d = 3; d <= n; ++d) {
    const int L = d - 2;  // target layer id
    for (int b = 2; b < d; ++b)
      for (int a = 1; a < b; ++a)
        for (int s = 0; s < m; ++s) {
          GenRef actor{b - 2, idx(a, s)};
          for (int t = 0; t < m; ++t) {
            // act(B[a,b;s], B[a,d;t]) = [B[a,d;t], B[b,d;t-s]]
            actions.push_back({actor, GenRef{L, idx(a, t)},
                               gen_pair_bracket(L, idx(a, t), idx(b, t - s))});
            // act(B[a,b;s], B[b,d;t]) = [B[b,d;t], B[a,d;t+s]]
            actions.push_back({actor, GenRef{L, idx(b, t)},
                               gen_pair_bracket(L, idx(b, t), idx(a, t + s))});
          }
        }
  }
  return custom("surface_orbit(" + std::to_string(m) + "," + std::to_string(n) + ")",
                std::move(layers), std::move(actions));
}

AlgebraSpec AlgebraSpec::poison_model() {
  // a3 is central: both actions are zero, so the table is empty.
  return custom("poison", {{"phi1", "phi2"}, {"a3"}}, {});
}

AlgebraSpec AlgebraSpec::product(const AlgebraSpec& a, const AlgebraSpec& b) {
  std::vector<std::vector<std::string>> layers;
  for (const auto& l : a.layers()) layers.push_back(l.generators);
  for (const auto& l : b.layers()) layers.push_back(l.generators);
  std::vector<ActionEntry> actions = a.action_entries();
  const int shift = a.layer_count();
  for (auto e : b.action_entries()) {
    e.actor.layer += shift;
    e.target.layer += shift;
    LieElement v(2);
    for (const auto& [k, c] : e.value.terms())
      v.add(BasisKey{k.layer + shift, k.word}, c);
    e.value = v;
    actions.push_back(std::move(e));
  }
  return custom("product(" + a.family() + "," + b.family() + ")",
                std::move(layers), std::move(actions));
}

AlgebraSpec AlgebraSpec::with_action_override(const std::string& actor,
                                              const std::string& target,
                                              const LieElement& value) const {
  auto ga = find_generator(actor);
  auto gt = find_generator(target);
  require(ga && gt, "with_action_override: unknown generator");
  std::vector<std::vector<std::string>> layers;
  for (const auto& l : impl_->layers) layers.push_back(l.generators);
  std::vector<ActionEntry> actions;
  for (const auto& e : impl_->action_list)
    if (!(e.actor == *ga && e.target == *gt)) actions.push_back(e);
  if (!value.is_zero()) actions.push_back({*ga, *gt, value});
  return custom(impl_->family, std::move(layers), std::move(actions));
}

// ---------------------------------------------------------------------------
// Accessors
// ---------------------------------------------------------------------------

const std::string& AlgebraSpec::family() const { return impl_->family; }
const std::vector<LayerSpec>& AlgebraSpec::layers() const { return impl_->layers; }
int AlgebraSpec::layer_count() const { return static_cast<int>(impl_->layers.size()); }

int AlgebraSpec::layer_rank(int layer) const {
  require(layer >= 0 && layer < layer_count(), "layer_rank: layer out of range");
  return static_cast<int>(impl_->layers[layer].generators.size());
}

std::optional<GenRef> AlgebraSpec::find_generator(const std::string& name) const {
  auto it = impl_->by_name.find(name);
  if (it == impl_->by_name.end()) return std::nullopt;
  return it->second;
}

const std::string& AlgebraSpec::generator_name(GenRef g) const {
  return impl_->layers.at(g.layer).generators.at(g.index);
}

std::vector<std::string> AlgebraSpec::generator_names() const {
  std::vector<std::string> out;
  for (const auto& l : impl_->layers)
    out.insert(out.end(), l.generators.begin(), l.generators.end());
  return out;
}

std::vector<std::string> AlgebraSpec::top_layer_generators() const {
  return impl_->layers.back().generators;
}

LieElement AlgebraSpec::generator(const std::string& name, int truncation) const {
  auto g = find_generator(name);
  if (!g) throw std::domain_error("unknown generator '" + name + "'");
  return LieElement::basis_term(BasisKey{g->layer, LyndonWord({g->index})},
                                truncation);
}

LieElement AlgebraSpec::action(GenRef actor, GenRef target) const {
  auto it = impl_->action.find({actor, target});
  if (it == impl_->action.end()) return LieElement(2);
  return it->second;
}

const std::vector<AlgebraSpec::ActionEntry>& AlgebraSpec::action_entries() const {
  return impl_->action_list;
}

void AlgebraSpec::check_element(const LieElement& x) const {
  for (const auto& [k, c] : x.terms()) {
    if (k.layer < 0 || k.layer >= layer_count() ||
        k.word.max_letter() >= layer_rank(k.layer))
      throw std::domain_error("element does not belong to algebra " + family());
  }
}

// ---------------------------------------------------------------------------
// Bracket, bases, consistency
// ---------------------------------------------------------------------------

LieElement bracket(const AlgebraSpec& a, const LieElement& x, const LieElement& y,
                   int truncation) {
  require(truncation >= 1, "bracket: truncation must be >= 1");
  a.check_element(x);
  a.check_element(y);
  const auto& im = *a.impl_;
  LieElement out(truncation);
  for (const auto& [k1, c1] : x.terms()) {
    for (const auto& [k2, c2] : y.terms()) {
      if (k1.weight() + k2.weight() > truncation) continue;
      LieElement t(truncation);
      if (k1.layer == k2.layer) {
        t = layer_bracket(k1.layer, LieElement::basis_term(k1, k1.weight()),
                          LieElement::basis_term(k2, k2.weight()), truncation);
      } else if (k1.layer < k2.layer) {
        t = act_star(im, k1, k2);
      } else {
        t = -act_star(im, k2, k1);
      }
      t.scale(c1 * c2);
      out += t;
    }
  }
  return out;
}

std::vector<BasisKey> weight_basis(const AlgebraSpec& a, int weight) {
  require(weight >= 1, "weight_basis: weight must be >= 1");
  std::vector<BasisKey> out;
  for (const auto& layer : a.impl_->layers) {
    for (auto& w : lyndon_words(static_cast<int>(layer.generators.size()), weight))
      out.push_back(BasisKey{layer.id, std::move(w)});
  }
  return out;
}

ConsistencyReport validate_consistency(const AlgebraSpec& a, int max_weight,
                                       long sample_threshold) {
  require(max_weight >= 3, "validate_consistency: max_weight must be >= 3");
  std::vector<BasisKey> basis;
  for (int w = 1; w <= max_weight - 2; ++w)
    for (auto& k : weight_basis(a, w)) basis.push_back(std::move(k));

  ConsistencyReport report;
  const long n = static_cast<long>(basis.size());

  // Antisymmetry on pairs (structural in this representation, still checked).
  for (long i = 0; i < n; ++i)
    for (long j = i; j < n; ++j) {
      const auto& x = basis[i];
      const auto& y = basis[j];
      int w = x.weight() + y.weight();
      if (w > max_weight) continue;
      LieElement s = bracket(a, LieElement::basis_term(x, x.weight()),
                             LieElement::basis_term(y, y.weight()), w);
      s += bracket(a, LieElement::basis_term(y, y.weight()),
                   LieElement::basis_term(x, x.weight()), w);
      if (!s.is_zero())
        report.violations.push_back({x, y, y, s});
    }

  auto jacobiator = [&](const BasisKey& x, const BasisKey& y, const BasisKey& z,
                        int w) {
    LieElement ex = LieElement::basis_term(x, x.weight());
    LieElement ey = LieElement::basis_term(y, y.weight());
    LieElement ez = LieElement::basis_term(z, z.weight());
    LieElement j = bracket(a, ex, bracket(a, ey, ez, w), w);
    j += bracket(a, ey, bracket(a, ez, ex, w), w);
    j += bracket(a, ez, bracket(a, ex, ey, w), w);
    return j;
  };

  long total = 0;
  for (long i = 0; i < n; ++i)
    for (long j = i; j < n; ++j)
      for (long k = j; k < n; ++k)
        if (basis[i].weight() + basis[j].weight() + basis[k].weight() <= max_weight)
          ++total;

  if (total <= sample_threshold) {
    for (long i = 0; i < n; ++i)
      for (long j = i; j < n; ++j)
        for (long k = j; k < n; ++k) {
          int w = basis[i].weight() + basis[j].weight() + basis[k].weight();
          if (w > max_weight) continue;
          LieElement jac = jacobiator(basis[i], basis[j], basis[k], w);
          ++report.checked;
          if (!jac.is_zero())
            report.violations.push_back({basis[i], basis[j], basis[k], jac});
        }
  } else {
    std::mt19937_64 rng(0x706f6c79);  // fixed seed for reproducibility
    std::uniform_int_distribution<long> pick(0, n - 1);
    while (report.checked < sample_threshold) {
      const auto& x = basis[pick(rng)];
      const auto& y = basis[pick(rng)];
      const auto& z = basis[pick(rng)];
      int w = x.weight() + y.weight() + z.weight();
      if (w > max_weight) continue;
      LieElement jac = jacobiator(x, y, z, w);
      ++report.checked;
      if (!jac.is_zero()) report.violations.push_back({x, y, z, jac});
    }
  }
  return report;
}

std::string basis_key_to_string(const AlgebraSpec& a, const BasisKey& k) {
  if (k.weight() == 1)
    return a.generator_name(GenRef{k.layer, k.word.letters()[0]});
  auto [u, v] = standard_factorization(k.word);
  return "[" + basis_key_to_string(a, BasisKey{k.layer, u}) + "," +
         basis_key_to_string(a, BasisKey{k.layer, v}) + "]";
}

}  // namespace polyfree
