#include "polyfree/maps.hpp"

#include <set>
#include <stdexcept>

#include "polyfree/arrangements.hpp"

namespace polyfree {

LieMap::LieMap(AlgebraSpec dom, AlgebraSpec codom,
               std::map<std::string, LieElement> imgs)
    : domain(std::move(dom)), codomain(std::move(codom)), images(std::move(imgs)) {
  for (const auto& name : domain.generator_names()) {
    auto it = images.find(name);
    if (it == images.end())
      throw std::invalid_argument("LieMap: missing image for generator '" + name + "'");
    codomain.check_element(it->second);
    if (it->second.max_weight() > 1)
      throw std::invalid_argument("LieMap: image of '" + name + "' is not weight-1");
  }
  if (images.size() != domain.generator_names().size())
    throw std::invalid_argument("LieMap: image table has extra entries");
}

LieMap LieMap::identity(const AlgebraSpec& a) {
  std::map<std::string, LieElement> imgs;
  for (const auto& name : a.generator_names()) imgs.emplace(name, a.generator(name, 1));
  return LieMap(a, a, std::move(imgs));
}

namespace {

LieElement map_basis_key(const LieMap& f, const BasisKey& k, int truncation,
                         std::map<BasisKey, LieElement>& memo) {
  auto it = memo.find(k);
  if (it != memo.end()) return it->second;
  LieElement out(truncation);
  if (k.weight() == 1) {
    const auto& name = f.domain.generator_name(GenRef{k.layer, k.word.letters()[0]});
    for (const auto& [key, c] : f.images.at(name).terms()) out.add(key, c);
  } else {
    auto [u, v] = standard_factorization(k.word);
    out = bracket(f.codomain,
                  map_basis_key(f, BasisKey{k.layer, u}, truncation, memo),
                  map_basis_key(f, BasisKey{k.layer, v}, truncation, memo),
                  truncation);
  }
  memo.emplace(k, out);
  return out;
}

}  // namespace

LieElement apply(const LieMap& f, const LieElement& x, int truncation) {
  f.domain.check_element(x);
  std::map<BasisKey, LieElement> memo;
  LieElement out(truncation);
  for (const auto& [k, c] : x.terms()) {
    if (k.weight() > truncation) continue;
    LieElement t = map_basis_key(f, k, truncation, memo);
    t.scale(c);
    out += t;
  }
  return out;
}

HomReport verify_hom(const LieMap& f, int max_weight) {
  if (max_weight < 2)
    throw std::invalid_argument("verify_hom: max_weight must be >= 2");
  std::vector<BasisKey> basis;
  for (int w = 1; w < max_weight; ++w)
    for (auto& k : weight_basis(f.domain, w)) basis.push_back(std::move(k));

  HomReport report;
  const int n = static_cast<int>(basis.size());
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const auto& x = basis[i];
      const auto& y = basis[j];
      const int w = x.weight() + y.weight();
      if (w > max_weight) continue;
      LieElement ex = LieElement::basis_term(x, x.weight());
      LieElement ey = LieElement::basis_term(y, y.weight());
      LieElement lhs = apply(f, bracket(f.domain, ex, ey, w), w);
      LieElement rhs = bracket(f.codomain, apply(f, ex, w), apply(f, ey, w), w);
      ++report.checked;
      if (!(lhs == rhs)) report.violations.push_back({x, y, lhs, rhs});
    }
  }
  return report;
}

IntMatrix weight_matrix(const LieMap& f, int weight) {
  const auto dom = weight_basis(f.domain, weight);
  const auto codom = weight_basis(f.codomain, weight);
  std::map<BasisKey, int> row_of;
  for (int i = 0; i < static_cast<int>(codom.size()); ++i) row_of.emplace(codom[i], i);

  IntMatrix m(static_cast<int>(codom.size()), static_cast<int>(dom.size()));
  for (int c = 0; c < static_cast<int>(dom.size()); ++c) {
    LieElement img = apply(f, LieElement::basis_term(dom[c], weight), weight);
    for (const auto& [k, coeff] : img.terms()) m.at(row_of.at(k), c) = coeff;
  }
  return m;
}

bool injectivity_rank_check(const LieMap& f, int weight) {
  const int dim = static_cast<int>(weight_basis(f.domain, weight).size());
  return rank(weight_matrix(f, weight)) == dim;
}

bool algebras_equal(const AlgebraSpec& a, const AlgebraSpec& b,
                    const GeneratorDictionary& dictionary, int max_weight) {
  const auto a_names = a.generator_names();
  const auto b_names = b.generator_names();
  if (dictionary.size() != a_names.size() || a_names.size() != b_names.size())
    throw std::invalid_argument("algebras_equal: dictionary is not a bijection");
  std::set<std::string> seen;
  GeneratorDictionary inverse;
  for (const auto& name : a_names) {
    auto it = dictionary.find(name);
    if (it == dictionary.end())
      throw std::invalid_argument("algebras_equal: no entry for '" + name + "'");
    if (!b.find_generator(it->second))
      throw std::invalid_argument("algebras_equal: unknown image '" + it->second + "'");
    if (!seen.insert(it->second).second)
      throw std::invalid_argument("algebras_equal: dictionary is not injective");
    inverse.emplace(it->second, name);
  }

  auto as_map = [](const AlgebraSpec& dom, const AlgebraSpec& codom,
                   const GeneratorDictionary& dict) {
    std::map<std::string, LieElement> imgs;
    for (const auto& [from, to] : dict) imgs.emplace(from, codom.generator(to, 1));
    return LieMap(dom, codom, std::move(imgs));
  };
  // Both directions: a one-way generator-level homomorphism can collapse
  // higher weights; two-sided verification certifies a weight-wise isomorphism.
  return verify_hom(as_map(a, b, dictionary), max_weight).pass() &&
         verify_hom(as_map(b, a, inverse), max_weight).pass();
}

std::vector<int> pullback_fiber_dictionary(int r, int n) {
  if (r < 1 || n < 1)
    throw std::invalid_argument("pullback_fiber_dictionary: parameters must be >= 1");
  // Fiber coordinates of the extended point map: slot 1 holds the constant 0,
  // slot 2+(i-1)r+a holds zeta^a x_i. The top generator for the label-p orbit
  // hyperplane {x_i = zeta^p z} meets z at exponent -p.
  std::vector<int> dict;
  dict.push_back(1);  // Z[n+1] <-> B[1, l+1]
  for (int i = 1; i <= n; ++i)
    for (int p = 1; p <= r; ++p) dict.push_back(2 + (i - 1) * r + ((r - p % r) % r));
  return dict;
}

AlgebraSpec pullback_algebra(int r, int n) {
  if (r < 1 || n < 1)
    throw std::invalid_argument("pullback_algebra: parameters must be >= 1");
  const int ell = r * n + 1;
  AlgebraSpec base = AlgebraSpec::monomial_orbit(r, n);
  AlgebraSpec dk = AlgebraSpec::drinfeld_kohno(ell + 1);
  LieMap g = induced_generator_images(r, n);

  // Layers: the base algebra plus a free top layer carrying the same
  // generator names as the top layer of monomial_orbit(r, n+1).
  std::vector<std::vector<std::string>> layers;
  for (const auto& l : base.layers()) layers.push_back(l.generators);
  std::vector<std::string> top;
  top.push_back("Z[" + std::to_string(n + 1) + "]");
  for (int i = 1; i <= n; ++i)
    for (int p = 1; p <= r; ++p)
      top.push_back("B[" + std::to_string(i) + "," + std::to_string(n + 1) + ";" +
                    std::to_string(p) + "]");
  const int top_layer = base.layer_count();
  layers.push_back(top);

  const std::vector<int> dict = pullback_fiber_dictionary(r, n);
  std::vector<int> inverse(ell + 1, -1);  // braid fiber index -> top index
  for (int t = 0; t < ell; ++t) inverse[dict[t]] = t;

  auto braid_fiber_name = [&](int k) {
    return "B[" + std::to_string(k) + "," + std::to_string(ell + 1) + "]";
  };

  std::vector<AlgebraSpec::ActionEntry> actions = base.action_entries();
  for (const auto& layer : base.layers()) {
    for (int idx = 0; idx < static_cast<int>(layer.generators.size()); ++idx) {
      // Image of the lower generator inside the larger braid algebra; the
      // lower braid layers share generator names across strand counts.
      LieElement img_small = g.images.at(layer.generators[idx]);
      LieElement img(1);
      for (const auto& [k, c] : img_small.terms()) {
        GenRef ref{k.layer, k.word.letters()[0]};
        img += dk.generator(g.codomain.generator_name(ref), 1).scale(c);
      }
      for (int t = 0; t < ell; ++t) {
        LieElement value_dk =
            bracket(dk, img, dk.generator(braid_fiber_name(dict[t]), 2), 2);
        // Transport each weight-2 braid-fiber term through the dictionary.
        LieElement value(2);
        for (const auto& [k, c] : value_dk.terms()) {
          int k1 = inverse[k.word.letters()[0] + 1];
          int k2 = inverse[k.word.letters()[1] + 1];
          FreeLieElement b = basis_bracket(LyndonWord({k1}), LyndonWord({k2}), 2);
          b.scale(c);
          for (const auto& [w, coeff] : b.terms())
            value.add(BasisKey{top_layer, w}, coeff);
        }
        if (!value.is_zero())
          actions.push_back({GenRef{layer.id, idx}, GenRef{top_layer, t}, value});
      }
    }
  }
  return AlgebraSpec::custom(
      "pullback(" + std::to_string(r) + "," + std::to_string(n) + ")",
      std::move(layers), std::move(actions));
}

}  // namespace polyfree
