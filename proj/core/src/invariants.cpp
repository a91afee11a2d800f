#include "polyfree/invariants.hpp"

#include <map>
#include <stdexcept>

namespace polyfree {

int CentralizerProfile::rank_at(int w) const {
  for (const auto& c : weights)
    if (c.weight == w) return c.lattice.rank();
  return 0;
}

bool CentralizerProfile::concentrated_in_weight1_cyclic() const {
  for (const auto& c : weights) {
    if (c.weight == 1) {
      if (c.lattice.rank() > 1) return false;
    } else if (!c.lattice.is_empty()) {
      return false;
    }
  }
  return true;
}

IntMatrix centralizer_constraints(const AlgebraSpec& a,
                                  const std::vector<std::string>& s, int w) {
  const auto basis_w = weight_basis(a, w);
  const auto basis_w1 = weight_basis(a, w + 1);
  std::map<BasisKey, int> row_of;
  for (int i = 0; i < static_cast<int>(basis_w1.size()); ++i)
    row_of.emplace(basis_w1[i], i);

  const int block = static_cast<int>(basis_w1.size());
  IntMatrix m(static_cast<int>(s.size()) * block, static_cast<int>(basis_w.size()));
  for (int gi = 0; gi < static_cast<int>(s.size()); ++gi) {
    LieElement g = a.generator(s[gi], w + 1);
    for (int c = 0; c < static_cast<int>(basis_w.size()); ++c) {
      LieElement e = LieElement::basis_term(basis_w[c], w);
      LieElement br = bracket(a, e, g, w + 1);
      for (const auto& [k, coeff] : br.terms())
        m.at(gi * block + row_of.at(k), c) = coeff;
    }
  }
  return m;
}

CentralizerProfile centralizer_profile(const AlgebraSpec& a,
                                       const std::vector<std::string>& s,
                                       int max_weight) {
  if (s.empty()) throw std::invalid_argument("centralizer_profile: empty set");
  if (max_weight < 1)
    throw std::invalid_argument("centralizer_profile: max_weight must be >= 1");
  for (const auto& name : s)
    if (!a.find_generator(name))
      throw std::domain_error("centralizer_profile: unknown generator '" + name + "'");

  CentralizerProfile profile;
  profile.algebra = a.family();
  profile.generators = s;
  for (int w = 1; w <= max_weight; ++w) {
    CentralizerProfile::WeightComponent comp;
    comp.weight = w;
    comp.basis = weight_basis(a, w);
    comp.lattice = kernel_basis(centralizer_constraints(a, s, w));
    profile.weights.push_back(std::move(comp));
  }
  return profile;
}

CentralizerProfile center_profile(const AlgebraSpec& a, int max_weight) {
  return centralizer_profile(a, a.generator_names(), max_weight);
}

bool adkernel_compare(const AlgebraSpec& a,
                      const std::vector<std::string>& ideal_generators,
                      int max_weight) {
  CentralizerProfile center = center_profile(a, max_weight);
  CentralizerProfile ideal = centralizer_profile(a, ideal_generators, max_weight);
  for (size_t i = 0; i < center.weights.size(); ++i)
    if (!lattice_equal(center.weights[i].lattice, ideal.weights[i].lattice))
      return false;
  return true;
}

}  // namespace polyfree
