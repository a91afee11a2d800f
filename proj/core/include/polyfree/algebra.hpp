#pragma once

// Layered graded Lie algebras: iterated semidirect products of free Lie
// algebra layers, with the derivation action of outer layers on inner ones
// specified on weight-1 generators and extended canonically. Includes
// constructors for the shipped families.

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "polyfree/lyndon.hpp"

namespace polyfree {

/// One free Lie algebra layer. Layer 0 is the outermost quotient; the layer
/// of maximal id is the innermost ideal.
struct LayerSpec {
  int id = 0;
  std::vector<std::string> generators;
};

/// (layer, generator index within the layer)
struct GenRef {
  int layer = 0;
  int index = 0;
  auto operator<=>(const GenRef&) const = default;
};

/// Basis element: a Lyndon word over one layer's alphabet.
struct BasisKey {
  int layer = 0;
  LyndonWord word{{0}};

  int weight() const { return word.weight(); }
  bool operator==(const BasisKey& o) const = default;
  bool operator<(const BasisKey& o) const {
    if (layer != o.layer) return layer < o.layer;
    return GradedLexLess{}(word, o.word);
  }
};

/// Sparse integer combination of basis keys (possibly mixing layers), with a
/// truncation weight. No zero coefficients are stored.
class LieElement {
 public:
  using TermMap = std::map<BasisKey, Int>;

  LieElement() : truncation_(1) {}
  explicit LieElement(int truncation);

  static LieElement basis_term(const BasisKey& k, int truncation);

  int truncation() const { return truncation_; }
  bool is_zero() const { return terms_.empty(); }
  const TermMap& terms() const { return terms_; }

  void add(const BasisKey& k, const Int& c);
  LieElement& operator+=(const LieElement& o);
  LieElement& operator-=(const LieElement& o);
  LieElement& scale(const Int& c);
  LieElement operator-() const;
  bool operator==(const LieElement& o) const { return terms_ == o.terms_; }

  /// Largest weight present (0 for the zero element).
  int max_weight() const;

 private:
  TermMap terms_;
  int truncation_;
};

class AlgebraSpec;

/// Outcome of validate_consistency: the violating triples, if any.
struct ConsistencyReport {
  struct Violation {
    BasisKey x, y, z;      // jacobiator [x,[y,z]] + [y,[z,x]] + [z,[x,y]] != 0
    LieElement defect;
  };
  std::vector<Violation> violations;
  long checked = 0;
  bool pass() const { return violations.empty(); }
};

/// Immutable description of a layered algebra: ordered free layers plus the
/// weight-2 action table act(actor generator, target generator) for actor
/// layers strictly above target layers. Cheap to copy (shared internals).
class AlgebraSpec {
 public:
  struct ActionEntry {
    GenRef actor;   // layer i
    GenRef target;  // layer j > i
    LieElement value;  // weight-2, supported in layer j
  };

  // -- families ------------------------------------------------------------
  static AlgebraSpec free_algebra(int k);
  static AlgebraSpec free_algebra(const std::vector<std::string>& names);
  static AlgebraSpec abelian(int k);
  static AlgebraSpec abelian(const std::vector<std::string>& names);
  /// Upper triangular McCool family on n strands (n >= 2).
  static AlgebraSpec mccool_plus(int n);
  /// Pure braid (infinitesimal braid relations) family on n strands (n >= 2).
  static AlgebraSpec drinfeld_kohno(int n);
  /// Cyclic orbit configuration family: labels 1..r, points 1..n.
  static AlgebraSpec monomial_orbit(int r, int n);
  /// Finite-label surface orbit family: labels Z/m, points 1..n (n >= 2).
  static AlgebraSpec surface_orbit(int m, int n);
  /// F3 x| F2 model: outer free layer on {phi1, phi2}, central inner a3.
  static AlgebraSpec poison_model();
  /// Direct product: layers of a, then layers of b, no cross action.
  static AlgebraSpec product(const AlgebraSpec& a, const AlgebraSpec& b);
  /// Arbitrary layered algebra from explicit layers and action entries.
  static AlgebraSpec custom(std::string family,
                            std::vector<std::vector<std::string>> layer_generators,
                            std::vector<ActionEntry> actions);

  // -- structure -----------------------------------------------------------
  const std::string& family() const;
  const std::vector<LayerSpec>& layers() const;
  int layer_count() const;
  int layer_rank(int layer) const;

  std::optional<GenRef> find_generator(const std::string& name) const;
  const std::string& generator_name(GenRef g) const;
  std::vector<std::string> generator_names() const;
  /// Generator names of the innermost (top id) layer.
  std::vector<std::string> top_layer_generators() const;

  /// Weight-1 basis element for a named generator.
  LieElement generator(const std::string& name, int truncation) const;

  /// Raw action-table entry (zero element if absent).
  LieElement action(GenRef actor, GenRef target) const;
  const std::vector<ActionEntry>& action_entries() const;

  /// Rebuild with one action entry replaced (for constructed-failure tests).
  AlgebraSpec with_action_override(const std::string& actor,
                                   const std::string& target,
                                   const LieElement& value) const;

  /// Throws std::domain_error unless every term of x is a valid basis key of
  /// this algebra.
  void check_element(const LieElement& x) const;

  bool same_spec_as(const AlgebraSpec& o) const { return impl_ == o.impl_; }

  struct Impl;  // defined in algebra.cpp

 private:
  std::shared_ptr<const Impl> impl_;
  explicit AlgebraSpec(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
  friend LieElement bracket(const AlgebraSpec&, const LieElement&,
                            const LieElement&, int);
  friend std::vector<BasisKey> weight_basis(const AlgebraSpec&, int);
};

/// Lie bracket in the layered algebra: free bracket within a layer, the
/// canonical derivation extension of the action table across layers. Terms
/// above the truncation are discarded.
LieElement bracket(const AlgebraSpec& a, const LieElement& x,
                   const LieElement& y, int truncation);

/// All basis keys of the given weight, ordered by (layer, word).
std::vector<BasisKey> weight_basis(const AlgebraSpec& a, int weight);

/// Checks antisymmetry and the Jacobi identity on basis triples of total
/// weight <= max_weight (exhaustive below sample_threshold triples, random
/// sample with a fixed seed above it).
ConsistencyReport validate_consistency(const AlgebraSpec& a, int max_weight,
                                       long sample_threshold = 2000000);

/// Human-readable basis key, e.g. "B[1,3]" or "[B[1,3],B[2,3]]".
std::string basis_key_to_string(const AlgebraSpec& a, const BasisKey& k);

}  // namespace polyfree
