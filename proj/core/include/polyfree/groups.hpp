#pragma once

// Exact group-level oracles: reduced free-group words, endomorphisms of F_n
// by generator images, the McCool presentation checks, and normal-form
// arithmetic in the split extension F_3 x| F_2.

#include <array>
#include <string>
#include <vector>

#include "polyfree/integer.hpp"

namespace polyfree {

/// Freely reduced word: a sequence of (generator index, exponent +-1) with no
/// adjacent cancelling pair. The empty word is the identity.
class FreeWord {
 public:
  struct Letter {
    int gen = 0;
    int exp = 1;  // +1 or -1
    bool operator==(const Letter&) const = default;
  };

  FreeWord() = default;
  /// Reduces the given letter sequence.
  explicit FreeWord(std::vector<Letter> letters);

  static FreeWord generator(int gen, int exp = 1);

  bool is_identity() const { return letters_.empty(); }
  const std::vector<Letter>& letters() const { return letters_; }
  int length() const { return static_cast<int>(letters_.size()); }
  int max_generator() const;  // -1 for the identity

  FreeWord inverse() const;
  friend FreeWord operator*(const FreeWord& a, const FreeWord& b);
  FreeWord pow(int k) const;
  long long exponent_sum(int gen) const;

  bool operator==(const FreeWord&) const = default;

 private:
  std::vector<Letter> letters_;
};

/// "a3 a1 a3^-1" with the given generator names; the identity prints as "".
std::string format_word(const FreeWord& w, const std::vector<std::string>& names);
/// Parses the same syntax (also accepts exponents like "a1^3").
FreeWord parse_word(const std::string& text, const std::vector<std::string>& names);

/// Endomorphism of F_n by generator images.
class Endomorphism {
 public:
  Endomorphism(int rank, std::vector<FreeWord> images);

  static Endomorphism identity(int rank);

  int rank() const { return rank_; }
  const std::vector<FreeWord>& images() const { return images_; }

  FreeWord apply(const FreeWord& w) const;
  /// (*this) after inner: x -> this(inner(x)).
  Endomorphism compose(const Endomorphism& inner) const;

  bool operator==(const Endomorphism&) const = default;

 private:
  int rank_;
  std::vector<FreeWord> images_;
};

/// The basis-conjugating automorphism x_j -> x_i^-1 x_j x_i (others fixed).
/// Indices are 1-based, i != j.
Endomorphism mccool_automorphism(int n, int i, int j);
/// Its inverse: x_j -> x_i x_j x_i^-1.
Endomorphism mccool_automorphism_inverse(int n, int i, int j);

/// Checks the three McCool relation families over all applicable index tuples
/// and evaluates the non-relation witness [b_{1,3}, b_{1,2} b_{2,3}].
struct McCoolReport {
  struct Failure {
    int family = 0;  // 1: disjoint, 2: same first index, 3: mixed
    std::array<int, 4> indices{};
  };
  std::vector<Failure> failures;
  long relations_checked = 0;
  bool witness_is_identity = true;
  FreeWord witness_image_of_x3;  // the witness applied to x_3
  bool pass() const { return failures.empty() && !witness_is_identity; }
};
McCoolReport verify_mccool_relations(int n);

/// Normal form (w, v) of w*v in the split extension H = F_3 x| F_2 with
/// action phi_i: a_3 -> a_3 a_i and a_1, a_2 fixed. w is a word over
/// {a1,a2,a3} (indices 0..2), v over {phi1,phi2} (indices 0..1).
struct PoisonElement {
  FreeWord w;
  FreeWord v;
  bool operator==(const PoisonElement&) const = default;
  bool is_identity() const { return w.is_identity() && v.is_identity(); }
};

PoisonElement poison_multiply(const PoisonElement& g, const PoisonElement& h);
PoisonElement poison_inverse(const PoisonElement& g);

/// The map into F_2 x H_1(H): the projection v together with the exponent
/// sums (phi1, phi2, a3); the classes of a1 and a2 die in homology.
std::pair<FreeWord, std::array<long long, 3>> poison_p_alpha(const PoisonElement& g);

}  // namespace polyfree
