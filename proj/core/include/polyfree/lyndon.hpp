#pragma once

// Free Lie algebra over Z on a finite ordered alphabet, in the Lyndon-word
// basis: word enumeration, Witt dimensions, standard factorizations, the
// canonical bracket, and expansion into the free associative ring.

#include <compare>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "polyfree/integer.hpp"

namespace polyfree {

/// A Lyndon word: strictly smaller (lexicographically) than every proper
/// rotation of itself. Letters are 0-based indices into an ordered alphabet;
/// the weight of the word is its length.
class LyndonWord {
 public:
  explicit LyndonWord(std::vector<int> letters);

  static bool is_lyndon(std::span<const int> letters);

  const std::vector<int>& letters() const { return letters_; }
  int weight() const { return static_cast<int>(letters_.size()); }
  int max_letter() const;

  /// Concatenation u·v (caller guarantees the result is Lyndon).
  static LyndonWord concat(const LyndonWord& u, const LyndonWord& v);

  // Plain lexicographic word order (prefixes sort first).
  auto operator<=>(const LyndonWord& o) const { return letters_ <=> o.letters_; }
  bool operator==(const LyndonWord& o) const = default;

 private:
  struct unchecked_tag {};
  LyndonWord(std::vector<int> letters, unchecked_tag) : letters_(std::move(letters)) {}
  std::vector<int> letters_;
};

/// (weight, lexicographic) order; the canonical output order of elements.
struct GradedLexLess {
  bool operator()(const LyndonWord& a, const LyndonWord& b) const {
    if (a.weight() != b.weight()) return a.weight() < b.weight();
    return a.letters() < b.letters();
  }
};

/// All Lyndon words of exactly the given weight over {0,...,alphabet_size-1},
/// sorted lexicographically. Uses Duval's generation algorithm.
std::vector<LyndonWord> lyndon_words(int alphabet_size, int weight);

/// Rank of the weight-q component of the free Lie algebra on k generators:
/// (1/q) * sum_{d|q} mu(d) * k^(q/d).
Int witt_dimension(int alphabet_size, int weight);

/// Right standard factorization w = u·v with v the longest proper Lyndon
/// suffix of w. Defines the basis bracketing lambda(w) = [lambda(u), lambda(v)].
std::pair<LyndonWord, LyndonWord> standard_factorization(const LyndonWord& w);

/// Element of the free Lie algebra: a sparse integer combination of Lyndon
/// basis words, meaningful through the stated truncation weight. Stored
/// coefficients are never zero and stored weights never exceed the truncation.
class FreeLieElement {
 public:
  using TermMap = std::map<LyndonWord, Int, GradedLexLess>;

  FreeLieElement() : truncation_(1) {}
  explicit FreeLieElement(int truncation);

  static FreeLieElement basis_term(const LyndonWord& w, int truncation);
  static FreeLieElement generator(int letter, int truncation);

  int truncation() const { return truncation_; }
  bool is_zero() const { return terms_.empty(); }
  const TermMap& terms() const { return terms_; }

  /// Adds c·w, dropping the term if its weight exceeds the truncation.
  void add(const LyndonWord& w, const Int& c);

  FreeLieElement& operator+=(const FreeLieElement& o);
  FreeLieElement& operator-=(const FreeLieElement& o);
  FreeLieElement& scale(const Int& c);
  FreeLieElement operator-() const;

  // Equality of terms; the truncation is bookkeeping, not part of the value.
  bool operator==(const FreeLieElement& o) const { return terms_ == o.terms_; }

 private:
  TermMap terms_;
  int truncation_;
};

/// Lie bracket of canonical elements, rewritten to the Lyndon basis; terms of
/// weight beyond the truncation are discarded.
FreeLieElement free_bracket(const FreeLieElement& x, const FreeLieElement& y,
                            int truncation);

/// Bracket of two basis words (signed, canonical). Homogeneous of weight
/// |u|+|v|; returns zero when that exceeds the truncation.
FreeLieElement basis_bracket(const LyndonWord& u, const LyndonWord& v,
                             int truncation);

/// Element of the free associative ring on the same alphabet. Test oracle for
/// the bracket: the free Lie algebra embeds via lambda(w) -> uv - vu.
class AssocPoly {
 public:
  using Word = std::vector<int>;
  struct WordLess {
    bool operator()(const Word& a, const Word& b) const {
      if (a.size() != b.size()) return a.size() < b.size();
      return a < b;
    }
  };
  using TermMap = std::map<Word, Int, WordLess>;

  AssocPoly() = default;

  static AssocPoly word(Word w, Int c = 1);

  bool is_zero() const { return terms_.empty(); }
  const TermMap& terms() const { return terms_; }

  void add(const Word& w, const Int& c);
  AssocPoly& operator+=(const AssocPoly& o);
  AssocPoly& operator-=(const AssocPoly& o);
  friend AssocPoly operator*(const AssocPoly& a, const AssocPoly& b);
  bool operator==(const AssocPoly& o) const { return terms_ == o.terms_; }

 private:
  TermMap terms_;
};

/// Expansion into the free associative ring: lambda(w) with standard
/// factorization (u, v) expands as expand(u)·expand(v) − expand(v)·expand(u).
AssocPoly expand(const FreeLieElement& x);
AssocPoly expand(const LyndonWord& w);

std::string to_string(const LyndonWord& w);

}  // namespace polyfree
