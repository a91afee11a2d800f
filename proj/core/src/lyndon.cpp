#include "polyfree/lyndon.hpp"

#include <algorithm>
#include <mutex>
#include <set>
#include <sstream>

namespace polyfree {

namespace {

void require(bool cond, const char* msg) {
  if (!cond) throw std::invalid_argument(msg);
}

}  // namespace

// ---------------------------------------------------------------------------
// LyndonWord
// ---------------------------------------------------------------------------

LyndonWord::LyndonWord(std::vector<int> letters) : letters_(std::move(letters)) {
  require(!letters_.empty(), "LyndonWord: empty word");
  for (int x : letters_) require(x >= 0, "LyndonWord: negative letter");
  require(is_lyndon(letters_), "LyndonWord: word is not Lyndon");
}

bool LyndonWord::is_lyndon(std::span<const int> w) {
  const size_t n = w.size();
  if (n == 0) return false;
  // w must be strictly smaller than each of its proper rotations.
  for (size_t s = 1; s < n; ++s) {
    for (size_t i = 0; i < n; ++i) {
      int a = w[i];
      int b = w[(s + i) % n];
      if (a < b) break;
      if (a > b) return false;
      if (i + 1 == n) return false;  // rotation equals w
    }
  }
  return true;
}

int LyndonWord::max_letter() const {
  return *std::max_element(letters_.begin(), letters_.end());
}

LyndonWord LyndonWord::concat(const LyndonWord& u, const LyndonWord& v) {
  std::vector<int> w = u.letters_;
  w.insert(w.end(), v.letters_.begin(), v.letters_.end());
  return LyndonWord(std::move(w));
}

std::string to_string(const LyndonWord& w) {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < w.letters().size(); ++i) {
    if (i) os << " ";
    os << w.letters()[i];
  }
  os << ")";
  return os.str();
}

// ---------------------------------------------------------------------------
// Enumeration and dimensions
// ---------------------------------------------------------------------------

std::vector<LyndonWord> lyndon_words(int alphabet_size, int weight) {
  require(alphabet_size >= 1, "lyndon_words: alphabet_size must be >= 1");
  require(weight >= 1, "lyndon_words: weight must be >= 1");

  // Duval's algorithm: generates all Lyndon words of length <= weight in
  // lexicographic order; keep the ones of exact length.
  std::vector<LyndonWord> out;
  std::vector<int> w{0};
  while (true) {
    if (static_cast<int>(w.size()) == weight)
      out.push_back(LyndonWord(w));
    // Extend periodically to the target length.
    std::vector<int> x;
    x.reserve(weight);
    for (int i = 0; i < weight; ++i) x.push_back(w[i % w.size()]);
    while (!x.empty() && x.back() == alphabet_size - 1) x.pop_back();
    if (x.empty()) break;
    ++x.back();
    w = std::move(x);
  }
  return out;
}

namespace {

int moebius(int n) {
  int result = 1;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      n /= p;
      if (n % p == 0) return 0;  // squared prime factor
      result = -result;
    }
  }
  if (n > 1) result = -result;
  return result;
}

}  // namespace

Int witt_dimension(int alphabet_size, int weight) {
  require(alphabet_size >= 1, "witt_dimension: alphabet_size must be >= 1");
  require(weight >= 1, "witt_dimension: weight must be >= 1");
  Int sum = 0;
  for (int d = 1; d <= weight; ++d) {
    if (weight % d != 0) continue;
    int mu = moebius(d);
    if (mu == 0) continue;
    Int p;
    mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(alphabet_size),
                  static_cast<unsigned long>(weight / d));
    sum += mu * p;
  }
  return sum / weight;
}

std::pair<LyndonWord, LyndonWord> standard_factorization(const LyndonWord& w) {
  require(w.weight() >= 2, "standard_factorization: weight-1 word");
  const auto& letters = w.letters();
  const size_t n = letters.size();
  // The right factor is the longest proper Lyndon suffix, i.e. the suffix at
  // the smallest split position that is itself Lyndon.
  for (size_t p = 1; p < n; ++p) {
    std::span<const int> suffix(letters.data() + p, n - p);
    if (LyndonWord::is_lyndon(suffix)) {
      return {LyndonWord(std::vector<int>(letters.begin(), letters.begin() + p)),
              LyndonWord(std::vector<int>(suffix.begin(), suffix.end()))};
    }
  }
  throw std::logic_error("standard_factorization: no Lyndon suffix");  // unreachable
}

// ---------------------------------------------------------------------------
// FreeLieElement
// ---------------------------------------------------------------------------

FreeLieElement::FreeLieElement(int truncation) : truncation_(truncation) {
  require(truncation >= 1, "FreeLieElement: truncation must be >= 1");
}

FreeLieElement FreeLieElement::basis_term(const LyndonWord& w, int truncation) {
  FreeLieElement e(truncation);
  e.add(w, 1);
  return e;
}

FreeLieElement FreeLieElement::generator(int letter, int truncation) {
  return basis_term(LyndonWord({letter}), truncation);
}

void FreeLieElement::add(const LyndonWord& w, const Int& c) {
  if (c == 0 || w.weight() > truncation_) return;
  auto it = terms_.find(w);
  if (it == terms_.end()) {
    terms_.emplace(w, c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

FreeLieElement& FreeLieElement::operator+=(const FreeLieElement& o) {
  for (const auto& [w, c] : o.terms_) add(w, c);
  return *this;
}

FreeLieElement& FreeLieElement::operator-=(const FreeLieElement& o) {
  for (const auto& [w, c] : o.terms_) add(w, -c);
  return *this;
}

FreeLieElement& FreeLieElement::scale(const Int& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, coeff] : terms_) coeff *= c;
  return *this;
}

FreeLieElement FreeLieElement::operator-() const {
  FreeLieElement r = *this;
  for (auto& [w, coeff] : r.terms_) coeff = -coeff;
  return r;
}

// ---------------------------------------------------------------------------
// Bracket rewriting
// ---------------------------------------------------------------------------

namespace {

using WordPair = std::pair<std::vector<int>, std::vector<int>>;

std::mutex bracket_mutex;
std::map<WordPair, FreeLieElement>& bracket_memo() {
  static std::map<WordPair, FreeLieElement> memo;
  return memo;
}

FreeLieElement bracket_words(const LyndonWord& u, const LyndonWord& v,
                             std::set<WordPair>& in_progress);

// [x, lambda(w)] for an element x, both homogeneous, no truncation.
FreeLieElement bracket_elem_word(const FreeLieElement& x, const LyndonWord& w,
                                 int weight, std::set<WordPair>& in_progress) {
  FreeLieElement out(weight);
  for (const auto& [a, c] : x.terms()) {
    if (a == w) continue;
    if (a < w) {
      FreeLieElement b = bracket_words(a, w, in_progress);
      b.scale(c);
      out += b;
    } else {
      FreeLieElement b = bracket_words(w, a, in_progress);
      b.scale(-c);
      out += b;
    }
  }
  return out;
}

// Canonical bracket of basis words u < v (lexicographically), classical
// rewriting: emit the concatenation when it carries the standard
// factorization (u, v), i.e. when u is a letter or its right standard factor
// is >= v; otherwise apply Jacobi along the standard factorization of u.
FreeLieElement bracket_words(const LyndonWord& u, const LyndonWord& v,
                             std::set<WordPair>& in_progress) {
  WordPair key{u.letters(), v.letters()};
  {
    std::lock_guard<std::mutex> lock(bracket_mutex);
    auto it = bracket_memo().find(key);
    if (it != bracket_memo().end()) return it->second;
  }
  if (!in_progress.insert(key).second)
    throw std::logic_error("basis_bracket: rewriting cycle");

  const int weight = u.weight() + v.weight();
  FreeLieElement result(weight);

  bool emit = u.weight() == 1;
  LyndonWord u1({0}), u2({0});
  if (!emit) {
    std::tie(u1, u2) = standard_factorization(u);
    emit = !(u2 < v);
  }
  if (emit) {
    result.add(LyndonWord::concat(u, v), 1);
  } else {
    // [lambda(u), lambda(v)] = [u1, [u2, v]] - [u2, [u1, v]]
    FreeLieElement t1 = bracket_elem_word(bracket_words(u2, v, in_progress), u1,
                                          weight, in_progress);
    t1.scale(-1);  // [[u2,v],u1] -> [u1,[u2,v]]
    FreeLieElement t2 = bracket_elem_word(bracket_words(u1, v, in_progress), u2,
                                          weight, in_progress);
    result += t1;
    result += t2;  // [[u1,v],u2] = -[u2,[u1,v]]
  }

  in_progress.erase(key);
  {
    std::lock_guard<std::mutex> lock(bracket_mutex);
    bracket_memo().emplace(key, result);
  }
  return result;
}

}  // namespace

FreeLieElement basis_bracket(const LyndonWord& u, const LyndonWord& v,
                             int truncation) {
  require(truncation >= 1, "basis_bracket: truncation must be >= 1");
  FreeLieElement out(truncation);
  if (u.weight() + v.weight() > truncation || u == v) return out;
  std::set<WordPair> in_progress;
  if (u < v) {
    out += bracket_words(u, v, in_progress);
  } else {
    out -= bracket_words(v, u, in_progress);
  }
  return out;
}

FreeLieElement free_bracket(const FreeLieElement& x, const FreeLieElement& y,
                            int truncation) {
  require(truncation >= 1, "free_bracket: truncation must be >= 1");
  FreeLieElement out(truncation);
  for (const auto& [u, cu] : x.terms()) {
    for (const auto& [v, cv] : y.terms()) {
      if (u.weight() + v.weight() > truncation) continue;
      FreeLieElement b = basis_bracket(u, v, truncation);
      b.scale(cu * cv);
      out += b;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// AssocPoly and expansion
// ---------------------------------------------------------------------------

AssocPoly AssocPoly::word(Word w, Int c) {
  AssocPoly p;
  p.add(w, c);
  return p;
}

void AssocPoly::add(const Word& w, const Int& c) {
  if (c == 0) return;
  auto it = terms_.find(w);
  if (it == terms_.end()) {
    terms_.emplace(w, c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

AssocPoly& AssocPoly::operator+=(const AssocPoly& o) {
  for (const auto& [w, c] : o.terms_) add(w, c);
  return *this;
}

AssocPoly& AssocPoly::operator-=(const AssocPoly& o) {
  for (const auto& [w, c] : o.terms_) add(w, -c);
  return *this;
}

AssocPoly operator*(const AssocPoly& a, const AssocPoly& b) {
  AssocPoly out;
  for (const auto& [u, cu] : a.terms_) {
    for (const auto& [v, cv] : b.terms_) {
      AssocPoly::Word w = u;
      w.insert(w.end(), v.begin(), v.end());
      out.add(w, cu * cv);
    }
  }
  return out;
}

namespace {

std::mutex expand_mutex;
std::map<std::vector<int>, AssocPoly>& expand_memo() {
  static std::map<std::vector<int>, AssocPoly> memo;
  return memo;
}

}  // namespace

AssocPoly expand(const LyndonWord& w) {
  {
    std::lock_guard<std::mutex> lock(expand_mutex);
    auto it = expand_memo().find(w.letters());
    if (it != expand_memo().end()) return it->second;
  }
  AssocPoly result;
  if (w.weight() == 1) {
    result = AssocPoly::word(w.letters());
  } else {
    auto [u, v] = standard_factorization(w);
    AssocPoly eu = expand(u);
    AssocPoly ev = expand(v);
    result = eu * ev;
    result -= ev * eu;
  }
  {
    std::lock_guard<std::mutex> lock(expand_mutex);
    expand_memo().emplace(w.letters(), result);
  }
  return result;
}

AssocPoly expand(const FreeLieElement& x) {
  AssocPoly out;
  for (const auto& [w, c] : x.terms()) {
    AssocPoly e = expand(w);
    for (const auto& [word, coeff] : e.terms()) out.add(word, coeff * c);
  }
  return out;
}

}  // namespace polyfree
