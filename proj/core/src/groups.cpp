#include "polyfree/groups.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace polyfree {

namespace {

void require(bool cond, const std::string& msg) {
  if (!cond) throw std::invalid_argument(msg);
}

}  // namespace

// ---------------------------------------------------------------------------
// FreeWord
// ---------------------------------------------------------------------------

FreeWord::FreeWord(std::vector<Letter> letters) {
  for (const auto& l : letters) {
    require(l.gen >= 0, "FreeWord: negative generator index");
    require(l.exp == 1 || l.exp == -1, "FreeWord: exponent must be +-1");
    if (!letters_.empty() && letters_.back().gen == l.gen &&
        letters_.back().exp == -l.exp) {
      letters_.pop_back();
    } else {
      letters_.push_back(l);
    }
  }
}

FreeWord FreeWord::generator(int gen, int exp) {
  require(exp == 1 || exp == -1, "FreeWord::generator: exponent must be +-1");
  return FreeWord({{gen, exp}});
}

int FreeWord::max_generator() const {
  int m = -1;
  for (const auto& l : letters_) m = std::max(m, l.gen);
  return m;
}

FreeWord FreeWord::inverse() const {
  FreeWord r;
  r.letters_.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
    r.letters_.push_back({it->gen, -it->exp});
  return r;  // reversal of a reduced word is reduced
}

FreeWord operator*(const FreeWord& a, const FreeWord& b) {
  std::vector<FreeWord::Letter> all = a.letters_;
  all.insert(all.end(), b.letters_.begin(), b.letters_.end());
  return FreeWord(std::move(all));
}

FreeWord FreeWord::pow(int k) const {
  FreeWord base = k >= 0 ? *this : inverse();
  FreeWord out;
  for (int t = 0; t < std::abs(k); ++t) out = out * base;
  return out;
}

long long FreeWord::exponent_sum(int gen) const {
  long long s = 0;
  for (const auto& l : letters_)
    if (l.gen == gen) s += l.exp;
  return s;
}

std::string format_word(const FreeWord& w, const std::vector<std::string>& names) {
  std::ostringstream os;
  size_t i = 0;
  const auto& ls = w.letters();
  bool first = true;
  while (i < ls.size()) {
    size_t j = i;
    while (j < ls.size() && ls[j].gen == ls[i].gen && ls[j].exp == ls[i].exp) ++j;
    int run = static_cast<int>(j - i) * ls[i].exp;
    if (!first) os << " ";
    first = false;
    if (ls[i].gen >= static_cast<int>(names.size()))
      throw std::invalid_argument("format_word: generator without a name");
    os << names[ls[i].gen];
    if (run != 1) os << "^" << run;
    i = j;
  }
  return os.str();
}

FreeWord parse_word(const std::string& text, const std::vector<std::string>& names) {
  std::istringstream is(text);
  std::string token;
  std::vector<FreeWord::Letter> letters;
  while (is >> token) {
    std::string name = token;
    int exp = 1;
    if (auto pos = token.find('^'); pos != std::string::npos) {
      name = token.substr(0, pos);
      try {
        exp = std::stoi(token.substr(pos + 1));
      } catch (const std::exception&) {
        throw std::invalid_argument("parse_word: bad exponent in '" + token + "'");
      }
    }
    auto it = std::find(names.begin(), names.end(), name);
    if (it == names.end())
      throw std::invalid_argument("parse_word: unknown generator '" + name + "'");
    int gen = static_cast<int>(it - names.begin());
    for (int t = 0; t < std::abs(exp); ++t)
      letters.push_back({gen, exp >= 0 ? 1 : -1});
  }
  return FreeWord(std::move(letters));
}

// ---------------------------------------------------------------------------
// Endomorphisms and the McCool presentation
// ---------------------------------------------------------------------------

Endomorphism::Endomorphism(int rank, std::vector<FreeWord> images)
    : rank_(rank), images_(std::move(images)) {
  require(rank >= 1, "Endomorphism: rank must be >= 1");
  require(static_cast<int>(images_.size()) == rank,
          "Endomorphism: need one image per generator");
  for (const auto& w : images_)
    require(w.max_generator() < rank, "Endomorphism: image uses unknown generator");
}

Endomorphism Endomorphism::identity(int rank) {
  std::vector<FreeWord> images;
  for (int i = 0; i < rank; ++i) images.push_back(FreeWord::generator(i));
  return Endomorphism(rank, std::move(images));
}

FreeWord Endomorphism::apply(const FreeWord& w) const {
  require(w.max_generator() < rank_, "Endomorphism::apply: word out of range");
  FreeWord out;
  for (const auto& l : w.letters())
    out = out * (l.exp == 1 ? images_[l.gen] : images_[l.gen].inverse());
  return out;
}

Endomorphism Endomorphism::compose(const Endomorphism& inner) const {
  require(rank_ == inner.rank_, "Endomorphism::compose: rank mismatch");
  std::vector<FreeWord> images;
  images.reserve(rank_);
  for (const auto& w : inner.images_) images.push_back(apply(w));
  return Endomorphism(rank_, std::move(images));
}

Endomorphism mccool_automorphism(int n, int i, int j) {
  require(1 <= i && i <= n && 1 <= j && j <= n, "mccool_automorphism: index range");
  require(i != j, "mccool_automorphism: i == j");
  std::vector<FreeWord> images;
  for (int k = 1; k <= n; ++k) {
    if (k == j) {
      images.push_back(FreeWord::generator(i - 1, -1) * FreeWord::generator(j - 1) *
                       FreeWord::generator(i - 1));
    } else {
      images.push_back(FreeWord::generator(k - 1));
    }
  }
  return Endomorphism(n, std::move(images));
}

Endomorphism mccool_automorphism_inverse(int n, int i, int j) {
  require(1 <= i && i <= n && 1 <= j && j <= n, "mccool_automorphism: index range");
  require(i != j, "mccool_automorphism: i == j");
  std::vector<FreeWord> images;
  for (int k = 1; k <= n; ++k) {
    if (k == j) {
      images.push_back(FreeWord::generator(i - 1) * FreeWord::generator(j - 1) *
                       FreeWord::generator(i - 1, -1));
    } else {
      images.push_back(FreeWord::generator(k - 1));
    }
  }
  return Endomorphism(n, std::move(images));
}

McCoolReport verify_mccool_relations(int n) {
  require(n >= 3, "verify_mccool_relations: n must be >= 3");
  McCoolReport report;
  const Endomorphism id = Endomorphism::identity(n);
  auto beta = [n](int i, int j) { return mccool_automorphism(n, i, j); };
  auto beta_inv = [n](int i, int j) { return mccool_automorphism_inverse(n, i, j); };
  auto commutator = [](const Endomorphism& f, const Endomorphism& finv,
                       const Endomorphism& g, const Endomorphism& ginv) {
    return f.compose(g).compose(finv).compose(ginv);
  };

  // [b_{i,j}, b_{k,l}] = 1 for distinct indices.
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      for (int k = 1; k <= n; ++k)
        for (int l = 1; l <= n; ++l) {
          if (i == j || k == l) continue;
          if (i == k || i == l || j == k || j == l) continue;
          ++report.relations_checked;
          if (!(commutator(beta(i, j), beta_inv(i, j), beta(k, l), beta_inv(k, l)) == id))
            report.failures.push_back({1, {i, j, k, l}});
        }

  // [b_{i,j}, b_{i,k}] = 1 for distinct indices.
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      for (int k = 1; k <= n; ++k) {
        if (i == j || i == k || j == k) continue;
        ++report.relations_checked;
        if (!(commutator(beta(i, j), beta_inv(i, j), beta(i, k), beta_inv(i, k)) == id))
          report.failures.push_back({2, {i, j, k, 0}});
      }

  // [b_{j,k}, b_{i,j} b_{i,k}] = 1 for distinct indices.
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      for (int k = 1; k <= n; ++k) {
        if (i == j || i == k || j == k) continue;
        ++report.relations_checked;
        Endomorphism g = beta(i, j).compose(beta(i, k));
        Endomorphism ginv = beta_inv(i, k).compose(beta_inv(i, j));
        if (!(commutator(beta(j, k), beta_inv(j, k), g, ginv) == id))
          report.failures.push_back({3, {i, j, k, 0}});
      }

  // Witness: [b_{1,3}, b_{1,2} b_{2,3}] is not a relation.
  {
    Endomorphism g = beta(1, 2).compose(beta(2, 3));
    Endomorphism ginv = beta_inv(2, 3).compose(beta_inv(1, 2));
    Endomorphism w = commutator(beta(1, 3), beta_inv(1, 3), g, ginv);
    report.witness_is_identity = w == id;
    report.witness_image_of_x3 = w.images()[2];
  }
  return report;
}

// ---------------------------------------------------------------------------
// Poison group normal forms
// ---------------------------------------------------------------------------

namespace {

// rho(phi_i^e): a_3 -> a_3 a_i^e, a_1 and a_2 fixed.
FreeWord act_letter(const FreeWord::Letter& phi, const FreeWord& w) {
  FreeWord out;
  const FreeWord a3 = FreeWord::generator(2);
  for (const auto& l : w.letters()) {
    if (l.gen != 2) {
      out = out * FreeWord::generator(l.gen, l.exp);
    } else if (l.exp == 1) {
      out = out * a3 * FreeWord::generator(phi.gen, phi.exp);
    } else {
      out = out * FreeWord::generator(phi.gen, -phi.exp) * a3.inverse();
    }
  }
  return out;
}

// rho(v)(w): v acts through the composition of its letters, leftmost
// outermost, so rho(v1 v2) = rho(v1) o rho(v2).
FreeWord act(const FreeWord& v, const FreeWord& w) {
  FreeWord out = w;
  for (auto it = v.letters().rbegin(); it != v.letters().rend(); ++it)
    out = act_letter(*it, out);
  return out;
}

}  // namespace

PoisonElement poison_multiply(const PoisonElement& g, const PoisonElement& h) {
  return {g.w * act(g.v, h.w), g.v * h.v};
}

PoisonElement poison_inverse(const PoisonElement& g) {
  FreeWord vinv = g.v.inverse();
  return {act(vinv, g.w.inverse()), vinv};
}

std::pair<FreeWord, std::array<long long, 3>> poison_p_alpha(const PoisonElement& g) {
  return {g.v,
          {g.v.exponent_sum(0), g.v.exponent_sum(1), g.w.exponent_sum(2)}};
}

}  // namespace polyfree
