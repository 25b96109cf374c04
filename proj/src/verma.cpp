#include "gapvir/verma.hpp"

#include <numeric>
#include <stdexcept>

#include "gapvir/linalg.hpp"

namespace gapvir {

HighestWeight::HighestWeight(GapParam p_, Scalar h_, std::vector<Scalar> c_)
    : p(p_), h(std::move(h_)), c(std::move(c_)) {
  if (c.size() != static_cast<std::size_t>(p.value()))
    throw std::invalid_argument("HighestWeight: central array must have length p");
}

bool HighestWeight::is_zero() const {
  if (!h.is_zero()) return false;
  for (const Scalar& v : c)
    if (!v.is_zero()) return false;
  return true;
}

const Scalar& HighestWeight::central_value(int i) const {
  if (i < 0 || i >= p.value())
    throw std::invalid_argument("HighestWeight: central index out of range");
  return c[static_cast<std::size_t>(canonical_central_index(i, p))];
}

long PBWMonomial::depth() const {
  return std::accumulate(parts.begin(), parts.end(), 0L);
}

bool PBWMonomial::operator<(const PBWMonomial& o) const {
  const long da = depth(), db = o.depth();
  if (da != db) return da < db;
  return parts < o.parts;
}

std::vector<PBWMonomial> pbw_basis(long n) {
  if (n < 0) throw std::invalid_argument("pbw_basis: negative depth");
  std::vector<PBWMonomial> out;
  std::vector<long> prefix;
  auto gen = [&](auto&& self, long rest, long maxpart) -> void {
    if (rest == 0) {
      out.push_back(PBWMonomial{prefix});
      return;
    }
    for (long first = std::min(maxpart, rest); first >= 1; --first) {
      prefix.push_back(first);
      self(self, rest - first, first);
      prefix.pop_back();
    }
  };
  gen(gen, n, n);
  return out;
}

VermaVector VermaVector::monomial(PBWMonomial m, Scalar coeff) {
  VermaVector v;
  v.add(m, coeff);
  return v;
}

void VermaVector::add(const PBWMonomial& m, const Scalar& coeff) {
  auto it = coords_.find(m);
  if (it == coords_.end()) {
    if (!coeff.is_zero()) coords_.emplace(m, coeff);
    return;
  }
  it->second += coeff;
  if (it->second.is_zero()) coords_.erase(it);
}

Scalar VermaVector::coeff(const PBWMonomial& m) const {
  auto it = coords_.find(m);
  return it == coords_.end() ? Scalar(0) : it->second;
}

VermaVector& VermaVector::operator+=(const VermaVector& o) {
  for (const auto& [m, c] : o.coords_) add(m, c);
  return *this;
}

VermaVector& VermaVector::operator-=(const VermaVector& o) {
  for (const auto& [m, c] : o.coords_) add(m, -c);
  return *this;
}

VermaVector& VermaVector::operator*=(const Scalar& s) {
  if (s.is_zero()) {
    coords_.clear();
    return *this;
  }
  for (auto& [m, c] : coords_) c *= s;
  return *this;
}

namespace {

// Rewrites words of L-generators (applied left to right to the vacuum)
// into canonical PBW form. A word is canonical when its indices are
// negative and non-decreasing; the pair (length, inversions) drops at
// every rewrite step, so the loop terminates.
VermaVector normalize_words(const HighestWeight& hw,
                            std::map<std::vector<long>, Scalar> pending) {
  VermaVector result;
  while (!pending.empty()) {
    auto node = pending.extract(pending.begin());
    std::vector<long> word = std::move(node.key());
    Scalar coeff = std::move(node.mapped());

    // Resolve generators adjacent to the vacuum.
    bool dead = false;
    while (!word.empty() && word.back() >= 0) {
      if (word.back() > 0) {
        dead = true;  // positive part annihilates the vacuum
        break;
      }
      coeff *= hw.h;  // L_0 on the vacuum
      word.pop_back();
      if (coeff.is_zero()) {
        dead = true;
        break;
      }
    }
    if (dead) continue;

    std::size_t inv = word.size();  // rightmost adjacent inversion
    for (std::size_t i = word.size(); i-- > 1;) {
      if (word[i - 1] > word[i]) {
        inv = i - 1;
        break;
      }
    }
    if (inv == word.size()) {
      // Sorted and all negative: canonical.
      std::vector<long> parts(word.size());
      for (std::size_t i = 0; i < word.size(); ++i) parts[i] = -word[i];
      result.add(PBWMonomial{std::move(parts)}, coeff);
      continue;
    }

    std::vector<long> swapped = word;
    std::swap(swapped[inv], swapped[inv + 1]);
    auto push = [&](std::vector<long>&& w, const Scalar& c) {
      if (c.is_zero()) return;
      auto [it, inserted] = pending.emplace(std::move(w), c);
      if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) pending.erase(it);
      }
    };
    push(std::move(swapped), coeff);

    const AlgebraElement br = bracket_generators(hw.p, word[inv], word[inv + 1]);
    for (const auto& [j, c] : br.l_part()) {
      std::vector<long> w;
      w.reserve(word.size() - 1);
      w.insert(w.end(), word.begin(), word.begin() + static_cast<long>(inv));
      w.push_back(j);
      w.insert(w.end(), word.begin() + static_cast<long>(inv) + 2, word.end());
      push(std::move(w), coeff * c);
    }
    for (int i = 0; i < hw.p.value(); ++i) {
      const Scalar& c = br.c_part()[static_cast<std::size_t>(i)];
      if (c.is_zero()) continue;
      std::vector<long> w;
      w.reserve(word.size() - 2);
      w.insert(w.end(), word.begin(), word.begin() + static_cast<long>(inv));
      w.insert(w.end(), word.begin() + static_cast<long>(inv) + 2, word.end());
      push(std::move(w), coeff * c * hw.central_value(i));
    }
  }
  return result;
}

}  // namespace

VermaVector verma_act(const HighestWeight& hw, Generator g, const VermaVector& v) {
  if (g.kind == Generator::Kind::C) {
    VermaVector out = v;
    out *= hw.central_value(static_cast<int>(g.index));
    return out;
  }
  std::map<std::vector<long>, Scalar> words;
  for (const auto& [mono, coeff] : v.coords()) {
    std::vector<long> word;
    word.reserve(mono.parts.size() + 1);
    word.push_back(g.index);
    for (long part : mono.parts) word.push_back(-part);
    auto [it, inserted] = words.emplace(std::move(word), coeff);
    if (!inserted) it->second += coeff;
  }
  return normalize_words(hw, std::move(words));
}

VermaVector verma_act(const HighestWeight& hw, const AlgebraElement& x,
                      const VermaVector& v) {
  if (x.p() != hw.p) throw std::invalid_argument("verma_act: mismatched p");
  VermaVector out;
  for (const auto& [m, c] : x.l_part()) {
    VermaVector term = verma_act(hw, Generator::L(m), v);
    term *= c;
    out += term;
  }
  for (int i = 0; i < hw.p.value(); ++i) {
    const Scalar& c = x.c_part()[static_cast<std::size_t>(i)];
    if (c.is_zero()) continue;
    VermaVector term = v;
    term *= c * hw.central_value(i);
    out += term;
  }
  return out;
}

VermaVerdict verma_verdict(const HighestWeight& hw) {
  VermaVerdict verdict;
  for (int i = 1; i < hw.p.value(); ++i)
    if (hw.c[static_cast<std::size_t>(i)].is_zero()) verdict.I.insert(i);
  verdict.irreducible = verdict.I.empty();
  verdict.lambda_zero = hw.is_zero();
  return verdict;
}

std::vector<VermaVector> singular_vectors(const HighestWeight& hw, long depth) {
  if (depth < 1) throw std::invalid_argument("singular_vectors: depth must be >= 1");
  const std::vector<PBWMonomial> source = pbw_basis(depth);

  RationalMatrix matrix;
  for (long k = 1; k <= depth; ++k) {
    const std::vector<PBWMonomial> target = pbw_basis(depth - k);
    std::map<PBWMonomial, std::size_t> row_of;
    for (std::size_t t = 0; t < target.size(); ++t) row_of.emplace(target[t], t);

    const std::size_t base = matrix.size();
    matrix.resize(base + target.size(),
                  std::vector<Scalar>(source.size(), Scalar(0)));
    for (std::size_t col = 0; col < source.size(); ++col) {
      const VermaVector image =
          verma_act(hw, Generator::L(k), VermaVector::monomial(source[col]));
      for (const auto& [mono, coeff] : image.coords())
        matrix[base + row_of.at(mono)][col] = coeff;
    }
  }

  std::vector<VermaVector> out;
  for (const auto& vec : kernel_basis(std::move(matrix), source.size())) {
    VermaVector v;
    for (std::size_t i = 0; i < source.size(); ++i) v.add(source[i], vec[i]);
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace gapvir
