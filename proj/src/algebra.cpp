#include "gapvir/algebra.hpp"

#include <stdexcept>
#include <string>

namespace gapvir {

GapParam::GapParam(int p) : p_(p) {
  if (p < 2) throw std::invalid_argument("GapParam: p must be at least 2");
}

int residue(long m, GapParam p) {
  long r = m % p.value();
  return static_cast<int>(r < 0 ? r + p.value() : r);
}

bool is_gap_multiple(long m, GapParam p) { return m % p.value() == 0; }

int canonical_central_index(int i, GapParam p) {
  if (i == 0) return 0;
  return std::min(i, p.value() - i);
}

AlgebraElement::AlgebraElement(GapParam p)
    : p_(p), c_(static_cast<std::size_t>(p.value())) {}

AlgebraElement AlgebraElement::L(GapParam p, long m, const Scalar& coeff) {
  AlgebraElement e(p);
  e.add_l(m, coeff);
  return e;
}

AlgebraElement AlgebraElement::C(GapParam p, int i, const Scalar& coeff) {
  AlgebraElement e(p);
  e.add_c(i, coeff);
  return e;
}

AlgebraElement AlgebraElement::make(GapParam p, Generator g) {
  return g.kind == Generator::Kind::L ? L(p, g.index)
                                      : C(p, static_cast<int>(g.index));
}

Scalar AlgebraElement::l_coeff(long m) const {
  auto it = l_.find(m);
  return it == l_.end() ? Scalar(0) : it->second;
}

void AlgebraElement::add_l(long m, const Scalar& coeff) {
  auto it = l_.find(m);
  if (it == l_.end()) {
    if (!coeff.is_zero()) l_.emplace(m, coeff);
    return;
  }
  it->second += coeff;
  if (it->second.is_zero()) l_.erase(it);
}

void AlgebraElement::add_c(int i, const Scalar& coeff) {
  if (i < 0 || i >= p_.value())
    throw std::invalid_argument("AlgebraElement: central index out of range");
  c_[static_cast<std::size_t>(i)] += coeff;
}

bool AlgebraElement::is_zero() const {
  if (!l_.empty()) return false;
  for (const Scalar& s : c_)
    if (!s.is_zero()) return false;
  return true;
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& o) {
  if (p_ != o.p_) throw std::invalid_argument("AlgebraElement: mismatched p");
  for (const auto& [m, c] : o.l_) add_l(m, c);
  for (int i = 0; i < p_.value(); ++i) c_[i] += o.c_[i];
  return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& o) {
  if (p_ != o.p_) throw std::invalid_argument("AlgebraElement: mismatched p");
  for (const auto& [m, c] : o.l_) add_l(m, -c);
  for (int i = 0; i < p_.value(); ++i) c_[i] -= o.c_[i];
  return *this;
}

AlgebraElement& AlgebraElement::operator*=(const Scalar& s) {
  if (s.is_zero()) {
    l_.clear();
    for (Scalar& c : c_) c = Scalar(0);
    return *this;
  }
  for (auto& [m, c] : l_) c *= s;
  for (Scalar& c : c_) c *= s;
  return *this;
}

bool operator==(const AlgebraElement& a, const AlgebraElement& b) {
  return a.p_ == b.p_ && a.l_ == b.l_ && a.c_ == b.c_;
}

AlgebraElement bracket_generators(GapParam p, long a, long b) {
  AlgebraElement out(p);
  const bool ma = is_gap_multiple(a, p);
  const bool mb = is_gap_multiple(b, p);
  if (ma && mb) {
    out.add_l(a + b, Scalar(b - a));
    if (a + b == 0) {
      long k = a / p.value();
      out.add_c(0, Scalar(k * k * k - k, 12));
    }
  } else if (ma) {
    out.add_l(a + b, Scalar(b));
  } else if (mb) {
    out.add_l(a + b, Scalar(-a));
  } else if (a + b == 0) {
    out.add_c(canonical_central_index(residue(a, p), p), Scalar(a));
  }
  return out;
}

AlgebraElement bracket(const AlgebraElement& x, const AlgebraElement& y,
                       const PairRule& rule) {
  if (x.p() != y.p()) throw std::invalid_argument("bracket: mismatched p");
  AlgebraElement out(x.p());
  for (const auto& [a, ca] : x.l_part())
    for (const auto& [b, cb] : y.l_part()) {
      AlgebraElement term = rule(x.p(), a, b);
      term *= ca * cb;
      out += term;
    }
  return out;
}

AlgebraElement bracket(const AlgebraElement& x, const AlgebraElement& y) {
  return bracket(x, y, bracket_generators);
}

namespace {

std::string gen_name(const AlgebraElement& g) {
  if (!g.l_part().empty()) return "L_" + std::to_string(g.l_part().begin()->first);
  for (int i = 0; i < g.p().value(); ++i)
    if (!g.c_part()[static_cast<std::size_t>(i)].is_zero())
      return "C_" + std::to_string(i);
  return "0";
}

}  // namespace

Report check_lie_axioms(GapParam p, long window, const PairRule& rule) {
  Report report;
  std::vector<AlgebraElement> gens;
  std::vector<long> tags;  // index for L generators, window+1+i for C_i
  for (long m = -window; m <= window; ++m) {
    gens.push_back(AlgebraElement::L(p, m));
    tags.push_back(m);
  }
  for (int i = 0; i < p.value(); ++i) {
    gens.push_back(AlgebraElement::C(p, i));
    tags.push_back(window + 1 + i);
  }

  const std::size_t n = gens.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      ++report.checks;
      AlgebraElement sum = bracket(gens[i], gens[j], rule);
      sum += bracket(gens[j], gens[i], rule);
      if (!sum.is_zero())
        report.violations.push_back(
            {"antisymmetry",
             {tags[i], tags[j]},
             "[" + gen_name(gens[i]) + "," + gen_name(gens[j]) + "] + swap != 0"});
    }

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j)
      for (std::size_t k = j; k < n; ++k) {
        ++report.checks;
        AlgebraElement sum = bracket(gens[i], bracket(gens[j], gens[k], rule), rule);
        sum += bracket(gens[j], bracket(gens[k], gens[i], rule), rule);
        sum += bracket(gens[k], bracket(gens[i], gens[j], rule), rule);
        if (!sum.is_zero())
          report.violations.push_back(
              {"jacobi",
               {tags[i], tags[j], tags[k]},
               "jacobiator of " + gen_name(gens[i]) + "," + gen_name(gens[j]) +
                   "," + gen_name(gens[k]) + " != 0"});
      }
  return report;
}

Report vir_embedding_check(GapParam p, long window) {
  Report report;
  const Scalar inv_p(1, p.value());
  const Scalar inv_p2(1, static_cast<long>(p.value()) * p.value());
  for (long i = -window; i <= window; ++i)
    for (long j = -window; j <= window; ++j) {
      ++report.checks;
      // phi([x_i, x_j]) with the Virasoro bracket on the left.
      AlgebraElement lhs(p);
      lhs.add_l(p.value() * (i + j), Scalar(j - i) * inv_p);
      if (i + j == 0) lhs.add_c(0, Scalar(i * i * i - i, 12) * inv_p2);
      // [phi(x_i), phi(x_j)] computed in the algebra.
      AlgebraElement rhs =
          bracket(AlgebraElement::L(p, p.value() * i, inv_p),
                  AlgebraElement::L(p, p.value() * j, inv_p));
      if (lhs != rhs)
        report.violations.push_back(
            {"embedding", {i, j}, "phi([x_i,x_j]) != [phi(x_i),phi(x_j)]"});
    }
  return report;
}

}  // namespace gapvir
