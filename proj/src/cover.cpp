#include "gapvir/cover.hpp"

#include <stdexcept>

namespace gapvir {

void TensorVector::add(long s, long w, const Scalar& coeff) {
  const auto key = std::make_pair(s, w);
  auto it = terms_.find(key);
  if (it == terms_.end()) {
    if (!coeff.is_zero()) terms_.emplace(key, coeff);
    return;
  }
  it->second += coeff;
  if (it->second.is_zero()) terms_.erase(it);
}

TensorVector& TensorVector::operator+=(const TensorVector& o) {
  for (const auto& [key, c] : o.terms_) add(key.first, key.second, c);
  return *this;
}

TensorVector& TensorVector::operator-=(const TensorVector& o) {
  for (const auto& [key, c] : o.terms_) add(key.first, key.second, -c);
  return *this;
}

TensorVector& TensorVector::operator*=(const Scalar& s) {
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [key, c] : terms_) c *= s;
  return *this;
}

TensorVector tensor_act_t(const MoisSpec& spec, long n, const TensorVector& t) {
  if (!is_gap_multiple(n, spec.p))
    throw std::invalid_argument("tensor_act_t: shift index must lie in p*Z");
  TensorVector out;
  for (const auto& [key, c] : t.terms()) out.add(key.first + n, key.second, c);
  return out;
}

TensorVector tensor_act_L(const MoisSpec& spec, long k, const TensorVector& t) {
  TensorVector out;
  for (const auto& [key, c] : t.terms()) {
    const auto [s, w] = key;
    // Bracket in the centerless algebra: only the L part contributes, and
    // it stays outside p*Z.
    const AlgebraElement br =
        bracket(AlgebraElement::L(spec.p, k), AlgebraElement::L(spec.p, s));
    for (const auto& [j, bc] : br.l_part()) out.add(j, w, c * bc);
    const WeightVector moved =
        mois_act(spec, Generator::L(k), WeightVector::basis(w));
    for (const auto& [w2, mc] : moved.coords()) out.add(s, w2, c * mc);
  }
  return out;
}

WeightVector pi_map(const MoisSpec& spec, const TensorVector& t) {
  WeightVector out;
  for (const auto& [key, c] : t.terms()) {
    WeightVector term = mois_act(spec, Generator::L(key.first),
                                 WeightVector::basis(key.second));
    term *= c;
    out += term;
  }
  return out;
}

namespace {

WeightVector shifted_sum(const MoisSpec& spec, const TensorVector& t, long n) {
  WeightVector out;
  for (const auto& [key, c] : t.terms()) {
    WeightVector term = mois_act(spec, Generator::L(key.first + n),
                                 WeightVector::basis(key.second));
    term *= c;
    out += term;
  }
  return out;
}

}  // namespace

bool j_membership(const MoisSpec& spec, const TensorVector& t) {
  const long p = spec.p.value();
  for (long n : {0L, p, -p})
    if (!shifted_sum(spec, t, n).is_zero()) return false;
  return true;
}

WeightVector omega_apply(const MoisSpec& spec, long m, long n, long l,
                         const WeightVector& v) {
  if (!is_gap_multiple(m, spec.p) || !is_gap_multiple(n, spec.p))
    throw std::invalid_argument("omega_apply: m and n must lie in p*Z");
  if (l < 0) throw std::invalid_argument("omega_apply: l must be nonnegative");
  WeightVector out;
  Scalar sign(1);
  for (long i = 0; i <= l; ++i) {
    WeightVector term = mois_act(spec, Generator::L(i * n), v);
    term = mois_act(spec, Generator::L(m - i * n), term);
    term *= sign * binomial(l, i);
    out += term;
    sign = -sign;
  }
  return out;
}

std::optional<long> omega_min_l(const MoisSpec& spec, long m, long n, long window,
                                long l_max) {
  for (long l = 0; l <= l_max; ++l) {
    bool annihilates = true;
    for (long w = -window; w <= window && annihilates; ++w) {
      if (!spec.valid_weight_index(w)) continue;
      if (!omega_apply(spec, m, n, l, WeightVector::basis(w)).is_zero())
        annihilates = false;
    }
    if (annihilates) return l;
  }
  return std::nullopt;
}

}  // namespace gapvir
