#pragma once

#include <map>
#include <optional>
#include <utility>

#include "gapvir/mois.hpp"

namespace gapvir {

/// Finitely supported element sum_{s,w} c_{s,w} L_s (x) v_w of the tensor
/// module over a module of intermediate series. Every s lies outside p*Z.
class TensorVector {
 public:
  TensorVector() = default;

  void add(long s, long w, const Scalar& coeff);
  bool is_zero() const { return terms_.empty(); }
  const std::map<std::pair<long, long>, Scalar>& terms() const { return terms_; }

  TensorVector& operator+=(const TensorVector& o);
  TensorVector& operator-=(const TensorVector& o);
  TensorVector& operator*=(const Scalar& s);
  friend TensorVector operator+(TensorVector a, const TensorVector& b) { return a += b; }
  friend TensorVector operator-(TensorVector a, const TensorVector& b) { return a -= b; }

  friend bool operator==(const TensorVector& a, const TensorVector& b) {
    return a.terms_ == b.terms_;
  }
  friend bool operator!=(const TensorVector& a, const TensorVector& b) {
    return !(a == b);
  }

 private:
  std::map<std::pair<long, long>, Scalar> terms_;
};

/// Associative shift t^n (L_s (x) w) = L_{s+n} (x) w; requires n in p*Z.
TensorVector tensor_act_t(const MoisSpec& spec, long n, const TensorVector& t);

/// Lie action L_k (L_s (x) w) = [L_k, L_s] (x) w + L_s (x) L_k w, with the
/// bracket taken in the centerless algebra and the module action delegated
/// to mois_act.
TensorVector tensor_act_L(const MoisSpec& spec, long k, const TensorVector& t);

/// The evaluation map L_s (x) w -> L_s w into the module.
WeightVector pi_map(const MoisSpec& spec, const TensorVector& t);

/// Membership in J = { sum L_s (x) w_s : sum L_{s+n} w_s = 0 for all n in p*Z }.
/// The action coefficients depend on residues only, so the n = 0 check
/// decides membership; n = +-p are evaluated as redundancy guards.
bool j_membership(const MoisSpec& spec, const TensorVector& t);

/// The alternating-binomial operator
///   sum_{i=0}^{l} (-1)^i C(l, i) L_{m-in} L_{in}
/// applied to v (L_{in} first). Requires m, n in p*Z and l >= 0.
WeightVector omega_apply(const MoisSpec& spec, long m, long n, long l,
                         const WeightVector& v);

/// Smallest l <= l_max for which omega_apply kills every basis vector with
/// |w| <= window; nullopt when none does.
std::optional<long> omega_min_l(const MoisSpec& spec, long m, long n, long window,
                                long l_max);

}  // namespace gapvir
