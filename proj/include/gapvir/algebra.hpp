#pragma once

#include <functional>
#include <map>
#include <vector>

#include "gapvir/report.hpp"
#include "gapvir/scalar.hpp"

namespace gapvir {

/// The gap parameter p >= 2. Virasoro-type relations hold between the
/// generators L_m with m in p*Z; the remaining L_r pair up Heisenberg-style.
class GapParam {
 public:
  explicit GapParam(int p);
  int value() const { return p_; }

  friend bool operator==(GapParam a, GapParam b) { return a.p_ == b.p_; }
  friend bool operator!=(GapParam a, GapParam b) { return a.p_ != b.p_; }

 private:
  int p_;
};

/// Residue of m modulo p, always in [0, p).
int residue(long m, GapParam p);

/// True when m lies in p*Z.
bool is_gap_multiple(long m, GapParam p);

/// Central generators come in pairs: class i and class p-i name the same
/// element (forced by antisymmetry of the bracket). Canonical index is
/// min(i, p-i) for 1 <= i < p, and 0 for the Virasoro charge.
int canonical_central_index(int i, GapParam p);

/// A single named generator, L_m or C_i.
struct Generator {
  enum class Kind { L, C };
  Kind kind;
  long index;

  static Generator L(long m) { return {Kind::L, m}; }
  static Generator C(long i) { return {Kind::C, i}; }
};

/// Sparse linear combination of the generators L_m (m in Z) and the
/// central elements C_0..C_{p-1}, with exact rational coefficients.
/// Stored zero coefficients are never kept in the L part; the C part is a
/// dense array of length p.
class AlgebraElement {
 public:
  explicit AlgebraElement(GapParam p);

  static AlgebraElement zero(GapParam p) { return AlgebraElement(p); }
  static AlgebraElement L(GapParam p, long m, const Scalar& coeff = Scalar(1));
  static AlgebraElement C(GapParam p, int i, const Scalar& coeff = Scalar(1));
  static AlgebraElement make(GapParam p, Generator g);

  GapParam p() const { return p_; }
  const std::map<long, Scalar>& l_part() const { return l_; }
  const std::vector<Scalar>& c_part() const { return c_; }

  Scalar l_coeff(long m) const;
  void add_l(long m, const Scalar& coeff);
  void add_c(int i, const Scalar& coeff);

  bool is_zero() const;

  AlgebraElement& operator+=(const AlgebraElement& o);
  AlgebraElement& operator-=(const AlgebraElement& o);
  AlgebraElement& operator*=(const Scalar& s);
  friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
  friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }
  friend AlgebraElement operator*(const Scalar& s, AlgebraElement a) { return a *= s; }

  friend bool operator==(const AlgebraElement& a, const AlgebraElement& b);
  friend bool operator!=(const AlgebraElement& a, const AlgebraElement& b) { return !(a == b); }

 private:
  GapParam p_;
  std::map<long, Scalar> l_;
  std::vector<Scalar> c_;
};

/// Bracket rule on generator pairs [L_a, L_b], pluggable so that axiom
/// sweeps can be rerun against mutated structure constants.
using PairRule = std::function<AlgebraElement(GapParam, long, long)>;

/// The structure constants of the algebra:
///   [L_m, L_n] = (n-m) L_{m+n} + d_{m+n,0} ((m/p)^3 - m/p)/12 C_0
///   [L_m, L_r] = r L_{m+r}
///   [L_r, L_s] = d_{r+s,0} r C_{min(rbar, p-rbar)}
/// for m, n in p*Z and r, s outside p*Z.
AlgebraElement bracket_generators(GapParam p, long a, long b);

/// Bilinear extension of the generator rules. Central generators bracket
/// to zero with everything. Throws std::invalid_argument on mismatched p.
AlgebraElement bracket(const AlgebraElement& x, const AlgebraElement& y);

/// Bracket with an explicit pair rule (testing hook).
AlgebraElement bracket(const AlgebraElement& x, const AlgebraElement& y,
                       const PairRule& rule);

/// Checks antisymmetry over all generator pairs and the Jacobi identity
/// over all generator triples with |index| <= window. Lists every
/// violating tuple.
Report check_lie_axioms(GapParam p, long window,
                        const PairRule& rule = bracket_generators);

/// Checks that x_i -> (1/p) L_{pi}, K_x -> C_0 / p^2 intertwines the
/// Virasoro bracket [x_i, x_j] = (j-i) x_{i+j} + d_{i+j,0} (i^3-i)/12 K_x
/// with the bracket above, for all |i|, |j| <= window.
Report vir_embedding_check(GapParam p, long window);

}  // namespace gapvir
