#pragma once

#include <map>
#include <set>
#include <vector>

#include "gapvir/algebra.hpp"
#include "gapvir/scalar.hpp"

namespace gapvir {

/// A highest weight: the values of L_0 and of the central elements on the
/// vacuum vector. The array holds one slot per central symbol C_0..C_{p-1};
/// bracket-produced central terms evaluate through the canonical slot of
/// their class pair.
struct HighestWeight {
  GapParam p;
  Scalar h;               // value on L_0
  std::vector<Scalar> c;  // values on C_0..C_{p-1}

  HighestWeight(GapParam p_, Scalar h_, std::vector<Scalar> c_);

  bool is_zero() const;
  /// Value used when a central element of class i acts.
  const Scalar& central_value(int i) const;
};

/// Monomial L_{-m_1} ... L_{-m_r} applied to the vacuum, parts m_1 >= ... >= m_r >= 1.
/// The empty monomial is the vacuum itself.
struct PBWMonomial {
  std::vector<long> parts;

  long depth() const;
  bool operator<(const PBWMonomial& o) const;
  bool operator==(const PBWMonomial& o) const { return parts == o.parts; }
};

/// All partitions of n as non-increasing sequences, in reverse-lexicographic
/// order (largest first part first).
std::vector<PBWMonomial> pbw_basis(long n);

/// Finitely supported rational combination of PBW monomials.
class VermaVector {
 public:
  VermaVector() = default;

  static VermaVector vacuum() { return monomial(PBWMonomial{}); }
  static VermaVector monomial(PBWMonomial m, Scalar coeff = Scalar(1));

  void add(const PBWMonomial& m, const Scalar& coeff);
  Scalar coeff(const PBWMonomial& m) const;
  bool is_zero() const { return coords_.empty(); }
  const std::map<PBWMonomial, Scalar>& coords() const { return coords_; }

  VermaVector& operator+=(const VermaVector& o);
  VermaVector& operator-=(const VermaVector& o);
  VermaVector& operator*=(const Scalar& s);
  friend VermaVector operator+(VermaVector a, const VermaVector& b) { return a += b; }
  friend VermaVector operator-(VermaVector a, const VermaVector& b) { return a -= b; }
  friend VermaVector operator*(const Scalar& s, VermaVector a) { return a *= s; }

  friend bool operator==(const VermaVector& a, const VermaVector& b) {
    return a.coords_ == b.coords_;
  }
  friend bool operator!=(const VermaVector& a, const VermaVector& b) {
    return !(a == b);
  }

 private:
  std::map<PBWMonomial, Scalar> coords_;
};

/// Applies a generator and rewrites the result in canonical PBW form. The
/// positive part annihilates the vacuum; L_0 and the C_i evaluate through
/// the weight on the vacuum. L_k maps depth d to depth d - k.
VermaVector verma_act(const HighestWeight& hw, Generator g, const VermaVector& v);

/// Linear extension to algebra elements (central part evaluates through
/// the weight).
VermaVector verma_act(const HighestWeight& hw, const AlgebraElement& x,
                      const VermaVector& v);

/// Irreducibility bookkeeping per the stored weight slots:
/// I = { 1 <= i <= p-1 : c_i = 0 }; the module is irreducible iff I is empty.
struct VermaVerdict {
  std::set<int> I;
  bool irreducible = false;
  bool lambda_zero = false;  // the trivial-quotient case
};

VermaVerdict verma_verdict(const HighestWeight& hw);

/// Basis of the space of depth-d vectors annihilated by every L_k, k >= 1
/// (only k <= d can act nontrivially). Exact kernel over the PBW basis.
std::vector<VermaVector> singular_vectors(const HighestWeight& hw, long depth);

}  // namespace gapvir
