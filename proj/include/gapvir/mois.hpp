#pragma once

#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "gapvir/algebra.hpp"
#include "gapvir/report.hpp"
#include "gapvir/scalar.hpp"

namespace gapvir {

/// The (p-1) x p coefficient matrix of a module of intermediate series.
/// Row s (1 <= s <= p-1) gives the action coefficients of the generators
/// with residue s; column j indexes the component the generator acts from.
class FMatrix {
 public:
  explicit FMatrix(GapParam p);  // all zero

  GapParam p() const { return p_; }
  const Scalar& at(int s, int j) const;
  void set(int s, int j, const Scalar& v);

  /// Active columns o(F) = { j : f[s][j] != 0 for some s }.
  std::set<int> active_columns() const;
  bool is_zero() const;

  /// Columns shifted by k places (the permutation sigma^k).
  FMatrix shifted_columns(int k) const;

  friend bool operator==(const FMatrix& a, const FMatrix& b);
  friend bool operator!=(const FMatrix& a, const FMatrix& b) { return !(a == b); }

 private:
  GapParam p_;
  std::vector<std::vector<Scalar>> rows_;  // (p-1) rows of p entries
};

/// Per-condition outcome of validate_f, with the first witness found for
/// each violated condition.
struct ValidationReport {
  bool zero_matrix = false;  // degenerate single-component case, valid

  struct Condition {
    bool passed = true;
    std::vector<long> witness;  // empty when passed
    std::string detail;
  };
  Condition cond1;  // 0 in o(F)
  Condition cond2;  // nonzero entries chain onward
  Condition cond3;  // f[r][i+s] f[s][i] = f[s][i+r] f[r][i]

  bool valid() const {
    return zero_matrix || (cond1.passed && cond2.passed && cond3.passed);
  }
};

/// Checks the module conditions on F:
///   (I)   0 lies in o(F);
///   (II)  f[i][j] != 0 implies f[s][(i+j) mod p] != 0 for some s;
///   (III) f[r][(i+s) mod p] f[s][i] = f[s][(i+r) mod p] f[r][i] for all r, s, i.
/// The zero matrix encodes the single-component module and is valid by
/// convention, with (I) and (II) waived.
ValidationReport validate_f(const FMatrix& f);

/// Parameters of a module of intermediate series: basis v_w indexed by the
/// weight indices w with residue in o(F), vector v_w of weight alpha + w.
struct MoisSpec {
  GapParam p;
  Scalar alpha;
  Scalar beta;
  FMatrix F;

  bool is_degenerate() const { return F.is_zero(); }
  /// True when w indexes a basis vector of this module.
  bool valid_weight_index(long w) const;
};

/// Finitely supported coordinate vector over weight indices. The module it
/// lives in is supplied by each operation.
class WeightVector {
 public:
  WeightVector() = default;

  static WeightVector basis(long w) {
    WeightVector v;
    v.add(w, Scalar(1));
    return v;
  }

  void add(long w, const Scalar& coeff);
  Scalar coeff(long w) const;
  bool is_zero() const { return coords_.empty(); }
  const std::map<long, Scalar>& coords() const { return coords_; }

  WeightVector& operator+=(const WeightVector& o);
  WeightVector& operator-=(const WeightVector& o);
  WeightVector& operator*=(const Scalar& s);
  friend WeightVector operator+(WeightVector a, const WeightVector& b) { return a += b; }
  friend WeightVector operator-(WeightVector a, const WeightVector& b) { return a -= b; }
  friend WeightVector operator*(const Scalar& s, WeightVector a) { return a *= s; }

  friend bool operator==(const WeightVector& a, const WeightVector& b) {
    return a.coords_ == b.coords_;
  }
  friend bool operator!=(const WeightVector& a, const WeightVector& b) {
    return !(a == b);
  }

 private:
  std::map<long, Scalar> coords_;
};

/// Action of a single generator on a vector of the module:
///   L_m v_w = (alpha + w + m beta) v_{w+m}          for m in p*Z,
///   L_s v_w = f[s mod p][w mod p] v_{w+s}           for s outside p*Z,
///   C_i v_w = 0.
WeightVector mois_act(const MoisSpec& spec, Generator g, const WeightVector& v);

/// Linear extension to an arbitrary algebra element (central part acts as
/// zero). Throws std::invalid_argument on mismatched p.
WeightVector mois_act(const MoisSpec& spec, const AlgebraElement& x,
                      const WeightVector& v);

/// Verifies [x, y] v = x(y v) - y(x v) for all generator pairs with
/// |index| <= window and all basis vectors v_w with |w| <= window.
Report check_module_axioms(const MoisSpec& spec, long window);

/// Directed graph on the components: an edge j -> (j+s) mod p labelled s
/// for every nonzero f[s][j].
struct LinkageGraph {
  struct Edge {
    int from;
    int to;
    int s;
    friend bool operator==(const Edge& a, const Edge& b) {
      return a.from == b.from && a.to == b.to && a.s == b.s;
    }
  };

  GapParam p;
  std::set<int> nodes;
  std::vector<Edge> edges;  // sorted by (from, to, s)
  bool strongly_connected = false;
};

LinkageGraph linkage_graph(const FMatrix& f);

/// Deterministic Graphviz DOT rendering: nodes in ascending residue order,
/// edges labelled by the linking residue. Byte-stable across runs.
std::string emit_dot(const LinkageGraph& g);

/// Reducibility of the module per its parameters: reducible exactly when
/// F = 0, alpha in p*Z and beta in {0, 1}.
struct ReducibilityVerdict {
  bool reducible = false;
  enum class Subquotient { None, SpanWithoutIndex, QuotientByLine };
  Subquotient kind = Subquotient::None;
  long special_k = 0;  // the excluded / collapsed index l (basis index p*l)
  std::string description;
};

ReducibilityVerdict classify_reducibility(const MoisSpec& spec);

/// Isomorphism witness: v_w -> d[w mod p] v'_{w+k}.
struct IsoWitness {
  long k = 0;
  std::vector<Scalar> d;  // p nonzero gauge scalars
};

/// Decides whether two valid specs define isomorphic modules; returns the
/// gauge witness when they do. The gauge is fixed to 1 at the smallest
/// active residue (of each linkage-connected block) and propagated along
/// linkage edges breadth-first, then every remaining constraint is checked.
std::optional<IsoWitness> iso_test(const MoisSpec& a, const MoisSpec& b);

/// True when the witness transports a onto b:
///   d[(s+l) mod p] * a.F[s][l] == d[l] * b.F[s][(l+k) mod p] for all s, l,
/// with b.alpha - a.alpha = k and b.beta = a.beta.
bool verify_iso_witness(const MoisSpec& a, const MoisSpec& b, const IsoWitness& w);

/// The three families of modules of intermediate series over the Virasoro
/// subalgebra spanned by { L_m : m in p*Z } and C_0, with basis
/// { v_{j+pk} : k in Z }.
struct VirModule {
  GapParam p;
  enum class Kind { A, B, V };
  Kind kind;
  int j = 0;
  Scalar a;      // kinds A, B
  Scalar alpha;  // kind V
  Scalar beta;   // kind V

  static VirModule A(GapParam p, int j, const Scalar& a);
  static VirModule B(GapParam p, int j, const Scalar& a);
  static VirModule V(GapParam p, int j, const Scalar& alpha, const Scalar& beta);
};

/// Action of L_m (m in p*Z) or C_0 on the basis vector v_{basis_index}.
/// Throws std::invalid_argument when the generator lies outside the
/// subalgebra.
WeightVector gz_component_act(const VirModule& m, Generator g, long basis_index);

/// Window test that the span of the basis lines selected by `subspace` is
/// closed under every generator with |index| <= window.
using IndexPredicate = std::function<bool(long)>;
bool submodule_window_check(const MoisSpec& spec, const IndexPredicate& subspace,
                            long window);
bool submodule_window_check(const VirModule& m, const IndexPredicate& subspace,
                            long window);

}  // namespace gapvir
