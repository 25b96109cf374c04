#include "gapvir/mois.hpp"

#include <algorithm>
#include <deque>
#include <sstream>
#include <stdexcept>

namespace gapvir {

FMatrix::FMatrix(GapParam p)
    : p_(p),
      rows_(static_cast<std::size_t>(p.value() - 1),
            std::vector<Scalar>(static_cast<std::size_t>(p.value()))) {}

const Scalar& FMatrix::at(int s, int j) const {
  if (s < 1 || s >= p_.value() || j < 0 || j >= p_.value())
    throw std::invalid_argument("FMatrix: index out of range");
  return rows_[static_cast<std::size_t>(s - 1)][static_cast<std::size_t>(j)];
}

void FMatrix::set(int s, int j, const Scalar& v) {
  if (s < 1 || s >= p_.value() || j < 0 || j >= p_.value())
    throw std::invalid_argument("FMatrix: index out of range");
  rows_[static_cast<std::size_t>(s - 1)][static_cast<std::size_t>(j)] = v;
}

std::set<int> FMatrix::active_columns() const {
  std::set<int> active;
  for (int j = 0; j < p_.value(); ++j)
    for (int s = 1; s < p_.value(); ++s)
      if (!at(s, j).is_zero()) {
        active.insert(j);
        break;
      }
  return active;
}

bool FMatrix::is_zero() const { return active_columns().empty(); }

FMatrix FMatrix::shifted_columns(int k) const {
  FMatrix out(p_);
  for (int s = 1; s < p_.value(); ++s)
    for (int j = 0; j < p_.value(); ++j)
      out.set(s, residue(j + k, p_), at(s, j));
  return out;
}

bool operator==(const FMatrix& a, const FMatrix& b) {
  return a.p_ == b.p_ && a.rows_ == b.rows_;
}

ValidationReport validate_f(const FMatrix& f) {
  ValidationReport report;
  const int p = f.p().value();
  const std::set<int> active = f.active_columns();

  if (active.empty()) {
    report.zero_matrix = true;
    return report;
  }

  if (active.count(0) == 0) {
    report.cond1.passed = false;
    report.cond1.detail = "column 0 is identically zero";
  }

  for (int i = 1; i < p && report.cond2.passed; ++i)
    for (int j = 0; j < p; ++j) {
      if (f.at(i, j).is_zero()) continue;
      if (active.count(residue(i + j, f.p())) == 0) {
        report.cond2.passed = false;
        report.cond2.witness = {i, j};
        std::ostringstream os;
        os << "f[" << i << "][" << j << "] != 0 but column "
           << residue(i + j, f.p()) << " is zero";
        report.cond2.detail = os.str();
        break;
      }
    }

  // The (r, s) identity is symmetric under swapping r and s, so scan
  // unordered pairs; first witness found is reported.
  for (int s = 1; s < p && report.cond3.passed; ++s)
    for (int r = s + 1; r < p && report.cond3.passed; ++r)
      for (int i = 0; i < p; ++i) {
        const Scalar lhs = f.at(r, residue(i + s, f.p())) * f.at(s, i);
        const Scalar rhs = f.at(s, residue(i + r, f.p())) * f.at(r, i);
        if (lhs != rhs) {
          report.cond3.passed = false;
          report.cond3.witness = {r, s, i};
          std::ostringstream os;
          os << "f[" << r << "][" << residue(i + s, f.p()) << "]*f[" << s
             << "][" << i << "] = " << lhs.str() << " but f[" << s << "]["
             << residue(i + r, f.p()) << "]*f[" << r << "][" << i
             << "] = " << rhs.str();
          report.cond3.detail = os.str();
          break;
        }
      }
  return report;
}

bool MoisSpec::valid_weight_index(long w) const {
  if (is_degenerate()) return residue(w, p) == 0;
  return F.active_columns().count(residue(w, p)) > 0;
}

void WeightVector::add(long w, const Scalar& coeff) {
  auto it = coords_.find(w);
  if (it == coords_.end()) {
    if (!coeff.is_zero()) coords_.emplace(w, coeff);
    return;
  }
  it->second += coeff;
  if (it->second.is_zero()) coords_.erase(it);
}

Scalar WeightVector::coeff(long w) const {
  auto it = coords_.find(w);
  return it == coords_.end() ? Scalar(0) : it->second;
}

WeightVector& WeightVector::operator+=(const WeightVector& o) {
  for (const auto& [w, c] : o.coords_) add(w, c);
  return *this;
}

WeightVector& WeightVector::operator-=(const WeightVector& o) {
  for (const auto& [w, c] : o.coords_) add(w, -c);
  return *this;
}

WeightVector& WeightVector::operator*=(const Scalar& s) {
  if (s.is_zero()) {
    coords_.clear();
    return *this;
  }
  for (auto& [w, c] : coords_) c *= s;
  return *this;
}

WeightVector mois_act(const MoisSpec& spec, Generator g, const WeightVector& v) {
  WeightVector out;
  if (g.kind == Generator::Kind::C) return out;
  const long k = g.index;
  if (is_gap_multiple(k, spec.p)) {
    for (const auto& [w, c] : v.coords())
      out.add(w + k, c * (spec.alpha + Scalar(w) + Scalar(k) * spec.beta));
  } else {
    const int s = residue(k, spec.p);
    for (const auto& [w, c] : v.coords()) {
      const Scalar& f = spec.F.at(s, residue(w, spec.p));
      if (!f.is_zero()) out.add(w + k, c * f);
    }
  }
  return out;
}

WeightVector mois_act(const MoisSpec& spec, const AlgebraElement& x,
                      const WeightVector& v) {
  if (x.p() != spec.p)
    throw std::invalid_argument("mois_act: mismatched p");
  WeightVector out;
  for (const auto& [m, c] : x.l_part()) {
    WeightVector term = mois_act(spec, Generator::L(m), v);
    term *= c;
    out += term;
  }
  return out;
}

Report check_module_axioms(const MoisSpec& spec, long window) {
  Report report;
  std::vector<Generator> gens;
  for (long m = -window; m <= window; ++m) gens.push_back(Generator::L(m));
  for (int i = 0; i < spec.p.value(); ++i) gens.push_back(Generator::C(i));

  std::vector<long> basis;
  for (long w = -window; w <= window; ++w)
    if (spec.valid_weight_index(w)) basis.push_back(w);

  auto tag = [&](const Generator& g) {
    return g.kind == Generator::Kind::L ? g.index : window + 1 + g.index;
  };

  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      const AlgebraElement bk =
          bracket(AlgebraElement::make(spec.p, gens[i]),
                  AlgebraElement::make(spec.p, gens[j]));
      for (long w : basis) {
        ++report.checks;
        const WeightVector v = WeightVector::basis(w);
        const WeightVector lhs = mois_act(spec, bk, v);
        WeightVector rhs = mois_act(spec, gens[i], mois_act(spec, gens[j], v));
        rhs -= mois_act(spec, gens[j], mois_act(spec, gens[i], v));
        if (lhs != rhs)
          report.violations.push_back(
              {"module-axiom",
               {tag(gens[i]), tag(gens[j]), w},
               "[x,y]v != x(yv) - y(xv)"});
      }
    }
  return report;
}

LinkageGraph linkage_graph(const FMatrix& f) {
  LinkageGraph g{f.p(), {}, {}, false};
  g.nodes = f.active_columns();
  if (g.nodes.empty()) g.nodes.insert(0);  // degenerate single component
  for (int j : g.nodes)
    for (int s = 1; s < f.p().value(); ++s)
      if (!f.at(s, j).is_zero())
        g.edges.push_back({j, residue(j + s, f.p()), s});
  std::sort(g.edges.begin(), g.edges.end(), [](const auto& a, const auto& b) {
    return std::tie(a.from, a.to, a.s) < std::tie(b.from, b.to, b.s);
  });

  // Strongly connected iff every node is reachable from the first node in
  // both the graph and its reverse.
  auto reach = [&](bool reverse) {
    std::set<int> seen{*g.nodes.begin()};
    std::deque<int> queue{*g.nodes.begin()};
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop_front();
      for (const auto& e : g.edges) {
        int from = reverse ? e.to : e.from;
        int to = reverse ? e.from : e.to;
        if (from == v && g.nodes.count(to) && !seen.count(to)) {
          seen.insert(to);
          queue.push_back(to);
        }
      }
    }
    return seen.size() == g.nodes.size();
  };
  g.strongly_connected = reach(false) && reach(true);
  return g;
}

std::string emit_dot(const LinkageGraph& g) {
  std::ostringstream os;
  os << "digraph linkage {\n";
  for (int n : g.nodes) os << "  " << n << ";\n";
  for (const auto& e : g.edges)
    os << "  " << e.from << " -> " << e.to << " [label=\"" << e.s << "\"];\n";
  os << "}\n";
  return os.str();
}

ReducibilityVerdict classify_reducibility(const MoisSpec& spec) {
  ReducibilityVerdict verdict;
  if (!spec.is_degenerate()) {
    verdict.description = "more than one component: irreducible";
    return verdict;
  }
  const Scalar ratio = spec.alpha / Scalar(spec.p.value());
  const bool alpha_in_pz = ratio.is_integer();
  const bool beta_01 = spec.beta == Scalar(0) || spec.beta == Scalar(1);
  if (!alpha_in_pz || !beta_01) {
    verdict.description = "single component with alpha outside p*Z or beta outside {0,1}: irreducible";
    return verdict;
  }
  verdict.reducible = true;
  verdict.special_k = -ratio.to_long();
  std::ostringstream os;
  if (spec.beta == Scalar(1)) {
    verdict.kind = ReducibilityVerdict::Subquotient::SpanWithoutIndex;
    os << "submodule span{ v_{pk} : k != " << verdict.special_k << " }";
  } else {
    verdict.kind = ReducibilityVerdict::Subquotient::QuotientByLine;
    os << "quotient by the line spanned by v_{" << spec.p.value() * verdict.special_k
       << "}";
  }
  verdict.description = os.str();
  return verdict;
}

bool verify_iso_witness(const MoisSpec& a, const MoisSpec& b, const IsoWitness& w) {
  if (a.p != b.p) return false;
  if (w.d.size() != static_cast<std::size_t>(a.p.value())) return false;
  for (const Scalar& dv : w.d)
    if (dv.is_zero()) return false;
  if (b.alpha - a.alpha != Scalar(w.k) || a.beta != b.beta) return false;
  if (a.is_degenerate() != b.is_degenerate()) return false;
  if (a.is_degenerate()) return w.k % a.p.value() == 0;
  for (int s = 1; s < a.p.value(); ++s)
    for (int l = 0; l < a.p.value(); ++l) {
      const Scalar lhs = w.d[static_cast<std::size_t>(residue(s + l, a.p))] * a.F.at(s, l);
      const Scalar rhs = w.d[static_cast<std::size_t>(l)] * b.F.at(s, residue(l + w.k, a.p));
      if (lhs != rhs) return false;
    }
  return true;
}

std::optional<IsoWitness> iso_test(const MoisSpec& a, const MoisSpec& b) {
  if (a.p != b.p) throw std::invalid_argument("iso_test: mismatched p");
  const Scalar shift = b.alpha - a.alpha;
  if (!shift.is_integer() || a.beta != b.beta) return std::nullopt;
  const long k = shift.to_long();
  const int p = a.p.value();

  if (a.is_degenerate() || b.is_degenerate()) {
    // Single-component modules sit at residue 0 on both sides, so the
    // weight shift must respect the p*Z lattice.
    if (!a.is_degenerate() || !b.is_degenerate()) return std::nullopt;
    if (k % p != 0) return std::nullopt;
    IsoWitness w{k, std::vector<Scalar>(static_cast<std::size_t>(p), Scalar(1))};
    return w;
  }

  const int kres = residue(k, a.p);
  for (int s = 1; s < p; ++s)
    for (int l = 0; l < p; ++l)
      if (a.F.at(s, l).is_zero() != b.F.at(s, residue(l + kres, a.p)).is_zero())
        return std::nullopt;

  std::vector<std::optional<Scalar>> d(static_cast<std::size_t>(p));
  const std::set<int> active = a.F.active_columns();
  for (int root : active) {
    if (d[static_cast<std::size_t>(root)]) continue;
    d[static_cast<std::size_t>(root)] = Scalar(1);
    std::set<int> frontier{root};  // smallest residue first
    while (!frontier.empty()) {
      const int l = *frontier.begin();
      frontier.erase(frontier.begin());
      const Scalar dl = *d[static_cast<std::size_t>(l)];
      for (int s = 1; s < p; ++s) {
        if (!a.F.at(s, l).is_zero()) {
          const int t = residue(l + s, a.p);
          const Scalar val =
              dl * b.F.at(s, residue(l + kres, a.p)) / a.F.at(s, l);
          auto& slot = d[static_cast<std::size_t>(t)];
          if (!slot) {
            slot = val;
            frontier.insert(t);
          } else if (*slot != val) {
            return std::nullopt;
          }
        }
        const int u = residue(l - s, a.p);
        if (!a.F.at(s, u).is_zero()) {
          const Scalar val =
              dl * a.F.at(s, u) / b.F.at(s, residue(u + kres, a.p));
          auto& slot = d[static_cast<std::size_t>(u)];
          if (!slot) {
            slot = val;
            frontier.insert(u);
          } else if (*slot != val) {
            return std::nullopt;
          }
        }
      }
    }
  }

  IsoWitness w;
  w.k = k;
  for (int l = 0; l < p; ++l)
    w.d.push_back(d[static_cast<std::size_t>(l)] ? *d[static_cast<std::size_t>(l)]
                                                 : Scalar(1));
  if (!verify_iso_witness(a, b, w)) return std::nullopt;
  return w;
}

VirModule VirModule::A(GapParam p, int j, const Scalar& a) {
  return VirModule{p, Kind::A, j, a, Scalar(0), Scalar(0)};
}

VirModule VirModule::B(GapParam p, int j, const Scalar& a) {
  return VirModule{p, Kind::B, j, a, Scalar(0), Scalar(0)};
}

VirModule VirModule::V(GapParam p, int j, const Scalar& alpha, const Scalar& beta) {
  return VirModule{p, Kind::V, j, Scalar(0), alpha, beta};
}

WeightVector gz_component_act(const VirModule& m, Generator g, long basis_index) {
  if (g.kind == Generator::Kind::C) {
    if (g.index != 0)
      throw std::invalid_argument("gz_component_act: only C_0 lies in the subalgebra");
    return {};
  }
  if (!is_gap_multiple(g.index, m.p))
    throw std::invalid_argument("gz_component_act: generator index must lie in p*Z");
  if (residue(basis_index, m.p) != m.j)
    throw std::invalid_argument("gz_component_act: basis index outside the component");

  const long gen = g.index;
  const long pk = basis_index - m.j;  // p*k in the basis label j + p*k
  WeightVector out;
  switch (m.kind) {
    case VirModule::Kind::A:
      if (pk != 0)
        out.add(basis_index + gen, Scalar(gen + pk));
      else
        out.add(m.j + gen, Scalar(gen) * (Scalar(gen) + m.a));
      break;
    case VirModule::Kind::B:
      if (gen + pk != 0)
        out.add(basis_index + gen, Scalar(pk));
      else
        out.add(m.j, -Scalar(gen) * (Scalar(gen) + m.a));
      break;
    case VirModule::Kind::V:
      out.add(basis_index + gen,
              m.alpha + Scalar(basis_index) + Scalar(gen) * m.beta);
      break;
  }
  return out;
}

namespace {

bool stays_inside(const WeightVector& image, const IndexPredicate& subspace) {
  for (const auto& [w, c] : image.coords())
    if (!subspace(w)) return false;
  return true;
}

}  // namespace

bool submodule_window_check(const MoisSpec& spec, const IndexPredicate& subspace,
                            long window) {
  for (long w = -window; w <= window; ++w) {
    if (!spec.valid_weight_index(w) || !subspace(w)) continue;
    const WeightVector v = WeightVector::basis(w);
    for (long m = -window; m <= window; ++m)
      if (!stays_inside(mois_act(spec, Generator::L(m), v), subspace))
        return false;
    // C_i act as zero; nothing to check.
  }
  return true;
}

bool submodule_window_check(const VirModule& m, const IndexPredicate& subspace,
                            long window) {
  for (long w = -window; w <= window; ++w) {
    if (residue(w, m.p) != m.j || !subspace(w)) continue;
    for (long gen = -window; gen <= window; ++gen) {
      if (!is_gap_multiple(gen, m.p)) continue;
      if (!stays_inside(gz_component_act(m, Generator::L(gen), w), subspace))
        return false;
    }
  }
  return true;
}

}  // namespace gapvir
