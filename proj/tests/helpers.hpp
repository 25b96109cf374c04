#pragma once

#include <numeric>
#include <random>
#include <vector>

#include "gapvir/mois.hpp"
#include "gapvir/verma.hpp"

namespace gapvir::testing {

inline Scalar random_scalar(std::mt19937& rng, bool nonzero = false) {
  std::uniform_int_distribution<long> num(-9, 9);
  std::uniform_int_distribution<long> den(1, 9);
  long n = num(rng);
  while (nonzero && n == 0) n = num(rng);
  return Scalar(n, den(rng));
}

/// Random matrix satisfying the module conditions, built from the gauge
/// form f[s][j] = c_s d_{j+s} / d_j on a set S of active rows chosen so
/// that the linkage graph is strongly connected.
inline FMatrix random_full_valid_f(GapParam p, std::mt19937& rng) {
  const int n = p.value();
  std::vector<int> rows;
  do {
    rows.clear();
    for (int s = 1; s < n; ++s)
      if (rng() % 2 == 0) rows.push_back(s);
    if (rows.empty()) rows.push_back(1 + static_cast<int>(rng() % (n - 1)));
    long g = n;
    for (int s : rows) g = std::gcd(g, static_cast<long>(s));
    if (g == 1) break;
  } while (true);

  std::vector<Scalar> d, c(static_cast<std::size_t>(n), Scalar(0));
  for (int j = 0; j < n; ++j) d.push_back(random_scalar(rng, true));
  for (int s : rows) c[static_cast<std::size_t>(s)] = random_scalar(rng, true);

  FMatrix f(p);
  for (int s : rows)
    for (int j = 0; j < n; ++j)
      f.set(s, j,
            c[static_cast<std::size_t>(s)] *
                d[static_cast<std::size_t>(residue(j + s, p))] /
                d[static_cast<std::size_t>(j)]);
  return f;
}

/// Random single-row matrix supported on the cyclic orbit of one residue
/// (the partial-column shape of ex2 and ex5). Always valid and strongly
/// connected.
inline FMatrix random_coset_valid_f(GapParam p, std::mt19937& rng) {
  const int n = p.value();
  const int s0 = 1 + static_cast<int>(rng() % (n - 1));
  const int g = static_cast<int>(std::gcd(static_cast<long>(s0), static_cast<long>(n)));
  FMatrix f(p);
  for (int j = 0; j < n; j += g) f.set(s0, j, random_scalar(rng, true));
  return f;
}

inline MoisSpec random_valid_spec(GapParam p, std::mt19937& rng) {
  FMatrix f = rng() % 3 == 0 ? random_coset_valid_f(p, rng)
                             : random_full_valid_f(p, rng);
  return MoisSpec{p, random_scalar(rng), random_scalar(rng), f};
}

/// Random weight whose central array is constant on the pairs {i, p-i},
/// so that it defines a functional on the actual center.
inline HighestWeight random_symmetric_weight(GapParam p, std::mt19937& rng,
                                             bool nonzero_center = true) {
  std::vector<Scalar> c(static_cast<std::size_t>(p.value()));
  c[0] = random_scalar(rng);
  for (int i = 1; i <= p.value() / 2; ++i) {
    const Scalar v = random_scalar(rng, nonzero_center);
    c[static_cast<std::size_t>(i)] = v;
    c[static_cast<std::size_t>(p.value() - i)] = v;
  }
  return HighestWeight(p, random_scalar(rng), std::move(c));
}

}  // namespace gapvir::testing
