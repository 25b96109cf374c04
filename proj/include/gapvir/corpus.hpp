#pragma once

#include <string>
#include <vector>

#include "gapvir/mois.hpp"

namespace gapvir {

/// A bundled small-p module with its documented verdicts.
struct CorpusEntry {
  std::string name;
  MoisSpec spec;
  bool valid;                      // expected validate_f outcome
  std::vector<LinkageGraph::Edge> expected_edges;  // sorted (from, to, s)
  bool expected_strongly_connected;
};

/// The five bundled examples:
///   ex1: p=3,  one full nonzero row, linkage 0 -> 1 -> 2 -> 0
///   ex2: p=4,  row 2 on columns {0,2}, linkage 0 <-> 2
///   ex3: p=5,  rows 1 and 2 with row 2 given by the forced completion,
///        strongly connected on all 5 components
///   ex4: p=4,  full row 1 plus row 2 on columns {0,2}: rejected by the
///        commutation condition with witness (r,s,i) = (2,1,0)
///   ex5: p=12, only f[8][0], f[8][4], f[8][8] nonzero, linkage 0 -> 8 -> 4 -> 0
const std::vector<CorpusEntry>& bundled_examples();

/// Row-2 completion forced by the commutation condition for the p=5 shape
/// of ex3: given nonzero f[1][0..4] and f[2][0], the remaining row-2
/// entries are determined as
///   f21 = f12 f20 / f10,        f22 = f12 f13 f20 / (f10 f11),
///   f23 = f13 f14 f20 / (f10 f11),  f24 = f14 f20 / f11.
FMatrix complete_p5_two_rows(const std::vector<Scalar>& row1, const Scalar& f20);

/// Reruns every bundled example against its documented verdicts.
/// Violations name the example and the mismatched fact.
Report run_corpus();

}  // namespace gapvir
