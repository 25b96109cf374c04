#include "gapvir/corpus.hpp"

#include <algorithm>
#include <stdexcept>
#include <tuple>

namespace gapvir {

namespace {

MoisSpec make_spec(int p, const Scalar& alpha, const Scalar& beta,
                   const std::vector<std::vector<long>>& num,
                   const std::vector<std::vector<long>>& den) {
  FMatrix f{GapParam(p)};
  for (int s = 1; s < p; ++s)
    for (int j = 0; j < p; ++j)
      f.set(s, j, Scalar(num[s - 1][j], den[s - 1][j]));
  return MoisSpec{GapParam(p), alpha, beta, f};
}

std::vector<CorpusEntry> build() {
  std::vector<CorpusEntry> out;

  out.push_back({"ex1",
                 make_spec(3, Scalar(1, 2), Scalar(2, 3),
                           {{1, 2, 3}, {0, 0, 0}},
                           {{1, 1, 1}, {1, 1, 1}}),
                 true,
                 {{0, 1, 1}, {1, 2, 1}, {2, 0, 1}},
                 true});

  out.push_back({"ex2",
                 make_spec(4, Scalar(0), Scalar(1),
                           {{0, 0, 0, 0}, {1, 0, 2, 0}, {0, 0, 0, 0}},
                           {{1, 1, 1, 1}, {1, 1, 1, 1}, {1, 1, 1, 1}}),
                 true,
                 {{0, 2, 2}, {2, 0, 2}},
                 true});

  {
    // Row 1 entries 2, 3, 5, 7, 11 with f20 = 13; row 2 is the forced
    // completion.
    FMatrix f = complete_p5_two_rows(
        {Scalar(2), Scalar(3), Scalar(5), Scalar(7), Scalar(11)}, Scalar(13));
    std::vector<LinkageGraph::Edge> edges;
    for (int j = 0; j < 5; ++j) edges.push_back({j, (j + 1) % 5, 1});
    for (int j = 0; j < 5; ++j) edges.push_back({j, (j + 2) % 5, 2});
    std::sort(edges.begin(), edges.end(), [](const auto& a, const auto& b) {
      return std::tie(a.from, a.to, a.s) < std::tie(b.from, b.to, b.s);
    });
    out.push_back({"ex3",
                   MoisSpec{GapParam(5), Scalar(0), Scalar(2), f},
                   true, edges, true});
  }

  out.push_back({"ex4",
                 make_spec(4, Scalar(0), Scalar(0),
                           {{1, 1, 1, 1}, {1, 0, 1, 0}, {0, 0, 0, 0}},
                           {{1, 1, 1, 1}, {1, 1, 1, 1}, {1, 1, 1, 1}}),
                 false,
                 {},
                 false});

  {
    FMatrix f{GapParam(12)};
    f.set(8, 0, Scalar(1));
    f.set(8, 4, Scalar(2));
    f.set(8, 8, Scalar(3));
    out.push_back({"ex5",
                   MoisSpec{GapParam(12), Scalar(0), Scalar(1, 3), f},
                   true,
                   {{0, 8, 8}, {4, 0, 8}, {8, 4, 8}},
                   true});
  }

  return out;
}

}  // namespace

const std::vector<CorpusEntry>& bundled_examples() {
  static const std::vector<CorpusEntry> corpus = build();
  return corpus;
}

FMatrix complete_p5_two_rows(const std::vector<Scalar>& row1, const Scalar& f20) {
  if (row1.size() != 5)
    throw std::invalid_argument("complete_p5_two_rows: row 1 needs 5 entries");
  for (const Scalar& v : row1)
    if (v.is_zero())
      throw std::invalid_argument("complete_p5_two_rows: row 1 must be nonzero");
  if (f20.is_zero())
    throw std::invalid_argument("complete_p5_two_rows: f20 must be nonzero");

  FMatrix f{GapParam(5)};
  for (int j = 0; j < 5; ++j) f.set(1, j, row1[static_cast<std::size_t>(j)]);
  f.set(2, 0, f20);
  f.set(2, 1, row1[2] * f20 / row1[0]);
  f.set(2, 2, row1[2] * row1[3] * f20 / (row1[0] * row1[1]));
  f.set(2, 3, row1[3] * row1[4] * f20 / (row1[0] * row1[1]));
  f.set(2, 4, row1[4] * f20 / row1[1]);
  return f;
}

Report run_corpus() {
  Report report;
  for (const CorpusEntry& entry : bundled_examples()) {
    ++report.checks;
    const ValidationReport validation = validate_f(entry.spec.F);
    if (validation.valid() != entry.valid) {
      report.violations.push_back(
          {"corpus", {}, entry.name + ": unexpected validation verdict"});
      continue;
    }
    if (entry.name == "ex4") {
      if (validation.cond3.passed ||
          validation.cond3.witness != std::vector<long>{2, 1, 0})
        report.violations.push_back(
            {"corpus", {}, "ex4: expected commutation witness (2,1,0)"});
      continue;
    }
    const LinkageGraph graph = linkage_graph(entry.spec.F);
    if (graph.edges != entry.expected_edges)
      report.violations.push_back(
          {"corpus", {}, entry.name + ": linkage edges differ from the documented diagram"});
    if (graph.strongly_connected != entry.expected_strongly_connected)
      report.violations.push_back(
          {"corpus", {}, entry.name + ": unexpected connectivity"});
  }
  return report;
}

}  // namespace gapvir
