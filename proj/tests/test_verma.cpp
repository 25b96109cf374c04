#include <doctest.h>

#include <random>

#include "gapvir/verma.hpp"
#include "helpers.hpp"

using namespace gapvir;

namespace {

// Independent partition-count oracle (coin style dynamic program).
std::vector<long> partition_counts(long up_to) {
  std::vector<long> table(static_cast<std::size_t>(up_to) + 1, 0);
  table[0] = 1;
  for (long part = 1; part <= up_to; ++part)
    for (long n = part; n <= up_to; ++n)
      table[static_cast<std::size_t>(n)] += table[static_cast<std::size_t>(n - part)];
  return table;
}

HighestWeight generic_p3() {
  return HighestWeight(GapParam(3), Scalar(7), {Scalar(5), Scalar(1), Scalar(2)});
}

}  // namespace

TEST_CASE("pbw basis enumerates partitions in reverse lexicographic order") {
  CHECK(pbw_basis(0) == std::vector<PBWMonomial>{PBWMonomial{}});
  const std::vector<PBWMonomial> expected{
      {{4}}, {{3, 1}}, {{2, 2}}, {{2, 1, 1}}, {{1, 1, 1, 1}}};
  CHECK(pbw_basis(4) == expected);

  const std::vector<std::size_t> counts{1, 2, 3, 5, 7, 11};
  for (std::size_t n = 1; n <= 6; ++n) CHECK(pbw_basis(static_cast<long>(n)).size() == counts[n - 1]);

  const std::vector<long> oracle = partition_counts(12);
  for (long n = 0; n <= 12; ++n)
    CHECK(pbw_basis(n).size() == static_cast<std::size_t>(oracle[static_cast<std::size_t>(n)]));

  CHECK_THROWS_AS(pbw_basis(-1), std::invalid_argument);
}

TEST_CASE("straightening against the boundary rules") {
  GapParam p(2);
  const Scalar h(3, 7);
  const HighestWeight hw(p, h, {Scalar(11, 5), Scalar(2, 9)});

  SUBCASE("Heisenberg pair evaluates the central charge") {
    const VermaVector out =
        verma_act(hw, Generator::L(1), VermaVector::monomial(PBWMonomial{{1}}));
    CHECK(out == VermaVector::monomial(PBWMonomial{}, hw.c[1]));
  }

  SUBCASE("Virasoro pair evaluates h and the cubic charge") {
    const VermaVector out =
        verma_act(hw, Generator::L(2), VermaVector::monomial(PBWMonomial{{2}}));
    const Scalar expected = Scalar(-4) * h + Scalar(1, 2) * hw.c[0];
    CHECK(out == VermaVector::monomial(PBWMonomial{}, expected));
  }

  SUBCASE("L_0 grades the monomials") {
    const VermaVector out =
        verma_act(hw, Generator::L(0), VermaVector::monomial(PBWMonomial{{1}}));
    CHECK(out == VermaVector::monomial(PBWMonomial{{1}}, h - Scalar(1)));
  }

  SUBCASE("positive generators kill the vacuum") {
    CHECK(verma_act(hw, Generator::L(5), VermaVector::vacuum()).is_zero());
  }

  SUBCASE("negative generators stack in canonical order") {
    const VermaVector out =
        verma_act(hw, Generator::L(-1), VermaVector::monomial(PBWMonomial{{3}}));
    // L_{-1} L_{-3} v reorders to L_{-3} L_{-1} v; the bracket term vanishes
    // at p = 2 because -1 - 3 is not zero.
    CHECK(out == VermaVector::monomial(PBWMonomial{{3, 1}}));
  }
}

TEST_CASE("action respects the depth grading") {
  std::mt19937 rng(17);
  const HighestWeight hw = testing::random_symmetric_weight(GapParam(3), rng);
  for (const PBWMonomial& mono : pbw_basis(5))
    for (long k = -3; k <= 6; ++k) {
      const VermaVector out = verma_act(hw, Generator::L(k), VermaVector::monomial(mono));
      for (const auto& [m, c] : out.coords()) CHECK(m.depth() == 5 - k);
    }
}

TEST_CASE("module axiom holds on the Verma module") {
  std::mt19937 rng(19);
  for (int p : {2, 3}) {
    const HighestWeight hw = testing::random_symmetric_weight(GapParam(p), rng);
    for (long a = -4; a <= 4; ++a)
      for (long b = a; b <= 4; ++b) {
        const AlgebraElement bk =
            bracket(AlgebraElement::L(hw.p, a), AlgebraElement::L(hw.p, b));
        for (const PBWMonomial& mono : pbw_basis(3)) {
          const VermaVector v = VermaVector::monomial(mono);
          const VermaVector lhs = verma_act(hw, bk, v);
          VermaVector rhs = verma_act(hw, Generator::L(a), verma_act(hw, Generator::L(b), v));
          rhs -= verma_act(hw, Generator::L(b), verma_act(hw, Generator::L(a), v));
          CHECK(lhs == rhs);
        }
      }
  }
}

TEST_CASE("irreducibility bookkeeping") {
  GapParam p(3);
  CHECK(verma_verdict(generic_p3()).irreducible);
  CHECK(verma_verdict(generic_p3()).I.empty());

  const HighestWeight reducible(p, Scalar(5), {Scalar(5), Scalar(0), Scalar(2)});
  const VermaVerdict v = verma_verdict(reducible);
  CHECK(!v.irreducible);
  CHECK(v.I == std::set<int>{1});

  const HighestWeight zero(p, Scalar(0), {Scalar(0), Scalar(0), Scalar(0)});
  const VermaVerdict vz = verma_verdict(zero);
  CHECK(!vz.irreducible);
  CHECK(vz.lambda_zero);
}

TEST_CASE("singular vectors at small depth") {
  GapParam p(3);

  SUBCASE("vanishing first central charge puts L_{-1} v in the kernel") {
    const HighestWeight hw(p, Scalar(3, 2), {Scalar(7), Scalar(0), Scalar(0)});
    const auto basis = singular_vectors(hw, 1);
    REQUIRE(basis.size() == 1);
    CHECK(basis[0] == VermaVector::monomial(PBWMonomial{{1}}));
  }

  SUBCASE("generic weight has empty kernels through depth 6") {
    for (long d = 1; d <= 6; ++d)
      CHECK(singular_vectors(generic_p3(), d).empty());
  }

  SUBCASE("the zero weight is singular at depth 1") {
    const HighestWeight hw(p, Scalar(0), {Scalar(0), Scalar(0), Scalar(0)});
    const auto basis = singular_vectors(hw, 1);
    REQUIRE(basis.size() == 1);
    CHECK(basis[0] == VermaVector::monomial(PBWMonomial{{1}}));
  }

  SUBCASE("depth must be positive") {
    CHECK_THROWS_AS(singular_vectors(generic_p3(), 0), std::invalid_argument);
  }
}

TEST_CASE("nonempty I produces a witness at its own depth") {
  std::mt19937 rng(29);
  for (int p : {2, 3, 4}) {
    HighestWeight hw = testing::random_symmetric_weight(GapParam(p), rng);
    const int i = 1 + static_cast<int>(rng() % (p - 1));
    hw.c[static_cast<std::size_t>(i)] = Scalar(0);
    hw.c[static_cast<std::size_t>(p - i)] = Scalar(0);
    CHECK(!verma_verdict(hw).irreducible);

    // L_{-i} v is annihilated by every positive generator.
    const VermaVector witness = VermaVector::monomial(PBWMonomial{{i}});
    for (long k = 1; k <= i; ++k)
      CHECK(verma_act(hw, Generator::L(k), witness).is_zero());
    CHECK(!singular_vectors(hw, i).empty());
  }
}

TEST_CASE("weight construction checks the central array length") {
  CHECK_THROWS_AS(HighestWeight(GapParam(3), Scalar(1), {Scalar(1)}),
                  std::invalid_argument);
}
