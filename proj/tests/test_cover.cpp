#include <doctest.h>

#include <random>

#include "gapvir/cover.hpp"
#include "helpers.hpp"

using namespace gapvir;

namespace {

MoisSpec fixture_p2() {
  FMatrix f{GapParam(2)};
  f.set(1, 0, Scalar(1));
  f.set(1, 1, Scalar(1));
  return MoisSpec{GapParam(2), Scalar(0), Scalar(1), f};
}

TensorVector kernel_fixture() {
  TensorVector t;
  t.add(1, 0, Scalar(1));
  t.add(3, -2, Scalar(-1));
  return t;
}

TensorVector random_tensor(const MoisSpec& spec, std::mt19937& rng) {
  TensorVector t;
  const int terms = 1 + static_cast<int>(rng() % 4);
  for (int i = 0; i < terms; ++i) {
    long s;
    do {
      s = static_cast<long>(rng() % 17) - 8;
    } while (is_gap_multiple(s, spec.p));
    long w;
    do {
      w = static_cast<long>(rng() % 17) - 8;
    } while (!spec.valid_weight_index(w));
    t.add(s, w, testing::random_scalar(rng));
  }
  return t;
}

}  // namespace

TEST_CASE("tensor actions") {
  const MoisSpec spec = fixture_p2();

  SUBCASE("the shift moves the tensor leg") {
    TensorVector t;
    t.add(1, 0, Scalar(1));
    const TensorVector out = tensor_act_t(spec, 2, t);
    TensorVector expected;
    expected.add(3, 0, Scalar(1));
    CHECK(out == expected);
    CHECK_THROWS_AS(tensor_act_t(spec, 1, t), std::invalid_argument);
  }

  SUBCASE("gap generator acts by bracket plus module action") {
    TensorVector t;
    t.add(1, 0, Scalar(1));
    const TensorVector out = tensor_act_L(spec, 2, t);
    TensorVector expected;
    expected.add(3, 0, Scalar(1));  // [L_2, L_1] = L_3
    expected.add(1, 2, Scalar(2));  // L_2 v_0 = 2 v_2
    CHECK(out == expected);
  }

  SUBCASE("compatibility instance L_m t^n - t^n L_m = n t^{m+n}") {
    std::mt19937 rng(37);
    for (int round = 0; round < 20; ++round) {
      const TensorVector t = random_tensor(spec, rng);
      TensorVector lhs = tensor_act_L(spec, 2, tensor_act_t(spec, 2, t));
      lhs -= tensor_act_t(spec, 2, tensor_act_L(spec, 2, t));
      TensorVector rhs = tensor_act_t(spec, 4, t);
      rhs *= Scalar(2);
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("associative action identities hold on sampled tensors") {
  const MoisSpec spec = fixture_p2();
  std::mt19937 rng(39);
  for (int round = 0; round < 20; ++round) {
    const TensorVector t = random_tensor(spec, rng);
    // t^a t^b = t^{a+b}
    CHECK(tensor_act_t(spec, 2, tensor_act_t(spec, 4, t)) == tensor_act_t(spec, 6, t));
    // t^n L_r = L_r t^n for r outside p*Z
    CHECK(tensor_act_t(spec, 2, tensor_act_L(spec, 3, t)) ==
          tensor_act_L(spec, 3, tensor_act_t(spec, 2, t)));
  }
}

TEST_CASE("evaluation map") {
  const MoisSpec spec = fixture_p2();

  SUBCASE("single term evaluates the module action") {
    TensorVector t;
    t.add(1, 0, Scalar(1));
    const WeightVector out = pi_map(spec, t);
    CHECK(out.coeff(1) == Scalar(1));
  }

  SUBCASE("the kernel fixture evaluates to zero") {
    CHECK(pi_map(spec, kernel_fixture()).is_zero());
  }

  SUBCASE("zero tensor maps to zero") {
    CHECK(pi_map(spec, TensorVector{}).is_zero());
  }
}

TEST_CASE("membership in the kernel ideal") {
  const MoisSpec spec = fixture_p2();
  CHECK(j_membership(spec, kernel_fixture()));
  CHECK(j_membership(spec, TensorVector{}));

  TensorVector single;
  single.add(1, 0, Scalar(1));
  CHECK(!j_membership(spec, single));
}

TEST_CASE("membership implies evaluation to zero and is action stable") {
  const MoisSpec spec = fixture_p2();
  const TensorVector t = kernel_fixture();
  REQUIRE(j_membership(spec, t));
  CHECK(pi_map(spec, t).is_zero());
  for (long k = -8; k <= 8; ++k)
    CHECK(j_membership(spec, tensor_act_L(spec, k, t)));
  for (long n : {2L, -2L, 4L})
    CHECK(j_membership(spec, tensor_act_t(spec, n, t)));
}

TEST_CASE("evaluation intertwines the Lie action") {
  const MoisSpec spec = fixture_p2();
  std::mt19937 rng(47);
  for (int round = 0; round < 30; ++round) {
    const TensorVector t = random_tensor(spec, rng);
    for (long k = -6; k <= 6; ++k) {
      const WeightVector lhs = pi_map(spec, tensor_act_L(spec, k, t));
      const WeightVector rhs = mois_act(spec, Generator::L(k), pi_map(spec, t));
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("alternating binomial operators") {
  FMatrix f{GapParam(2)};
  f.set(1, 0, Scalar(1));
  f.set(1, 1, Scalar(1));
  const MoisSpec generic{GapParam(2), Scalar(1, 3), Scalar(2), f};

  SUBCASE("order zero is a single generator") {
    const WeightVector out =
        omega_apply(generic, 4, 2, 0, WeightVector::basis(0));
    CHECK(!out.is_zero());
  }

  SUBCASE("third difference of the degree-two coefficient vanishes") {
    for (long w = -10; w <= 10; ++w)
      CHECK(omega_apply(generic, 4, 2, 3, WeightVector::basis(w)).is_zero());
  }

  SUBCASE("second difference does not vanish for generic beta") {
    bool nonzero = false;
    for (long w = -10; w <= 10; ++w)
      if (!omega_apply(generic, 4, 2, 2, WeightVector::basis(w)).is_zero())
        nonzero = true;
    CHECK(nonzero);
  }

  SUBCASE("indices outside p*Z are rejected") {
    CHECK_THROWS_AS(omega_apply(generic, 3, 2, 1, WeightVector::basis(0)),
                    std::invalid_argument);
    CHECK_THROWS_AS(omega_apply(generic, 4, 1, 1, WeightVector::basis(0)),
                    std::invalid_argument);
  }
}

TEST_CASE("minimal annihilation order") {
  FMatrix f{GapParam(2)};
  f.set(1, 0, Scalar(1));
  f.set(1, 1, Scalar(1));

  SUBCASE("generic parameters need the third difference") {
    const MoisSpec spec{GapParam(2), Scalar(1, 3), Scalar(2), f};
    CHECK(omega_min_l(spec, 4, 2, 10, 6) == 3);
    CHECK(!omega_min_l(spec, 4, 2, 10, 1).has_value());
  }

  SUBCASE("beta = 0 drops the order to two") {
    const MoisSpec spec{GapParam(2), Scalar(1, 3), Scalar(0), f};
    CHECK(omega_min_l(spec, 4, 2, 10, 6) == 2);
  }

  SUBCASE("every valid spec is annihilated by order three") {
    std::mt19937 rng(53);
    for (int p : {2, 3, 4}) {
      const MoisSpec spec = testing::random_valid_spec(GapParam(p), rng);
      const auto l = omega_min_l(spec, 2 * p, p, 8, 3);
      REQUIRE(l.has_value());
      CHECK(*l <= 3);
    }
  }
}
