#include <doctest.h>

#include <random>

#include "gapvir/corpus.hpp"
#include "gapvir/json_io.hpp"
#include "helpers.hpp"

using namespace gapvir;

TEST_CASE("spec serialization matches the documented shape") {
  const MoisSpec& ex1 = bundled_examples()[0].spec;
  const Json j = mois_spec_to_json(ex1);
  CHECK(j.dump() ==
        R"({"p":3,"alpha":"1/2","beta":"2/3","F":[["1","2","3"],["0","0","0"]]})");
}

TEST_CASE("parsing round trips on random values") {
  std::mt19937 rng(61);
  for (int round = 0; round < 40; ++round) {
    const int p = 2 + static_cast<int>(rng() % 4);
    const MoisSpec spec = testing::random_valid_spec(GapParam(p), rng);
    const MoisSpec back = mois_spec_from_json(mois_spec_to_json(spec));
    CHECK(back.p == spec.p);
    CHECK(back.alpha == spec.alpha);
    CHECK(back.beta == spec.beta);
    CHECK(back.F == spec.F);

    const HighestWeight hw = testing::random_symmetric_weight(GapParam(p), rng);
    const HighestWeight hw2 = highest_weight_from_json(highest_weight_to_json(hw));
    CHECK(hw2.h == hw.h);
    CHECK(hw2.c == hw.c);

    AlgebraElement e{GapParam(p)};
    for (int i = 0; i < 3; ++i)
      e.add_l(static_cast<long>(rng() % 21) - 10, testing::random_scalar(rng));
    e.add_c(static_cast<int>(rng() % p), testing::random_scalar(rng));
    CHECK(algebra_element_from_json(algebra_element_to_json(e)) == e);

    TensorVector t;
    long s = 1;
    while (is_gap_multiple(s, spec.p)) ++s;
    t.add(s, 0, testing::random_scalar(rng, true));
    const auto [spec2, t2] = tensor_vector_from_json(tensor_vector_to_json(spec, t));
    CHECK(spec2.F == spec.F);
    CHECK(t2 == t);
  }
}

TEST_CASE("weight parsing validates dimensions") {
  CHECK_THROWS_AS(
      highest_weight_from_json(Json{{"p", 3}, {"h", "1"}, {"C", {"1", "2"}}}),
      std::invalid_argument);
  CHECK_THROWS_AS(
      mois_spec_from_json(Json{{"p", 3}, {"F", {{"1", "2"}}}}),
      std::invalid_argument);
  CHECK_THROWS_AS(mois_spec_from_json(Json{{"p", 1}, {"F", Json::array()}}),
                  std::invalid_argument);
}

TEST_CASE("tensor parsing rejects gap-multiple legs") {
  const Json spec_json = mois_spec_to_json(bundled_examples()[0].spec);
  const Json bad{{"spec", spec_json},
                 {"terms", {Json{{"s", 3}, {"w", 0}, {"coeff", "1"}}}}};
  CHECK_THROWS_AS(tensor_vector_from_json(bad), std::invalid_argument);
}

TEST_CASE("scalar strings reject malformed fractions inside documents") {
  CHECK_THROWS_AS(
      mois_spec_from_json(Json{{"p", 2}, {"F", {{"1", "nope"}}}}),
      std::invalid_argument);
}

TEST_CASE("serialized documents are byte stable") {
  const MoisSpec& ex3 = bundled_examples()[2].spec;
  CHECK(mois_spec_to_json(ex3).dump(2) == mois_spec_to_json(ex3).dump(2));
  const Report r = run_corpus();
  CHECK(report_to_json(r).dump() == report_to_json(r).dump());
}
