#include <catch2/catch_amalgamated.hpp>

#include "builders.hpp"
#include "relieflab/dataset.hpp"
#include "relieflab/rng.hpp"

using namespace relieflab;
using namespace relieflab::testing;

TEST_CASE("class priors are empirical frequencies") {
  const Dataset ds = numeric_dataset({{0.2}, {0.7}, {0.5}}, {0, 0, 1});
  REQUIRE(ds.stats_ready());
  CHECK(ds.class_priors()[0] == Catch::Approx(2.0 / 3.0).margin(1e-12));
  CHECK(ds.class_priors()[1] == Catch::Approx(1.0 / 3.0).margin(1e-12));
  CHECK(ds.present_class_count() == 2);
}

TEST_CASE("observed range per numeric feature") {
  const Dataset ds = numeric_dataset({{0.2}, {0.7}, {0.5}}, {0, 0, 1});
  CHECK(ds.feature(0).observed_min == 0.2);
  CHECK(ds.feature(0).observed_max == 0.7);

  const Dataset constant = numeric_dataset({{0.4}, {0.4}}, {0, 1});
  CHECK(constant.feature(0).observed_min == 0.4);
  CHECK(constant.feature(0).observed_max == 0.4);
}

TEST_CASE("compute_stats error cases") {
  CHECK_THROWS_AS(compute_stats(Dataset({numeric_feature("f0")}, {}, {}, 1)),
                  std::invalid_argument);

  // numeric feature with every value missing
  std::vector<FeatureMeta> features{numeric_feature("f0")};
  std::vector<Value> all_missing{Value::missing(), Value::missing()};
  CHECK_THROWS_AS(compute_stats(Dataset(features, all_missing, {0, 1}, 2)),
                  std::runtime_error);
}

TEST_CASE("structural validation") {
  CHECK_THROWS_AS(make_dataset({numeric_feature("f0")}, {{Value::num(0.0), Value::num(1.0)}},
                               {0}),
                  std::invalid_argument);
  CHECK_THROWS_AS(
      make_dataset({categoric_feature("f0", 2)}, {{Value::cat(2)}}, {0}),
      std::invalid_argument);
  CHECK_THROWS_AS(
      make_dataset({categoric_feature("f0", 2)}, {{Value::cat(0)}}, {-1}),
      std::invalid_argument);
  CHECK_THROWS_AS(FeatureKind::categoric(1), std::invalid_argument);
}

TEST_CASE("class_conditional_table frequencies") {
  // class 0 has values [a, a, b]; class 1 has [b]
  const Dataset ds = categoric_dataset(2, {{0}, {0}, {1}, {1}}, {0, 0, 0, 1});
  const CondTable table = class_conditional_table(ds, 0);
  CHECK(table[0][0] == Catch::Approx(2.0 / 3.0).margin(1e-12));
  CHECK(table[0][1] == Catch::Approx(1.0 / 3.0).margin(1e-12));
  CHECK(table[1][0] == 0.0);
  CHECK(table[1][1] == 1.0);  // point mass
}

TEST_CASE("class_conditional_table uniform case") {
  const Dataset ds =
      categoric_dataset(3, {{0}, {1}, {2}, {0}, {1}, {2}}, {0, 0, 0, 1, 1, 1});
  const CondTable table = class_conditional_table(ds, 0);
  for (int c = 0; c < 2; ++c)
    for (int v = 0; v < 3; ++v)
      CHECK(table[static_cast<std::size_t>(c)][static_cast<std::size_t>(v)] ==
            Catch::Approx(1.0 / 3.0).margin(1e-12));
}

TEST_CASE("class_conditional_table degenerate class") {
  // class 1 exists but every one of its values of f0 is missing
  std::vector<FeatureMeta> features{categoric_feature("f0", 2)};
  std::vector<std::vector<Value>> rows{{Value::cat(0)}, {Value::missing()}};
  const Dataset ds = make_dataset(features, rows, {0, 1});
  CHECK_THROWS_AS(class_conditional_table(ds, 0), std::runtime_error);
  CHECK_THROWS_AS(class_conditional_table(numeric_dataset({{0.1}, {0.2}}, {0, 1}), 0),
                  std::invalid_argument);
}

TEST_CASE("priors and conditional tables normalize on fuzzed data") {
  Rng rng(404);
  for (int round = 0; round < 50; ++round) {
    const Dataset ds = fuzz_dataset(rng);
    double prior_sum = 0.0;
    for (double p : ds.class_priors()) prior_sum += p;
    CHECK(std::abs(prior_sum - 1.0) <= 1e-9);

    for (int f = 0; f < ds.feature_count(); ++f) {
      if (!ds.feature(f).kind.is_categoric()) continue;
      const CondTable table = class_conditional_table(ds, f);
      for (int c = 0; c < ds.class_count(); ++c) {
        if (ds.class_priors()[static_cast<std::size_t>(c)] == 0.0) continue;
        double row_sum = 0.0;
        for (double p : table[static_cast<std::size_t>(c)]) row_sum += p;
        CHECK(std::abs(row_sum - 1.0) <= 1e-9);
      }
    }
  }
}
