#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <numeric>

#include "builders.hpp"
#include "relieflab/generators.hpp"
#include "relieflab/myopic.hpp"
#include "relieflab/rng.hpp"

using namespace relieflab;
using namespace relieflab::testing;

TEST_CASE("p_eqval sums squared value probabilities") {
  AttributeStats stats;
  stats.value_probs = {0.5, 0.25, 0.25};
  CHECK(p_eqval(stats) == 0.375);
  stats.value_probs = {0.5, 0.5};
  CHECK(p_eqval(stats) == 0.5);
  stats.value_probs = {1.0};
  CHECK(p_eqval(stats) == 1.0);
  stats.value_probs = {};
  CHECK_THROWS_AS(p_eqval(stats), std::invalid_argument);
}

TEST_CASE("modified Gini gain endpoints") {
  // attribute independent of the class
  AttributeStats indep;
  indep.value_probs = {0.5, 0.5};
  indep.class_probs = {0.3, 0.7};
  indep.cond_class_probs = {{0.3, 0.7}, {0.3, 0.7}};
  CHECK(std::abs(gini_gain_modified(indep)) <= 1e-12);
  CHECK(std::abs(myopic_weight(indep)) <= 1e-12);

  // attribute fully determines a balanced binary class
  AttributeStats determ;
  determ.value_probs = {0.5, 0.5};
  determ.class_probs = {0.5, 0.5};
  determ.cond_class_probs = {{1.0, 0.0}, {0.0, 1.0}};
  CHECK(gini_gain_modified(determ) == Catch::Approx(0.5).margin(1e-12));
  CHECK(myopic_weight(determ) == Catch::Approx(1.0).margin(1e-12));

  // single-valued attribute carries nothing
  AttributeStats single;
  single.value_probs = {1.0};
  single.class_probs = {0.4, 0.6};
  single.cond_class_probs = {{0.4, 0.6}};
  CHECK(std::abs(gini_gain_modified(single)) <= 1e-12);
}

TEST_CASE("myopic_weight rejects a degenerate class distribution") {
  AttributeStats stats;
  stats.value_probs = {1.0};
  stats.class_probs = {1.0};
  stats.cond_class_probs = {{1.0}};
  CHECK_THROWS_AS(myopic_weight(stats), std::invalid_argument);
}

TEST_CASE("attribute_stats computes empirical distributions") {
  const Dataset ds = categoric_dataset(2, {{0}, {0}, {1}, {0}}, {0, 0, 1, 1});
  const AttributeStats stats = attribute_stats(ds, 0);
  CHECK(stats.value_probs[0] == 0.75);
  CHECK(stats.value_probs[1] == 0.25);
  CHECK(stats.class_probs[0] == 0.5);
  CHECK(stats.cond_class_probs[0][0] == Catch::Approx(2.0 / 3.0).margin(1e-12));
  CHECK(stats.cond_class_probs[1][1] == 1.0);

  const Dataset numeric = numeric_dataset({{0.1}, {0.2}}, {0, 1});
  CHECK_THROWS_AS(attribute_stats(numeric, 0), std::invalid_argument);
}

TEST_CASE("myopic weight is invariant under value relabeling") {
  Rng rng(314);
  for (int round = 0; round < 20; ++round) {
    const int domain = 3 + rng.bounded_int(3);
    std::vector<std::vector<int>> rows;
    std::vector<int> labels;
    for (int i = 0; i < 60; ++i) {
      rows.push_back({rng.bounded_int(domain)});
      labels.push_back(i < 2 ? i : rng.bounded_int(2));
    }
    const Dataset ds = categoric_dataset(domain, rows, labels);
    const double base = myopic_weight(attribute_stats(ds, 0));

    // apply a permutation of the symbols
    std::vector<int> perm(static_cast<std::size_t>(domain));
    std::iota(perm.begin(), perm.end(), 0);
    rng.shuffle(perm);
    std::vector<std::vector<int>> permuted;
    for (const auto& row : rows)
      permuted.push_back({perm[static_cast<std::size_t>(row[0])]});
    const Dataset relabeled = categoric_dataset(domain, permuted, labels);
    CHECK(myopic_weight(attribute_stats(relabeled, 0)) ==
          Catch::Approx(base).margin(1e-12));
  }
}

// Estimating the probability difference with the neighbor condition removed
// (uniform random partners, with replacement) must converge to the closed
// form.
TEST_CASE("monte-carlo neighbor-free estimate matches myopic_weight") {
  GeneratorSpec spec;
  spec.kind = GeneratorKind::ModuloP;
  spec.n_relevant = 2;
  spec.n_irrelevant = 2;
  spec.n_instances = 200;
  spec.p = 3;
  spec.seed = 2718;
  const Dataset ds = generate(spec);

  Rng rng(161803);
  const int draws = 100000;
  for (int f = 0; f < ds.feature_count(); ++f) {
    double hit_sum = 0.0, miss_sum = 0.0;
    long hit_count = 0, miss_count = 0;
    for (int d = 0; d < draws; ++d) {
      const int i = rng.bounded_int(ds.instance_count());
      const int j = rng.bounded_int(ds.instance_count());
      const double dv = ds.value(i, f).cat() == ds.value(j, f).cat() ? 0.0 : 1.0;
      if (ds.label(i) == ds.label(j)) {
        hit_sum += dv;
        ++hit_count;
      } else {
        miss_sum += dv;
        ++miss_count;
      }
    }
    REQUIRE(hit_count > 0);
    REQUIRE(miss_count > 0);
    const double estimate = miss_sum / miss_count - hit_sum / hit_count;
    const double closed_form = myopic_weight(attribute_stats(ds, f));
    INFO("feature " << f);
    CHECK(std::abs(estimate - closed_form) <= 0.03);
  }
}
