#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "relieflab/dataset.hpp"

namespace relieflab {

enum class GeneratorKind {
  Rdg1Continuous,
  Rdg1Categoric,
  RandomRbf,
  NonMonotonic,
  MajorityN,
  ModuloP,
};

std::string_view kind_name(GeneratorKind kind);
std::optional<GeneratorKind> kind_from_name(std::string_view name);

struct GeneratorSpec {
  GeneratorKind kind = GeneratorKind::ModuloP;
  int n_relevant = 1;
  int n_irrelevant = 0;
  int n_instances = 100;
  std::uint64_t seed = 0;
  int p = 3;                 // ModuloP modulus, >= 2
  int n_classes = 2;         // Rdg1 / RandomRbf
  int centers_per_class = 3;  // RandomRbf
};

// One conjunct of a decision rule. Numeric terms compare an attribute
// against a threshold; boolean terms require a literal value.
struct RuleTerm {
  enum class Op { Less, GreaterEq, IsTrue, IsFalse };
  int feature = 0;
  Op op = Op::Less;
  double threshold = 0.0;
};

struct DecisionRule {
  std::vector<RuleTerm> terms;  // conjunction, 1..10 terms
  int class_label = 0;
};

bool rule_matches(const DecisionRule& rule, const Dataset& ds, int instance);
// First matching rule's class, or nullopt when the list fails to classify.
std::optional<int> classify(const std::vector<DecisionRule>& rules,
                            const Dataset& ds, int instance);

// RDG1 output: the dataset plus the final decision list, so the list can be
// replayed against the emitted labels.
struct RdgProblem {
  Dataset dataset;
  std::vector<DecisionRule> rules;
};

// NonMonotonic output with the latent draws (per-attribute ponderator r_a,
// per-instance r_i) that the labeling rule is defined over.
struct NonMonotonicProblem {
  Dataset dataset;
  std::vector<double> ponderators;  // r_a per relevant attribute
  std::vector<double> draws;        // r_i per instance
};

// Gaussian density (1/(sigma*sqrt(2*pi))) * exp(-(x-mu)^2 / (2*sigma^2)).
double gaussian_pdf(double x, double mu, double sigma);

RdgProblem generate_rdg(const GeneratorSpec& spec);
Dataset generate_random_rbf(const GeneratorSpec& spec);
NonMonotonicProblem generate_non_monotonic(const GeneratorSpec& spec);
Dataset generate_majority(const GeneratorSpec& spec);
Dataset generate_modulo_p(const GeneratorSpec& spec);

// Dispatch on spec.kind. Every generator is pure in the spec: identical spec,
// identical dataset. Relevant flags mark exactly the first n_relevant
// features and no value is ever missing.
Dataset generate(const GeneratorSpec& spec);

}  // namespace relieflab
