#include "relieflab/generators.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>
#include <string>

#include "relieflab/rng.hpp"

namespace relieflab {

std::string_view kind_name(GeneratorKind kind) {
  switch (kind) {
    case GeneratorKind::Rdg1Continuous: return "rdg-continuous";
    case GeneratorKind::Rdg1Categoric: return "rdg-categoric";
    case GeneratorKind::RandomRbf: return "rbf";
    case GeneratorKind::NonMonotonic: return "non-monotonic";
    case GeneratorKind::MajorityN: return "majority";
    case GeneratorKind::ModuloP: return "modulo-p";
  }
  return "?";
}

std::optional<GeneratorKind> kind_from_name(std::string_view name) {
  for (GeneratorKind k :
       {GeneratorKind::Rdg1Continuous, GeneratorKind::Rdg1Categoric,
        GeneratorKind::RandomRbf, GeneratorKind::NonMonotonic,
        GeneratorKind::MajorityN, GeneratorKind::ModuloP})
    if (kind_name(k) == name) return k;
  return std::nullopt;
}

double gaussian_pdf(double x, double mu, double sigma) {
  if (sigma <= 0.0) throw std::invalid_argument("gaussian_pdf: sigma must be positive");
  const double z = (x - mu) / sigma;
  return std::exp(-0.5 * z * z) / (sigma * std::sqrt(2.0 * std::numbers::pi));
}

bool rule_matches(const DecisionRule& rule, const Dataset& ds, int instance) {
  for (const RuleTerm& term : rule.terms) {
    const Value& v = ds.value(instance, term.feature);
    switch (term.op) {
      case RuleTerm::Op::Less:
        if (!(v.num() < term.threshold)) return false;
        break;
      case RuleTerm::Op::GreaterEq:
        if (!(v.num() >= term.threshold)) return false;
        break;
      case RuleTerm::Op::IsTrue:
        if (v.cat() != 1) return false;
        break;
      case RuleTerm::Op::IsFalse:
        if (v.cat() != 0) return false;
        break;
    }
  }
  return true;
}

std::optional<int> classify(const std::vector<DecisionRule>& rules, const Dataset& ds,
                            int instance) {
  for (const DecisionRule& rule : rules)
    if (rule_matches(rule, ds, instance)) return rule.class_label;
  return std::nullopt;
}

namespace {

void validate(const GeneratorSpec& spec) {
  if (spec.n_relevant < 1) throw std::invalid_argument("generator: n_relevant must be >= 1");
  if (spec.n_irrelevant < 0)
    throw std::invalid_argument("generator: n_irrelevant must be >= 0");
  if (spec.n_instances < 1)
    throw std::invalid_argument("generator: n_instances must be >= 1");
  if (spec.kind == GeneratorKind::ModuloP && spec.p < 2)
    throw std::invalid_argument("generator: modulo-p needs p >= 2");
  if ((spec.kind == GeneratorKind::Rdg1Continuous ||
       spec.kind == GeneratorKind::Rdg1Categoric ||
       spec.kind == GeneratorKind::RandomRbf) &&
      spec.n_classes < 2)
    throw std::invalid_argument("generator: need n_classes >= 2");
  if (spec.kind == GeneratorKind::RandomRbf && spec.centers_per_class < 1)
    throw std::invalid_argument("generator: need centers_per_class >= 1");
}

std::vector<FeatureMeta> feature_row(const GeneratorSpec& spec, FeatureKind kind) {
  std::vector<FeatureMeta> features;
  features.reserve(static_cast<std::size_t>(spec.n_relevant + spec.n_irrelevant));
  for (int f = 0; f < spec.n_relevant + spec.n_irrelevant; ++f)
    features.push_back({"f" + std::to_string(f), kind, f < spec.n_relevant, 0.0, 0.0});
  return features;
}

// Uniform draw from (lo, hi]: used where a strict inequality must stay
// satisfiable.
double uniform_open_low(Rng& rng, double lo, double hi) {
  double u;
  do {
    u = rng.uniform();
  } while (u == 0.0);
  return lo + (hi - lo) * u;
}

// --- RDG1 ---------------------------------------------------------------

// A rule over random distinct relevant attributes; term count uniform in
// 1..min(10, n_relevant). When `satisfy` points at an instance row the
// thresholds/literals are drawn so that row matches (the "new rule according
// to this current instance" path); otherwise they are unconstrained.
DecisionRule synthesize_rule(Rng& rng, const GeneratorSpec& spec, bool boolean,
                             int class_label, const std::vector<Value>* satisfy) {
  const int max_terms = std::min(10, spec.n_relevant);
  const int n_terms = 1 + rng.bounded_int(max_terms);

  std::vector<int> attrs(static_cast<std::size_t>(spec.n_relevant));
  std::iota(attrs.begin(), attrs.end(), 0);
  rng.shuffle(attrs);
  attrs.resize(static_cast<std::size_t>(n_terms));

  DecisionRule rule;
  rule.class_label = class_label;
  for (int attr : attrs) {
    RuleTerm term;
    term.feature = attr;
    if (boolean) {
      int literal;
      if (satisfy != nullptr)
        literal = (*satisfy)[static_cast<std::size_t>(attr)].cat();
      else
        literal = rng.bounded_int(2);
      term.op = literal == 1 ? RuleTerm::Op::IsTrue : RuleTerm::Op::IsFalse;
    } else {
      const bool less = rng.bounded_int(2) == 0;
      term.op = less ? RuleTerm::Op::Less : RuleTerm::Op::GreaterEq;
      if (satisfy != nullptr) {
        const double v = (*satisfy)[static_cast<std::size_t>(attr)].num();
        // Threshold from the sub-interval the instance's value satisfies.
        term.threshold = less ? uniform_open_low(rng, v, 1.0) : rng.uniform(0.0, v);
      } else {
        term.threshold = rng.uniform();
      }
    }
    rule.terms.push_back(term);
  }
  return rule;
}

bool row_matches(const DecisionRule& rule, const std::vector<Value>& row) {
  for (const RuleTerm& term : rule.terms) {
    const Value& v = row[static_cast<std::size_t>(term.feature)];
    switch (term.op) {
      case RuleTerm::Op::Less:
        if (!(v.num() < term.threshold)) return false;
        break;
      case RuleTerm::Op::GreaterEq:
        if (!(v.num() >= term.threshold)) return false;
        break;
      case RuleTerm::Op::IsTrue:
        if (v.cat() != 1) return false;
        break;
      case RuleTerm::Op::IsFalse:
        if (v.cat() != 0) return false;
        break;
    }
  }
  return true;
}

}  // namespace

RdgProblem generate_rdg(const GeneratorSpec& spec) {
  validate(spec);
  const bool boolean = spec.kind == GeneratorKind::Rdg1Categoric;
  if (!boolean && spec.kind != GeneratorKind::Rdg1Continuous)
    throw std::invalid_argument("generate_rdg: wrong generator kind");

  Rng rng(spec.seed);
  const int nf = spec.n_relevant + spec.n_irrelevant;

  // Initial decision list: one rule per class so every label is reachable.
  std::vector<DecisionRule> rules;
  for (int c = 0; c < spec.n_classes; ++c)
    rules.push_back(synthesize_rule(rng, spec, boolean, c, nullptr));

  std::vector<Value> values;
  values.reserve(static_cast<std::size_t>(spec.n_instances) * static_cast<std::size_t>(nf));
  std::vector<int> labels;
  labels.reserve(static_cast<std::size_t>(spec.n_instances));

  std::vector<Value> row(static_cast<std::size_t>(nf));
  for (int i = 0; i < spec.n_instances; ++i) {
    for (int f = 0; f < nf; ++f)
      row[static_cast<std::size_t>(f)] =
          boolean ? Value::cat(rng.bounded_int(2)) : Value::num(rng.uniform());

    int label = -1;
    for (const DecisionRule& rule : rules) {
      if (row_matches(rule, row)) {
        label = rule.class_label;
        break;
      }
    }
    if (label < 0) {
      // The list failed to classify: append a rule this instance satisfies.
      const int cls = rng.bounded_int(spec.n_classes);
      rules.push_back(synthesize_rule(rng, spec, boolean, cls, &row));
      label = cls;
    }

    values.insert(values.end(), row.begin(), row.end());
    labels.push_back(label);
  }

  const FeatureKind kind = boolean ? FeatureKind::categoric(2) : FeatureKind::numeric();
  Dataset ds = compute_stats(
      Dataset(feature_row(spec, kind), std::move(values), std::move(labels), spec.n_classes));
  return {std::move(ds), std::move(rules)};
}

Dataset generate_random_rbf(const GeneratorSpec& spec) {
  validate(spec);
  if (spec.kind != GeneratorKind::RandomRbf)
    throw std::invalid_argument("generate_random_rbf: wrong generator kind");
  Rng rng(spec.seed);

  struct Center {
    int class_label;
    double weight;
    std::vector<double> centroid;  // relevant attributes only
    double sigma;
  };

  // Centers per class: weight in (0,1], centroid in [0,1) per relevant
  // attribute, sigma in (0, 0.5].
  std::vector<Center> centers;
  std::vector<double> center_weights;
  for (int c = 0; c < spec.n_classes; ++c) {
    for (int j = 0; j < spec.centers_per_class; ++j) {
      Center center;
      center.class_label = c;
      center.weight = 1.0 - rng.uniform();
      center.centroid.resize(static_cast<std::size_t>(spec.n_relevant));
      for (double& coordinate : center.centroid) coordinate = rng.uniform();
      center.sigma = 0.5 * (1.0 - rng.uniform());
      centers.push_back(std::move(center));
      center_weights.push_back(centers.back().weight);
    }
  }

  // Irrelevant attributes follow their own fixed Gaussians, blind to class.
  std::vector<double> irr_mu(static_cast<std::size_t>(spec.n_irrelevant));
  std::vector<double> irr_sigma(static_cast<std::size_t>(spec.n_irrelevant));
  for (int f = 0; f < spec.n_irrelevant; ++f) {
    irr_mu[static_cast<std::size_t>(f)] = rng.uniform();
    irr_sigma[static_cast<std::size_t>(f)] = 0.5 * (1.0 - rng.uniform());
  }

  const int nf = spec.n_relevant + spec.n_irrelevant;
  std::vector<Value> values;
  values.reserve(static_cast<std::size_t>(spec.n_instances) * static_cast<std::size_t>(nf));
  std::vector<int> labels;
  labels.reserve(static_cast<std::size_t>(spec.n_instances));

  std::vector<double> direction(static_cast<std::size_t>(spec.n_relevant));
  for (int i = 0; i < spec.n_instances; ++i) {
    const Center& center = centers[static_cast<std::size_t>(pick_weighted(rng, center_weights))];

    // Random direction (isotropic), scaled so its length is |N(0, sigma)|.
    double norm_sq = 0.0;
    for (double& component : direction) {
      component = rng.normal();
      norm_sq += component * component;
    }
    const double norm = std::sqrt(norm_sq);
    const double radius = std::abs(rng.normal(0.0, center.sigma));
    for (int f = 0; f < spec.n_relevant; ++f) {
      const double offset =
          norm > 0.0 ? direction[static_cast<std::size_t>(f)] / norm * radius : 0.0;
      values.push_back(Value::num(center.centroid[static_cast<std::size_t>(f)] + offset));
    }
    for (int f = 0; f < spec.n_irrelevant; ++f)
      values.push_back(Value::num(rng.normal(irr_mu[static_cast<std::size_t>(f)],
                                             irr_sigma[static_cast<std::size_t>(f)])));
    labels.push_back(center.class_label);
  }

  return compute_stats(Dataset(feature_row(spec, FeatureKind::numeric()), std::move(values),
                               std::move(labels), spec.n_classes));
}

NonMonotonicProblem generate_non_monotonic(const GeneratorSpec& spec) {
  validate(spec);
  if (spec.kind != GeneratorKind::NonMonotonic)
    throw std::invalid_argument("generate_non_monotonic: wrong generator kind");
  Rng rng(spec.seed);

  const int n_classes = spec.n_relevant;  // class = floor(r_i), r_i in [0, N)
  const int nf = spec.n_relevant + spec.n_irrelevant;

  std::vector<double> ponderators(static_cast<std::size_t>(spec.n_relevant));
  for (double& r_a : ponderators) r_a = rng.uniform();

  std::vector<Value> values;
  values.reserve(static_cast<std::size_t>(spec.n_instances) * static_cast<std::size_t>(nf));
  std::vector<int> labels;
  std::vector<double> draws;
  draws.reserve(static_cast<std::size_t>(spec.n_instances));

  for (int i = 1; i <= spec.n_instances; ++i) {  // instances are 1-based here
    const double r_i = rng.uniform() * static_cast<double>(spec.n_relevant);
    draws.push_back(r_i);
    const bool odd = i % 2 != 0;
    const double scaled = odd ? r_i : std::sqrt(r_i);
    for (double r_a : ponderators) values.push_back(Value::num(r_a * scaled));
    for (int f = 0; f < spec.n_irrelevant; ++f) values.push_back(Value::num(rng.uniform()));
    labels.push_back(static_cast<int>(std::floor(r_i)));
  }

  Dataset ds = compute_stats(Dataset(feature_row(spec, FeatureKind::numeric()),
                                     std::move(values), std::move(labels), n_classes));
  return {std::move(ds), std::move(ponderators), std::move(draws)};
}

Dataset generate_majority(const GeneratorSpec& spec) {
  validate(spec);
  if (spec.kind != GeneratorKind::MajorityN)
    throw std::invalid_argument("generate_majority: wrong generator kind");
  Rng rng(spec.seed);

  const int nf = spec.n_relevant + spec.n_irrelevant;
  std::vector<Value> values;
  values.reserve(static_cast<std::size_t>(spec.n_instances) * static_cast<std::size_t>(nf));
  std::vector<int> labels;

  for (int i = 0; i < spec.n_instances; ++i) {
    int ones = 0;
    for (int f = 0; f < spec.n_relevant; ++f) {
      const int bit = rng.bounded_int(2);
      ones += bit;
      values.push_back(Value::cat(bit));
    }
    for (int f = 0; f < spec.n_irrelevant; ++f)
      values.push_back(Value::cat(rng.bounded_int(2)));
    // Strict majority; an even split is class 0.
    labels.push_back(2 * ones > spec.n_relevant ? 1 : 0);
  }

  return compute_stats(Dataset(feature_row(spec, FeatureKind::categoric(2)),
                               std::move(values), std::move(labels), 2));
}

Dataset generate_modulo_p(const GeneratorSpec& spec) {
  validate(spec);
  if (spec.kind != GeneratorKind::ModuloP)
    throw std::invalid_argument("generate_modulo_p: wrong generator kind");
  Rng rng(spec.seed);

  const int nf = spec.n_relevant + spec.n_irrelevant;
  std::vector<Value> values;
  values.reserve(static_cast<std::size_t>(spec.n_instances) * static_cast<std::size_t>(nf));
  std::vector<int> labels;

  for (int i = 0; i < spec.n_instances; ++i) {
    long long sum = 0;
    for (int f = 0; f < nf; ++f) {
      const int v = rng.bounded_int(spec.p);
      if (f < spec.n_relevant) sum += v;
      values.push_back(Value::cat(v));
    }
    labels.push_back(static_cast<int>(sum % spec.p));
  }

  return compute_stats(Dataset(feature_row(spec, FeatureKind::categoric(spec.p)),
                               std::move(values), std::move(labels), spec.p));
}

Dataset generate(const GeneratorSpec& spec) {
  switch (spec.kind) {
    case GeneratorKind::Rdg1Continuous:
    case GeneratorKind::Rdg1Categoric:
      return generate_rdg(spec).dataset;
    case GeneratorKind::RandomRbf:
      return generate_random_rbf(spec);
    case GeneratorKind::NonMonotonic:
      return generate_non_monotonic(spec).dataset;
    case GeneratorKind::MajorityN:
      return generate_majority(spec);
    case GeneratorKind::ModuloP:
      return generate_modulo_p(spec);
  }
  throw std::logic_error("generate: unknown kind");
}

}  // namespace relieflab
