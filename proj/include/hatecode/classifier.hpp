#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "hatecode/corpus.hpp"
#include "hatecode/features.hpp"

namespace hatecode {

struct Hyperparameters {
  double C = 1.0;       // hinge-loss weight, > 0
  int epochs = 50;      // >= 1
  std::uint64_t seed = 42;
};

struct LinearModel {
  std::vector<double> weights;  // one per vocabulary term, all finite
  double bias = 0.0;
  Vocabulary vocab;
  Hyperparameters hyper;
  std::size_t trained_on = 0;
};

struct Prediction {
  Label label = Label::Benign;
  double score = 0.0;  // w.x + b; Hateful iff score > 0, ties go Benign
};

// Minimizes (1/2)||w||^2 + C * sum_i max(0, 1 - y_i (w.x_i + b)) by
// epoch-wise subgradient descent with step 1/(lambda*t), lambda = 1/(C*n),
// one seeded shuffle per epoch, returning the average of all iterates.
// The bias is updated by the hinge subgradient and is not regularized.
// Identical data, hyperparameters and seed give bitwise-identical weights.
LinearModel train(const std::vector<FeatureVector>& vectors,
                  const std::vector<Label>& labels, const Vocabulary& vocab,
                  const Hyperparameters& hyper = {});

Prediction predict(const LinearModel& model, const FeatureVector& vector);

// The trained objective value; exposed so callers can check progress
// against the zero model (whose value is C * n).
double objective(const LinearModel& model,
                 const std::vector<FeatureVector>& vectors,
                 const std::vector<Label>& labels);

// Model file: one JSON document {version, weights[], bias, vocab:{terms[],
// min_df, max_terms}, hyper:{C, epochs, seed}, trained_on}. Doubles are
// written with round-trip precision, so load(save(m)) predicts bitwise
// identically to m.
void save_model(const LinearModel& model, const std::string& path);
void write_model(std::ostream& out, const LinearModel& model);
LinearModel load_model(const std::string& path);
LinearModel read_model(std::istream& in);

}  // namespace hatecode
