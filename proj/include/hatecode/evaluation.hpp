#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "hatecode/classifier.hpp"
#include "hatecode/corpus.hpp"
#include "hatecode/features.hpp"
#include "hatecode/stopwords.hpp"

namespace hatecode {

// rows = actual {Benign, Hateful}, columns = predicted
struct ConfusionMatrix {
  std::array<std::array<std::int64_t, 2>, 2> counts{};

  std::int64_t total() const {
    return counts[0][0] + counts[0][1] + counts[1][0] + counts[1][1];
  }
  std::int64_t trace() const { return counts[0][0] + counts[1][1]; }

  bool operator==(const ConfusionMatrix&) const = default;
};

// nullopt marks an undefined value (zero denominator); it is reported as
// null downstream, never coerced to 0.
struct ClassMetrics {
  std::optional<double> tp_rate;
  std::optional<double> fp_rate;
  std::optional<double> precision;
  std::optional<double> recall;  // == tp_rate by definition
};

struct EvalReport {
  ClassMetrics benign;
  ClassMetrics hateful;
  ClassMetrics average;  // weighted by actual class counts
  double accuracy = 0.0;
  ConfusionMatrix matrix;
  std::size_t folds = 0;
  std::size_t benign_count = 0;
  std::size_t hateful_count = 0;
};

// Stratified k-fold split. Fold membership is decided on a canonical
// ordering (per-class, sorted by tweet id, then seeded shuffle), so the
// same seed yields the same folds no matter how the input was ordered.
// Throws TooFewExamples when either class has fewer than k members.
std::vector<std::vector<std::size_t>> make_folds(
    const std::vector<LabeledTweet>& data, std::size_t k, std::uint64_t seed);

struct PipelineOptions {
  std::set<std::string> stopwords = default_stopwords();
  VocabularyOptions vocab;
};

using FoldObserver =
    std::function<void(std::size_t fold, const Vocabulary& vocab)>;

// Runs stratified k-fold cross-validation. Preprocessing terms are computed
// per tweet, but the vocabulary is rebuilt from each fold's training split
// only, so held-out text never influences the feature space. Held-out
// predictions are pooled into one confusion matrix and metrics are derived
// once from that matrix.
EvalReport cross_validate(const std::vector<LabeledTweet>& data,
                          std::size_t k, const Hyperparameters& hyper,
                          std::uint64_t seed,
                          const PipelineOptions& options = {},
                          const FoldObserver& observer = {});

// Derives all metrics from a confusion matrix. class_counts are the actual
// (benign, hateful) totals and must match the matrix row sums.
EvalReport metrics_from_cm(const ConfusionMatrix& matrix,
                           std::pair<std::size_t, std::size_t> class_counts);

// Plain-text table (3-decimal, half-up rounding) plus accuracy, fold count
// and the confusion matrix.
std::string render_text(const EvalReport& report);

// Full-precision JSON document.
std::string render_json(const EvalReport& report);

}  // namespace hatecode
