#include "hatecode/evaluation.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <sstream>

#include "json.hpp"

#include "hatecode/errors.hpp"
#include "hatecode/rng.hpp"
#include "hatecode/textprep.hpp"

namespace hatecode {

namespace {

std::optional<double> ratio(std::int64_t num, std::int64_t den) {
  if (den == 0) return std::nullopt;
  return static_cast<double>(num) / static_cast<double>(den);
}

std::optional<double> weighted(std::optional<double> a, double wa,
                               std::optional<double> b, double wb) {
  if (!a || !b) return std::nullopt;
  return (*a * wa + *b * wb) / (wa + wb);
}

// half-up to 3 decimals; metrics are always in [0, 1]
std::string fmt3(const std::optional<double>& v) {
  if (!v) return "null";
  long scaled = static_cast<long>(std::floor(*v * 1000.0 + 0.5));
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%ld.%03ld", scaled / 1000, scaled % 1000);
  return buf;
}

std::string fmt6(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.6f", v);
  return buf;
}

nlohmann::ordered_json metrics_json(const ClassMetrics& m) {
  auto field = [](const std::optional<double>& v) {
    return v ? nlohmann::ordered_json(*v) : nlohmann::ordered_json(nullptr);
  };
  return {{"tp_rate", field(m.tp_rate)},
          {"fp_rate", field(m.fp_rate)},
          {"precision", field(m.precision)},
          {"recall", field(m.recall)}};
}

}  // namespace

std::vector<std::vector<std::size_t>> make_folds(
    const std::vector<LabeledTweet>& data, std::size_t k, std::uint64_t seed) {
  if (k < 2) throw InvalidArgument("fold count must be >= 2");

  std::vector<std::size_t> benign, hateful;
  for (std::size_t i = 0; i < data.size(); ++i) {
    (data[i].label == Label::Hateful ? hateful : benign).push_back(i);
  }
  if (benign.size() < k || hateful.size() < k) {
    throw TooFewExamples("each class needs at least " + std::to_string(k) +
                         " examples, got benign=" +
                         std::to_string(benign.size()) +
                         " hateful=" + std::to_string(hateful.size()));
  }

  auto by_id = [&](std::size_t a, std::size_t b) {
    return data[a].tweet.id < data[b].tweet.id;
  };
  std::sort(benign.begin(), benign.end(), by_id);
  std::sort(hateful.begin(), hateful.end(), by_id);

  Rng rng(seed);
  deterministic_shuffle(benign, rng);
  deterministic_shuffle(hateful, rng);

  // Leftover examples (n mod k) rotate across classes so they do not pile
  // onto the same folds; fold sizes end up within one of each other.
  std::vector<std::vector<std::size_t>> folds(k);
  std::size_t offset = 0;
  for (const auto* cls : {&benign, &hateful}) {
    const std::size_t base = cls->size() / k;
    const std::size_t extra = cls->size() % k;
    std::vector<std::size_t> quota(k, base);
    for (std::size_t j = 0; j < extra; ++j) ++quota[(offset + j) % k];
    offset = (offset + extra) % k;

    std::size_t pos = 0;
    for (std::size_t f = 0; f < k; ++f) {
      for (std::size_t j = 0; j < quota[f]; ++j) {
        folds[f].push_back((*cls)[pos++]);
      }
    }
  }
  return folds;
}

EvalReport metrics_from_cm(const ConfusionMatrix& matrix,
                           std::pair<std::size_t, std::size_t> class_counts) {
  const auto& m = matrix.counts;
  for (int r = 0; r < 2; ++r) {
    for (int c = 0; c < 2; ++c) {
      if (m[r][c] < 0) throw InvalidArgument("negative confusion count");
    }
  }
  const std::int64_t row0 = m[0][0] + m[0][1];
  const std::int64_t row1 = m[1][0] + m[1][1];
  if (row0 != static_cast<std::int64_t>(class_counts.first) ||
      row1 != static_cast<std::int64_t>(class_counts.second)) {
    throw DimensionMismatch(
        "matrix row sums (" + std::to_string(row0) + ", " +
        std::to_string(row1) + ") do not match class counts (" +
        std::to_string(class_counts.first) + ", " +
        std::to_string(class_counts.second) + ")");
  }
  const std::int64_t total = matrix.total();
  if (total == 0) throw InvalidArgument("empty confusion matrix");

  EvalReport report;
  report.matrix = matrix;
  report.benign_count = class_counts.first;
  report.hateful_count = class_counts.second;

  // per class c: precision = TP_c / column c, recall = tp_rate = TP_c /
  // row c, fp_rate = other row's entry in column c / other row's total
  report.benign.tp_rate = ratio(m[0][0], row0);
  report.benign.recall = report.benign.tp_rate;
  report.benign.precision = ratio(m[0][0], m[0][0] + m[1][0]);
  report.benign.fp_rate = ratio(m[1][0], row1);

  report.hateful.tp_rate = ratio(m[1][1], row1);
  report.hateful.recall = report.hateful.tp_rate;
  report.hateful.precision = ratio(m[1][1], m[0][1] + m[1][1]);
  report.hateful.fp_rate = ratio(m[0][1], row0);

  const double nb = static_cast<double>(class_counts.first);
  const double nh = static_cast<double>(class_counts.second);
  report.average.tp_rate = weighted(report.benign.tp_rate, nb,
                                    report.hateful.tp_rate, nh);
  report.average.fp_rate = weighted(report.benign.fp_rate, nb,
                                    report.hateful.fp_rate, nh);
  report.average.precision = weighted(report.benign.precision, nb,
                                      report.hateful.precision, nh);
  report.average.recall = report.average.tp_rate;

  report.accuracy =
      static_cast<double>(matrix.trace()) / static_cast<double>(total);
  return report;
}

EvalReport cross_validate(const std::vector<LabeledTweet>& data,
                          std::size_t k, const Hyperparameters& hyper,
                          std::uint64_t seed, const PipelineOptions& options,
                          const FoldObserver& observer) {
  const auto folds = make_folds(data, k, seed);

  std::vector<std::vector<std::string>> docs(data.size());
  for (std::size_t i = 0; i < data.size(); ++i) {
    docs[i] = preprocess(data[i].tweet.text, options.stopwords);
  }

  ConfusionMatrix pooled;
  for (std::size_t f = 0; f < k; ++f) {
    std::vector<std::vector<std::string>> train_docs;
    std::vector<Label> train_labels;
    for (std::size_t g = 0; g < k; ++g) {
      if (g == f) continue;
      for (std::size_t i : folds[g]) {
        train_docs.push_back(docs[i]);
        train_labels.push_back(data[i].label);
      }
    }

    const Vocabulary vocab = build_vocabulary(train_docs, options.vocab);
    if (observer) observer(f, vocab);

    std::vector<FeatureVector> train_vecs;
    train_vecs.reserve(train_docs.size());
    for (const auto& doc : train_docs) train_vecs.push_back(vectorize(doc, vocab));
    const LinearModel model = train(train_vecs, train_labels, vocab, hyper);

    for (std::size_t i : folds[f]) {
      const Prediction pred = predict(model, vectorize(docs[i], vocab));
      const int actual = data[i].label == Label::Hateful ? 1 : 0;
      const int predicted = pred.label == Label::Hateful ? 1 : 0;
      ++pooled.counts[actual][predicted];
    }
  }

  std::size_t benign = 0, hateful = 0;
  for (const auto& item : data) {
    (item.label == Label::Hateful ? hateful : benign) += 1;
  }
  EvalReport report = metrics_from_cm(pooled, {benign, hateful});
  report.folds = k;
  return report;
}

std::string render_text(const EvalReport& report) {
  std::ostringstream out;
  char line[128];
  std::snprintf(line, sizeof(line), "%-9s %8s %8s %10s %8s\n", "Class",
                "TP-Rate", "FP-Rate", "Precision", "Recall");
  out << line;
  auto row = [&](const char* name, const ClassMetrics& m) {
    std::snprintf(line, sizeof(line), "%-9s %8s %8s %10s %8s\n", name,
                  fmt3(m.tp_rate).c_str(), fmt3(m.fp_rate).c_str(),
                  fmt3(m.precision).c_str(), fmt3(m.recall).c_str());
    out << line;
  };
  row("Benign", report.benign);
  row("Hateful", report.hateful);
  row("Average", report.average);

  out << "\nAccuracy: " << fmt6(report.accuracy) << " (" << report.matrix.trace()
      << "/" << report.matrix.total() << ")\n";
  if (report.folds > 0) out << "Folds: " << report.folds << "\n";

  out << "\nConfusion matrix (rows = actual, columns = predicted)\n";
  std::snprintf(line, sizeof(line), "%-9s %8s %8s\n", "", "Benign", "Hateful");
  out << line;
  std::snprintf(line, sizeof(line), "%-9s %8lld %8lld\n", "Benign",
                static_cast<long long>(report.matrix.counts[0][0]),
                static_cast<long long>(report.matrix.counts[0][1]));
  out << line;
  std::snprintf(line, sizeof(line), "%-9s %8lld %8lld\n", "Hateful",
                static_cast<long long>(report.matrix.counts[1][0]),
                static_cast<long long>(report.matrix.counts[1][1]));
  out << line;
  return out.str();
}

std::string render_json(const EvalReport& report) {
  nlohmann::ordered_json doc;
  doc["accuracy"] = report.accuracy;
  doc["folds"] = report.folds;
  doc["class_counts"] = {{"benign", report.benign_count},
                         {"hateful", report.hateful_count}};
  doc["confusion_matrix"] = {
      {report.matrix.counts[0][0], report.matrix.counts[0][1]},
      {report.matrix.counts[1][0], report.matrix.counts[1][1]}};
  doc["per_class"] = {{"benign", metrics_json(report.benign)},
                      {"hateful", metrics_json(report.hateful)}};
  doc["average"] = metrics_json(report.average);
  return doc.dump(2) + "\n";
}

}  // namespace hatecode
