#include "hatecode/classifier.hpp"

#include <cmath>
#include <fstream>
#include <numeric>
#include <sstream>

#include "json.hpp"

#include "hatecode/errors.hpp"
#include "hatecode/rng.hpp"

namespace hatecode {

namespace {

constexpr int kModelVersion = 1;

double dot(const std::vector<double>& w, const FeatureVector& x) {
  double sum = 0.0;
  for (std::size_t j = 0; j < w.size(); ++j) {
    if (x.bits[j]) sum += w[j];
  }
  return sum;
}

void check_dimensions(const std::vector<FeatureVector>& vectors,
                      std::size_t dim) {
  for (const auto& v : vectors) {
    if (v.bits.size() != dim) {
      throw DimensionMismatch("vector of length " +
                              std::to_string(v.bits.size()) + ", expected " +
                              std::to_string(dim));
    }
  }
}

}  // namespace

LinearModel train(const std::vector<FeatureVector>& vectors,
                  const std::vector<Label>& labels, const Vocabulary& vocab,
                  const Hyperparameters& hyper) {
  const std::size_t n = vectors.size();
  if (n == 0) throw InvalidArgument("training data is empty");
  if (labels.size() != n) {
    throw LengthMismatch("got " + std::to_string(n) + " vectors and " +
                         std::to_string(labels.size()) + " labels");
  }
  if (hyper.C <= 0.0) throw InvalidArgument("C must be positive");
  if (hyper.epochs < 1) throw InvalidArgument("epochs must be >= 1");

  const std::size_t dim = vocab.size();
  check_dimensions(vectors, dim);

  bool has_benign = false, has_hateful = false;
  for (Label l : labels) (l == Label::Hateful ? has_hateful : has_benign) = true;
  if (!has_benign || !has_hateful) throw SingleClassData();

  const double lambda = 1.0 / (hyper.C * static_cast<double>(n));
  std::vector<double> w(dim, 0.0), w_sum(dim, 0.0);
  double b = 0.0, b_sum = 0.0;

  Rng rng(hyper.seed);
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);

  std::uint64_t t = 0;
  for (int epoch = 0; epoch < hyper.epochs; ++epoch) {
    deterministic_shuffle(order, rng);
    for (std::size_t i : order) {
      ++t;
      const double eta = 1.0 / (lambda * static_cast<double>(t));
      const double y = labels[i] == Label::Hateful ? 1.0 : -1.0;
      const double margin = y * (dot(w, vectors[i]) + b);

      const double decay = 1.0 - eta * lambda;  // = 1 - 1/t
      for (double& wj : w) wj *= decay;
      if (margin < 1.0) {
        const double step = eta * y;
        const auto& bits = vectors[i].bits;
        for (std::size_t j = 0; j < dim; ++j) {
          if (bits[j]) w[j] += step;
        }
        b += step;
      }
      for (std::size_t j = 0; j < dim; ++j) w_sum[j] += w[j];
      b_sum += b;
    }
  }

  const double total = static_cast<double>(t);
  LinearModel model;
  model.weights.resize(dim);
  for (std::size_t j = 0; j < dim; ++j) model.weights[j] = w_sum[j] / total;
  model.bias = b_sum / total;
  model.vocab = vocab;
  model.hyper = hyper;
  model.trained_on = n;

  for (double wj : model.weights) {
    if (!std::isfinite(wj)) throw Error("training produced non-finite weight");
  }
  if (!std::isfinite(model.bias)) throw Error("training produced non-finite bias");
  return model;
}

Prediction predict(const LinearModel& model, const FeatureVector& vector) {
  if (vector.bits.size() != model.weights.size()) {
    throw DimensionMismatch("vector of length " +
                            std::to_string(vector.bits.size()) +
                            ", model expects " +
                            std::to_string(model.weights.size()));
  }
  const double score = dot(model.weights, vector) + model.bias;
  return {score > 0.0 ? Label::Hateful : Label::Benign, score};
}

double objective(const LinearModel& model,
                 const std::vector<FeatureVector>& vectors,
                 const std::vector<Label>& labels) {
  if (vectors.size() != labels.size()) {
    throw LengthMismatch("vectors vs labels");
  }
  check_dimensions(vectors, model.weights.size());
  double reg = 0.0;
  for (double wj : model.weights) reg += wj * wj;
  double hinge = 0.0;
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    const double y = labels[i] == Label::Hateful ? 1.0 : -1.0;
    const double margin = y * (dot(model.weights, vectors[i]) + model.bias);
    hinge += std::max(0.0, 1.0 - margin);
  }
  return 0.5 * reg + model.hyper.C * hinge;
}

void write_model(std::ostream& out, const LinearModel& model) {
  nlohmann::ordered_json doc;
  doc["version"] = kModelVersion;
  doc["weights"] = model.weights;
  doc["bias"] = model.bias;
  doc["vocab"] = {{"terms", model.vocab.terms},
                  {"min_df", model.vocab.min_df},
                  {"max_terms", model.vocab.max_terms}};
  doc["hyper"] = {{"C", model.hyper.C},
                  {"epochs", model.hyper.epochs},
                  {"seed", model.hyper.seed}};
  doc["trained_on"] = model.trained_on;
  out << doc.dump(2) << '\n';
}

void save_model(const LinearModel& model, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw FileNotFound(path);
  write_model(out, model);
}

LinearModel read_model(std::istream& in) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw SchemaError(std::string("invalid model JSON: ") + e.what());
  }
  try {
    if (!doc.contains("version") || !doc["version"].is_number_integer() ||
        doc["version"].get<int>() != kModelVersion) {
      throw SchemaError("unsupported model version");
    }
    LinearModel model;
    model.weights = doc.at("weights").get<std::vector<double>>();
    model.bias = doc.at("bias").get<double>();
    const auto& vocab = doc.at("vocab");
    model.vocab = vocabulary_from_terms(
        vocab.at("terms").get<std::vector<std::string>>(),
        vocab.at("min_df").get<std::size_t>(),
        vocab.at("max_terms").get<std::size_t>());
    const auto& hyper = doc.at("hyper");
    model.hyper.C = hyper.at("C").get<double>();
    model.hyper.epochs = hyper.at("epochs").get<int>();
    model.hyper.seed = hyper.at("seed").get<std::uint64_t>();
    model.trained_on = doc.at("trained_on").get<std::size_t>();

    if (model.weights.size() != model.vocab.size()) {
      throw SchemaError("weight count " + std::to_string(model.weights.size()) +
                        " does not match vocabulary size " +
                        std::to_string(model.vocab.size()));
    }
    for (double wj : model.weights) {
      if (!std::isfinite(wj)) throw SchemaError("non-finite weight");
    }
    if (!std::isfinite(model.bias)) throw SchemaError("non-finite bias");
    return model;
  } catch (const nlohmann::json::exception& e) {
    throw SchemaError(std::string("malformed model document: ") + e.what());
  }
}

LinearModel load_model(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FileNotFound(path);
  return read_model(in);
}

}  // namespace hatecode
