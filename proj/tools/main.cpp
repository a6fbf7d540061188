// hatecode — command-line front end for the coded hate speech toolkit.
//
// One binary, one subcommand per pipeline stage. Every run is reproducible:
// all randomness is derived from --seed, and identical inputs plus identical
// flags produce byte-identical outputs.

#include <charconv>
#include <fstream>
#include <iostream>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "hatecode/analysis.hpp"
#include "hatecode/classifier.hpp"
#include "hatecode/corpus.hpp"
#include "hatecode/csv.hpp"
#include "hatecode/errors.hpp"
#include "hatecode/evaluation.hpp"
#include "hatecode/features.hpp"
#include "hatecode/mining.hpp"
#include "hatecode/stopwords.hpp"
#include "hatecode/synth.hpp"
#include "hatecode/textprep.hpp"

namespace {

using namespace hatecode;

struct RunConfig {
  std::uint64_t seed = 42;
  std::size_t folds = 10;
  std::size_t min_df = 2;
  std::size_t max_terms = 1000;
  double C = 1.0;
  int epochs = 50;
  double min_support = 0.05;
  std::int64_t threshold = 4;
  std::string stopwords_path;
  std::string lexicon_path;
};

RunConfig load_run_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FileNotFound(path);
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw SchemaError(std::string("invalid config JSON: ") + e.what());
  }
  if (!doc.is_object()) throw SchemaError("config must be a JSON object");

  RunConfig config;
  const std::set<std::string> known = {
      "seed",    "folds",       "min_df",    "max_terms",      "C",
      "epochs",  "min_support", "threshold", "stopwords_path", "lexicon_path"};
  for (const auto& item : doc.items()) {
    if (!known.count(item.key())) {
      throw SchemaError("unknown config key \"" + item.key() + "\"");
    }
  }
  try {
    if (doc.contains("seed")) config.seed = doc["seed"].get<std::uint64_t>();
    if (doc.contains("folds")) config.folds = doc["folds"].get<std::size_t>();
    if (doc.contains("min_df")) config.min_df = doc["min_df"].get<std::size_t>();
    if (doc.contains("max_terms")) {
      config.max_terms = doc["max_terms"].get<std::size_t>();
    }
    if (doc.contains("C")) config.C = doc["C"].get<double>();
    if (doc.contains("epochs")) config.epochs = doc["epochs"].get<int>();
    if (doc.contains("min_support")) {
      config.min_support = doc["min_support"].get<double>();
    }
    if (doc.contains("threshold")) {
      config.threshold = doc["threshold"].get<std::int64_t>();
    }
    if (doc.contains("stopwords_path")) {
      config.stopwords_path = doc["stopwords_path"].get<std::string>();
    }
    if (doc.contains("lexicon_path")) {
      config.lexicon_path = doc["lexicon_path"].get<std::string>();
    }
  } catch (const nlohmann::json::exception& e) {
    throw SchemaError(std::string("malformed config value: ") + e.what());
  }

  if (config.folds < 2) throw SchemaError("folds must be >= 2");
  if (config.min_df < 1) throw SchemaError("min_df must be >= 1");
  if (config.max_terms < 1) throw SchemaError("max_terms must be >= 1");
  if (!(config.C > 0.0)) throw SchemaError("C must be positive");
  if (config.epochs < 1) throw SchemaError("epochs must be >= 1");
  if (!(config.min_support > 0.0) || config.min_support > 1.0) {
    throw SchemaError("min_support must be in (0, 1]");
  }
  if (config.threshold < 1) throw SchemaError("threshold must be >= 1");
  return config;
}

std::string shortest(double value) {
  char buf[64];
  auto result = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, result.ptr);
}

std::string fixed1(double value) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.1f", value);
  return buf;
}

TweetFormat parse_format(const std::string& name) {
  return name == "csv" ? TweetFormat::Csv : TweetFormat::Jsonl;
}

std::set<std::string> resolve_stopwords(const std::string& path) {
  return path.empty() ? default_stopwords() : load_stopwords(path);
}

CodewordLexicon resolve_lexicon(const std::string& path) {
  return path.empty() ? CodewordLexicon::builtin() : CodewordLexicon::load(path);
}

template <typename Fn>
void with_output(const std::string& path, Fn&& fn) {
  if (path.empty()) {
    fn(std::cout);
  } else {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw FileNotFound(path);
    fn(out);
  }
}

std::vector<Prediction> classify_all(const LinearModel& model,
                                     const std::vector<Tweet>& tweets,
                                     const std::set<std::string>& stopwords) {
  std::vector<Prediction> predictions;
  predictions.reserve(tweets.size());
  for (const Tweet& t : tweets) {
    auto vec = vectorize(preprocess(t.text, stopwords), model.vocab, t.id);
    predictions.push_back(predict(model, vec));
  }
  return predictions;
}

// Shared scope handling for mine/cooccur/timeline: "hateful" needs either
// annotations (--labels) or a trained model (--model); "all" needs neither.
struct ScopeFlags {
  std::string scope = "hateful";
  std::string labels_path;
  std::string model_path;
};

std::vector<Tweet> tweets_in_scope(const std::vector<Tweet>& tweets,
                                   const ScopeFlags& flags,
                                   const std::set<std::string>& stopwords) {
  if (flags.scope == "all") return tweets;
  if (!flags.labels_path.empty()) {
    auto labeled = load_labels(flags.labels_path, tweets);
    std::vector<Tweet> hateful;
    for (const auto& item : labeled.items) {
      if (item.label == Label::Hateful) hateful.push_back(item.tweet);
    }
    return hateful;
  }
  if (!flags.model_path.empty()) {
    const LinearModel model = load_model(flags.model_path);
    const auto predictions = classify_all(model, tweets, stopwords);
    std::vector<Tweet> hateful;
    for (std::size_t i = 0; i < tweets.size(); ++i) {
      if (predictions[i].label == Label::Hateful) hateful.push_back(tweets[i]);
    }
    return hateful;
  }
  throw CLI::ValidationError(
      "--scope hateful requires --labels or --model (or use --scope all)");
}

struct LabeledDocs {
  std::vector<std::vector<std::string>> docs;
  std::vector<Label> labels;
};

LabeledDocs preprocess_labeled(const LabeledSet& labeled,
                               const std::set<std::string>& stopwords) {
  LabeledDocs out;
  out.docs.reserve(labeled.items.size());
  out.labels.reserve(labeled.items.size());
  for (const auto& item : labeled.items) {
    out.docs.push_back(preprocess(item.tweet.text, stopwords));
    out.labels.push_back(item.label);
  }
  return out;
}

const std::map<std::string, std::string> kSynopsis = {
    {"ingest",
     "usage: hatecode ingest --tweets FILE --out FILE [--format jsonl|csv]\n"
     "                       [--keep-duplicates] [--no-english-filter]\n"
     "                       [--english-threshold R] [--stopwords FILE]"},
    {"train",
     "usage: hatecode train --tweets FILE --labels FILE --out FILE\n"
     "                      [--format jsonl|csv] [--min-df N] [--max-terms N]\n"
     "                      [--include-mentions] [--C R] [--epochs N]\n"
     "                      [--seed N] [--stopwords FILE]"},
    {"eval",
     "usage: hatecode eval --tweets FILE --labels FILE [--folds N] [--seed N]\n"
     "                     [--min-df N] [--max-terms N] [--include-mentions]\n"
     "                     [--C R] [--epochs N] [--stopwords FILE]\n"
     "                     [--json FILE] [--report FILE]"},
    {"classify",
     "usage: hatecode classify --model FILE --tweets FILE [--format jsonl|csv]\n"
     "                         [--stopwords FILE] [--out FILE]"},
    {"correlate",
     "usage: hatecode correlate --tweets FILE --labels FILE [--top N]\n"
     "                          [--format jsonl|csv] [--stopwords FILE]\n"
     "                          [--out FILE]"},
    {"mine",
     "usage: hatecode mine --tweets FILE [--labels FILE | --model FILE]\n"
     "                     [--scope hateful|all] [--support R]\n"
     "                     [--format jsonl|csv] [--stopwords FILE] [--out FILE]"},
    {"cooccur",
     "usage: hatecode cooccur --tweets FILE [--labels FILE | --model FILE]\n"
     "                        [--scope hateful|all] [--lexicon FILE]\n"
     "                        [--format jsonl|csv] [--stopwords FILE]\n"
     "                        [--out FILE]"},
    {"timeline",
     "usage: hatecode timeline --tweets FILE [--labels FILE | --model FILE]\n"
     "                         [--scope hateful|all] [--format jsonl|csv]\n"
     "                         [--stopwords FILE] [--out FILE] [--plot FILE]"},
    {"aggressors",
     "usage: hatecode aggressors --model FILE --tweets FILE [--threshold N]\n"
     "                           [--format jsonl|csv] [--stopwords FILE]\n"
     "                           [--out FILE]"},
    {"vocab",
     "usage: hatecode vocab --tweets FILE [--min-df N] [--max-terms N]\n"
     "                      [--include-mentions] [--format jsonl|csv]\n"
     "                      [--stopwords FILE] [--out FILE]"},
    {"synth",
     "usage: hatecode synth --out FILE --labels-out FILE\n"
     "                      [--profile train|field] [--count N] [--seed N]"},
};

// Finds --config before CLI11 runs so config values can seed the defaults
// that explicit flags then override.
std::string find_config_path(int argc, char** argv) {
  for (int i = 1; i < argc; ++i) {
    std::string arg = argv[i];
    if (arg == "--config" && i + 1 < argc) return argv[i + 1];
    if (arg.rfind("--config=", 0) == 0) return arg.substr(9);
  }
  return {};
}

}  // namespace

int main(int argc, char** argv) {
  RunConfig config;
  const std::string config_path = find_config_path(argc, argv);
  if (!config_path.empty()) {
    try {
      config = load_run_config(config_path);
    } catch (const Error& e) {
      std::cerr << "error: " << e.what() << "\n";
      return 1;
    }
  }

  CLI::App app{"coded hate speech detection toolkit"};
  app.require_subcommand(1);
  std::string config_flag;
  app.add_option("--config", config_flag,
                 "JSON file with default values for the numeric flags");

  const auto support_check = CLI::Validator(
      [](std::string& s) -> std::string {
        double v = 0.0;
        try {
          v = std::stod(s);
        } catch (...) {
          return "InvalidSupport: \"" + s + "\" is not a number";
        }
        if (!(v > 0.0) || v > 1.0) {
          return "InvalidSupport: " + s + " is outside (0, 1]";
        }
        return {};
      },
      "FRACTION");

  // flag storage shared across subcommands (only one runs per invocation)
  std::string tweets_path, labels_path, model_path, out_path, format = "jsonl";
  std::string stopwords_path = config.stopwords_path;
  std::string lexicon_path = config.lexicon_path;
  std::string json_path, report_path, plot_path, labels_out, profile = "train";
  bool keep_duplicates = false, no_english = false, include_mentions = false;
  double english_threshold = 0.10;
  std::uint64_t seed = config.seed;
  std::size_t folds = config.folds;
  std::size_t min_df = config.min_df;
  std::size_t max_terms = config.max_terms;
  double C = config.C;
  int epochs = config.epochs;
  double min_support = config.min_support;
  std::int64_t threshold = config.threshold;
  std::size_t top_n = 0;
  std::size_t synth_count = 400;
  ScopeFlags scope;

  auto add_format = [&](CLI::App* cmd) {
    cmd->add_option("--format", format, "input format")
        ->check(CLI::IsMember({"jsonl", "csv"}))
        ->capture_default_str();
  };
  auto add_config_opt = [&](CLI::App* cmd) {
    cmd->add_option("--config", config_flag,
                    "JSON file with default flag values");
  };
  auto add_stopwords = [&](CLI::App* cmd) {
    cmd->add_option("--stopwords", stopwords_path,
                    "stopword list, one word per line");
  };
  auto add_prep = [&](CLI::App* cmd) {
    add_stopwords(cmd);
    cmd->add_option("--min-df", min_df, "minimum document frequency")
        ->check(CLI::Range(std::size_t{1}, std::size_t{1000000}))
        ->capture_default_str();
    cmd->add_option("--max-terms", max_terms, "vocabulary size cap")
        ->check(CLI::Range(std::size_t{1}, std::size_t{10000000}))
        ->capture_default_str();
    cmd->add_flag("--include-mentions", include_mentions,
                  "let @mentions into the vocabulary");
  };
  auto add_train_flags = [&](CLI::App* cmd) {
    cmd->add_option("--C", C, "hinge-loss weight")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    cmd->add_option("--epochs", epochs, "training epochs")
        ->check(CLI::Range(1, 1000000))
        ->capture_default_str();
    cmd->add_option("--seed", seed, "random seed")->capture_default_str();
  };
  auto add_out = [&](CLI::App* cmd) {
    cmd->add_option("--out", out_path, "output file (default: stdout)");
  };
  auto add_scope = [&](CLI::App* cmd) {
    cmd->add_option("--scope", scope.scope, "tweet scope")
        ->check(CLI::IsMember({"hateful", "all"}))
        ->capture_default_str();
    auto* labels_opt = cmd->add_option("--labels", scope.labels_path,
                                       "annotations marking hateful tweets");
    cmd->add_option("--model", scope.model_path,
                    "model used to flag hateful tweets")
        ->excludes(labels_opt);
  };

  auto* ingest = app.add_subcommand(
      "ingest", "validate, deduplicate and filter tweets to canonical JSONL");
  ingest->add_option("--tweets", tweets_path, "input tweet file")->required();
  ingest->add_option("--out", out_path, "canonical JSONL output")->required();
  add_format(ingest);
  add_stopwords(ingest);
  add_config_opt(ingest);
  ingest->add_flag("--keep-duplicates", keep_duplicates,
                   "skip text deduplication");
  ingest->add_flag("--no-english-filter", no_english,
                   "skip the stopword-based language filter");
  ingest->add_option("--english-threshold", english_threshold,
                     "stopword ratio needed to keep a tweet")
      ->check(CLI::Range(0.0, 1.0))
      ->capture_default_str();
  ingest->callback([&] {
    auto tweets = load_tweets(tweets_path, parse_format(format));
    const std::size_t loaded = tweets.size();
    if (!keep_duplicates) tweets = deduplicate(tweets);
    const std::size_t deduped = tweets.size();
    if (!no_english) {
      tweets = filter_english(tweets, resolve_stopwords(stopwords_path),
                              {english_threshold, 2});
    }
    save_tweets(out_path, tweets, TweetFormat::Jsonl);
    std::cout << "loaded " << loaded << ", after dedup " << deduped
              << ", after english filter " << tweets.size() << ", wrote "
              << out_path << "\n";
  });

  auto* train_cmd = app.add_subcommand("train", "train a linear SVM");
  train_cmd->add_option("--tweets", tweets_path, "tweet file")->required();
  train_cmd->add_option("--labels", labels_path, "label CSV")->required();
  train_cmd->add_option("--out", out_path, "model file to write")->required();
  add_format(train_cmd);
  add_prep(train_cmd);
  add_train_flags(train_cmd);
  add_config_opt(train_cmd);
  train_cmd->callback([&] {
    auto tweets = load_tweets(tweets_path, parse_format(format));
    auto labeled = load_labels(labels_path, tweets);
    const auto stopwords = resolve_stopwords(stopwords_path);
    auto prepared = preprocess_labeled(labeled, stopwords);
    auto vocab = build_vocabulary(prepared.docs,
                                  {min_df, max_terms, include_mentions});
    std::vector<FeatureVector> vectors;
    vectors.reserve(prepared.docs.size());
    for (std::size_t i = 0; i < prepared.docs.size(); ++i) {
      vectors.push_back(
          vectorize(prepared.docs[i], vocab, labeled.items[i].tweet.id));
    }
    auto model = train(vectors, prepared.labels, vocab, {C, epochs, seed});
    save_model(model, out_path);
    std::cout << "trained on " << model.trained_on << " examples ("
              << labeled.benign_count << " benign / " << labeled.hateful_count
              << " hateful), vocabulary " << vocab.size() << " terms, wrote "
              << out_path << "\n";
  });

  auto* eval_cmd =
      app.add_subcommand("eval", "stratified k-fold cross-validation report");
  eval_cmd->add_option("--tweets,--data", tweets_path, "tweet file")
      ->required();
  eval_cmd->add_option("--labels", labels_path, "label CSV")->required();
  add_format(eval_cmd);
  add_prep(eval_cmd);
  add_train_flags(eval_cmd);
  add_config_opt(eval_cmd);
  eval_cmd->add_option("--folds", folds, "number of folds")
      ->check(CLI::Range(std::size_t{2}, std::size_t{1000}))
      ->capture_default_str();
  eval_cmd->add_option("--json", json_path, "also write the report as JSON");
  eval_cmd->add_option("--report", report_path,
                       "also write the text report to a file");
  eval_cmd->callback([&] {
    auto tweets = load_tweets(tweets_path, parse_format(format));
    auto labeled = load_labels(labels_path, tweets);
    PipelineOptions options;
    options.stopwords = resolve_stopwords(stopwords_path);
    options.vocab = {min_df, max_terms, include_mentions};
    auto report =
        cross_validate(labeled.items, folds, {C, epochs, seed}, seed, options);
    const std::string text = render_text(report);
    std::cout << text;
    if (!report_path.empty()) {
      with_output(report_path, [&](std::ostream& out) { out << text; });
    }
    if (!json_path.empty()) {
      with_output(json_path,
                  [&](std::ostream& out) { out << render_json(report); });
    }
  });

  auto* classify_cmd =
      app.add_subcommand("classify", "per-tweet predictions as JSONL");
  classify_cmd->add_option("--model", model_path, "model file")->required();
  classify_cmd->add_option("--tweets", tweets_path, "tweet file")->required();
  add_format(classify_cmd);
  add_stopwords(classify_cmd);
  add_config_opt(classify_cmd);
  add_out(classify_cmd);
  classify_cmd->callback([&] {
    auto tweets = load_tweets(tweets_path, parse_format(format));
    auto model = load_model(model_path);
    auto predictions =
        classify_all(model, tweets, resolve_stopwords(stopwords_path));
    with_output(out_path, [&](std::ostream& out) {
      for (std::size_t i = 0; i < tweets.size(); ++i) {
        nlohmann::ordered_json record{
            {"id", tweets[i].id},
            {"handle", tweets[i].handle},
            {"label",
             predictions[i].label == Label::Hateful ? "hateful" : "benign"},
            {"score", predictions[i].score}};
        out << record.dump() << '\n';
      }
    });
  });

  auto* correlate_cmd = app.add_subcommand(
      "correlate", "rank terms by correlation with the hateful label");
  correlate_cmd->add_option("--tweets", tweets_path, "tweet file")->required();
  correlate_cmd->add_option("--labels", labels_path, "label CSV")->required();
  correlate_cmd
      ->add_option("--top", top_n, "keep only the top N terms (0 = all)")
      ->capture_default_str();
  add_format(correlate_cmd);
  add_stopwords(correlate_cmd);
  add_config_opt(correlate_cmd);
  add_out(correlate_cmd);
  correlate_cmd->callback([&] {
    auto tweets = load_tweets(tweets_path, parse_format(format));
    auto labeled = load_labels(labels_path, tweets);
    auto prepared =
        preprocess_labeled(labeled, resolve_stopwords(stopwords_path));
    auto scores = phi_correlation(prepared.docs, prepared.labels);
    auto ranked = rank_terms(
        scores, top_n == 0 ? std::max<std::size_t>(scores.size(), 1) : top_n);
    with_output(out_path, [&](std::ostream& out) {
      write_csv_row(out, {"term", "phi", "n11", "n10", "n01", "n00"});
      for (const auto& s : ranked) {
        write_csv_row(out, {s.term, shortest(*s.phi), std::to_string(s.n11),
                            std::to_string(s.n10), std::to_string(s.n01),
                            std::to_string(s.n00)});
      }
    });
  });

  auto* mine_cmd =
      app.add_subcommand("mine", "frequent codeword itemsets (Apriori)");
  mine_cmd->add_option("--tweets", tweets_path, "tweet file")->required();
  mine_cmd->add_option("--support", min_support, "minimum support in (0, 1]")
      ->check(support_check)
      ->capture_default_str();
  add_format(mine_cmd);
  add_stopwords(mine_cmd);
  add_scope(mine_cmd);
  add_config_opt(mine_cmd);
  add_out(mine_cmd);
  mine_cmd->callback([&] {
    auto tweets = load_tweets(tweets_path, parse_format(format));
    const auto stopwords = resolve_stopwords(stopwords_path);
    auto in_scope = tweets_in_scope(tweets, scope, stopwords);
    std::vector<std::vector<std::string>> transactions;
    transactions.reserve(in_scope.size());
    for (const Tweet& t : in_scope) {
      transactions.push_back(preprocess(t.text, stopwords));
    }
    auto itemsets = apriori(transactions, min_support);
    with_output(out_path, [&](std::ostream& out) {
      write_csv_row(out, {"itemset", "support", "count"});
      for (const auto& s : itemsets) {
        std::string joined;
        for (const auto& item : s.items) {
          if (!joined.empty()) joined += ' ';
          joined += item;
        }
        write_csv_row(out,
                      {joined, shortest(s.support), std::to_string(s.count)});
      }
    });
  });

  auto* cooccur_cmd =
      app.add_subcommand("cooccur", "pairwise codeword co-occurrence");
  cooccur_cmd->add_option("--tweets", tweets_path, "tweet file")->required();
  cooccur_cmd->add_option("--lexicon", lexicon_path, "codeword lexicon JSON");
  add_format(cooccur_cmd);
  add_stopwords(cooccur_cmd);
  add_scope(cooccur_cmd);
  add_config_opt(cooccur_cmd);
  add_out(cooccur_cmd);
  cooccur_cmd->callback([&] {
    auto tweets = load_tweets(tweets_path, parse_format(format));
    const auto stopwords = resolve_stopwords(stopwords_path);
    auto in_scope = tweets_in_scope(tweets, scope, stopwords);
    std::vector<std::vector<std::string>> docs;
    docs.reserve(in_scope.size());
    for (const Tweet& t : in_scope) {
      docs.push_back(preprocess(t.text, stopwords));
    }
    auto entries = cooccurrence(docs, resolve_lexicon(lexicon_path));
    with_output(out_path, [&](std::ostream& out) {
      write_csv_row(out, {"term_a", "term_b", "percentage"});
      for (const auto& e : entries) {
        write_csv_row(out,
                      {e.pair.first, e.pair.second, fixed1(e.percentage)});
      }
    });
  });

  auto* timeline_cmd =
      app.add_subcommand("timeline", "daily counts of flagged tweets");
  timeline_cmd->add_option("--tweets", tweets_path, "tweet file")->required();
  timeline_cmd->add_option("--plot", plot_path,
                           "also write gnuplot-style \"date count\" lines");
  add_format(timeline_cmd);
  add_stopwords(timeline_cmd);
  add_scope(timeline_cmd);
  add_config_opt(timeline_cmd);
  add_out(timeline_cmd);
  timeline_cmd->callback([&] {
    auto tweets = load_tweets(tweets_path, parse_format(format));
    const auto stopwords = resolve_stopwords(stopwords_path);
    auto in_scope = tweets_in_scope(tweets, scope, stopwords);
    auto bins = timeline(in_scope);
    with_output(out_path, [&](std::ostream& out) {
      write_csv_row(out, {"date", "count"});
      for (const auto& bin : bins) {
        write_csv_row(out, {format_date(bin.date), std::to_string(bin.count)});
      }
    });
    if (!plot_path.empty()) {
      with_output(plot_path, [&](std::ostream& out) {
        for (const auto& bin : bins) {
          out << format_date(bin.date) << ' ' << bin.count << '\n';
        }
      });
    }
  });

  auto* aggressors_cmd = app.add_subcommand(
      "aggressors", "handles whose flagged-tweet count crosses the threshold");
  aggressors_cmd->add_option("--model", model_path, "model file")->required();
  aggressors_cmd->add_option("--tweets", tweets_path, "tweet file")->required();
  aggressors_cmd->add_option("--threshold", threshold, "minimum flagged tweets")
      ->check(CLI::Range(std::int64_t{1}, std::int64_t{1000000000}))
      ->capture_default_str();
  add_format(aggressors_cmd);
  add_stopwords(aggressors_cmd);
  add_config_opt(aggressors_cmd);
  add_out(aggressors_cmd);
  aggressors_cmd->callback([&] {
    auto tweets = load_tweets(tweets_path, parse_format(format));
    auto model = load_model(model_path);
    auto predictions =
        classify_all(model, tweets, resolve_stopwords(stopwords_path));
    std::vector<std::pair<std::string, std::string>> flagged;
    for (std::size_t i = 0; i < tweets.size(); ++i) {
      if (predictions[i].label == Label::Hateful) {
        flagged.emplace_back(tweets[i].handle, tweets[i].id);
      }
    }
    auto records = extract_aggressors(flagged, threshold);
    with_output(out_path, [&](std::ostream& out) {
      nlohmann::ordered_json doc = nlohmann::ordered_json::array();
      for (const auto& r : records) {
        doc.push_back({{"handle", r.handle},
                       {"hateful_count", r.hateful_count},
                       {"tweet_ids", r.tweet_ids}});
      }
      out << doc.dump(2) << '\n';
    });
  });

  auto* vocab_cmd =
      app.add_subcommand("vocab", "export the corpus vocabulary as JSON");
  vocab_cmd->add_option("--tweets", tweets_path, "tweet file")->required();
  add_format(vocab_cmd);
  add_prep(vocab_cmd);
  add_config_opt(vocab_cmd);
  add_out(vocab_cmd);
  vocab_cmd->callback([&] {
    auto tweets = load_tweets(tweets_path, parse_format(format));
    const auto stopwords = resolve_stopwords(stopwords_path);
    std::vector<std::vector<std::string>> docs;
    docs.reserve(tweets.size());
    for (const Tweet& t : tweets) {
      docs.push_back(preprocess(t.text, stopwords));
    }
    auto vocab = build_vocabulary(docs, {min_df, max_terms, include_mentions});
    with_output(out_path, [&](std::ostream& out) {
      nlohmann::ordered_json doc = nlohmann::ordered_json::array();
      for (std::size_t i = 0; i < vocab.size(); ++i) {
        doc.push_back(
            {{"term", vocab.terms[i]}, {"doc_freq", vocab.doc_freq[i]}});
      }
      out << doc.dump(2) << '\n';
    });
  });

  auto* synth_cmd = app.add_subcommand(
      "synth", "generate a reproducible synthetic demo corpus");
  synth_cmd->add_option("--out", out_path, "tweet JSONL to write")->required();
  synth_cmd->add_option("--labels-out", labels_out, "label CSV to write")
      ->required();
  synth_cmd->add_option("--profile", profile, "corpus profile")
      ->check(CLI::IsMember({"train", "field"}))
      ->capture_default_str();
  synth_cmd
      ->add_option("--count", synth_count, "tweet count (train profile only)")
      ->check(CLI::Range(std::size_t{10}, std::size_t{1000000}))
      ->capture_default_str();
  synth_cmd->add_option("--seed", seed, "random seed")->capture_default_str();
  add_config_opt(synth_cmd);
  synth_cmd->callback([&] {
    SyntheticCorpus corpus = profile == "train"
                                 ? make_training_corpus(seed, synth_count)
                                 : make_field_corpus(seed).corpus;
    save_tweets(out_path, corpus.tweets, TweetFormat::Jsonl);
    auto labeled = corpus.labeled();
    save_labels(labels_out, labeled.items);
    std::cout << "wrote " << corpus.tweets.size() << " tweets ("
              << labeled.benign_count << " benign / " << labeled.hateful_count
              << " hateful) to " << out_path << " and " << labels_out << "\n";
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    std::string name;
    for (const auto* sub : app.get_subcommands()) name = sub->get_name();
    auto it = kSynopsis.find(name);
    if (it != kSynopsis.end()) {
      std::cerr << it->second << "\n";
    } else {
      std::cerr << "usage: hatecode SUBCOMMAND [OPTIONS] (run hatecode --help)\n";
    }
    return 1;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  return 0;
}
