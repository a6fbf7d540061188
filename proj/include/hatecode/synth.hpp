#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hatecode/corpus.hpp"
#include "hatecode/timeutil.hpp"

namespace hatecode {

// Seeded generators for reproducible demo/benchmark corpora. Hateful texts
// pair the codewords with violent context terms; benign texts reuse the
// same codewords in everyday contexts, so the codewords themselves carry no
// label signal and a classifier has to learn the surrounding language.

struct SyntheticCorpus {
  std::vector<Tweet> tweets;
  std::vector<Label> labels;  // parallel to tweets

  LabeledSet labeled() const;
};

// Balanced annotated corpus for training and cross-validation.
SyntheticCorpus make_training_corpus(std::uint64_t seed,
                                     std::size_t tweet_count = 400);

// A "field sample": 20 handles, of which two post far more hateful content
// than anyone else, and a hateful-activity spike on one day.
struct FieldCorpus {
  SyntheticCorpus corpus;
  std::vector<std::string> planted_handles;  // sorted
  UtcDay spike_day{};
};

FieldCorpus make_field_corpus(std::uint64_t seed);

}  // namespace hatecode
