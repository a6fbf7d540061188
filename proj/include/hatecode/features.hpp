#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

namespace hatecode {

struct VocabularyOptions {
  std::size_t min_df = 2;
  std::size_t max_terms = 1000;
  // Mentions memorize specific targets rather than language, so they stay
  // out of the feature space unless explicitly requested.
  bool include_mentions = false;
};

struct Vocabulary {
  std::vector<std::string> terms;  // descending doc_freq, ties lexicographic
  std::unordered_map<std::string, std::size_t> index;
  std::vector<std::size_t> doc_freq;  // parallel to terms; empty when loaded
                                      // from a model file
  std::size_t min_df = 2;
  std::size_t max_terms = 1000;

  std::size_t size() const { return terms.size(); }
  bool contains(const std::string& term) const { return index.count(term) > 0; }
};

struct FeatureVector {
  std::vector<std::uint8_t> bits;  // one per vocabulary term
  std::string source_id;
};

// Document frequency counts presence, not occurrences. Terms below min_df
// are dropped, then the max_terms most frequent survive (ties broken
// lexicographically). Throws EmptyVocabulary when nothing is left.
Vocabulary build_vocabulary(const std::vector<std::vector<std::string>>& docs,
                            const VocabularyOptions& options = {});

// bit i set iff terms[i] occurs in doc; out-of-vocabulary terms are ignored.
FeatureVector vectorize(const std::vector<std::string>& doc,
                        const Vocabulary& vocab,
                        const std::string& source_id = "");

// Rebuilds the index/doc_freq-free Vocabulary from a plain term list, used
// when deserializing models.
Vocabulary vocabulary_from_terms(std::vector<std::string> terms,
                                 std::size_t min_df, std::size_t max_terms);

}  // namespace hatecode
