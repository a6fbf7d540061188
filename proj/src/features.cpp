#include "hatecode/features.hpp"

#include <algorithm>
#include <map>
#include <unordered_set>

#include "hatecode/errors.hpp"

namespace hatecode {

Vocabulary build_vocabulary(const std::vector<std::vector<std::string>>& docs,
                            const VocabularyOptions& options) {
  if (options.min_df < 1) throw InvalidArgument("min_df must be >= 1");
  if (options.max_terms < 1) throw InvalidArgument("max_terms must be >= 1");

  std::map<std::string, std::size_t> df;
  std::unordered_set<std::string> seen;
  for (const auto& doc : docs) {
    seen.clear();
    for (const auto& term : doc) {
      if (term.empty()) continue;
      if (!options.include_mentions && term[0] == '@') continue;
      if (seen.insert(term).second) ++df[term];
    }
  }

  std::vector<std::pair<std::string, std::size_t>> kept;
  for (const auto& [term, count] : df) {
    if (count >= options.min_df) kept.emplace_back(term, count);
  }
  if (kept.empty()) throw EmptyVocabulary();

  std::stable_sort(kept.begin(), kept.end(), [](const auto& a, const auto& b) {
    if (a.second != b.second) return a.second > b.second;
    return a.first < b.first;
  });
  if (kept.size() > options.max_terms) kept.resize(options.max_terms);

  Vocabulary vocab;
  vocab.min_df = options.min_df;
  vocab.max_terms = options.max_terms;
  vocab.terms.reserve(kept.size());
  vocab.doc_freq.reserve(kept.size());
  for (std::size_t i = 0; i < kept.size(); ++i) {
    vocab.terms.push_back(kept[i].first);
    vocab.doc_freq.push_back(kept[i].second);
    vocab.index[kept[i].first] = i;
  }
  return vocab;
}

FeatureVector vectorize(const std::vector<std::string>& doc,
                        const Vocabulary& vocab,
                        const std::string& source_id) {
  FeatureVector vec;
  vec.source_id = source_id;
  vec.bits.assign(vocab.size(), 0);
  for (const auto& term : doc) {
    auto it = vocab.index.find(term);
    if (it != vocab.index.end()) vec.bits[it->second] = 1;
  }
  return vec;
}

Vocabulary vocabulary_from_terms(std::vector<std::string> terms,
                                 std::size_t min_df, std::size_t max_terms) {
  Vocabulary vocab;
  vocab.min_df = min_df;
  vocab.max_terms = max_terms;
  vocab.terms = std::move(terms);
  for (std::size_t i = 0; i < vocab.terms.size(); ++i) {
    vocab.index[vocab.terms[i]] = i;
  }
  return vocab;
}

}  // namespace hatecode
