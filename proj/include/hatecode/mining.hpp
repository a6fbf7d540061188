#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hatecode/corpus.hpp"

namespace hatecode {

// Maps a code term to the community it stands in for. Keys are stored
// lowercased and lemmatized so they line up with preprocessed documents.
struct CodewordLexicon {
  std::map<std::string, std::string> entries;

  static CodewordLexicon builtin();
  static CodewordLexicon load(const std::string& path);

  std::vector<std::string> terms() const;
};

struct PhiScore {
  std::string term;
  std::optional<double> phi;  // nullopt when a marginal is zero
  // presence/label cross counts: n11 present+hateful, n10 present+benign,
  // n01 absent+hateful, n00 absent+benign
  std::int64_t n11 = 0, n10 = 0, n01 = 0, n00 = 0;
};

struct Itemset {
  std::vector<std::string> items;  // sorted, duplicate-free, non-empty
  double support = 0.0;
  std::int64_t count = 0;

  bool operator==(const Itemset&) const = default;
};

struct CooccurrenceEntry {
  std::pair<std::string, std::string> pair;  // first < second
  double percentage = 0.0;                   // of all docs in scope
};

// One PhiScore per distinct term, phi computed from the 2x2 contingency
// table: (n11*n00 - n10*n01) / sqrt of the four marginal products. Returned
// sorted by term. Throws LengthMismatch when |docs| != |labels|.
std::vector<PhiScore> phi_correlation(
    const std::vector<std::vector<std::string>>& docs,
    const std::vector<Label>& labels);

// Defined scores only, descending phi, ties lexicographic, truncated to n.
std::vector<PhiScore> rank_terms(const std::vector<PhiScore>& scores,
                                 std::size_t top_n);

// Level-wise Apriori: candidate k-itemsets join frequent (k-1)-itemsets
// sharing a (k-2)-prefix and are pruned when any (k-1)-subset is
// infrequent. Returns itemsets with support >= min_support, ordered by
// (size, support descending, lexicographic).
std::vector<Itemset> apriori(
    const std::vector<std::vector<std::string>>& transactions,
    double min_support);

// Percentage of docs containing both codewords, for every unordered pair of
// lexicon terms. Presence-based; docs are assumed preprocessed, so plural
// forms have already been folded onto lexicon keys.
std::vector<CooccurrenceEntry> cooccurrence(
    const std::vector<std::vector<std::string>>& docs,
    const CodewordLexicon& lexicon);

}  // namespace hatecode
