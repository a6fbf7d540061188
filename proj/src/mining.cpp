#include "hatecode/mining.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <set>
#include <unordered_set>

#include "json.hpp"

#include "hatecode/errors.hpp"
#include "hatecode/textprep.hpp"

namespace hatecode {

CodewordLexicon CodewordLexicon::builtin() {
  CodewordLexicon lex;
  lex.entries = {{"google", "black"},   {"yahoo", "mexican"},
                 {"skype", "jew"},      {"bing", "chinese"},
                 {"skittle", "muslim"}, {"butterfly", "gay"}};
  return lex;
}

CodewordLexicon CodewordLexicon::load(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FileNotFound(path);
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw SchemaError(std::string("invalid lexicon JSON: ") + e.what());
  }
  if (!doc.is_object()) throw SchemaError("lexicon must be a JSON object");

  CodewordLexicon lex;
  for (const auto& [key, value] : doc.items()) {
    if (!value.is_string()) {
      throw SchemaError("lexicon value for \"" + key + "\" is not a string");
    }
    std::string normalized = key;
    for (char& c : normalized) {
      c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    }
    normalized = lemmatize_word(normalized);
    if (normalized.empty()) throw SchemaError("empty lexicon key");
    auto [it, inserted] =
        lex.entries.emplace(normalized, value.get<std::string>());
    if (!inserted) {
      throw SchemaError("lexicon keys collide after normalization: \"" + key +
                        "\" vs \"" + it->first + "\"");
    }
  }
  return lex;
}

std::vector<std::string> CodewordLexicon::terms() const {
  std::vector<std::string> out;
  out.reserve(entries.size());
  for (const auto& [term, community] : entries) out.push_back(term);
  return out;
}

std::vector<PhiScore> phi_correlation(
    const std::vector<std::vector<std::string>>& docs,
    const std::vector<Label>& labels) {
  if (docs.size() != labels.size()) {
    throw LengthMismatch("got " + std::to_string(docs.size()) +
                         " docs and " + std::to_string(labels.size()) +
                         " labels");
  }
  if (docs.empty()) throw InvalidArgument("no documents");

  std::int64_t hateful_total = 0;
  for (Label l : labels) hateful_total += l == Label::Hateful ? 1 : 0;
  const std::int64_t benign_total =
      static_cast<std::int64_t>(docs.size()) - hateful_total;

  // presence counts per term, split by label
  std::map<std::string, std::pair<std::int64_t, std::int64_t>> presence;
  std::unordered_set<std::string> seen;
  for (std::size_t i = 0; i < docs.size(); ++i) {
    seen.clear();
    for (const auto& term : docs[i]) {
      if (term.empty() || !seen.insert(term).second) continue;
      auto& [with_hateful, with_benign] = presence[term];
      (labels[i] == Label::Hateful ? with_hateful : with_benign) += 1;
    }
  }

  std::vector<PhiScore> scores;
  scores.reserve(presence.size());
  for (const auto& [term, counts] : presence) {
    PhiScore score;
    score.term = term;
    score.n11 = counts.first;
    score.n10 = counts.second;
    score.n01 = hateful_total - counts.first;
    score.n00 = benign_total - counts.second;

    const double present = static_cast<double>(score.n11 + score.n10);
    const double absent = static_cast<double>(score.n01 + score.n00);
    const double hateful = static_cast<double>(score.n11 + score.n01);
    const double benign = static_cast<double>(score.n10 + score.n00);
    if (present > 0 && absent > 0 && hateful > 0 && benign > 0) {
      const double numerator = static_cast<double>(score.n11) * score.n00 -
                               static_cast<double>(score.n10) * score.n01;
      score.phi = numerator / std::sqrt(present * absent * hateful * benign);
    }
    scores.push_back(std::move(score));
  }
  return scores;
}

std::vector<PhiScore> rank_terms(const std::vector<PhiScore>& scores,
                                 std::size_t top_n) {
  if (top_n < 1) throw InvalidArgument("top_n must be >= 1");
  std::vector<PhiScore> ranked;
  for (const auto& s : scores) {
    if (s.phi) ranked.push_back(s);
  }
  std::sort(ranked.begin(), ranked.end(), [](const PhiScore& a, const PhiScore& b) {
    if (*a.phi != *b.phi) return *a.phi > *b.phi;
    return a.term < b.term;
  });
  if (ranked.size() > top_n) ranked.resize(top_n);
  return ranked;
}

namespace {

using ItemsetKey = std::vector<std::string>;

std::int64_t count_support(const ItemsetKey& items,
                           const std::vector<ItemsetKey>& transactions) {
  std::int64_t count = 0;
  for (const auto& txn : transactions) {
    if (std::includes(txn.begin(), txn.end(), items.begin(), items.end())) {
      ++count;
    }
  }
  return count;
}

}  // namespace

std::vector<Itemset> apriori(
    const std::vector<std::vector<std::string>>& transactions,
    double min_support) {
  if (!(min_support > 0.0) || min_support > 1.0) {
    throw InvalidSupport(min_support);
  }
  if (transactions.empty()) {
    throw InvalidArgument("transaction list is empty");
  }

  // canonical form: sorted, duplicate-free item vectors
  std::vector<ItemsetKey> txns;
  txns.reserve(transactions.size());
  for (const auto& raw : transactions) {
    ItemsetKey txn = raw;
    std::sort(txn.begin(), txn.end());
    txn.erase(std::unique(txn.begin(), txn.end()), txn.end());
    txns.push_back(std::move(txn));
  }
  const double n = static_cast<double>(txns.size());

  std::vector<Itemset> result;

  // L1
  std::map<std::string, std::int64_t> singles;
  for (const auto& txn : txns) {
    for (const auto& item : txn) ++singles[item];
  }
  std::vector<ItemsetKey> frequent;
  std::vector<std::int64_t> frequent_counts;
  for (const auto& [item, count] : singles) {
    if (static_cast<double>(count) / n >= min_support) {
      frequent.push_back({item});
      frequent_counts.push_back(count);
    }
  }

  while (!frequent.empty()) {
    for (std::size_t i = 0; i < frequent.size(); ++i) {
      result.push_back({frequent[i],
                        static_cast<double>(frequent_counts[i]) / n,
                        frequent_counts[i]});
    }

    // join step: pairs sharing a (k-1)-prefix; frequent is lex-sorted, so
    // joinable partners are adjacent runs
    std::set<ItemsetKey> frequent_set(frequent.begin(), frequent.end());
    std::vector<ItemsetKey> next;
    std::vector<std::int64_t> next_counts;
    for (std::size_t i = 0; i < frequent.size(); ++i) {
      for (std::size_t j = i + 1; j < frequent.size(); ++j) {
        const ItemsetKey& a = frequent[i];
        const ItemsetKey& b = frequent[j];
        if (!std::equal(a.begin(), a.end() - 1, b.begin(), b.end() - 1)) {
          break;  // sorted order: once prefixes diverge, no later j matches
        }
        ItemsetKey candidate = a;
        candidate.push_back(b.back());

        // prune: every (k-1)-subset must be frequent
        bool prunable = false;
        ItemsetKey subset(candidate.begin() + 1, candidate.end());
        for (std::size_t drop = 0; drop < candidate.size(); ++drop) {
          if (!frequent_set.count(subset)) {
            prunable = true;
            break;
          }
          if (drop + 1 < candidate.size()) subset[drop] = candidate[drop];
        }
        if (prunable) continue;

        const std::int64_t count = count_support(candidate, txns);
        if (static_cast<double>(count) / n >= min_support) {
          next.push_back(std::move(candidate));
          next_counts.push_back(count);
        }
      }
    }
    frequent = std::move(next);
    frequent_counts = std::move(next_counts);
  }

  std::sort(result.begin(), result.end(), [](const Itemset& a, const Itemset& b) {
    if (a.items.size() != b.items.size()) {
      return a.items.size() < b.items.size();
    }
    if (a.support != b.support) return a.support > b.support;
    return a.items < b.items;
  });
  return result;
}

std::vector<CooccurrenceEntry> cooccurrence(
    const std::vector<std::vector<std::string>>& docs,
    const CodewordLexicon& lexicon) {
  if (lexicon.entries.empty()) throw InvalidArgument("empty lexicon");

  const std::vector<std::string> codewords = lexicon.terms();
  const std::size_t m = codewords.size();

  std::vector<std::vector<std::int64_t>> both(m, std::vector<std::int64_t>(m, 0));
  std::vector<bool> present(m);
  for (const auto& doc : docs) {
    std::fill(present.begin(), present.end(), false);
    const std::unordered_set<std::string> terms(doc.begin(), doc.end());
    for (std::size_t i = 0; i < m; ++i) present[i] = terms.count(codewords[i]) > 0;
    for (std::size_t i = 0; i < m; ++i) {
      if (!present[i]) continue;
      for (std::size_t j = i + 1; j < m; ++j) {
        if (present[j]) ++both[i][j];
      }
    }
  }

  const double total = static_cast<double>(docs.size());
  std::vector<CooccurrenceEntry> entries;
  entries.reserve(m * (m - 1) / 2);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      CooccurrenceEntry entry;
      entry.pair = {codewords[i], codewords[j]};
      entry.percentage =
          total > 0 ? 100.0 * static_cast<double>(both[i][j]) / total : 0.0;
      entries.push_back(std::move(entry));
    }
  }
  std::sort(entries.begin(), entries.end(),
            [](const CooccurrenceEntry& a, const CooccurrenceEntry& b) {
              if (a.percentage != b.percentage) return a.percentage > b.percentage;
              return a.pair < b.pair;
            });
  return entries;
}

}  // namespace hatecode
