#pragma once

#include <cstdint>
#include <iosfwd>
#include <set>
#include <string>
#include <vector>

#include "hatecode/timeutil.hpp"

namespace hatecode {

struct Tweet {
  std::string id;      // non-empty, unique within a corpus
  std::string handle;  // author username
  UtcSeconds timestamp{};
  std::string text;    // non-empty after trimming

  bool operator==(const Tweet&) const = default;
};

enum class Label : std::uint8_t { Benign = 0, Hateful = 1 };

struct LabeledTweet {
  Tweet tweet;
  Label label = Label::Benign;
};

struct LabeledSet {
  std::vector<LabeledTweet> items;  // corpus order
  std::size_t benign_count = 0;
  std::size_t hateful_count = 0;
};

enum class TweetFormat { Jsonl, Csv };

// JSONL: one object per line with keys id, handle, created_at, text.
// CSV: RFC-4180 with the exact header id,handle,created_at,text.
// Both reject malformed records (ParseError with line number), duplicate
// ids (DuplicateId) and missing files (FileNotFound).
std::vector<Tweet> load_tweets(const std::string& path, TweetFormat format);
std::vector<Tweet> read_tweets(std::istream& in, TweetFormat format);

void write_tweets(std::ostream& out, const std::vector<Tweet>& tweets,
                  TweetFormat format);
void save_tweets(const std::string& path, const std::vector<Tweet>& tweets,
                 TweetFormat format);

// Label CSV: header tweet_id,label with label in {benign, hateful}
// (case-insensitive). Labels referencing unknown tweets raise
// UnknownTweetId; a tweet labeled twice raises DuplicateId. Tweets without
// labels are simply omitted. Output follows corpus order.
LabeledSet load_labels(const std::string& path,
                       const std::vector<Tweet>& tweets);
LabeledSet read_labels(std::istream& in, const std::vector<Tweet>& tweets);

void write_labels(std::ostream& out, const std::vector<LabeledTweet>& items);
void save_labels(const std::string& path,
                 const std::vector<LabeledTweet>& items);

// Keeps the first tweet for each normalized text (lowercased, whitespace
// collapsed). Stable, idempotent.
std::vector<Tweet> deduplicate(const std::vector<Tweet>& tweets);

struct EnglishFilterOptions {
  double stopword_ratio = 0.10;  // retain when ratio >= this ...
  std::size_t min_stopwords = 2;  // ... or at least this many stopword hits
};

// Heuristic language filter: a tweet is kept when the share of its word
// tokens found in the stopword set clears the ratio, or when it contains
// at least min_stopwords stopwords outright. Tweets with no word tokens are
// dropped. Output is a subsequence of the input.
std::vector<Tweet> filter_english(const std::vector<Tweet>& tweets,
                                  const std::set<std::string>& stopwords,
                                  const EnglishFilterOptions& options = {});

}  // namespace hatecode
