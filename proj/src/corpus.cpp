#include "hatecode/corpus.hpp"

#include <cctype>
#include <fstream>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "json.hpp"

#include "hatecode/csv.hpp"
#include "hatecode/errors.hpp"
#include "hatecode/textprep.hpp"

namespace hatecode {

namespace {

std::string trim(const std::string& s) {
  std::size_t start = 0, end = s.size();
  while (start < end && std::isspace(static_cast<unsigned char>(s[start]))) {
    ++start;
  }
  while (end > start && std::isspace(static_cast<unsigned char>(s[end - 1]))) {
    --end;
  }
  return s.substr(start, end - start);
}

std::string lowercase_ascii(std::string s) {
  for (char& c : s) {
    c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  }
  return s;
}

// Dedup key: lowercased text with whitespace runs collapsed to one space.
std::string normalized_text(const std::string& text) {
  std::string out;
  out.reserve(text.size());
  bool pending_space = false;
  for (char raw : text) {
    unsigned char c = static_cast<unsigned char>(raw);
    if (std::isspace(c)) {
      pending_space = !out.empty();
      continue;
    }
    if (pending_space) {
      out += ' ';
      pending_space = false;
    }
    out += static_cast<char>(std::tolower(c));
  }
  return out;
}

Tweet tweet_from_fields(std::size_t line, std::string id, std::string handle,
                        const std::string& created_at, std::string text) {
  if (id.empty()) throw ParseError(line, "empty id");
  if (trim(text).empty()) throw ParseError(line, "empty text");
  auto ts = parse_iso8601(created_at);
  if (!ts) throw ParseError(line, "unparseable timestamp \"" + created_at + "\"");
  return Tweet{std::move(id), std::move(handle), *ts, std::move(text)};
}

std::vector<Tweet> read_tweets_jsonl(std::istream& in) {
  std::vector<Tweet> tweets;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (trim(line).empty()) continue;
    nlohmann::json record;
    try {
      record = nlohmann::json::parse(line);
    } catch (const nlohmann::json::parse_error& e) {
      throw ParseError(line_no, std::string("invalid JSON: ") + e.what());
    }
    if (!record.is_object()) throw ParseError(line_no, "record is not an object");
    for (const char* key : {"id", "handle", "created_at", "text"}) {
      if (!record.contains(key) || !record[key].is_string()) {
        throw ParseError(line_no,
                         std::string("missing or non-string field \"") + key +
                             "\"");
      }
    }
    tweets.push_back(tweet_from_fields(
        line_no, record["id"].get<std::string>(),
        record["handle"].get<std::string>(),
        record["created_at"].get<std::string>(),
        record["text"].get<std::string>()));
  }
  return tweets;
}

std::vector<Tweet> read_tweets_csv(std::istream& in) {
  auto records = read_csv(in);
  if (records.empty()) return {};
  const auto& header = records.front().fields;
  const std::vector<std::string> expected = {"id", "handle", "created_at",
                                             "text"};
  if (header != expected) {
    throw ParseError(records.front().line,
                     "expected header id,handle,created_at,text");
  }
  std::vector<Tweet> tweets;
  for (std::size_t i = 1; i < records.size(); ++i) {
    const auto& rec = records[i];
    if (rec.fields.size() != 4) {
      throw ParseError(rec.line, "expected 4 fields, got " +
                                     std::to_string(rec.fields.size()));
    }
    tweets.push_back(tweet_from_fields(rec.line, rec.fields[0], rec.fields[1],
                                       rec.fields[2], rec.fields[3]));
  }
  return tweets;
}

void check_unique_ids(const std::vector<Tweet>& tweets) {
  std::unordered_set<std::string> seen;
  for (const Tweet& t : tweets) {
    if (!seen.insert(t.id).second) throw DuplicateId(t.id);
  }
}

}  // namespace

std::vector<Tweet> read_tweets(std::istream& in, TweetFormat format) {
  std::vector<Tweet> tweets = format == TweetFormat::Jsonl
                                  ? read_tweets_jsonl(in)
                                  : read_tweets_csv(in);
  check_unique_ids(tweets);
  return tweets;
}

std::vector<Tweet> load_tweets(const std::string& path, TweetFormat format) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FileNotFound(path);
  return read_tweets(in, format);
}

void write_tweets(std::ostream& out, const std::vector<Tweet>& tweets,
                  TweetFormat format) {
  if (format == TweetFormat::Jsonl) {
    for (const Tweet& t : tweets) {
      nlohmann::ordered_json record{{"id", t.id},
                                    {"handle", t.handle},
                                    {"created_at", format_iso8601(t.timestamp)},
                                    {"text", t.text}};
      out << record.dump() << '\n';
    }
  } else {
    write_csv_row(out, {"id", "handle", "created_at", "text"});
    for (const Tweet& t : tweets) {
      write_csv_row(out,
                    {t.id, t.handle, format_iso8601(t.timestamp), t.text});
    }
  }
}

void save_tweets(const std::string& path, const std::vector<Tweet>& tweets,
                 TweetFormat format) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw FileNotFound(path);
  write_tweets(out, tweets, format);
}

LabeledSet read_labels(std::istream& in, const std::vector<Tweet>& tweets) {
  auto records = read_csv(in);
  if (records.empty()) return {};
  const std::vector<std::string> expected = {"tweet_id", "label"};
  if (records.front().fields != expected) {
    throw ParseError(records.front().line, "expected header tweet_id,label");
  }

  std::unordered_map<std::string, std::size_t> position;
  position.reserve(tweets.size());
  for (std::size_t i = 0; i < tweets.size(); ++i) position[tweets[i].id] = i;

  // label per corpus position; parsed in file order, emitted in corpus order
  std::vector<int> assigned(tweets.size(), -1);
  for (std::size_t i = 1; i < records.size(); ++i) {
    const auto& rec = records[i];
    if (rec.fields.size() != 2) {
      throw ParseError(rec.line, "expected 2 fields, got " +
                                     std::to_string(rec.fields.size()));
    }
    const std::string& id = rec.fields[0];
    auto it = position.find(id);
    if (it == position.end()) throw UnknownTweetId(id);
    std::string value = lowercase_ascii(rec.fields[1]);
    Label label;
    if (value == "benign") {
      label = Label::Benign;
    } else if (value == "hateful") {
      label = Label::Hateful;
    } else {
      throw InvalidLabel(rec.fields[1]);
    }
    if (assigned[it->second] != -1) throw DuplicateId(id);
    assigned[it->second] = static_cast<int>(label);
  }

  LabeledSet result;
  for (std::size_t i = 0; i < tweets.size(); ++i) {
    if (assigned[i] == -1) continue;
    Label label = static_cast<Label>(assigned[i]);
    result.items.push_back({tweets[i], label});
    if (label == Label::Hateful) {
      ++result.hateful_count;
    } else {
      ++result.benign_count;
    }
  }
  return result;
}

LabeledSet load_labels(const std::string& path,
                       const std::vector<Tweet>& tweets) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FileNotFound(path);
  return read_labels(in, tweets);
}

void write_labels(std::ostream& out, const std::vector<LabeledTweet>& items) {
  write_csv_row(out, {"tweet_id", "label"});
  for (const auto& item : items) {
    write_csv_row(out, {item.tweet.id,
                        item.label == Label::Hateful ? "hateful" : "benign"});
  }
}

void save_labels(const std::string& path,
                 const std::vector<LabeledTweet>& items) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw FileNotFound(path);
  write_labels(out, items);
}

std::vector<Tweet> deduplicate(const std::vector<Tweet>& tweets) {
  std::vector<Tweet> result;
  std::unordered_set<std::string> seen;
  for (const Tweet& t : tweets) {
    if (seen.insert(normalized_text(t.text)).second) result.push_back(t);
  }
  return result;
}

std::vector<Tweet> filter_english(const std::vector<Tweet>& tweets,
                                  const std::set<std::string>& stopwords,
                                  const EnglishFilterOptions& options) {
  std::vector<Tweet> result;
  for (const Tweet& t : tweets) {
    std::size_t words = 0, hits = 0;
    for (const Token& tok : tokenize(t.text).tokens) {
      if (tok.kind != TokenKind::Word) continue;
      ++words;
      if (stopwords.count(tok.surface)) ++hits;
    }
    if (words == 0) continue;
    double ratio = static_cast<double>(hits) / static_cast<double>(words);
    if (ratio >= options.stopword_ratio || hits >= options.min_stopwords) {
      result.push_back(t);
    }
  }
  return result;
}

}  // namespace hatecode
