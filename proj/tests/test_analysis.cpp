#include <algorithm>

#include "doctest.h"

#include "hatecode/analysis.hpp"
#include "hatecode/errors.hpp"
#include "hatecode/rng.hpp"

using namespace hatecode;

namespace {

Tweet at(const std::string& id, const std::string& when) {
  return Tweet{id, "h", *parse_iso8601(when), "text"};
}

UtcDay day(int y, unsigned m, unsigned d) {
  return UtcDay{std::chrono::year{y} / m / d};
}

}  // namespace

TEST_SUITE("analysis") {

TEST_CASE("timeline fills gaps between first and last day") {
  std::vector<Tweet> tweets = {
      at("1", "2016-10-04T08:00:00Z"), at("2", "2016-10-04T12:00:00Z"),
      at("3", "2016-10-04T23:59:59Z"), at("4", "2016-10-06T00:00:00Z")};
  auto bins = timeline(tweets);
  REQUIRE(bins.size() == 3);
  CHECK(bins[0] == DailyBin{day(2016, 10, 4), 3});
  CHECK(bins[1] == DailyBin{day(2016, 10, 5), 0});
  CHECK(bins[2] == DailyBin{day(2016, 10, 6), 1});
}

TEST_CASE("timeline of nothing is empty") {
  CHECK(timeline({}).empty());
}

TEST_CASE("same-instant tweets land in one bin") {
  std::vector<Tweet> tweets = {at("1", "2016-10-04T12:00:00Z"),
                               at("2", "2016-10-04T12:00:00Z"),
                               at("3", "2016-10-04T12:00:00Z")};
  auto bins = timeline(tweets);
  REQUIRE(bins.size() == 1);
  CHECK(bins[0].count == 3);
}

TEST_CASE("bin counts always sum to the input size, dates ascend gap-free") {
  Rng rng(21);
  std::vector<Tweet> tweets;
  for (int i = 0; i < 300; ++i) {
    auto ts = UtcDay{std::chrono::year{2016} / 9 / 23} +
              std::chrono::seconds{draw_below(rng, 86400L * 26)};
    tweets.push_back(Tweet{std::to_string(i), "h", ts, "x"});
  }
  auto bins = timeline(tweets);
  std::int64_t total = 0;
  for (std::size_t i = 0; i < bins.size(); ++i) {
    total += bins[i].count;
    if (i > 0) CHECK(bins[i].date - bins[i - 1].date == std::chrono::days{1});
  }
  CHECK(total == 300);
}

TEST_CASE("peak picks the maximum, earliest on ties") {
  std::vector<DailyBin> bins = {{day(2016, 10, 1), 3},
                                {day(2016, 10, 2), 0},
                                {day(2016, 10, 3), 1}};
  CHECK(peak(bins) == DailyBin{day(2016, 10, 1), 3});

  std::vector<DailyBin> tie = {{day(2016, 10, 1), 2}, {day(2016, 10, 2), 2}};
  CHECK(peak(tie) == DailyBin{day(2016, 10, 1), 2});

  CHECK_THROWS_AS(peak({}), EmptyTimeline);
}

TEST_CASE("aggressors above the threshold, sorted by count then handle") {
  std::vector<std::pair<std::string, std::string>> flagged;
  for (int i = 0; i < 5; ++i) flagged.emplace_back("A", "a" + std::to_string(i));
  for (int i = 0; i < 3; ++i) flagged.emplace_back("B", "b" + std::to_string(i));
  auto records = extract_aggressors(flagged, 4);
  REQUIRE(records.size() == 1);
  CHECK(records[0].handle == "A");
  CHECK(records[0].hateful_count == 5);
  CHECK(records[0].tweet_ids ==
        std::vector<std::string>{"a0", "a1", "a2", "a3", "a4"});
}

TEST_CASE("no flagged tweets, no aggressors") {
  CHECK(extract_aggressors({}, 4).empty());
}

TEST_CASE("threshold one keeps every flagged handle") {
  std::vector<std::pair<std::string, std::string>> flagged = {
      {"x", "1"}, {"y", "2"}, {"x", "3"}};
  auto records = extract_aggressors(flagged, 1);
  REQUIRE(records.size() == 2);
  CHECK(records[0].handle == "x");  // count 2 first
  CHECK(records[1].handle == "y");

  CHECK_THROWS_AS(extract_aggressors(flagged, 0), InvalidArgument);
}

TEST_CASE("raising the threshold never adds a handle") {
  Rng rng(31);
  std::vector<std::pair<std::string, std::string>> flagged;
  for (int i = 0; i < 120; ++i) {
    flagged.emplace_back("h" + std::to_string(draw_below(rng, 12)),
                         "t" + std::to_string(i));
  }
  std::vector<std::string> previous;
  bool first = true;
  for (std::int64_t threshold = 1; threshold <= 15; ++threshold) {
    std::vector<std::string> handles;
    for (const auto& r : extract_aggressors(flagged, threshold)) {
      handles.push_back(r.handle);
    }
    if (!first) {
      for (const auto& h : handles) {
        CHECK(std::find(previous.begin(), previous.end(), h) != previous.end());
      }
    }
    previous = handles;
    first = false;
  }
}

TEST_CASE("aggressor output is invariant to input order") {
  std::vector<std::pair<std::string, std::string>> flagged = {
      {"a", "1"}, {"b", "2"}, {"a", "3"}, {"c", "4"}, {"b", "5"}, {"a", "6"}};
  auto base = extract_aggressors(flagged, 2);
  std::reverse(flagged.begin(), flagged.end());
  auto reversed = extract_aggressors(flagged, 2);
  REQUIRE(base.size() == reversed.size());
  for (std::size_t i = 0; i < base.size(); ++i) {
    CHECK(base[i].handle == reversed[i].handle);
    CHECK(base[i].hateful_count == reversed[i].hateful_count);
  }
}

}  // TEST_SUITE
