#include <algorithm>

#include "doctest.h"

#include "hatecode/errors.hpp"
#include "hatecode/features.hpp"
#include "hatecode/rng.hpp"

using namespace hatecode;

using Docs = std::vector<std::vector<std::string>>;

TEST_SUITE("features") {

TEST_CASE("min_df prunes rare terms") {
  Docs docs = {{"gas", "skype"}, {"gas"}, {"white"}};
  auto vocab = build_vocabulary(docs, {.min_df = 2, .max_terms = 10});
  CHECK(vocab.terms == std::vector<std::string>{"gas"});
  CHECK(vocab.doc_freq == std::vector<std::size_t>{2});
}

TEST_CASE("singleton corpus") {
  auto vocab = build_vocabulary({{"a"}}, {.min_df = 1, .max_terms = 1});
  CHECK(vocab.terms == std::vector<std::string>{"a"});
}

TEST_CASE("max_terms keeps highest df, ties lexicographic") {
  Docs docs = {{"a", "b"}, {"b", "c"}};
  auto vocab = build_vocabulary(docs, {.min_df = 1, .max_terms = 2});
  CHECK(vocab.terms == std::vector<std::string>{"b", "a"});
}

TEST_CASE("document frequency counts presence, not occurrences") {
  Docs docs = {{"x", "x", "x"}, {"y"}};
  auto vocab = build_vocabulary(docs, {.min_df = 1, .max_terms = 10});
  REQUIRE(vocab.terms.size() == 2);
  CHECK(vocab.doc_freq[vocab.index.at("x")] == 1);
}

TEST_CASE("empty vocabulary is an error") {
  CHECK_THROWS_AS(build_vocabulary({{"a"}}, {.min_df = 2, .max_terms = 10}),
                  EmptyVocabulary);
  CHECK_THROWS_AS(build_vocabulary({}, {.min_df = 1, .max_terms = 10}),
                  EmptyVocabulary);
}

TEST_CASE("mentions are excluded unless asked for") {
  Docs docs = {{"@victim", "gas"}, {"@victim", "gas"}};
  auto vocab = build_vocabulary(docs, {.min_df = 1, .max_terms = 10});
  CHECK(vocab.terms == std::vector<std::string>{"gas"});
  auto with = build_vocabulary(
      docs, {.min_df = 1, .max_terms = 10, .include_mentions = true});
  CHECK(with.contains("@victim"));
}

TEST_CASE("vectorize sets membership bits") {
  auto vocab = build_vocabulary({{"gas"}, {"gas", "skype"}, {"white"}, {"skype"}, {"white"}},
                                {.min_df = 1, .max_terms = 10});
  // df: gas 2, skype 2, white 2 -> lexicographic: gas, skype, white
  REQUIRE(vocab.terms == std::vector<std::string>{"gas", "skype", "white"});

  CHECK(vectorize({"gas", "skype"}, vocab).bits ==
        std::vector<std::uint8_t>{1, 1, 0});
  CHECK(vectorize({}, vocab).bits == std::vector<std::uint8_t>{0, 0, 0});
  CHECK(vectorize({"gas", "gas", "gas"}, vocab).bits ==
        std::vector<std::uint8_t>{1, 0, 0});
  CHECK(vectorize({"unseen"}, vocab).bits ==
        std::vector<std::uint8_t>{0, 0, 0});
}

TEST_CASE("vectorize depends only on the term set") {
  auto vocab = build_vocabulary({{"a", "b", "c"}}, {.min_df = 1, .max_terms = 10});
  std::vector<std::string> doc = {"c", "a", "b", "a", "c"};
  auto base = vectorize(doc, vocab).bits;
  Rng rng(3);
  for (int i = 0; i < 20; ++i) {
    deterministic_shuffle(doc, rng);
    CHECK(vectorize(doc, vocab).bits == base);
  }
}

TEST_CASE("every retained term reaches min_df on the building corpus") {
  Rng rng(17);
  const std::vector<std::string> pool = {"a", "b", "c", "d", "e", "f", "g"};
  for (int trial = 0; trial < 30; ++trial) {
    Docs docs;
    std::size_t n = 3 + draw_below(rng, 10);
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<std::string> doc;
      std::size_t len = draw_below(rng, 5);
      for (std::size_t j = 0; j < len; ++j) {
        doc.push_back(pool[draw_below(rng, pool.size())]);
      }
      docs.push_back(doc);
    }
    Vocabulary vocab;
    try {
      vocab = build_vocabulary(docs, {.min_df = 2, .max_terms = 4});
    } catch (const EmptyVocabulary&) {
      continue;
    }
    std::vector<std::size_t> hits(vocab.size(), 0);
    for (const auto& doc : docs) {
      auto bits = vectorize(doc, vocab).bits;
      for (std::size_t j = 0; j < bits.size(); ++j) hits[j] += bits[j];
    }
    for (std::size_t j = 0; j < vocab.size(); ++j) CHECK(hits[j] >= 2);
  }
}

TEST_CASE("identical corpora build identical vocabularies") {
  Docs docs = {{"z", "y"}, {"y", "x"}, {"x", "z"}, {"w"}};
  auto a = build_vocabulary(docs, {.min_df = 1, .max_terms = 3});
  auto b = build_vocabulary(docs, {.min_df = 1, .max_terms = 3});
  CHECK(a.terms == b.terms);
  CHECK(a.doc_freq == b.doc_freq);
}

}  // TEST_SUITE
