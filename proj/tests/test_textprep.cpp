#include <string>
#include <vector>

#include "doctest.h"

#include "hatecode/rng.hpp"
#include "hatecode/stopwords.hpp"
#include "hatecode/textprep.hpp"

using namespace hatecode;

namespace {

std::vector<std::string> surfaces(const TokenList& list) {
  std::vector<std::string> out;
  for (const auto& t : list.tokens) out.push_back(t.surface);
  return out;
}

}  // namespace

TEST_SUITE("textprep") {

TEST_CASE("tokenize handles the echo wrap") {
  auto list = tokenize("Gas the (((skypes)))!");
  REQUIRE(list.tokens.size() == 4);
  CHECK(list.tokens[0] == Token{"gas", TokenKind::Word});
  CHECK(list.tokens[1] == Token{"the", TokenKind::Word});
  CHECK(list.tokens[2] == Token{"ECHO", TokenKind::EchoMarker});
  CHECK(list.tokens[3] == Token{"skypes", TokenKind::Word});
}

TEST_CASE("hashtags stay whole, lowercased") {
  auto list = tokenize("#MAGA");
  REQUIRE(list.tokens.size() == 1);
  CHECK(list.tokens[0] == Token{"#maga", TokenKind::Hashtag});
}

TEST_CASE("empty input gives an empty token list") {
  CHECK(tokenize("").tokens.empty());
  CHECK(tokenize("   \t\n").tokens.empty());
}

TEST_CASE("token kinds by priority") {
  auto list = tokenize("see https://T.co/Xyz @Friend 42 don't #tag2");
  REQUIRE(list.tokens.size() == 6);
  CHECK(list.tokens[0] == Token{"see", TokenKind::Word});
  CHECK(list.tokens[1] == Token{"https://t.co/xyz", TokenKind::Url});
  CHECK(list.tokens[2] == Token{"@friend", TokenKind::Mention});
  CHECK(list.tokens[3] == Token{"42", TokenKind::Number});
  CHECK(list.tokens[4] == Token{"don't", TokenKind::Word});
  CHECK(list.tokens[5] == Token{"#tag2", TokenKind::Hashtag});
}

TEST_CASE("punctuation splits and is dropped") {
  auto list = tokenize("white,genocide...now");
  CHECK(surfaces(list) == std::vector<std::string>{"white", "genocide", "now"});
}

TEST_CASE("echo with more than three parens and trailing punctuation") {
  auto list = tokenize("((((them)))).");
  REQUIRE(list.tokens.size() == 2);
  CHECK(list.tokens[0].kind == TokenKind::EchoMarker);
  CHECK(list.tokens[1] == Token{"them", TokenKind::Word});
}

TEST_CASE("double parens are not an echo") {
  auto list = tokenize("((aside))");
  REQUIRE(list.tokens.size() == 1);
  CHECK(list.tokens[0] == Token{"aside", TokenKind::Word});
}

TEST_CASE("echo invariant: any wrapped word yields exactly one marker") {
  Rng rng(11);
  const std::string letters = "abcdefghijklmnopqrstuvwxyz";
  for (int i = 0; i < 200; ++i) {
    std::string word;
    std::size_t len = 1 + draw_below(rng, 12);
    for (std::size_t j = 0; j < len; ++j) {
      word += letters[draw_below(rng, letters.size())];
    }
    auto list = tokenize("(((" + word + ")))");
    int markers = 0;
    for (const auto& t : list.tokens) {
      if (t.kind == TokenKind::EchoMarker) ++markers;
    }
    CHECK(markers == 1);
  }
}

TEST_CASE("tokenize is total and deterministic on byte soup") {
  Rng rng(99);
  for (int i = 0; i < 300; ++i) {
    std::string text;
    std::size_t len = draw_below(rng, 40);
    for (std::size_t j = 0; j < len; ++j) {
      text += static_cast<char>(draw_below(rng, 256));
    }
    auto a = tokenize(text);
    auto b = tokenize(text);
    CHECK(a.tokens == b.tokens);
    for (const auto& t : a.tokens) CHECK(!t.surface.empty());
  }
}

TEST_CASE("lemmatize strips plurals") {
  CHECK(lemmatize({"skypes", TokenKind::Word}) ==
        Token{"skype", TokenKind::Word});
  CHECK(lemmatize({"googles", TokenKind::Word}) ==
        Token{"google", TokenKind::Word});
  CHECK(lemmatize_word("skittles") == "skittle");
  CHECK(lemmatize_word("caresses") == "caress");
  CHECK(lemmatize_word("skies") == "ski");
  CHECK(lemmatize_word("ties") == "tie");
}

TEST_CASE("lemmatize keeps short words whole") {
  CHECK(lemmatize_word("gas") == "gas");
  CHECK(lemmatize_word("is") == "is");
  CHECK(lemmatize_word("glass") == "glass");
}

TEST_CASE("lemmatize strips ing/ed when a vowel remains") {
  CHECK(lemmatize_word("walking") == "walk");
  CHECK(lemmatize_word("hated") == "hat");
  CHECK(lemmatize_word("sing") == "sing");   // no vowel would remain
  CHECK(lemmatize_word("housings") == "hou");  // s, ing, then s again
}

TEST_CASE("lemmatize passes non-words through") {
  CHECK(lemmatize({"#maga", TokenKind::Hashtag}) ==
        Token{"#maga", TokenKind::Hashtag});
  CHECK(lemmatize({"@skypes", TokenKind::Mention}) ==
        Token{"@skypes", TokenKind::Mention});
  CHECK(lemmatize({"ECHO", TokenKind::EchoMarker}) ==
        Token{"ECHO", TokenKind::EchoMarker});
}

TEST_CASE("lemmatize is idempotent over a fuzz sample") {
  Rng rng(123);
  const std::string letters = "abcdefghijklmnopqrstuvwxyz'";
  const std::vector<std::string> suffixes = {"",    "s",   "es",  "ses",
                                             "ies", "ing", "ed",  "sses",
                                             "ings", "ess"};
  for (int i = 0; i < 10000; ++i) {
    std::string word;
    std::size_t len = 1 + draw_below(rng, 10);
    for (std::size_t j = 0; j < len; ++j) {
      word += letters[draw_below(rng, letters.size())];
    }
    word += suffixes[draw_below(rng, suffixes.size())];
    const std::string once = lemmatize_word(word);
    CHECK(lemmatize_word(once) == once);
  }
}

TEST_CASE("remove_stopwords drops listed words only") {
  TokenList list;
  list.tokens = {{"gas", TokenKind::Word},
                 {"the", TokenKind::Word},
                 {"skype", TokenKind::Word}};
  auto out = remove_stopwords(list, default_stopwords());
  CHECK(surfaces(out) == std::vector<std::string>{"gas", "skype"});
}

TEST_CASE("remove_stopwords never touches non-word kinds") {
  TokenList list;
  list.tokens = {{"ECHO", TokenKind::EchoMarker},
                 {"#the", TokenKind::Hashtag},
                 {"@the", TokenKind::Mention}};
  auto out = remove_stopwords(list, {"echo", "the", "#the", "@the"});
  CHECK(out.tokens.size() == 3);
}

TEST_CASE("remove_stopwords on empty input") {
  CHECK(remove_stopwords(TokenList{}, default_stopwords()).tokens.empty());
}

TEST_CASE("remove_stopwords output is a subsequence of its input") {
  Rng rng(41);
  const std::vector<std::string> pool = {"the", "gas", "a", "skype", "of"};
  for (int trial = 0; trial < 100; ++trial) {
    TokenList list;
    std::size_t len = draw_below(rng, 12);
    for (std::size_t i = 0; i < len; ++i) {
      list.tokens.push_back({pool[draw_below(rng, pool.size())],
                             draw_below(rng, 4) == 0 ? TokenKind::Hashtag
                                                     : TokenKind::Word});
    }
    auto out = remove_stopwords(list, default_stopwords());
    std::size_t pos = 0;
    for (const auto& t : out.tokens) {
      while (pos < list.tokens.size() && !(list.tokens[pos] == t)) ++pos;
      REQUIRE(pos < list.tokens.size());
      ++pos;
    }
  }
}

TEST_CASE("preprocess composes the chain") {
  CHECK(preprocess("Gas the skypes", default_stopwords()) ==
        std::vector<std::string>{"gas", "skype"});
  CHECK(preprocess("I skype my mom everyday", default_stopwords()) ==
        std::vector<std::string>{"skype", "mom", "everyday"});
  CHECK(preprocess("http://t.co/x 123", default_stopwords()).empty());
  CHECK(preprocess("Gas the (((skypes)))!", default_stopwords()) ==
        std::vector<std::string>{"gas", "ECHO", "skype"});
}

TEST_CASE("the shipped stopword file matches the embedded list") {
  auto from_file =
      load_stopwords(std::string(HATECODE_DATA_DIR) + "/stopwords_en.txt");
  CHECK(from_file == default_stopwords());
  CHECK(default_stopwords().size() == 174);
}

TEST_CASE("preprocess never emits empty terms") {
  Rng rng(5);
  const std::string alphabet = "ab '(#@)1.!the ";
  for (int i = 0; i < 300; ++i) {
    std::string text;
    std::size_t len = draw_below(rng, 30);
    for (std::size_t j = 0; j < len; ++j) {
      text += alphabet[draw_below(rng, alphabet.size())];
    }
    for (const auto& term : preprocess(text, default_stopwords())) {
      CHECK(!term.empty());
    }
  }
}

}  // TEST_SUITE
