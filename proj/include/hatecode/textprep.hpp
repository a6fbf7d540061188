#pragma once

#include <set>
#include <string>
#include <vector>

namespace hatecode {

enum class TokenKind { Word, Hashtag, Mention, Url, EchoMarker, Number };

struct Token {
  std::string surface;
  TokenKind kind = TokenKind::Word;

  bool operator==(const Token&) const = default;
};

struct TokenList {
  std::vector<Token> tokens;
  std::string source_id;
};

// The reserved surface emitted for a triple-parenthesis wrap. Uppercase on
// purpose: every real token is lowercased, so it can never collide with the
// English word "echo".
inline const std::string kEchoSurface = "ECHO";

// Lowercases, splits on whitespace and punctuation, and classifies chunks in
// priority order: http(s) URLs, (((echo))) wraps, #hashtags, @mentions,
// digit runs, letter runs. Punctuation that is not part of a recognized
// token is dropped. Total: any input yields a (possibly empty) TokenList.
TokenList tokenize(const std::string& text, const std::string& source_id = "");

// Rule-based suffix stripper applied to Word tokens only. Runs the step list
// to a fixed point, so it is idempotent by construction. A rule only fires
// when the stripped surface keeps at least 3 characters, which leaves short
// words like "gas" intact.
Token lemmatize(const Token& token);

std::string lemmatize_word(const std::string& surface);

// Drops Word tokens found in the stopword set. Hashtags, mentions and echo
// markers always survive regardless of the set's contents.
TokenList remove_stopwords(const TokenList& tokens,
                           const std::set<std::string>& stopwords);

// tokenize -> lemmatize -> remove_stopwords -> drop Url/Number, emit surfaces.
std::vector<std::string> preprocess(const std::string& text,
                                    const std::set<std::string>& stopwords);

}  // namespace hatecode
