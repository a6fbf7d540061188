#include "hatecode/textprep.hpp"

#include <cctype>

namespace hatecode {

namespace {

// Bytes >= 0x80 are treated as letters so UTF-8 sequences stay intact.
bool is_letter(unsigned char c) { return std::isalpha(c) || c >= 0x80; }
bool is_digit_ascii(unsigned char c) { return std::isdigit(c) != 0; }
bool is_tag_char(unsigned char c) {
  return is_letter(c) || is_digit_ascii(c) || c == '_';
}
bool is_vowel(char c) {
  return c == 'a' || c == 'e' || c == 'i' || c == 'o' || c == 'u' || c == 'y';
}

std::string lowercase_ascii(const std::string& s) {
  std::string out = s;
  for (char& c : out) {
    c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  }
  return out;
}

// Scans a chunk with no echo wraps left in it. Emits hashtags, mentions,
// digit runs and word runs; everything else is a separator and is dropped.
void scan_plain(const std::string& chunk, std::vector<Token>& out) {
  std::size_t i = 0;
  const std::size_t n = chunk.size();
  while (i < n) {
    unsigned char c = chunk[i];
    if ((c == '#' || c == '@') && i + 1 < n &&
        is_tag_char(static_cast<unsigned char>(chunk[i + 1]))) {
      std::size_t start = i++;
      while (i < n && is_tag_char(static_cast<unsigned char>(chunk[i]))) ++i;
      out.push_back({chunk.substr(start, i - start),
                     c == '#' ? TokenKind::Hashtag : TokenKind::Mention});
    } else if (is_letter(c) || c == '\'') {
      std::size_t start = i;
      while (i < n && (is_letter(static_cast<unsigned char>(chunk[i])) ||
                       chunk[i] == '\'')) {
        ++i;
      }
      std::string word = chunk.substr(start, i - start);
      std::size_t lo = word.find_first_not_of('\'');
      if (lo == std::string::npos) continue;  // apostrophes only
      std::size_t hi = word.find_last_not_of('\'');
      out.push_back({word.substr(lo, hi - lo + 1), TokenKind::Word});
    } else if (is_digit_ascii(c)) {
      std::size_t start = i;
      while (i < n && is_digit_ascii(static_cast<unsigned char>(chunk[i]))) ++i;
      out.push_back({chunk.substr(start, i - start), TokenKind::Number});
    } else {
      ++i;
    }
  }
}

// Finds "((( inner )))" cores: >= 3 opening parens, a non-empty paren-free
// inner run, >= 3 closing parens. Text around and between cores goes through
// scan_plain.
void scan_chunk(const std::string& chunk, std::vector<Token>& out) {
  std::size_t pos = 0;
  const std::size_t n = chunk.size();
  while (pos < n) {
    std::size_t open = chunk.find("(((", pos);
    if (open == std::string::npos) break;
    std::size_t inner_start = open;
    while (inner_start < n && chunk[inner_start] == '(') ++inner_start;
    std::size_t inner_end = inner_start;
    while (inner_end < n && chunk[inner_end] != '(' && chunk[inner_end] != ')') {
      ++inner_end;
    }
    std::size_t close_end = inner_end;
    while (close_end < n && chunk[close_end] == ')') ++close_end;
    if (inner_end > inner_start && close_end - inner_end >= 3) {
      scan_plain(chunk.substr(pos, open - pos), out);
      out.push_back({kEchoSurface, TokenKind::EchoMarker});
      scan_plain(chunk.substr(inner_start, inner_end - inner_start), out);
      pos = close_end;
    } else {
      scan_plain(chunk.substr(pos, inner_start - pos), out);
      pos = inner_start;
    }
  }
  scan_plain(chunk.substr(pos), out);
}

}  // namespace

TokenList tokenize(const std::string& text, const std::string& source_id) {
  TokenList result;
  result.source_id = source_id;
  const std::string lowered = lowercase_ascii(text);
  std::size_t i = 0;
  const std::size_t n = lowered.size();
  while (i < n) {
    while (i < n && std::isspace(static_cast<unsigned char>(lowered[i]))) ++i;
    std::size_t start = i;
    while (i < n && !std::isspace(static_cast<unsigned char>(lowered[i]))) ++i;
    if (i == start) break;
    std::string chunk = lowered.substr(start, i - start);
    if (chunk.rfind("http://", 0) == 0 || chunk.rfind("https://", 0) == 0) {
      result.tokens.push_back({chunk, TokenKind::Url});
    } else {
      scan_chunk(chunk, result.tokens);
    }
  }
  return result;
}

std::string lemmatize_word(const std::string& surface) {
  auto has_vowel = [](const std::string& s) {
    for (char c : s) {
      if (is_vowel(c)) return true;
    }
    return false;
  };
  auto ends_with = [](const std::string& s, const char* suffix) {
    std::string_view sv{suffix};
    return s.size() >= sv.size() &&
           s.compare(s.size() - sv.size(), sv.size(), sv) == 0;
  };

  // Each rule fires only when the stripped form keeps >= 3 characters;
  // otherwise the next rule gets a chance ("ties" -> "tie" via plain
  // s-removal, "gas" stays "gas"). The outer loop runs to a fixed point,
  // which makes the whole function idempotent.
  std::string word = surface;
  for (;;) {
    std::string next = word;
    if (ends_with(word, "sses") && word.size() - 2 >= 3) {
      next = word.substr(0, word.size() - 2);
    } else if (ends_with(word, "ies") && word.size() - 2 >= 3) {
      next = word.substr(0, word.size() - 2);
    } else if (ends_with(word, "s") && word.size() >= 2 &&
               is_letter(word[word.size() - 2]) && word[word.size() - 2] != 's' &&
               word.size() - 1 >= 3) {
      next = word.substr(0, word.size() - 1);
    } else if (ends_with(word, "ing") && word.size() - 3 >= 3 &&
               has_vowel(word.substr(0, word.size() - 3))) {
      next = word.substr(0, word.size() - 3);
    } else if (ends_with(word, "ed") && word.size() - 2 >= 3 &&
               has_vowel(word.substr(0, word.size() - 2))) {
      next = word.substr(0, word.size() - 2);
    }
    if (next == word) return word;
    word = std::move(next);
  }
}

Token lemmatize(const Token& token) {
  if (token.kind != TokenKind::Word) return token;
  return {lemmatize_word(token.surface), TokenKind::Word};
}

TokenList remove_stopwords(const TokenList& tokens,
                           const std::set<std::string>& stopwords) {
  TokenList result;
  result.source_id = tokens.source_id;
  for (const Token& t : tokens.tokens) {
    if (t.kind == TokenKind::Word && stopwords.count(t.surface)) continue;
    result.tokens.push_back(t);
  }
  return result;
}

std::vector<std::string> preprocess(const std::string& text,
                                    const std::set<std::string>& stopwords) {
  TokenList tokens = tokenize(text);
  for (Token& t : tokens.tokens) t = lemmatize(t);
  TokenList kept = remove_stopwords(tokens, stopwords);
  std::vector<std::string> terms;
  terms.reserve(kept.tokens.size());
  for (const Token& t : kept.tokens) {
    if (t.kind == TokenKind::Url || t.kind == TokenKind::Number) continue;
    terms.push_back(t.surface);
  }
  return terms;
}

}  // namespace hatecode
