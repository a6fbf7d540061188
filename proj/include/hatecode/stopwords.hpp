#pragma once

#include <set>
#include <string>

namespace hatecode {

// The built-in English stopword list (174 words, includes contractions).
// The same list ships as data/stopwords_en.txt; --stopwords swaps it out.
const std::set<std::string>& default_stopwords();

// One word per line; blank lines and '#' comments are skipped; entries are
// lowercased.
std::set<std::string> load_stopwords(const std::string& path);

}  // namespace hatecode
