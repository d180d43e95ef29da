#ifndef WORDSHIP_CLASSIFY_HPP
#define WORDSHIP_CLASSIFY_HPP

#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "wordship/errors.hpp"
#include "wordship/normalize.hpp"
#include "wordship/text.hpp"

namespace wordship {

/// The four word classes. Every distinct word belongs to exactly one.
enum class WordKind { FormWord, Eponym, Acronym, Semantic };

inline const char* kind_code(WordKind k) {
  switch (k) {
    case WordKind::FormWord: return "FW";
    case WordKind::Eponym: return "EW";
    case WordKind::Acronym: return "AC";
    case WordKind::Semantic: return "SW";
  }
  return "?";
}

struct WordCategory {
  WordKind kind = WordKind::Semantic;
  std::optional<int> context_degree;  // filled for semantic words once resolved

  bool operator==(const WordCategory&) const = default;
};

/// Word-list file: one word per line, `#` starts a comment. Entries are
/// lowercased on load.
inline std::set<std::string> load_word_list(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open word list: " + path);
  std::set<std::string> out;
  std::string line;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::string_view body = trim(line);
    if (!body.empty()) out.insert(to_lower_ascii(body));
  }
  return out;
}

/// Classification lexicons. The three sets must be pairwise disjoint;
/// validate() rejects any overlap so precedence never has to arbitrate a
/// collision silently.
struct Lexicons {
  std::set<std::string> form_words;
  std::set<std::string> eponyms;
  std::set<std::string> acronyms;

  void validate() const {
    auto overlap = [](const std::set<std::string>& a, const std::set<std::string>& b) {
      std::vector<std::string> both;
      for (const auto& w : a) {
        if (b.contains(w)) both.push_back(w);
      }
      return both;
    };
    std::string bad;
    for (const auto& [label, pair] :
         std::map<std::string, std::vector<std::string>>{
             {"form_words/eponyms", overlap(form_words, eponyms)},
             {"form_words/acronyms", overlap(form_words, acronyms)},
             {"eponyms/acronyms", overlap(eponyms, acronyms)}}) {
      if (!pair.empty()) bad += " " + label + ": " + join(pair, ", ") + ";";
    }
    if (!bad.empty()) throw Error("lexicons are not disjoint:" + bad);
  }

  static Lexicons with_default_form_words() {
    Lexicons lx;
    lx.form_words = default_form_words();
    return lx;
  }

  /// English articles, prepositions and conjunctions.
  static const std::set<std::string>& default_form_words() {
    static const std::set<std::string> words = {
        "a",       "an",      "the",                                            // articles
        "about",   "above",   "across",  "after",   "against", "along",         // prepositions
        "among",   "around",  "at",      "before",  "behind",  "below",
        "beneath", "beside",  "between", "beyond",  "by",      "despite",
        "down",    "during",  "for",     "from",    "in",      "inside",
        "into",    "near",    "of",      "off",     "on",      "onto",
        "out",     "outside", "over",    "per",     "through", "to",
        "toward",  "towards", "under",   "until",   "up",      "upon",
        "via",     "with",    "within",  "without",
        "and",     "as",      "because", "but",     "if",      "nor",           // conjunctions
        "or",      "since",   "so",      "than",    "that",    "though",
        "unless",  "when",    "where",   "whether", "while",   "yet",
    };
    return words;
  }
};

/// Assigns the word class with precedence FW > EW > AC > SW. Lexicon lookups
/// are case-insensitive; the abbreviation heuristic inspects raw_surface,
/// which is the pre-normalization spelling (the normalized surface works too,
/// since normalization preserves abbreviation shape).
inline WordCategory classify_word(std::string_view word, const Lexicons& lexicons,
                                  std::string_view raw_surface) {
  if (trim(word).empty()) throw Error("cannot classify an empty word");
  const std::string lower = to_lower_ascii(word);
  if (lexicons.form_words.contains(lower)) return {WordKind::FormWord, std::nullopt};
  if (lexicons.eponyms.contains(lower)) return {WordKind::Eponym, std::nullopt};
  if (lexicons.acronyms.contains(lower) || is_acronym_shaped(raw_surface)) {
    return {WordKind::Acronym, std::nullopt};
  }
  return {WordKind::Semantic, std::nullopt};
}

/// Counts distinct words per kind over any range of objects exposing a
/// `surface` member. The counts always partition the input exactly.
template <typename WordRange>
std::map<WordKind, long> category_census_over(const WordRange& words, const Lexicons& lexicons) {
  std::map<WordKind, long> counts{{WordKind::FormWord, 0},
                                  {WordKind::Eponym, 0},
                                  {WordKind::Acronym, 0},
                                  {WordKind::Semantic, 0}};
  std::vector<std::string> empties;
  for (const auto& w : words) {
    if (trim(w.surface).empty()) {
      empties.push_back("\"" + w.surface + "\"");
      continue;
    }
    ++counts[classify_word(w.surface, lexicons, w.surface).kind];
  }
  if (!empties.empty()) {
    throw Error("unclassifiable words present: " + join(empties, ", "));
  }
  return counts;
}

}  // namespace wordship

#endif  // WORDSHIP_CLASSIFY_HPP
