#ifndef WORDSHIP_NORMALIZE_HPP
#define WORDSHIP_NORMALIZE_HPP

#include <fstream>
#include <map>
#include <string>
#include <string_view>

#include "wordship/errors.hpp"
#include "wordship/text.hpp"

namespace wordship {

/// Pure configuration for word normalization. Identical rules applied to
/// identical input always give identical output; the exception table is part
/// of the rule value for that purpose.
struct NormalizationRules {
  bool lowercase = true;
  bool singularize = true;
  bool hyphen_splits = true;
  std::string strip_characters = "\"'()";
  std::map<std::string, std::string> singular_exceptions;

  bool operator==(const NormalizationRules&) const = default;
};

/// Abbreviation shape test: 2-6 characters, uppercase letters and digits only,
/// at least one letter. Tokens that are pure numbers are deliberately not
/// abbreviation-shaped; they stay ordinary words.
inline bool is_acronym_shaped(std::string_view s) {
  if (s.size() < 2 || s.size() > 6) return false;
  bool has_letter = false;
  for (char c : s) {
    if (is_ascii_upper(c)) {
      has_letter = true;
    } else if (!is_ascii_digit(c)) {
      return false;
    }
  }
  return has_letter;
}

/// Minimal suffix-rule singularizer: "-ies" -> "-y", common "-es" clusters
/// drop "es", otherwise a trailing "s" drops unless a guard applies. The
/// exception table wins over every rule and handles the "-es" ambiguity
/// (e.g. gases -> gas but bases -> base).
inline std::string singularize_word(const std::string& word,
                                    const std::map<std::string, std::string>& exceptions) {
  if (auto it = exceptions.find(word); it != exceptions.end()) return it->second;
  if (word.size() >= 5 && ends_with(word, "ies")) {
    return word.substr(0, word.size() - 3) + "y";
  }
  for (std::string_view cluster : {"sses", "ches", "shes", "xes", "zes"}) {
    if (word.size() > cluster.size() && ends_with(word, cluster)) {
      return word.substr(0, word.size() - 2);
    }
  }
  if (word.size() >= 4 && word.back() == 's' && !ends_with(word, "ss") &&
      !ends_with(word, "us") && !ends_with(word, "is")) {
    return word.substr(0, word.size() - 1);
  }
  return word;
}

/// Normalizes one token. Idempotent; abbreviation-shaped tokens keep their
/// capitalization (and skip singularization) so they stay distinguishable
/// from ordinary words of the same spelling.
inline std::string normalize_word(std::string_view token, const NormalizationRules& rules) {
  std::string s;
  s.reserve(token.size());
  for (char c : token) {
    if (rules.strip_characters.find(c) == std::string::npos) s.push_back(c);
  }
  if (s.empty()) return s;
  if (is_acronym_shaped(s)) return s;
  if (rules.lowercase) s = to_lower_ascii(s);
  if (rules.singularize) s = singularize_word(s, rules.singular_exceptions);
  return s;
}

/// Exception lexicon file: one `plural<TAB>singular` pair per line, `#`
/// starts a comment. A line with a single column maps the word to itself.
inline std::map<std::string, std::string> load_singular_exceptions(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open singular-exception lexicon: " + path);
  std::map<std::string, std::string> out;
  std::string line;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::string_view body = trim(line);
    if (body.empty()) continue;
    auto tab = body.find('\t');
    std::string plural(trim(body.substr(0, tab)));
    std::string singular(tab == std::string_view::npos ? plural : std::string(trim(body.substr(tab + 1))));
    out[to_lower_ascii(plural)] = to_lower_ascii(singular);
  }
  return out;
}

}  // namespace wordship

#endif  // WORDSHIP_NORMALIZE_HPP
