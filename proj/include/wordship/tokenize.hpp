#ifndef WORDSHIP_TOKENIZE_HPP
#define WORDSHIP_TOKENIZE_HPP

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "wordship/errors.hpp"
#include "wordship/normalize.hpp"
#include "wordship/text.hpp"

namespace wordship {

/// One constituent word of a keyword. Tokens that came from a hyphen-joined
/// run share a hyphen_group id so reports can render the compound.
struct Token {
  std::string surface;                       // normalized form
  std::optional<std::size_t> hyphen_group;   // set only for runs of >= 2 tokens
  bool is_form_word = false;

  bool operator==(const Token&) const = default;
};

struct TokenSeq {
  std::vector<Token> tokens;

  bool operator==(const TokenSeq&) const = default;

  /// Deduplication key: normalized surfaces joined with single spaces.
  /// Hyphenation variants of the same words collapse to one key.
  std::string canonical() const {
    std::string out;
    for (const Token& t : tokens) {
      if (!out.empty()) out.push_back(' ');
      out += t.surface;
    }
    return out;
  }

  /// Human-facing rendering with hyphen groups restored.
  std::string display() const {
    std::string out;
    for (std::size_t i = 0; i < tokens.size(); ++i) {
      if (i > 0) {
        bool joined = tokens[i].hyphen_group && tokens[i - 1].hyphen_group &&
                      *tokens[i].hyphen_group == *tokens[i - 1].hyphen_group;
        out.push_back(joined ? '-' : ' ');
      }
      out += tokens[i].surface;
    }
    return out;
  }
};

/// Count of meaning-bearing constituent words: every token that is not a
/// form word.
inline int wordship(const TokenSeq& seq) {
  int n = 0;
  for (const Token& t : seq.tokens) {
    if (!t.is_form_word) ++n;
  }
  return n;
}

/// Splits a raw keyword string into normalized constituent words.
///
/// Splitting happens on whitespace and, when rules.hyphen_splits is set, on
/// hyphens; a hyphen-joined run of two or more surviving tokens shares a
/// hyphen_group id. Form-word flags come from the supplied lexicon, matched
/// case-insensitively against the normalized surface.
///
/// Throws Error when no tokens survive normalization, or when every
/// surviving token is a form word (a keyword must carry at least one
/// meaning-bearing word).
inline TokenSeq decompose(std::string_view raw, const NormalizationRules& rules,
                          const std::set<std::string>& form_words) {
  std::string_view body = trim(raw);
  if (body.empty()) throw Error("no tokens in keyword: input is empty");

  TokenSeq seq;
  std::size_t next_group = 0;
  for (const std::string& chunk : split_whitespace(body)) {
    std::vector<std::string> pieces;
    if (rules.hyphen_splits) {
      for (const std::string& part : split_on(chunk, '-')) {
        std::string norm = normalize_word(part, rules);
        if (!norm.empty()) pieces.push_back(std::move(norm));
      }
    } else {
      std::string norm = normalize_word(chunk, rules);
      if (!norm.empty()) pieces.push_back(std::move(norm));
    }
    std::optional<std::size_t> group;
    if (pieces.size() >= 2) group = next_group++;
    for (std::string& p : pieces) {
      seq.tokens.push_back(Token{std::move(p), group, false});
    }
  }
  if (seq.tokens.empty()) throw Error("no tokens in keyword: \"" + std::string(body) + "\"");

  bool any_semantic = false;
  for (Token& t : seq.tokens) {
    t.is_form_word = form_words.contains(to_lower_ascii(t.surface));
    any_semantic = any_semantic || !t.is_form_word;
  }
  if (!any_semantic) {
    throw Error("keyword contains only form words: \"" + std::string(body) + "\"");
  }
  return seq;
}

}  // namespace wordship

#endif  // WORDSHIP_TOKENIZE_HPP
