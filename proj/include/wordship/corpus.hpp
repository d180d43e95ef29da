#ifndef WORDSHIP_CORPUS_HPP
#define WORDSHIP_CORPUS_HPP

#include <algorithm>
#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "wordship/classify.hpp"
#include "wordship/errors.hpp"
#include "wordship/text.hpp"
#include "wordship/tokenize.hpp"

namespace wordship {

constexpr int kCorpusSchemaVersion = 1;

struct ArticleRef {
  std::string article_id;
  int year = 0;
  std::string volume;  // carried for reporting, unused by the math

  bool operator==(const ArticleRef&) const = default;
  auto operator<=>(const ArticleRef&) const = default;
};

struct KeywordRecord {
  ArticleRef article;
  std::string raw_text;
};

/// A distinct word of the corpus with its occurrence statistics over the
/// distinct-keyword set (not weighted by article incidence).
struct Word {
  std::string surface;
  long occurrences = 0;      // token slots across distinct keywords
  long keywords_formed = 0;  // distinct keywords containing the word

  bool operator==(const Word&) const = default;
};

/// A deduplicated keyword. yearly_incidence counts distinct articles per
/// year; a (keyword, article) pair contributes at most once.
struct Keyword {
  std::string canonical_text;
  TokenSeq tokens;
  std::map<int, long> yearly_incidence;
  long total_frequency = 0;

  bool operator==(const Keyword&) const = default;
};

struct Corpus {
  std::vector<ArticleRef> articles;  // sorted by article_id
  std::vector<Keyword> keywords;     // sorted by canonical_text
  std::vector<Word> words;           // sorted by surface
  NormalizationRules normalization;  // provenance: the rules used at ingest

  bool operator==(const Corpus&) const = default;

  const Keyword* find_keyword(std::string_view canonical) const {
    auto it = std::lower_bound(keywords.begin(), keywords.end(), canonical,
                               [](const Keyword& k, std::string_view c) { return k.canonical_text < c; });
    if (it != keywords.end() && it->canonical_text == canonical) return &*it;
    return nullptr;
  }

  const Word* find_word(std::string_view surface) const {
    auto it = std::lower_bound(words.begin(), words.end(), surface,
                               [](const Word& w, std::string_view s) { return w.surface < s; });
    if (it != words.end() && it->surface == surface) return &*it;
    return nullptr;
  }
};

struct IngestWarning {
  std::string article_id;
  std::string detail;

  std::string str() const {
    return article_id.empty() ? detail : "article '" + article_id + "': " + detail;
  }
};

struct IngestOptions {
  int year_min = 1900;
  int year_max = 2100;
};

struct IngestResult {
  Corpus corpus;
  std::vector<IngestWarning> warnings;
};

/// Accumulates records and produces a Corpus. Building is commutative: two
/// builders fed disjoint parts of a record stream and merged give the same
/// corpus as one builder fed everything, in any order.
class CorpusBuilder {
public:
  CorpusBuilder(NormalizationRules rules, std::set<std::string> form_words,
                IngestOptions options = {})
      : rules_(std::move(rules)), form_words_(std::move(form_words)), options_(options) {}

  void add(const KeywordRecord& record) {
    if (trim(record.article.article_id).empty()) {
      warnings_.push_back({"", "record rejected: missing article_id (keyword \"" +
                                   record.raw_text + "\")"});
      return;
    }
    if (record.article.year < options_.year_min || record.article.year > options_.year_max) {
      warnings_.push_back({record.article.article_id,
                           "record rejected: year " + std::to_string(record.article.year) +
                               " outside " + std::to_string(options_.year_min) + ".." +
                               std::to_string(options_.year_max)});
      return;
    }
    if (trim(record.raw_text).empty()) {
      warnings_.push_back({record.article.article_id, "record rejected: empty keyword"});
      return;
    }
    TokenSeq tokens;
    try {
      tokens = decompose(record.raw_text, rules_, form_words_);
    } catch (const Error& e) {
      warnings_.push_back({record.article.article_id,
                           std::string("record rejected: ") + e.what()});
      return;
    }
    article_meta_[record.article.article_id].insert({record.article.year, record.article.volume});
    Entry& entry = entries_[tokens.canonical()];
    // Deterministic choice among hyphenation variants: keep the one whose
    // rendered display string sorts first.
    if (entry.incidences.empty() || tokens.display() < entry.tokens.display()) {
      entry.tokens = tokens;
    }
    entry.incidences.insert({record.article.year, record.article.article_id});
  }

  void merge(const CorpusBuilder& other) {
    for (const auto& [id, meta] : other.article_meta_) {
      article_meta_[id].insert(meta.begin(), meta.end());
    }
    for (const auto& [canon, entry] : other.entries_) {
      Entry& mine = entries_[canon];
      if (mine.incidences.empty() || entry.tokens.display() < mine.tokens.display()) {
        mine.tokens = entry.tokens;
      }
      mine.incidences.insert(entry.incidences.begin(), entry.incidences.end());
    }
    warnings_.insert(warnings_.end(), other.warnings_.begin(), other.warnings_.end());
  }

  IngestResult finalize() && {
    // Articles whose records disagree on (year, volume) are rejected as a
    // whole; keeping "the first" would make the result order-dependent.
    std::set<std::string> conflicted;
    for (const auto& [id, meta] : article_meta_) {
      if (meta.size() > 1) {
        conflicted.insert(id);
        warnings_.push_back({id, "all records rejected: conflicting year/volume metadata"});
      }
    }

    Corpus corpus;
    corpus.normalization = rules_;
    for (const auto& [id, meta] : article_meta_) {
      if (conflicted.contains(id)) continue;
      corpus.articles.push_back({id, meta.begin()->first, meta.begin()->second});
    }

    std::map<std::string, std::pair<long, long>> word_stats;  // surface -> (slots, keywords)
    for (auto& [canon, entry] : entries_) {
      Keyword kw;
      kw.canonical_text = canon;
      kw.tokens = entry.tokens;
      for (const auto& [year, article_id] : entry.incidences) {
        if (conflicted.contains(article_id)) continue;
        ++kw.yearly_incidence[year];
        ++kw.total_frequency;
      }
      if (kw.total_frequency == 0) continue;  // every incidence was conflicted
      std::set<std::string> seen;
      for (const Token& t : kw.tokens.tokens) {
        ++word_stats[t.surface].first;
        if (seen.insert(t.surface).second) ++word_stats[t.surface].second;
      }
      corpus.keywords.push_back(std::move(kw));
    }
    for (auto& [surface, stats] : word_stats) {
      corpus.words.push_back({surface, stats.first, stats.second});
    }
    if (corpus.keywords.empty()) throw Error("empty corpus: no valid keyword records");
    std::sort(corpus.articles.begin(), corpus.articles.end());
    // entries_ / word_stats are std::map, so keywords and words are already
    // in canonical order.
    return {std::move(corpus), std::move(warnings_)};
  }

private:
  struct Entry {
    TokenSeq tokens;
    std::set<std::pair<int, std::string>> incidences;  // (year, article_id)
  };

  NormalizationRules rules_;
  std::set<std::string> form_words_;
  IngestOptions options_;
  std::map<std::string, std::set<std::pair<int, std::string>>> article_meta_;
  std::map<std::string, Entry> entries_;
  std::vector<IngestWarning> warnings_;
};

inline IngestResult ingest(const std::vector<KeywordRecord>& records,
                           const NormalizationRules& rules,
                           const std::set<std::string>& form_words,
                           IngestOptions options = {}) {
  CorpusBuilder builder(rules, form_words, options);
  for (const KeywordRecord& r : records) builder.add(r);
  return std::move(builder).finalize();
}

inline std::map<WordKind, long> category_census(const Corpus& corpus, const Lexicons& lexicons) {
  return category_census_over(corpus.words, lexicons);
}

// ---------------------------------------------------------------------------
// Input record files
// ---------------------------------------------------------------------------

namespace detail {

/// RFC-4180-style CSV: quoted fields may contain commas, newlines and
/// doubled quotes.
inline std::vector<std::vector<std::string>> parse_csv(std::string_view text) {
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> row;
  std::string field;
  bool quoted = false, row_started = false;
  std::size_t i = 0;
  auto end_field = [&] {
    row.push_back(std::move(field));
    field.clear();
  };
  auto end_row = [&] {
    end_field();
    rows.push_back(std::move(row));
    row.clear();
    row_started = false;
  };
  while (i < text.size()) {
    char c = text[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < text.size() && text[i + 1] == '"') {
          field.push_back('"');
          ++i;
        } else {
          quoted = false;
        }
      } else {
        field.push_back(c);
      }
    } else if (c == '"') {
      quoted = true;
      row_started = true;
    } else if (c == ',') {
      end_field();
      row_started = true;
    } else if (c == '\n' || c == '\r') {
      if (c == '\r' && i + 1 < text.size() && text[i + 1] == '\n') ++i;
      if (row_started || !field.empty()) end_row();
    } else {
      field.push_back(c);
      row_started = true;
    }
    ++i;
  }
  if (quoted) throw Error("CSV parse error: unterminated quoted field");
  if (row_started || !field.empty()) end_row();
  return rows;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline std::optional<int> parse_int(std::string_view s) {
  std::string_view body = trim(s);
  if (body.empty()) return std::nullopt;
  int sign = 1;
  std::size_t i = 0;
  if (body[0] == '-') {
    sign = -1;
    i = 1;
  }
  if (i == body.size()) return std::nullopt;
  long value = 0;
  for (; i < body.size(); ++i) {
    if (!is_ascii_digit(body[i])) return std::nullopt;
    value = value * 10 + (body[i] - '0');
    if (value > 1000000000L) return std::nullopt;
  }
  return static_cast<int>(sign * value);
}

}  // namespace detail

/// Reads `article_id,year,volume,keyword` rows. Column order is taken from
/// the header. Rows with an unparsable year become warnings, not errors.
inline std::vector<KeywordRecord> read_records_csv(const std::string& path,
                                                   std::vector<IngestWarning>& warnings) {
  auto rows = detail::parse_csv(detail::read_file(path));
  if (rows.empty()) throw Error("corpus file is empty: " + path);
  std::map<std::string, std::size_t> columns;
  for (std::size_t i = 0; i < rows[0].size(); ++i) {
    columns[to_lower_ascii(std::string(trim(rows[0][i])))] = i;
  }
  for (const char* required : {"article_id", "year", "keyword"}) {
    if (!columns.contains(required)) {
      throw Error("corpus file " + path + " is missing required column '" + required + "'");
    }
  }
  bool has_volume = columns.contains("volume");
  std::vector<KeywordRecord> records;
  for (std::size_t r = 1; r < rows.size(); ++r) {
    const auto& row = rows[r];
    auto cell = [&](const char* name) -> std::string {
      std::size_t idx = columns.at(name);
      return idx < row.size() ? row[idx] : std::string();
    };
    auto year = detail::parse_int(cell("year"));
    if (!year) {
      warnings.push_back({std::string(trim(cell("article_id"))),
                          "row " + std::to_string(r + 1) + " rejected: unparsable year \"" +
                              cell("year") + "\""});
      continue;
    }
    records.push_back({{std::string(trim(cell("article_id"))), *year,
                        has_volume ? std::string(trim(cell("volume"))) : std::string()},
                       cell("keyword")});
  }
  return records;
}

/// Newline-delimited JSON objects with the same field names as the CSV.
inline std::vector<KeywordRecord> read_records_jsonl(const std::string& path,
                                                     std::vector<IngestWarning>& warnings) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open file: " + path);
  std::vector<KeywordRecord> records;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (trim(line).empty()) continue;
    nlohmann::json obj;
    try {
      obj = nlohmann::json::parse(line);
    } catch (const nlohmann::json::parse_error& e) {
      warnings.push_back({"", "line " + std::to_string(lineno) + " rejected: " + e.what()});
      continue;
    }
    if (!obj.is_object() || !obj.contains("article_id") || !obj.contains("year") ||
        !obj.contains("keyword")) {
      warnings.push_back({"", "line " + std::to_string(lineno) +
                                  " rejected: need article_id, year, keyword fields"});
      continue;
    }
    KeywordRecord rec;
    rec.article.article_id = obj["article_id"].is_string()
                                 ? obj["article_id"].get<std::string>()
                                 : obj["article_id"].dump();
    if (obj["year"].is_number_integer()) {
      rec.article.year = obj["year"].get<int>();
    } else if (auto y = detail::parse_int(obj["year"].is_string() ? obj["year"].get<std::string>()
                                                                  : obj["year"].dump())) {
      rec.article.year = *y;
    } else {
      warnings.push_back({rec.article.article_id,
                          "line " + std::to_string(lineno) + " rejected: unparsable year"});
      continue;
    }
    if (obj.contains("volume") && obj["volume"].is_string()) {
      rec.article.volume = obj["volume"].get<std::string>();
    }
    rec.raw_text = obj["keyword"].is_string() ? obj["keyword"].get<std::string>()
                                              : obj["keyword"].dump();
    records.push_back(std::move(rec));
  }
  return records;
}

// ---------------------------------------------------------------------------
// Persistence
// ---------------------------------------------------------------------------

inline nlohmann::json corpus_to_json(const Corpus& corpus) {
  nlohmann::json doc;
  doc["schema_version"] = kCorpusSchemaVersion;
  doc["normalization"] = {{"lowercase", corpus.normalization.lowercase},
                          {"singularize", corpus.normalization.singularize},
                          {"hyphen_splits", corpus.normalization.hyphen_splits},
                          {"strip_characters", corpus.normalization.strip_characters},
                          {"singular_exceptions", corpus.normalization.singular_exceptions}};
  auto& articles = doc["articles"] = nlohmann::json::array();
  for (const ArticleRef& a : corpus.articles) {
    articles.push_back({{"id", a.article_id}, {"year", a.year}, {"volume", a.volume}});
  }
  auto& keywords = doc["keywords"] = nlohmann::json::array();
  for (const Keyword& k : corpus.keywords) {
    nlohmann::json kw;
    auto& tokens = kw["tokens"] = nlohmann::json::array();
    for (const Token& t : k.tokens.tokens) {
      nlohmann::json tok{{"surface", t.surface}, {"form", t.is_form_word}};
      if (t.hyphen_group) tok["group"] = *t.hyphen_group;
      tokens.push_back(std::move(tok));
    }
    auto& incidence = kw["incidence"] = nlohmann::json::object();
    for (const auto& [year, count] : k.yearly_incidence) {
      incidence[std::to_string(year)] = count;
    }
    keywords.push_back(std::move(kw));
  }
  return doc;
}

inline Corpus corpus_from_json(const nlohmann::json& doc) {
  if (!doc.is_object() || !doc.contains("schema_version")) {
    throw Error("corpus document has no schema_version");
  }
  int version = doc["schema_version"].get<int>();
  if (version != kCorpusSchemaVersion) {
    throw Error("unsupported corpus schema version " + std::to_string(version) + " (expected " +
                std::to_string(kCorpusSchemaVersion) + ")");
  }
  Corpus corpus;
  const auto& norm = doc.at("normalization");
  corpus.normalization.lowercase = norm.at("lowercase").get<bool>();
  corpus.normalization.singularize = norm.at("singularize").get<bool>();
  corpus.normalization.hyphen_splits = norm.at("hyphen_splits").get<bool>();
  corpus.normalization.strip_characters = norm.at("strip_characters").get<std::string>();
  corpus.normalization.singular_exceptions =
      norm.at("singular_exceptions").get<std::map<std::string, std::string>>();
  for (const auto& a : doc.at("articles")) {
    corpus.articles.push_back({a.at("id").get<std::string>(), a.at("year").get<int>(),
                               a.value("volume", std::string())});
  }
  std::map<std::string, std::pair<long, long>> word_stats;
  for (const auto& kw : doc.at("keywords")) {
    Keyword k;
    for (const auto& tok : kw.at("tokens")) {
      Token t;
      t.surface = tok.at("surface").get<std::string>();
      t.is_form_word = tok.at("form").get<bool>();
      if (tok.contains("group")) t.hyphen_group = tok["group"].get<std::size_t>();
      k.tokens.tokens.push_back(std::move(t));
    }
    k.canonical_text = k.tokens.canonical();
    for (const auto& [year, count] : kw.at("incidence").items()) {
      auto y = detail::parse_int(year);
      if (!y) throw Error("corpus document has non-numeric incidence year: " + year);
      k.yearly_incidence[*y] = count.get<long>();
      k.total_frequency += count.get<long>();
    }
    std::set<std::string> seen;
    for (const Token& t : k.tokens.tokens) {
      ++word_stats[t.surface].first;
      if (seen.insert(t.surface).second) ++word_stats[t.surface].second;
    }
    corpus.keywords.push_back(std::move(k));
  }
  for (auto& [surface, stats] : word_stats) {
    corpus.words.push_back({surface, stats.first, stats.second});
  }
  std::sort(corpus.articles.begin(), corpus.articles.end());
  std::sort(corpus.keywords.begin(), corpus.keywords.end(),
            [](const Keyword& a, const Keyword& b) { return a.canonical_text < b.canonical_text; });
  return corpus;
}

inline void save_corpus(const Corpus& corpus, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write corpus file: " + path);
  out << corpus_to_json(corpus).dump(2) << '\n';
  if (!out) throw Error("write failed: " + path);
}

inline Corpus load_corpus(const std::string& path) {
  std::string text = detail::read_file(path);
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error("corpus file " + path + " is not valid JSON at byte " + std::to_string(e.byte) +
                ": " + e.what());
  }
  return corpus_from_json(doc);
}

}  // namespace wordship

#endif  // WORDSHIP_CORPUS_HPP
