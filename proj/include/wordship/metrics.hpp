#ifndef WORDSHIP_METRICS_HPP
#define WORDSHIP_METRICS_HPP

#include <algorithm>
#include <cmath>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "wordship/classify.hpp"
#include "wordship/context.hpp"
#include "wordship/corpus.hpp"
#include "wordship/errors.hpp"

namespace wordship {

/// Identifies one word category for the association statistics: FW, EW, AC,
/// or the semantic words of one specific degree of contextuality.
struct CategoryKey {
  WordKind kind = WordKind::Semantic;
  int degree = -1;  // valid only when kind == Semantic

  static CategoryKey semantic(int degree) { return {WordKind::Semantic, degree}; }
  static CategoryKey of(WordKind kind) { return {kind, -1}; }

  std::string label() const {
    return kind == WordKind::Semantic ? degree_label(degree) : kind_code(kind);
  }

  bool operator==(const CategoryKey&) const = default;

  // Table order: semantic degrees ascending, then AC, EW, FW.
  bool operator<(const CategoryKey& other) const {
    auto bucket = [](const CategoryKey& k) {
      switch (k.kind) {
        case WordKind::Semantic: return 0;
        case WordKind::Acronym: return 1;
        case WordKind::Eponym: return 2;
        case WordKind::FormWord: return 3;
      }
      return 4;
    };
    if (bucket(*this) != bucket(other)) return bucket(*this) < bucket(other);
    return degree < other.degree;
  }
};

/// Every word's resolved category. Semantic words without a resolved context
/// are listed in unresolved_words and excluded from degree-specific
/// categories (never defaulted to degree zero).
struct CategoryAssignment {
  std::map<std::string, CategoryKey> by_word;
  std::vector<std::string> unresolved_words;

  const CategoryKey* find(const std::string& word) const {
    auto it = by_word.find(word);
    return it != by_word.end() ? &it->second : nullptr;
  }
};

inline CategoryAssignment assign_categories(const Corpus& corpus, const Lexicons& lexicons,
                                            const std::map<std::string, WordContext>& contexts) {
  CategoryAssignment out;
  for (const Word& w : corpus.words) {
    WordCategory cat = classify_word(w.surface, lexicons, w.surface);
    if (cat.kind != WordKind::Semantic) {
      out.by_word.emplace(w.surface, CategoryKey::of(cat.kind));
      continue;
    }
    auto it = contexts.find(w.surface);
    if (it == contexts.end()) {
      out.unresolved_words.push_back(w.surface);
      continue;
    }
    out.by_word.emplace(w.surface, CategoryKey::semantic(it->second.degree));
  }
  return out;
}

struct AssociationOptions {
  // Whether two adjacent form words associate with each other under the
  // form-word rule. On by default; kept switchable for comparison runs.
  bool count_form_form_adjacency = true;
};

/// One keyword's contribution to a category's association count.
///
/// For semantic/eponymous/acronym categories the form words are transparent:
/// associations are counted over the sequence with form words deleted, each
/// category token contributing its number of immediate neighbors there. For
/// the FW category itself, adjacency is taken in the full sequence. An
/// adjacent pair with both endpoints in the category contributes two.
inline long associations(const TokenSeq& seq, const CategoryKey& category,
                         const CategoryAssignment& assignment,
                         const AssociationOptions& options = {}) {
  long total = 0;
  if (category.kind == WordKind::FormWord) {
    const auto& toks = seq.tokens;
    for (std::size_t i = 0; i < toks.size(); ++i) {
      if (!toks[i].is_form_word) continue;
      for (std::size_t j : {i - 1, i + 1}) {
        if (j >= toks.size()) continue;  // wraps for i==0 too
        if (toks[j].is_form_word && !options.count_form_form_adjacency) continue;
        ++total;
      }
    }
    return total;
  }
  std::vector<const Token*> reduced;
  for (const Token& t : seq.tokens) {
    if (!t.is_form_word) reduced.push_back(&t);
  }
  for (std::size_t i = 0; i < reduced.size(); ++i) {
    const CategoryKey* key = assignment.find(reduced[i]->surface);
    if (!key || !(*key == category)) continue;
    if (i > 0) ++total;
    if (i + 1 < reduced.size()) ++total;
  }
  return total;
}

/// The fundamental triple of one category: f distinct words, a associations,
/// k keywords containing at least one word of the category. All three are
/// distinct-keyword-level quantities, independent of article incidence.
struct CategoryStats {
  CategoryKey category;
  long f = 0;
  long a = 0;
  long k = 0;

  bool operator==(const CategoryStats&) const = default;
};

inline CategoryStats fundamental_triple(const Corpus& corpus,
                                        const CategoryAssignment& assignment,
                                        const CategoryKey& category,
                                        const AssociationOptions& options = {}) {
  CategoryStats stats;
  stats.category = category;
  for (const auto& [word, key] : assignment.by_word) {
    if (key == category) ++stats.f;
  }
  for (const Keyword& kw : corpus.keywords) {
    bool contains = false;
    for (const Token& t : kw.tokens.tokens) {
      const CategoryKey* key = assignment.find(t.surface);
      if (key && *key == category) {
        contains = true;
        break;
      }
    }
    if (contains) ++stats.k;
    stats.a += associations(kw.tokens, category, assignment, options);
  }
  return stats;
}

/// Stats for every category present in the corpus. The AC/EW/FW rows are
/// always included (zero rows render with blank ratios); semantic rows only
/// for degrees that actually occur.
inline std::vector<CategoryStats> all_category_stats(const Corpus& corpus,
                                                     const CategoryAssignment& assignment,
                                                     const AssociationOptions& options = {}) {
  std::set<CategoryKey> keys{CategoryKey::of(WordKind::Acronym), CategoryKey::of(WordKind::Eponym),
                             CategoryKey::of(WordKind::FormWord)};
  for (const auto& [word, key] : assignment.by_word) keys.insert(key);
  std::vector<CategoryStats> out;
  for (const CategoryKey& key : keys) {
    out.push_back(fundamental_triple(corpus, assignment, key, options));
  }
  return out;
}

/// The five derived parameters. A ratio is absent (not zero) when its
/// denominator is empty; the normalized index exists only for semantic words
/// of degree one or more.
struct ParameterSet {
  std::optional<double> wd_a;                  // a/f
  std::optional<double> wc_a;                  // a/k
  std::optional<double> kd_f;                  // k/f
  std::optional<double> wd_a_index;            // a/(f*k)
  std::optional<double> wd_a_index_normalized; // a/(f*k*degree)
};

inline ParameterSet parameters(const CategoryStats& stats, std::optional<int> degree) {
  ParameterSet p;
  const double f = static_cast<double>(stats.f);
  const double a = static_cast<double>(stats.a);
  const double k = static_cast<double>(stats.k);
  if (stats.f > 0) p.wd_a = a / f;
  if (stats.k > 0) p.wc_a = a / k;
  if (stats.f > 0) p.kd_f = k / f;
  if (stats.f > 0 && stats.k > 0) p.wd_a_index = a / (f * k);
  if (stats.f > 0 && stats.k > 0 && degree && *degree >= 1) {
    p.wd_a_index_normalized = a / (f * k * static_cast<double>(*degree));
  }
  return p;
}

// ---------------------------------------------------------------------------
// Wordship pattern
// ---------------------------------------------------------------------------

/// Distribution of keywords by wordship. `exact` keeps the full histogram;
/// the four buckets mirror the reporting convention (1, 2, 3, more than 3).
struct WordshipDistribution {
  long total = 0;
  long ones = 0, twos = 0, threes = 0, more = 0;
  std::map<int, long> exact;

  void add(int ws) {
    ++total;
    ++exact[ws];
    if (ws == 1) ++ones;
    else if (ws == 2) ++twos;
    else if (ws == 3) ++threes;
    else ++more;
  }
};

inline WordshipDistribution wordship_pattern(const Corpus& corpus) {
  WordshipDistribution dist;
  for (const Keyword& kw : corpus.keywords) dist.add(wordship(kw.tokens));
  return dist;
}

/// Year-level distributions over each year's distinct-keyword set. A keyword
/// spanning years counts once per year it appears in.
inline std::map<int, WordshipDistribution> wordship_pattern_by_year(const Corpus& corpus) {
  std::map<int, WordshipDistribution> by_year;
  for (const Keyword& kw : corpus.keywords) {
    int ws = wordship(kw.tokens);
    for (const auto& [year, count] : kw.yearly_incidence) {
      if (count > 0) by_year[year].add(ws);
    }
  }
  return by_year;
}

// ---------------------------------------------------------------------------
// Year-wise statistics
// ---------------------------------------------------------------------------

/// Article/keyword statistics for one year (or the whole corpus when the
/// overall flag is set). Ratios are recomputed from the integer fields at
/// render time.
struct YearlyKeywordStats {
  int year = 0;
  bool overall = false;
  long articles = 0;           // A
  long distinct_keywords = 0;  // B
  long total_frequency = 0;    // C: corpus-wide frequency summed over the year's keywords

  std::optional<double> keywords_per_article() const {
    if (articles == 0) return std::nullopt;
    return static_cast<double>(distinct_keywords) / static_cast<double>(articles);
  }
  std::optional<double> frequency_per_keyword() const {
    if (distinct_keywords == 0) return std::nullopt;
    return static_cast<double>(total_frequency) / static_cast<double>(distinct_keywords);
  }
};

inline std::vector<YearlyKeywordStats> yearly_keyword_stats(const Corpus& corpus) {
  std::map<int, YearlyKeywordStats> rows;
  for (const ArticleRef& a : corpus.articles) {
    rows[a.year].year = a.year;
    ++rows[a.year].articles;
  }
  for (const Keyword& kw : corpus.keywords) {
    for (const auto& [year, count] : kw.yearly_incidence) {
      if (count == 0) continue;
      rows[year].year = year;
      ++rows[year].distinct_keywords;
      rows[year].total_frequency += kw.total_frequency;
    }
  }
  std::vector<YearlyKeywordStats> out;
  for (auto& [year, row] : rows) out.push_back(row);
  return out;
}

inline YearlyKeywordStats overall_keyword_stats(const Corpus& corpus) {
  YearlyKeywordStats row;
  row.overall = true;
  row.articles = static_cast<long>(corpus.articles.size());
  row.distinct_keywords = static_cast<long>(corpus.keywords.size());
  for (const Keyword& kw : corpus.keywords) row.total_frequency += kw.total_frequency;
  return row;
}

/// Word statistics for one year: distinct constituent words and token slots
/// across that year's distinct keywords.
struct YearlyWordStats {
  int year = 0;
  bool overall = false;
  long keywords = 0;          // A
  long distinct_words = 0;    // C
  long word_occurrences = 0;  // token slots

  std::optional<double> keywords_per_word() const {
    if (distinct_words == 0) return std::nullopt;
    return static_cast<double>(keywords) / static_cast<double>(distinct_words);
  }
};

inline std::vector<YearlyWordStats> yearly_word_stats(const Corpus& corpus) {
  std::map<int, YearlyWordStats> rows;
  std::map<int, std::set<std::string>> words_by_year;
  for (const Keyword& kw : corpus.keywords) {
    for (const auto& [year, count] : kw.yearly_incidence) {
      if (count == 0) continue;
      rows[year].year = year;
      ++rows[year].keywords;
      rows[year].word_occurrences += static_cast<long>(kw.tokens.tokens.size());
      for (const Token& t : kw.tokens.tokens) words_by_year[year].insert(t.surface);
    }
  }
  std::vector<YearlyWordStats> out;
  for (auto& [year, row] : rows) {
    row.distinct_words = static_cast<long>(words_by_year[year].size());
    out.push_back(row);
  }
  return out;
}

inline YearlyWordStats overall_word_stats(const Corpus& corpus) {
  YearlyWordStats row;
  row.overall = true;
  row.keywords = static_cast<long>(corpus.keywords.size());
  row.distinct_words = static_cast<long>(corpus.words.size());
  for (const Word& w : corpus.words) row.word_occurrences += w.occurrences;
  return row;
}

// ---------------------------------------------------------------------------
// Discipline ranking
// ---------------------------------------------------------------------------

/// A subject's frequency is the number of words whose context union contains
/// it.
inline std::map<std::string, long> subject_frequencies(
    const std::map<std::string, WordContext>& contexts) {
  std::map<std::string, long> freq;
  for (const auto& [word, ctx] : contexts) {
    for (const std::string& subject : ctx.union_subjects) ++freq[subject];
  }
  return freq;
}

struct DisciplineStats {
  std::string discipline;
  long subject_count = 0;    // n: specific subjects with nonzero frequency
  long total_frequency = 0;  // F
  int rank = 0;              // dense, ties share a rank

  std::optional<double> frequency_per_subject() const {
    if (subject_count == 0) return std::nullopt;
    return static_cast<double>(total_frequency) / static_cast<double>(subject_count);
  }

  bool operator==(const DisciplineStats&) const = default;
};

/// Ranks broad disciplines by total subject frequency, descending. Ties get
/// the same dense rank and sort alphabetically within it.
inline std::vector<DisciplineStats> discipline_ranking(const std::map<std::string, long>& subject_freq,
                                                       const DisciplineMap& map,
                                                       std::vector<std::string>* unmapped = nullptr) {
  std::map<std::string, DisciplineStats> grouped;
  for (const auto& [subject, f] : subject_freq) {
    if (f <= 0) continue;
    std::string discipline = map.map_discipline(subject);
    if (discipline == DisciplineMap::kUnmapped && unmapped) unmapped->push_back(subject);
    DisciplineStats& d = grouped[discipline];
    d.discipline = discipline;
    ++d.subject_count;
    d.total_frequency += f;
  }
  std::vector<DisciplineStats> out;
  for (auto& [name, d] : grouped) out.push_back(d);
  std::sort(out.begin(), out.end(), [](const DisciplineStats& a, const DisciplineStats& b) {
    if (a.total_frequency != b.total_frequency) return a.total_frequency > b.total_frequency;
    return a.discipline < b.discipline;
  });
  int rank = 0;
  long previous = -1;
  for (DisciplineStats& d : out) {
    if (d.total_frequency != previous) {
      ++rank;
      previous = d.total_frequency;
    }
    d.rank = rank;
  }
  return out;
}

inline std::vector<DisciplineStats> discipline_ranking(
    const std::map<std::string, WordContext>& contexts, const DisciplineMap& map,
    std::vector<std::string>* unmapped = nullptr) {
  return discipline_ranking(subject_frequencies(contexts), map, unmapped);
}

// ---------------------------------------------------------------------------
// Trend diagnostics
// ---------------------------------------------------------------------------

/// Fractional (tie-averaged) ranks.
inline std::vector<double> fractional_ranks(const std::vector<double>& values) {
  std::vector<double> ranks(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    std::size_t below = 0, equal = 0;
    for (std::size_t j = 0; j < values.size(); ++j) {
      if (values[j] < values[i]) ++below;
      if (values[j] == values[i]) ++equal;
    }
    ranks[i] = static_cast<double>(below) + 1.0 + (static_cast<double>(equal) - 1.0) / 2.0;
  }
  return ranks;
}

/// Spearman rank correlation via Pearson on fractional ranks. Returns 0 when
/// either side is constant (no ordering information).
inline double spearman_rho(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size()) throw Error("spearman_rho: length mismatch");
  if (x.size() < 2) return 0.0;
  std::vector<double> rx = fractional_ranks(x);
  std::vector<double> ry = fractional_ranks(y);
  const double n = static_cast<double>(x.size());
  double sx = 0, sy = 0, sxy = 0, sxx = 0, syy = 0;
  for (std::size_t i = 0; i < rx.size(); ++i) {
    sx += rx[i];
    sy += ry[i];
    sxy += rx[i] * ry[i];
    sxx += rx[i] * rx[i];
    syy += ry[i] * ry[i];
  }
  double num = n * sxy - sx * sy;
  double den = std::sqrt((n * sxx - sx * sx) * (n * syy - sy * sy));
  if (den == 0.0) return 0.0;
  return num / den;
}

/// Descriptive diagnostics over the category statistics: how flat the
/// per-keyword association coefficient is, and whether word frequency falls
/// as the degree of contextuality grows.
struct TrendDiagnostics {
  bool sufficient = false;      // at least 3 semantic categories of degree >= 1
  long semantic_categories = 0; // with degree >= 1

  std::optional<double> wc_a_min, wc_a_max, wc_a_spread;
  std::string wc_a_min_category, wc_a_max_category;

  std::optional<double> spearman_degree_vs_f;
  std::optional<double> inverse_fit_constant;  // least squares c for f ~ c/degree
};

inline TrendDiagnostics trend_diagnostics(const std::vector<CategoryStats>& stats) {
  TrendDiagnostics diag;
  for (const CategoryStats& s : stats) {
    if (s.k <= 0) continue;
    double wc = static_cast<double>(s.a) / static_cast<double>(s.k);
    if (!diag.wc_a_min || wc < *diag.wc_a_min) {
      diag.wc_a_min = wc;
      diag.wc_a_min_category = s.category.label();
    }
    if (!diag.wc_a_max || wc > *diag.wc_a_max) {
      diag.wc_a_max = wc;
      diag.wc_a_max_category = s.category.label();
    }
  }
  if (diag.wc_a_min && diag.wc_a_max) diag.wc_a_spread = *diag.wc_a_max - *diag.wc_a_min;

  std::vector<double> degrees, freqs;
  for (const CategoryStats& s : stats) {
    if (s.category.kind != WordKind::Semantic || s.category.degree < 1) continue;
    degrees.push_back(static_cast<double>(s.category.degree));
    freqs.push_back(static_cast<double>(s.f));
  }
  diag.semantic_categories = static_cast<long>(degrees.size());
  if (degrees.size() < 3) return diag;  // marked insufficient
  diag.sufficient = true;
  diag.spearman_degree_vs_f = spearman_rho(degrees, freqs);
  double sxy = 0, sxx = 0;
  for (std::size_t i = 0; i < degrees.size(); ++i) {
    double x = 1.0 / degrees[i];
    sxy += x * freqs[i];
    sxx += x * x;
  }
  if (sxx > 0) diag.inverse_fit_constant = sxy / sxx;
  return diag;
}

}  // namespace wordship

#endif  // WORDSHIP_METRICS_HPP
