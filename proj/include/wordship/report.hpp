#ifndef WORDSHIP_REPORT_HPP
#define WORDSHIP_REPORT_HPP

#include <unistd.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include <json.hpp>

#include "wordship/context.hpp"
#include "wordship/corpus.hpp"
#include "wordship/metrics.hpp"

namespace wordship {

namespace detail {
// Scales and rounds half away from zero. The nudge compensates for decimal
// values that sit a few ulp below an exact .5 tie after binary storage
// (e.g. 2.525 * 100 = 252.499999...).
inline long long scale_half_up(double value, int places) {
  double scale = std::pow(10.0, places);
  double scaled = value * scale;
  double nudge = 1e-9 + std::fabs(scaled) * 1e-12;
  return static_cast<long long>(scaled >= 0 ? std::floor(scaled + 0.5 + nudge)
                                            : std::ceil(scaled - 0.5 - nudge));
}
}  // namespace detail

// Half-away-from-zero rounding, applied only at render time; internal values
// stay full precision.
inline double round_half_up(double value, int places) {
  return static_cast<double>(detail::scale_half_up(value, places)) / std::pow(10.0, places);
}

inline std::string format_fixed(double value, int places) {
  long long scaled = detail::scale_half_up(value, places);
  bool negative = scaled < 0;
  unsigned long long mag = negative ? -static_cast<unsigned long long>(scaled) : scaled;
  unsigned long long unit = 1;
  for (int i = 0; i < places; ++i) unit *= 10;
  std::string out = negative ? "-" : "";
  out += std::to_string(mag / unit);
  if (places > 0) {
    std::string frac = std::to_string(mag % unit);
    out += "." + std::string(places - frac.size(), '0') + frac;
  }
  return out;
}

inline std::string format_opt(const std::optional<double>& value, int places) {
  return value ? format_fixed(*value, places) : std::string();
}

enum class ReportFormat { Markdown, CsvDirectory, Json };

/// Everything the renderers need. Holds only integer statistics and the
/// fundamental triples; every ratio cell is derived at render time so there
/// is a single source of computation.
struct ReportBundle {
  std::vector<YearlyKeywordStats> keyword_rows;
  YearlyKeywordStats keyword_overall;
  std::vector<std::pair<int, WordshipDistribution>> wordship_rows;
  WordshipDistribution wordship_overall;
  std::vector<YearlyWordStats> word_rows;
  YearlyWordStats word_overall;
  std::vector<std::tuple<std::string, std::string, long>> subjects;  // subject, discipline, f
  std::vector<DisciplineStats> disciplines;
  std::vector<CategoryStats> parameter_rows;  // table order
  TrendDiagnostics diagnostics;

  struct {
    std::vector<std::string> rejected_records;
    std::vector<std::string> unresolved_words;
    std::vector<std::string> unmapped_subjects;
  } warnings;

  std::map<int, std::string> volumes_by_year;
  std::string volumes_overall;

  std::optional<int> degree_of(const CategoryKey& key) const {
    if (key.kind != WordKind::Semantic) return std::nullopt;
    return key.degree;
  }
};

inline ReportBundle build_bundle(const Corpus& corpus, const Lexicons& lexicons,
                                 const std::map<std::string, WordContext>& contexts,
                                 const DisciplineMap& discipline_map,
                                 const std::vector<IngestWarning>& ingest_warnings,
                                 const std::vector<std::string>& unresolved_words,
                                 const AssociationOptions& assoc_options = {}) {
  ReportBundle bundle;
  bundle.keyword_rows = yearly_keyword_stats(corpus);
  bundle.keyword_overall = overall_keyword_stats(corpus);
  for (const auto& [year, dist] : wordship_pattern_by_year(corpus)) {
    bundle.wordship_rows.emplace_back(year, dist);
  }
  bundle.wordship_overall = wordship_pattern(corpus);
  bundle.word_rows = yearly_word_stats(corpus);
  bundle.word_overall = overall_word_stats(corpus);

  CategoryAssignment assignment = assign_categories(corpus, lexicons, contexts);
  bundle.parameter_rows = all_category_stats(corpus, assignment, assoc_options);
  bundle.diagnostics = trend_diagnostics(bundle.parameter_rows);

  // Self-checks before anything is rendered: category frequencies must
  // partition the resolved words, and no k may exceed the keyword count.
  long total_f = 0;
  for (const CategoryStats& s : bundle.parameter_rows) {
    total_f += s.f;
    if (s.k > static_cast<long>(corpus.keywords.size())) {
      throw InvariantViolation("category " + s.category.label() + " counts " +
                               std::to_string(s.k) + " keywords, corpus has " +
                               std::to_string(corpus.keywords.size()));
    }
  }
  if (total_f != static_cast<long>(assignment.by_word.size())) {
    throw InvariantViolation("category frequencies sum to " + std::to_string(total_f) +
                             " but " + std::to_string(assignment.by_word.size()) +
                             " words are categorized");
  }

  std::map<std::string, long> freqs = subject_frequencies(contexts);
  std::vector<std::string> unmapped;
  bundle.disciplines = discipline_ranking(freqs, discipline_map, &unmapped);
  for (const auto& [subject, f] : freqs) {
    bundle.subjects.emplace_back(subject, discipline_map.map_discipline(subject), f);
  }

  for (const IngestWarning& w : ingest_warnings) bundle.warnings.rejected_records.push_back(w.str());
  bundle.warnings.unresolved_words = unresolved_words;
  for (const std::string& w : assignment.unresolved_words) {
    // assign_categories re-derives these; keep the union, deduplicated.
    if (std::find(bundle.warnings.unresolved_words.begin(), bundle.warnings.unresolved_words.end(),
                  w) == bundle.warnings.unresolved_words.end()) {
      bundle.warnings.unresolved_words.push_back(w);
    }
  }
  std::sort(bundle.warnings.unresolved_words.begin(), bundle.warnings.unresolved_words.end());
  std::set<std::string> unmapped_set(unmapped.begin(), unmapped.end());
  bundle.warnings.unmapped_subjects.assign(unmapped_set.begin(), unmapped_set.end());

  std::map<int, std::set<std::string>> vols;
  std::set<std::string> all_vols;
  for (const ArticleRef& a : corpus.articles) {
    if (!a.volume.empty()) {
      vols[a.year].insert(a.volume);
      all_vols.insert(a.volume);
    }
  }
  for (const auto& [year, vs] : vols) bundle.volumes_by_year[year] = join(vs, ";");
  bundle.volumes_overall = join(all_vols, ";");
  return bundle;
}

// ---------------------------------------------------------------------------
// Rendering
// ---------------------------------------------------------------------------

namespace detail {

inline std::string md_row(const std::vector<std::string>& cells) {
  std::string out = "|";
  for (const std::string& c : cells) out += " " + c + " |";
  out += "\n";
  return out;
}

inline std::string md_table(const std::vector<std::string>& header,
                            const std::vector<std::vector<std::string>>& rows) {
  std::string out = md_row(header);
  std::vector<std::string> rule(header.size(), "---");
  out += md_row(rule);
  for (const auto& r : rows) out += md_row(r);
  return out;
}

inline std::string csv_field(const std::string& value) {
  if (value.find_first_of(",\"\n") == std::string::npos) return value;
  std::string out = "\"";
  for (char c : value) {
    if (c == '"') out += "\"\"";
    else out.push_back(c);
  }
  out += "\"";
  return out;
}

inline std::string csv_line(const std::vector<std::string>& cells) {
  std::string out;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) out.push_back(',');
    out += csv_field(cells[i]);
  }
  out.push_back('\n');
  return out;
}

inline std::string bucket_cell(long count, long total) {
  if (total == 0) return std::to_string(count);
  double pct = 100.0 * static_cast<double>(count) / static_cast<double>(total);
  return std::to_string(count) + " (" + format_fixed(pct, 0) + "%)";
}

}  // namespace detail

inline std::optional<double> wordship_bucket_pct(long count, long total) {
  if (total == 0) return std::nullopt;
  return 100.0 * static_cast<double>(count) / static_cast<double>(total);
}

inline long discipline_total_frequency(const ReportBundle& bundle) {
  long sum = 0;
  for (const DisciplineStats& d : bundle.disciplines) sum += d.total_frequency;
  return sum;
}

inline std::optional<double> discipline_percentage(const DisciplineStats& d, long grand_total) {
  if (grand_total == 0) return std::nullopt;
  return 100.0 * static_cast<double>(d.total_frequency) / static_cast<double>(grand_total);
}

inline std::string render_markdown(const ReportBundle& bundle) {
  std::string out = "# Wordship analysis report\n";

  auto volume_for = [&](int year) {
    auto it = bundle.volumes_by_year.find(year);
    return it != bundle.volumes_by_year.end() ? it->second : std::string();
  };

  out += "\n## Keyword statistics by year\n\n";
  {
    std::vector<std::vector<std::string>> rows;
    auto render_row = [&](const YearlyKeywordStats& s) {
      rows.push_back({s.overall ? "overall" : std::to_string(s.year),
                      s.overall ? bundle.volumes_overall : volume_for(s.year),
                      std::to_string(s.articles), std::to_string(s.distinct_keywords),
                      format_opt(s.keywords_per_article(), 1), std::to_string(s.total_frequency),
                      format_opt(s.frequency_per_keyword(), 1)});
    };
    for (const auto& s : bundle.keyword_rows) render_row(s);
    render_row(bundle.keyword_overall);
    out += detail::md_table({"Year", "Vol. no.", "Articles (A)", "Distinct keywords (B)",
                             "Keywords per article (B/A)", "Total frequency (C)",
                             "Frequency per keyword (C/B)"},
                            rows);
  }

  out += "\n## Wordship pattern\n\n";
  {
    std::map<int, long> articles_by_year;
    for (const auto& s : bundle.keyword_rows) articles_by_year[s.year] = s.articles;
    std::vector<std::vector<std::string>> rows;
    auto render_row = [&](const std::string& year_label, const std::string& volume, long articles,
                          const WordshipDistribution& d) {
      rows.push_back({year_label, volume, std::to_string(articles), std::to_string(d.total),
                      detail::bucket_cell(d.ones, d.total), detail::bucket_cell(d.twos, d.total),
                      detail::bucket_cell(d.threes, d.total), detail::bucket_cell(d.more, d.total)});
    };
    for (const auto& [year, dist] : bundle.wordship_rows) {
      render_row(std::to_string(year), volume_for(year), articles_by_year[year], dist);
    }
    render_row("overall", bundle.volumes_overall, bundle.keyword_overall.articles,
               bundle.wordship_overall);
    out += detail::md_table({"Year", "Vol. no.", "Articles", "Distinct keywords (A)", "Single word",
                             "Two words", "Three words", "More than three words"},
                            rows);
  }

  out += "\n## Word statistics by year\n\n";
  {
    std::vector<std::vector<std::string>> rows;
    auto render_row = [&](const YearlyWordStats& s) {
      rows.push_back({s.overall ? "overall" : std::to_string(s.year),
                      s.overall ? bundle.volumes_overall : volume_for(s.year),
                      std::to_string(s.keywords), std::to_string(s.distinct_words),
                      std::to_string(s.word_occurrences), format_opt(s.keywords_per_word(), 2)});
    };
    for (const auto& s : bundle.word_rows) render_row(s);
    render_row(bundle.word_overall);
    out += detail::md_table({"Year", "Vol. no.", "Keywords (A)", "Distinct words (C)",
                             "Word frequency", "Keywords per word (A/C)"},
                            rows);
  }

  out += "\n## Subjects by broad discipline\n\n";
  {
    std::map<std::string, std::vector<std::pair<std::string, long>>> grouped;
    for (const auto& [subject, discipline, f] : bundle.subjects) {
      grouped[discipline].emplace_back(subject, f);
    }
    std::vector<std::vector<std::string>> rows;
    for (const auto& [discipline, subs] : grouped) {
      long total = 0;
      std::vector<std::string> parts;
      for (const auto& [subject, f] : subs) {
        parts.push_back(subject + " (" + std::to_string(f) + ")");
        total += f;
      }
      double per = static_cast<double>(total) / static_cast<double>(subs.size());
      rows.push_back({discipline + " (" + std::to_string(subs.size()) + ")", join(parts, ", "),
                      std::to_string(total), format_fixed(per, 1)});
    }
    out += detail::md_table({"Broad discipline (n)", "Specific subjects (f)", "F", "F/n"}, rows);
  }

  out += "\n## Discipline ranking\n\n";
  {
    long grand = discipline_total_frequency(bundle);
    std::vector<std::vector<std::string>> rows;
    for (const DisciplineStats& d : bundle.disciplines) {
      rows.push_back({std::to_string(d.rank), d.discipline, std::to_string(d.subject_count),
                      std::to_string(d.total_frequency), format_opt(d.frequency_per_subject(), 1),
                      format_opt(discipline_percentage(d, grand), 2)});
    }
    out += detail::md_table({"Rank", "Broad discipline", "n", "F", "F/n", "Percentage"}, rows);
  }

  out += "\n## Word association parameters\n\n";
  {
    std::vector<std::vector<std::string>> rows;
    for (const CategoryStats& s : bundle.parameter_rows) {
      ParameterSet p = parameters(s, bundle.degree_of(s.category));
      rows.push_back({s.category.label(), std::to_string(s.f), std::to_string(s.a),
                      std::to_string(s.k), format_opt(p.wd_a, 2), format_opt(p.wc_a, 2),
                      format_opt(p.kd_f, 2), format_opt(p.wd_a_index, 3),
                      format_opt(p.wd_a_index_normalized, 3)});
    }
    out += detail::md_table(
        {"Category", "f", "a", "k", "WD(A)", "WC(A)", "KD(F)", "WD(A)I", "WD(A)I-N"}, rows);
  }

  out += "\n## Diagnostics\n\n";
  {
    const TrendDiagnostics& d = bundle.diagnostics;
    if (d.wc_a_min) {
      out += "- WC(A) range: " + format_fixed(*d.wc_a_min, 2) + " (" + d.wc_a_min_category +
             ") to " + format_fixed(*d.wc_a_max, 2) + " (" + d.wc_a_max_category + "), spread " +
             format_fixed(*d.wc_a_spread, 2) + "\n";
    }
    if (d.sufficient) {
      out += "- Spearman rank correlation, degree vs f: " +
             format_fixed(*d.spearman_degree_vs_f, 4) + "\n";
      if (d.inverse_fit_constant) {
        out += "- Least-squares fit f ~ c/degree: c = " + format_fixed(*d.inverse_fit_constant, 2) +
               "\n";
      }
    } else {
      out += "- Trend diagnostics: insufficient data (" + std::to_string(d.semantic_categories) +
             " semantic categories with degree >= 1; need 3)\n";
    }
  }

  out += "\n## Warnings\n\n";
  {
    bool any = false;
    for (const auto& [label, list] :
         std::vector<std::pair<std::string, const std::vector<std::string>*>>{
             {"rejected record", &bundle.warnings.rejected_records},
             {"unresolved word", &bundle.warnings.unresolved_words},
             {"unmapped subject", &bundle.warnings.unmapped_subjects}}) {
      for (const std::string& w : *list) {
        out += "- " + label + ": " + w + "\n";
        any = true;
      }
    }
    if (!any) out += "(none)\n";
  }
  return out;
}

inline nlohmann::json render_json(const ReportBundle& bundle) {
  nlohmann::json doc;
  auto opt = [](const std::optional<double>& v) {
    return v ? nlohmann::json(*v) : nlohmann::json(nullptr);
  };

  auto volume_for = [&](int year) {
    auto it = bundle.volumes_by_year.find(year);
    return it != bundle.volumes_by_year.end() ? it->second : std::string();
  };

  auto keyword_row = [&](const YearlyKeywordStats& s) {
    return nlohmann::json{{"year", s.overall ? nlohmann::json(nullptr) : nlohmann::json(s.year)},
                          {"volumes", s.overall ? bundle.volumes_overall : volume_for(s.year)},
                          {"articles", s.articles},
                          {"distinct_keywords", s.distinct_keywords},
                          {"keywords_per_article", opt(s.keywords_per_article())},
                          {"total_frequency", s.total_frequency},
                          {"frequency_per_keyword", opt(s.frequency_per_keyword())}};
  };
  auto& kw = doc["tables"]["keyword_stats"];
  kw["rows"] = nlohmann::json::array();
  for (const auto& s : bundle.keyword_rows) kw["rows"].push_back(keyword_row(s));
  kw["overall"] = keyword_row(bundle.keyword_overall);

  auto wordship_row = [&](std::optional<int> year, const WordshipDistribution& d) {
    nlohmann::json row{{"year", year ? nlohmann::json(*year) : nlohmann::json(nullptr)},
                       {"distinct_keywords", d.total},
                       {"single_word", d.ones},
                       {"two_words", d.twos},
                       {"three_words", d.threes},
                       {"more_than_three_words", d.more},
                       {"single_word_pct", opt(wordship_bucket_pct(d.ones, d.total))},
                       {"two_words_pct", opt(wordship_bucket_pct(d.twos, d.total))},
                       {"three_words_pct", opt(wordship_bucket_pct(d.threes, d.total))},
                       {"more_than_three_words_pct", opt(wordship_bucket_pct(d.more, d.total))}};
    nlohmann::json exact = nlohmann::json::object();
    for (const auto& [ws, count] : d.exact) exact[std::to_string(ws)] = count;
    row["exact"] = exact;
    return row;
  };
  auto& ws = doc["tables"]["wordship"];
  ws["rows"] = nlohmann::json::array();
  for (const auto& [year, dist] : bundle.wordship_rows) ws["rows"].push_back(wordship_row(year, dist));
  ws["overall"] = wordship_row(std::nullopt, bundle.wordship_overall);

  auto word_row = [&](const YearlyWordStats& s) {
    return nlohmann::json{{"year", s.overall ? nlohmann::json(nullptr) : nlohmann::json(s.year)},
                          {"keywords", s.keywords},
                          {"distinct_words", s.distinct_words},
                          {"word_occurrences", s.word_occurrences},
                          {"keywords_per_word", opt(s.keywords_per_word())}};
  };
  auto& wt = doc["tables"]["word_stats"];
  wt["rows"] = nlohmann::json::array();
  for (const auto& s : bundle.word_rows) wt["rows"].push_back(word_row(s));
  wt["overall"] = word_row(bundle.word_overall);

  auto& subjects = doc["tables"]["subjects"] = nlohmann::json::array();
  for (const auto& [subject, discipline, f] : bundle.subjects) {
    subjects.push_back({{"subject", subject}, {"discipline", discipline}, {"frequency", f}});
  }

  long grand = discipline_total_frequency(bundle);
  auto& disciplines = doc["tables"]["disciplines"] = nlohmann::json::array();
  for (const DisciplineStats& d : bundle.disciplines) {
    disciplines.push_back({{"rank", d.rank},
                           {"discipline", d.discipline},
                           {"subject_count", d.subject_count},
                           {"total_frequency", d.total_frequency},
                           {"frequency_per_subject", opt(d.frequency_per_subject())},
                           {"percentage", opt(discipline_percentage(d, grand))}});
  }

  auto& params = doc["tables"]["parameters"] = nlohmann::json::array();
  for (const CategoryStats& s : bundle.parameter_rows) {
    ParameterSet p = parameters(s, bundle.degree_of(s.category));
    params.push_back({{"category", s.category.label()},
                      {"degree", s.category.kind == WordKind::Semantic
                                     ? nlohmann::json(s.category.degree)
                                     : nlohmann::json(nullptr)},
                      {"f", s.f},
                      {"a", s.a},
                      {"k", s.k},
                      {"wd_a", opt(p.wd_a)},
                      {"wc_a", opt(p.wc_a)},
                      {"kd_f", opt(p.kd_f)},
                      {"wd_a_index", opt(p.wd_a_index)},
                      {"wd_a_index_normalized", opt(p.wd_a_index_normalized)}});
  }

  auto& series1 = doc["series"]["fig1_categories"] = nlohmann::json::array();
  for (const CategoryStats& s : bundle.parameter_rows) {
    series1.push_back({{"category", s.category.label()}, {"f", s.f}, {"a", s.a}, {"k", s.k}});
  }
  auto& series2 = doc["series"]["fig2_dc_vs_f"] = nlohmann::json::array();
  for (const CategoryStats& s : bundle.parameter_rows) {
    if (s.category.kind == WordKind::Semantic) {
      series2.push_back({{"dc", s.category.degree}, {"f", s.f}});
    }
  }

  const TrendDiagnostics& d = bundle.diagnostics;
  doc["diagnostics"] = {{"sufficient", d.sufficient},
                        {"semantic_categories", d.semantic_categories},
                        {"wc_a_min", opt(d.wc_a_min)},
                        {"wc_a_max", opt(d.wc_a_max)},
                        {"wc_a_spread", opt(d.wc_a_spread)},
                        {"wc_a_min_category", d.wc_a_min_category},
                        {"wc_a_max_category", d.wc_a_max_category},
                        {"spearman_degree_vs_f", opt(d.spearman_degree_vs_f)},
                        {"inverse_fit_constant", opt(d.inverse_fit_constant)}};

  doc["warnings"] = {{"rejected_records", bundle.warnings.rejected_records},
                     {"unresolved_words", bundle.warnings.unresolved_words},
                     {"unmapped_subjects", bundle.warnings.unmapped_subjects}};
  return doc;
}

/// CSV rendering: one file per table/series, snake_case headers, cells at
/// the same printed precision as the markdown tables.
inline std::map<std::string, std::string> render_csv_files(const ReportBundle& bundle) {
  using detail::csv_line;
  std::map<std::string, std::string> files;

  auto volume_for = [&](int year) {
    auto it = bundle.volumes_by_year.find(year);
    return it != bundle.volumes_by_year.end() ? it->second : std::string();
  };

  {
    std::string csv = csv_line({"year", "volumes", "articles", "distinct_keywords",
                                "keywords_per_article", "total_frequency", "frequency_per_keyword"});
    auto row = [&](const YearlyKeywordStats& s) {
      csv += csv_line({s.overall ? "overall" : std::to_string(s.year),
                       s.overall ? bundle.volumes_overall : volume_for(s.year),
                       std::to_string(s.articles), std::to_string(s.distinct_keywords),
                       format_opt(s.keywords_per_article(), 1), std::to_string(s.total_frequency),
                       format_opt(s.frequency_per_keyword(), 1)});
    };
    for (const auto& s : bundle.keyword_rows) row(s);
    row(bundle.keyword_overall);
    files["tables/keyword_stats.csv"] = csv;
  }
  {
    std::string csv = csv_line({"year", "distinct_keywords", "single_word", "two_words",
                                "three_words", "more_than_three_words", "single_word_pct",
                                "two_words_pct", "three_words_pct", "more_than_three_words_pct"});
    auto row = [&](const std::string& label, const WordshipDistribution& d) {
      csv += csv_line({label, std::to_string(d.total), std::to_string(d.ones),
                       std::to_string(d.twos), std::to_string(d.threes), std::to_string(d.more),
                       format_opt(wordship_bucket_pct(d.ones, d.total), 0),
                       format_opt(wordship_bucket_pct(d.twos, d.total), 0),
                       format_opt(wordship_bucket_pct(d.threes, d.total), 0),
                       format_opt(wordship_bucket_pct(d.more, d.total), 0)});
    };
    for (const auto& [year, dist] : bundle.wordship_rows) row(std::to_string(year), dist);
    row("overall", bundle.wordship_overall);
    files["tables/wordship.csv"] = csv;
  }
  {
    std::string csv = csv_line(
        {"year", "keywords", "distinct_words", "word_occurrences", "keywords_per_word"});
    auto row = [&](const YearlyWordStats& s) {
      csv += csv_line({s.overall ? "overall" : std::to_string(s.year), std::to_string(s.keywords),
                       std::to_string(s.distinct_words), std::to_string(s.word_occurrences),
                       format_opt(s.keywords_per_word(), 2)});
    };
    for (const auto& s : bundle.word_rows) row(s);
    row(bundle.word_overall);
    files["tables/word_stats.csv"] = csv;
  }
  {
    std::string csv = csv_line({"subject", "discipline", "frequency"});
    for (const auto& [subject, discipline, f] : bundle.subjects) {
      csv += csv_line({subject, discipline, std::to_string(f)});
    }
    files["tables/subjects.csv"] = csv;
  }
  {
    long grand = discipline_total_frequency(bundle);
    std::string csv = csv_line(
        {"rank", "discipline", "subject_count", "total_frequency", "frequency_per_subject",
         "percentage"});
    for (const DisciplineStats& d : bundle.disciplines) {
      csv += csv_line({std::to_string(d.rank), d.discipline, std::to_string(d.subject_count),
                       std::to_string(d.total_frequency),
                       format_opt(d.frequency_per_subject(), 1),
                       format_opt(discipline_percentage(d, grand), 2)});
    }
    files["tables/disciplines.csv"] = csv;
  }
  {
    std::string csv = csv_line({"category", "f", "a", "k", "wd_a", "wc_a", "kd_f", "wd_a_index",
                                "wd_a_index_normalized"});
    for (const CategoryStats& s : bundle.parameter_rows) {
      ParameterSet p = parameters(s, bundle.degree_of(s.category));
      csv += csv_line({s.category.label(), std::to_string(s.f), std::to_string(s.a),
                       std::to_string(s.k), format_opt(p.wd_a, 2), format_opt(p.wc_a, 2),
                       format_opt(p.kd_f, 2), format_opt(p.wd_a_index, 3),
                       format_opt(p.wd_a_index_normalized, 3)});
    }
    files["tables/parameters.csv"] = csv;
  }
  {
    std::string csv = csv_line({"category", "f", "a", "k"});
    for (const CategoryStats& s : bundle.parameter_rows) {
      csv += csv_line({s.category.label(), std::to_string(s.f), std::to_string(s.a),
                       std::to_string(s.k)});
    }
    files["series/fig1_categories.csv"] = csv;
  }
  {
    std::string csv = csv_line({"dc", "f"});
    for (const CategoryStats& s : bundle.parameter_rows) {
      if (s.category.kind == WordKind::Semantic) {
        csv += csv_line({std::to_string(s.category.degree), std::to_string(s.f)});
      }
    }
    files["series/fig2_dc_vs_f.csv"] = csv;
  }
  {
    std::string txt;
    for (const auto& [label, list] :
         std::vector<std::pair<std::string, const std::vector<std::string>*>>{
             {"rejected record", &bundle.warnings.rejected_records},
             {"unresolved word", &bundle.warnings.unresolved_words},
             {"unmapped subject", &bundle.warnings.unmapped_subjects}}) {
      for (const std::string& w : *list) txt += label + ": " + w + "\n";
    }
    files["warnings.txt"] = txt;
  }
  return files;
}

/// Renders the requested formats into out_dir. All content is written to a
/// staging directory first and swapped into place, so a failure never leaves
/// a partially written report behind.
inline void write_report(const ReportBundle& bundle, const std::filesystem::path& out_dir,
                         const std::vector<ReportFormat>& formats) {
  namespace fs = std::filesystem;
  std::map<std::string, std::string> files;
  for (ReportFormat format : formats) {
    switch (format) {
      case ReportFormat::Markdown:
        files["report.md"] = render_markdown(bundle);
        break;
      case ReportFormat::Json:
        files["report.json"] = render_json(bundle).dump(2) + "\n";
        break;
      case ReportFormat::CsvDirectory: {
        auto csvs = render_csv_files(bundle);
        files.insert(csvs.begin(), csvs.end());
        break;
      }
    }
  }

  fs::path target = fs::absolute(out_dir);
  fs::path parent = target.parent_path();
  std::error_code ec;
  fs::create_directories(parent, ec);
  fs::path staging = parent / (target.filename().string() + ".staging-" + std::to_string(getpid()));
  fs::remove_all(staging, ec);
  try {
    fs::create_directories(staging);
    for (const auto& [rel, content] : files) {
      fs::path dest = staging / rel;
      fs::create_directories(dest.parent_path());
      std::ofstream out(dest, std::ios::binary);
      if (!out) throw Error("cannot write report file: " + dest.string());
      out << content;
      if (!out) throw Error("write failed: " + dest.string());
    }
    fs::path retired = parent / (target.filename().string() + ".old-" + std::to_string(getpid()));
    if (fs::exists(target)) fs::rename(target, retired);
    fs::rename(staging, target);
    fs::remove_all(retired, ec);
  } catch (...) {
    fs::remove_all(staging, ec);
    throw;
  }
}

}  // namespace wordship

#endif  // WORDSHIP_REPORT_HPP
