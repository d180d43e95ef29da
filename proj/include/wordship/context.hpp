#ifndef WORDSHIP_CONTEXT_HPP
#define WORDSHIP_CONTEXT_HPP

#include <chrono>
#include <ctime>
#include <fstream>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include <json.hpp>

#include "wordship/errors.hpp"
#include "wordship/text.hpp"

namespace wordship {

/// Optional alias table applied during subject-label normalization
/// (e.g. "maths" -> "mathematics"). File format: `alias<TAB>canonical`.
struct SubjectAliases {
  std::map<std::string, std::string> entries;

  static SubjectAliases from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open subject alias file: " + path);
    SubjectAliases out;
    std::string line;
    while (std::getline(in, line)) {
      if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
      std::string_view body = trim(line);
      if (body.empty()) continue;
      auto tab = body.find('\t');
      if (tab == std::string_view::npos) continue;
      out.entries[to_lower_ascii(std::string(trim(body.substr(0, tab))))] =
          to_lower_ascii(std::string(trim(body.substr(tab + 1))));
    }
    return out;
  }
};

/// Case-folds, collapses internal whitespace, strips trailing punctuation,
/// then applies aliases. Labels from different providers that differ only in
/// these respects unify.
inline std::string normalize_subject(std::string_view label, const SubjectAliases& aliases = {}) {
  std::string s = collapse_internal_whitespace(to_lower_ascii(label));
  while (!s.empty() && (s.back() == '.' || s.back() == ',' || s.back() == ';' || s.back() == ':')) {
    s.pop_back();
  }
  while (!s.empty() && s.back() == ' ') s.pop_back();
  if (auto it = aliases.entries.find(s); it != aliases.entries.end()) return it->second;
  return s;
}

/// A source of subject labels for words. Implementations must be repeatable
/// given unchanged backing data; transient failures are reported as
/// ProviderError and retried by callers.
class ContextProvider {
public:
  virtual ~ContextProvider() = default;
  virtual std::string name() const = 0;
  virtual std::vector<std::string> lookup(const std::string& word) = 0;
};

/// Reference provider backed by a TSV file:
/// `word<TAB>subject1;subject2;...`. A listed word with an empty subject
/// field resolves to zero subjects, which is a valid result distinct from
/// the word being unknown to the corpus pipeline.
class OfflineLexiconProvider : public ContextProvider {
public:
  OfflineLexiconProvider(std::string name, std::map<std::string, std::vector<std::string>> table)
      : name_(std::move(name)), table_(std::move(table)) {}

  static OfflineLexiconProvider from_file(std::string name, const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open subject lexicon: " + path);
    std::map<std::string, std::vector<std::string>> table;
    std::string line;
    while (std::getline(in, line)) {
      if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
      if (trim(line).empty()) continue;
      auto tab = line.find('\t');
      std::string word = to_lower_ascii(std::string(trim(line.substr(0, tab))));
      if (word.empty()) continue;
      std::vector<std::string> subjects;
      if (tab != std::string::npos) {
        for (const std::string& part : split_on(line.substr(tab + 1), ';')) {
          if (!trim(part).empty()) subjects.emplace_back(trim(part));
        }
      }
      table[word] = std::move(subjects);
    }
    return OfflineLexiconProvider(std::move(name), std::move(table));
  }

  std::string name() const override { return name_; }

  std::vector<std::string> lookup(const std::string& word) override {
    auto it = table_.find(to_lower_ascii(word));
    if (it == table_.end()) return {};
    return it->second;
  }

  bool knows(const std::string& word) const { return table_.contains(to_lower_ascii(word)); }

private:
  std::string name_;
  std::map<std::string, std::vector<std::string>> table_;
};

/// The resolved subject contexts of one word. degree, the number of distinct
/// subject areas in the union, is what the rest of the pipeline calls D(C).
struct WordContext {
  std::string word;
  std::map<std::string, std::set<std::string>> per_provider;
  std::set<std::string> union_subjects;
  int degree = 0;

  bool operator==(const WordContext&) const = default;
};

/// Exact degree label: 0 -> "0-C", 5 -> "5-C", 12 -> "12-C".
inline std::string degree_label(int value) {
  if (value < 0) throw Error("degree of contextuality cannot be negative: " + std::to_string(value));
  return std::to_string(value) + "-C";
}

/// Bucketed label for summaries: everything above 10 renders as ">10-C".
inline std::string degree_bucket_label(int value) {
  if (value < 0) throw Error("degree of contextuality cannot be negative: " + std::to_string(value));
  return value > 10 ? std::string(">10-C") : degree_label(value);
}

/// Queries every provider for one word and unions the normalized labels.
/// The result is independent of provider order. A provider failure is
/// retried `retries` times before the error propagates.
inline WordContext lookup_context(const std::string& word,
                                  const std::vector<ContextProvider*>& providers,
                                  const SubjectAliases& aliases = {}, int retries = 2) {
  WordContext ctx;
  ctx.word = word;
  for (ContextProvider* provider : providers) {
    std::vector<std::string> labels;
    int attempt = 0;
    for (;;) {
      try {
        labels = provider->lookup(word);
        break;
      } catch (const ProviderError&) {
        if (attempt++ >= retries) throw;
      }
    }
    std::set<std::string>& bucket = ctx.per_provider[provider->name()];
    for (const std::string& label : labels) {
      std::string norm = normalize_subject(label, aliases);
      if (norm.empty()) continue;
      bucket.insert(norm);
      ctx.union_subjects.insert(std::move(norm));
    }
  }
  ctx.degree = static_cast<int>(ctx.union_subjects.size());
  return ctx;
}

/// Maps specific subjects to broad disciplines. Total: unknown subjects land
/// in the reserved "Unmapped" discipline.
struct DisciplineMap {
  static constexpr const char* kUnmapped = "Unmapped";

  std::map<std::string, std::string> entries;  // normalized subject -> discipline

  static DisciplineMap from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open discipline map: " + path);
    DisciplineMap out;
    std::string line;
    while (std::getline(in, line)) {
      if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
      if (trim(line).empty()) continue;
      auto tab = line.find('\t');
      if (tab == std::string::npos) {
        throw Error("discipline map line needs `subject<TAB>discipline`: " + line);
      }
      std::string subject = normalize_subject(line.substr(0, tab));
      std::string discipline(trim(line.substr(tab + 1)));
      if (subject.empty() || discipline.empty()) continue;
      out.entries[subject] = discipline;
    }
    return out;
  }

  std::string map_discipline(std::string_view subject) const {
    auto it = entries.find(normalize_subject(subject));
    return it != entries.end() ? it->second : std::string(kUnmapped);
  }
};

// ---------------------------------------------------------------------------
// Response cache
// ---------------------------------------------------------------------------

struct CacheEntry {
  std::string word;
  std::string provider;
  std::vector<std::string> subjects;  // normalized
  std::string fetched_at;             // ISO-8601 UTC

  bool operator==(const CacheEntry&) const = default;
};

inline std::string iso8601_now() {
  auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

/// Append-only newline-delimited JSON cache of provider responses. The
/// analysis pipeline reads only from here, so runs are reproducible offline.
/// Later entries for the same (word, provider) supersede earlier ones.
class ContextCache {
public:
  ContextCache() = default;

  static ContextCache from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open context cache: " + path);
    ContextCache cache;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
      ++lineno;
      if (trim(line).empty()) continue;
      nlohmann::json obj;
      try {
        obj = nlohmann::json::parse(line);
      } catch (const nlohmann::json::parse_error& e) {
        throw Error("context cache " + path + " line " + std::to_string(lineno) + ": " + e.what());
      }
      CacheEntry entry;
      entry.word = obj.at("word").get<std::string>();
      entry.provider = obj.at("provider").get<std::string>();
      entry.subjects = obj.at("subjects").get<std::vector<std::string>>();
      entry.fetched_at = obj.value("fetched_at", std::string());
      cache.put(std::move(entry));
    }
    return cache;
  }

  bool has(const std::string& word, const std::string& provider) const {
    return entries_.contains({to_lower_ascii(word), provider});
  }

  const CacheEntry* get(const std::string& word, const std::string& provider) const {
    auto it = entries_.find({to_lower_ascii(word), provider});
    return it != entries_.end() ? &it->second : nullptr;
  }

  void put(CacheEntry entry) {
    std::string key_word = to_lower_ascii(entry.word);
    entries_[{key_word, entry.provider}] = std::move(entry);
  }

  std::size_t size() const { return entries_.size(); }

  static nlohmann::json entry_to_json(const CacheEntry& e) {
    return {{"word", e.word},
            {"provider", e.provider},
            {"subjects", e.subjects},
            {"fetched_at", e.fetched_at}};
  }

  static void append_to_file(const std::string& path, const std::vector<CacheEntry>& entries) {
    std::ofstream out(path, std::ios::app | std::ios::binary);
    if (!out) throw Error("cannot write context cache: " + path);
    for (const CacheEntry& e : entries) out << entry_to_json(e).dump() << '\n';
    if (!out) throw Error("write failed: " + path);
  }

private:
  std::map<std::pair<std::string, std::string>, CacheEntry> entries_;
};

struct FetchOptions {
  double rate_limit_per_sec = 0;  // 0 = unlimited
  int retries = 2;
  int backoff_ms = 50;
};

struct FetchReport {
  long fetched = 0;
  long cache_hits = 0;
  std::vector<std::string> unresolved;  // words whose provider kept failing
};

/// Fetches subject labels for words not yet cached for this provider,
/// pacing requests to the configured rate and retrying transient failures
/// with exponential backoff. New entries are appended to `cache` and, when
/// cache_path is given, to the cache file.
inline FetchReport fetch_and_cache(const std::vector<std::string>& words,
                                   ContextProvider& provider, ContextCache& cache,
                                   const std::optional<std::string>& cache_path = std::nullopt,
                                   const FetchOptions& options = {},
                                   const SubjectAliases& aliases = {}) {
  FetchReport report;
  std::vector<CacheEntry> fresh;
  const auto interval =
      options.rate_limit_per_sec > 0
          ? std::chrono::duration<double>(1.0 / options.rate_limit_per_sec)
          : std::chrono::duration<double>(0);
  for (const std::string& word : words) {
    if (cache.has(word, provider.name())) {
      ++report.cache_hits;
      continue;
    }
    std::optional<std::vector<std::string>> labels;
    for (int attempt = 0; attempt <= options.retries; ++attempt) {
      if (attempt > 0 && options.backoff_ms > 0) {
        std::this_thread::sleep_for(std::chrono::milliseconds(options.backoff_ms << (attempt - 1)));
      }
      if (interval.count() > 0) std::this_thread::sleep_for(interval);
      try {
        labels = provider.lookup(word);
        break;
      } catch (const ProviderError&) {
        // fall through to retry
      }
    }
    if (!labels) {
      report.unresolved.push_back(word);
      continue;
    }
    CacheEntry entry;
    entry.word = to_lower_ascii(word);
    entry.provider = provider.name();
    std::set<std::string> normalized;
    for (const std::string& label : *labels) {
      std::string norm = normalize_subject(label, aliases);
      if (!norm.empty()) normalized.insert(std::move(norm));
    }
    entry.subjects.assign(normalized.begin(), normalized.end());
    entry.fetched_at = iso8601_now();
    cache.put(entry);
    fresh.push_back(std::move(entry));
    ++report.fetched;
  }
  if (cache_path && !fresh.empty()) ContextCache::append_to_file(*cache_path, fresh);
  return report;
}

struct ContextResolution {
  std::map<std::string, WordContext> contexts;  // word -> resolved context
  std::vector<std::string> unresolved;          // no cache entry from any provider
};

/// Builds WordContexts for `words` from cached provider responses only.
/// A word with no entry from any of the named providers is unresolved; it is
/// never silently treated as zero-degree.
inline ContextResolution contexts_from_cache(const std::vector<std::string>& words,
                                             const std::vector<std::string>& provider_names,
                                             const ContextCache& cache,
                                             const SubjectAliases& aliases = {}) {
  ContextResolution out;
  for (const std::string& word : words) {
    WordContext ctx;
    ctx.word = word;
    bool any = false;
    for (const std::string& provider : provider_names) {
      const CacheEntry* entry = cache.get(word, provider);
      if (!entry) continue;
      any = true;
      std::set<std::string>& bucket = ctx.per_provider[provider];
      for (const std::string& label : entry->subjects) {
        std::string norm = normalize_subject(label, aliases);
        if (norm.empty()) continue;
        bucket.insert(norm);
        ctx.union_subjects.insert(std::move(norm));
      }
    }
    if (!any) {
      out.unresolved.push_back(word);
      continue;
    }
    ctx.degree = static_cast<int>(ctx.union_subjects.size());
    out.contexts.emplace(word, std::move(ctx));
  }
  return out;
}

}  // namespace wordship

#endif  // WORDSHIP_CONTEXT_HPP
