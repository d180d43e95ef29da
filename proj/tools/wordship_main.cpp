// wordship: decompose article keywords into constituent words, classify
// them, resolve subject contexts, and report word-association statistics.
#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "wordship/classify.hpp"
#include "wordship/config.hpp"
#include "wordship/context.hpp"
#include "wordship/corpus.hpp"
#include "wordship/metrics.hpp"
#include "wordship/report.hpp"
#include "wordship/tokenize.hpp"

namespace {

using namespace wordship;

constexpr int kExitOk = 0;
constexpr int kExitInputError = 1;
constexpr int kExitInvariantViolation = 2;

ToolConfig config_or_default(const std::string& path) {
  if (path.empty()) return {};
  return load_config(path);
}

std::vector<ReportFormat> formats_from_name(const std::string& name) {
  if (name == "markdown") return {ReportFormat::Markdown};
  if (name == "csv") return {ReportFormat::CsvDirectory};
  if (name == "json") return {ReportFormat::Json};
  if (name == "all" || name.empty()) {
    return {ReportFormat::Markdown, ReportFormat::Json, ReportFormat::CsvDirectory};
  }
  throw Error("unknown output format '" + name + "' (expected markdown, csv, json or all)");
}

std::string resolve_input_format(const std::string& path, const std::string& format) {
  if (format != "auto" && !format.empty()) return format;
  std::string ext = std::filesystem::path(path).extension().string();
  if (ext == ".jsonl" || ext == ".ndjson") return "jsonl";
  if (ext == ".json") return "corpus";
  return "csv";
}

std::vector<KeywordRecord> read_input_records(const std::string& path, const std::string& format,
                                              std::vector<IngestWarning>& warnings) {
  if (format == "csv") return read_records_csv(path, warnings);
  if (format == "jsonl") return read_records_jsonl(path, warnings);
  throw Error("unknown input format '" + format + "' (expected csv, jsonl, corpus or auto)");
}

std::vector<std::string> read_word_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open word list: " + path);
  std::vector<std::string> words;
  std::string line;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    auto body = trim(line);
    if (!body.empty()) words.emplace_back(to_lower_ascii(body));
  }
  return words;
}

int run_analyze(const std::string& input, const std::string& input_format,
                const std::string& config_path, const std::string& out_dir,
                const std::string& cache_override, const std::string& format_override,
                const std::string& save_corpus_path, bool no_form_form) {
  ToolConfig cfg = config_or_default(config_path);
  if (!cache_override.empty()) cfg.cache_path = cache_override;
  if (!format_override.empty()) cfg.output_format = format_override;

  Lexicons lexicons = cfg.load_lexicons();
  SubjectAliases aliases = cfg.load_subject_aliases();

  std::vector<IngestWarning> warnings;
  Corpus corpus;
  std::string format = resolve_input_format(input, input_format);
  if (format == "corpus") {
    corpus = load_corpus(input);  // previously persisted, already normalized
  } else {
    std::vector<KeywordRecord> records = read_input_records(input, format, warnings);
    IngestResult result = ingest(records, cfg.normalization, lexicons.form_words);
    warnings.insert(warnings.end(), result.warnings.begin(), result.warnings.end());
    corpus = std::move(result.corpus);
  }

  if (!save_corpus_path.empty()) save_corpus(corpus, save_corpus_path);

  std::vector<std::string> semantic_words;
  for (const Word& w : corpus.words) {
    if (classify_word(w.surface, lexicons, w.surface).kind == WordKind::Semantic) {
      semantic_words.push_back(w.surface);
    }
  }

  ContextCache cache;
  if (!cfg.cache_path.empty() && std::filesystem::exists(cfg.cache_path)) {
    cache = ContextCache::from_file(cfg.cache_path);
  }
  std::vector<std::string> provider_names;
  for (const ProviderSpec& p : cfg.providers) provider_names.push_back(p.name);
  ContextResolution resolution =
      contexts_from_cache(semantic_words, provider_names, cache, aliases);

  DisciplineMap discipline_map;
  if (auto map = cfg.load_discipline_map()) discipline_map = *map;

  AssociationOptions assoc;
  assoc.count_form_form_adjacency = !no_form_form;
  ReportBundle bundle = build_bundle(corpus, lexicons, resolution.contexts, discipline_map,
                                     warnings, resolution.unresolved, assoc);
  write_report(bundle, out_dir, formats_from_name(cfg.output_format));

  std::cout << "analyzed " << corpus.articles.size() << " articles, " << corpus.keywords.size()
            << " distinct keywords, " << corpus.words.size() << " distinct words\n";
  if (!bundle.warnings.rejected_records.empty()) {
    std::cout << "rejected records: " << bundle.warnings.rejected_records.size() << "\n";
  }
  if (!bundle.warnings.unresolved_words.empty()) {
    std::cout << "unresolved words (" << bundle.warnings.unresolved_words.size()
              << "): " << join(bundle.warnings.unresolved_words, ", ") << "\n";
  }
  std::cout << "report written to " << out_dir << "\n";
  return kExitOk;
}

int run_fetch_contexts(const std::string& input, const std::string& provider_arg,
                       const std::string& cache_path, const std::string& config_path,
                       double rate_limit, int retries) {
  ToolConfig cfg = config_or_default(config_path);
  SubjectAliases aliases = cfg.load_subject_aliases();

  std::unique_ptr<ContextProvider> provider;
  for (const ProviderSpec& spec : cfg.providers) {
    if (spec.name == provider_arg) {
      provider = make_provider(spec);
      break;
    }
  }
  if (!provider) {
    // allow "offline:<path>" without a config
    if (provider_arg.rfind("offline:", 0) == 0) {
      std::string path = provider_arg.substr(8);
      provider = std::make_unique<OfflineLexiconProvider>(
          OfflineLexiconProvider::from_file("offline", path));
    } else {
      throw Error("provider '" + provider_arg +
                  "' is not defined in the config (and is not an offline:<path> spec)");
    }
  }

  std::vector<std::string> words = read_word_list_file(input);
  ContextCache cache;
  if (std::filesystem::exists(cache_path)) cache = ContextCache::from_file(cache_path);

  FetchOptions options;
  options.rate_limit_per_sec = rate_limit;
  options.retries = retries;
  FetchReport report =
      fetch_and_cache(words, *provider, cache, cache_path, options, aliases);

  std::cout << "provider " << provider->name() << ": " << report.fetched << " fetched, "
            << report.cache_hits << " already cached\n";
  if (!report.unresolved.empty()) {
    std::cout << "unresolved words (" << report.unresolved.size()
              << "): " << join(report.unresolved, ", ") << "\n";
  }
  return kExitOk;
}

int run_tokenize(const std::string& raw, const std::string& config_path) {
  ToolConfig cfg = config_or_default(config_path);
  Lexicons lexicons = cfg.load_lexicons();
  TokenSeq seq = decompose(raw, cfg.normalization, lexicons.form_words);
  for (std::size_t i = 0; i < seq.tokens.size(); ++i) {
    const Token& t = seq.tokens[i];
    std::cout << i << "\t" << t.surface << "\tgroup="
              << (t.hyphen_group ? std::to_string(*t.hyphen_group) : "-")
              << (t.is_form_word ? "\tform" : "") << "\n";
  }
  std::cout << "canonical: " << seq.canonical() << "\n"
            << "display:   " << seq.display() << "\n"
            << "wordship:  " << wordship::wordship(seq) << "\n";
  return kExitOk;
}

int run_validate_lexicons(const std::string& config_path) {
  ToolConfig cfg = config_or_default(config_path);
  Lexicons lexicons = cfg.load_lexicons();  // throws if not disjoint
  std::cout << "form words: " << lexicons.form_words.size() << "\n"
            << "eponyms:    " << lexicons.eponyms.size() << "\n"
            << "acronyms:   " << lexicons.acronyms.size() << "\n"
            << "lexicons are disjoint\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"keyword wordship analyzer"};
  app.require_subcommand(1);

  std::string input, input_format = "auto", config_path, out_dir, cache_path, format_override;
  std::string save_corpus_path;
  bool no_form_form = false;
  auto* analyze = app.add_subcommand("analyze", "ingest a corpus and write the full report");
  analyze->add_option("--input", input, "corpus file (CSV, JSONL, or persisted corpus JSON)")
      ->required();
  analyze->add_option("--format", input_format, "input format: csv, jsonl, corpus or auto");
  analyze->add_option("--config", config_path, "tool config JSON");
  analyze->add_option("--out", out_dir, "report output directory")->required();
  analyze->add_option("--cache", cache_path, "context cache file (overrides config)");
  analyze->add_option("--output-format", format_override,
                      "report format: markdown, csv, json or all");
  analyze->add_option("--save-corpus", save_corpus_path, "persist the normalized corpus as JSON");
  analyze->add_flag("--no-form-form-associations", no_form_form,
                    "do not count adjacent form-word pairs in the FW category");

  std::string fetch_input, fetch_provider, fetch_cache, fetch_config;
  double rate_limit = 0;
  int retries = 2;
  auto* fetch = app.add_subcommand("fetch-contexts", "fill the context cache from a provider");
  fetch->add_option("--input", fetch_input, "word list, one word per line")->required();
  fetch->add_option("--provider", fetch_provider, "provider name from config, or offline:<path>")
      ->required();
  fetch->add_option("--cache", fetch_cache, "cache file to read and append to")->required();
  fetch->add_option("--config", fetch_config, "tool config JSON");
  fetch->add_option("--rate-limit", rate_limit, "max lookups per second (0 = unlimited)");
  fetch->add_option("--retries", retries, "retries per word on provider failure");

  std::string tokenize_text, tokenize_config;
  auto* tok = app.add_subcommand("tokenize", "decompose one keyword and print its tokens");
  tok->add_option("keyword", tokenize_text, "keyword text")->required();
  tok->add_option("--config", tokenize_config, "tool config JSON");

  std::string validate_config;
  auto* validate = app.add_subcommand("validate-lexicons", "check lexicon files for overlaps");
  validate->add_option("--config", validate_config, "tool config JSON")->required();

  try {
    app.parse(argc, argv);
    if (app.got_subcommand(analyze)) {
      return run_analyze(input, input_format, config_path, out_dir, cache_path, format_override,
                         save_corpus_path, no_form_form);
    }
    if (app.got_subcommand(fetch)) {
      return run_fetch_contexts(fetch_input, fetch_provider, fetch_cache, fetch_config, rate_limit,
                                retries);
    }
    if (app.got_subcommand(tok)) return run_tokenize(tokenize_text, tokenize_config);
    if (app.got_subcommand(validate)) return run_validate_lexicons(validate_config);
    return kExitInputError;
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInputError;
  } catch (const InvariantViolation& e) {
    std::cerr << "internal invariant violation: " << e.what() << "\n";
    return kExitInvariantViolation;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }
}
