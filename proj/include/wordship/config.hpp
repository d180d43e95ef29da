#ifndef WORDSHIP_CONFIG_HPP
#define WORDSHIP_CONFIG_HPP

#include <filesystem>
#include <fstream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "wordship/classify.hpp"
#include "wordship/context.hpp"
#include "wordship/errors.hpp"
#include "wordship/normalize.hpp"

namespace wordship {

struct ProviderSpec {
  std::string name;
  std::string kind;  // "offline" is the reference implementation
  std::string path;
};

/// Tool configuration, loaded from a JSON file. Relative paths inside the
/// file resolve against the file's own directory.
struct ToolConfig {
  NormalizationRules normalization;
  std::string form_words_path;
  std::string eponyms_path;
  std::string acronyms_path;
  std::string cache_path;
  std::vector<ProviderSpec> providers;
  std::string discipline_map_path;
  std::string subject_aliases_path;
  std::string output_format = "all";  // markdown | csv | json | all

  Lexicons load_lexicons() const {
    Lexicons lx;
    lx.form_words = form_words_path.empty() ? Lexicons::default_form_words()
                                            : load_word_list(form_words_path);
    if (!eponyms_path.empty()) lx.eponyms = load_word_list(eponyms_path);
    if (!acronyms_path.empty()) lx.acronyms = load_word_list(acronyms_path);
    lx.validate();
    return lx;
  }

  SubjectAliases load_subject_aliases() const {
    if (subject_aliases_path.empty()) return {};
    return SubjectAliases::from_file(subject_aliases_path);
  }

  std::optional<DisciplineMap> load_discipline_map() const {
    if (discipline_map_path.empty()) return std::nullopt;
    return DisciplineMap::from_file(discipline_map_path);
  }
};

inline ToolConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open config file: " + path);
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error("config file " + path + " is not valid JSON: " + e.what());
  }

  std::filesystem::path base = std::filesystem::absolute(path).parent_path();
  auto resolve = [&](const std::string& p) -> std::string {
    if (p.empty()) return p;
    std::filesystem::path fp(p);
    return fp.is_absolute() ? fp.string() : (base / fp).lexically_normal().string();
  };

  ToolConfig cfg;
  if (doc.contains("normalization")) {
    const auto& n = doc["normalization"];
    cfg.normalization.lowercase = n.value("lowercase", cfg.normalization.lowercase);
    cfg.normalization.singularize = n.value("singularize", cfg.normalization.singularize);
    cfg.normalization.hyphen_splits = n.value("hyphen_splits", cfg.normalization.hyphen_splits);
    cfg.normalization.strip_characters =
        n.value("strip_characters", cfg.normalization.strip_characters);
    if (n.contains("singular_exceptions")) {
      cfg.normalization.singular_exceptions =
          load_singular_exceptions(resolve(n["singular_exceptions"].get<std::string>()));
    }
  }
  if (doc.contains("lexicons")) {
    const auto& lx = doc["lexicons"];
    cfg.form_words_path = resolve(lx.value("form_words", std::string()));
    cfg.eponyms_path = resolve(lx.value("eponyms", std::string()));
    cfg.acronyms_path = resolve(lx.value("acronyms", std::string()));
  }
  if (doc.contains("contexts")) {
    const auto& cx = doc["contexts"];
    cfg.cache_path = resolve(cx.value("cache", std::string()));
    if (cx.contains("providers")) {
      for (const auto& p : cx["providers"]) {
        ProviderSpec spec;
        spec.name = p.at("name").get<std::string>();
        spec.kind = p.value("kind", std::string("offline"));
        spec.path = resolve(p.value("path", std::string()));
        cfg.providers.push_back(std::move(spec));
      }
    }
  }
  cfg.discipline_map_path = resolve(doc.value("discipline_map", std::string()));
  cfg.subject_aliases_path = resolve(doc.value("subject_aliases", std::string()));
  if (doc.contains("output") && doc["output"].contains("format")) {
    cfg.output_format = doc["output"]["format"].get<std::string>();
  }
  return cfg;
}

inline std::unique_ptr<ContextProvider> make_provider(const ProviderSpec& spec) {
  if (spec.kind == "offline") {
    if (spec.path.empty()) throw Error("offline provider '" + spec.name + "' needs a path");
    return std::make_unique<OfflineLexiconProvider>(
        OfflineLexiconProvider::from_file(spec.name, spec.path));
  }
  throw Error("unknown provider kind '" + spec.kind + "' for provider '" + spec.name + "'");
}

}  // namespace wordship

#endif  // WORDSHIP_CONFIG_HPP
