#pragma once

#include <nlohmann/json.hpp>

#include <filesystem>
#include <optional>
#include <string>

#include "kmtext/error.hpp"
#include "kmtext/fileio.hpp"
#include "kmtext/lda.hpp"
#include "kmtext/textprep.hpp"
#include "kmtext/vectorspace.hpp"

namespace kmtext {

/// Everything `analyze` needs. Loaded from one JSON file; relative paths
/// inside it resolve against the current working directory.
///
///   {
///     "pipeline":  {"stop_words": "data/stopwords_en.txt", "stem": false, "lemmatize": false,
///                   "lemma_table": "lemmas.tsv", "artifact_tokens": ["im", "ive", "got", "isnt"],
///                   "remove_bracketed": true, "remove_digit_tokens": true},
///     "selection": {"min_df": 1, "max_df_ratio": 1.0, "top_k": null},
///     "sentiment_lexicon": "data/lexicon/sentiment.csv",
///     "profanity": "data/profanity.txt",
///     "lda": {"topics": 2, "alpha": 0.1, "beta": 0.01, "iterations": 200, "seed": 42},
///     "concepts": {"min_count": 2},
///     "wordcloud_top_k": 30
///   }
///
/// Every key is optional except the two lexicon paths.
struct RunConfig {
  PipelineConfig pipeline;
  FeatureSelection selection;
  std::filesystem::path sentiment_lexicon;
  std::filesystem::path profanity;
  LdaParams lda;
  std::size_t concept_min_count = 2;
  std::size_t wordcloud_top_k = 30;
};

namespace detail {

template <typename T>
T get_or(const nlohmann::json& obj, const char* key, T fallback, const std::string& where) {
  const auto it = obj.find(key);
  if (it == obj.end() || it->is_null()) return fallback;
  try {
    return it->get<T>();
  } catch (const nlohmann::json::exception&) {
    throw InputFormatError(where + "." + key + ": wrong type");
  }
}

inline void require_file(const std::filesystem::path& path, const std::string& what) {
  if (!std::filesystem::is_regular_file(path)) throw ArgumentError(what + " not found: " + path.string());
}

}  // namespace detail

/// Default stop words, no stemming, default selection and LDA parameters.
inline PipelineConfig default_pipeline() {
  PipelineConfig cfg;
  cfg.stop_words = default_stop_words();
  return cfg;
}

inline PipelineConfig pipeline_from_json(const nlohmann::json& p) {
  using detail::get_or;
  PipelineConfig cfg = default_pipeline();
  if (p.is_null()) return cfg;
  if (!p.is_object()) throw InputFormatError("config.pipeline: expected an object");
  const std::string where = "config.pipeline";
  if (const auto path = get_or<std::string>(p, "stop_words", "", where); !path.empty()) {
    detail::require_file(path, "stop-word file");
    cfg.stop_words = load_stop_words(path);
  }
  cfg.stem = get_or<bool>(p, "stem", false, where);
  cfg.lemmatize = get_or<bool>(p, "lemmatize", false, where);
  if (const auto path = get_or<std::string>(p, "lemma_table", "", where); !path.empty()) {
    detail::require_file(path, "lemma table");
    cfg.lemma_table = load_lemma_table(path);
  }
  if (p.contains("artifact_tokens")) {
    const auto tokens = get_or<std::vector<std::string>>(p, "artifact_tokens", {}, where);
    cfg.normalization.artifact_tokens = {tokens.begin(), tokens.end()};
  }
  cfg.normalization.remove_bracketed = get_or<bool>(p, "remove_bracketed", true, where);
  cfg.normalization.remove_digit_tokens = get_or<bool>(p, "remove_digit_tokens", true, where);
  try {
    cfg.validate();
  } catch (const ConfigError& e) {
    throw ArgumentError(e.what());
  }
  return cfg;
}

inline RunConfig run_config_from_json(const nlohmann::json& j) {
  using detail::get_or;
  if (!j.is_object()) throw InputFormatError("config: expected an object");
  RunConfig cfg;
  cfg.pipeline = pipeline_from_json(j.contains("pipeline") ? j["pipeline"] : nlohmann::json());

  if (const auto it = j.find("selection"); it != j.end()) {
    const std::string where = "config.selection";
    cfg.selection.min_df = get_or<std::size_t>(*it, "min_df", 1, where);
    cfg.selection.max_df_ratio = get_or<double>(*it, "max_df_ratio", 1.0, where);
    if (it->contains("top_k") && !(*it)["top_k"].is_null()) cfg.selection.top_k = get_or<std::size_t>(*it, "top_k", 0, where);
  }
  cfg.selection.validate();

  const auto lexicon = get_or<std::string>(j, "sentiment_lexicon", "", "config");
  const auto profanity = get_or<std::string>(j, "profanity", "", "config");
  if (lexicon.empty()) throw ArgumentError("config.sentiment_lexicon: required");
  if (profanity.empty()) throw ArgumentError("config.profanity: required");
  cfg.sentiment_lexicon = lexicon;
  cfg.profanity = profanity;
  detail::require_file(cfg.sentiment_lexicon, "sentiment lexicon");
  detail::require_file(cfg.profanity, "profanity list");

  if (const auto it = j.find("lda"); it != j.end()) {
    const std::string where = "config.lda";
    cfg.lda.topics = get_or<std::size_t>(*it, "topics", cfg.lda.topics, where);
    cfg.lda.alpha = get_or<double>(*it, "alpha", cfg.lda.alpha, where);
    cfg.lda.beta = get_or<double>(*it, "beta", cfg.lda.beta, where);
    cfg.lda.iterations = get_or<std::size_t>(*it, "iterations", cfg.lda.iterations, where);
    cfg.lda.seed = get_or<std::uint64_t>(*it, "seed", cfg.lda.seed, where);
  }
  cfg.lda.validate();

  if (const auto it = j.find("concepts"); it != j.end()) {
    cfg.concept_min_count = get_or<std::size_t>(*it, "min_count", cfg.concept_min_count, "config.concepts");
  }
  if (cfg.concept_min_count < 1) throw ArgumentError("config.concepts.min_count: must be >= 1");
  cfg.wordcloud_top_k = get_or<std::size_t>(j, "wordcloud_top_k", cfg.wordcloud_top_k, "config");
  if (cfg.wordcloud_top_k < 1) throw ArgumentError("config.wordcloud_top_k: must be >= 1");
  return cfg;
}

inline RunConfig load_run_config(const std::filesystem::path& path) {
  if (!std::filesystem::is_regular_file(path)) throw ArgumentError("config file not found: " + path.string());
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(read_file(path));
  } catch (const nlohmann::json::parse_error& e) {
    throw InputFormatError("config: " + std::string(e.what()));
  }
  return run_config_from_json(j);
}

}  // namespace kmtext
