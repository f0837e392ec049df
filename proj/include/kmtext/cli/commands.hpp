#pragma once

// Subcommand implementations behind the kmtext executable. Each returns a
// process exit code and writes only to the streams it is given, so tests can
// drive them in-process.

#include <nlohmann/json.hpp>

#include <cstdio>
#include <cstdlib>
#include <exception>
#include <filesystem>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "kmtext/corpus.hpp"
#include "kmtext/error.hpp"
#include "kmtext/fileio.hpp"
#include "kmtext/insight.hpp"
#include "kmtext/knowledge.hpp"
#include "kmtext/lda.hpp"
#include "kmtext/naive_bayes.hpp"
#include "kmtext/retrieval.hpp"
#include "kmtext/run_config.hpp"
#include "kmtext/sentiment.hpp"
#include "kmtext/svg.hpp"
#include "kmtext/textprep.hpp"
#include "kmtext/vectorspace.hpp"

namespace kmtext::cli {

namespace fs = std::filesystem;
using Json = nlohmann::ordered_json;

enum ExitCode : int {
  kSuccess = 0,
  kUsageError = 1,
  kInputError = 2,
  kInternalError = 3,
};

inline constexpr int kResultsSchemaVersion = 1;

/// Canonical result file names written by `analyze`.
namespace results {
inline constexpr const char* kSentiment = "sentiment.out";
inline constexpr const char* kFrequencies = "frequencies.out";
inline constexpr const char* kUniqueWords = "unique_words.out";
inline constexpr const char* kProfanity = "profanity.out";
inline constexpr const char* kConcepts = "concepts.out";
inline constexpr const char* kTopics = "topics.out";
inline constexpr const char* kDtm = "dtm.out";
}  // namespace results

/// Chart file names written by `report`.
namespace charts {
inline constexpr const char* kRadar = "radar.svg";
inline constexpr const char* kWordcloud = "wordcloud.svg";
inline constexpr const char* kUniqueWords = "unique_words.svg";
inline constexpr const char* kScatter = "sentiment_scatter.svg";
inline constexpr const char* kTimeseries = "sentiment_timeseries.svg";
}  // namespace charts

struct Streams {
  std::ostream& out;
  std::ostream& err;
};

/// "now" for metadata and record timestamps; KM_NOW (ISO-8601) overrides the clock.
inline Timestamp current_time() {
  if (const char* env = std::getenv("KM_NOW"); env != nullptr && *env != '\0') {
    const auto ts = Timestamp::parse(env);
    if (!ts) throw ArgumentError(std::string("KM_NOW is not an ISO-8601 timestamp: ") + env);
    return *ts;
  }
  return Timestamp::now();
}

inline std::string one_line(std::string text) {
  for (auto& c : text) {
    if (c == '\n' || c == '\r') c = ' ';
  }
  return text;
}

/// Maps the library's exception types onto exit codes and prints exactly
/// one diagnostic line on failure.
inline int guarded(const std::string& command, Streams io, const std::function<int()>& body) {
  auto fail = [&](int code, const char* category, const std::string& what) {
    io.err << "kmtext " << command << ": error: " << category << ": " << one_line(what) << "\n";
    return code;
  };
  try {
    return body();
  } catch (const EmptyVocabularyError& e) {
    return fail(kInputError, "empty-vocabulary", e.what());
  } catch (const ArgumentError& e) {
    return fail(kUsageError, "argument", e.what());
  } catch (const ConfigError& e) {
    return fail(kUsageError, "config", e.what());
  } catch (const InputFormatError& e) {
    return fail(kInputError, "input-format", e.what());
  } catch (const StoreIntegrityError& e) {
    return fail(kInputError, "store-integrity", e.what());
  } catch (const LockError& e) {
    return fail(kInputError, "lock", e.what());
  } catch (const IoError& e) {
    return fail(kInputError, "io", e.what());
  } catch (const std::exception& e) {
    return fail(kInternalError, "internal", e.what());
  }
}

inline std::string pretty(const Json& j) { return j.dump(2, ' ', false, Json::error_handler_t::replace) + "\n"; }

inline Json read_results_file(const fs::path& dir, const char* name) {
  const auto path = dir / name;
  if (!fs::is_regular_file(path)) throw InputFormatError("missing results file " + path.string());
  try {
    return Json::parse(read_file(path));
  } catch (const Json::parse_error& e) {
    throw InputFormatError(path.string() + ": " + e.what());
  }
}

inline void require_schema(const Json& j, const char* name) {
  if (!j.is_object() || !j.contains("schema_version") || j["schema_version"] != kResultsSchemaVersion) {
    throw InputFormatError(std::string(name) + ".schema_version: missing or unsupported");
  }
  if (!j.contains("corpus_id") || !j["corpus_id"].is_string()) {
    throw InputFormatError(std::string(name) + ".corpus_id: missing");
  }
}

// --- ingest ------------------------------------------------------------------

struct IngestOptions {
  fs::path input_dir;
  std::string class_name = "portfolioContainer";
  fs::path out_path;
  std::string id_prefix = "student";
};

inline int cmd_ingest(const IngestOptions& opt, Streams io) {
  return guarded("ingest", io, [&] {
    if (opt.class_name.empty()) throw ArgumentError("--class must not be empty");
    if (!fs::is_directory(opt.input_dir)) throw ArgumentError("input directory not found: " + opt.input_dir.string());
    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(opt.input_dir)) {
      if (!entry.is_regular_file()) continue;
      const auto ext = ascii_lower_copy(entry.path().extension().string());
      if (ext == ".html" || ext == ".htm" || ext == ".txt") files.push_back(entry.path());
    }
    if (files.empty()) throw ArgumentError("no .html or .txt files in " + opt.input_dir.string());
    std::sort(files.begin(), files.end(),
              [](const fs::path& a, const fs::path& b) { return a.filename().string() < b.filename().string(); });

    const auto now = current_time();
    std::vector<std::pair<std::string, DocumentMeta>> items;
    for (const auto& file : files) {
      const auto content = read_file(file);
      const auto uri = file.string();
      if (ascii_lower_copy(file.extension().string()) == ".txt") {
        items.emplace_back(content, DocumentMeta{uri, std::nullopt, std::nullopt, std::nullopt, now});
        continue;
      }
      const auto blocks = extract_review_blocks(content, opt.class_name);
      if (blocks.empty()) io.err << "kmtext ingest: warning: no '" << opt.class_name << "' blocks in " << uri << "\n";
      const auto meta = extract_metadata(content, uri, now);
      for (const auto& block : blocks) items.emplace_back(block, meta);
    }
    const auto corpus = build_corpus(std::move(items), opt.id_prefix);
    const auto [deduped, report] = deduplicate(corpus);
    if (!opt.out_path.parent_path().empty()) fs::create_directories(opt.out_path.parent_path());
    save_corpus(deduped, opt.out_path);
    io.out << "kept " << report.kept << " removed " << report.removed.size() << "\n";
    for (const auto& [removed, kept] : report.removed) io.out << "duplicate " << removed << " of " << kept << "\n";
    return kSuccess;
  });
}

// --- analyze -----------------------------------------------------------------

struct AnalyzeOptions {
  fs::path corpus_path;
  fs::path config_path;
  fs::path out_dir;
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> topics;
  std::optional<std::size_t> iterations;
};

inline Json score_json(const SentimentScore& s) {
  Json j;
  j["polarity"] = s.polarity;
  j["subjectivity"] = s.subjectivity;
  j["assessments"] = s.assessments;
  return j;
}

inline Json results_header(const Corpus& corpus) {
  Json j;
  j["schema_version"] = kResultsSchemaVersion;
  j["corpus_id"] = corpus.corpus_id;
  return j;
}

inline int cmd_analyze(const AnalyzeOptions& opt, Streams io) {
  return guarded("analyze", io, [&] {
    if (!fs::is_regular_file(opt.corpus_path)) throw ArgumentError("corpus file not found: " + opt.corpus_path.string());
    auto cfg = load_run_config(opt.config_path);
    if (opt.seed) cfg.lda.seed = *opt.seed;
    if (opt.topics) cfg.lda.topics = *opt.topics;
    if (opt.iterations) cfg.lda.iterations = *opt.iterations;
    cfg.lda.validate();
    const auto corpus = load_corpus(opt.corpus_path);
    const auto lexicon = load_lexicon(cfg.sentiment_lexicon);
    const auto patterns = load_profanity_patterns(cfg.profanity);
    const auto prepared = preprocess_corpus(corpus, cfg.pipeline);

    Json sentiment = results_header(corpus);
    sentiment["documents"] = Json::array();
    Json profanity = results_header(corpus);
    profanity["patterns"] = patterns;
    profanity["documents"] = Json::array();
    for (const auto& prep : prepared) {
      const auto scored = score_document(prep, lexicon);
      Json d;
      d["doc_id"] = prep.doc_id;
      d["aggregate"] = score_json(scored.aggregate);
      d["series"] = Json::array();
      for (const auto& s : scored.series) d["series"].push_back(score_json(s));
      sentiment["documents"].push_back(std::move(d));

      TokenList surface;
      for (const auto& sentence : prep.sentences) surface.insert(surface.end(), sentence.begin(), sentence.end());
      const auto prof = profanity_count(surface, patterns);
      profanity["documents"].push_back({{"doc_id", prep.doc_id}, {"count", prof.count}, {"matched", prof.matched_terms}});
    }

    Json unique = results_header(corpus);
    unique["documents"] = Json::array();
    const auto uniques = unique_word_counts(prepared);
    for (const auto& prep : prepared) {
      const auto& u = uniques.at(prep.doc_id);
      unique["documents"].push_back({{"doc_id", prep.doc_id}, {"count", u.count}, {"words", u.words}});
    }

    Json concepts = results_header(corpus);
    concepts["min_count"] = cfg.concept_min_count;
    concepts["concepts"] = Json::array();
    for (const auto& c : extract_concepts(prepared, cfg.concept_min_count)) {
      concepts["concepts"].push_back({{"first", c.first}, {"second", c.second}, {"count", c.count}});
    }

    Json frequencies = results_header(corpus);
    frequencies["top_k"] = cfg.wordcloud_top_k;
    frequencies["terms"] = Json::array();
    Json topics = results_header(corpus);
    Json dtm_json = results_header(corpus);

    const bool any_tokens = std::any_of(prepared.begin(), prepared.end(),
                                        [](const PreparedDocument& p) { return !p.content_tokens.empty(); });
    if (any_tokens) {
      const auto vocab = build_vocabulary(prepared, cfg.selection);
      const auto dtm = build_dtm(prepared, vocab);
      for (const auto& [term, count] : top_terms(dtm, cfg.wordcloud_top_k)) {
        frequencies["terms"].push_back({{"term", term}, {"count", count}});
      }
      try {
        topics["model"] = topic_model_to_json(fit_lda(dtm, cfg.lda));
      } catch (const ConfigError& e) {
        // Feature selection can leave every row empty; topics are then undefined.
        topics["model"] = nullptr;
        topics["skipped"] = e.what();
      }
      dtm_json["dtm"] = dtm_to_json(dtm);
    } else {
      io.err << "kmtext analyze: warning: corpus has no content tokens; vector-space outputs are empty\n";
      topics["model"] = nullptr;
      topics["skipped"] = "corpus has no content tokens";
      dtm_json["dtm"] = dtm_to_json(build_dtm(prepared, Vocabulary{}));
    }

    fs::create_directories(opt.out_dir);
    write_file_atomic(opt.out_dir / results::kSentiment, pretty(sentiment));
    write_file_atomic(opt.out_dir / results::kFrequencies, pretty(frequencies));
    write_file_atomic(opt.out_dir / results::kUniqueWords, pretty(unique));
    write_file_atomic(opt.out_dir / results::kProfanity, pretty(profanity));
    write_file_atomic(opt.out_dir / results::kConcepts, pretty(concepts));
    write_file_atomic(opt.out_dir / results::kTopics, pretty(topics));
    write_file_atomic(opt.out_dir / results::kDtm, pretty(dtm_json));
    io.out << "analyzed " << corpus.size() << " documents into " << opt.out_dir.string() << "\n";
    return kSuccess;
  });
}

// --- report ------------------------------------------------------------------

struct ReportOptions {
  fs::path results_dir;
  fs::path out_dir;
};

inline int cmd_report(const ReportOptions& opt, Streams io) {
  return guarded("report", io, [&] {
    const auto sentiment = read_results_file(opt.results_dir, results::kSentiment);
    const auto profanity = read_results_file(opt.results_dir, results::kProfanity);
    const auto unique = read_results_file(opt.results_dir, results::kUniqueWords);
    const auto frequencies = read_results_file(opt.results_dir, results::kFrequencies);
    require_schema(sentiment, results::kSentiment);
    require_schema(profanity, results::kProfanity);
    require_schema(unique, results::kUniqueWords);
    require_schema(frequencies, results::kFrequencies);

    const svg::ChartStyle style;
    std::vector<svg::ScatterPoint> points;
    std::vector<svg::LabeledSeries> series;
    try {
      for (const auto& d : sentiment.at("documents")) {
        const auto id = d.at("doc_id").get<std::string>();
        points.push_back({d.at("aggregate").at("polarity").get<double>(),
                          d.at("aggregate").at("subjectivity").get<double>(), id});
        svg::LabeledSeries s{id, {}};
        long index = 0;
        for (const auto& p : d.at("series")) s.points.emplace_back(index++, p.at("polarity").get<double>());
        series.push_back(std::move(s));
      }
    } catch (const Json::exception& e) {
      throw InputFormatError(std::string(results::kSentiment) + ": " + e.what());
    }

    auto labeled_counts = [](const Json& file, const char* name) {
      std::vector<std::pair<std::string, double>> values;
      try {
        for (const auto& d : file.at("documents")) {
          values.emplace_back(d.at("doc_id").get<std::string>(), d.at("count").get<double>());
        }
      } catch (const Json::exception& e) {
        throw InputFormatError(std::string(name) + ": " + e.what());
      }
      return values;
    };
    const auto profanity_values = labeled_counts(profanity, results::kProfanity);
    const auto unique_values = labeled_counts(unique, results::kUniqueWords);

    std::vector<std::pair<std::string, std::size_t>> freqs;
    try {
      for (const auto& t : frequencies.at("terms")) {
        freqs.emplace_back(t.at("term").get<std::string>(), t.at("count").get<std::size_t>());
      }
    } catch (const Json::exception& e) {
      throw InputFormatError(std::string(results::kFrequencies) + ": " + e.what());
    }

    fs::create_directories(opt.out_dir);
    std::size_t written = 0;
    if (profanity_values.size() >= 3) {
      write_file_atomic(opt.out_dir / charts::kRadar, svg::render_radar(profanity_values, style, "Profane words"));
      ++written;
    } else {
      io.err << "kmtext report: warning: radar chart needs at least 3 documents; " << charts::kRadar << " skipped\n";
    }
    write_file_atomic(opt.out_dir / charts::kWordcloud, svg::render_wordcloud(freqs, style, "Most frequent words"));
    write_file_atomic(opt.out_dir / charts::kUniqueWords, svg::render_bars(unique_values, style, "Unique words"));
    write_file_atomic(opt.out_dir / charts::kScatter,
                      svg::render_scatter(points, {-1.0, 1.0}, {0.0, 1.0}, style, "Sentiment", "polarity",
                                          "subjectivity"));
    write_file_atomic(opt.out_dir / charts::kTimeseries,
                      svg::render_timeseries(series, style, "Sentiment by sentence"));
    written += 4;
    io.out << "wrote " << written << " charts to " << opt.out_dir.string() << "\n";
    return kSuccess;
  });
}

// --- export ------------------------------------------------------------------

struct ExportOptions {
  fs::path results_dir;
  fs::path store_path;
  fs::path outbox_dir;
};

struct PendingRecord {
  RecordKind kind;
  Json payload;
  const char* source_file;
};

inline int cmd_export(const ExportOptions& opt, Streams io) {
  return guarded("export", io, [&] {
    if (!opt.store_path.parent_path().empty()) fs::create_directories(opt.store_path.parent_path());
    const StoreLock lock(opt.store_path);
    const auto now = current_time();
    std::vector<PendingRecord> pending;
    std::string corpus_id;

    auto load = [&](const char* name) {
      auto j = read_results_file(opt.results_dir, name);
      require_schema(j, name);
      const auto id = j["corpus_id"].get<std::string>();
      if (!corpus_id.empty() && id != corpus_id) throw InputFormatError(std::string(name) + ".corpus_id: mismatch");
      corpus_id = id;
      j.erase("corpus_id");
      return j;
    };

    const auto sentiment = load(results::kSentiment);
    Json summary = {{"schema_version", kResultsSchemaVersion}, {"documents", Json::array()}};
    Json series = summary;
    try {
      for (const auto& d : sentiment.at("documents")) {
        summary["documents"].push_back({{"doc_id", d.at("doc_id")}, {"aggregate", d.at("aggregate")}});
        series["documents"].push_back({{"doc_id", d.at("doc_id")}, {"series", d.at("series")}});
      }
    } catch (const Json::exception& e) {
      throw InputFormatError(std::string(results::kSentiment) + ": " + e.what());
    }
    pending.push_back({RecordKind::SentimentSummary, summary, results::kSentiment});
    pending.push_back({RecordKind::SentimentSeries, series, results::kSentiment});
    pending.push_back({RecordKind::FrequencyTable, load(results::kFrequencies), results::kFrequencies});
    pending.push_back({RecordKind::UniqueWords, load(results::kUniqueWords), results::kUniqueWords});
    pending.push_back({RecordKind::Profanity, load(results::kProfanity), results::kProfanity});
    pending.push_back({RecordKind::Concepts, load(results::kConcepts), results::kConcepts});
    pending.push_back({RecordKind::Topics, load(results::kTopics), results::kTopics});

    fs::create_directories(opt.outbox_dir);
    if (!opt.store_path.parent_path().empty()) fs::create_directories(opt.store_path.parent_path());
    std::size_t appended = 0, skipped = 0, messages = 0;
    for (auto& p : pending) {
      // Round-trip through the unordered json type: record ids hash sorted keys.
      const auto payload = nlohmann::json::parse(p.payload.dump());
      const auto record = make_record(p.kind, payload, {"kmtext", p.source_file}, corpus_id, now);
      if (append_record(opt.store_path, record, lock)) {
        ++appended;
      } else {
        ++skipped;
      }
      if (emit_outbox(record, opt.outbox_dir).written) ++messages;
      io.out << to_string(p.kind) << " " << record.id << "\n";
    }
    io.out << "appended " << appended << " skipped " << skipped << " messages " << messages << "\n";
    return kSuccess;
  });
}

// --- search ------------------------------------------------------------------

struct SearchOptions {
  fs::path corpus_path;
  std::string query;
  std::size_t top_k = 10;
  std::optional<fs::path> config_path;
};

inline PipelineConfig pipeline_for(const std::optional<fs::path>& config_path) {
  if (!config_path) return default_pipeline();
  if (!fs::is_regular_file(*config_path)) throw ArgumentError("config file not found: " + config_path->string());
  try {
    const auto j = nlohmann::json::parse(read_file(*config_path));
    return pipeline_from_json(j.contains("pipeline") ? j["pipeline"] : nlohmann::json());
  } catch (const nlohmann::json::parse_error& e) {
    throw InputFormatError("config: " + std::string(e.what()));
  }
}

inline int cmd_search(const SearchOptions& opt, Streams io) {
  return guarded("search", io, [&] {
    if (trim(opt.query).empty()) throw ArgumentError("query must not be empty");
    if (opt.top_k == 0) throw ArgumentError("--top-k must be >= 1");
    if (!fs::is_regular_file(opt.corpus_path)) throw ArgumentError("corpus file not found: " + opt.corpus_path.string());
    const auto pipeline = pipeline_for(opt.config_path);
    const auto corpus = load_corpus(opt.corpus_path);
    const auto prepared = preprocess_corpus(corpus, pipeline);
    const bool any_tokens = std::any_of(prepared.begin(), prepared.end(),
                                        [](const PreparedDocument& p) { return !p.content_tokens.empty(); });
    if (!any_tokens) {
      io.out << "no results\n";
      return kSuccess;
    }
    const auto dtm = build_dtm(prepared, build_vocabulary(prepared));
    auto result = rank_documents(opt.query, dtm, pipeline);
    // Orthogonal documents stay in the library result but are not worth printing.
    std::erase_if(result.hits, [](const SearchHit& h) { return h.score <= 0.0; });
    if (result.hits.empty()) {
      io.out << "no results\n";
      if (result.no_query_terms) io.err << "kmtext search: warning: no query term is in the corpus vocabulary\n";
      return kSuccess;
    }
    for (std::size_t i = 0; i < std::min(opt.top_k, result.hits.size()); ++i) {
      char score[32];
      std::snprintf(score, sizeof score, "%.6f", result.hits[i].score);
      io.out << (i + 1) << " " << score << " " << result.hits[i].doc_id << "\n";
    }
    return kSuccess;
  });
}

// --- classify ----------------------------------------------------------------

struct ClassifyOptions {
  fs::path corpus_path;
  fs::path labels_path;
  std::optional<std::string> doc_id;
  std::optional<std::string> text;
  double alpha = 1.0;
  std::optional<fs::path> config_path;
};

/// "doc_id,label" per line; a first line of exactly "doc_id,label" is a header.
inline std::map<std::string, std::string> parse_labels(std::string_view content) {
  std::map<std::string, std::string> labels;
  std::istringstream in{std::string(content)};
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto row = trim(line);
    if (row.empty()) continue;
    const auto comma = row.find(',');
    if (comma == std::string_view::npos) {
      throw InputFormatError("labels line " + std::to_string(line_no) + ": expected doc_id,label");
    }
    const auto id = std::string(trim(row.substr(0, comma)));
    const auto label = std::string(trim(row.substr(comma + 1)));
    if (line_no == 1 && id == "doc_id" && label == "label") continue;
    if (id.empty() || label.empty()) throw InputFormatError("labels line " + std::to_string(line_no) + ": empty column");
    labels[id] = label;
  }
  return labels;
}

inline int cmd_classify(const ClassifyOptions& opt, Streams io) {
  return guarded("classify", io, [&] {
    if (opt.doc_id.has_value() == opt.text.has_value()) throw ArgumentError("give exactly one of --doc or --text");
    if (!fs::is_regular_file(opt.corpus_path)) throw ArgumentError("corpus file not found: " + opt.corpus_path.string());
    if (!fs::is_regular_file(opt.labels_path)) throw ArgumentError("labels file not found: " + opt.labels_path.string());
    const auto pipeline = pipeline_for(opt.config_path);
    const auto corpus = load_corpus(opt.corpus_path);
    const auto labels = parse_labels(read_file(opt.labels_path));

    std::string target_text;
    if (opt.doc_id) {
      const auto it = std::find_if(corpus.documents.begin(), corpus.documents.end(),
                                   [&](const Document& d) { return d.id == *opt.doc_id; });
      if (it == corpus.documents.end()) throw ArgumentError("unknown document id '" + *opt.doc_id + "'");
      target_text = it->raw_text;
    } else {
      target_text = *opt.text;
    }

    Corpus training;
    training.corpus_id = corpus.corpus_id;
    for (const auto& doc : corpus.documents) {
      if (labels.count(doc.id) != 0) training.documents.push_back(doc);
    }
    for (const auto& [id, label] : labels) {
      if (std::none_of(corpus.documents.begin(), corpus.documents.end(), [&](const Document& d) { return d.id == id; })) {
        throw ArgumentError("labels name unknown document '" + id + "'");
      }
    }
    const auto prepared = preprocess_corpus(training, pipeline);
    const auto dtm = build_dtm(prepared, build_vocabulary(prepared));
    const auto model = train_naive_bayes(dtm, labels, opt.alpha);
    const auto target = preprocess_document(Document{"target", target_text, {}}, pipeline);
    const auto result = classify(model, count_tokens(target.content_tokens));
    io.out << "label " << result.label << "\n";
    for (const auto& [label, score] : result.log_posteriors) {
      char buf[64];
      std::snprintf(buf, sizeof buf, "%.6f", score);
      io.out << "log_posterior " << label << " " << buf << "\n";
    }
    return kSuccess;
  });
}

// --- verify ------------------------------------------------------------------

inline int cmd_verify(const fs::path& store_path, Streams io) {
  return guarded("verify", io, [&] {
    if (!fs::is_regular_file(store_path)) throw ArgumentError("store not found: " + store_path.string());
    const auto v = verify_store(store_path);
    if (v.duplicate_ids != 0) {
      throw StoreIntegrityError("store holds " + std::to_string(v.duplicate_ids) + " duplicate ids", 0);
    }
    io.out << "ok " << v.records << " records\n";
    return kSuccess;
  });
}

}  // namespace kmtext::cli
