#pragma once

#include <nlohmann/json.hpp>

#include <filesystem>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "kmtext/error.hpp"
#include "kmtext/fileio.hpp"
#include "kmtext/hash.hpp"
#include "kmtext/html.hpp"
#include "kmtext/text_util.hpp"
#include "kmtext/timestamp.hpp"

namespace kmtext {

struct DocumentMeta {
  std::string source_uri;
  std::optional<std::string> title;
  std::optional<std::string> author;
  std::optional<Timestamp> created_at;
  Timestamp retrieved_at;

  friend bool operator==(const DocumentMeta&, const DocumentMeta&) = default;
};

struct Document {
  std::string id;
  std::string raw_text;
  DocumentMeta meta;

  friend bool operator==(const Document&, const Document&) = default;
};

/// Ordered, immutable-by-convention document collection. Insertion order is
/// the iteration order for every downstream stage.
struct Corpus {
  static constexpr int kSchemaVersion = 1;

  std::string corpus_id;
  std::vector<Document> documents;
  int schema_version = kSchemaVersion;

  std::size_t size() const { return documents.size(); }
  bool empty() const { return documents.empty(); }

  friend bool operator==(const Corpus&, const Corpus&) = default;
};

struct DedupReport {
  std::size_t kept = 0;
  std::vector<std::pair<std::string, std::string>> removed;  // (removed_id, kept_id)
};

/// Paragraph texts inside every element whose class list contains `class_name`.
inline std::vector<std::string> extract_review_blocks(std::string_view html, std::string_view class_name) {
  return html::extract_review_blocks(html, class_name);
}

inline DocumentMeta extract_metadata(std::string_view html, std::string source_uri, Timestamp now) {
  const auto fields = html::extract_head_fields(html);
  DocumentMeta meta;
  meta.source_uri = std::move(source_uri);
  meta.title = fields.title;
  meta.author = fields.author;
  if (fields.date) meta.created_at = Timestamp::parse(*fields.date);
  meta.retrieved_at = now;
  return meta;
}

/// Content-derived corpus identifier: "corpus-" + 16 hex digits.
inline std::string derive_corpus_id(const std::vector<Document>& documents) {
  std::string material;
  for (const auto& doc : documents) {
    material += doc.id;
    material.push_back('\x1f');
    material += doc.raw_text;
    material.push_back('\x1e');
  }
  return "corpus-" + sha256_hex(material).substr(0, 16);
}

inline Corpus build_corpus(std::vector<std::pair<std::string, DocumentMeta>> items, std::string_view id_prefix) {
  Corpus corpus;
  corpus.documents.reserve(items.size());
  std::size_t index = 0;
  for (auto& [text, meta] : items) {
    corpus.documents.push_back(
        Document{std::string(id_prefix) + "_" + std::to_string(++index), std::move(text), std::move(meta)});
  }
  corpus.corpus_id = derive_corpus_id(corpus.documents);
  return corpus;
}

inline std::string dedup_key(std::string_view raw_text) {
  return sha256_hex(collapse_whitespace(ascii_lower_copy(raw_text)));
}

/// Drops exact duplicates (after lowercasing and whitespace collapsing),
/// keeping the first occurrence. Survivors keep their ids and relative order.
inline std::pair<Corpus, DedupReport> deduplicate(const Corpus& corpus) {
  Corpus out;
  out.corpus_id = corpus.corpus_id;
  out.schema_version = corpus.schema_version;
  DedupReport report;
  std::unordered_map<std::string, std::string> first_by_key;
  for (const auto& doc : corpus.documents) {
    auto key = dedup_key(doc.raw_text);
    if (const auto it = first_by_key.find(key); it != first_by_key.end()) {
      report.removed.emplace_back(doc.id, it->second);
      continue;
    }
    first_by_key.emplace(std::move(key), doc.id);
    out.documents.push_back(doc);
  }
  report.kept = out.documents.size();
  return {std::move(out), std::move(report)};
}

// --- persistence -----------------------------------------------------------

inline nlohmann::ordered_json to_json(const DocumentMeta& meta) {
  nlohmann::ordered_json j;
  j["source_uri"] = meta.source_uri;
  if (meta.title) j["title"] = *meta.title;
  if (meta.author) j["author"] = *meta.author;
  if (meta.created_at) j["created_at"] = meta.created_at->to_string();
  j["retrieved_at"] = meta.retrieved_at.to_string();
  return j;
}

inline nlohmann::ordered_json to_json(const Corpus& corpus) {
  nlohmann::ordered_json j;
  j["schema_version"] = corpus.schema_version;
  j["corpus_id"] = corpus.corpus_id;
  auto docs = nlohmann::ordered_json::array();
  for (const auto& doc : corpus.documents) {
    nlohmann::ordered_json d;
    d["id"] = doc.id;
    d["raw_text"] = doc.raw_text;
    d["meta"] = to_json(doc.meta);
    docs.push_back(std::move(d));
  }
  j["documents"] = std::move(docs);
  return j;
}

namespace detail {

template <typename Json>
const Json& require(const Json& obj, std::string_view key, std::string_view where) {
  if (!obj.is_object()) throw InputFormatError(std::string(where) + ": expected an object");
  const auto it = obj.find(std::string(key));
  if (it == obj.end()) throw InputFormatError(std::string(where) + "." + std::string(key) + ": missing");
  return *it;
}

template <typename Json>
std::string require_string(const Json& obj, std::string_view key, std::string_view where) {
  const auto& v = require(obj, key, where);
  if (!v.is_string()) throw InputFormatError(std::string(where) + "." + std::string(key) + ": expected a string");
  return v.template get<std::string>();
}

template <typename Json>
std::optional<std::string> optional_string(const Json& obj, std::string_view key, std::string_view where) {
  const auto it = obj.find(std::string(key));
  if (it == obj.end()) return std::nullopt;
  if (!it->is_string()) throw InputFormatError(std::string(where) + "." + std::string(key) + ": expected a string");
  return it->template get<std::string>();
}

template <typename Json>
Timestamp require_timestamp(const Json& obj, std::string_view key, std::string_view where) {
  const auto text = require_string(obj, key, where);
  const auto ts = Timestamp::parse(text);
  if (!ts) throw InputFormatError(std::string(where) + "." + std::string(key) + ": not an ISO-8601 timestamp");
  return *ts;
}

}  // namespace detail

inline Corpus corpus_from_json(const nlohmann::json& j) {
  using namespace detail;
  const auto& version = require(j, "schema_version", "corpus");
  if (!version.is_number_integer()) throw InputFormatError("corpus.schema_version: expected an integer");
  if (version.get<int>() != Corpus::kSchemaVersion) {
    throw VersionError("corpus.schema_version: unsupported version " + std::to_string(version.get<long long>()));
  }
  Corpus corpus;
  corpus.schema_version = version.get<int>();
  corpus.corpus_id = require_string(j, "corpus_id", "corpus");
  const auto& docs = require(j, "documents", "corpus");
  if (!docs.is_array()) throw InputFormatError("corpus.documents: expected an array");
  std::set<std::string> seen;
  for (std::size_t i = 0; i < docs.size(); ++i) {
    const std::string where = "corpus.documents[" + std::to_string(i) + "]";
    Document doc;
    doc.id = require_string(docs[i], "id", where);
    if (doc.id.empty()) throw InputFormatError(where + ".id: empty");
    if (!seen.insert(doc.id).second) throw InputFormatError(where + ".id: duplicate id " + doc.id);
    doc.raw_text = require_string(docs[i], "raw_text", where);
    const auto& meta = require(docs[i], "meta", where);
    const std::string mwhere = where + ".meta";
    doc.meta.source_uri = require_string(meta, "source_uri", mwhere);
    doc.meta.title = optional_string(meta, "title", mwhere);
    doc.meta.author = optional_string(meta, "author", mwhere);
    if (meta.contains("created_at")) doc.meta.created_at = require_timestamp(meta, "created_at", mwhere);
    doc.meta.retrieved_at = require_timestamp(meta, "retrieved_at", mwhere);
    corpus.documents.push_back(std::move(doc));
  }
  return corpus;
}

inline void save_corpus(const Corpus& corpus, const std::filesystem::path& path) {
  write_file_atomic(path, to_json(corpus).dump(2) + "\n");
}

inline Corpus load_corpus(const std::filesystem::path& path) {
  const auto text = read_file(path);
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputFormatError("corpus: not a valid corpus file (" + std::string(e.what()) + ")");
  }
  return corpus_from_json(j);
}

}  // namespace kmtext
