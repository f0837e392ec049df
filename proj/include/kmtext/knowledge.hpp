#pragma once

// Content-addressed knowledge records, an append-only line-delimited store
// and a file outbox that stands in for a message bus.

#include <fcntl.h>
#include <unistd.h>

#include <nlohmann/json.hpp>

#include <algorithm>
#include <array>
#include <cerrno>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <optional>
#include <regex>
#include <set>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "kmtext/error.hpp"
#include "kmtext/fileio.hpp"
#include "kmtext/hash.hpp"
#include "kmtext/timestamp.hpp"

namespace kmtext {

enum class RecordKind {
  SentimentSummary,
  SentimentSeries,
  FrequencyTable,
  UniqueWords,
  Profanity,
  Concepts,
  Topics,
  Classification,
  Retrieval,
  Chart,
};

inline constexpr std::array<std::pair<RecordKind, std::string_view>, 10> kRecordKindNames{{
    {RecordKind::SentimentSummary, "sentiment_summary"},
    {RecordKind::SentimentSeries, "sentiment_series"},
    {RecordKind::FrequencyTable, "frequency_table"},
    {RecordKind::UniqueWords, "unique_words"},
    {RecordKind::Profanity, "profanity"},
    {RecordKind::Concepts, "concepts"},
    {RecordKind::Topics, "topics"},
    {RecordKind::Classification, "classification"},
    {RecordKind::Retrieval, "retrieval"},
    {RecordKind::Chart, "chart"},
}};

inline std::string_view to_string(RecordKind kind) {
  for (const auto& [k, name] : kRecordKindNames) {
    if (k == kind) return name;
  }
  return "unknown";
}

inline RecordKind parse_record_kind(std::string_view name) {
  for (const auto& [k, n] : kRecordKindNames) {
    if (n == name) return k;
  }
  throw ArgumentError("unknown record kind '" + std::string(name) + "'");
}

struct KnowledgeRecord {
  std::string id;  // sha256 hex of the canonical content
  RecordKind kind = RecordKind::Chart;
  Timestamp created_at;
  std::string source_corpus;
  std::vector<std::string> tags;  // sorted, unique
  nlohmann::json payload;

  friend bool operator==(const KnowledgeRecord&, const KnowledgeRecord&) = default;
};

/// Compact JSON with object keys sorted, arrays in order and doubles in
/// shortest round-trip form. Invalid UTF-8 is replaced, never rejected.
inline std::string canonical_json(const nlohmann::json& value) {
  return value.dump(-1, ' ', false, nlohmann::json::error_handler_t::replace);
}

/// Hash input: kind, source corpus, tags and payload. created_at is excluded
/// so re-running an analysis on the same corpus yields the same id.
inline std::string record_content_id(RecordKind kind, const std::string& source_corpus,
                                     const std::vector<std::string>& sorted_tags, const nlohmann::json& payload) {
  nlohmann::json content;
  content["kind"] = std::string(to_string(kind));
  content["source_corpus"] = source_corpus;
  content["tags"] = sorted_tags;
  content["payload"] = payload;
  return sha256_hex(canonical_json(content));
}

inline KnowledgeRecord make_record(RecordKind kind, nlohmann::json payload, std::vector<std::string> tags,
                                   std::string source_corpus, Timestamp now) {
  std::sort(tags.begin(), tags.end());
  tags.erase(std::unique(tags.begin(), tags.end()), tags.end());
  KnowledgeRecord record;
  record.kind = kind;
  record.created_at = now;
  record.source_corpus = std::move(source_corpus);
  record.tags = std::move(tags);
  record.payload = std::move(payload);
  record.id = record_content_id(record.kind, record.source_corpus, record.tags, record.payload);
  return record;
}

inline KnowledgeRecord make_record(std::string_view kind, nlohmann::json payload, std::vector<std::string> tags,
                                   std::string source_corpus, Timestamp now) {
  return make_record(parse_record_kind(kind), std::move(payload), std::move(tags), std::move(source_corpus), now);
}

inline bool verify_record(const KnowledgeRecord& record) {
  return std::is_sorted(record.tags.begin(), record.tags.end()) &&
         std::adjacent_find(record.tags.begin(), record.tags.end()) == record.tags.end() &&
         record_content_id(record.kind, record.source_corpus, record.tags, record.payload) == record.id;
}

inline nlohmann::json record_to_json(const KnowledgeRecord& record) {
  nlohmann::json j;
  j["id"] = record.id;
  j["kind"] = std::string(to_string(record.kind));
  j["created_at"] = record.created_at.to_string();
  j["source_corpus"] = record.source_corpus;
  j["tags"] = record.tags;
  j["payload"] = record.payload;
  return j;
}

/// Throws InputFormatError naming the bad field.
inline KnowledgeRecord record_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw InputFormatError("record: expected an object");
  auto string_field = [&](const char* key) {
    const auto it = j.find(key);
    if (it == j.end() || !it->is_string()) throw InputFormatError(std::string("record.") + key + ": missing or not a string");
    return it->get<std::string>();
  };
  KnowledgeRecord record;
  record.id = string_field("id");
  try {
    record.kind = parse_record_kind(string_field("kind"));
  } catch (const ArgumentError& e) {
    throw InputFormatError(std::string("record.kind: ") + e.what());
  }
  const auto ts = Timestamp::parse(string_field("created_at"));
  if (!ts) throw InputFormatError("record.created_at: not an ISO-8601 timestamp");
  record.created_at = *ts;
  record.source_corpus = string_field("source_corpus");
  const auto tags = j.find("tags");
  if (tags == j.end() || !tags->is_array()) throw InputFormatError("record.tags: missing or not an array");
  for (const auto& t : *tags) {
    if (!t.is_string()) throw InputFormatError("record.tags: non-string tag");
    record.tags.push_back(t.get<std::string>());
  }
  const auto payload = j.find("payload");
  if (payload == j.end()) throw InputFormatError("record.payload: missing");
  record.payload = *payload;
  return record;
}

// --- store -------------------------------------------------------------------

/// Advisory single-writer lock: "<store>.lock" created exclusively, removed
/// on destruction. A second holder fails with LockError.
class StoreLock {
 public:
  explicit StoreLock(const std::filesystem::path& store_path) : path_(lock_path(store_path)) {
    const int fd = ::open(path_.c_str(), O_CREAT | O_EXCL | O_WRONLY, 0644);
    if (fd < 0) {
      if (errno == EEXIST) throw LockError("store is locked: " + path_.string());
      throw IoError("cannot create lock " + path_.string() + ": " + std::strerror(errno));
    }
    const std::string pid = std::to_string(::getpid()) + "\n";
    [[maybe_unused]] const auto written = ::write(fd, pid.data(), pid.size());
    ::close(fd);
  }

  StoreLock(const StoreLock&) = delete;
  StoreLock& operator=(const StoreLock&) = delete;

  ~StoreLock() {
    std::error_code ec;
    std::filesystem::remove(path_, ec);
  }

  static std::filesystem::path lock_path(const std::filesystem::path& store_path) {
    auto p = store_path;
    p += ".lock";
    return p;
  }

 private:
  std::filesystem::path path_;
};

/// Every record in store order. Missing store = empty. Lines that do not
/// parse, lack fields or do not re-hash to their id raise StoreIntegrityError.
inline std::vector<KnowledgeRecord> read_store(const std::filesystem::path& store_path) {
  std::vector<KnowledgeRecord> records;
  if (!std::filesystem::exists(store_path)) return records;
  std::ifstream in(store_path, std::ios::binary);
  if (!in) throw IoError("cannot read store " + store_path.string());
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    KnowledgeRecord record;
    try {
      record = record_from_json(nlohmann::json::parse(line));
    } catch (const nlohmann::json::exception& e) {
      throw StoreIntegrityError(std::string("store: unparseable record: ") + e.what(), line_no);
    } catch (const InputFormatError& e) {
      throw StoreIntegrityError(std::string("store: ") + e.what(), line_no);
    }
    if (!verify_record(record)) throw StoreIntegrityError("store: record does not hash to its id " + record.id, line_no);
    records.push_back(std::move(record));
  }
  return records;
}

/// Appends while the caller holds the store lock.
inline bool append_record(const std::filesystem::path& store_path, const KnowledgeRecord& record, const StoreLock&) {
  if (!verify_record(record)) throw ArgumentError("append_record: record id does not match its content");
  for (const auto& existing : read_store(store_path)) {
    if (existing.id == record.id) return false;
  }
  const std::string line = canonical_json(record_to_json(record)) + "\n";
  const int fd = ::open(store_path.c_str(), O_CREAT | O_WRONLY | O_APPEND, 0644);
  if (fd < 0) throw IoError("cannot open store " + store_path.string() + ": " + std::strerror(errno));
  // One write() per record: with O_APPEND the line lands whole or not at all.
  const auto written = ::write(fd, line.data(), line.size());
  const int close_rc = ::close(fd);
  if (written != static_cast<ssize_t>(line.size()) || close_rc != 0) {
    throw IoError("short write to store " + store_path.string());
  }
  return true;
}

/// Appends `record` unless a record with the same id is already stored.
inline bool append_record(const std::filesystem::path& store_path, const KnowledgeRecord& record) {
  const StoreLock lock(store_path);
  return append_record(store_path, record, lock);
}

struct RecordFilter {
  std::optional<std::set<RecordKind>> kinds;
  std::optional<std::set<std::string>> tags_any;
  std::optional<Timestamp> after;   // exclusive
  std::optional<Timestamp> before;  // exclusive

  bool matches(const KnowledgeRecord& r) const {
    if (kinds && kinds->count(r.kind) == 0) return false;
    if (tags_any && std::none_of(r.tags.begin(), r.tags.end(), [&](const auto& t) { return tags_any->count(t) != 0; })) {
      return false;
    }
    if (after && !(r.created_at > *after)) return false;
    if (before && !(r.created_at < *before)) return false;
    return true;
  }
};

inline std::vector<KnowledgeRecord> query_records(const std::filesystem::path& store_path, const RecordFilter& filter) {
  auto records = read_store(store_path);
  std::erase_if(records, [&](const KnowledgeRecord& r) { return !filter.matches(r); });
  return records;
}

struct StoreVerification {
  std::size_t records = 0;
  std::size_t duplicate_ids = 0;
};

/// Full integrity pass: every line parses and re-hashes (else throws), and
/// ids are counted for uniqueness.
inline StoreVerification verify_store(const std::filesystem::path& store_path) {
  StoreVerification v;
  std::unordered_set<std::string> ids;
  for (const auto& r : read_store(store_path)) {
    ++v.records;
    if (!ids.insert(r.id).second) ++v.duplicate_ids;
  }
  return v;
}

// --- outbox ------------------------------------------------------------------

inline std::string default_routing_key(RecordKind kind) { return "km.analytics." + std::string(to_string(kind)); }

/// Three dot-separated segments of lowercase word characters.
inline bool valid_routing_key(std::string_view key) {
  static const std::regex kPattern("[a-z0-9_]+\\.[a-z0-9_]+\\.[a-z0-9_]+");
  return std::regex_match(key.begin(), key.end(), kPattern);
}

struct OutboxDelivery {
  std::filesystem::path path;
  bool written = false;  // false when the message already existed
};

/// Writes "<id>.msg" = {routing_key, record}. An existing message with the
/// same name is left as is.
inline OutboxDelivery emit_outbox(const KnowledgeRecord& record, const std::filesystem::path& outbox_dir,
                                  std::optional<std::string> routing_key = std::nullopt) {
  const auto key = routing_key ? *routing_key : default_routing_key(record.kind);
  if (!valid_routing_key(key)) throw ArgumentError("invalid routing key '" + key + "'");
  if (!std::filesystem::is_directory(outbox_dir)) throw IoError("outbox directory missing: " + outbox_dir.string());
  OutboxDelivery delivery{outbox_dir / (record.id + ".msg"), false};
  if (std::filesystem::exists(delivery.path)) return delivery;
  nlohmann::json message;
  message["routing_key"] = key;
  message["record"] = record_to_json(record);
  write_file_atomic(delivery.path, message.dump(2, ' ', false, nlohmann::json::error_handler_t::replace) + "\n");
  delivery.written = true;
  return delivery;
}

}  // namespace kmtext
