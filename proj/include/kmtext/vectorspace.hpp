#pragma once

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "kmtext/error.hpp"
#include "kmtext/textprep.hpp"

namespace kmtext {

/// Every candidate term was removed by feature selection (or none existed).
class EmptyVocabularyError : public ConfigError {
 public:
  using ConfigError::ConfigError;
};

struct FeatureSelection {
  std::size_t min_df = 1;
  double max_df_ratio = 1.0;
  std::optional<std::size_t> top_k;

  void validate() const {
    if (min_df < 1) throw ArgumentError("feature selection: min_df must be >= 1");
    if (!(max_df_ratio > 0.0 && max_df_ratio <= 1.0)) {
      throw ArgumentError("feature selection: max_df_ratio must be in (0, 1]");
    }
    if (top_k && *top_k == 0) throw ArgumentError("feature selection: top_k must be >= 1");
  }
};

/// Sorted term list; a term's position is its DTM column.
class Vocabulary {
 public:
  Vocabulary() = default;

  /// `terms` must be strictly ascending and aligned with `df`.
  Vocabulary(std::vector<std::string> terms, std::vector<std::size_t> df) : terms_(std::move(terms)), df_(std::move(df)) {
    if (terms_.size() != df_.size()) throw ArgumentError("vocabulary: terms and df differ in length");
    for (std::size_t i = 0; i < terms_.size(); ++i) {
      if (i > 0 && !(terms_[i - 1] < terms_[i])) throw ArgumentError("vocabulary: terms must be strictly sorted");
      index_.emplace(terms_[i], i);
    }
  }

  std::size_t size() const { return terms_.size(); }
  bool empty() const { return terms_.empty(); }
  const std::vector<std::string>& terms() const { return terms_; }
  const std::string& term(std::size_t column) const { return terms_.at(column); }
  std::size_t df(std::size_t column) const { return df_.at(column); }
  const std::vector<std::size_t>& df() const { return df_; }

  std::optional<std::size_t> index_of(std::string_view term) const {
    const auto it = index_.find(std::string(term));
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  friend bool operator==(const Vocabulary& a, const Vocabulary& b) { return a.terms_ == b.terms_ && a.df_ == b.df_; }

 private:
  std::vector<std::string> terms_;
  std::vector<std::size_t> df_;
  std::unordered_map<std::string, std::size_t> index_;
};

/// column -> count, zero counts never stored.
using SparseRow = std::map<std::size_t, std::size_t>;

struct DocumentTermMatrix {
  std::vector<std::string> doc_ids;
  std::vector<SparseRow> rows;
  Vocabulary vocabulary;

  std::size_t m() const { return rows.size(); }
  std::size_t n() const { return vocabulary.size(); }

  std::size_t row_sum(std::size_t row) const {
    std::size_t total = 0;
    for (const auto& [col, count] : rows.at(row)) total += count;
    return total;
  }

  /// Total count of each column across all rows.
  std::vector<std::size_t> column_totals() const {
    std::vector<std::size_t> totals(n(), 0);
    for (const auto& row : rows) {
      for (const auto& [col, count] : row) totals[col] += count;
    }
    return totals;
  }
};

enum class WeightingScheme { Raw, Relative, Augmented };

inline std::string_view to_string(WeightingScheme s) {
  switch (s) {
    case WeightingScheme::Raw:
      return "raw";
    case WeightingScheme::Relative:
      return "relative";
    case WeightingScheme::Augmented:
      return "augmented";
  }
  return "raw";
}

inline WeightingScheme parse_weighting_scheme(std::string_view name) {
  if (name == "raw") return WeightingScheme::Raw;
  if (name == "relative") return WeightingScheme::Relative;
  if (name == "augmented") return WeightingScheme::Augmented;
  throw ArgumentError("unknown weighting scheme '" + std::string(name) + "'");
}

using TermWeights = std::map<std::string, double>;

/// Candidates are all content-token types; df and corpus-frequency filters
/// apply in that order; result is sorted lexicographically.
inline Vocabulary build_vocabulary(const std::vector<PreparedDocument>& prepared, const FeatureSelection& sel = {}) {
  sel.validate();
  if (prepared.empty()) throw ArgumentError("build_vocabulary: no documents");
  std::map<std::string, std::size_t> df;
  std::map<std::string, std::size_t> total;
  for (const auto& doc : prepared) {
    for (const auto& t : doc.token_types) ++df[t];
    for (const auto& t : doc.content_tokens) ++total[t];
  }
  const auto m = static_cast<double>(prepared.size());
  std::vector<std::string> kept;
  for (const auto& [term, count] : df) {
    if (count < sel.min_df) continue;
    if (static_cast<double>(count) / m > sel.max_df_ratio) continue;
    kept.push_back(term);
  }
  if (sel.top_k && kept.size() > *sel.top_k) {
    std::stable_sort(kept.begin(), kept.end(), [&](const std::string& a, const std::string& b) {
      const auto ca = total[a], cb = total[b];
      return ca != cb ? ca > cb : a < b;
    });
    kept.resize(*sel.top_k);
    std::sort(kept.begin(), kept.end());
  }
  if (kept.empty()) throw EmptyVocabularyError("vocabulary is empty after feature selection");
  std::vector<std::size_t> kept_df;
  kept_df.reserve(kept.size());
  for (const auto& t : kept) kept_df.push_back(df[t]);
  return Vocabulary(std::move(kept), std::move(kept_df));
}

/// Counts in-vocabulary content tokens per document; other tokens are ignored.
inline DocumentTermMatrix build_dtm(const std::vector<PreparedDocument>& prepared, const Vocabulary& vocab) {
  DocumentTermMatrix dtm;
  dtm.vocabulary = vocab;
  dtm.doc_ids.reserve(prepared.size());
  dtm.rows.reserve(prepared.size());
  for (const auto& doc : prepared) {
    SparseRow row;
    for (const auto& t : doc.content_tokens) {
      if (const auto col = vocab.index_of(t)) ++row[*col];
    }
    dtm.doc_ids.push_back(doc.doc_id);
    dtm.rows.push_back(std::move(row));
  }
  return dtm;
}

/// Raw counts, count / row sum, or count / row max. Empty rows give {}.
inline TermWeights term_weights(const DocumentTermMatrix& dtm, std::size_t row_index, WeightingScheme scheme) {
  if (row_index >= dtm.m()) throw ArgumentError("term_weights: row index out of range");
  const auto& row = dtm.rows[row_index];
  TermWeights weights;
  if (row.empty()) return weights;
  double denominator = 1.0;
  if (scheme == WeightingScheme::Relative) {
    denominator = static_cast<double>(dtm.row_sum(row_index));
  } else if (scheme == WeightingScheme::Augmented) {
    std::size_t max_count = 0;
    for (const auto& [col, count] : row) max_count = std::max(max_count, count);
    denominator = static_cast<double>(max_count);
  }
  for (const auto& [col, count] : row) {
    weights.emplace(dtm.vocabulary.term(col), static_cast<double>(count) / denominator);
  }
  return weights;
}

/// idf(t) = ln(m / df(t)), natural log, unsmoothed.
inline std::vector<double> idf_by_column(const DocumentTermMatrix& dtm) {
  if (dtm.m() == 0) throw ArgumentError("inverse_document_frequency: empty matrix");
  std::vector<double> idf(dtm.n(), 0.0);
  const auto m = dtm.m();
  for (std::size_t col = 0; col < dtm.n(); ++col) {
    idf[col] = std::log(static_cast<double>(m) / static_cast<double>(dtm.vocabulary.df(col)));
  }
  return idf;
}

inline TermWeights inverse_document_frequency(const DocumentTermMatrix& dtm) {
  const auto idf = idf_by_column(dtm);
  TermWeights out;
  for (std::size_t col = 0; col < dtm.n(); ++col) out.emplace(dtm.vocabulary.term(col), idf[col]);
  return out;
}

/// tf(scheme) x idf per row. Zero weights are omitted.
inline std::vector<TermWeights> tfidf_matrix(const DocumentTermMatrix& dtm, WeightingScheme scheme = WeightingScheme::Raw) {
  const auto idf = inverse_document_frequency(dtm);
  std::vector<TermWeights> out;
  out.reserve(dtm.m());
  for (std::size_t row = 0; row < dtm.m(); ++row) {
    TermWeights weighted;
    for (const auto& [term, tf] : term_weights(dtm, row, scheme)) {
      const double w = tf * idf.at(term);
      if (w != 0.0) weighted.emplace(term, w);
    }
    out.push_back(std::move(weighted));
  }
  return out;
}

inline nlohmann::ordered_json dtm_to_json(const DocumentTermMatrix& dtm) {
  nlohmann::ordered_json j;
  j["m"] = dtm.m();
  j["n"] = dtm.n();
  j["doc_ids"] = dtm.doc_ids;
  j["terms"] = dtm.vocabulary.terms();
  j["df"] = dtm.vocabulary.df();
  auto rows = nlohmann::ordered_json::array();
  for (const auto& row : dtm.rows) {
    auto pairs = nlohmann::ordered_json::array();
    for (const auto& [col, count] : row) pairs.push_back({col, count});
    rows.push_back(std::move(pairs));
  }
  j["rows"] = std::move(rows);
  return j;
}

inline DocumentTermMatrix dtm_from_json(const nlohmann::json& j) {
  try {
    DocumentTermMatrix dtm;
    dtm.doc_ids = j.at("doc_ids").get<std::vector<std::string>>();
    dtm.vocabulary =
        Vocabulary(j.at("terms").get<std::vector<std::string>>(), j.at("df").get<std::vector<std::size_t>>());
    for (const auto& pairs : j.at("rows")) {
      SparseRow row;
      for (const auto& p : pairs) {
        const auto col = p.at(0).get<std::size_t>();
        const auto count = p.at(1).get<std::size_t>();
        if (col >= dtm.n() || count == 0) throw InputFormatError("dtm.rows: invalid (column, count) pair");
        row[col] = count;
      }
      dtm.rows.push_back(std::move(row));
    }
    if (dtm.rows.size() != dtm.doc_ids.size()) throw InputFormatError("dtm.rows: length differs from doc_ids");
    return dtm;
  } catch (const nlohmann::json::exception& e) {
    throw InputFormatError(std::string("dtm: ") + e.what());
  } catch (const ArgumentError& e) {
    throw InputFormatError(std::string("dtm.terms: ") + e.what());
  }
}

}  // namespace kmtext
