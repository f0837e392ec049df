#pragma once

#include <algorithm>
#include <cmath>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "kmtext/textprep.hpp"
#include "kmtext/vectorspace.hpp"

namespace kmtext {

struct SearchHit {
  std::string doc_id;
  double score = 0.0;  // cosine similarity, [0, 1]
  std::size_t row = 0;
};

struct SearchResult {
  std::vector<SearchHit> hits;  // score descending, ties by corpus order
  /// The query had no in-vocabulary token, so nothing could be scored.
  bool no_query_terms = false;
};

/// Cosine similarity between the query (raw tf x corpus idf) and each
/// document's Raw tf-idf row. Zero-norm documents are left out.
inline SearchResult rank_documents(std::string_view query, const DocumentTermMatrix& dtm, const PipelineConfig& cfg) {
  SearchResult result;
  const Document query_doc{"query", std::string(query), {}};
  const auto prepared = preprocess_document(query_doc, cfg);

  const auto idf = idf_by_column(dtm);
  std::map<std::size_t, double> q;
  bool any_in_vocab = false;
  for (const auto& t : prepared.content_tokens) {
    if (const auto col = dtm.vocabulary.index_of(t)) {
      q[*col] += 1.0;
      any_in_vocab = true;
    }
  }
  if (!any_in_vocab) {
    result.no_query_terms = true;
    return result;
  }
  double q_norm2 = 0.0;
  for (auto& [col, w] : q) {
    w *= idf[col];
    q_norm2 += w * w;
  }
  if (q_norm2 == 0.0) return result;  // every query term occurs in every document
  const double q_norm = std::sqrt(q_norm2);

  for (std::size_t row = 0; row < dtm.m(); ++row) {
    double dot = 0.0, d_norm2 = 0.0;
    for (const auto& [col, count] : dtm.rows[row]) {
      const double w = static_cast<double>(count) * idf[col];
      d_norm2 += w * w;
      if (const auto it = q.find(col); it != q.end()) dot += w * it->second;
    }
    if (d_norm2 == 0.0) continue;
    const double score = std::clamp(dot / (q_norm * std::sqrt(d_norm2)), 0.0, 1.0);
    result.hits.push_back({dtm.doc_ids[row], score, row});
  }
  std::stable_sort(result.hits.begin(), result.hits.end(),
                   [](const SearchHit& a, const SearchHit& b) { return a.score > b.score; });
  return result;
}

}  // namespace kmtext
