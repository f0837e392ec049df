#pragma once

// Brute-force reference computations. They work from raw token lists and
// never call into the library they check.

#include <algorithm>
#include <cmath>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace kmtest::oracle {

using Docs = std::vector<std::vector<std::string>>;

inline std::map<std::string, double> tf_raw(const std::vector<std::string>& doc) {
  std::map<std::string, double> tf;
  for (const auto& t : doc) tf[t] += 1.0;
  return tf;
}

inline double idf(const Docs& docs, const std::string& term) {
  double df = 0;
  for (const auto& d : docs) df += std::find(d.begin(), d.end(), term) != d.end() ? 1.0 : 0.0;
  return std::log(static_cast<double>(docs.size()) / df);
}

/// Raw tf-idf per document over every term that occurs in the corpus.
inline std::vector<std::map<std::string, double>> tfidf_raw(const Docs& docs) {
  std::vector<std::map<std::string, double>> out;
  for (const auto& d : docs) {
    std::map<std::string, double> row;
    for (const auto& [t, c] : tf_raw(d)) row[t] = c * idf(docs, t);
    out.push_back(row);
  }
  return out;
}

/// For each document: its types minus the union of every other document's types.
inline std::vector<std::set<std::string>> unique_words(const Docs& docs) {
  std::vector<std::set<std::string>> out;
  for (std::size_t i = 0; i < docs.size(); ++i) {
    std::set<std::string> mine(docs[i].begin(), docs[i].end());
    std::set<std::string> others;
    for (std::size_t j = 0; j < docs.size(); ++j) {
      if (j != i) others.insert(docs[j].begin(), docs[j].end());
    }
    std::set<std::string> diff;
    std::set_difference(mine.begin(), mine.end(), others.begin(), others.end(), std::inserter(diff, diff.end()));
    out.push_back(diff);
  }
  return out;
}

/// Index of the best cosine match (query raw tf x idf against raw tf-idf
/// rows), first index on ties; empty when nothing can be scored.
inline std::optional<std::size_t> cosine_argmax(const Docs& docs, const std::vector<std::string>& query) {
  std::set<std::string> vocab;
  for (const auto& d : docs) vocab.insert(d.begin(), d.end());
  std::map<std::string, double> q;
  for (const auto& t : query) {
    if (vocab.count(t)) q[t] += 1.0;
  }
  double qn = 0;
  for (auto& [t, w] : q) {
    w *= idf(docs, t);
    qn += w * w;
  }
  if (q.empty() || qn == 0.0) return std::nullopt;
  const auto rows = tfidf_raw(docs);
  std::optional<std::size_t> best;
  double best_score = -1.0;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    double dot = 0, dn = 0;
    for (const auto& [t, w] : rows[i]) {
      dn += w * w;
      if (auto it = q.find(t); it != q.end()) dot += w * it->second;
    }
    if (dn == 0.0) continue;
    const double score = std::clamp(dot / (std::sqrt(qn) * std::sqrt(dn)), 0.0, 1.0);
    if (score > best_score) {
      best_score = score;
      best = i;
    }
  }
  return best;
}

}  // namespace kmtest::oracle
