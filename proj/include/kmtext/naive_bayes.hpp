#pragma once

#include <cmath>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "kmtext/error.hpp"
#include "kmtext/vectorspace.hpp"

namespace kmtext {

/// Multinomial naive Bayes with Laplace/Lidstone smoothing.
struct NBModel {
  std::vector<std::string> classes;                 // ascending
  std::vector<double> log_priors;                   // per class
  std::vector<std::vector<double>> log_likelihood;  // [class][column]
  Vocabulary vocabulary;
  double alpha = 1.0;
};

struct Classification {
  std::string label;
  std::map<std::string, double> log_posteriors;  // unnormalized: log prior + log likelihood
};

inline NBModel train_naive_bayes(const DocumentTermMatrix& dtm, const std::map<std::string, std::string>& labels,
                                 double alpha = 1.0) {
  if (!(alpha > 0.0)) throw ConfigError("naive bayes: alpha must be > 0");
  if (dtm.m() == 0) throw ConfigError("naive bayes: no training documents");
  std::vector<std::string> row_labels;
  row_labels.reserve(dtm.m());
  std::set<std::string> classes;
  for (const auto& id : dtm.doc_ids) {
    const auto it = labels.find(id);
    if (it == labels.end()) throw ConfigError("naive bayes: document '" + id + "' has no label");
    row_labels.push_back(it->second);
    classes.insert(it->second);
  }
  if (classes.size() < 2) throw ConfigError("naive bayes: need at least two classes");

  NBModel model;
  model.classes.assign(classes.begin(), classes.end());
  model.vocabulary = dtm.vocabulary;
  model.alpha = alpha;
  const auto n = dtm.n();
  const auto k = model.classes.size();
  std::map<std::string, std::size_t> class_index;
  for (std::size_t c = 0; c < k; ++c) class_index[model.classes[c]] = c;

  std::vector<std::size_t> doc_count(k, 0);
  std::vector<std::vector<double>> counts(k, std::vector<double>(n, 0.0));
  std::vector<double> totals(k, 0.0);
  for (std::size_t row = 0; row < dtm.m(); ++row) {
    const auto c = class_index[row_labels[row]];
    ++doc_count[c];
    for (const auto& [col, count] : dtm.rows[row]) {
      counts[c][col] += static_cast<double>(count);
      totals[c] += static_cast<double>(count);
    }
  }

  const auto m = static_cast<double>(dtm.m());
  model.log_priors.resize(k);
  model.log_likelihood.assign(k, std::vector<double>(n, 0.0));
  for (std::size_t c = 0; c < k; ++c) {
    model.log_priors[c] = std::log(static_cast<double>(doc_count[c]) / m);
    const double denominator = totals[c] + alpha * static_cast<double>(n);
    for (std::size_t col = 0; col < n; ++col) {
      model.log_likelihood[c][col] = std::log((counts[c][col] + alpha) / denominator);
    }
  }
  return model;
}

/// Argmax of log prior + sum(count * log likelihood); out-of-vocabulary
/// terms are ignored. Ties go to the lexicographically smallest label.
inline Classification classify(const NBModel& model, const std::map<std::string, std::size_t>& doc_counts) {
  Classification result;
  std::size_t best = 0;
  std::vector<double> scores(model.classes.size());
  for (std::size_t c = 0; c < model.classes.size(); ++c) {
    double score = model.log_priors[c];
    for (const auto& [term, count] : doc_counts) {
      if (const auto col = model.vocabulary.index_of(term)) {
        score += static_cast<double>(count) * model.log_likelihood[c][*col];
      }
    }
    scores[c] = score;
    result.log_posteriors[model.classes[c]] = score;
    if (score > scores[best]) best = c;  // strict: earlier (smaller) label wins ties
  }
  result.label = model.classes[best];
  return result;
}

inline std::map<std::string, std::size_t> count_tokens(const TokenList& tokens) {
  std::map<std::string, std::size_t> counts;
  for (const auto& t : tokens) ++counts[t];
  return counts;
}

}  // namespace kmtext
