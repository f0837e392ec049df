#pragma once

// Latent Dirichlet allocation fitted by collapsed Gibbs sampling.
//
// Randomness comes from std::mt19937_64 (a fully specified engine) mapped to
// [0, 1) as (x >> 11) * 2^-53, so a seed reproduces a model bit-for-bit on
// any conforming standard library. No std distributions are used because
// their algorithms are implementation-defined.

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "kmtext/error.hpp"
#include "kmtext/vectorspace.hpp"

namespace kmtext {

struct LdaParams {
  std::size_t topics = 2;
  double alpha = 0.1;
  double beta = 0.01;
  std::size_t iterations = 200;
  std::uint64_t seed = 42;

  void validate() const {
    if (topics < 2) throw ArgumentError("lda: topic count must be >= 2");
    if (!(alpha > 0.0) || !(beta > 0.0)) throw ArgumentError("lda: alpha and beta must be > 0");
    if (iterations < 1) throw ArgumentError("lda: iterations must be >= 1");
  }
};

struct TopicModel {
  LdaParams params;
  std::vector<std::string> doc_ids;
  std::vector<std::string> terms;
  std::vector<std::vector<double>> theta;  // [doc][topic]
  std::vector<std::vector<double>> phi;    // [topic][term]
};

class LdaSampler {
 public:
  LdaSampler(const DocumentTermMatrix& dtm, LdaParams params) : params_(params), rng_(params.seed) {
    params_.validate();
    if (dtm.n() == 0) throw ConfigError("lda: empty vocabulary");
    const auto k = params_.topics;
    n_terms_ = dtm.n();
    doc_topic_.assign(dtm.m(), std::vector<std::size_t>(k, 0));
    topic_term_.assign(k, std::vector<std::size_t>(n_terms_, 0));
    topic_total_.assign(k, 0);
    doc_length_.assign(dtm.m(), 0);
    std::size_t token_count = 0;
    for (std::size_t d = 0; d < dtm.m(); ++d) {
      for (const auto& [col, count] : dtm.rows[d]) {
        for (std::size_t c = 0; c < count; ++c) {
          const auto z = static_cast<std::size_t>(uniform() * static_cast<double>(k));
          tokens_.push_back({d, col, std::min(z, k - 1)});
        }
        doc_length_[d] += count;
        token_count += count;
      }
    }
    if (token_count == 0) throw ConfigError("lda: every document row is empty");
    for (const auto& t : tokens_) add(t, 1);
    weights_.resize(k);
  }

  /// One full sweep over every token in corpus order.
  void sweep() {
    const auto k = params_.topics;
    const double beta_total = static_cast<double>(n_terms_) * params_.beta;
    for (auto& t : tokens_) {
      add(t, -1);
      double total = 0.0;
      for (std::size_t topic = 0; topic < k; ++topic) {
        const double w = (static_cast<double>(doc_topic_[t.doc][topic]) + params_.alpha) *
                         (static_cast<double>(topic_term_[topic][t.term]) + params_.beta) /
                         (static_cast<double>(topic_total_[topic]) + beta_total);
        total += w;
        weights_[topic] = total;
      }
      const double u = uniform() * total;
      std::size_t chosen = 0;
      while (chosen + 1 < k && weights_[chosen] <= u) ++chosen;
      t.topic = chosen;
      add(t, 1);
    }
  }

  TopicModel model(const DocumentTermMatrix& dtm) const {
    const auto k = params_.topics;
    TopicModel out;
    out.params = params_;
    out.doc_ids = dtm.doc_ids;
    out.terms = dtm.vocabulary.terms();
    out.theta.assign(doc_topic_.size(), std::vector<double>(k, 0.0));
    for (std::size_t d = 0; d < doc_topic_.size(); ++d) {
      const double denominator = static_cast<double>(doc_length_[d]) + static_cast<double>(k) * params_.alpha;
      for (std::size_t topic = 0; topic < k; ++topic) {
        out.theta[d][topic] = (static_cast<double>(doc_topic_[d][topic]) + params_.alpha) / denominator;
      }
    }
    out.phi.assign(k, std::vector<double>(n_terms_, 0.0));
    const double beta_total = static_cast<double>(n_terms_) * params_.beta;
    for (std::size_t topic = 0; topic < k; ++topic) {
      const double denominator = static_cast<double>(topic_total_[topic]) + beta_total;
      for (std::size_t w = 0; w < n_terms_; ++w) {
        out.phi[topic][w] = (static_cast<double>(topic_term_[topic][w]) + params_.beta) / denominator;
      }
    }
    return out;
  }

  const std::vector<std::vector<std::size_t>>& doc_topic_counts() const { return doc_topic_; }
  const std::vector<std::vector<std::size_t>>& topic_term_counts() const { return topic_term_; }
  const std::vector<std::size_t>& topic_totals() const { return topic_total_; }
  const std::vector<std::size_t>& doc_lengths() const { return doc_length_; }

 private:
  struct TokenAssignment {
    std::size_t doc;
    std::size_t term;
    std::size_t topic;
  };

  double uniform() { return static_cast<double>(rng_() >> 11) * 0x1.0p-53; }

  void add(const TokenAssignment& t, int delta) {
    const auto apply = [delta](std::size_t& v) { v = delta > 0 ? v + 1 : v - 1; };
    apply(doc_topic_[t.doc][t.topic]);
    apply(topic_term_[t.topic][t.term]);
    apply(topic_total_[t.topic]);
  }

  LdaParams params_;
  std::mt19937_64 rng_;
  std::size_t n_terms_ = 0;
  std::vector<TokenAssignment> tokens_;
  std::vector<std::vector<std::size_t>> doc_topic_;
  std::vector<std::vector<std::size_t>> topic_term_;
  std::vector<std::size_t> topic_total_;
  std::vector<std::size_t> doc_length_;
  std::vector<double> weights_;
};

/// Estimates come from the final sweep's state only (no sample averaging).
inline TopicModel fit_lda(const DocumentTermMatrix& dtm, const LdaParams& params) {
  LdaSampler sampler(dtm, params);
  for (std::size_t i = 0; i < params.iterations; ++i) sampler.sweep();
  return sampler.model(dtm);
}

using TopicTerms = std::vector<std::pair<std::string, double>>;

/// Per topic, the k highest-phi terms (ties lexicographic).
inline std::vector<TopicTerms> top_topic_terms(const TopicModel& model, std::size_t k) {
  if (k == 0) throw ArgumentError("top_topic_terms: k must be >= 1");
  std::vector<TopicTerms> out;
  for (const auto& row : model.phi) {
    std::vector<std::size_t> order(row.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      return row[a] != row[b] ? row[a] > row[b] : model.terms[a] < model.terms[b];
    });
    TopicTerms terms;
    for (std::size_t i = 0; i < std::min(k, order.size()); ++i) terms.emplace_back(model.terms[order[i]], row[order[i]]);
    out.push_back(std::move(terms));
  }
  return out;
}

/// argmax_k theta[d][k], lowest topic index on ties.
inline std::vector<std::size_t> dominant_topics(const TopicModel& model) {
  std::vector<std::size_t> out;
  for (const auto& row : model.theta) {
    out.push_back(static_cast<std::size_t>(std::max_element(row.begin(), row.end()) - row.begin()));
  }
  return out;
}

inline nlohmann::ordered_json topic_model_to_json(const TopicModel& model, std::size_t top_k = 10) {
  nlohmann::ordered_json j;
  j["topics"] = model.params.topics;
  j["alpha"] = model.params.alpha;
  j["beta"] = model.params.beta;
  j["iterations"] = model.params.iterations;
  j["seed"] = model.params.seed;
  j["doc_ids"] = model.doc_ids;
  j["terms"] = model.terms;
  j["theta"] = model.theta;
  j["phi"] = model.phi;
  auto summary = nlohmann::ordered_json::array();
  for (const auto& topic : top_topic_terms(model, top_k)) {
    auto terms = nlohmann::ordered_json::array();
    for (const auto& [term, weight] : topic) terms.push_back({{"term", term}, {"phi", weight}});
    summary.push_back(std::move(terms));
  }
  j["top_terms"] = std::move(summary);
  return j;
}

}  // namespace kmtext
