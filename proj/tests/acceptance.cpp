// Acceptance suite: one PASS/FAIL line per criterion. Exit status is the
// number of failed criteria (0 when everything passes).

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>

#include "kmtext/cli/commands.hpp"
#include "kmtext/kmtext.hpp"
#include "support/oracles.hpp"
#include "support/test_support.hpp"

using namespace kmtext;
namespace fs = std::filesystem;

namespace {

constexpr double kTfidfTolerance = 1e-9;
constexpr double kRowSumTolerance = 1e-12;
constexpr double kAggregateTolerance = 1e-12;
constexpr double kNaiveBayesTolerance = 1e-9;
constexpr double kLdaRowTolerance = 1e-9;
constexpr double kTfidfSeconds = 5.0;
constexpr double kLdaSeconds = 10.0;
constexpr double kEndToEndSeconds = 30.0;
constexpr int kRandomCorpora = 200;

/// Collects the first few failure notes of a criterion.
class Check {
 public:
  void expect(bool ok, const std::string& note) {
    if (ok) return;
    ++failures_;
    if (notes_.size() < 3) notes_.push_back(note);
  }
  bool ok() const { return failures_ == 0; }
  std::string summary() const {
    std::string s;
    for (const auto& n : notes_) s += (s.empty() ? "" : "; ") + n;
    if (failures_ > notes_.size()) s += " (+" + std::to_string(failures_ - notes_.size()) + " more)";
    return s;
  }

 private:
  std::size_t failures_ = 0;
  std::vector<std::string> notes_;
};

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::string fmt(double v) {
  std::ostringstream s;
  s.precision(3);
  s << v;
  return s.str();
}

DocumentTermMatrix dtm_of(const std::vector<PreparedDocument>& prepared) {
  return build_dtm(prepared, build_vocabulary(prepared));
}

bool has_tokens(const kmtest::TokenCorpus& docs) {
  return std::any_of(docs.begin(), docs.end(), [](const auto& d) { return !d.empty(); });
}

std::map<std::string, std::string> tree_contents(const fs::path& root) {
  std::map<std::string, std::string> out;
  for (const auto& e : fs::recursive_directory_iterator(root)) {
    if (e.is_regular_file()) out[fs::relative(e.path(), root).generic_string()] = read_file(e.path());
  }
  return out;
}

// 1 -------------------------------------------------------------------------

void tfidf_oracle(Check& c) {
  const auto start = std::chrono::steady_clock::now();
  std::mt19937_64 rng(1001);
  int corpora = 0;
  while (corpora < kRandomCorpora) {
    const auto docs = kmtest::random_token_corpus(rng, 10, 50, 30);
    if (!has_tokens(docs)) continue;
    ++corpora;
    const auto dtm = dtm_of(kmtest::prepared_corpus(docs));
    const auto tfidf = tfidf_matrix(dtm, WeightingScheme::Raw);
    const auto expected = kmtest::oracle::tfidf_raw(docs);
    for (std::size_t i = 0; i < docs.size(); ++i) {
      for (const auto& [t, w] : expected[i]) {
        const double got = tfidf[i].count(t) ? tfidf[i].at(t) : 0.0;
        c.expect(std::abs(got - w) <= kTfidfTolerance, "tf-idf mismatch for " + t);
      }
      for (const auto& [t, w] : tfidf[i]) c.expect(expected[i].count(t) > 0, "unexpected term " + t);
      if (dtm.rows[i].empty()) continue;
      double sum = 0, max = 0;
      for (const auto& [t, w] : term_weights(dtm, i, WeightingScheme::Relative)) sum += w;
      for (const auto& [t, w] : term_weights(dtm, i, WeightingScheme::Augmented)) max = std::max(max, w);
      c.expect(std::abs(sum - 1.0) <= kRowSumTolerance, "relative row sum " + fmt(sum));
      c.expect(max == 1.0, "augmented max " + fmt(max));
    }
  }
  const double elapsed = seconds_since(start);
  c.expect(elapsed < kTfidfSeconds, "took " + fmt(elapsed) + " s");
}

// 2 -------------------------------------------------------------------------

void dtm_shape(Check& c) {
  const auto prepared = kmtest::fixture_prepared();
  const auto dtm = dtm_of(prepared);
  c.expect(dtm.m() == 10, "m = " + std::to_string(dtm.m()));
  c.expect(dtm.n() == dtm.vocabulary.size() && dtm.n() > 0, "n mismatch");
  for (std::size_t r = 0; r < dtm.m(); ++r) {
    std::size_t in_vocab = 0;
    for (const auto& t : prepared[r].content_tokens) in_vocab += dtm.vocabulary.index_of(t).has_value();
    c.expect(dtm.row_sum(r) == in_vocab, "row " + std::to_string(r) + " sum");
    for (const auto& [col, count] : dtm.rows[r]) c.expect(col < dtm.n() && count > 0, "bad cell");
  }
}

// 3 -------------------------------------------------------------------------

void porter_reference(Check& c) {
  std::ifstream in(kmtest::test_data_dir() / "porter_pairs.txt");
  std::size_t pairs = 0;
  for (std::string line; std::getline(in, line);) {
    if (line.empty() || line[0] == '#') continue;
    const auto tab = line.find('\t');
    const auto word = line.substr(0, tab), expected = line.substr(tab + 1);
    ++pairs;
    c.expect(stem(word) == expected, word + " -> " + stem(word) + " (want " + expected + ")");
  }
  c.expect(pairs == 100, "found " + std::to_string(pairs) + " pairs");
}

// 4 -------------------------------------------------------------------------

void sentiment_laws(Check& c) {
  std::mt19937_64 rng(1004);
  const auto words = kmtest::synthetic_words(40);
  std::uniform_real_distribution<double> pol(-1.0, 1.0), unit(0.0, 1.0), factor(0.1, 3.0);
  SentimentLexicon lex;
  for (std::size_t i = 0; i < 20; ++i) lex.entries[words[i]] = {pol(rng), unit(rng)};
  for (std::size_t i = 20; i < 26; ++i) lex.intensifiers[words[i]] = factor(rng);
  for (std::size_t i = 26; i < 30; ++i) lex.negators.insert(words[i]);
  lex.validate();

  std::uniform_int_distribution<std::size_t> pick(0, words.size() - 1), len(0, 20);
  std::vector<TokenList> sentences;
  for (int s = 0; s < 1000; ++s) {
    TokenList sentence;
    const auto n = len(rng);
    for (std::size_t i = 0; i < n; ++i) sentence.push_back(words[pick(rng)]);
    const auto score = score_sentence(sentence, lex);
    c.expect(score.polarity >= -1.0 && score.polarity <= 1.0, "polarity out of range");
    c.expect(score.subjectivity >= 0.0 && score.subjectivity <= 1.0, "subjectivity out of range");
    sentences.push_back(std::move(sentence));
  }

  for (std::size_t i = 0; i < 20; ++i) {
    const auto& w = words[i];
    for (const auto& neg : lex.negators) {
      const double plain = score_sentence({w}, lex).polarity;
      const double negated = score_sentence({neg, w}, lex).polarity;
      c.expect(negated == -0.5 * plain, "negation law for " + w);
    }
  }

  for (std::size_t d = 0; d + 5 <= sentences.size(); d += 5) {
    PreparedDocument doc;
    doc.sentences.assign(sentences.begin() + static_cast<long>(d), sentences.begin() + static_cast<long>(d + 5));
    double sum = 0;
    std::size_t n = 0;
    for (const auto& s : doc.sentences) {
      for (const auto& a : assess_sentence(s, lex)) {
        sum += a.polarity;
        ++n;
      }
    }
    const double expected = n ? sum / static_cast<double>(n) : 0.0;
    c.expect(std::abs(score_document(doc, lex).aggregate.polarity - expected) <= kAggregateTolerance,
             "aggregate is not the mean of assessments");
  }
}

// 5 -------------------------------------------------------------------------

void profanity_pattern(Check& c) {
  const auto patterns = load_profanity_patterns(kmtest::data_dir() / "profanity.txt");
  const auto prepared = kmtest::fixture_prepared();
  std::vector<std::pair<std::string, double>> radar;
  std::vector<std::size_t> counts;
  for (const auto& p : prepared) {
    TokenList flat;
    for (const auto& s : p.sentences) flat.insert(flat.end(), s.begin(), s.end());
    const auto n = profanity_count(flat, patterns).count;
    counts.push_back(n);
    radar.emplace_back(p.doc_id, static_cast<double>(n));
  }
  auto sorted = counts;
  std::sort(sorted.rbegin(), sorted.rend());
  c.expect(sorted == std::vector<std::size_t>({4, 1, 1, 0, 0, 0, 0, 0, 0, 0}), "plant not reproduced");
  c.expect(counts.size() == 10 && counts[4] == 4, "student_5 does not hold the count of 4");

  const auto doc = kmtest::parse_xml(svg::render_radar(radar));
  c.expect(kmtest::by_class(doc, "axis").size() == 10, "radar does not have 10 axes");
  const auto vertices = kmtest::by_class(doc, "vertex");
  std::string farthest;
  double best = -1;
  for (const auto* v : vertices) {
    const double r = std::hypot(std::stod(kmtest::attribute(*v, "cx")) - 400, std::stod(kmtest::attribute(*v, "cy")) - 300);
    if (r > best) {
      best = r;
      farthest = kmtest::attribute(*v, "data-label");
    }
  }
  c.expect(farthest == "student_5", "max-radius vertex is " + farthest);
}

// 6 -------------------------------------------------------------------------

void unique_word_oracle(Check& c) {
  std::mt19937_64 rng(1006);
  for (int trial = 0; trial < kRandomCorpora; ++trial) {
    const auto docs = kmtest::random_token_corpus(rng, 10, 50, 30);
    const auto prepared = kmtest::prepared_corpus(docs);
    const auto got = unique_word_counts(prepared);
    const auto expected = kmtest::oracle::unique_words(docs);
    for (std::size_t i = 0; i < docs.size(); ++i) {
      const auto& u = got.at(prepared[i].doc_id);
      c.expect(u.words == expected[i] && u.count == expected[i].size(), "trial " + std::to_string(trial));
    }
  }
}

// 7 -------------------------------------------------------------------------

void naive_bayes(Check& c) {
  const auto hand = kmtest::prepared_corpus({{"a", "a", "b"}, {"b", "c", "c"}});
  const auto model = train_naive_bayes(dtm_of(hand), {{"d1", "A"}, {"d2", "B"}}, 1.0);
  const std::vector<std::vector<double>> expected = {{3.0 / 6, 2.0 / 6, 1.0 / 6}, {1.0 / 6, 2.0 / 6, 3.0 / 6}};
  for (std::size_t k = 0; k < 2; ++k) {
    for (std::size_t t = 0; t < 3; ++t) {
      c.expect(std::abs(std::exp(model.log_likelihood[k][t]) - expected[k][t]) <= kNaiveBayesTolerance,
               "likelihood mismatch");
    }
  }
  c.expect(classify(model, {{"a", 1}}).label == "A", "hand classify");

  const auto prepared = preprocess_corpus(kmtest::classify_corpus(), default_pipeline());
  std::map<std::string, std::string> labels;
  std::istringstream csv(read_file(kmtest::data_dir() / "classify" / "labels.csv"));
  std::string line;
  std::getline(csv, line);
  while (std::getline(csv, line)) {
    const auto comma = line.find(',');
    if (comma != std::string::npos) labels[line.substr(0, comma)] = line.substr(comma + 1);
  }
  std::vector<PreparedDocument> train;
  for (const auto& p : prepared) {
    if (labels.count(p.doc_id)) train.push_back(p);
  }
  const auto fixture_model = train_naive_bayes(dtm_of(train), labels);
  std::size_t right = 0;
  for (const auto& p : train) right += classify(fixture_model, count_tokens(p.content_tokens)).label == labels.at(p.doc_id);
  c.expect(!train.empty() && right == train.size(),
           "re-classified " + std::to_string(right) + "/" + std::to_string(train.size()));
}

// 8 -------------------------------------------------------------------------

void retrieval_argmax(Check& c) {
  std::mt19937_64 rng(1008);
  const auto words = kmtest::synthetic_words(50);
  int corpora = 0;
  while (corpora < kRandomCorpora) {
    const auto docs = kmtest::random_token_corpus(rng, 10, 50, 30);
    if (!has_tokens(docs)) continue;
    ++corpora;
    std::vector<std::string> query;
    const auto qlen = std::uniform_int_distribution<std::size_t>(1, 4)(rng);
    std::string text;
    for (std::size_t i = 0; i < qlen; ++i) {
      query.push_back(words[std::uniform_int_distribution<std::size_t>(0, words.size() - 1)(rng)]);
      text += query.back() + " ";
    }
    const auto hits = rank_documents(text, dtm_of(kmtest::prepared_corpus(docs)), default_pipeline()).hits;
    const auto expected = kmtest::oracle::cosine_argmax(docs, query);
    if (!expected) {
      c.expect(hits.empty(), "hits without a scorable query");
    } else {
      c.expect(!hits.empty() && hits[0].row == *expected, "corpus " + std::to_string(corpora) + " top-1 differs");
    }
  }
}

// 9 -------------------------------------------------------------------------

void lda(Check& c) {
  const auto start = std::chrono::steady_clock::now();
  const auto dtm = dtm_of(kmtest::prepared_corpus(kmtest::planted_two_block_corpus()));
  LdaParams params;
  params.topics = 2;
  params.alpha = 0.1;
  params.beta = 0.01;
  params.iterations = 200;
  params.seed = 42;
  const auto a = fit_lda(dtm, params);
  const auto b = fit_lda(dtm, params);
  c.expect(a.theta == b.theta && a.phi == b.phi, "same seed gave different models");
  for (const auto* rows : {&a.theta, &a.phi}) {
    for (const auto& row : *rows) {
      const double sum = std::accumulate(row.begin(), row.end(), 0.0);
      c.expect(std::abs(sum - 1.0) <= kLdaRowTolerance, "row sum " + fmt(sum));
    }
  }
  const auto dominant = dominant_topics(a);
  std::size_t identity = 0;
  for (std::size_t d = 0; d < dominant.size(); ++d) identity += dominant[d] == (d < 5 ? 0u : 1u);
  const auto separated = std::max(identity, dominant.size() - identity);
  c.expect(separated >= 9, "separated " + std::to_string(separated) + "/10");
  const double elapsed = seconds_since(start);
  c.expect(elapsed < kLdaSeconds, "took " + fmt(elapsed) + " s");
}

// 10 ------------------------------------------------------------------------

void knowledge_sink(Check& c) {
  kmtest::TempDir dir;
  const auto store = dir / "store.jsonl";
  const auto at = [](long s) { return Timestamp(Timestamp::clock_point(std::chrono::seconds(1'700'000'000 + s))); };

  const auto r = make_record(RecordKind::Profanity, {{"count", 4}}, {"b", "a", "kmtext"}, "corpus", at(0));
  c.expect(append_record(store, r), "first append refused");
  c.expect(!append_record(store, r), "second append not a no-op");
  c.expect(read_store(store).size() == 1, "store holds copies");
  c.expect(make_record(RecordKind::Profanity, {{"count", 4}}, {"kmtext", "a", "b"}, "corpus", at(9)).id == r.id,
           "tag permutation changed the id");

  std::mt19937_64 rng(1010);
  const std::vector<std::string> tag_pool = {"a", "b", "c", "d"};
  std::uniform_int_distribution<std::size_t> kind_pick(0, kRecordKindNames.size() - 1), tag_pick(0, 3), ntags(0, 3);
  std::uniform_int_distribution<long> when(0, 100);
  std::vector<KnowledgeRecord> all = {r};
  for (int i = 0; i < 60; ++i) {
    std::vector<std::string> tags;
    for (std::size_t t = ntags(rng); t > 0; --t) tags.push_back(tag_pool[tag_pick(rng)]);
    auto rec = make_record(kRecordKindNames[kind_pick(rng)].first, {{"i", i}}, tags, "corpus", at(when(rng)));
    if (append_record(store, rec)) all.push_back(std::move(rec));
  }
  for (const auto& stored : read_store(store)) {
    c.expect(record_content_id(stored.kind, stored.source_corpus, stored.tags, stored.payload) == stored.id,
             "record does not re-hash to its id");
  }
  for (int trial = 0; trial < 100; ++trial) {
    RecordFilter f;
    if (rng() % 2) f.kinds = std::set<RecordKind>{kRecordKindNames[kind_pick(rng)].first, kRecordKindNames[kind_pick(rng)].first};
    if (rng() % 2) f.tags_any = std::set<std::string>{tag_pool[tag_pick(rng)]};
    if (rng() % 2) f.after = at(when(rng));
    if (rng() % 2) f.before = at(when(rng));
    std::vector<KnowledgeRecord> expected;
    for (const auto& rec : all) {
      bool ok = !f.kinds || f.kinds->count(rec.kind);
      if (f.tags_any) {
        ok = ok && std::any_of(rec.tags.begin(), rec.tags.end(), [&](const auto& t) { return f.tags_any->count(t) > 0; });
      }
      if (f.after) ok = ok && rec.created_at > *f.after;
      if (f.before) ok = ok && rec.created_at < *f.before;
      if (ok) expected.push_back(rec);
    }
    c.expect(query_records(store, f) == expected, "query disagrees with scan");
  }
}

// 11 and 12 share one pipeline run ------------------------------------------

struct PipelineRun {
  kmtest::TempDir dir;
  std::vector<std::string> failures;

  void run(const std::vector<std::string>& args) {
    const auto r = kmtest::run_cli(args, kmtest::source_dir(), "2024-05-01T12:00:00Z");
    if (r.exit_code != 0) failures.push_back(args[0] + " exited " + std::to_string(r.exit_code) + ": " + r.err);
  }

  void full() {
    const auto d = dir.path().string();
    run({"ingest", "data/fixture", "-o", d + "/corpus.json"});
    run({"analyze", d + "/corpus.json", "-c", "data/config.json", "-o", d + "/results"});
    run({"report", d + "/results", "-o", d + "/charts"});
    run({"export", d + "/results", "--store", d + "/kms/store.jsonl", "--outbox", d + "/kms/outbox"});
  }
};

void end_to_end(Check& c, const PipelineRun& first, double first_seconds) {
  const auto start = std::chrono::steady_clock::now();
  PipelineRun second;
  second.full();
  const double total = first_seconds + seconds_since(start);
  for (const auto& f : first.failures) c.expect(false, f);
  for (const auto& f : second.failures) c.expect(false, f);
  const auto a = tree_contents(first.dir.path());
  const auto b = tree_contents(second.dir.path());
  c.expect(a.size() >= 1 + 7 + 5 + 1 + 7, "output tree has " + std::to_string(a.size()) + " files");
  c.expect(a == b, "output trees differ");
  c.expect(total < kEndToEndSeconds, "took " + fmt(total) + " s");
}

void rendering(Check& c, const PipelineRun& run) {
  const auto charts = run.dir / "charts";
  for (const char* name : {cli::charts::kRadar, cli::charts::kWordcloud, cli::charts::kUniqueWords,
                           cli::charts::kScatter, cli::charts::kTimeseries}) {
    try {
      const auto doc = kmtest::parse_xml(read_file(charts / name));
      c.expect(doc.count("svg") == 1, std::string(name) + " has no svg root");
    } catch (const std::exception& e) {
      c.expect(false, std::string(name) + ": " + e.what());
    }
  }
  const auto series = kmtest::parse_xml(read_file(charts / cli::charts::kTimeseries));
  const auto panels = kmtest::by_class(series, "panel");
  c.expect(panels.size() == 10, "time series has " + std::to_string(panels.size()) + " panels");
  for (const auto* panel : panels) c.expect(kmtest::by_class(*panel, "zero-line").size() == 1, "panel zero lines != 1");

  const auto freqs_json = nlohmann::json::parse(read_file(run.dir / "results" / cli::results::kFrequencies));
  std::vector<std::pair<std::string, std::size_t>> freqs;
  for (const auto& t : freqs_json.at("terms")) freqs.emplace_back(t.at("term"), t.at("count"));
  const auto cloud = kmtest::parse_xml(read_file(charts / cli::charts::kWordcloud));
  c.expect(kmtest::by_class(cloud, "word").size() == freqs.size(), "word cloud word count");
  const auto placed = svg::layout_wordcloud(freqs);
  for (std::size_t i = 0; i < placed.size(); ++i) {
    for (std::size_t j = i + 1; j < placed.size(); ++j) {
      const auto& p = placed[i].box;
      const auto& q = placed[j].box;
      const bool disjoint = p.x + p.w <= q.x || q.x + q.w <= p.x || p.y + p.h <= q.y || q.y + q.h <= p.y;
      c.expect(disjoint, placed[i].term + " overlaps " + placed[j].term);
    }
  }
}

}  // namespace

int main() {
  int failed = 0;
  auto report = [&](int n, const std::string& title, const std::function<void(Check&)>& body) {
    Check c;
    try {
      body(c);
    } catch (const std::exception& e) {
      c.expect(false, std::string("exception: ") + e.what());
    }
    std::printf("criterion %2d: %s  %s%s%s\n", n, c.ok() ? "PASS" : "FAIL", title.c_str(), c.ok() ? "" : "  -- ",
                c.summary().c_str());
    std::fflush(stdout);
    failed += !c.ok();
  };

  report(1, "tf-idf matches brute-force oracle", tfidf_oracle);
  report(2, "fixture DTM shape and row sums", dtm_shape);
  report(3, "Porter stemmer reference pairs", porter_reference);
  report(4, "sentiment range, negation and aggregate laws", sentiment_laws);
  report(5, "fixture profanity pattern and radar", profanity_pattern);
  report(6, "unique words match set-difference oracle", unique_word_oracle);
  report(7, "naive Bayes hand example and fixture accuracy", naive_bayes);
  report(8, "retrieval top-1 matches cosine argmax", retrieval_argmax);
  report(9, "LDA normalization, determinism and separation", lda);
  report(10, "knowledge sink idempotence, ids and queries", knowledge_sink);

  PipelineRun first;
  const auto start = std::chrono::steady_clock::now();
  first.full();
  const double first_seconds = seconds_since(start);
  report(11, "end-to-end CLI runs are byte-identical", [&](Check& c) { end_to_end(c, first, first_seconds); });
  report(12, "charts are well formed with zero lines and disjoint words", [&](Check& c) { rendering(c, first); });
  return failed;
}
