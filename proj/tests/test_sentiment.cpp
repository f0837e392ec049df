#include <gtest/gtest.h>

#include <random>

#include "kmtext/run_config.hpp"
#include "kmtext/sentiment.hpp"
#include "support/test_support.hpp"

using namespace kmtext;

namespace {

SentimentLexicon small_lexicon() {
  SentimentLexicon lex;
  lex.entries = {{"good", {0.7, 0.6}}, {"bad", {-0.7, 0.667}}};
  lex.negators = {"not"};
  lex.intensifiers = {{"very", 1.3}};
  return lex;
}

void expect_score(const SentimentScore& s, double p, double subj, std::size_t n) {
  EXPECT_NEAR(s.polarity, p, 1e-12);
  EXPECT_NEAR(s.subjectivity, subj, 1e-12);
  EXPECT_EQ(s.assessments, n);
}

}  // namespace

TEST(ScoreSentence, PlainHit) { expect_score(score_sentence({"good"}, small_lexicon()), 0.7, 0.6, 1); }

TEST(ScoreSentence, Negated) { expect_score(score_sentence({"not", "good"}, small_lexicon()), -0.35, 0.6, 1); }

TEST(ScoreSentence, Intensified) { expect_score(score_sentence({"very", "good"}, small_lexicon()), 0.91, 0.78, 1); }

TEST(ScoreSentence, Empty) {
  const auto s = score_sentence({}, small_lexicon());
  EXPECT_EQ(s, SentimentScore{});
}

TEST(ScoreSentence, IntensifierThenNegation) {
  // p = 0.7 * 1.3 = 0.91, then * -0.5.
  expect_score(score_sentence({"not", "very", "good"}, small_lexicon()), -0.455, 0.78, 1);
}

TEST(ScoreSentence, ClampsAfterIntensifying) {
  auto lex = small_lexicon();
  lex.intensifiers["extremely"] = 2.0;
  expect_score(score_sentence({"extremely", "good"}, lex), 1.0, 1.0, 1);
  expect_score(score_sentence({"extremely", "bad"}, lex), -1.0, 1.0, 1);
}

TEST(ScoreSentence, WindowIsThreeTokens) {
  const auto lex = small_lexicon();
  expect_score(score_sentence({"not", "x", "y", "good"}, lex), -0.35, 0.6, 1);
  expect_score(score_sentence({"not", "x", "y", "z", "good"}, lex), 0.7, 0.6, 1);
  expect_score(score_sentence({"very", "x", "y", "z", "good"}, lex), 0.7, 0.6, 1);
}

TEST(ScoreSentence, NearestIntensifierWins) {
  auto lex = small_lexicon();
  lex.intensifiers["slightly"] = 0.5;
  expect_score(score_sentence({"very", "slightly", "good"}, lex), 0.35, 0.3, 1);
  expect_score(score_sentence({"slightly", "very", "good"}, lex), 0.91, 0.78, 1);
}

TEST(ScoreSentence, MeanOverAssessments) {
  expect_score(score_sentence({"good", "and", "bad"}, small_lexicon()), 0.0, (0.6 + 0.667) / 2.0, 2);
}

TEST(ScoreDocument, AggregateIsMeanOfAllAssessments) {
  PreparedDocument p;
  p.doc_id = "d";
  p.sentences = {{"good"}, {"bad"}};
  const auto r = score_document(p, small_lexicon());
  EXPECT_NEAR(r.aggregate.polarity, 0.0, 1e-12);
  ASSERT_EQ(r.series.size(), 2u);
  EXPECT_NEAR(r.series[0].polarity, 0.7, 1e-12);
  EXPECT_NEAR(r.series[1].polarity, -0.7, 1e-12);
}

TEST(ScoreDocument, NotMeanOfSentenceMeans) {
  PreparedDocument p;
  p.sentences = {{"good", "good", "good"}, {"bad"}};
  const auto r = score_document(p, small_lexicon());
  EXPECT_NEAR(r.aggregate.polarity, (0.7 * 3 - 0.7) / 4.0, 1e-12);
  EXPECT_EQ(r.aggregate.assessments, 4u);
}

TEST(ScoreDocument, NoHitsIsFlatZero) {
  PreparedDocument p;
  p.sentences = {{"x"}, {"y", "z"}};
  const auto r = score_document(p, small_lexicon());
  EXPECT_EQ(r.aggregate, SentimentScore{});
  ASSERT_EQ(r.series.size(), 2u);
  for (const auto& s : r.series) EXPECT_EQ(s, SentimentScore{});
}

TEST(ScoreDocument, WindowNeverCrossesSentences) {
  PreparedDocument p;
  p.sentences = {{"not"}, {"good"}};
  EXPECT_NEAR(score_document(p, small_lexicon()).aggregate.polarity, 0.7, 1e-12);
}

TEST(ScoreDocument, ResegmentationInvariantWhenNoWindowCrossesABoundary) {
  PreparedDocument joined, split;
  joined.sentences = {{"good", "x", "y", "z", "not", "bad"}};
  split.sentences = {{"good", "x", "y"}, {"z", "not", "bad"}};
  EXPECT_EQ(score_document(joined, small_lexicon()).aggregate, score_document(split, small_lexicon()).aggregate);
}

TEST(SentimentLaws, RandomSentencesStayInRange) {
  std::mt19937_64 rng(23);
  const auto words = kmtest::synthetic_words(30);
  std::uniform_real_distribution<double> pol(-1.0, 1.0), subj(0.0, 1.0), factor(0.1, 3.0);
  for (int lexicon_trial = 0; lexicon_trial < 10; ++lexicon_trial) {
    SentimentLexicon lex;
    for (std::size_t i = 0; i < 15; ++i) lex.entries[words[i]] = {pol(rng), subj(rng)};
    for (std::size_t i = 15; i < 20; ++i) lex.intensifiers[words[i]] = factor(rng);
    for (std::size_t i = 20; i < 23; ++i) lex.negators.insert(words[i]);
    lex.validate();
    std::uniform_int_distribution<std::size_t> pick(0, words.size() - 1), len(0, 15);
    for (int s = 0; s < 100; ++s) {
      TokenList sentence;
      const auto n = len(rng);
      for (std::size_t i = 0; i < n; ++i) sentence.push_back(words[pick(rng)]);
      const auto score = score_sentence(sentence, lex);
      EXPECT_GE(score.polarity, -1.0);
      EXPECT_LE(score.polarity, 1.0);
      EXPECT_GE(score.subjectivity, 0.0);
      EXPECT_LE(score.subjectivity, 1.0);
      if (score.assessments == 0) {
        EXPECT_EQ(score, SentimentScore{});
      }
    }
  }
}

TEST(SentimentLaws, NegationIsExactlyMinusHalf) {
  std::mt19937_64 rng(29);
  std::uniform_real_distribution<double> pol(-1.0, 1.0);
  for (int i = 0; i < 1000; ++i) {
    SentimentLexicon lex;
    lex.entries["w"] = {pol(rng), 0.5};
    lex.negators = {"not"};
    EXPECT_EQ(score_sentence({"not", "w"}, lex).polarity, -0.5 * score_sentence({"w"}, lex).polarity);
  }
}

TEST(SentimentLaws, AggregateWithinAssessmentBounds) {
  std::mt19937_64 rng(31);
  const auto lex = small_lexicon();
  const TokenList pool = {"good", "bad", "not", "very", "x"};
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1), len(1, 8), nsent(1, 5);
  for (int trial = 0; trial < 300; ++trial) {
    PreparedDocument p;
    const auto k = nsent(rng);
    for (std::size_t s = 0; s < k; ++s) {
      TokenList sentence;
      const auto n = len(rng);
      for (std::size_t i = 0; i < n; ++i) sentence.push_back(pool[pick(rng)]);
      p.sentences.push_back(sentence);
    }
    std::vector<Assessment> all;
    for (const auto& s : p.sentences) {
      const auto a = assess_sentence(s, lex);
      all.insert(all.end(), a.begin(), a.end());
    }
    const auto agg = score_document(p, lex).aggregate;
    if (all.empty()) {
      EXPECT_EQ(agg, SentimentScore{});
      continue;
    }
    double lo = 1, hi = -1, sum = 0;
    for (const auto& a : all) {
      lo = std::min(lo, a.polarity);
      hi = std::max(hi, a.polarity);
      sum += a.polarity;
    }
    EXPECT_GE(agg.polarity, lo - 1e-15);
    EXPECT_LE(agg.polarity, hi + 1e-15);
    EXPECT_NEAR(agg.polarity, sum / static_cast<double>(all.size()), 1e-12);
  }
}

TEST(Lexicon, ParseFormat) {
  const auto lex = parse_lexicon("#window=2\n#negation=-0.25\n# comment\n!Not\n*very, 1.5\nGood,0.7,0.6\n");
  EXPECT_EQ(lex.window, 2u);
  EXPECT_EQ(lex.negation_factor, -0.25);
  EXPECT_TRUE(lex.negators.count("not"));
  EXPECT_EQ(lex.intensifiers.at("very"), 1.5);
  EXPECT_EQ(lex.entries.at("good").polarity, 0.7);
  EXPECT_EQ(lex.entries.at("good").subjectivity, 0.6);
}

TEST(Lexicon, RejectsBadLines) {
  EXPECT_THROW(parse_lexicon("good,2.0,0.5\n"), InputFormatError);
  EXPECT_THROW(parse_lexicon("good,0.5\n"), InputFormatError);
  EXPECT_THROW(parse_lexicon("good,x,0.5\n"), InputFormatError);
  EXPECT_THROW(parse_lexicon("*very,0\n"), InputFormatError);
  EXPECT_THROW(parse_lexicon("!good\ngood,0.1,0.1\n"), InputFormatError);
}

TEST(Lexicon, BundledLexiconLoadsWithDefaults) {
  const auto lex = load_lexicon(kmtest::data_dir() / "lexicon" / "sentiment.csv");
  EXPECT_EQ(lex.window, 3u);
  EXPECT_EQ(lex.negation_factor, -0.5);
  EXPECT_TRUE(lex.negators.count("not"));
  EXPECT_GT(lex.entries.size(), 40u);
  // Modifiers must survive stop-word removal being skipped for sentiment.
  const auto prep = preprocess_document(Document{"d", "The food is not good.", {}}, default_pipeline());
  EXPECT_NEAR(score_document(prep, lex).aggregate.polarity, -0.35, 1e-12);
}
