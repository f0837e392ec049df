#include <gtest/gtest.h>

#include <fstream>

#include "kmtext/porter.hpp"
#include "support/test_support.hpp"

using kmtext::stem;

namespace {

std::vector<std::pair<std::string, std::string>> reference_pairs() {
  std::ifstream in(kmtest::test_data_dir() / "porter_pairs.txt");
  std::vector<std::pair<std::string, std::string>> pairs;
  for (std::string line; std::getline(in, line);) {
    if (line.empty() || line[0] == '#') continue;
    const auto tab = line.find('\t');
    pairs.emplace_back(line.substr(0, tab), line.substr(tab + 1));
  }
  return pairs;
}

}  // namespace

TEST(Porter, ReferenceVocabulary) {
  const auto pairs = reference_pairs();
  ASSERT_EQ(pairs.size(), 100u);
  for (const auto& [word, expected] : pairs) EXPECT_EQ(stem(word), expected) << word;
}

TEST(Porter, DocumentedExamples) {
  EXPECT_EQ(stem("caresses"), "caress");
  EXPECT_EQ(stem("running"), "run");
  EXPECT_EQ(stem("sky"), "sky");
}

TEST(Porter, ClassicStepTraces) {
  // Step 1a-1c.
  EXPECT_EQ(stem("ponies"), "poni");
  EXPECT_EQ(stem("cats"), "cat");
  EXPECT_EQ(stem("feed"), "feed");
  EXPECT_EQ(stem("agreed"), "agre");
  EXPECT_EQ(stem("plastered"), "plaster");
  EXPECT_EQ(stem("motoring"), "motor");
  EXPECT_EQ(stem("sing"), "sing");
  EXPECT_EQ(stem("conflated"), "conflat");
  EXPECT_EQ(stem("hopping"), "hop");
  EXPECT_EQ(stem("falling"), "fall");
  EXPECT_EQ(stem("filing"), "file");
  EXPECT_EQ(stem("happy"), "happi");
  // Steps 2-5.
  EXPECT_EQ(stem("relational"), "relat");
  EXPECT_EQ(stem("hopefulness"), "hope");
  EXPECT_EQ(stem("adoption"), "adopt");
  EXPECT_EQ(stem("controll"), "control");
  EXPECT_EQ(stem("roll"), "roll");
  EXPECT_EQ(stem("probate"), "probat");
  EXPECT_EQ(stem("rate"), "rate");
}

TEST(Porter, ShortWordsUntouched) {
  for (const char* w : {"", "a", "is", "as", "us"}) EXPECT_EQ(stem(w), w);
}

TEST(Porter, NeverLengthens) {
  for (const auto& [word, expected] : reference_pairs()) {
    EXPECT_LE(stem(word).size(), word.size()) << word;
    EXPECT_LE(stem(expected).size(), expected.size()) << expected;
  }
}

// The 1980 rules are not idempotent: re-stemming a stem can strip more.
// Exactness wins, so this pins the algorithm's real behaviour.
TEST(Porter, RestemmingFollowsTheRulesNotIdempotence) {
  EXPECT_EQ(stem("agreed"), "agre");
  EXPECT_EQ(stem("agre"), "agr");
  EXPECT_EQ(stem("cease"), "ceas");
  EXPECT_EQ(stem("ceas"), "cea");
}
