#pragma once

#include <algorithm>
#include <filesystem>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "kmtext/error.hpp"
#include "kmtext/fileio.hpp"
#include "kmtext/text_util.hpp"
#include "kmtext/textprep.hpp"

namespace kmtext {

struct LexiconEntry {
  double polarity = 0.0;      // [-1, 1]
  double subjectivity = 0.0;  // [0, 1]
};

/// Surface-form sentiment lexicon with negators and intensifiers.
struct SentimentLexicon {
  std::map<std::string, LexiconEntry> entries;
  std::set<std::string> negators;
  std::map<std::string, double> intensifiers;  // factor > 0
  std::size_t window = 3;                      // look-back, in tokens
  double negation_factor = -0.5;

  void validate() const {
    for (const auto& [term, e] : entries) {
      if (!(e.polarity >= -1.0 && e.polarity <= 1.0) || !(e.subjectivity >= 0.0 && e.subjectivity <= 1.0)) {
        throw InputFormatError("lexicon: entry '" + term + "' out of bounds");
      }
      if (negators.count(term) != 0 || intensifiers.count(term) != 0) {
        throw InputFormatError("lexicon: '" + term + "' is both an entry and a modifier");
      }
    }
    for (const auto& [term, f] : intensifiers) {
      if (!(f > 0.0)) throw InputFormatError("lexicon: intensifier '" + term + "' needs a positive factor");
    }
  }
};

struct SentimentScore {
  double polarity = 0.0;
  double subjectivity = 0.0;
  std::size_t assessments = 0;

  friend bool operator==(const SentimentScore&, const SentimentScore&) = default;
};

struct DocumentSentiment {
  std::string doc_id;
  SentimentScore aggregate;
  std::vector<SentimentScore> series;  // one per sentence
};

/// One matched lexicon term after modifiers.
struct Assessment {
  std::size_t position = 0;
  double polarity = 0.0;
  double subjectivity = 0.0;
};

/// Left-to-right scan. For each lexicon hit, the preceding `window` tokens
/// are inspected: the nearest intensifier scales (p, s) with clamping, then
/// any negator multiplies p by the negation factor.
inline std::vector<Assessment> assess_sentence(const TokenList& tokens, const SentimentLexicon& lex) {
  std::vector<Assessment> out;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    const auto hit = lex.entries.find(tokens[i]);
    if (hit == lex.entries.end()) continue;
    double p = hit->second.polarity;
    double s = hit->second.subjectivity;
    const std::size_t begin = i >= lex.window ? i - lex.window : 0;
    for (std::size_t j = i; j-- > begin;) {
      if (const auto f = lex.intensifiers.find(tokens[j]); f != lex.intensifiers.end()) {
        p = std::clamp(p * f->second, -1.0, 1.0);
        s = std::clamp(s * f->second, 0.0, 1.0);
        break;
      }
    }
    for (std::size_t j = begin; j < i; ++j) {
      if (lex.negators.count(tokens[j]) != 0) {
        p = std::clamp(p * lex.negation_factor, -1.0, 1.0);
        break;
      }
    }
    out.push_back({i, p, s});
  }
  return out;
}

inline SentimentScore summarize(const std::vector<Assessment>& assessments) {
  SentimentScore score;
  if (assessments.empty()) return score;
  double p = 0.0, s = 0.0;
  for (const auto& a : assessments) {
    p += a.polarity;
    s += a.subjectivity;
  }
  const auto n = static_cast<double>(assessments.size());
  score.polarity = std::clamp(p / n, -1.0, 1.0);
  score.subjectivity = std::clamp(s / n, 0.0, 1.0);
  score.assessments = assessments.size();
  return score;
}

inline SentimentScore score_sentence(const TokenList& tokens, const SentimentLexicon& lex) {
  return summarize(assess_sentence(tokens, lex));
}

/// Per-sentence series plus an aggregate that averages every individual
/// assessment in the document (not the sentence means).
inline DocumentSentiment score_document(const PreparedDocument& prep, const SentimentLexicon& lex) {
  DocumentSentiment result;
  result.doc_id = prep.doc_id;
  std::vector<Assessment> all;
  for (const auto& sentence : prep.sentences) {
    auto assessments = assess_sentence(sentence, lex);
    result.series.push_back(summarize(assessments));
    all.insert(all.end(), assessments.begin(), assessments.end());
  }
  result.aggregate = summarize(all);
  return result;
}

/// Lexicon file:
///   #window=3            optional header settings
///   #negation=-0.5
///   good,0.7,0.6         term,polarity,subjectivity
///   !not                 negator
///   *very,1.3            intensifier,factor
/// Other lines starting with '#' are comments.
inline SentimentLexicon parse_lexicon(std::string_view content) {
  SentimentLexicon lex;
  std::istringstream in{std::string(content)};
  std::string raw;
  std::size_t line_no = 0;
  auto fail = [&](const std::string& what) {
    throw InputFormatError("lexicon line " + std::to_string(line_no) + ": " + what);
  };
  auto to_double = [&](std::string_view text) {
    try {
      std::size_t used = 0;
      const std::string s(trim(text));
      const double v = std::stod(s, &used);
      if (used != s.size()) fail("bad number '" + s + "'");
      return v;
    } catch (const std::logic_error&) {
      fail("bad number '" + std::string(text) + "'");
    }
    return 0.0;
  };

  while (std::getline(in, raw)) {
    ++line_no;
    const auto line = trim(raw);
    if (line.empty()) continue;
    if (line.front() == '#') {
      const auto body = line.substr(1);
      if (body.rfind("window=", 0) == 0) {
        const double w = to_double(body.substr(7));
        if (w < 0 || w != static_cast<double>(static_cast<std::size_t>(w))) fail("window must be a count");
        lex.window = static_cast<std::size_t>(w);
      } else if (body.rfind("negation=", 0) == 0) {
        lex.negation_factor = to_double(body.substr(9));
      }
      continue;
    }
    if (line.front() == '!') {
      const auto term = trim(line.substr(1));
      if (term.empty()) fail("empty negator");
      lex.negators.insert(ascii_lower_copy(term));
      continue;
    }
    if (line.front() == '*') {
      const auto body = line.substr(1);
      const auto comma = body.find(',');
      if (comma == std::string_view::npos) fail("intensifier needs term,factor");
      lex.intensifiers[ascii_lower_copy(trim(body.substr(0, comma)))] = to_double(body.substr(comma + 1));
      continue;
    }
    const auto c1 = line.find(',');
    const auto c2 = c1 == std::string_view::npos ? c1 : line.find(',', c1 + 1);
    if (c2 == std::string_view::npos) fail("expected term,polarity,subjectivity");
    const auto term = trim(line.substr(0, c1));
    if (term.empty()) fail("empty term");
    lex.entries[ascii_lower_copy(term)] = {to_double(line.substr(c1 + 1, c2 - c1 - 1)), to_double(line.substr(c2 + 1))};
  }
  lex.validate();
  return lex;
}

inline SentimentLexicon load_lexicon(const std::filesystem::path& path) { return parse_lexicon(read_file(path)); }

}  // namespace kmtext
