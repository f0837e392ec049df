#pragma once

#include <algorithm>
#include <filesystem>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "kmtext/corpus.hpp"
#include "kmtext/error.hpp"
#include "kmtext/fileio.hpp"
#include "kmtext/porter.hpp"
#include "kmtext/text_util.hpp"

namespace kmtext {

using Token = std::string;
using TokenList = std::vector<Token>;

struct NormalizationConfig {
  std::set<std::string> artifact_tokens{"im", "ive", "got", "isnt"};
  bool remove_bracketed = true;
  bool remove_digit_tokens = true;
};

struct PipelineConfig {
  NormalizationConfig normalization;
  std::set<std::string> stop_words;
  bool stem = false;
  bool lemmatize = false;
  std::map<std::string, std::string> lemma_table;

  void validate() const {
    if (stem && lemmatize) throw ConfigError("pipeline: stem and lemmatize are mutually exclusive");
    for (const auto& t : normalization.artifact_tokens) {
      if (t.empty() || ascii_lower_copy(t) != t || split_whitespace(t).size() != 1) {
        throw ConfigError("pipeline: artifact token '" + t + "' must be a single lowercase word");
      }
    }
  }
};

struct PreparedDocument {
  std::string doc_id;
  /// Surface tokens per sentence, before stop-word removal.
  std::vector<TokenList> sentences;
  /// Stop-filtered (and optionally stemmed/lemmatized) tokens of the whole document.
  TokenList content_tokens;
  std::set<Token> token_types;
  /// Content tokens per sentence; adjacency-based analytics never cross these boundaries.
  std::vector<TokenList> content_sentences;
  /// Distinct stop-filtered tokens before stemming or lemmatization.
  std::set<Token> surface_types;
};

inline const std::vector<std::string>& default_stop_word_list() {
  static const std::vector<std::string> kWords = {
    "a", "about", "above", "after", "again", "against", "all", "also", "although", "always", "am", "among",
    "amongst", "an", "and", "another", "any", "anyone", "anything", "anyway", "anywhere", "are", "as", "at",
    "be", "became", "because", "become", "becomes", "been", "before", "being", "below", "beside", "besides",
    "between", "both", "but", "by", "can", "cannot", "could", "did", "do", "does", "doing", "done", "down",
    "during", "each", "either", "else", "elsewhere", "enough", "etc", "even", "ever", "every", "everyone",
    "everything", "everywhere", "few", "for", "from", "further", "had", "has", "have", "having", "he", "her",
    "here", "hers", "herself", "him", "himself", "his", "how", "however", "i", "if", "in", "indeed", "into",
    "is", "it", "its", "itself", "just", "least", "less", "many", "may", "me", "might", "mine", "more",
    "most", "much", "must", "my", "myself", "neither", "never", "nevertheless", "no", "nobody", "none",
    "nor", "not", "nothing", "now", "nowhere", "of", "off", "often", "on", "once", "only", "or", "other",
    "otherwise", "ought", "our", "ours", "ourselves", "out", "over", "own", "perhaps", "quite", "same",
    "she", "should", "so", "some", "such", "than", "that", "the", "their", "theirs", "them", "themselves",
    "then", "there", "these", "they", "this", "those", "through", "to", "too", "under", "until", "up",
    "very", "was", "we", "were", "what", "when", "where", "which", "while", "who", "whom", "why", "with",
    "would", "you", "your", "yours", "yourself", "yourselves"};
  return kWords;
}

inline std::set<std::string> default_stop_words() {
  const auto& words = default_stop_word_list();
  return {words.begin(), words.end()};
}

/// Lowercase, drop apostrophes, drop "[...]" segments, turn every other
/// non-alphanumeric into a space, then remove whole digit-bearing tokens and
/// artifact tokens and collapse whitespace. Idempotent.
inline std::string normalize(std::string_view text, const NormalizationConfig& cfg = {}) {
  std::string s;
  s.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (c == '\'') continue;
    // U+2019 RIGHT SINGLE QUOTATION MARK, the usual typographic apostrophe.
    if (c == '\xE2' && text.substr(i, 3) == "\xE2\x80\x99") {
      i += 2;
      continue;
    }
    s.push_back(ascii_lower(c));
  }

  if (cfg.remove_bracketed) {
    std::string unbracketed;
    unbracketed.reserve(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (s[i] == '[') {
        const auto close = s.find(']', i + 1);
        if (close != std::string::npos) {
          i = close;
          continue;
        }
      }
      unbracketed.push_back(s[i]);
    }
    s = std::move(unbracketed);
  }

  for (auto& c : s) {
    if (!ascii_is_alnum(c)) c = ' ';
  }

  std::string out;
  for (const auto word : split_whitespace(s)) {
    if (cfg.remove_digit_tokens && std::any_of(word.begin(), word.end(), ascii_is_digit)) continue;
    if (cfg.artifact_tokens.count(std::string(word)) != 0) continue;
    if (!out.empty()) out.push_back(' ');
    out.append(word);
  }
  return out;
}

/// Splits after a run of '.', '!' or '?' that is followed by whitespace or
/// end of input. Terminators stay on their segment.
inline std::vector<std::string> split_sentences(std::string_view text) {
  std::vector<std::string> out;
  auto is_terminator = [](char c) { return c == '.' || c == '!' || c == '?'; };
  std::size_t start = 0;
  std::size_t i = 0;
  while (i < text.size()) {
    if (!is_terminator(text[i])) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < text.size() && is_terminator(text[j])) ++j;
    if (j == text.size() || ascii_is_space(text[j])) {
      if (const auto seg = trim(text.substr(start, j - start)); !seg.empty()) out.emplace_back(seg);
      start = j;
    }
    i = j;
  }
  if (start < text.size()) {
    if (const auto seg = trim(text.substr(start)); !seg.empty()) out.emplace_back(seg);
  }
  return out;
}

/// Maximal runs of ASCII letters; everything else separates.
inline TokenList tokenize(std::string_view text) {
  TokenList tokens;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && !ascii_is_alpha(text[i])) ++i;
    const std::size_t start = i;
    while (i < text.size() && ascii_is_alpha(text[i])) ++i;
    if (i > start) tokens.push_back(ascii_lower_copy(text.substr(start, i - start)));
  }
  return tokens;
}

inline TokenList remove_stop_words(const TokenList& tokens, const std::set<std::string>& stop_words) {
  TokenList out;
  out.reserve(tokens.size());
  for (const auto& t : tokens) {
    if (stop_words.count(t) == 0) out.push_back(t);
  }
  return out;
}

inline std::string lemmatize(const std::string& token, const std::map<std::string, std::string>& lemma_table) {
  const auto it = lemma_table.find(token);
  return it == lemma_table.end() ? token : it->second;
}

namespace detail {

inline TokenList reduce_forms(TokenList tokens, const PipelineConfig& cfg) {
  if (cfg.stem) {
    const PorterStemmer stemmer;
    for (auto& t : tokens) t = stemmer(t);
  } else if (cfg.lemmatize) {
    for (auto& t : tokens) t = lemmatize(t, cfg.lemma_table);
  }
  // A lemma table may map to forms outside the token alphabet; drop those.
  std::erase_if(tokens, [](const Token& t) {
    return t.empty() || std::any_of(t.begin(), t.end(), [](char c) { return c < 'a' || c > 'z'; });
  });
  return tokens;
}

}  // namespace detail

/// Runs the full stage chain on one document. Sentences that contain no
/// word after normalization are dropped.
inline PreparedDocument preprocess_document(const Document& doc, const PipelineConfig& cfg) {
  cfg.validate();
  PreparedDocument prep;
  prep.doc_id = doc.id;
  for (const auto& sentence : split_sentences(doc.raw_text)) {
    auto tokens = tokenize(normalize(sentence, cfg.normalization));
    if (tokens.empty()) continue;
    prep.content_sentences.push_back(detail::reduce_forms(remove_stop_words(tokens, cfg.stop_words), cfg));
    prep.sentences.push_back(std::move(tokens));
  }
  const auto surface = remove_stop_words(tokenize(normalize(doc.raw_text, cfg.normalization)), cfg.stop_words);
  prep.surface_types.insert(surface.begin(), surface.end());
  prep.content_tokens = detail::reduce_forms(surface, cfg);
  prep.token_types.insert(prep.content_tokens.begin(), prep.content_tokens.end());
  return prep;
}

inline std::vector<PreparedDocument> preprocess_corpus(const Corpus& corpus, const PipelineConfig& cfg) {
  std::vector<PreparedDocument> out;
  out.reserve(corpus.size());
  for (const auto& doc : corpus.documents) out.push_back(preprocess_document(doc, cfg));
  return out;
}

// --- resource files ----------------------------------------------------------

/// One lowercase word per line; blank lines and '#' comments ignored.
inline std::set<std::string> parse_stop_words(std::string_view content) {
  std::set<std::string> words;
  std::istringstream in{std::string(content)};
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    const auto word = trim(line);
    if (word.empty()) continue;
    if (split_whitespace(word).size() != 1) {
      throw InputFormatError("stop words line " + std::to_string(line_no) + ": expected one word");
    }
    words.insert(ascii_lower_copy(word));
  }
  return words;
}

inline std::set<std::string> load_stop_words(const std::filesystem::path& path) {
  return parse_stop_words(read_file(path));
}

/// Two tab-separated columns: surface form, lemma.
inline std::map<std::string, std::string> parse_lemma_table(std::string_view content) {
  std::map<std::string, std::string> table;
  std::istringstream in{std::string(content)};
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (trim(line).empty() || trim(line).front() == '#') continue;
    const auto tab = line.find('\t');
    if (tab == std::string::npos) {
      throw InputFormatError("lemma table line " + std::to_string(line_no) + ": expected surface<TAB>lemma");
    }
    const auto surface = trim(std::string_view(line).substr(0, tab));
    const auto lemma = trim(std::string_view(line).substr(tab + 1));
    if (surface.empty() || lemma.empty()) {
      throw InputFormatError("lemma table line " + std::to_string(line_no) + ": empty column");
    }
    table[ascii_lower_copy(surface)] = ascii_lower_copy(lemma);
  }
  return table;
}

inline std::map<std::string, std::string> load_lemma_table(const std::filesystem::path& path) {
  return parse_lemma_table(read_file(path));
}

}  // namespace kmtext
