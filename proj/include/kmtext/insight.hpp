#pragma once

// Descriptive corpus analytics: profanity, unique words, frequent terms,
// adjacent-pair concepts and word trees.

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "kmtext/error.hpp"
#include "kmtext/textprep.hpp"
#include "kmtext/vectorspace.hpp"

namespace kmtext {

/// '*' matches any (possibly empty) run of characters; everything else is literal.
inline bool glob_match(std::string_view pattern, std::string_view text) {
  std::size_t p = 0, t = 0;
  std::size_t star = std::string_view::npos, resume = 0;
  while (t < text.size()) {
    if (p < pattern.size() && pattern[p] == '*') {
      star = p++;
      resume = t;
    } else if (p < pattern.size() && pattern[p] == text[t]) {
      ++p;
      ++t;
    } else if (star != std::string_view::npos) {
      p = star + 1;
      t = ++resume;
    } else {
      return false;
    }
  }
  while (p < pattern.size() && pattern[p] == '*') ++p;
  return p == pattern.size();
}

struct ProfanityResult {
  std::size_t count = 0;              // occurrences, not types
  std::set<std::string> matched_terms;
};

inline ProfanityResult profanity_count(const TokenList& tokens, const std::vector<std::string>& patterns) {
  ProfanityResult result;
  for (const auto& token : tokens) {
    const bool hit = std::any_of(patterns.begin(), patterns.end(),
                                 [&](const std::string& pattern) { return glob_match(pattern, token); });
    if (hit) {
      ++result.count;
      result.matched_terms.insert(token);
    }
  }
  return result;
}

/// One glob pattern per line; blank lines and '#' comments skipped.
inline std::vector<std::string> parse_profanity_patterns(std::string_view content) {
  std::vector<std::string> patterns;
  std::size_t start = 0;
  while (start <= content.size()) {
    auto end = content.find('\n', start);
    if (end == std::string_view::npos) end = content.size();
    const auto line = trim(content.substr(start, end - start));
    if (!line.empty() && line.front() != '#') patterns.push_back(ascii_lower_copy(line));
    start = end + 1;
  }
  return patterns;
}

inline std::vector<std::string> load_profanity_patterns(const std::filesystem::path& path) {
  return parse_profanity_patterns(read_file(path));
}

struct UniqueWords {
  std::size_t count = 0;
  std::set<std::string> words;
};

/// Words of each document that occur in no other document. Works on the
/// pre-stemming surface types so distinct words are not conflated.
inline std::map<std::string, UniqueWords> unique_word_counts(const std::vector<PreparedDocument>& prepared) {
  std::map<std::string, std::size_t> doc_frequency;
  for (const auto& doc : prepared) {
    for (const auto& t : doc.surface_types) ++doc_frequency[t];
  }
  std::map<std::string, UniqueWords> out;
  for (const auto& doc : prepared) {
    UniqueWords entry;
    for (const auto& t : doc.surface_types) {
      if (doc_frequency[t] == 1) entry.words.insert(t);
    }
    entry.count = entry.words.size();
    out[doc.doc_id] = std::move(entry);
  }
  return out;
}

using TermCount = std::pair<std::string, std::size_t>;

namespace detail {

inline std::vector<TermCount> top_k_of(std::vector<TermCount> counts, std::size_t k) {
  if (k == 0) throw ArgumentError("top_terms: k must be >= 1");
  std::sort(counts.begin(), counts.end(), [](const TermCount& a, const TermCount& b) {
    return a.second != b.second ? a.second > b.second : a.first < b.first;
  });
  if (counts.size() > k) counts.resize(k);
  return counts;
}

}  // namespace detail

/// k most frequent vocabulary terms; ties broken lexicographically.
inline std::vector<TermCount> top_terms(const DocumentTermMatrix& dtm, std::size_t k) {
  const auto totals = dtm.column_totals();
  std::vector<TermCount> counts;
  for (std::size_t col = 0; col < dtm.n(); ++col) {
    if (totals[col] > 0) counts.emplace_back(dtm.vocabulary.term(col), totals[col]);
  }
  return detail::top_k_of(std::move(counts), k);
}

inline std::vector<TermCount> top_terms(const std::vector<PreparedDocument>& prepared, std::size_t k) {
  std::map<std::string, std::size_t> totals;
  for (const auto& doc : prepared) {
    for (const auto& t : doc.content_tokens) ++totals[t];
  }
  return detail::top_k_of({totals.begin(), totals.end()}, k);
}

struct Concept {
  std::string first;
  std::string second;
  std::size_t count = 0;

  friend bool operator==(const Concept&, const Concept&) = default;
};

/// Adjacent content-token pairs within sentences, kept if count >= min_count,
/// ordered by count descending then lexicographically.
inline std::vector<Concept> extract_concepts(const std::vector<PreparedDocument>& prepared, std::size_t min_count) {
  if (min_count < 1) throw ArgumentError("extract_concepts: min_count must be >= 1");
  std::map<std::pair<std::string, std::string>, std::size_t> pairs;
  for (const auto& doc : prepared) {
    for (const auto& sentence : doc.content_sentences) {
      for (std::size_t i = 0; i + 1 < sentence.size(); ++i) ++pairs[{sentence[i], sentence[i + 1]}];
    }
  }
  std::vector<Concept> out;
  for (const auto& [pair, count] : pairs) {
    if (count >= min_count) out.push_back({pair.first, pair.second, count});
  }
  std::stable_sort(out.begin(), out.end(), [](const Concept& a, const Concept& b) { return a.count > b.count; });
  return out;
}

struct WordTreeNode {
  std::string term;
  std::size_t count = 0;
  std::vector<WordTreeNode> children;  // count descending, then term ascending
};

namespace detail {

struct TrieNode {
  std::size_t count = 0;
  std::map<std::string, TrieNode> next;
};

inline std::vector<WordTreeNode> freeze(const TrieNode& node) {
  std::vector<WordTreeNode> out;
  for (const auto& [term, child] : node.next) out.push_back({term, child.count, freeze(child)});
  std::stable_sort(out.begin(), out.end(),
                   [](const WordTreeNode& a, const WordTreeNode& b) { return a.count > b.count; });
  return out;
}

}  // namespace detail

/// Continuations of `root` within sentences of the content stream, up to
/// `max_depth` tokens after the root. Each node counts the root occurrences
/// whose continuation starts with that node's path.
inline WordTreeNode word_tree(const std::vector<PreparedDocument>& prepared, const std::string& root,
                              std::size_t max_depth) {
  if (max_depth < 1) throw ArgumentError("word_tree: max_depth must be >= 1");
  detail::TrieNode trie;
  for (const auto& doc : prepared) {
    for (const auto& sentence : doc.content_sentences) {
      for (std::size_t i = 0; i < sentence.size(); ++i) {
        if (sentence[i] != root) continue;
        ++trie.count;
        auto* node = &trie;
        for (std::size_t d = 1; d <= max_depth && i + d < sentence.size(); ++d) {
          node = &node->next[sentence[i + d]];
          ++node->count;
        }
      }
    }
  }
  return {root, trie.count, detail::freeze(trie)};
}

}  // namespace kmtext
