#pragma once

// Porter (1980) suffix-stripping stemmer, steps 1a through 5b, original rule
// set. Input is expected lowercase ASCII letters; anything else passes through.

#include <string>
#include <string_view>

namespace kmtext {

class PorterStemmer {
 public:
  std::string operator()(std::string_view word) const {
    std::string w(word);
    if (w.size() <= 2) return w;
    for (char c : w) {
      if (c < 'a' || c > 'z') return w;
    }
    step1a(w);
    step1b(w);
    step1c(w);
    step2(w);
    step3(w);
    step4(w);
    step5a(w);
    step5b(w);
    return w;
  }

 private:
  struct Rule {
    std::string_view suffix;
    std::string_view replacement;
  };

  static bool is_consonant(std::string_view w, std::size_t i) {
    switch (w[i]) {
      case 'a':
      case 'e':
      case 'i':
      case 'o':
      case 'u':
        return false;
      case 'y':
        return i == 0 || !is_consonant(w, i - 1);
      default:
        return true;
    }
  }

  // Number of VC sequences in [C](VC)^m[V].
  static int measure(std::string_view stem) {
    int m = 0;
    std::size_t i = 0;
    const std::size_t n = stem.size();
    while (i < n && is_consonant(stem, i)) ++i;
    while (i < n) {
      while (i < n && !is_consonant(stem, i)) ++i;
      if (i >= n) break;
      while (i < n && is_consonant(stem, i)) ++i;
      ++m;
    }
    return m;
  }

  static bool contains_vowel(std::string_view stem) {
    for (std::size_t i = 0; i < stem.size(); ++i) {
      if (!is_consonant(stem, i)) return true;
    }
    return false;
  }

  static bool ends_double_consonant(std::string_view w) {
    const auto n = w.size();
    return n >= 2 && w[n - 1] == w[n - 2] && is_consonant(w, n - 1);
  }

  // *o: ends consonant-vowel-consonant, final consonant not w, x or y.
  static bool ends_cvc(std::string_view w) {
    const auto n = w.size();
    if (n < 3) return false;
    if (!is_consonant(w, n - 3) || is_consonant(w, n - 2) || !is_consonant(w, n - 1)) return false;
    const char last = w[n - 1];
    return last != 'w' && last != 'x' && last != 'y';
  }

  static bool ends_with(std::string_view w, std::string_view suffix) {
    return w.size() >= suffix.size() && w.substr(w.size() - suffix.size()) == suffix;
  }

  static std::string_view stem_of(std::string_view w, std::string_view suffix) {
    return w.substr(0, w.size() - suffix.size());
  }

  static void replace_suffix(std::string& w, std::string_view suffix, std::string_view replacement) {
    w.replace(w.size() - suffix.size(), suffix.size(), replacement);
  }

  // Longest matching suffix wins; if its condition fails, the step does nothing.
  template <std::size_t N, typename Condition>
  static void apply_longest(std::string& w, const Rule (&rules)[N], Condition condition) {
    const Rule* best = nullptr;
    for (const auto& rule : rules) {
      if (ends_with(w, rule.suffix) && (best == nullptr || rule.suffix.size() > best->suffix.size())) best = &rule;
    }
    if (best != nullptr && condition(stem_of(w, best->suffix), best->suffix)) {
      replace_suffix(w, best->suffix, best->replacement);
    }
  }

  static void step1a(std::string& w) {
    static constexpr Rule kRules[] = {{"sses", "ss"}, {"ies", "i"}, {"ss", "ss"}, {"s", ""}};
    apply_longest(w, kRules, [](std::string_view, std::string_view) { return true; });
  }

  static void step1b(std::string& w) {
    if (ends_with(w, "eed")) {
      if (measure(stem_of(w, "eed")) > 0) replace_suffix(w, "eed", "ee");
      return;
    }
    std::string_view suffix;
    if (ends_with(w, "ed")) {
      suffix = "ed";
    } else if (ends_with(w, "ing")) {
      suffix = "ing";
    } else {
      return;
    }
    if (!contains_vowel(stem_of(w, suffix))) return;
    replace_suffix(w, suffix, "");

    if (ends_with(w, "at") || ends_with(w, "bl") || ends_with(w, "iz")) {
      w.push_back('e');
    } else if (ends_double_consonant(w) && w.back() != 'l' && w.back() != 's' && w.back() != 'z') {
      w.pop_back();
    } else if (measure(w) == 1 && ends_cvc(w)) {
      w.push_back('e');
    }
  }

  static void step1c(std::string& w) {
    if (ends_with(w, "y") && contains_vowel(stem_of(w, "y"))) w.back() = 'i';
  }

  static void step2(std::string& w) {
    static constexpr Rule kRules[] = {
        {"ational", "ate"}, {"tional", "tion"}, {"enci", "ence"},  {"anci", "ance"},   {"izer", "ize"},
        {"abli", "able"},   {"alli", "al"},     {"entli", "ent"},  {"eli", "e"},       {"ousli", "ous"},
        {"ization", "ize"}, {"ation", "ate"},   {"ator", "ate"},   {"alism", "al"},    {"iveness", "ive"},
        {"fulness", "ful"}, {"ousness", "ous"}, {"aliti", "al"},   {"iviti", "ive"},   {"biliti", "ble"}};
    apply_longest(w, kRules, [](std::string_view stem, std::string_view) { return measure(stem) > 0; });
  }

  static void step3(std::string& w) {
    static constexpr Rule kRules[] = {{"icate", "ic"}, {"ative", ""}, {"alize", "al"}, {"iciti", "ic"},
                                      {"ical", "ic"},  {"ful", ""},   {"ness", ""}};
    apply_longest(w, kRules, [](std::string_view stem, std::string_view) { return measure(stem) > 0; });
  }

  static void step4(std::string& w) {
    static constexpr Rule kRules[] = {{"al", ""},  {"ance", ""}, {"ence", ""}, {"er", ""},   {"ic", ""},
                                      {"able", ""}, {"ible", ""}, {"ant", ""},  {"ement", ""}, {"ment", ""},
                                      {"ent", ""},  {"ion", ""},  {"ou", ""},   {"ism", ""},  {"ate", ""},
                                      {"iti", ""},  {"ous", ""},  {"ive", ""},  {"ize", ""}};
    apply_longest(w, kRules, [](std::string_view stem, std::string_view suffix) {
      if (measure(stem) <= 1) return false;
      if (suffix == "ion") return !stem.empty() && (stem.back() == 's' || stem.back() == 't');
      return true;
    });
  }

  static void step5a(std::string& w) {
    if (!ends_with(w, "e")) return;
    const auto stem = stem_of(w, "e");
    const int m = measure(stem);
    if (m > 1 || (m == 1 && !ends_cvc(stem))) w.pop_back();
  }

  static void step5b(std::string& w) {
    if (measure(w) > 1 && ends_double_consonant(w) && w.back() == 'l') w.pop_back();
  }
};

inline std::string stem(std::string_view token) { return PorterStemmer{}(token); }

}  // namespace kmtext
