#pragma once

// Lenient single-pass HTML reader: just enough structure to locate review
// containers by class and harvest paragraph text, plus a few head fields.

#include <algorithm>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "kmtext/text_util.hpp"

namespace kmtext::html {

struct Attribute {
  std::string name;  // lowercased
  std::string value;  // entity-decoded
};

struct Token {
  enum class Kind { Text, StartTag, EndTag };
  Kind kind = Kind::Text;
  std::string name;  // lowercased tag name, or decoded text for Text
  std::vector<Attribute> attributes;
  bool self_closing = false;
};

inline bool is_void_element(std::string_view tag) {
  static constexpr std::string_view kVoid[] = {"area", "base", "br",    "col",  "embed",  "hr",    "img",
                                               "input", "link", "meta", "param", "source", "track", "wbr"};
  return std::find(std::begin(kVoid), std::end(kVoid), tag) != std::end(kVoid);
}

inline bool is_raw_text_element(std::string_view tag) {
  return tag == "script" || tag == "style" || tag == "title" || tag == "textarea";
}

/// Elements whose boundaries separate words in rendered text.
inline bool is_block_element(std::string_view tag) {
  static constexpr std::string_view kBlock[] = {
      "address", "article", "aside", "blockquote", "br", "dd",  "div", "dl",      "dt",    "fieldset",
      "figure",  "footer",  "form",  "h1",         "h2", "h3",  "h4",  "h5",      "h6",    "header",
      "hr",      "li",      "main",  "nav",        "ol", "p",   "pre", "section", "table", "tbody",
      "td",      "tfoot",   "th",    "thead",      "tr", "ul"};
  return std::find(std::begin(kBlock), std::end(kBlock), tag) != std::end(kBlock);
}

namespace detail {

inline void append_utf8(std::string& out, std::uint32_t cp) {
  if (cp == 0 || cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF)) cp = 0xFFFD;
  if (cp < 0x80) {
    out.push_back(static_cast<char>(cp));
  } else if (cp < 0x800) {
    out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else if (cp < 0x10000) {
    out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else {
    out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  }
}

inline bool is_tag_name_start(char c) { return ascii_is_alpha(c); }

inline std::uint32_t typographic_entity(std::string_view name) {
  static constexpr std::pair<std::string_view, std::uint32_t> kNames[] = {
      {"copy", 0xA9},    {"reg", 0xAE},     {"hellip", 0x2026}, {"ndash", 0x2013}, {"mdash", 0x2014},
      {"lsquo", 0x2018}, {"rsquo", 0x2019}, {"ldquo", 0x201C},  {"rdquo", 0x201D},
  };
  for (const auto& [n, cp] : kNames) {
    if (n == name) return cp;
  }
  return 0;
}

}  // namespace detail

/// Decodes &amp; &lt; &gt; &quot; &#39; &apos; &nbsp;, a handful of common
/// typographic names and numeric references. Anything else starting with '&'
/// is kept verbatim.
inline std::string decode_entities(std::string_view in) {
  std::string out;
  out.reserve(in.size());
  for (std::size_t i = 0; i < in.size();) {
    if (in[i] != '&') {
      out.push_back(in[i++]);
      continue;
    }
    const auto semi = in.find(';', i + 1);
    // Entity names are short; a distant ';' belongs to something else.
    if (semi == std::string_view::npos || semi - i > 10) {
      out.push_back(in[i++]);
      continue;
    }
    const auto name = in.substr(i + 1, semi - i - 1);
    bool decoded = true;
    if (name == "amp") {
      out.push_back('&');
    } else if (name == "lt") {
      out.push_back('<');
    } else if (name == "gt") {
      out.push_back('>');
    } else if (name == "quot") {
      out.push_back('"');
    } else if (name == "apos") {
      out.push_back('\'');
    } else if (name == "nbsp") {
      out.push_back(' ');
    } else if (const auto cp = detail::typographic_entity(name)) {
      detail::append_utf8(out, cp);
    } else if (name.size() >= 2 && name[0] == '#') {
      std::uint32_t cp = 0;
      const bool hex = name[1] == 'x' || name[1] == 'X';
      const auto digits = name.substr(hex ? 2 : 1);
      if (digits.empty()) decoded = false;
      for (char c : digits) {
        int v;
        if (c >= '0' && c <= '9') {
          v = c - '0';
        } else if (hex && c >= 'a' && c <= 'f') {
          v = c - 'a' + 10;
        } else if (hex && c >= 'A' && c <= 'F') {
          v = c - 'A' + 10;
        } else {
          decoded = false;
          break;
        }
        cp = cp * (hex ? 16 : 10) + static_cast<std::uint32_t>(v);
        if (cp > 0x10FFFF) cp = 0x110000;  // saturate; replaced below
      }
      if (decoded) detail::append_utf8(out, cp);
    } else {
      decoded = false;
    }
    if (decoded) {
      i = semi + 1;
    } else {
      out.push_back(in[i++]);
    }
  }
  return out;
}

/// Single forward pass over the input. Never backtracks: every branch
/// advances the cursor, and unterminated constructs run to end of input.
class Tokenizer {
 public:
  explicit Tokenizer(std::string_view input) : in_(input) {}

  std::vector<Token> run() {
    std::vector<Token> tokens;
    std::string text;
    auto flush_text = [&] {
      if (!text.empty()) {
        tokens.push_back(Token{Token::Kind::Text, decode_entities(text), {}, false});
        text.clear();
      }
    };

    while (pos_ < in_.size()) {
      const char c = in_[pos_];
      if (c != '<') {
        // Stray '>' outside a tag is markup residue, not content.
        if (c != '>') text.push_back(c);
        ++pos_;
        continue;
      }
      const char next = pos_ + 1 < in_.size() ? in_[pos_ + 1] : '\0';
      if (in_.substr(pos_, 4) == "<!--") {
        flush_text();
        const auto end = in_.find("-->", pos_ + 4);
        pos_ = end == std::string_view::npos ? in_.size() : end + 3;
      } else if (next == '!' || next == '?') {
        flush_text();
        const auto end = in_.find('>', pos_ + 2);
        pos_ = end == std::string_view::npos ? in_.size() : end + 1;
      } else if (next == '/' && pos_ + 2 < in_.size() && detail::is_tag_name_start(in_[pos_ + 2])) {
        flush_text();
        pos_ += 2;
        Token tok{Token::Kind::EndTag, read_name(), {}, false};
        skip_to_tag_end();
        tokens.push_back(std::move(tok));
      } else if (detail::is_tag_name_start(next)) {
        flush_text();
        ++pos_;
        Token tok = read_start_tag();
        const bool raw = is_raw_text_element(tok.name) && !tok.self_closing;
        const std::string name = tok.name;
        tokens.push_back(std::move(tok));
        if (raw) read_raw_text(name, tokens);
      } else {
        // "<" not introducing markup ("a < b", "</ >") is dropped like '>'.
        ++pos_;
      }
    }
    flush_text();
    return tokens;
  }

 private:
  std::string read_name() {
    std::string name;
    while (pos_ < in_.size()) {
      const char c = in_[pos_];
      if (ascii_is_space(c) || c == '/' || c == '>' || c == '=') break;
      name.push_back(ascii_lower(c));
      ++pos_;
    }
    return name;
  }

  void skip_spaces() {
    while (pos_ < in_.size() && ascii_is_space(in_[pos_])) ++pos_;
  }

  void skip_to_tag_end() {
    while (pos_ < in_.size() && in_[pos_] != '>') ++pos_;
    if (pos_ < in_.size()) ++pos_;
  }

  Token read_start_tag() {
    Token tok{Token::Kind::StartTag, read_name(), {}, false};
    while (pos_ < in_.size()) {
      skip_spaces();
      if (pos_ >= in_.size()) break;
      const char c = in_[pos_];
      if (c == '>') {
        ++pos_;
        return tok;
      }
      if (c == '/') {
        ++pos_;
        if (pos_ < in_.size() && in_[pos_] == '>') {
          tok.self_closing = true;
          ++pos_;
          return tok;
        }
        continue;
      }
      Attribute attr;
      attr.name = read_name();
      if (attr.name.empty()) {
        ++pos_;  // lone '=' or similar junk
        continue;
      }
      skip_spaces();
      if (pos_ < in_.size() && in_[pos_] == '=') {
        ++pos_;
        skip_spaces();
        std::string raw;
        if (pos_ < in_.size() && (in_[pos_] == '"' || in_[pos_] == '\'')) {
          const char quote = in_[pos_++];
          const auto end = in_.find(quote, pos_);
          const auto stop = end == std::string_view::npos ? in_.size() : end;
          raw.assign(in_.substr(pos_, stop - pos_));
          pos_ = end == std::string_view::npos ? in_.size() : end + 1;
        } else {
          while (pos_ < in_.size() && !ascii_is_space(in_[pos_]) && in_[pos_] != '>') raw.push_back(in_[pos_++]);
        }
        attr.value = decode_entities(raw);
      }
      tok.attributes.push_back(std::move(attr));
    }
    return tok;
  }

  // Content of script/style/title/textarea runs to the matching end tag.
  void read_raw_text(const std::string& name, std::vector<Token>& tokens) {
    const std::size_t start = pos_;
    std::size_t search = pos_;
    std::size_t end = in_.size();
    while (true) {
      const auto lt = in_.find("</", search);
      if (lt == std::string_view::npos) break;
      std::size_t i = 0;
      while (i < name.size() && lt + 2 + i < in_.size() && ascii_lower(in_[lt + 2 + i]) == name[i]) ++i;
      const std::size_t after = lt + 2 + i;
      if (i == name.size() && (after >= in_.size() || in_[after] == '>' || ascii_is_space(in_[after]) ||
                               in_[after] == '/')) {
        end = lt;
        break;
      }
      search = lt + 2;
    }
    if (name == "title" || name == "textarea") {
      std::string body(in_.substr(start, end - start));
      body.erase(std::remove_if(body.begin(), body.end(), [](char c) { return c == '<' || c == '>'; }),
                 body.end());
      tokens.push_back(Token{Token::Kind::Text, decode_entities(body), {}, false});
    }
    pos_ = end;
    if (end < in_.size()) {
      pos_ += 2 + name.size();
      skip_to_tag_end();
      tokens.push_back(Token{Token::Kind::EndTag, name, {}, false});
    }
  }

  std::string_view in_;
  std::size_t pos_ = 0;
};

inline std::vector<Token> tokenize(std::string_view input) { return Tokenizer(input).run(); }

/// Minimal element tree. Text nodes have an empty tag.
struct Node {
  std::string tag;
  std::vector<Attribute> attributes;
  std::string text;
  std::vector<std::unique_ptr<Node>> children;

  bool is_text() const { return tag.empty(); }

  const std::string* attribute(std::string_view name) const {
    for (const auto& a : attributes) {
      if (a.name == name) return &a.value;
    }
    return nullptr;
  }

  bool has_class(std::string_view cls) const {
    const auto* value = attribute("class");
    if (value == nullptr) return false;
    for (const auto& part : split_whitespace(*value)) {
      if (part == cls) return true;
    }
    return false;
  }

  bool has_element_children() const {
    return std::any_of(children.begin(), children.end(),
                       [](const auto& c) { return !c->is_text() && c->tag != "br"; });
  }
};

/// Builds a tree under a synthetic "#document" root. End tags close the
/// nearest open element of the same name (implicitly closing everything
/// opened after it); unmatched end tags are ignored; elements still open at
/// end of input are closed there.
inline std::unique_ptr<Node> parse(std::string_view input) {
  auto root = std::make_unique<Node>();
  root->tag = "#document";
  std::vector<Node*> open{root.get()};

  auto close_to = [&](std::size_t index) { open.resize(index); };
  auto find_open = [&](std::string_view tag, std::size_t floor_index) -> std::size_t {
    for (std::size_t i = open.size(); i-- > floor_index;) {
      if (open[i]->tag == tag) return i;
    }
    return 0;
  };

  auto only_inline_above = [&](std::size_t index) {
    return std::none_of(open.begin() + static_cast<std::ptrdiff_t>(index) + 1, open.end(),
                        [](const Node* n) { return is_block_element(n->tag); });
  };

  for (auto& tok : tokenize(input)) {
    switch (tok.kind) {
      case Token::Kind::Text: {
        auto node = std::make_unique<Node>();
        node->text = std::move(tok.name);
        open.back()->children.push_back(std::move(node));
        break;
      }
      case Token::Kind::StartTag: {
        // Implied end tags: a block start closes an open <p>; <li> closes <li>.
        if (is_block_element(tok.name) && tok.name != "br") {
          if (const auto p = find_open("p", 1); p != 0 && only_inline_above(p)) close_to(p);
        }
        if (tok.name == "li") {
          if (const auto li = find_open("li", 1); li != 0 && only_inline_above(li)) close_to(li);
        }
        auto node = std::make_unique<Node>();
        node->tag = tok.name;
        node->attributes = std::move(tok.attributes);
        Node* raw = node.get();
        open.back()->children.push_back(std::move(node));
        if (!tok.self_closing && !is_void_element(raw->tag)) open.push_back(raw);
        break;
      }
      case Token::Kind::EndTag: {
        if (const auto i = find_open(tok.name, 1); i != 0) close_to(i);
        break;
      }
    }
  }
  return root;
}

namespace detail {

inline void gather_text(const Node& node, std::string& out) {
  if (node.is_text()) {
    out += node.text;
    return;
  }
  const bool separate = is_block_element(node.tag);
  if (separate) out.push_back(' ');
  for (const auto& child : node.children) gather_text(*child, out);
  if (separate) out.push_back(' ');
}

inline void collect_blocks(const Node& node, std::vector<std::string>& out) {
  for (const auto& child : node.children) {
    if (child->is_text()) continue;
    const bool paragraph = child->tag == "p" || child->tag == "li" ||
                           (child->tag == "div" && !child->has_element_children());
    if (paragraph) {
      std::string text;
      for (const auto& grandchild : child->children) gather_text(*grandchild, text);
      auto block = collapse_whitespace(text);
      if (!block.empty()) out.push_back(std::move(block));
    } else if (!is_raw_text_element(child->tag)) {
      collect_blocks(*child, out);
    }
  }
}

inline void find_containers(const Node& node, std::string_view cls, std::vector<const Node*>& out) {
  for (const auto& child : node.children) {
    if (child->is_text()) continue;
    if (child->has_class(cls)) {
      out.push_back(child.get());  // nested matches are harvested by the outer container
    } else {
      find_containers(*child, cls, out);
    }
  }
}

inline const Node* find_first(const Node& node, std::string_view tag) {
  for (const auto& child : node.children) {
    if (child->is_text()) continue;
    if (child->tag == tag) return child.get();
    if (const auto* hit = find_first(*child, tag)) return hit;
  }
  return nullptr;
}

inline const Node* find_meta(const Node& node, std::string_view name) {
  for (const auto& child : node.children) {
    if (child->is_text()) continue;
    if (child->tag == "meta") {
      const auto* n = child->attribute("name");
      if (n != nullptr && ascii_lower_copy(*n) == name && child->attribute("content") != nullptr) {
        return child.get();
      }
    }
    if (const auto* hit = find_meta(*child, name)) return hit;
  }
  return nullptr;
}

}  // namespace detail

/// Text of every paragraph-level element (p, li, leaf div) inside every
/// element whose class list contains `class_name`, in document order.
/// Blocks are whitespace-collapsed; blocks that end up empty are dropped.
inline std::vector<std::string> extract_review_blocks(std::string_view html, std::string_view class_name) {
  std::vector<std::string> blocks;
  if (class_name.empty()) return blocks;
  const auto root = parse(html);
  std::vector<const Node*> containers;
  detail::find_containers(*root, class_name, containers);
  for (const auto* container : containers) detail::collect_blocks(*container, blocks);
  return blocks;
}

struct HeadFields {
  std::optional<std::string> title;
  std::optional<std::string> author;
  std::optional<std::string> date;  // raw content attribute
};

inline HeadFields extract_head_fields(std::string_view html) {
  HeadFields fields;
  const auto root = parse(html);
  if (const auto* title = detail::find_first(*root, "title")) {
    std::string text;
    for (const auto& child : title->children) detail::gather_text(*child, text);
    if (auto t = collapse_whitespace(text); !t.empty()) fields.title = std::move(t);
  }
  if (const auto* meta = detail::find_meta(*root, "author")) {
    if (auto a = collapse_whitespace(*meta->attribute("content")); !a.empty()) fields.author = std::move(a);
  }
  if (const auto* meta = detail::find_meta(*root, "date")) {
    fields.date = collapse_whitespace(*meta->attribute("content"));
  }
  return fields;
}

}  // namespace kmtext::html
