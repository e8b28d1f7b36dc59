// Copyright 2026 The NNexus Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "nnexus/html.h"

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <unordered_map>
#include <unordered_set>

namespace nnexus {
namespace html {

namespace {

bool IsAsciiAlpha(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z');
}

bool IsAsciiAlnum(char c) {
  return IsAsciiAlpha(c) || (c >= '0' && c <= '9');
}

bool IsSpace(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f';
}

char ToLower(char c) { return (c >= 'A' && c <= 'Z') ? c - 'A' + 'a' : c; }

std::string Lower(std::string_view s) {
  std::string out(s);
  for (char &c : out) c = ToLower(c);
  return out;
}

bool StartsWithNoCase(std::string_view s, size_t pos, std::string_view prefix) {
  if (s.size() - pos < prefix.size()) return false;
  for (size_t i = 0; i < prefix.size(); ++i) {
    if (ToLower(s[pos + i]) != prefix[i]) return false;
  }
  return true;
}

const std::unordered_set<std::string_view> &VoidElements() {
  static const std::unordered_set<std::string_view> kVoid = {
      "area", "base", "br",   "col",   "embed",  "hr",    "img",
      "input", "link", "meta", "param", "source", "track", "wbr"};
  return kVoid;
}

// Elements whose content is not markup: everything up to the matching end
// tag is a single text child.
const std::unordered_set<std::string_view> &RawTextElements() {
  static const std::unordered_set<std::string_view> kRaw = {
      "script", "style", "textarea", "title", "xmp", "iframe", "noembed",
      "noframes"};
  return kRaw;
}

// Block-level start tags that close an open <p>.
const std::unordered_set<std::string_view> &ClosesParagraph() {
  static const std::unordered_set<std::string_view> kBlocks = {
      "address", "article", "aside",  "blockquote", "details", "div",
      "dl",      "fieldset", "figure", "footer",     "form",    "h1",
      "h2",      "h3",      "h4",     "h5",         "h6",      "header",
      "hr",      "main",    "nav",    "ol",         "p",       "pre",
      "section", "table",   "ul"};
  return kBlocks;
}

void AppendUtf8(uint32_t cp, std::string *out) {
  if (cp == 0 || cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF)) cp = 0xFFFD;
  if (cp < 0x80) {
    out->push_back(static_cast<char>(cp));
  } else if (cp < 0x800) {
    out->push_back(static_cast<char>(0xC0 | (cp >> 6)));
    out->push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else if (cp < 0x10000) {
    out->push_back(static_cast<char>(0xE0 | (cp >> 12)));
    out->push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out->push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else {
    out->push_back(static_cast<char>(0xF0 | (cp >> 18)));
    out->push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
    out->push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out->push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  }
}

const std::unordered_map<std::string_view, uint32_t> &NamedEntities() {
  static const std::unordered_map<std::string_view, uint32_t> kEntities = {
      {"amp", '&'},      {"lt", '<'},        {"gt", '>'},
      {"quot", '"'},     {"apos", '\''},     {"nbsp", 0xA0},
      {"ndash", 0x2013}, {"mdash", 0x2014},  {"hellip", 0x2026},
      {"lsquo", 0x2018}, {"rsquo", 0x2019},  {"ldquo", 0x201C},
      {"rdquo", 0x201D}, {"copy", 0xA9},     {"reg", 0xAE},
      {"shy", 0xAD},     {"times", 0xD7},    {"minus", 0x2212},
      {"aacute", 0xE1},  {"eacute", 0xE9},   {"iacute", 0xED},
      {"oacute", 0xF3},  {"uacute", 0xFA},   {"agrave", 0xE0},
      {"egrave", 0xE8},  {"auml", 0xE4},     {"ouml", 0xF6},
      {"uuml", 0xFC},    {"Auml", 0xC4},     {"Ouml", 0xD6},
      {"Uuml", 0xDC},    {"szlig", 0xDF},    {"ccedil", 0xE7},
      {"ntilde", 0xF1},  {"alpha", 0x3B1},   {"beta", 0x3B2},
      {"gamma", 0x3B3},  {"delta", 0x3B4},   {"pi", 0x3C0},
      {"sigma", 0x3C3},  {"omega", 0x3C9}};
  return kEntities;
}

// Recognizes a character reference at text[pos] (which must be '&').
// Returns its length including the trailing ';', or 0.
size_t ReferenceLength(std::string_view text, size_t pos) {
  size_t i = pos + 1;
  if (i < text.size() && text[i] == '#') {
    ++i;
    bool hex = i < text.size() && (text[i] == 'x' || text[i] == 'X');
    if (hex) ++i;
    size_t digits = 0;
    while (i < text.size() &&
           (hex ? std::isxdigit(static_cast<unsigned char>(text[i]))
                : (text[i] >= '0' && text[i] <= '9'))) {
      ++i;
      ++digits;
    }
    if (digits == 0 || i >= text.size() || text[i] != ';') return 0;
    return i + 1 - pos;
  }
  if (i >= text.size() || !IsAsciiAlpha(text[i])) return 0;
  while (i < text.size() && IsAsciiAlnum(text[i])) ++i;
  if (i >= text.size() || text[i] != ';') return 0;
  return i + 1 - pos;
}

class Parser {
 public:
  Parser(std::string_view source, Node *root) : s_(source), root_(root) {
    stack_.push_back(root);
  }

  void Run() {
    while (pos_ < s_.size()) {
      if (s_[pos_] == '<' && ParseMarkup()) continue;
      size_t start = pos_++;
      while (pos_ < s_.size() && !(s_[pos_] == '<' && LooksLikeMarkup(pos_))) {
        ++pos_;
      }
      AppendText(start, pos_);
    }
    while (stack_.size() > 1) PopTo(stack_.size() - 1, s_.size());
    root_->end = s_.size();
  }

 private:
  bool LooksLikeMarkup(size_t p) const {
    if (p + 1 >= s_.size()) return false;
    char c = s_[p + 1];
    if (IsAsciiAlpha(c) || c == '!' || c == '?') return true;
    return c == '/' && p + 2 < s_.size() && IsAsciiAlpha(s_[p + 2]);
  }

  Node *current() { return stack_.back(); }

  Node *AddChild(Node::Kind kind, size_t start, size_t end) {
    auto node = std::make_unique<Node>();
    node->kind = kind;
    node->start = start;
    node->end = end;
    node->parent = current();
    Node *raw = node.get();
    current()->children.push_back(std::move(node));
    return raw;
  }

  void AppendText(size_t start, size_t end) {
    if (start >= end) return;
    Node *text = AddChild(Node::Kind::kText, start, end);
    text->text = std::string(s_.substr(start, end - start));
  }

  // Closes stack_[index] and everything above it; `end` becomes their end.
  void PopTo(size_t index, size_t end) {
    while (stack_.size() > index) {
      stack_.back()->end = end;
      stack_.pop_back();
    }
  }

  // Index of the innermost open element named `name`, stopping at any of
  // the `barriers`. Returns 0 if none.
  size_t FindOpen(std::string_view name,
                  std::initializer_list<std::string_view> barriers = {}) const {
    for (size_t i = stack_.size() - 1; i >= 1; --i) {
      if (stack_[i]->name == name) return i;
      for (std::string_view b : barriers) {
        if (stack_[i]->name == b) return 0;
      }
    }
    return 0;
  }

  bool ParseMarkup() {
    if (!LooksLikeMarkup(pos_)) return false;
    char c = s_[pos_ + 1];
    if (c == '!') {
      ParseComment();
    } else if (c == '?') {
      ParseBogusComment(pos_ + 2);
    } else if (c == '/') {
      ParseEndTag();
    } else {
      ParseStartTag();
    }
    return true;
  }

  void ParseComment() {
    size_t start = pos_;
    size_t close;
    if (s_.compare(pos_, 4, "<!--") == 0) {
      close = s_.find("-->", pos_ + 4);
      pos_ = close == std::string_view::npos ? s_.size() : close + 3;
    } else if (s_.compare(pos_, 9, "<![CDATA[") == 0) {
      close = s_.find("]]>", pos_ + 9);
      pos_ = close == std::string_view::npos ? s_.size() : close + 3;
    } else {
      ParseBogusComment(pos_ + 2);
      return;
    }
    AddChild(Node::Kind::kComment, start, pos_);
  }

  void ParseBogusComment(size_t from) {
    size_t start = pos_;
    size_t close = s_.find('>', from);
    pos_ = close == std::string_view::npos ? s_.size() : close + 1;
    AddChild(Node::Kind::kComment, start, pos_);
  }

  void ParseEndTag() {
    size_t i = pos_ + 2;
    size_t name_start = i;
    while (i < s_.size() && !IsSpace(s_[i]) && s_[i] != '>' && s_[i] != '/') {
      ++i;
    }
    std::string name = Lower(s_.substr(name_start, i - name_start));
    size_t close = s_.find('>', i);
    pos_ = close == std::string_view::npos ? s_.size() : close + 1;
    size_t open = FindOpen(name);
    if (open > 0) PopTo(open, pos_);
  }

  void ParseStartTag() {
    size_t start = pos_;
    size_t i = pos_ + 1;
    size_t name_start = i;
    while (i < s_.size() && !IsSpace(s_[i]) && s_[i] != '>' && s_[i] != '/') {
      ++i;
    }
    std::string name = Lower(s_.substr(name_start, i - name_start));
    std::vector<Attribute> attrs;
    bool self_closing = false;
    while (i < s_.size()) {
      while (i < s_.size() && IsSpace(s_[i])) ++i;
      if (i >= s_.size()) break;
      if (s_[i] == '>') {
        ++i;
        break;
      }
      if (s_[i] == '/') {
        ++i;
        if (i < s_.size() && s_[i] == '>') {
          self_closing = true;
          ++i;
          break;
        }
        continue;
      }
      size_t an = i;
      ++i;
      while (i < s_.size() && !IsSpace(s_[i]) && s_[i] != '>' &&
             s_[i] != '=' && s_[i] != '/') {
        ++i;
      }
      Attribute attr;
      attr.name = Lower(s_.substr(an, i - an));
      size_t j = i;
      while (j < s_.size() && IsSpace(s_[j])) ++j;
      if (j < s_.size() && s_[j] == '=') {
        ++j;
        while (j < s_.size() && IsSpace(s_[j])) ++j;
        size_t vs, ve;
        if (j < s_.size() && (s_[j] == '"' || s_[j] == '\'')) {
          char quote = s_[j];
          vs = j + 1;
          size_t q = s_.find(quote, vs);
          ve = q == std::string_view::npos ? s_.size() : q;
          j = q == std::string_view::npos ? s_.size() : q + 1;
        } else {
          vs = j;
          while (j < s_.size() && !IsSpace(s_[j]) && s_[j] != '>') ++j;
          ve = j;
        }
        attr.value = DecodeEntities(s_.substr(vs, ve - vs));
        i = j;
      }
      bool seen = std::any_of(attrs.begin(), attrs.end(),
                              [&](const Attribute &a) { return a.name == attr.name; });
      if (!seen) attrs.push_back(std::move(attr));
    }
    pos_ = i;

    CloseImplicitly(name, start);
    Node *element = AddChild(Node::Kind::kElement, start, pos_);
    element->name = name;
    element->attributes = std::move(attrs);

    if (VoidElements().count(name) > 0 || self_closing) return;
    stack_.push_back(element);
    if (RawTextElements().count(name) > 0) ParseRawText(name);
  }

  void CloseImplicitly(const std::string &name, size_t at) {
    size_t open = 0;
    if (ClosesParagraph().count(name) > 0) {
      open = FindOpen("p", {"table", "button"});
    } else if (name == "li") {
      open = FindOpen("li", {"ul", "ol"});
    } else if (name == "dt" || name == "dd") {
      open = FindOpen("dd", {"dl"});
      if (open == 0) open = FindOpen("dt", {"dl"});
    } else if (name == "tr") {
      open = FindOpen("tr", {"table"});
    } else if (name == "td" || name == "th") {
      open = FindOpen("td", {"tr", "table"});
      if (open == 0) open = FindOpen("th", {"tr", "table"});
    } else if (name == "option") {
      open = FindOpen("option", {"select"});
    } else if (name == "a") {
      open = FindOpen("a");
    }
    if (open > 0) PopTo(open, at);
  }

  void ParseRawText(const std::string &name) {
    size_t start = pos_;
    size_t end = pos_;
    std::string close = "</" + name;
    while (true) {
      end = s_.find("</", end);
      if (end == std::string_view::npos) {
        end = s_.size();
        break;
      }
      if (StartsWithNoCase(s_, end, close)) {
        size_t after = end + close.size();
        if (after >= s_.size() || IsSpace(s_[after]) || s_[after] == '>' ||
            s_[after] == '/') {
          break;
        }
      }
      end += 2;
    }
    AppendText(start, end);
    pos_ = end;
    if (end < s_.size()) ParseEndTag();
  }

  std::string_view s_;
  Node *root_;
  size_t pos_ = 0;
  std::vector<Node *> stack_;
};

void VisitNode(const Node &node,
               const std::function<void(const Node &)> &visitor) {
  for (const auto &child : node.children) {
    visitor(*child);
    VisitNode(*child, visitor);
  }
}

void CollectText(const Node &node, std::string *out) {
  for (const auto &child : node.children) {
    if (child->is_text()) {
      out->append(DecodeEntities(child->text));
    } else if (child->is_element()) {
      CollectText(*child, out);
    }
  }
}

}  // namespace

const std::string *Node::attribute(std::string_view attr) const {
  for (const Attribute &a : attributes) {
    if (a.name == attr) return &a.value;
  }
  return nullptr;
}

bool Node::HasClass(std::string_view cls) const {
  const std::string *value = attribute("class");
  if (value == nullptr || cls.empty()) return false;
  std::string_view v = *value;
  size_t pos = 0;
  while (pos < v.size()) {
    while (pos < v.size() && IsSpace(v[pos])) ++pos;
    size_t end = pos;
    while (end < v.size() && !IsSpace(v[end])) ++end;
    if (v.substr(pos, end - pos) == cls) return true;
    pos = end;
  }
  return false;
}

const Node *Node::FindAncestor(std::string_view element) const {
  for (const Node *p = parent; p != nullptr; p = p->parent) {
    if (p->is_element() && p->name == element) return p;
  }
  return nullptr;
}

std::string Node::TextContent() const {
  std::string out;
  if (is_text()) return DecodeEntities(text);
  CollectText(*this, &out);
  return out;
}

Document Document::Parse(std::string_view source) {
  Document doc;
  doc.source_ = std::string(source);
  doc.root_ = std::make_unique<Node>();
  doc.root_->kind = Node::Kind::kDocument;
  Parser parser(doc.source_, doc.root_.get());
  parser.Run();
  return doc;
}

void Document::Visit(const std::function<void(const Node &)> &visitor) const {
  VisitNode(*root_, visitor);
}

std::string DecodeEntities(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  size_t i = 0;
  while (i < text.size()) {
    if (text[i] != '&') {
      out.push_back(text[i++]);
      continue;
    }
    size_t len = ReferenceLength(text, i);
    if (len == 0) {
      out.push_back(text[i++]);
      continue;
    }
    std::string_view ref = text.substr(i + 1, len - 2);
    if (ref[0] == '#') {
      bool hex = ref.size() > 1 && (ref[1] == 'x' || ref[1] == 'X');
      uint32_t cp = 0;
      for (size_t k = hex ? 2 : 1; k < ref.size(); ++k) {
        char c = ref[k];
        uint32_t digit = (c >= '0' && c <= '9')   ? c - '0'
                         : (c >= 'a' && c <= 'f') ? c - 'a' + 10
                                                  : c - 'A' + 10;
        cp = cp * (hex ? 16 : 10) + digit;
        if (cp > 0x10FFFF) cp = 0x110000;
      }
      AppendUtf8(cp, &out);
    } else {
      auto it = NamedEntities().find(ref);
      if (it == NamedEntities().end()) {
        out.append(text.substr(i, len));
      } else {
        AppendUtf8(it->second, &out);
      }
    }
    i += len;
  }
  return out;
}

std::string MaskCharacterReferences(std::string_view text) {
  std::string out(text);
  for (size_t i = 0; i < out.size(); ++i) {
    if (out[i] != '&') continue;
    size_t len = ReferenceLength(text, i);
    for (size_t k = 0; k < len; ++k) out[i + k] = ' ';
    if (len > 0) i += len - 1;
  }
  return out;
}

std::string CollapseWhitespace(std::string_view text) {
  std::string out;
  bool pending_space = false;
  size_t i = 0;
  while (i < text.size()) {
    bool space = IsSpace(text[i]);
    size_t width = 1;
    if (!space && static_cast<unsigned char>(text[i]) == 0xC2 &&
        i + 1 < text.size() && static_cast<unsigned char>(text[i + 1]) == 0xA0) {
      space = true;
      width = 2;
    }
    if (space) {
      pending_space = !out.empty();
    } else {
      if (pending_space) out.push_back(' ');
      pending_space = false;
      out.push_back(text[i]);
    }
    i += width;
  }
  return out;
}

std::string EscapeAttribute(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (char c : text) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      case '\'': out += "&#39;"; break;
      default: out.push_back(c);
    }
  }
  return out;
}

}  // namespace html
}  // namespace nnexus
