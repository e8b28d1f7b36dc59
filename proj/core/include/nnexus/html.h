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

#ifndef NNEXUS_HTML_H_
#define NNEXUS_HTML_H_

#include <functional>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace nnexus {
namespace html {

struct Attribute {
  std::string name;   // lowercased
  std::string value;  // character references decoded
};

// A node of the lenient document tree. Byte offsets always refer to the
// original source string, which the parser never modifies.
struct Node {
  enum class Kind { kDocument, kElement, kText, kComment };

  Kind kind = Kind::kDocument;
  std::string name;  // lowercased tag name, elements only
  std::vector<Attribute> attributes;
  std::string text;  // raw source bytes, text nodes only
  size_t start = 0;
  size_t end = 0;
  Node *parent = nullptr;
  std::vector<std::unique_ptr<Node>> children;

  bool is_element() const { return kind == Kind::kElement; }
  bool is_text() const { return kind == Kind::kText; }

  // Returns the attribute value, or null if the attribute is absent.
  const std::string *attribute(std::string_view attr) const;
  bool has_attribute(std::string_view attr) const {
    return attribute(attr) != nullptr;
  }
  // True if the whitespace-separated class list contains `cls`.
  bool HasClass(std::string_view cls) const;

  // Nearest proper ancestor element with the given name, or null.
  const Node *FindAncestor(std::string_view element) const;

  // Concatenated, entity-decoded text of all descendant text nodes.
  std::string TextContent() const;
};

// Parses arbitrary, possibly malformed HTML the way a forgiving tag-soup
// parser would: unknown or mismatched end tags are ignored, unclosed elements
// are closed at end of input, and a few elements (p, li, dt/dd, tr, td/th,
// option, a) are closed implicitly. Parsing never fails.
class Document {
 public:
  static Document Parse(std::string_view source);

  const Node &root() const { return *root_; }
  std::string_view source() const { return source_; }

  // Pre-order traversal over all nodes below the root.
  void Visit(const std::function<void(const Node &)> &visitor) const;

 private:
  Document() = default;

  std::string source_;
  std::unique_ptr<Node> root_;
};

// Decodes named and numeric character references. Unknown names are kept.
std::string DecodeEntities(std::string_view text);

// Replaces every complete character reference ("&name;", "&#123;",
// "&#x1F;") with the same number of spaces, keeping byte offsets intact.
std::string MaskCharacterReferences(std::string_view text);

// Trims and collapses whitespace runs (including U+00A0) to single spaces.
std::string CollapseWhitespace(std::string_view text);

// Escapes &, <, >, " and ' for use inside a double-quoted attribute value.
std::string EscapeAttribute(std::string_view text);

}  // namespace html
}  // namespace nnexus

#endif  // NNEXUS_HTML_H_
