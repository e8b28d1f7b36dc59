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

#include "nnexus/url.h"

#include <vector>

namespace nnexus {

namespace {

struct UrlParts {
  std::string scheme;
  bool has_authority = false;
  std::string authority;
  std::string path;
  bool has_query = false;
  std::string query;
  bool has_fragment = false;
  std::string fragment;
};

bool IsSchemeChar(char c, bool first) {
  bool alpha = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z');
  if (first) return alpha;
  return alpha || (c >= '0' && c <= '9') || c == '+' || c == '-' || c == '.';
}

// Returns the length of a leading "scheme:" (excluding the colon), or 0.
size_t SchemeLength(std::string_view s) {
  for (size_t i = 0; i < s.size(); ++i) {
    if (s[i] == ':') return i;
    if (!IsSchemeChar(s[i], i == 0)) return 0;
  }
  return 0;
}

UrlParts Split(std::string_view s) {
  UrlParts parts;
  size_t scheme_len = SchemeLength(s);
  if (scheme_len > 0) {
    parts.scheme = std::string(s.substr(0, scheme_len));
    s.remove_prefix(scheme_len + 1);
  }
  if (s.size() >= 2 && s[0] == '/' && s[1] == '/') {
    s.remove_prefix(2);
    size_t end = s.find_first_of("/?#");
    parts.has_authority = true;
    parts.authority = std::string(s.substr(0, end));
    s.remove_prefix(end == std::string_view::npos ? s.size() : end);
  }
  size_t hash = s.find('#');
  if (hash != std::string_view::npos) {
    parts.has_fragment = true;
    parts.fragment = std::string(s.substr(hash + 1));
    s = s.substr(0, hash);
  }
  size_t question = s.find('?');
  if (question != std::string_view::npos) {
    parts.has_query = true;
    parts.query = std::string(s.substr(question + 1));
    s = s.substr(0, question);
  }
  parts.path = std::string(s);
  return parts;
}

std::string RemoveDotSegments(std::string_view path) {
  std::vector<std::string_view> out;
  bool absolute = !path.empty() && path[0] == '/';
  bool trailing_slash = false;
  size_t pos = absolute ? 1 : 0;
  while (pos <= path.size()) {
    size_t next = path.find('/', pos);
    if (next == std::string_view::npos) next = path.size();
    std::string_view seg = path.substr(pos, next - pos);
    bool last = next == path.size();
    if (seg == ".") {
      trailing_slash = last;
    } else if (seg == "..") {
      if (!out.empty()) out.pop_back();
      trailing_slash = last;
    } else {
      out.push_back(seg);
      trailing_slash = false;
    }
    pos = next + 1;
  }
  std::string result = absolute ? "/" : "";
  for (size_t i = 0; i < out.size(); ++i) {
    if (i > 0) result += '/';
    result += out[i];
  }
  if (trailing_slash && !result.empty() && result.back() != '/') result += '/';
  return result;
}

std::string Join(const UrlParts &p) {
  std::string out;
  if (!p.scheme.empty()) out += p.scheme + ":";
  if (p.has_authority) out += "//" + p.authority;
  out += p.path;
  if (p.has_query) out += "?" + p.query;
  if (p.has_fragment) out += "#" + p.fragment;
  return out;
}

}  // namespace

bool IsAbsoluteUrl(std::string_view url) {
  for (unsigned char c : url) {
    if (c <= 0x20 || c == 0x7f) return false;
  }
  size_t scheme_len = SchemeLength(url);
  if (scheme_len == 0) return false;
  std::string_view rest = url.substr(scheme_len + 1);
  if (rest.size() < 2 || rest[0] != '/' || rest[1] != '/') return false;
  rest.remove_prefix(2);
  std::string_view scheme = url.substr(0, scheme_len);
  if (scheme == "file") return !rest.empty();
  size_t end = rest.find_first_of("/?#");
  return !rest.empty() && end != 0;
}

std::string ResolveUrl(std::string_view base, std::string_view reference) {
  UrlParts ref = Split(reference);
  if (!ref.scheme.empty()) {
    ref.path = RemoveDotSegments(ref.path);
    return Join(ref);
  }
  UrlParts b = Split(base);
  UrlParts target;
  target.scheme = b.scheme;
  if (ref.has_authority) {
    target.has_authority = true;
    target.authority = ref.authority;
    target.path = RemoveDotSegments(ref.path);
    target.has_query = ref.has_query;
    target.query = ref.query;
  } else {
    target.has_authority = b.has_authority;
    target.authority = b.authority;
    if (ref.path.empty()) {
      target.path = b.path;
      target.has_query = ref.has_query || b.has_query;
      target.query = ref.has_query ? ref.query : b.query;
    } else {
      if (ref.path[0] == '/') {
        target.path = RemoveDotSegments(ref.path);
      } else {
        std::string merged;
        if (b.has_authority && b.path.empty()) {
          merged = "/" + ref.path;
        } else {
          size_t slash = b.path.rfind('/');
          merged = (slash == std::string::npos ? std::string()
                                               : b.path.substr(0, slash + 1)) +
                   ref.path;
        }
        target.path = RemoveDotSegments(merged);
      }
      target.has_query = ref.has_query;
      target.query = ref.query;
    }
  }
  target.has_fragment = ref.has_fragment;
  target.fragment = ref.fragment;
  return Join(target);
}

}  // namespace nnexus
