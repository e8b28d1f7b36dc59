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

#include "nnexus/normalizer.h"

#include <unicode/locid.h>
#include <unicode/normalizer2.h>
#include <unicode/uchar.h>
#include <unicode/unistr.h>

#include <fstream>

#include "nnexus/error.h"

namespace nnexus {

namespace internal {
extern const std::string_view kShippedStopwords;
}  // namespace internal

namespace {

constexpr char32_t kInvalid = 0xFFFFFFFF;

// Decodes one code point at text[*pos] and advances *pos. Malformed
// sequences consume one byte and yield kInvalid.
char32_t DecodeUtf8(std::string_view text, size_t *pos) {
  auto byte = [&](size_t i) { return static_cast<unsigned char>(text[i]); };
  size_t i = *pos;
  unsigned char b0 = byte(i);
  if (b0 < 0x80) {
    *pos = i + 1;
    return b0;
  }
  int len;
  char32_t cp;
  if ((b0 & 0xE0) == 0xC0) {
    len = 2;
    cp = b0 & 0x1F;
  } else if ((b0 & 0xF0) == 0xE0) {
    len = 3;
    cp = b0 & 0x0F;
  } else if ((b0 & 0xF8) == 0xF0) {
    len = 4;
    cp = b0 & 0x07;
  } else {
    *pos = i + 1;
    return kInvalid;
  }
  if (i + len > text.size()) {
    *pos = i + 1;
    return kInvalid;
  }
  for (int k = 1; k < len; ++k) {
    unsigned char b = byte(i + k);
    if ((b & 0xC0) != 0x80) {
      *pos = i + 1;
      return kInvalid;
    }
    cp = (cp << 6) | (b & 0x3F);
  }
  static const char32_t kMin[] = {0, 0, 0x80, 0x800, 0x10000};
  if (cp < kMin[len] || cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF)) {
    *pos = i + 1;
    return kInvalid;
  }
  *pos = i + len;
  return cp;
}

bool IsAlnum(char32_t cp) {
  if (cp == kInvalid) return false;
  if (cp < 0x80) {
    return (cp >= 'a' && cp <= 'z') || (cp >= 'A' && cp <= 'Z') ||
           (cp >= '0' && cp <= '9');
  }
  return u_isalnum(static_cast<UChar32>(cp));
}

bool IsMark(char32_t cp) {
  if (cp == kInvalid || cp < 0x300) return false;
  int8_t type = u_charType(static_cast<UChar32>(cp));
  return type == U_NON_SPACING_MARK || type == U_COMBINING_SPACING_MARK ||
         type == U_ENCLOSING_MARK;
}

bool IsHyphen(char32_t cp) {
  return cp == U'-' || cp == 0x2010 || cp == 0x2011;
}

bool IsAscii(std::string_view s) {
  for (unsigned char c : s) {
    if (c >= 0x80) return false;
  }
  return true;
}

std::string FoldCase(std::string_view token) {
  if (IsAscii(token)) {
    std::string out(token);
    for (char &c : out) {
      if (c >= 'A' && c <= 'Z') c = c - 'A' + 'a';
    }
    return out;
  }
  icu::UnicodeString text = icu::UnicodeString::fromUTF8(
      icu::StringPiece(token.data(), static_cast<int32_t>(token.size())));
  text.toLower(icu::Locale::getRoot());
  UErrorCode status = U_ZERO_ERROR;
  const icu::Normalizer2 *nfc = icu::Normalizer2::getNFCInstance(status);
  if (U_SUCCESS(status)) {
    icu::UnicodeString normalized = nfc->normalize(text, status);
    if (U_SUCCESS(status)) text = normalized;
  }
  std::string out;
  text.toUTF8String(out);
  return out;
}

size_t CodePointLength(std::string_view s) {
  size_t n = 0;
  for (unsigned char c : s) {
    if ((c & 0xC0) != 0x80) ++n;
  }
  return n;
}

bool EndsWith(std::string_view s, std::string_view suffix) {
  return s.size() >= suffix.size() &&
         s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

// Applies the first matching plural rule. Returns false if none applies.
bool StemOnce(std::string *word) {
  std::string_view w = *word;
  size_t chars = CodePointLength(w);
  if (EndsWith(w, "ies") && chars > 4) {
    word->replace(word->size() - 3, 3, "y");
    return true;
  }
  if (EndsWith(w, "sses")) {
    word->resize(word->size() - 2);
    return true;
  }
  if (EndsWith(w, "es")) {
    std::string_view stem = w.substr(0, w.size() - 2);
    if (EndsWith(stem, "s") || EndsWith(stem, "x") || EndsWith(stem, "z") ||
        EndsWith(stem, "ch") || EndsWith(stem, "sh")) {
      word->resize(word->size() - 2);
      return true;
    }
  }
  if (EndsWith(w, "s") && chars > 3 && !EndsWith(w, "ss") &&
      !EndsWith(w, "us") && !EndsWith(w, "is")) {
    word->resize(word->size() - 1);
    return true;
  }
  return false;
}

std::vector<std::string> ParseStopwordText(std::string_view text) {
  std::vector<std::string> words;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    std::string_view line = text.substr(pos, nl - pos);
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ' ||
                             line.back() == '\t')) {
      line.remove_suffix(1);
    }
    while (!line.empty() && (line.front() == ' ' || line.front() == '\t')) {
      line.remove_prefix(1);
    }
    if (!line.empty() && line.front() != '#') words.emplace_back(line);
    pos = nl + 1;
  }
  return words;
}

}  // namespace

const std::vector<std::string> &ShippedStopwords() {
  static const std::vector<std::string> kWords =
      ParseStopwordText(internal::kShippedStopwords);
  return kWords;
}

std::string StemPlural(std::string_view word) {
  std::string out(word);
  while (StemOnce(&out)) {
  }
  return out;
}

Normalizer::Normalizer() : Normalizer(ShippedStopwords()) {}

Normalizer::Normalizer(std::vector<std::string> stopwords) {
  for (std::string &w : stopwords) {
    std::string folded = FoldCase(w);
    if (!folded.empty()) stopwords_.insert(std::move(folded));
  }
}

Normalizer Normalizer::FromStopwordFile(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIoError, "cannot open stopword file " + path);
  std::string text((std::istreambuf_iterator<char>(in)),
                   std::istreambuf_iterator<char>());
  return Normalizer(ParseStopwordText(text));
}

bool Normalizer::IsStopword(std::string_view lowered) const {
  return stopwords_.count(std::string(lowered)) > 0;
}

std::vector<TokenSpan> Normalizer::Tokenize(std::string_view text) const {
  std::vector<TokenSpan> tokens;
  size_t pos = 0;
  size_t token_start = 0;
  size_t token_end = 0;
  bool in_token = false;

  auto flush = [&] {
    if (!in_token) return;
    TokenSpan span;
    span.start = token_start;
    span.end = token_end;
    span.surface = std::string(text.substr(token_start, token_end - token_start));
    span.norm = NormalizeToken(span.surface);
    tokens.push_back(std::move(span));
    in_token = false;
  };

  while (pos < text.size()) {
    size_t at = pos;
    char32_t cp = DecodeUtf8(text, &pos);
    if (IsAlnum(cp) || (in_token && IsMark(cp))) {
      if (!in_token) {
        in_token = true;
        token_start = at;
      }
      token_end = pos;
      continue;
    }
    if (in_token && IsHyphen(cp) && token_end == at && pos < text.size()) {
      size_t peek = pos;
      char32_t next = DecodeUtf8(text, &peek);
      if (IsAlnum(next)) {
        token_end = peek;
        pos = peek;
        continue;
      }
    }
    flush();
  }
  flush();
  return tokens;
}

std::string Normalizer::NormalizeToken(std::string_view token) const {
  std::string lowered = FoldCase(token);
  if (IsStopword(lowered)) return std::string();
  std::string stem = StemPlural(lowered);
  if (IsStopword(stem)) return std::string();
  return stem;
}

std::vector<std::string> Normalizer::TryNormalizePhrase(
    std::string_view phrase) const {
  std::vector<std::string> out;
  for (TokenSpan &t : Tokenize(phrase)) {
    if (!t.norm.empty()) out.push_back(std::move(t.norm));
  }
  return out;
}

std::vector<std::string> Normalizer::NormalizePhrase(
    std::string_view phrase) const {
  std::vector<std::string> out = TryNormalizePhrase(phrase);
  if (out.empty()) {
    throw Error(ErrorCode::kEmptyPhrase,
                "'" + std::string(phrase) + "' has no non-stopword tokens");
  }
  return out;
}

std::shared_ptr<const Normalizer> DefaultNormalizer() {
  static const std::shared_ptr<const Normalizer> kDefault =
      std::make_shared<const Normalizer>();
  return kDefault;
}

}  // namespace nnexus
