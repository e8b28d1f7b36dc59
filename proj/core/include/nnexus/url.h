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

#ifndef NNEXUS_URL_H_
#define NNEXUS_URL_H_

#include <string>
#include <string_view>

namespace nnexus {

// True for "scheme://authority..." URLs with a non-empty authority and no
// whitespace or control characters. "file:///path" is accepted as well.
bool IsAbsoluteUrl(std::string_view url);

// Resolves a (possibly relative) reference against an absolute base URL using
// the RFC 3986 merge and dot-segment removal rules. Absolute references are
// returned unchanged.
std::string ResolveUrl(std::string_view base, std::string_view reference);

}  // namespace nnexus

#endif  // NNEXUS_URL_H_
