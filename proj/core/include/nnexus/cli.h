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

#ifndef NNEXUS_CLI_H_
#define NNEXUS_CLI_H_

#include <iosfwd>
#include <string>
#include <vector>

namespace nnexus {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitData = 2;

// Entry point of the `nnexus` tool. `args` includes the program name.
//   index    --rules R --source S --corpus C [--base-url B] FILES...
//   annotate --corpus C [--format embed|standoff] [--policy first|all]
//            [--sources a,b] [--output-dir D] [FILES...]   (stdin if none)
//   serve    --corpus C [--port P] [--host H] [--config CFG]
//   stats    --corpus C [--validate]
// Returns 0 on success, 1 on usage errors, 2 on data errors.
int RunCli(const std::vector<std::string> &args, std::istream &in,
           std::ostream &out, std::ostream &err);

}  // namespace nnexus

#endif  // NNEXUS_CLI_H_
