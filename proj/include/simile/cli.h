// Copyright 2026 The Simile Miner Authors.
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

#ifndef SIMILE_CLI_H_
#define SIMILE_CLI_H_

#include <iosfwd>

namespace simile {

// Exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 64;    // bad flags or arguments
inline constexpr int kExitInput = 65;    // unreadable or malformed input
inline constexpr int kExitRuntime = 70;  // anything else

int RunCli(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

}  // namespace simile

#endif  // SIMILE_CLI_H_
