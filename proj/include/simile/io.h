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

#ifndef SIMILE_IO_H_
#define SIMILE_IO_H_

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace simile {

// Whole-file read; throws IoError.
std::string ReadFile(const std::filesystem::path &path);

// Writes through a temporary sibling and renames it into place.
void WriteFileAtomic(const std::filesystem::path &path, std::string_view contents);

// Splits on '\n', dropping a trailing '\r' from each line. A final newline
// does not produce an empty last line.
std::vector<std::string> SplitLines(std::string_view contents);

}  // namespace simile

#endif  // SIMILE_IO_H_
