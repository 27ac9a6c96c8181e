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

#ifndef SIMILE_BUNDLED_DATA_H_
#define SIMILE_BUNDLED_DATA_H_

#include <string_view>

// Copies of the files under data/, compiled in so the library works without
// an installed data directory.
namespace simile::bundled {

extern const std::string_view kAbbreviations;
extern const std::string_view kStemmerRules;

}  // namespace simile::bundled

#endif  // SIMILE_BUNDLED_DATA_H_
