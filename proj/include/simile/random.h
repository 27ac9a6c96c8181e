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

#ifndef SIMILE_RANDOM_H_
#define SIMILE_RANDOM_H_

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

namespace simile {

// Fisher-Yates shuffle driven directly by mt19937_64 output. The standard
// distributions are implementation-defined, so std::shuffle would not give
// the same order on every standard library.
template <typename T>
void Shuffle(std::vector<T> &items, std::mt19937_64 &rng) {
  for (std::size_t i = items.size(); i > 1; --i) {
    const std::size_t j = static_cast<std::size_t>(rng() % i);
    std::swap(items[i - 1], items[j]);
  }
}

}  // namespace simile

#endif  // SIMILE_RANDOM_H_
