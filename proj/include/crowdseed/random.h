// Copyright 2026 The Crowdseed Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef CROWDSEED_RANDOM_H_
#define CROWDSEED_RANDOM_H_

#include <cstdint>
#include <initializer_list>
#include <random>

namespace crowdseed {

using Rng = std::mt19937_64;

// SplitMix64 finalizer.
inline uint64_t MixSeed(uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Derives an independent stream seed from a base seed and a list of
// coordinates. Order of the coordinates matters.
inline uint64_t DeriveSeed(uint64_t base, std::initializer_list<uint64_t> coords) {
  uint64_t h = MixSeed(base);
  for (uint64_t c : coords) h = MixSeed(h ^ MixSeed(c));
  return h;
}

}  // namespace crowdseed

#endif  // CROWDSEED_RANDOM_H_
