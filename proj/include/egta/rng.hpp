// Copyright 2026 The EGTA Authors
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

#ifndef EGTA_RNG_HPP_
#define EGTA_RNG_HPP_

#include <cstdint>
#include <initializer_list>
#include <string_view>

// Counter-based randomness. Every random quantity in the library is a pure
// function of (seed, discriminators...), so results never depend on call
// order or thread scheduling.

namespace egta {

// SplitMix64 finalizer (Stafford variant 13).
constexpr std::uint64_t Mix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

constexpr std::uint64_t HashCombine(std::uint64_t h, std::uint64_t v) {
  return Mix64(h ^ Mix64(v + 0x632be59bd9b4e019ULL));
}

constexpr std::uint64_t Hash(std::initializer_list<std::uint64_t> words) {
  std::uint64_t h = 0x2545f4914f6cdd1dULL;
  for (std::uint64_t w : words) h = HashCombine(h, w);
  return h;
}

// FNV-1a, used to turn experiment names into seed discriminators.
constexpr std::uint64_t HashString(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (char c : s) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001b3ULL;
  }
  return Mix64(h);
}

// Maps 64 random bits to the open interval (0, 1).
constexpr double OpenUnit(std::uint64_t bits) {
  return (static_cast<double>(bits >> 11) + 0.5) * 0x1.0p-53;
}

constexpr int RademacherSign(std::uint64_t bits) {
  return (bits >> 63) != 0 ? 1 : -1;
}

// Sequential stream over a counter; Next() is Hash({seed, counter++}).
class CounterRng {
 public:
  explicit constexpr CounterRng(std::uint64_t seed) : seed_(Mix64(seed)) {}

  constexpr std::uint64_t Next() { return HashCombine(seed_, counter_++); }
  constexpr double Uniform() { return OpenUnit(Next()); }
  constexpr double Uniform(double lo, double hi) {
    return lo + (hi - lo) * Uniform();
  }
  // Uniform integer in [lo, hi], via Lemire's multiply-shift (bias < 2^-32
  // for the small ranges used here).
  std::int64_t UniformInt(std::int64_t lo, std::int64_t hi) {
    const auto span = static_cast<unsigned __int128>(hi - lo + 1);
    return lo + static_cast<std::int64_t>((span * Next()) >> 64);
  }
  constexpr bool Bernoulli(double p) { return Uniform() < p; }

 private:
  std::uint64_t seed_;
  std::uint64_t counter_ = 0;
};

}  // namespace egta

#endif  // EGTA_RNG_HPP_
