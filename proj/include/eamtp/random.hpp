// Copyright 2026 The eamtp Authors
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

#pragma once

#include <cstdint>
#include <stdexcept>

namespace eamtp {

/// Counter-based SplitMix64. Draw j of stream s is mix(key + (s * kDrawsPerStream
/// + j + 1) * golden), where key = mix(seed). Any (stream, draw) pair can be
/// evaluated directly, so streams split across workers reproduce exactly.
class CounterRng {
 public:
  static constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ull;
  static constexpr std::uint64_t kDrawsPerStream = 16;

  explicit CounterRng(std::uint64_t seed) : key_(mix(seed)) {}

  static constexpr std::uint64_t mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  std::uint64_t bits(std::uint64_t stream, std::uint64_t draw) const {
    return mix(key_ + (stream * kDrawsPerStream + draw + 1) * kGolden);
  }

  /// Uniform on [0, 1) with 53 random bits.
  double uniform(std::uint64_t stream, std::uint64_t draw) const {
    return static_cast<double>(bits(stream, draw) >> 11) * 0x1.0p-53;
  }

 private:
  std::uint64_t key_;
};

/// Sequential view of one stream.
class StreamCursor {
 public:
  StreamCursor(const CounterRng& rng, std::uint64_t stream) : rng_(rng), stream_(stream) {}
  double uniform() {
    if (next_ >= CounterRng::kDrawsPerStream) throw std::logic_error("stream exhausted");
    return rng_.uniform(stream_, next_++);
  }

 private:
  const CounterRng& rng_;
  std::uint64_t stream_;
  std::uint64_t next_ = 0;
};

}  // namespace eamtp
