// Copyright 2026 The hdemand Authors
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

#pragma once

#include <array>
#include <cstdint>
#include <limits>

namespace hdemand {

/// A reproducible random stream identified by (master_seed, stream_id).
///
/// Streams form a tree: split(child) derives an independent child stream
/// whose identity depends only on the parent identity and the child id, never
/// on how many numbers the parent has produced. Bootstrap replicate i draws
/// from split(i), so results do not depend on scheduling order.
///
/// Satisfies UniformRandomBitGenerator; the engine is xoshiro256** seeded
/// through splitmix64.
class RngStream {
 public:
  using result_type = std::uint64_t;

  RngStream(std::uint64_t master_seed, std::uint64_t stream_id);

  RngStream split(std::uint64_t child_id) const;

  std::uint64_t master_seed() const { return master_seed_; }
  std::uint64_t stream_id() const { return stream_id_; }

  result_type operator()();

  /// Uniform double in [0, 1).
  double uniform();

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() {
    return std::numeric_limits<result_type>::max();
  }

 private:
  RngStream(std::uint64_t master_seed, std::uint64_t stream_id,
            std::uint64_t key);
  void seed_from_key();

  std::uint64_t master_seed_;
  std::uint64_t stream_id_;
  std::uint64_t key_;
  std::array<std::uint64_t, 4> state_{};
};

}  // namespace hdemand
