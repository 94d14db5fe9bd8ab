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

#include "hdemand/rng.hpp"

namespace hdemand {
namespace {

constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ULL;
// Distinct from kGolden so (seed, stream) and (stream, seed) never share a key.
constexpr std::uint64_t kSeedSalt = 0x6a09e667f3bcc909ULL;

std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::uint64_t combine(std::uint64_t parent, std::uint64_t child) {
  return mix64(parent ^ mix64(child + kGolden));
}

std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

}  // namespace

RngStream::RngStream(std::uint64_t master_seed, std::uint64_t stream_id)
    : RngStream(master_seed, stream_id,
                combine(mix64(master_seed ^ kSeedSalt), stream_id)) {}

RngStream::RngStream(std::uint64_t master_seed, std::uint64_t stream_id,
                     std::uint64_t key)
    : master_seed_(master_seed), stream_id_(stream_id), key_(key) {
  seed_from_key();
}

RngStream RngStream::split(std::uint64_t child_id) const {
  return RngStream(master_seed_, stream_id_, combine(key_, child_id));
}

void RngStream::seed_from_key() {
  std::uint64_t sm = key_;
  for (auto& word : state_) {
    sm += kGolden;
    word = mix64(sm);
  }
}

RngStream::result_type RngStream::operator()() {
  const std::uint64_t result = rotl(state_[1] * 5, 7) * 9;
  const std::uint64_t t = state_[1] << 17;
  state_[2] ^= state_[0];
  state_[3] ^= state_[1];
  state_[1] ^= state_[2];
  state_[0] ^= state_[3];
  state_[2] ^= t;
  state_[3] = rotl(state_[3], 45);
  return result;
}

double RngStream::uniform() {
  return static_cast<double>((*this)() >> 11) * 0x1.0p-53;
}

}  // namespace hdemand
