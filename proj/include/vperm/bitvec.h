// Copyright 2026 The vperm Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef VPERM_BITVEC_H_
#define VPERM_BITVEC_H_

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace vperm {

// Fixed-width bit vector. Bit 0 is the lowest position.
class BitVec {
 public:
  BitVec() = default;
  explicit BitVec(size_t width);

  static BitVec FromBits(const std::vector<int> &bits);
  static BitVec Ones(size_t width);
  // Bit `pos` set, all others clear. `pos >= width` gives all-zeros.
  static BitVec OneHot(size_t width, size_t pos);

  size_t size() const { return width_; }
  bool Get(size_t i) const {
    return (words_[i / 64] >> (i % 64)) & 1u;
  }
  void Set(size_t i, bool value);

  size_t Popcount() const;
  // Number of set bits at positions < limit.
  size_t PopcountBelow(size_t limit) const;
  bool None() const;
  // Index of the single set bit, or size() when none. Only meaningful when
  // Popcount() <= 1.
  size_t FirstSet() const;

  // Renders bit 0 first, e.g. "10110010".
  std::string ToString() const;

  friend bool operator==(const BitVec &, const BitVec &) = default;

 private:
  size_t width_ = 0;
  std::vector<uint64_t> words_;
};

// Per-element predicate (v0) or compress operand mask; bit i governs element i.
using MaskReg = BitVec;
// Decoder output; at most one bit set, all-zeros means "no destination".
using OneHotVec = BitVec;

}  // namespace vperm

#endif  // VPERM_BITVEC_H_
