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

#ifndef VPERM_CARRY_SAVE_H_
#define VPERM_CARRY_SAVE_H_

#include <cstddef>
#include <cstdint>
#include <vector>

#include "vperm/bitvec.h"

// Carry-propagation-free destination arithmetic: carry-save prefix
// counters, 3:2 index adders and sum-addressed decoders.
//
// All values live in a `width`-bit two's-complement field. Nothing in this
// file forms a carry-propagated sum; the only helper that does (Value) is
// for inspection and tests.
namespace vperm {

// Redundant pair whose value is (sum + carry) mod 2^width. `carry` is
// already aligned to its weight.
struct CarrySaveSum {
  uint32_t sum = 0;
  uint32_t carry = 0;

  friend bool operator==(const CarrySaveSum &, const CarrySaveSum &) = default;
};

// ceil(log2(num_positions)) + 2. Holds index+offset up to 2E-1 and
// index-offset down to -E.
unsigned FieldWidth(size_t num_positions);

// Signed value of the pair, resolved with an ordinary adder.
int64_t Value(CarrySaveSum x, unsigned width);

// One rank of full adders: a + b + c == sum + carry (mod 2^width).
CarrySaveSum Compress3To2(uint32_t a, uint32_t b, uint32_t c, unsigned width);

// Entry i counts the set bits of `mask` at positions i+1 .. n-1. Built as a
// chain of 3:2 cells running from position n-1 down to 0.
std::vector<CarrySaveSum> CountOnesHighToLow(const BitVec &mask, size_t n);

// Entry i counts the clear bits of `mask` at positions 0 .. i-1.
std::vector<CarrySaveSum> CountZerosLowToHigh(const BitVec &mask, size_t n);

// index + prefix, or index - prefix when `negate`. The subtraction uses
// index - s - c == (index + 2) + ~s + ~c, so it stays a single 3:2 rank with
// a constant first operand.
CarrySaveSum CsaAddIndex(CarrySaveSum prefix, unsigned index, bool negate,
                         unsigned width);

// Sum-addressed match: true iff sum + carry == target (mod 2^width). Each
// bit position checks its own sum bit against the carry that bit i-1 would
// emit if its sum bit equalled target bit i-1, so no carry chain is formed.
bool SadMatch(CarrySaveSum x, uint32_t target, unsigned width);

// One-hot decode of the pair over outputs 0 .. range-1. Values that are
// negative or >= range decode to all-zeros. Requires range <= 2^(width-1).
OneHotVec SadDecode(CarrySaveSum x, size_t range, unsigned width);

}  // namespace vperm

#endif  // VPERM_CARRY_SAVE_H_
