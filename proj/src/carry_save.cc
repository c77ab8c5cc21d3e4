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

#include "vperm/carry_save.h"

#include <bit>

namespace vperm {

namespace {

uint32_t FieldMask(unsigned width) {
  return width >= 32 ? ~uint32_t{0} : (uint32_t{1} << width) - 1;
}

}  // namespace

unsigned FieldWidth(size_t num_positions) {
  const unsigned log2 =
      num_positions <= 1 ? 0 : std::bit_width(num_positions - 1);
  return log2 + 2;
}

int64_t Value(CarrySaveSum x, unsigned width) {
  const uint64_t m = FieldMask(width);
  const uint64_t raw = (uint64_t{x.sum} + x.carry) & m;
  const uint64_t sign = uint64_t{1} << (width - 1);
  return raw & sign ? static_cast<int64_t>(raw) - (int64_t{1} << width)
                    : static_cast<int64_t>(raw);
}

CarrySaveSum Compress3To2(uint32_t a, uint32_t b, uint32_t c, unsigned width) {
  const uint32_t m = FieldMask(width);
  const uint32_t sum = (a ^ b ^ c) & m;
  const uint32_t majority = (a & b) | (a & c) | (b & c);
  return {sum, (majority << 1) & m};
}

std::vector<CarrySaveSum> CountOnesHighToLow(const BitVec &mask, size_t n) {
  const unsigned width = FieldWidth(n);
  std::vector<CarrySaveSum> out(n);
  if (n == 0) return out;
  for (size_t i = n - 1; i-- > 0;) {
    const CarrySaveSum &above = out[i + 1];
    out[i] = Compress3To2(above.sum, above.carry, mask.Get(i + 1), width);
  }
  return out;
}

std::vector<CarrySaveSum> CountZerosLowToHigh(const BitVec &mask, size_t n) {
  const unsigned width = FieldWidth(n);
  std::vector<CarrySaveSum> out(n);
  for (size_t i = 1; i < n; ++i) {
    const CarrySaveSum &below = out[i - 1];
    out[i] = Compress3To2(below.sum, below.carry, !mask.Get(i - 1), width);
  }
  return out;
}

CarrySaveSum CsaAddIndex(CarrySaveSum prefix, unsigned index, bool negate,
                         unsigned width) {
  const uint32_t m = FieldMask(width);
  if (!negate) return Compress3To2(index, prefix.sum, prefix.carry, width);
  return Compress3To2((index + 2) & m, ~prefix.sum & m, ~prefix.carry & m,
                      width);
}

bool SadMatch(CarrySaveSum x, uint32_t target, unsigned width) {
  const uint32_t m = FieldMask(width);
  const uint32_t a = x.sum & m;
  const uint32_t b = x.carry & m;
  const uint32_t k = target & m;
  const uint32_t half_sum = a ^ b;
  const uint32_t needed_carry = (((a & b) | (half_sum & ~k)) << 1) & m;
  return ((half_sum ^ k) & m) == needed_carry;
}

OneHotVec SadDecode(CarrySaveSum x, size_t range, unsigned width) {
  OneHotVec out(range);
  for (size_t k = 0; k < range; ++k) {
    if (SadMatch(x, static_cast<uint32_t>(k), width)) out.Set(k, true);
  }
  return out;
}

}  // namespace vperm
