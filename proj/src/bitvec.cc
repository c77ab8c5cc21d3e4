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

#include "vperm/bitvec.h"

#include <bit>

namespace vperm {

BitVec::BitVec(size_t width) : width_(width), words_((width + 63) / 64, 0) {}

BitVec BitVec::FromBits(const std::vector<int> &bits) {
  BitVec v(bits.size());
  for (size_t i = 0; i < bits.size(); ++i) v.Set(i, bits[i] != 0);
  return v;
}

BitVec BitVec::Ones(size_t width) {
  BitVec v(width);
  for (size_t i = 0; i < width; ++i) v.Set(i, true);
  return v;
}

BitVec BitVec::OneHot(size_t width, size_t pos) {
  BitVec v(width);
  if (pos < width) v.Set(pos, true);
  return v;
}

void BitVec::Set(size_t i, bool value) {
  const uint64_t bit = uint64_t{1} << (i % 64);
  if (value) {
    words_[i / 64] |= bit;
  } else {
    words_[i / 64] &= ~bit;
  }
}

size_t BitVec::Popcount() const {
  size_t n = 0;
  for (uint64_t w : words_) n += std::popcount(w);
  return n;
}

size_t BitVec::PopcountBelow(size_t limit) const {
  if (limit > width_) limit = width_;
  size_t n = 0;
  for (size_t i = 0; i < limit; ++i) n += Get(i);
  return n;
}

bool BitVec::None() const {
  for (uint64_t w : words_) {
    if (w != 0) return false;
  }
  return true;
}

size_t BitVec::FirstSet() const {
  for (size_t w = 0; w < words_.size(); ++w) {
    if (words_[w] != 0) return w * 64 + std::countr_zero(words_[w]);
  }
  return width_;
}

std::string BitVec::ToString() const {
  std::string s(width_, '0');
  for (size_t i = 0; i < width_; ++i) {
    if (Get(i)) s[i] = '1';
  }
  return s;
}

}  // namespace vperm
