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

#include "vperm/vector_reg.h"

#include <cctype>

namespace vperm {

namespace {

int HexDigitValue(char ch) {
  if (ch >= '0' && ch <= '9') return ch - '0';
  if (ch >= 'a' && ch <= 'f') return ch - 'a' + 10;
  if (ch >= 'A' && ch <= 'F') return ch - 'A' + 10;
  return -1;
}

}  // namespace

std::optional<Sew> SewFromBits(unsigned bits) {
  switch (bits) {
    case 8:
      return Sew::kE8;
    case 16:
      return Sew::kE16;
    case 32:
      return Sew::kE32;
    default:
      return std::nullopt;
  }
}

VectorReg::VectorReg(unsigned vlen) : vlen_(vlen), bytes_(vlen / 8, 0) {}

VectorReg::VectorReg(unsigned vlen, std::vector<uint8_t> bytes)
    : vlen_(vlen), bytes_(std::move(bytes)) {
  bytes_.resize(vlen / 8, 0);
}

VectorReg VectorReg::FromElements(unsigned vlen, Sew sew,
                                  const std::vector<uint32_t> &elems) {
  VectorReg reg(vlen);
  const size_t n = std::min(elems.size(), reg.NumElements(sew));
  for (size_t i = 0; i < n; ++i) reg.SetElem(i, sew, elems[i]);
  return reg;
}

std::optional<VectorReg> VectorReg::FromHex(std::string_view hex,
                                            unsigned vlen) {
  if (hex.size() >= 2 && hex[0] == '0' && (hex[1] == 'x' || hex[1] == 'X')) {
    hex.remove_prefix(2);
  }
  if (hex.size() != vlen / 4) return std::nullopt;
  VectorReg reg(vlen);
  const size_t nbytes = reg.num_bytes();
  for (size_t b = 0; b < nbytes; ++b) {
    // Byte b is formed by the two digits counted from the right end.
    const size_t lo_pos = hex.size() - 1 - 2 * b;
    const int hi = HexDigitValue(hex[lo_pos - 1]);
    const int lo = HexDigitValue(hex[lo_pos]);
    if (hi < 0 || lo < 0) return std::nullopt;
    reg.bytes_[b] = static_cast<uint8_t>((hi << 4) | lo);
  }
  return reg;
}

uint32_t VectorReg::Elem(size_t i, Sew sew) const {
  const unsigned w = SewBytes(sew);
  uint32_t v = 0;
  for (unsigned k = 0; k < w; ++k) {
    v |= static_cast<uint32_t>(bytes_[i * w + k]) << (8 * k);
  }
  return v;
}

void VectorReg::SetElem(size_t i, Sew sew, uint32_t value) {
  const unsigned w = SewBytes(sew);
  for (unsigned k = 0; k < w; ++k) {
    bytes_[i * w + k] = static_cast<uint8_t>(value >> (8 * k));
  }
}

std::vector<uint32_t> VectorReg::Elements(Sew sew) const {
  std::vector<uint32_t> out(NumElements(sew));
  for (size_t i = 0; i < out.size(); ++i) out[i] = Elem(i, sew);
  return out;
}

std::string VectorReg::ToHex() const {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string s = "0x";
  s.reserve(2 + 2 * bytes_.size());
  for (size_t b = bytes_.size(); b-- > 0;) {
    s.push_back(kDigits[bytes_[b] >> 4]);
    s.push_back(kDigits[bytes_[b] & 0xf]);
  }
  return s;
}

}  // namespace vperm
