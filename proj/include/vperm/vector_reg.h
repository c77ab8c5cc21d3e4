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

#ifndef VPERM_VECTOR_REG_H_
#define VPERM_VECTOR_REG_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace vperm {

// Selected element width.
enum class Sew : uint8_t { kE8 = 8, kE16 = 16, kE32 = 32 };

inline constexpr unsigned SewBits(Sew sew) { return static_cast<unsigned>(sew); }
inline constexpr unsigned SewBytes(Sew sew) { return SewBits(sew) / 8; }
std::optional<Sew> SewFromBits(unsigned bits);

// VLEN-bit register value as an ordered byte sequence. Element i at width w
// occupies bytes [i*w/8, (i+1)*w/8), little-endian within the element.
class VectorReg {
 public:
  VectorReg() = default;
  explicit VectorReg(unsigned vlen);
  VectorReg(unsigned vlen, std::vector<uint8_t> bytes);

  // Builds a register whose elements at `sew` are `elems`; remaining
  // elements are zero.
  static VectorReg FromElements(unsigned vlen, Sew sew,
                                const std::vector<uint32_t> &elems);
  // Whole-register hex literal, most significant digit first, so byte 0 is
  // the last two digits. An optional "0x" prefix is accepted. Returns
  // nullopt unless the literal has exactly vlen/4 hex digits.
  static std::optional<VectorReg> FromHex(std::string_view hex, unsigned vlen);

  unsigned vlen() const { return vlen_; }
  size_t num_bytes() const { return bytes_.size(); }
  size_t NumElements(Sew sew) const { return vlen_ / SewBits(sew); }

  uint8_t byte(size_t i) const { return bytes_[i]; }
  void set_byte(size_t i, uint8_t v) { bytes_[i] = v; }
  std::span<const uint8_t> bytes() const { return bytes_; }

  uint32_t Elem(size_t i, Sew sew) const;
  void SetElem(size_t i, Sew sew, uint32_t value);
  std::vector<uint32_t> Elements(Sew sew) const;

  std::string ToHex() const;

  friend bool operator==(const VectorReg &, const VectorReg &) = default;

 private:
  unsigned vlen_ = 0;
  std::vector<uint8_t> bytes_;
};

}  // namespace vperm

#endif  // VPERM_VECTOR_REG_H_
