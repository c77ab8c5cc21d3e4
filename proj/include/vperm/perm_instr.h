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

#ifndef VPERM_PERM_INSTR_H_
#define VPERM_PERM_INSTR_H_

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "vperm/bitvec.h"
#include "vperm/vector_reg.h"

namespace vperm {

enum class PermKind { kGather, kCompress, kSlideUp, kSlideDown };

std::string_view KindName(PermKind kind);
std::optional<PermKind> KindFromName(std::string_view name);
inline bool IsSlide(PermKind kind) {
  return kind == PermKind::kSlideUp || kind == PermKind::kSlideDown;
}

// A decoded permutation request.
struct PermInstr {
  PermKind kind = PermKind::kGather;
  Sew sew = Sew::kE8;
  // Slide amount in elements; must be 0 for non-slides.
  unsigned offset = 0;
  // Use v0 as the element predicate. Never set for compress.
  bool masked = false;
  // Active element count.
  unsigned vl = 0;

  friend bool operator==(const PermInstr &, const PermInstr &) = default;
};

enum class ErrorCode {
  kUnsupportedWidth,
  kMaskedCompress,
  kInvalidInstr,
  kInvalidConfig,
};

class PermError : public std::runtime_error {
 public:
  PermError(ErrorCode code, const std::string &what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

// Throws PermError unless `instr` is well formed for a `vlen`-bit register.
void ValidateInstr(const PermInstr &instr, unsigned vlen);

std::string ToString(const PermInstr &instr);

// Register operands of one instruction. Masks hold at least one bit per
// element at the instruction's width; extra high bits are ignored.
struct Operands {
  VectorReg old_dest;
  VectorReg src;
  VectorReg idx;   // gather only
  MaskReg v0;      // used when instr.masked
  MaskReg mask;    // compress only
};

// Output of one instruction on one unit.
struct ExecResult {
  VectorReg value;
  unsigned latency_cycles = 0;
  unsigned occupancy_cycles = 0;
};

}  // namespace vperm

#endif  // VPERM_PERM_INSTR_H_
