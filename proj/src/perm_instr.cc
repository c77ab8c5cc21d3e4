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

#include "vperm/perm_instr.h"

#include <sstream>

namespace vperm {

std::string_view KindName(PermKind kind) {
  switch (kind) {
    case PermKind::kGather:
      return "gather";
    case PermKind::kCompress:
      return "compress";
    case PermKind::kSlideUp:
      return "slideup";
    case PermKind::kSlideDown:
      return "slidedown";
  }
  return "?";
}

std::optional<PermKind> KindFromName(std::string_view name) {
  for (PermKind k : {PermKind::kGather, PermKind::kCompress,
                     PermKind::kSlideUp, PermKind::kSlideDown}) {
    if (KindName(k) == name) return k;
  }
  return std::nullopt;
}

void ValidateInstr(const PermInstr &instr, unsigned vlen) {
  const unsigned num_elems = vlen / SewBits(instr.sew);
  if (instr.kind == PermKind::kCompress && instr.masked) {
    throw PermError(ErrorCode::kMaskedCompress,
                    "compress cannot be masked by v0");
  }
  if (instr.vl > num_elems) {
    throw PermError(ErrorCode::kInvalidInstr,
                    "vl " + std::to_string(instr.vl) + " exceeds " +
                        std::to_string(num_elems) + " elements");
  }
  if (IsSlide(instr.kind)) {
    if (instr.offset > num_elems) {
      throw PermError(ErrorCode::kInvalidInstr,
                      "slide offset " + std::to_string(instr.offset) +
                          " exceeds " + std::to_string(num_elems) +
                          " elements");
    }
  } else if (instr.offset != 0) {
    throw PermError(ErrorCode::kInvalidInstr,
                    "offset given for a non-slide instruction");
  }
}

std::string ToString(const PermInstr &instr) {
  std::ostringstream os;
  os << KindName(instr.kind) << " sew=" << SewBits(instr.sew);
  if (IsSlide(instr.kind)) os << " offset=" << instr.offset;
  if (instr.masked) os << " masked";
  os << " vl=" << instr.vl;
  return os.str();
}

}  // namespace vperm
