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

#include "vperm/golden_model.h"

namespace vperm::golden {

namespace {

bool Active(const PermInstr &instr, const MaskReg &v0, size_t i) {
  return !instr.masked || v0.Get(i);
}

}  // namespace

VectorReg Gather(const VectorReg &old_dest, const VectorReg &src,
                 const VectorReg &idx, const MaskReg &v0,
                 const PermInstr &instr) {
  ValidateInstr(instr, src.vlen());
  const size_t num_elems = src.NumElements(instr.sew);
  VectorReg result = old_dest;
  for (size_t i = 0; i < instr.vl; ++i) {
    if (!Active(instr, v0, i)) continue;
    const uint32_t index = idx.Elem(i, instr.sew);
    result.SetElem(i, instr.sew,
                   index < num_elems ? src.Elem(index, instr.sew) : 0);
  }
  return result;
}

VectorReg Compress(const VectorReg &old_dest, const VectorReg &src,
                   const MaskReg &mask, const PermInstr &instr) {
  ValidateInstr(instr, src.vlen());
  VectorReg result = old_dest;
  size_t out = 0;
  for (size_t i = 0; i < instr.vl; ++i) {
    if (mask.Get(i)) result.SetElem(out++, instr.sew, src.Elem(i, instr.sew));
  }
  return result;
}

VectorReg SlideUp(const VectorReg &old_dest, const VectorReg &src,
                  const MaskReg &v0, const PermInstr &instr) {
  ValidateInstr(instr, src.vlen());
  VectorReg result = old_dest;
  for (size_t i = instr.offset; i < instr.vl; ++i) {
    if (!Active(instr, v0, i)) continue;
    result.SetElem(i, instr.sew, src.Elem(i - instr.offset, instr.sew));
  }
  return result;
}

VectorReg SlideDown(const VectorReg &old_dest, const VectorReg &src,
                    const MaskReg &v0, const PermInstr &instr) {
  ValidateInstr(instr, src.vlen());
  const size_t num_elems = src.NumElements(instr.sew);
  VectorReg result = old_dest;
  for (size_t i = 0; i < instr.vl; ++i) {
    if (!Active(instr, v0, i)) continue;
    const size_t from = i + instr.offset;
    result.SetElem(i, instr.sew,
                   from < num_elems ? src.Elem(from, instr.sew) : 0);
  }
  return result;
}

VectorReg Execute(const PermInstr &instr, const Operands &ops) {
  switch (instr.kind) {
    case PermKind::kGather:
      return Gather(ops.old_dest, ops.src, ops.idx, ops.v0, instr);
    case PermKind::kCompress:
      return Compress(ops.old_dest, ops.src, ops.mask, instr);
    case PermKind::kSlideUp:
      return SlideUp(ops.old_dest, ops.src, ops.v0, instr);
    case PermKind::kSlideDown:
      return SlideDown(ops.old_dest, ops.src, ops.v0, instr);
  }
  throw PermError(ErrorCode::kInvalidInstr, "unknown permutation kind");
}

}  // namespace vperm::golden
