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

#ifndef VPERM_GOLDEN_MODEL_H_
#define VPERM_GOLDEN_MODEL_H_

#include "vperm/bitvec.h"
#include "vperm/perm_instr.h"
#include "vperm/vector_reg.h"

// Architectural semantics of the RVV permutation instructions. Every
// hardware model in this project is checked against these functions.
//
// Policies: elements at or above vl keep the old destination
// (tail-undisturbed), and elements whose v0 bit is clear in a masked
// instruction keep the old destination (mask-undisturbed).
namespace vperm::golden {

// result[i] = src[idx[i]], or 0 when idx[i] >= E. Duplicated indices are
// legal. The full index element is compared against E.
VectorReg Gather(const VectorReg &old_dest, const VectorReg &src,
                 const VectorReg &idx, const MaskReg &v0,
                 const PermInstr &instr);

// Packs src elements whose mask bit is set (among positions < vl) into the
// lowest result positions in their original order. Positions above the
// packed prefix keep the old destination. Throws PermError for a masked
// instruction.
VectorReg Compress(const VectorReg &old_dest, const VectorReg &src,
                   const MaskReg &mask, const PermInstr &instr);

// result[i] = src[i - offset] for active i in [offset, vl); positions below
// the offset are untouched.
VectorReg SlideUp(const VectorReg &old_dest, const VectorReg &src,
                  const MaskReg &v0, const PermInstr &instr);

// result[i] = src[i + offset] for active i < vl, or 0 once i + offset
// leaves the register.
VectorReg SlideDown(const VectorReg &old_dest, const VectorReg &src,
                    const MaskReg &v0, const PermInstr &instr);

// Dispatches on instr.kind.
VectorReg Execute(const PermInstr &instr, const Operands &ops);

}  // namespace vperm::golden

#endif  // VPERM_GOLDEN_MODEL_H_
