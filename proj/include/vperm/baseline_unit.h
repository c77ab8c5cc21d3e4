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

#ifndef VPERM_BASELINE_UNIT_H_
#define VPERM_BASELINE_UNIT_H_

#include "vperm/bitvec.h"
#include "vperm/perm_instr.h"
#include "vperm/vector_reg.h"

namespace vperm {

struct BaselineConfig {
  unsigned vlen = 256;
  // Issue/drain cycles charged to every compress.
  unsigned compress_overhead_cycles = 1;
};

// The comparison design with separate datapaths: a gather crossbar with
// plain per-output decoders, a logarithmic byte rotator for slides, and a
// sequential compress that moves one selected element per cycle.
class BaselineUnit {
 public:
  explicit BaselineUnit(BaselineConfig config);

  const BaselineConfig &config() const { return config_; }

  // One cycle.
  ExecResult Gather(const VectorReg &old_dest, const VectorReg &src,
                    const VectorReg &idx, const MaskReg &v0,
                    const PermInstr &instr) const;

  // One cycle. log2(bytes) rotation stages keyed on the bits of the byte
  // offset; slide-down rotates by the negated offset.
  ExecResult Slide(const VectorReg &old_dest, const VectorReg &src,
                   const MaskReg &v0, const PermInstr &instr) const;

  // compress_overhead_cycles + popcount(mask below vl) cycles.
  ExecResult Compress(const VectorReg &old_dest, const VectorReg &src,
                      const MaskReg &mask, const PermInstr &instr) const;

  ExecResult Execute(const PermInstr &instr, const Operands &ops) const;

 private:
  BaselineConfig config_;
};

}  // namespace vperm

#endif  // VPERM_BASELINE_UNIT_H_
