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

#ifndef VPERM_UNIFIED_UNIT_H_
#define VPERM_UNIFIED_UNIT_H_

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "vperm/bitvec.h"
#include "vperm/carry_save.h"
#include "vperm/perm_instr.h"
#include "vperm/select_matrix.h"
#include "vperm/vector_reg.h"

namespace vperm {

struct UnitConfig {
  unsigned vlen = 256;
  // Minimum movable element width in bytes: 1, 2 or 4.
  unsigned gmin = 1;
  // 1: single cycle. 2: control generation, then crossbar and merge.
  unsigned pipeline_stages = 1;

  friend bool operator==(const UnitConfig &, const UnitConfig &) = default;
};

// Throws PermError(kInvalidConfig) for an unsupported configuration.
void ValidateConfig(const UnitConfig &config);
// Crossbar ports: vlen / (8 * gmin).
size_t NumGranules(const UnitConfig &config);
bool SupportsSew(const UnitConfig &config, Sew sew);

// Hardware inventory of one unit configuration.
struct StructureReport {
  unsigned vlen = 0;
  unsigned gmin = 0;
  size_t granules = 0;
  // AND terms of the crossbar, one per (output, input) granule pair.
  size_t select_bits = 0;
  size_t sad_instances = 0;
  // 3:2 cells in the ones-above and zeros-below prefix chains.
  size_t counter_cells = 0;
  // Index adders feeding the SADs.
  size_t csa_cells = 0;
  unsigned field_width = 0;
  // Per-output vs per-input select-distribution multiplexers.
  size_t select_mux_bits = 0;
};

StructureReport DescribeStructure(const UnitConfig &config);

// Mutation hook: output granule `row` sees the select wires of input
// granules `col_a` and `col_b` crossed.
struct CrossbarFault {
  size_t row = 0;
  size_t col_a = 0;
  size_t col_b = 1;
};

// Destination of input i for compress: i - zeros_below(i) when mask[i] is
// set, i + ones_above(i) otherwise. Computed through the carry-save
// counters and SADs; the result is a permutation of 0..n-1.
std::vector<size_t> BuildDestIndicesCompress(const MaskReg &mask, size_t n);

// Crossbar output plus the per-output "an enabled input landed here" bit,
// routed through the same select lines as the data.
struct CrossbarOutput {
  VectorReg data;
  BitVec routed_enable;
};

// Control word latched between the two pipeline stages.
struct ControlWord {
  PermInstr instr;
  SelectMatrix select;   // element granularity
  BitVec input_enable;   // per input element
};

// Bit-accurate model of the unified permutation datapath: carry-save prefix
// counters, CSA + sum-addressed decoders, select reshuffle and one shared
// AND-OR crossbar. Latency is pipeline_stages for every input.
class UnifiedUnit {
 public:
  explicit UnifiedUnit(UnitConfig config);

  const UnitConfig &config() const { return config_; }
  void set_fault(std::optional<CrossbarFault> fault) { fault_ = fault; }
  const std::optional<CrossbarFault> &fault() const { return fault_; }

  // Stage 1. Gather decodes per output (rows); compress and slides decode
  // per input (columns) and reach the rows by transposition. Throws
  // PermError for unsupported widths and masked compress.
  ControlWord GenerateControl(const PermInstr &instr,
                              const Operands &ops) const;
  SelectMatrix BuildSelectMatrix(const PermInstr &instr,
                                 const Operands &ops) const;

  // Stage 2a. Output element j = OR_i(sel[j][i] AND src[i]), evaluated on
  // gmin-byte granules with element selects replicated across granules.
  CrossbarOutput CrossbarApply(const SelectMatrix &sel, const VectorReg &src,
                               Sew sew, const BitVec &input_enable) const;
  VectorReg CrossbarApply(const SelectMatrix &sel, const VectorReg &src,
                          Sew sew) const;

  // Stage 2b. Tail, masked-off, slide-up vacated and compress-upper
  // elements take old_dest; slide-down out-of-range elements stay zero.
  static VectorReg MergeOutput(const CrossbarOutput &raw,
                               const VectorReg &old_dest, const MaskReg &v0,
                               const PermInstr &instr);

  // Runs one instruction through a private copy of the pipeline and
  // reports the cycles it took.
  ExecResult Execute(const PermInstr &instr, const Operands &ops) const;

  // Cycle-stepped interface. At most one Issue per Tick; the result pops
  // out of Tick pipeline_stages ticks after issue. Single caller only.
  void Issue(const PermInstr &instr, const Operands &ops);
  std::optional<ExecResult> Tick();
  bool Idle() const;

 private:
  struct Pending {
    PermInstr instr;
    Operands ops;
    unsigned issued_at = 0;
  };
  struct Stage2 {
    ControlWord control;
    Operands ops;
    unsigned issued_at = 0;
  };

  ExecResult Finish(const Stage2 &latched, unsigned now) const;

  UnitConfig config_;
  std::optional<CrossbarFault> fault_;

  std::optional<Pending> input_latch_;
  std::optional<Stage2> stage2_reg_;
  unsigned cycle_ = 0;
};

}  // namespace vperm

#endif  // VPERM_UNIFIED_UNIT_H_
