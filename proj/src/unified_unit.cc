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

#include "vperm/unified_unit.h"

#include <bit>
#include <stdexcept>
#include <utility>

namespace vperm {

void ValidateConfig(const UnitConfig &config) {
  if (config.gmin != 1 && config.gmin != 2 && config.gmin != 4) {
    throw PermError(ErrorCode::kInvalidConfig,
                    "gmin must be 1, 2 or 4 bytes, got " +
                        std::to_string(config.gmin));
  }
  if (config.pipeline_stages != 1 && config.pipeline_stages != 2) {
    throw PermError(ErrorCode::kInvalidConfig,
                    "pipeline_stages must be 1 or 2, got " +
                        std::to_string(config.pipeline_stages));
  }
  if (config.vlen < 32 || config.vlen > 4096 ||
      !std::has_single_bit(config.vlen)) {
    throw PermError(ErrorCode::kInvalidConfig,
                    "vlen must be a power of two in [32, 4096], got " +
                        std::to_string(config.vlen));
  }
  if (NumGranules(config) < 2) {
    throw PermError(ErrorCode::kInvalidConfig,
                    "vlen " + std::to_string(config.vlen) +
                        " leaves fewer than two granules at gmin " +
                        std::to_string(config.gmin));
  }
}

size_t NumGranules(const UnitConfig &config) {
  return config.vlen / (8 * config.gmin);
}

bool SupportsSew(const UnitConfig &config, Sew sew) {
  return SewBytes(sew) >= config.gmin;
}

StructureReport DescribeStructure(const UnitConfig &config) {
  ValidateConfig(config);
  StructureReport r;
  r.vlen = config.vlen;
  r.gmin = config.gmin;
  r.granules = NumGranules(config);
  r.select_bits = r.granules * r.granules;
  r.sad_instances = r.granules;
  r.counter_cells = 2 * (r.granules - 1);
  r.csa_cells = r.granules;
  r.field_width = FieldWidth(r.granules);
  r.select_mux_bits = r.granules * r.granules;
  return r;
}

std::vector<size_t> BuildDestIndicesCompress(const MaskReg &mask, size_t n) {
  const unsigned width = FieldWidth(n);
  const auto ones_above = CountOnesHighToLow(mask, n);
  const auto zeros_below = CountZerosLowToHigh(mask, n);
  std::vector<size_t> dest(n);
  for (size_t i = 0; i < n; ++i) {
    const bool keep = mask.Get(i);
    const CarrySaveSum d =
        CsaAddIndex(keep ? zeros_below[i] : ones_above[i],
                    static_cast<unsigned>(i), /*negate=*/keep, width);
    dest[i] = SadDecode(d, n, width).FirstSet();
  }
  return dest;
}

UnifiedUnit::UnifiedUnit(UnitConfig config) : config_(config) {
  ValidateConfig(config_);
}

ControlWord UnifiedUnit::GenerateControl(const PermInstr &instr,
                                         const Operands &ops) const {
  if (!SupportsSew(config_, instr.sew)) {
    throw PermError(ErrorCode::kUnsupportedWidth,
                    "sew " + std::to_string(SewBits(instr.sew)) +
                        " is below the " + std::to_string(config_.gmin) +
                        "-byte minimum element width");
  }
  ValidateInstr(instr, config_.vlen);

  const size_t n = config_.vlen / SewBits(instr.sew);
  const unsigned width = FieldWidth(n);
  ControlWord cw{instr, SelectMatrix(n), BitVec::Ones(n)};

  switch (instr.kind) {
    case PermKind::kGather: {
      // Index bits above log2(n) only gate the decoder.
      const unsigned index_bits = std::bit_width(n - 1);
      std::vector<OneHotVec> rows;
      rows.reserve(n);
      for (size_t j = 0; j < n; ++j) {
        const uint32_t index = ops.idx.Elem(j, instr.sew);
        const bool out_of_range = (uint64_t{index} >> index_bits) != 0;
        const uint32_t low = index & ((uint32_t{1} << index_bits) - 1);
        rows.push_back(out_of_range ? OneHotVec(n)
                                    : SadDecode({low, 0}, n, width));
      }
      cw.select = SelectMatrix::FromRows(std::move(rows));
      break;
    }
    case PermKind::kCompress: {
      const auto ones_above = CountOnesHighToLow(ops.mask, n);
      const auto zeros_below = CountZerosLowToHigh(ops.mask, n);
      std::vector<OneHotVec> columns;
      columns.reserve(n);
      for (size_t i = 0; i < n; ++i) {
        const bool keep = ops.mask.Get(i);
        const CarrySaveSum d =
            CsaAddIndex(keep ? zeros_below[i] : ones_above[i],
                        static_cast<unsigned>(i), /*negate=*/keep, width);
        columns.push_back(SadDecode(d, n, width));
        cw.input_enable.Set(i, keep && i < instr.vl);
      }
      cw.select = SelectMatrix::FromColumns(columns);
      break;
    }
    case PermKind::kSlideUp:
    case PermKind::kSlideDown: {
      // The offset enters the SAD through its second operand, negated once
      // per instruction for slide-down.
      const uint32_t field_mask = (uint32_t{1} << width) - 1;
      const uint32_t injected = instr.kind == PermKind::kSlideUp
                                    ? instr.offset
                                    : (0u - instr.offset) & field_mask;
      std::vector<OneHotVec> columns;
      columns.reserve(n);
      for (size_t i = 0; i < n; ++i) {
        columns.push_back(
            SadDecode({static_cast<uint32_t>(i), injected}, n, width));
      }
      cw.select = SelectMatrix::FromColumns(columns);
      break;
    }
  }
  return cw;
}

SelectMatrix UnifiedUnit::BuildSelectMatrix(const PermInstr &instr,
                                            const Operands &ops) const {
  return GenerateControl(instr, ops).select;
}

CrossbarOutput UnifiedUnit::CrossbarApply(const SelectMatrix &sel,
                                          const VectorReg &src, Sew sew,
                                          const BitVec &input_enable) const {
  const size_t gbytes = config_.gmin;
  const size_t ratio = SewBytes(sew) / gbytes;
  SelectMatrix granule_sel = sel.ExpandToGranules(ratio);
  if (fault_) {
    const bool a = granule_sel.Get(fault_->row, fault_->col_a);
    const bool b = granule_sel.Get(fault_->row, fault_->col_b);
    granule_sel.Set(fault_->row, fault_->col_a, b);
    granule_sel.Set(fault_->row, fault_->col_b, a);
  }

  const size_t granules = granule_sel.size();
  CrossbarOutput out{VectorReg(config_.vlen), BitVec(sel.size())};
  for (size_t g = 0; g < granules; ++g) {
    for (size_t byte = 0; byte < gbytes; ++byte) {
      uint8_t acc = 0;
      for (size_t h = 0; h < granules; ++h) {
        const uint8_t line = granule_sel.Get(g, h) ? 0xff : 0x00;
        acc |= line & src.byte(h * gbytes + byte);
      }
      out.data.set_byte(g * gbytes + byte, acc);
    }
  }
  // One extra bit lane carries the enable of whichever input each output
  // selected.
  for (size_t j = 0; j < sel.size(); ++j) {
    bool acc = false;
    for (size_t i = 0; i < sel.size(); ++i) {
      acc |= sel.Get(j, i) && input_enable.Get(i);
    }
    out.routed_enable.Set(j, acc);
  }
  return out;
}

VectorReg UnifiedUnit::CrossbarApply(const SelectMatrix &sel,
                                     const VectorReg &src, Sew sew) const {
  return CrossbarApply(sel, src, sew, BitVec::Ones(sel.size())).data;
}

VectorReg UnifiedUnit::MergeOutput(const CrossbarOutput &raw,
                                   const VectorReg &old_dest,
                                   const MaskReg &v0, const PermInstr &instr) {
  const size_t n = raw.routed_enable.size();
  const bool needs_landing =
      instr.kind == PermKind::kCompress || instr.kind == PermKind::kSlideUp;
  VectorReg result = old_dest;
  for (size_t j = 0; j < n && j < instr.vl; ++j) {
    if (instr.masked && !v0.Get(j)) continue;
    if (needs_landing && !raw.routed_enable.Get(j)) continue;
    result.SetElem(j, instr.sew, raw.data.Elem(j, instr.sew));
  }
  return result;
}

ExecResult UnifiedUnit::Execute(const PermInstr &instr,
                                const Operands &ops) const {
  UnifiedUnit pipe(config_);
  pipe.fault_ = fault_;
  pipe.Issue(instr, ops);
  for (;;) {
    if (auto result = pipe.Tick()) return *std::move(result);
  }
}

void UnifiedUnit::Issue(const PermInstr &instr, const Operands &ops) {
  if (input_latch_) {
    throw std::logic_error("UnifiedUnit accepts one instruction per cycle");
  }
  // Reject bad requests at issue rather than mid-pipeline.
  if (!SupportsSew(config_, instr.sew)) {
    throw PermError(ErrorCode::kUnsupportedWidth,
                    "sew " + std::to_string(SewBits(instr.sew)) +
                        " is below the " + std::to_string(config_.gmin) +
                        "-byte minimum element width");
  }
  ValidateInstr(instr, config_.vlen);
  input_latch_ = Pending{instr, ops, cycle_};
}

std::optional<ExecResult> UnifiedUnit::Tick() {
  ++cycle_;
  std::optional<ExecResult> done;
  if (config_.pipeline_stages == 1) {
    if (input_latch_) {
      Stage2 latched{GenerateControl(input_latch_->instr, input_latch_->ops),
                     std::move(input_latch_->ops), input_latch_->issued_at};
      input_latch_.reset();
      done = Finish(latched, cycle_);
    }
    return done;
  }
  if (stage2_reg_) {
    done = Finish(*stage2_reg_, cycle_);
    stage2_reg_.reset();
  }
  if (input_latch_) {
    stage2_reg_ = Stage2{GenerateControl(input_latch_->instr, input_latch_->ops),
                         std::move(input_latch_->ops), input_latch_->issued_at};
    input_latch_.reset();
  }
  return done;
}

bool UnifiedUnit::Idle() const { return !input_latch_ && !stage2_reg_; }

ExecResult UnifiedUnit::Finish(const Stage2 &latched, unsigned now) const {
  const ControlWord &cw = latched.control;
  const CrossbarOutput raw = CrossbarApply(cw.select, latched.ops.src,
                                           cw.instr.sew, cw.input_enable);
  return {MergeOutput(raw, latched.ops.old_dest, latched.ops.v0, cw.instr),
          now - latched.issued_at, 1};
}

}  // namespace vperm
