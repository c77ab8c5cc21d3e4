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

#include "vperm/baseline_unit.h"

#include <bit>
#include <vector>

namespace vperm {

namespace {

bool Active(const PermInstr &instr, const MaskReg &v0, size_t i) {
  return !instr.masked || v0.Get(i);
}

}  // namespace

BaselineUnit::BaselineUnit(BaselineConfig config) : config_(config) {
  if (config_.vlen < 32 || !std::has_single_bit(config_.vlen)) {
    throw PermError(ErrorCode::kInvalidConfig,
                    "vlen must be a power of two >= 32");
  }
}

ExecResult BaselineUnit::Gather(const VectorReg &old_dest,
                                const VectorReg &src, const VectorReg &idx,
                                const MaskReg &v0,
                                const PermInstr &instr) const {
  ValidateInstr(instr, config_.vlen);
  const size_t n = config_.vlen / SewBits(instr.sew);
  VectorReg result = old_dest;
  for (size_t j = 0; j < instr.vl; ++j) {
    if (!Active(instr, v0, j)) continue;
    const uint32_t index = idx.Elem(j, instr.sew);
    uint32_t acc = 0;
    for (size_t i = 0; i < n; ++i) {
      const uint32_t line = index == i ? ~uint32_t{0} : 0;
      acc |= line & src.Elem(i, instr.sew);
    }
    result.SetElem(j, instr.sew, acc);
  }
  return {result, 1, 1};
}

ExecResult BaselineUnit::Slide(const VectorReg &old_dest,
                               const VectorReg &src, const MaskReg &v0,
                               const PermInstr &instr) const {
  ValidateInstr(instr, config_.vlen);
  if (!IsSlide(instr.kind)) {
    throw PermError(ErrorCode::kInvalidInstr, "slider given a non-slide");
  }
  const size_t nbytes = config_.vlen / 8;
  const unsigned stages = std::countr_zero(nbytes);
  const size_t byte_offset = size_t{instr.offset} * SewBytes(instr.sew);
  // byte_offset <= nbytes, so bit `stages` flags "slid entirely out".
  const bool all_out = (byte_offset >> stages) & 1;
  const bool up = instr.kind == PermKind::kSlideUp;
  const size_t rotate = (up ? byte_offset : nbytes - byte_offset) &
                        (nbytes - 1);

  std::vector<uint8_t> lane(src.bytes().begin(), src.bytes().end());
  std::vector<uint8_t> wrapped(nbytes, 0);
  for (unsigned s = 0; s < stages; ++s) {
    if (!((rotate >> s) & 1)) continue;
    const size_t step = size_t{1} << s;
    std::vector<uint8_t> next(nbytes), next_wrapped(nbytes);
    for (size_t b = 0; b < nbytes; ++b) {
      const size_t to = (b + step) & (nbytes - 1);
      next[to] = lane[b];
      next_wrapped[to] = wrapped[b] | (b + step >= nbytes);
    }
    lane.swap(next);
    wrapped.swap(next_wrapped);
  }

  const size_t n = config_.vlen / SewBits(instr.sew);
  const unsigned ebytes = SewBytes(instr.sew);
  VectorReg result = old_dest;
  for (size_t i = 0; i < n && i < instr.vl; ++i) {
    if (!Active(instr, v0, i)) continue;
    // All bytes of an element share the same validity.
    const size_t b0 = i * ebytes;
    const bool valid =
        !all_out && (up ? !wrapped[b0] : (wrapped[b0] || rotate == 0));
    if (up && !valid) continue;
    for (unsigned k = 0; k < ebytes; ++k) {
      result.set_byte(b0 + k, valid ? lane[b0 + k] : 0);
    }
  }
  return {result, 1, 1};
}

ExecResult BaselineUnit::Compress(const VectorReg &old_dest,
                                  const VectorReg &src, const MaskReg &mask,
                                  const PermInstr &instr) const {
  ValidateInstr(instr, config_.vlen);
  // Destination register preloaded with old_dest during the overhead
  // cycles; then each cycle a priority encoder picks the lowest pending
  // selected element and writes it at the next output slot.
  VectorReg result = old_dest;
  unsigned cycles = config_.compress_overhead_cycles;
  BitVec pending(instr.vl);
  for (size_t i = 0; i < instr.vl; ++i) pending.Set(i, mask.Get(i));
  size_t write_ptr = 0;
  while (!pending.None()) {
    const size_t pick = pending.FirstSet();
    result.SetElem(write_ptr++, instr.sew, src.Elem(pick, instr.sew));
    pending.Set(pick, false);
    ++cycles;
  }
  return {result, cycles, cycles};
}

ExecResult BaselineUnit::Execute(const PermInstr &instr,
                                 const Operands &ops) const {
  switch (instr.kind) {
    case PermKind::kGather:
      return Gather(ops.old_dest, ops.src, ops.idx, ops.v0, instr);
    case PermKind::kCompress:
      return Compress(ops.old_dest, ops.src, ops.mask, instr);
    case PermKind::kSlideUp:
    case PermKind::kSlideDown:
      return Slide(ops.old_dest, ops.src, ops.v0, instr);
  }
  throw PermError(ErrorCode::kInvalidInstr, "unknown permutation kind");
}

}  // namespace vperm
