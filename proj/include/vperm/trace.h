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

#ifndef VPERM_TRACE_H_
#define VPERM_TRACE_H_

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "vperm/baseline_unit.h"
#include "vperm/bitvec.h"
#include "vperm/perm_instr.h"
#include "vperm/unified_unit.h"
#include "vperm/vector_reg.h"

// Instruction trace scripts.
//
//   # comment
//   setcfg vlen=256 gmin=1 stages=2
//   setreg src|idx|dest 0x<vlen/4 hex digits>
//   setmask v0|mask 0x<vlen/32 hex digits>
//   exec <gather|compress|slideup|slidedown> sew=<8|16|32> [offset=<n>]
//        [masked] vl=<n>
//   expect 0x<vlen/4 hex digits>
//
// Register literals are whole-register hex, most significant digit first,
// so element 0 sits in the lowest-order digits. Mask literal bit i governs
// element i. `exec` writes its result into dest; `expect` compares dest.
namespace vperm {

class TraceError : public std::runtime_error {
 public:
  enum class Kind { kSyntax, kWidthMismatch, kSemantic };

  TraceError(Kind kind, size_t line, const std::string &reason);
  Kind kind() const { return kind_; }
  size_t line() const { return line_; }

 private:
  Kind kind_;
  size_t line_;
};

std::string_view TraceErrorKindName(TraceError::Kind kind);

enum class RegName { kSrc, kIdx, kDest };
enum class MaskName { kV0, kMask };

struct SetCfg {
  std::optional<unsigned> vlen;
  std::optional<unsigned> gmin;
  std::optional<unsigned> stages;
  friend bool operator==(const SetCfg &, const SetCfg &) = default;
};
struct SetReg {
  RegName reg = RegName::kSrc;
  VectorReg value;
  friend bool operator==(const SetReg &, const SetReg &) = default;
};
struct SetMask {
  MaskName mask = MaskName::kV0;
  // vlen/8 bits, enough for every element at sew=8.
  MaskReg bits;
  friend bool operator==(const SetMask &, const SetMask &) = default;
};
struct Exec {
  PermInstr instr;
  friend bool operator==(const Exec &, const Exec &) = default;
};
struct Expect {
  VectorReg value;
  friend bool operator==(const Expect &, const Expect &) = default;
};

struct TraceLine {
  // 1-based source line; not part of equality.
  size_t line = 0;
  std::variant<SetCfg, SetReg, SetMask, Exec, Expect> payload;

  friend bool operator==(const TraceLine &a, const TraceLine &b) {
    return a.payload == b.payload;
  }
};

// Throws TraceError (kSyntax or kWidthMismatch) naming the offending line.
// Register widths are checked against `vlen`, updated by setcfg lines.
std::vector<TraceLine> ParseTrace(std::string_view text, unsigned vlen = 256);

// Canonical text, one directive per line.
std::string PrintLine(const TraceLine &line);
std::string PrintTrace(const std::vector<TraceLine> &lines);

std::string MaskToHex(const MaskReg &mask);
// Exactly `nbits / 4` hex digits, optional 0x prefix.
std::optional<MaskReg> MaskFromHex(std::string_view hex, size_t nbits);

enum class UnitChoice { kUnified, kBaseline, kBoth };
std::optional<UnitChoice> UnitChoiceFromName(std::string_view name);

struct TraceOptions {
  UnitChoice units = UnitChoice::kUnified;
  UnitConfig unified;
  unsigned compress_overhead_cycles = 1;
};

struct ExecRecord {
  size_t line = 0;
  PermInstr instr;
  std::optional<unsigned> unified_latency;
  std::optional<unsigned> baseline_latency;
};

struct TraceReport {
  std::vector<ExecRecord> execs;
  size_t expects = 0;
  // One entry per failed expect or unit disagreement.
  std::vector<std::string> failures;

  bool ok() const { return failures.empty(); }
};

// Executes the script in order. Throws TraceError(kSemantic) for an exec
// whose operands were never set or whose width the unit cannot move.
TraceReport RunTrace(const std::vector<TraceLine> &lines,
                     const TraceOptions &options);

std::string FormatTraceReport(const TraceReport &report, bool porcelain);

// Structural inventory for each config, with the select-bit ratio against
// gmin=1 at the same vlen.
std::string ReportStructure(const std::vector<UnitConfig> &configs,
                            bool porcelain);

}  // namespace vperm

#endif  // VPERM_TRACE_H_
