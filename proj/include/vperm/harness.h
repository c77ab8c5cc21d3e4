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

#ifndef VPERM_HARNESS_H_
#define VPERM_HARNESS_H_

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "vperm/baseline_unit.h"
#include "vperm/perm_instr.h"
#include "vperm/unified_unit.h"

// Differential verification of the unified and baseline units against the
// golden model.
namespace vperm {

struct CampaignConfig {
  uint64_t seed = 1;
  size_t cases = 1000;
  unsigned vlen = 256;
  std::vector<Sew> sew_set = {Sew::kE8, Sew::kE16, Sew::kE32};
  bool run_unified = true;
  bool run_baseline = true;
  unsigned gmin = 1;
  unsigned pipeline_stages = 1;
  unsigned compress_overhead_cycles = 1;
  // Mutation hook applied to the unified crossbar.
  std::optional<CrossbarFault> fault;
};

// Throws PermError(kInvalidConfig) when cases == 0, sew_set is empty, no
// unit is selected, or no element width in sew_set is legal for gmin.
void ValidateCampaign(const CampaignConfig &config);

struct TestCase {
  PermInstr instr;
  Operands ops;
};

// Deterministic in (config.seed, index). Kind, sew, offset in [0, E] and vl
// in [0, E] are drawn uniformly; masks lean toward all-zero, all-one and
// single-bit patterns; gather indices are mostly in range.
TestCase GenCase(const CampaignConfig &config, uint64_t index);

struct Counterexample {
  std::string unit;
  std::string what;
  std::optional<TestCase> test_case;
  std::string expected;
  std::string actual;
};

struct CampaignReport {
  size_t total = 0;
  size_t passed = 0;
  size_t failed = 0;
  std::optional<Counterexample> first_failure;
  // unit name -> latency -> count.
  std::map<std::string, std::map<unsigned, size_t>> latency_histogram;
  // "<kind>.e<sew>" -> count of generated cases.
  std::map<std::string, size_t> coverage;

  friend bool operator==(const CampaignReport &a, const CampaignReport &b) {
    return a.total == b.total && a.passed == b.passed &&
           a.failed == b.failed && a.latency_histogram == b.latency_histogram &&
           a.coverage == b.coverage &&
           a.first_failure.has_value() == b.first_failure.has_value() &&
           (!a.first_failure || (a.first_failure->what == b.first_failure->what &&
                                 a.first_failure->actual ==
                                     b.first_failure->actual));
  }
};

// Executes `tc` on the named unit ("unified" or "baseline") and returns
// the mismatch, if any, against the golden model.
std::optional<Counterexample> CheckCase(const CampaignConfig &config,
                                        const std::string &unit,
                                        const TestCase &tc);

// Greedy minimization: halve vl, then clear mask bits one at a time,
// keeping each step only while the case still fails.
TestCase ShrinkCase(const CampaignConfig &config, const std::string &unit,
                    TestCase tc);

CampaignReport RunDifferential(const CampaignConfig &config);

// Exhaustive sweeps: every compress mask at `compress_elems` elements
// (destination bijection, scan-oracle match and full-register result),
// every index vector for a 4-element gather, every offset and vl for both
// slides at 8 elements, the carry-save counters on every 8-bit mask, and
// every (sum, carry) pair for SAD ranges 2..32.
CampaignReport RunExhaustiveSmall(size_t compress_elems = 8);

struct LatencyAudit {
  CampaignReport campaign;
  bool unified_constant = false;
  unsigned unified_latency = 0;
  bool baseline_compress_law_holds = false;
  bool baseline_compress_varies = false;
  bool baseline_gather_slide_constant = false;
  // kind -> latency -> count, baseline only.
  std::map<std::string, std::map<unsigned, size_t>> baseline_by_kind;

  bool ok() const {
    return unified_constant && baseline_compress_law_holds &&
           baseline_compress_varies && baseline_gather_slide_constant;
  }
};

LatencyAudit RunLatencyAudit(const CampaignConfig &config);

// Human-readable summary followed by a "[summary]" block of key=value
// lines.
std::string FormatReport(const CampaignReport &report);
std::string FormatAudit(const LatencyAudit &audit);

}  // namespace vperm

#endif  // VPERM_HARNESS_H_
