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

// Acceptance suite. Prints one PASS/FAIL line per criterion and exits
// nonzero if any criterion fails.
//
// usage: acceptance_test <path-to-vperm-cli> <trace-dir>

#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.h"
#include "vperm/baseline_unit.h"
#include "vperm/carry_save.h"
#include "vperm/golden_model.h"
#include "vperm/harness.h"
#include "vperm/trace.h"
#include "vperm/unified_unit.h"

namespace {

using namespace vperm;
namespace fs = std::filesystem;
using Clock = std::chrono::steady_clock;

// Pinned limits.
constexpr size_t kDifferentialCases = 100000;
constexpr double kDifferentialBudgetSeconds = 120.0;
constexpr double kCompress16BudgetSeconds = 60.0;
constexpr size_t kRandomCounterMasks = 10000;
constexpr size_t kMinTraces = 20;
constexpr double kGmin2Ratio = 0.25;
constexpr double kGmin4Ratio = 0.0625;

struct Outcome {
  bool pass = false;
  std::string detail;
};

double Seconds(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

Outcome Differential() {
  CampaignConfig cfg;
  cfg.seed = 0xacce97;
  cfg.cases = kDifferentialCases;
  cfg.run_baseline = false;
  const auto start = Clock::now();
  const CampaignReport r = RunDifferential(cfg);
  const double secs = Seconds(start);
  bool kinds_ok = true;
  for (const char *kind : {"gather", "compress", "slideup", "slidedown"}) {
    for (const char *sew : {"e8", "e16", "e32"}) {
      const auto it = r.coverage.find(std::string(kind) + "." + sew);
      kinds_ok &= it != r.coverage.end() && it->second > 0;
    }
  }
  std::ostringstream os;
  os << r.passed << "/" << r.total << " bit-equal in " << secs << " s";
  return {r.total == kDifferentialCases && r.failed == 0 && kinds_ok &&
              secs < kDifferentialBudgetSeconds,
          os.str()};
}

// Destinations against the scan oracle, then whole-register results against
// the golden model, for every mask at `n` elements.
size_t CompressMismatches(size_t n) {
  const unsigned vlen = static_cast<unsigned>(8 * n);
  const UnifiedUnit unit({vlen, 1, 1});
  std::mt19937_64 rng(n);
  size_t bad = 0;
  for (uint64_t code = 0; code < (uint64_t{1} << n); ++code) {
    const auto bits = testing::MaskBits(code, n);
    const MaskReg mask = BitVec::FromBits(bits);
    const auto dest = BuildDestIndicesCompress(mask, n);
    const auto want = testing::CompressDestScan(bits);
    std::vector<bool> hit(n, false);
    bool ok = dest.size() == n;
    for (size_t i = 0; ok && i < n; ++i) {
      ok = dest[i] == want[i] && !hit[dest[i]];
      if (ok) hit[dest[i]] = true;
    }
    const PermInstr instr{PermKind::kCompress, Sew::kE8, 0, false, static_cast<unsigned>(n)};
    const Operands ops{testing::RandomReg(rng, vlen), testing::RandomReg(rng, vlen),
                       VectorReg(vlen), MaskReg(n), mask};
    ok = ok && unit.Execute(instr, ops).value == golden::Execute(instr, ops);
    bad += !ok;
  }
  return bad;
}

Outcome ExhaustiveCompress() {
  const size_t bad8 = CompressMismatches(8);
  const auto start = Clock::now();
  const size_t bad16 = CompressMismatches(16);
  const double secs = Seconds(start);
  std::ostringstream os;
  os << "E=8: 256 masks, " << bad8 << " mismatches; E=16: 65536 masks, " << bad16
     << " mismatches in " << secs << " s";
  return {bad8 == 0 && bad16 == 0 && secs < kCompress16BudgetSeconds, os.str()};
}

Outcome SadSoundness() {
  size_t checked = 0, bad = 0;
  for (size_t range : {8u, 16u, 32u}) {
    const unsigned w = FieldWidth(range);
    const int64_t span = int64_t{1} << w;
    for (uint32_t s = 0; s < span; ++s) {
      for (uint32_t c = 0; c < span; ++c) {
        int64_t v = (int64_t{s} + c) % span;
        if (v >= span / 2) v -= span;
        const BitVec got = SadDecode({s, c}, range, w);
        bool ok = got.size() == range;
        for (size_t j = 0; ok && j < range; ++j) ok = got.Get(j) == (v == static_cast<int64_t>(j));
        bad += !ok;
        ++checked;
      }
    }
  }
  std::ostringstream os;
  os << checked << " (sum, carry) pairs, " << bad << " mismatches";
  return {bad == 0, os.str()};
}

bool CountersMatch(const std::vector<int> &bits) {
  const size_t n = bits.size();
  const unsigned w = FieldWidth(n);
  const BitVec mask = BitVec::FromBits(bits);
  const auto ones = CountOnesHighToLow(mask, n);
  const auto zeros = CountZerosLowToHigh(mask, n);
  const auto want_ones = testing::OnesAbove(bits);
  const auto want_zeros = testing::ZerosBelow(bits);
  for (size_t i = 0; i < n; ++i) {
    if (Value(ones[i], w) != want_ones[i] || Value(zeros[i], w) != want_zeros[i]) return false;
  }
  return true;
}

Outcome PrefixCounters() {
  size_t bad = 0;
  for (uint64_t code = 0; code < 256; ++code) bad += !CountersMatch(testing::MaskBits(code, 8));
  std::mt19937_64 rng(0xc0);
  for (size_t k = 0; k < kRandomCounterMasks; ++k) bad += !CountersMatch(testing::MaskBits(rng(), 32));
  std::ostringstream os;
  os << 256 + kRandomCounterMasks << " masks, " << bad << " mismatches";
  return {bad == 0, os.str()};
}

Outcome FixedLatency() {
  bool ok = true;
  std::ostringstream os;
  for (unsigned stages : {1u, 2u}) {
    CampaignConfig cfg;
    cfg.seed = stages;
    cfg.cases = 20000;
    cfg.pipeline_stages = stages;
    cfg.run_baseline = false;
    const auto hist = RunDifferential(cfg).latency_histogram["unified"];
    const bool one = hist.size() == 1 && hist.begin()->first == stages;
    ok &= one;
    os << "stages=" << stages << " buckets=" << hist.size() << (one ? "" : " (bad)") << "; ";
  }
  // Baseline compress latency law over every 8-element mask, overhead 1.
  const unsigned overhead = 1;
  const BaselineUnit baseline({64, overhead});
  size_t law_bad = 0;
  std::mt19937_64 rng(8);
  for (uint64_t code = 0; code < 256; ++code) {
    const auto bits = testing::MaskBits(code, 8);
    const PermInstr instr{PermKind::kCompress, Sew::kE8, 0, false, 8};
    const Operands ops{testing::RandomReg(rng, 64), testing::RandomReg(rng, 64), VectorReg(64),
                       MaskReg(8), BitVec::FromBits(bits)};
    unsigned popcount = 0;
    for (int b : bits) popcount += b;
    law_bad += baseline.Execute(instr, ops).latency_cycles != overhead + popcount;
  }
  ok &= law_bad == 0;
  os << "baseline law violations=" << law_bad;
  return {ok, os.str()};
}

Outcome StructuralScaling() {
  const auto g1 = DescribeStructure({256, 1, 1});
  const auto g2 = DescribeStructure({256, 2, 1});
  const auto g4 = DescribeStructure({256, 4, 1});
  const double r2 = static_cast<double>(g2.select_bits) / g1.select_bits;
  const double r4 = static_cast<double>(g4.select_bits) / g1.select_bits;
  // Both ratios are exact binary fractions, so equality is exact.
  const bool ok = r2 == kGmin2Ratio && r4 == kGmin4Ratio;
  std::ostringstream os;
  os << "select bits " << g1.select_bits << " / " << g2.select_bits << " / " << g4.select_bits
     << "; ratios " << r2 << ", " << r4;
  return {ok, os.str()};
}

int RunCli(const std::string &cli, const fs::path &trace) {
  const std::string cmd =
      "\"" + cli + "\" --unit both --trace \"" + trace.string() + "\" > /dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  if (status == -1) return -1;
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

Outcome TraceCli(const std::string &cli, const fs::path &dir) {
  size_t passed = 0, total = 0;
  for (const auto &entry : fs::directory_iterator(dir)) {
    if (entry.path().extension() != ".trace") continue;
    ++total;
    passed += RunCli(cli, entry.path()) == 0;
  }
  const int negative = RunCli(cli, dir / "negative" / "flipped_expect.trace");
  std::ostringstream os;
  os << passed << "/" << total << " traces exit 0; negative trace exit " << negative;
  return {total >= kMinTraces && passed == total && negative > 0, os.str()};
}

Outcome FaultSensitivity() {
  CampaignConfig cfg;
  cfg.seed = 0xfa17;
  cfg.cases = 2000;
  cfg.run_baseline = false;
  cfg.fault = CrossbarFault{0, 0, 1};
  const CampaignReport r = RunDifferential(cfg);
  bool ok = r.failed > 0 && r.first_failure && r.first_failure->test_case;
  std::ostringstream os;
  os << r.failed << " failures";
  if (ok) {
    const TestCase &tc = *r.first_failure->test_case;
    ok = CheckCase(cfg, "unified", tc).has_value();
    os << "; minimized: " << ToString(tc.instr);
  }
  return {ok, os.str()};
}

}  // namespace

int main(int argc, char **argv) {
  if (argc != 3) {
    std::cerr << "usage: " << argv[0] << " <vperm-cli> <trace-dir>\n";
    return 2;
  }
  const std::string cli = argv[1];
  const fs::path trace_dir = argv[2];

  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"differential equivalence", Differential},
      {"exhaustive compress", ExhaustiveCompress},
      {"sum-addressed decode soundness", SadSoundness},
      {"carry-save prefix counters", PrefixCounters},
      {"fixed latency", FixedLatency},
      {"structural scaling", StructuralScaling},
      {"trace cli", [&] { return TraceCli(cli, trace_dir); }},
      {"fault sensitivity", FaultSensitivity},
  };
  int failed = 0;
  for (size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception &e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failed += !o.pass;
    std::cout << (o.pass ? "[PASS]" : "[FAIL]") << " criterion " << i + 1 << ": "
              << criteria[i].first << " - " << o.detail << std::endl;
  }
  std::cout << criteria.size() - failed << "/" << criteria.size() << " criteria passed\n";
  return failed == 0 ? 0 : 1;
}
