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

#include "vperm/harness.h"

#include <functional>
#include <random>
#include <sstream>

#include "vperm/carry_save.h"
#include "vperm/golden_model.h"

namespace vperm {

namespace {

constexpr char kUnified[] = "unified";
constexpr char kBaseline[] = "baseline";

uint64_t SplitMix64(uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

// Bounded draw in [0, n). Kept local so cases do not depend on the
// standard library's distribution implementations.
uint64_t Draw(std::mt19937_64 &rng, uint64_t n) { return rng() % n; }

MaskReg GenMask(std::mt19937_64 &rng, size_t n) {
  switch (Draw(rng, 8)) {
    case 0:
      return MaskReg(n);
    case 1:
      return MaskReg::Ones(n);
    case 2:
      return MaskReg::OneHot(n, Draw(rng, n));
    case 3: {
      MaskReg m = MaskReg::Ones(n);
      m.Set(Draw(rng, n), false);
      return m;
    }
    default: {
      MaskReg m(n);
      for (size_t i = 0; i < n; ++i) m.Set(i, rng() & 1);
      return m;
    }
  }
}

VectorReg GenReg(std::mt19937_64 &rng, unsigned vlen) {
  VectorReg r(vlen);
  for (size_t b = 0; b < r.num_bytes(); ++b) {
    r.set_byte(b, static_cast<uint8_t>(rng()));
  }
  return r;
}

std::string CoverageKey(const PermInstr &instr) {
  return std::string(KindName(instr.kind)) + ".e" +
         std::to_string(SewBits(instr.sew));
}

std::vector<Sew> LegalSews(const CampaignConfig &config) {
  std::vector<Sew> out;
  for (Sew s : config.sew_set) {
    if (!config.run_unified || SewBytes(s) >= config.gmin) out.push_back(s);
  }
  return out;
}

UnitConfig UnifiedConfigOf(const CampaignConfig &config) {
  return {config.vlen, config.gmin, config.pipeline_stages};
}

BaselineConfig BaselineConfigOf(const CampaignConfig &config) {
  return {config.vlen, config.compress_overhead_cycles};
}

std::string Describe(const TestCase &tc) {
  std::ostringstream os;
  os << ToString(tc.instr) << " src=" << tc.ops.src.ToHex()
     << " old_dest=" << tc.ops.old_dest.ToHex();
  if (tc.instr.kind == PermKind::kGather) os << " idx=" << tc.ops.idx.ToHex();
  if (tc.instr.kind == PermKind::kCompress) {
    os << " mask=" << tc.ops.mask.ToString();
  }
  if (tc.instr.masked) os << " v0=" << tc.ops.v0.ToString();
  return os.str();
}

// Runs every generated case; `observe` sees each unit's result.
using Observer = std::function<void(const TestCase &, const std::string &unit,
                                    const ExecResult &)>;

CampaignReport RunCampaign(const CampaignConfig &config,
                           const Observer &observe) {
  ValidateCampaign(config);
  const UnifiedUnit unified = [&] {
    UnifiedUnit u(UnifiedConfigOf(config));
    u.set_fault(config.fault);
    return u;
  }();
  const BaselineUnit baseline(BaselineConfigOf(config));

  CampaignReport report;
  for (uint64_t index = 0; index < config.cases; ++index) {
    const TestCase tc = GenCase(config, index);
    ++report.coverage[CoverageKey(tc.instr)];
    const VectorReg expected = golden::Execute(tc.instr, tc.ops);

    std::optional<Counterexample> failure;
    auto run = [&](const std::string &unit, auto &&exec) {
      ExecResult r;
      try {
        r = exec();
      } catch (const std::exception &e) {
        if (!failure) {
          failure = Counterexample{unit, std::string("exception: ") + e.what(),
                                   tc, expected.ToHex(), ""};
        }
        return;
      }
      ++report.latency_histogram[unit][r.latency_cycles];
      if (observe) observe(tc, unit, r);
      if (r.value != expected && !failure) {
        failure = Counterexample{unit, "value mismatch", tc, expected.ToHex(),
                                 r.value.ToHex()};
      }
    };
    if (config.run_unified) {
      run(kUnified, [&] { return unified.Execute(tc.instr, tc.ops); });
    }
    if (config.run_baseline) {
      run(kBaseline, [&] { return baseline.Execute(tc.instr, tc.ops); });
    }

    ++report.total;
    if (!failure) {
      ++report.passed;
      continue;
    }
    ++report.failed;
    if (!report.first_failure) {
      const TestCase small = ShrinkCase(config, failure->unit, tc);
      if (auto recheck = CheckCase(config, failure->unit, small)) {
        recheck->what = failure->what;
        report.first_failure = std::move(recheck);
      } else {
        report.first_failure = std::move(failure);
      }
    }
  }
  return report;
}

void Record(CampaignReport &report, bool ok, const std::string &what) {
  ++report.total;
  if (ok) {
    ++report.passed;
    return;
  }
  ++report.failed;
  if (!report.first_failure) {
    report.first_failure = Counterexample{"exhaustive", what, std::nullopt, "", ""};
  }
}

}  // namespace

void ValidateCampaign(const CampaignConfig &config) {
  if (config.cases < 1) {
    throw PermError(ErrorCode::kInvalidConfig, "campaign needs at least 1 case");
  }
  if (config.sew_set.empty()) {
    throw PermError(ErrorCode::kInvalidConfig, "sew_set is empty");
  }
  if (!config.run_unified && !config.run_baseline) {
    throw PermError(ErrorCode::kInvalidConfig, "no unit selected");
  }
  if (config.run_unified) ValidateConfig(UnifiedConfigOf(config));
  if (LegalSews(config).empty()) {
    throw PermError(ErrorCode::kInvalidConfig,
                    "no element width in sew_set is supported at gmin " +
                        std::to_string(config.gmin));
  }
}

TestCase GenCase(const CampaignConfig &config, uint64_t index) {
  std::mt19937_64 rng(SplitMix64(config.seed ^ SplitMix64(index)));
  const std::vector<Sew> sews = LegalSews(config);

  TestCase tc;
  PermInstr &instr = tc.instr;
  instr.kind = static_cast<PermKind>(Draw(rng, 4));
  instr.sew = sews[Draw(rng, sews.size())];
  const size_t n = config.vlen / SewBits(instr.sew);
  // A quarter of the cases run at full length.
  instr.vl = static_cast<unsigned>(Draw(rng, 4) == 0 ? n : Draw(rng, n + 1));
  if (IsSlide(instr.kind)) instr.offset = static_cast<unsigned>(Draw(rng, n + 1));
  instr.masked = instr.kind != PermKind::kCompress && (rng() & 1);

  Operands &ops = tc.ops;
  ops.src = GenReg(rng, config.vlen);
  ops.old_dest = GenReg(rng, config.vlen);
  ops.idx = VectorReg(config.vlen);
  if (instr.kind == PermKind::kGather) {
    ops.idx = GenReg(rng, config.vlen);
    for (size_t i = 0; i < n; ++i) {
      if (Draw(rng, 8) != 0) {
        ops.idx.SetElem(i, instr.sew, static_cast<uint32_t>(Draw(rng, n)));
      }
    }
  }
  ops.v0 = instr.masked ? GenMask(rng, n) : MaskReg(n);
  ops.mask = instr.kind == PermKind::kCompress ? GenMask(rng, n) : MaskReg(n);
  return tc;
}

std::optional<Counterexample> CheckCase(const CampaignConfig &config,
                                        const std::string &unit,
                                        const TestCase &tc) {
  const VectorReg expected = golden::Execute(tc.instr, tc.ops);
  ExecResult r;
  try {
    if (unit == kUnified) {
      UnifiedUnit u(UnifiedConfigOf(config));
      u.set_fault(config.fault);
      r = u.Execute(tc.instr, tc.ops);
    } else {
      r = BaselineUnit(BaselineConfigOf(config)).Execute(tc.instr, tc.ops);
    }
  } catch (const std::exception &e) {
    return Counterexample{unit, std::string("exception: ") + e.what(), tc,
                          expected.ToHex(), ""};
  }
  if (r.value == expected) return std::nullopt;
  return Counterexample{unit, "value mismatch", tc, expected.ToHex(),
                        r.value.ToHex()};
}

TestCase ShrinkCase(const CampaignConfig &config, const std::string &unit,
                    TestCase tc) {
  auto fails = [&](const TestCase &c) {
    return CheckCase(config, unit, c).has_value();
  };
  if (!fails(tc)) return tc;
  while (tc.instr.vl > 0) {
    TestCase smaller = tc;
    smaller.instr.vl /= 2;
    if (!fails(smaller)) break;
    tc = std::move(smaller);
  }
  for (MaskReg Operands::*field : {&Operands::mask, &Operands::v0}) {
    MaskReg &m = tc.ops.*field;
    for (size_t i = 0; i < m.size(); ++i) {
      if (!m.Get(i)) continue;
      m.Set(i, false);
      if (!fails(tc)) m.Set(i, true);
    }
  }
  return tc;
}

CampaignReport RunDifferential(const CampaignConfig &config) {
  return RunCampaign(config, nullptr);
}

CampaignReport RunExhaustiveSmall(size_t compress_elems) {
  CampaignReport report;
  std::mt19937_64 rng(0x5eed);

  // Compress: destination vectors, then whole-register results.
  {
    const size_t n = compress_elems;
    const unsigned vlen = static_cast<unsigned>(8 * n);
    const UnifiedUnit unit({vlen, 1, 1});
    for (uint64_t bits = 0; bits < (uint64_t{1} << n); ++bits) {
      MaskReg mask(n);
      for (size_t i = 0; i < n; ++i) mask.Set(i, (bits >> i) & 1);
      const std::vector<size_t> dest = BuildDestIndicesCompress(mask, n);

      std::vector<size_t> expected(n);
      std::vector<bool> seen(n, false);
      bool bijection = true;
      for (size_t i = 0; i < n; ++i) {
        size_t ones_above = 0, zeros_below = 0;
        for (size_t k = i + 1; k < n; ++k) ones_above += mask.Get(k);
        for (size_t k = 0; k < i; ++k) zeros_below += !mask.Get(k);
        expected[i] = mask.Get(i) ? i - zeros_below : i + ones_above;
        if (dest[i] >= n || seen[dest[i]]) {
          bijection = false;
        } else {
          seen[dest[i]] = true;
        }
      }
      Record(report, bijection && dest == expected,
             "compress destinations for mask " + mask.ToString());

      const PermInstr instr{PermKind::kCompress, Sew::kE8, 0, false,
                            static_cast<unsigned>(n)};
      Operands ops{GenReg(rng, vlen), GenReg(rng, vlen), VectorReg(vlen),
                   MaskReg(n), mask};
      Record(report,
             unit.Execute(instr, ops).value == golden::Execute(instr, ops),
             "compress result for mask " + mask.ToString());
    }
  }

  // Gather: all 4^4 in-range index vectors.
  {
    const unsigned vlen = 32;
    const UnifiedUnit unit({vlen, 1, 1});
    const PermInstr instr{PermKind::kGather, Sew::kE8, 0, false, 4};
    for (unsigned code = 0; code < 256; ++code) {
      VectorReg idx(vlen);
      for (size_t j = 0; j < 4; ++j) idx.set_byte(j, (code >> (2 * j)) & 3);
      Operands ops{GenReg(rng, vlen), GenReg(rng, vlen), idx, MaskReg(4),
                   MaskReg(4)};
      Record(report,
             unit.Execute(instr, ops).value == golden::Execute(instr, ops),
             "gather with idx " + idx.ToHex());
    }
  }

  // Slides: every offset and vl at 8 elements, unmasked and masked.
  {
    const unsigned vlen = 64;
    const UnifiedUnit unit({vlen, 1, 1});
    const MaskReg v0 = MaskReg::FromBits({1, 0, 1, 1, 0, 0, 1, 0});
    for (PermKind kind : {PermKind::kSlideUp, PermKind::kSlideDown}) {
      for (unsigned offset = 0; offset <= 8; ++offset) {
        for (unsigned vl = 0; vl <= 8; ++vl) {
          for (bool masked : {false, true}) {
            const PermInstr instr{kind, Sew::kE8, offset, masked, vl};
            Operands ops{GenReg(rng, vlen), GenReg(rng, vlen), VectorReg(vlen),
                         v0, MaskReg(8)};
            Record(report,
                   unit.Execute(instr, ops).value == golden::Execute(instr, ops),
                   ToString(instr));
          }
        }
      }
    }
  }

  // Carry-save prefix counters on every 8-bit mask.
  {
    const size_t n = 8;
    const unsigned width = FieldWidth(n);
    for (unsigned bits = 0; bits < 256; ++bits) {
      MaskReg mask(n);
      for (size_t i = 0; i < n; ++i) mask.Set(i, (bits >> i) & 1);
      const auto ones = CountOnesHighToLow(mask, n);
      const auto zeros = CountZerosLowToHigh(mask, n);
      bool ok = true;
      for (size_t i = 0; i < n; ++i) {
        int64_t ones_above = 0, zeros_below = 0;
        for (size_t k = i + 1; k < n; ++k) ones_above += mask.Get(k);
        for (size_t k = 0; k < i; ++k) zeros_below += !mask.Get(k);
        ok &= Value(ones[i], width) == ones_above;
        ok &= Value(zeros[i], width) == zeros_below;
      }
      Record(report, ok, "prefix counters for mask " + mask.ToString());
    }
  }

  // SAD over the whole field.
  for (size_t range = 2; range <= 32; range *= 2) {
    const unsigned width = FieldWidth(range);
    const uint32_t span = uint32_t{1} << width;
    for (uint32_t s = 0; s < span; ++s) {
      for (uint32_t c = 0; c < span; ++c) {
        const int64_t v = Value({s, c}, width);
        const OneHotVec want =
            (v >= 0 && v < static_cast<int64_t>(range))
                ? OneHotVec::OneHot(range, static_cast<size_t>(v))
                : OneHotVec(range);
        Record(report, SadDecode({s, c}, range, width) == want,
               "sad range " + std::to_string(range) + " s=" +
                   std::to_string(s) + " c=" + std::to_string(c));
      }
    }
  }
  return report;
}

LatencyAudit RunLatencyAudit(const CampaignConfig &config) {
  LatencyAudit audit;
  bool law = true;
  bool gather_slide_one = true;
  audit.campaign = RunCampaign(
      config, [&](const TestCase &tc, const std::string &unit,
                  const ExecResult &r) {
        if (unit != kBaseline) return;
        ++audit.baseline_by_kind[std::string(KindName(tc.instr.kind))]
                                [r.latency_cycles];
        if (tc.instr.kind == PermKind::kCompress) {
          law &= r.latency_cycles ==
                 config.compress_overhead_cycles +
                     tc.ops.mask.PopcountBelow(tc.instr.vl);
        } else {
          gather_slide_one &= r.latency_cycles == 1;
        }
      });

  const auto &hist = audit.campaign.latency_histogram;
  if (config.run_unified) {
    const auto it = hist.find(kUnified);
    audit.unified_constant = it != hist.end() && it->second.size() == 1 &&
                             it->second.begin()->first ==
                                 config.pipeline_stages;
    if (it != hist.end() && !it->second.empty()) {
      audit.unified_latency = it->second.begin()->first;
    }
  } else {
    audit.unified_constant = true;
  }

  if (config.run_baseline) {
    // Witness pair: empty and full masks at the same vl.
    const Sew sew = LegalSews(config).front();
    const size_t n = config.vlen / SewBits(sew);
    const BaselineUnit baseline(BaselineConfigOf(config));
    const PermInstr instr{PermKind::kCompress, sew, 0, false,
                          static_cast<unsigned>(n)};
    const VectorReg zero(config.vlen);
    const unsigned empty =
        baseline.Compress(zero, zero, MaskReg(n), instr).latency_cycles;
    const unsigned full =
        baseline.Compress(zero, zero, MaskReg::Ones(n), instr).latency_cycles;
    law &= empty == config.compress_overhead_cycles &&
           full == config.compress_overhead_cycles + n;
    const auto it = audit.baseline_by_kind.find("compress");
    audit.baseline_compress_varies =
        empty != full || (it != audit.baseline_by_kind.end() &&
                          it->second.size() > 1);
    audit.baseline_compress_law_holds = law;
    audit.baseline_gather_slide_constant = gather_slide_one;
  } else {
    audit.baseline_compress_law_holds = true;
    audit.baseline_compress_varies = true;
    audit.baseline_gather_slide_constant = true;
  }
  return audit;
}

std::string FormatReport(const CampaignReport &report) {
  std::ostringstream os;
  os << "cases: " << report.total << " total, " << report.passed
     << " passed, " << report.failed << " failed\n";
  for (const auto &[unit, hist] : report.latency_histogram) {
    os << unit << " latency:";
    for (const auto &[lat, count] : hist) os << ' ' << lat << "c x" << count;
    os << '\n';
  }
  if (report.first_failure) {
    const Counterexample &f = *report.first_failure;
    os << "first failure (" << f.unit << "): " << f.what << '\n';
    if (f.test_case) os << "  case: " << Describe(*f.test_case) << '\n';
    if (!f.expected.empty()) os << "  expected: " << f.expected << '\n';
    if (!f.actual.empty()) os << "  actual:   " << f.actual << '\n';
  }
  os << "[summary]\n";
  os << "total=" << report.total << '\n';
  os << "passed=" << report.passed << '\n';
  os << "failed=" << report.failed << '\n';
  for (const auto &[unit, hist] : report.latency_histogram) {
    for (const auto &[lat, count] : hist) {
      os << "latency." << unit << '.' << lat << '=' << count << '\n';
    }
  }
  for (const auto &[key, count] : report.coverage) {
    os << "coverage." << key << '=' << count << '\n';
  }
  if (report.first_failure) {
    os << "first_failure.unit=" << report.first_failure->unit << '\n';
    if (report.first_failure->test_case) {
      os << "first_failure.instr="
         << ToString(report.first_failure->test_case->instr) << '\n';
    }
  }
  return os.str();
}

std::string FormatAudit(const LatencyAudit &audit) {
  std::ostringstream os;
  os << FormatReport(audit.campaign);
  for (const auto &[kind, hist] : audit.baseline_by_kind) {
    for (const auto &[lat, count] : hist) {
      os << "baseline." << kind << '.' << lat << '=' << count << '\n';
    }
  }
  os << "audit.unified_constant=" << audit.unified_constant << '\n';
  os << "audit.unified_latency=" << audit.unified_latency << '\n';
  os << "audit.baseline_compress_law=" << audit.baseline_compress_law_holds
     << '\n';
  os << "audit.baseline_compress_varies=" << audit.baseline_compress_varies
     << '\n';
  os << "audit.baseline_gather_slide_constant="
     << audit.baseline_gather_slide_constant << '\n';
  return os.str();
}

}  // namespace vperm
