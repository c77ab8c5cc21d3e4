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

#include "vperm/trace.h"

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "gtest/gtest.h"
#include "oracles.h"

#ifndef VPERM_TRACE_DIR
#error "VPERM_TRACE_DIR must point at the trace corpus"
#endif

namespace vperm {
namespace {

namespace fs = std::filesystem;

const std::string kZeros(64, '0');

std::string Hex(const std::string &tail) { return "0x" + std::string(64 - tail.size(), '0') + tail; }

std::string ReadFile(const fs::path &path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

TraceError::Kind ParseErrorKind(const std::string &text, size_t *line = nullptr) {
  try {
    ParseTrace(text);
  } catch (const TraceError &e) {
    if (line) *line = e.line();
    return e.kind();
  }
  ADD_FAILURE() << "no error for:\n" << text;
  return TraceError::Kind::kSemantic;
}

TEST(ParseTrace, Directives) {
  const auto lines = ParseTrace(
      "# comment\n"
      "\n"
      "setcfg vlen=256 gmin=2 stages=2\n"
      "setreg src " + Hex("0100") + "\n"
      "setmask v0 0x0000000f\n"
      "exec slidedown sew=16 offset=3 masked vl=9\n"
      "expect " + Hex("") + "\n");
  ASSERT_EQ(lines.size(), 5u);
  EXPECT_EQ(lines[0].line, 3u);
  EXPECT_EQ(std::get<SetCfg>(lines[0].payload), (SetCfg{256, 2, 2}));
  const auto &reg = std::get<SetReg>(lines[1].payload);
  EXPECT_EQ(reg.reg, RegName::kSrc);
  EXPECT_EQ(reg.value.byte(0), 0x00);
  EXPECT_EQ(reg.value.byte(1), 0x01);
  const auto &mask = std::get<SetMask>(lines[2].payload);
  EXPECT_EQ(mask.bits.size(), 32u);
  EXPECT_EQ(mask.bits.Popcount(), 4u);
  EXPECT_TRUE(mask.bits.Get(0) && mask.bits.Get(3) && !mask.bits.Get(4));
  const PermInstr want{PermKind::kSlideDown, Sew::kE16, 3, true, 9};
  EXPECT_EQ(std::get<Exec>(lines[3].payload).instr, want);
  EXPECT_EQ(lines[4].line, 7u);
}

TEST(ParseTrace, ShortRegisterLiteralIsWidthMismatch) {
  size_t line = 0;
  const std::string text = "setreg dest 0x" + kZeros + "\nsetreg src 0x" + std::string(63, '0') + "\n";
  EXPECT_EQ(ParseErrorKind(text, &line), TraceError::Kind::kWidthMismatch);
  EXPECT_EQ(line, 2u);
}

TEST(ParseTrace, WidthFollowsSetcfg) {
  EXPECT_NO_THROW(ParseTrace("setcfg vlen=64\nsetreg src 0x0123456789abcdef\n"));
  EXPECT_EQ(ParseErrorKind("setcfg vlen=64\nsetreg src 0x" + kZeros + "\n"),
            TraceError::Kind::kWidthMismatch);
  EXPECT_EQ(ParseErrorKind("setmask v0 0x00\n"), TraceError::Kind::kWidthMismatch);
}

TEST(ParseTrace, SyntaxErrors) {
  for (const std::string &bad : std::vector<std::string>{
           "frobnicate\n",
           "setreg vd 0x" + kZeros + "\n",
           "setreg src 0x" + std::string(63, '0') + "g\n",
           "setmask v1 0x00000000\n",
           "exec rotate sew=8 vl=1\n",
           "exec gather sew=64 vl=1\n",
           "exec gather vl=1\n",
           "exec gather sew=8\n",
           "exec gather sew=8 vl=x\n",
           "exec gather sew=8 color=red vl=1\n",
           "setcfg\n",
           "setcfg vlen=100\n",
           "setcfg depth=3\n",
           "expect\n",
       }) {
    EXPECT_EQ(ParseErrorKind(bad), TraceError::Kind::kSyntax) << bad;
  }
}

TEST(ParseTrace, ErrorMessageNamesLine) {
  try {
    ParseTrace("\n\nexec gather sew=8\n");
    FAIL();
  } catch (const TraceError &e) {
    EXPECT_EQ(std::string(e.what()).rfind("line 3: ", 0), 0u) << e.what();
  }
}

TEST(MaskHex, RoundTrip) {
  std::mt19937_64 rng(4);
  for (size_t n : {8u, 32u, 64u, 128u}) {
    const MaskReg m = testing::RandomBits(rng, n);
    EXPECT_EQ(MaskFromHex(MaskToHex(m), n), m);
  }
  EXPECT_EQ(MaskToHex(MaskReg::OneHot(8, 4)), "0x10");
  EXPECT_FALSE(MaskFromHex("0x1", 8).has_value());
}

// Printing then parsing any well-formed script gives the same directives.
TEST(PrintTrace, RoundTripProperty) {
  std::mt19937_64 rng(2026);
  for (int iter = 0; iter < 200; ++iter) {
    const unsigned vlen = 32u << (rng() % 4);
    std::vector<TraceLine> lines;
    SetCfg cfg;
    cfg.vlen = vlen;
    if (rng() & 1) cfg.gmin = 1u << (rng() % 3);
    if (rng() & 1) cfg.stages = 1 + rng() % 2;
    lines.push_back({0, cfg});
    for (int k = 0; k < 12; ++k) {
      switch (rng() % 4) {
        case 0:
          lines.push_back({0, SetReg{static_cast<RegName>(rng() % 3), testing::RandomReg(rng, vlen)}});
          break;
        case 1:
          lines.push_back({0, SetMask{static_cast<MaskName>(rng() % 2), testing::RandomBits(rng, vlen / 8)}});
          break;
        case 2: {
          PermInstr instr{static_cast<PermKind>(rng() % 4), static_cast<Sew>(8u << (rng() % 3)), 0,
                          false, static_cast<unsigned>(rng() % 40)};
          if (IsSlide(instr.kind)) instr.offset = rng() % 40;
          instr.masked = instr.kind != PermKind::kCompress && (rng() & 1);
          lines.push_back({0, Exec{instr}});
          break;
        }
        default:
          lines.push_back({0, Expect{testing::RandomReg(rng, vlen)}});
      }
    }
    const std::string text = PrintTrace(lines);
    const auto parsed = ParseTrace(text);
    ASSERT_EQ(parsed, lines) << text;
    EXPECT_EQ(PrintTrace(parsed), text);
  }
}

TEST(RunTrace, BundledCorpusPasses) {
  size_t count = 0;
  for (const auto &entry : fs::directory_iterator(VPERM_TRACE_DIR)) {
    if (entry.path().extension() != ".trace") continue;
    ++count;
    const auto lines = ParseTrace(ReadFile(entry.path()));
    TraceOptions opts;
    opts.units = UnitChoice::kBoth;
    const TraceReport r = RunTrace(lines, opts);
    EXPECT_TRUE(r.ok()) << entry.path() << "\n" << FormatTraceReport(r, false);
    EXPECT_GT(r.expects, 0u) << entry.path();
  }
  EXPECT_GE(count, 20u);
}

TEST(RunTrace, FlippedNibbleFails) {
  const fs::path path = fs::path(VPERM_TRACE_DIR) / "gather_e8_unmasked.trace";
  std::string text = ReadFile(path);
  const size_t at = text.find("expect 0x");
  ASSERT_NE(at, std::string::npos);
  char &digit = text[at + 9];
  digit = digit == '0' ? '1' : '0';
  const TraceReport r = RunTrace(ParseTrace(text), {});
  EXPECT_EQ(r.failures.size(), 1u);
  EXPECT_FALSE(r.ok());
}

TEST(RunTrace, ByteWidthOnWideGranuleIsSemanticError) {
  const fs::path path = fs::path(VPERM_TRACE_DIR) / "negative" / "sew8_gmin2.trace";
  try {
    RunTrace(ParseTrace(ReadFile(path)), {});
    FAIL() << "accepted";
  } catch (const TraceError &e) {
    EXPECT_EQ(e.kind(), TraceError::Kind::kSemantic);
    EXPECT_EQ(e.line(), 5u);
  }
  // The baseline has no granule restriction.
  TraceOptions opts;
  opts.units = UnitChoice::kBaseline;
  EXPECT_NO_THROW(RunTrace(ParseTrace(ReadFile(path)), opts));
}

TEST(RunTrace, MissingOperandIsSemanticError) {
  const std::string text = "setreg dest 0x" + kZeros + "\nexec gather sew=8 vl=4\n";
  try {
    RunTrace(ParseTrace(text), {});
    FAIL();
  } catch (const TraceError &e) {
    EXPECT_EQ(e.kind(), TraceError::Kind::kSemantic);
    EXPECT_EQ(e.line(), 2u);
  }
  EXPECT_THROW(RunTrace(ParseTrace("expect 0x" + kZeros + "\n"), {}), TraceError);
  EXPECT_THROW(RunTrace(ParseTrace("setreg dest 0x" + kZeros + "\nsetreg src 0x" + kZeros +
                                   "\nexec compress sew=8 vl=4\n"),
                        {}),
               TraceError);
}

TEST(RunTrace, ExecWritesDestAndRecordsLatency) {
  // src is unchanged between the two execs, so both land on the same value.
  const std::string text =
      "setcfg stages=2\n"
      "setreg dest 0x" + kZeros + "\n"
      "setreg src " + Hex("04030201") + "\n"
      "exec slideup sew=8 offset=1 vl=4\n"
      "expect " + Hex("03020100") + "\n"
      "exec slideup sew=8 offset=1 vl=4\n"
      "expect " + Hex("03020100") + "\n";
  TraceOptions opts;
  opts.units = UnitChoice::kBoth;
  const TraceReport r = RunTrace(ParseTrace(text), opts);
  EXPECT_TRUE(r.ok()) << FormatTraceReport(r, false);
  ASSERT_EQ(r.execs.size(), 2u);
  EXPECT_EQ(r.execs[0].unified_latency, 2u);
  EXPECT_EQ(r.execs[0].baseline_latency, 1u);
  const std::string porcelain = FormatTraceReport(r, true);
  EXPECT_NE(porcelain.find("exec.1.line=6\n"), std::string::npos);
  EXPECT_NE(porcelain.find("status=ok\n"), std::string::npos);
  EXPECT_NE(porcelain.find("expects=2\n"), std::string::npos);
}

TEST(ReportStructure, Ratios) {
  const std::string text =
      ReportStructure({{256, 1, 1}, {256, 2, 1}, {256, 4, 1}}, true);
  EXPECT_NE(text.find("structure.vlen256.gmin1.select_bits=1024\n"), std::string::npos);
  EXPECT_NE(text.find("structure.vlen256.gmin2.select_ratio=0.25\n"), std::string::npos);
  EXPECT_NE(text.find("structure.vlen256.gmin4.select_ratio=0.0625\n"), std::string::npos);
  EXPECT_NE(text.find("structure.vlen256.gmin4.granules=8\n"), std::string::npos);
}

}  // namespace
}  // namespace vperm
