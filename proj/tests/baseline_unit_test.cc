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

#include <random>

#include "gtest/gtest.h"
#include "oracles.h"
#include "vperm/golden_model.h"
#include "vperm/unified_unit.h"

namespace vperm {
namespace {

constexpr unsigned kVlen64 = 64;

const std::vector<uint32_t> kSrc = {10, 20, 30, 40, 50, 60, 70, 80};
const std::vector<uint32_t> kOld = {91, 92, 93, 94, 95, 96, 97, 98};

VectorReg Reg(const std::vector<uint32_t> &elems) {
  return VectorReg::FromElements(kVlen64, Sew::kE8, elems);
}

TEST(BaselineGather, Examples) {
  const BaselineUnit unit({kVlen64, 1});
  const PermInstr instr{PermKind::kGather, Sew::kE8, 0, false, 8};
  auto r = unit.Gather(Reg(kOld), Reg(kSrc), Reg({0, 1, 2, 3, 4, 5, 6, 7}), MaskReg(8), instr);
  EXPECT_EQ(r.value, Reg(kSrc));
  EXPECT_EQ(r.latency_cycles, 1u);

  const auto idx = Reg({3, 3, 0, 7, 2, 1, 5, 4});
  r = unit.Gather(Reg(kOld), Reg(kSrc), idx, MaskReg(8), instr);
  EXPECT_EQ(r.value, golden::Gather(Reg(kOld), Reg(kSrc), idx, MaskReg(8), instr));
  EXPECT_EQ(r.latency_cycles, 1u);

  r = unit.Gather(Reg(kOld), Reg(kSrc), Reg({12, 1, 2, 3, 4, 5, 6, 7}), MaskReg(8), instr);
  EXPECT_EQ(r.value.Elem(0, Sew::kE8), 0u);
}

TEST(BaselineSlide, Examples) {
  const BaselineUnit unit({kVlen64, 1});
  const PermInstr pass{PermKind::kSlideUp, Sew::kE8, 0, false, 8};
  auto r = unit.Slide(Reg(kOld), Reg(kSrc), MaskReg(8), pass);
  EXPECT_EQ(r.value, Reg(kSrc));
  EXPECT_EQ(r.latency_cycles, 1u);

  const PermInstr down3{PermKind::kSlideDown, Sew::kE8, 3, false, 8};
  r = unit.Slide(Reg(kOld), Reg(kSrc), MaskReg(8), down3);
  EXPECT_EQ(r.value.Elements(Sew::kE8), (std::vector<uint32_t>{40, 50, 60, 70, 80, 0, 0, 0}));

  // 5 = 4 + 1 uses two rotation stages.
  for (PermKind kind : {PermKind::kSlideUp, PermKind::kSlideDown}) {
    const PermInstr five{kind, Sew::kE8, 5, false, 8};
    EXPECT_EQ(unit.Slide(Reg(kOld), Reg(kSrc), MaskReg(8), five).value,
              golden::Execute(five, {Reg(kOld), Reg(kSrc), VectorReg(kVlen64), MaskReg(8),
                                     MaskReg(8)}));
  }
}

TEST(BaselineSlide, AllOffsetsAllWidths) {
  std::mt19937_64 rng(77);
  const unsigned vlen = 256;
  const BaselineUnit unit({vlen, 1});
  for (Sew sew : {Sew::kE8, Sew::kE16, Sew::kE32}) {
    const unsigned n = vlen / SewBits(sew);
    for (PermKind kind : {PermKind::kSlideUp, PermKind::kSlideDown}) {
      for (unsigned offset = 0; offset <= n; ++offset) {
        const PermInstr instr{kind, sew, offset, (offset & 1) != 0,
                              static_cast<unsigned>(rng() % (n + 1))};
        Operands ops{testing::RandomReg(rng, vlen), testing::RandomReg(rng, vlen),
                     VectorReg(vlen), testing::RandomBits(rng, n), MaskReg(n)};
        ASSERT_EQ(unit.Execute(instr, ops).value, golden::Execute(instr, ops))
            << ToString(instr);
      }
    }
  }
}

TEST(BaselineCompress, Examples) {
  const BaselineUnit unit({kVlen64, 1});
  const PermInstr instr{PermKind::kCompress, Sew::kE8, 0, false, 8};

  auto r = unit.Compress(Reg(kOld), Reg(kSrc), MaskReg(8), instr);
  EXPECT_EQ(r.value, Reg(kOld));
  EXPECT_EQ(r.latency_cycles, 1u);

  const auto mask = MaskReg::FromBits({1, 0, 1, 1, 0, 0, 1, 0});
  r = unit.Compress(Reg(kOld), Reg(kSrc), mask, instr);
  EXPECT_EQ(r.value, golden::Compress(Reg(kOld), Reg(kSrc), mask, instr));
  EXPECT_EQ(r.latency_cycles, 5u);

  r = unit.Compress(Reg(kOld), Reg(kSrc), MaskReg::Ones(8), instr);
  EXPECT_EQ(r.value, Reg(kSrc));
  EXPECT_EQ(r.latency_cycles, 9u);
}

TEST(BaselineCompress, LatencyLawExhaustive) {
  std::mt19937_64 rng(9);
  for (unsigned overhead : {0u, 1u, 3u}) {
    const BaselineUnit unit({kVlen64, overhead});
    for (uint64_t code = 0; code < 256; ++code) {
      const auto bits = testing::MaskBits(code, 8);
      const MaskReg mask = BitVec::FromBits(bits);
      const unsigned vl = code % 9;
      const PermInstr instr{PermKind::kCompress, Sew::kE8, 0, false, vl};
      Operands ops{testing::RandomReg(rng, kVlen64), testing::RandomReg(rng, kVlen64),
                   VectorReg(kVlen64), MaskReg(8), mask};
      const ExecResult r = unit.Execute(instr, ops);
      unsigned active = 0;
      for (size_t i = 0; i < vl; ++i) active += bits[i];
      ASSERT_EQ(r.latency_cycles, overhead + active);
      ASSERT_EQ(r.value, golden::Execute(instr, ops));
    }
  }
}

TEST(BaselineVsUnified, LatencyContrastWitness) {
  const BaselineUnit baseline({kVlen64, 1});
  const UnifiedUnit unified({kVlen64, 1, 1});
  const PermInstr instr{PermKind::kCompress, Sew::kE8, 0, false, 8};
  Operands sparse{Reg(kOld), Reg(kSrc), VectorReg(kVlen64), MaskReg(8), MaskReg::OneHot(8, 3)};
  Operands dense = sparse;
  dense.mask = MaskReg::Ones(8);
  EXPECT_NE(baseline.Execute(instr, sparse).latency_cycles,
            baseline.Execute(instr, dense).latency_cycles);
  EXPECT_EQ(unified.Execute(instr, sparse).latency_cycles,
            unified.Execute(instr, dense).latency_cycles);
}

TEST(BaselineVsGolden, RandomCases) {
  std::mt19937_64 rng(31);
  const unsigned vlen = 256;
  const BaselineUnit unit({vlen, 1});
  for (int iter = 0; iter < 5000; ++iter) {
    const Sew sew = static_cast<Sew>(8u << (rng() % 3));
    const size_t n = vlen / SewBits(sew);
    PermInstr instr{static_cast<PermKind>(rng() % 4), sew, 0, false,
                    static_cast<unsigned>(rng() % (n + 1))};
    if (IsSlide(instr.kind)) instr.offset = rng() % (n + 1);
    instr.masked = instr.kind != PermKind::kCompress && (rng() & 1);
    Operands ops{testing::RandomReg(rng, vlen), testing::RandomReg(rng, vlen),
                 testing::RandomReg(rng, vlen), testing::RandomBits(rng, n),
                 testing::RandomBits(rng, n)};
    for (size_t i = 0; i < n; ++i) {
      if (rng() % 4) ops.idx.SetElem(i, sew, rng() % n);
    }
    ASSERT_EQ(unit.Execute(instr, ops).value, golden::Execute(instr, ops)) << ToString(instr);
  }
}

}  // namespace
}  // namespace vperm
