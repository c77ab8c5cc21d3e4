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

// Writes the bundled trace corpus. Every expect line comes from the golden
// model.
//
//   gen_traces <out_dir>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "vperm/golden_model.h"
#include "vperm/trace.h"

namespace {

using vperm::MaskReg;
using vperm::PermInstr;
using vperm::PermKind;
using vperm::Sew;
using vperm::VectorReg;

constexpr unsigned kVlen = 256;

VectorReg RandomReg(std::mt19937_64 &rng) {
  VectorReg r(kVlen);
  for (size_t b = 0; b < r.num_bytes(); ++b) r.set_byte(b, rng() & 0xff);
  return r;
}

MaskReg RandomMask(std::mt19937_64 &rng) {
  MaskReg m(kVlen / 8);
  for (size_t i = 0; i < m.size(); ++i) m.Set(i, rng() & 1);
  return m;
}

struct Step {
  PermInstr instr;
  MaskReg mask;  // v0 or compress mask
};

std::string Emit(const std::vector<Step> &steps, std::mt19937_64 &rng,
                 const std::string &title, std::string *expected_last) {
  std::ostringstream os;
  os << "# " << title << "\n";
  os << "setcfg vlen=" << kVlen << " gmin=1 stages=1\n";
  VectorReg dest = RandomReg(rng);
  os << "setreg dest " << dest.ToHex() << "\n";
  for (const Step &s : steps) {
    const size_t n = kVlen / vperm::SewBits(s.instr.sew);
    vperm::Operands ops{dest, RandomReg(rng), VectorReg(kVlen),
                        MaskReg(kVlen / 8), MaskReg(kVlen / 8)};
    os << "setreg src " << ops.src.ToHex() << "\n";
    if (s.instr.kind == PermKind::kGather) {
      for (size_t i = 0; i < n; ++i) {
        // Mostly in range, with an occasional out-of-range index.
        const uint32_t v = rng() % 8 == 0 ? static_cast<uint32_t>(rng())
                                          : static_cast<uint32_t>(rng() % n);
        ops.idx.SetElem(i, s.instr.sew, v);
      }
      os << "setreg idx " << ops.idx.ToHex() << "\n";
    }
    if (s.instr.kind == PermKind::kCompress) {
      ops.mask = s.mask;
      os << "setmask mask " << vperm::MaskToHex(ops.mask) << "\n";
    } else if (s.instr.masked) {
      ops.v0 = s.mask;
      os << "setmask v0 " << vperm::MaskToHex(ops.v0) << "\n";
    }
    dest = vperm::golden::Execute(s.instr, ops);
    os << "exec " << vperm::ToString(s.instr) << "\n";
    os << "expect " << dest.ToHex() << "\n";
  }
  if (expected_last) *expected_last = dest.ToHex();
  return os.str();
}

std::vector<Step> StepsFor(PermKind kind, Sew sew, bool masked,
                           std::mt19937_64 &rng) {
  const unsigned n = kVlen / vperm::SewBits(sew);
  std::vector<Step> steps;
  auto add = [&](unsigned vl, unsigned offset, MaskReg mask) {
    PermInstr instr{kind, sew, vperm::IsSlide(kind) ? offset : 0, masked, vl};
    steps.push_back({instr, std::move(mask)});
  };
  add(n, 0, RandomMask(rng));
  add(n, 1, RandomMask(rng));
  add(n / 2 + 1, n / 4, RandomMask(rng));
  add(n, n, RandomMask(rng));
  add(0, 3, RandomMask(rng));
  add(n - 1, 5, MaskReg::Ones(kVlen / 8));
  add(n, 2, MaskReg(kVlen / 8));
  return steps;
}

}  // namespace

int main(int argc, char **argv) {
  if (argc != 2) {
    std::cerr << "usage: gen_traces <out_dir>\n";
    return 2;
  }
  const std::filesystem::path out = argv[1];
  std::filesystem::create_directories(out / "negative");
  std::mt19937_64 rng(20260415);

  int written = 0;
  std::string flip_source;
  for (PermKind kind : {PermKind::kGather, PermKind::kCompress,
                        PermKind::kSlideUp, PermKind::kSlideDown}) {
    for (Sew sew : {Sew::kE8, Sew::kE16, Sew::kE32}) {
      for (bool masked : {false, true}) {
        if (kind == PermKind::kCompress && masked) continue;
        const std::string name = std::string(vperm::KindName(kind)) + "_e" +
                                 std::to_string(vperm::SewBits(sew)) + "_" +
                                 (masked ? "masked" : "unmasked");
        const std::string text =
            Emit(StepsFor(kind, sew, masked, rng), rng, name, nullptr);
        std::ofstream(out / (name + ".trace")) << text;
        if (kind == PermKind::kCompress && sew == Sew::kE8) flip_source = text;
        ++written;
      }
    }
  }

  // Mixed kinds, two-stage pipeline, wide elements at gmin=2.
  {
    std::vector<Step> steps;
    for (PermKind kind : {PermKind::kSlideUp, PermKind::kGather,
                          PermKind::kCompress, PermKind::kSlideDown}) {
      for (Sew sew : {Sew::kE16, Sew::kE32}) {
        auto s = StepsFor(kind, sew, kind != PermKind::kCompress, rng);
        steps.push_back(s[2]);
      }
    }
    std::string text = Emit(steps, rng, "mixed kinds at gmin=2, 2 stages", nullptr);
    const std::string from = "gmin=1 stages=1";
    text.replace(text.find(from), from.size(), "gmin=2 stages=2");
    std::ofstream(out / "mixed_gmin2_stages2.trace") << text;
    ++written;
  }

  // Negative: one expect nibble flipped.
  {
    const size_t at = flip_source.find("expect 0x");
    const size_t digit = at + std::string("expect 0x").size() + 5;
    flip_source[digit] = flip_source[digit] == '0' ? '1' : '0';
    std::ofstream(out / "negative" / "flipped_expect.trace")
        << "# compress_e8_unmasked with one expect nibble flipped\n"
        << flip_source;
  }

  std::cout << "wrote " << written << " traces to " << out << "\n";
  return 0;
}
