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

#include <algorithm>
#include <cctype>
#include <charconv>
#include <iomanip>
#include <sstream>

#include "vperm/golden_model.h"

namespace vperm {

namespace {

using Kind = TraceError::Kind;

std::vector<std::string_view> Tokenize(std::string_view line) {
  std::vector<std::string_view> out;
  size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    const size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

std::string Lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  return out;
}

unsigned ParseUnsigned(std::string_view text, size_t line,
                       std::string_view what) {
  unsigned v = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size() || text.empty()) {
    throw TraceError(Kind::kSyntax, line,
                     "bad " + std::string(what) + " value '" +
                         std::string(text) + "'");
  }
  return v;
}

std::string_view StripHexPrefix(std::string_view hex) {
  if (hex.size() >= 2 && hex[0] == '0' && (hex[1] == 'x' || hex[1] == 'X')) {
    hex.remove_prefix(2);
  }
  return hex;
}

VectorReg ParseRegLiteral(std::string_view token, unsigned vlen, size_t line) {
  const std::string_view digits = StripHexPrefix(token);
  for (char ch : digits) {
    if (!std::isxdigit(static_cast<unsigned char>(ch))) {
      throw TraceError(Kind::kSyntax, line,
                       "non-hex character in '" + std::string(token) + "'");
    }
  }
  if (digits.size() != vlen / 4) {
    throw TraceError(Kind::kWidthMismatch, line,
                     "register literal has " + std::to_string(digits.size()) +
                         " hex digits, vlen " + std::to_string(vlen) +
                         " needs " + std::to_string(vlen / 4));
  }
  return *VectorReg::FromHex(digits, vlen);
}

MaskReg ParseMaskLiteral(std::string_view token, unsigned vlen, size_t line) {
  const std::string_view digits = StripHexPrefix(token);
  for (char ch : digits) {
    if (!std::isxdigit(static_cast<unsigned char>(ch))) {
      throw TraceError(Kind::kSyntax, line,
                       "non-hex character in '" + std::string(token) + "'");
    }
  }
  const size_t nbits = vlen / 8;
  if (digits.size() != nbits / 4) {
    throw TraceError(Kind::kWidthMismatch, line,
                     "mask literal has " + std::to_string(digits.size()) +
                         " hex digits, vlen " + std::to_string(vlen) +
                         " needs " + std::to_string(nbits / 4));
  }
  return *MaskFromHex(digits, nbits);
}

void ExpectArgs(const std::vector<std::string_view> &tok, size_t n,
                size_t line) {
  if (tok.size() != n) {
    throw TraceError(Kind::kSyntax, line,
                     "'" + std::string(tok[0]) + "' takes " +
                         std::to_string(n - 1) + " argument(s)");
  }
}

Exec ParseExec(const std::vector<std::string_view> &tok, size_t line) {
  if (tok.size() < 2) throw TraceError(Kind::kSyntax, line, "exec needs a kind");
  const auto kind = KindFromName(Lower(tok[1]));
  if (!kind) {
    throw TraceError(Kind::kSyntax, line,
                     "unknown instruction '" + std::string(tok[1]) + "'");
  }
  Exec e;
  e.instr.kind = *kind;
  bool have_sew = false, have_vl = false, have_offset = false;
  for (size_t i = 2; i < tok.size(); ++i) {
    const std::string t = Lower(tok[i]);
    if (t == "masked") {
      e.instr.masked = true;
      continue;
    }
    const size_t eq = t.find('=');
    if (eq == std::string::npos) {
      throw TraceError(Kind::kSyntax, line, "unexpected token '" + t + "'");
    }
    const std::string key = t.substr(0, eq);
    const std::string_view value = std::string_view(tok[i]).substr(eq + 1);
    if (key == "sew") {
      const auto sew = SewFromBits(ParseUnsigned(value, line, "sew"));
      if (!sew) throw TraceError(Kind::kSyntax, line, "sew must be 8, 16 or 32");
      e.instr.sew = *sew;
      have_sew = true;
    } else if (key == "vl") {
      e.instr.vl = ParseUnsigned(value, line, "vl");
      have_vl = true;
    } else if (key == "offset") {
      e.instr.offset = ParseUnsigned(value, line, "offset");
      have_offset = true;
    } else {
      throw TraceError(Kind::kSyntax, line, "unknown exec field '" + key + "'");
    }
  }
  if (!have_sew) throw TraceError(Kind::kSyntax, line, "exec needs sew=");
  if (!have_vl) throw TraceError(Kind::kSyntax, line, "exec needs vl=");
  if (IsSlide(e.instr.kind) != have_offset) {
    throw TraceError(Kind::kSyntax, line,
                     IsSlide(e.instr.kind) ? "slides need offset="
                                           : "offset= is only valid for slides");
  }
  return e;
}

const char *RegText(RegName r) {
  switch (r) {
    case RegName::kSrc:
      return "src";
    case RegName::kIdx:
      return "idx";
    case RegName::kDest:
      return "dest";
  }
  return "?";
}

const char *MaskText(MaskName m) { return m == MaskName::kV0 ? "v0" : "mask"; }

}  // namespace

TraceError::TraceError(Kind kind, size_t line, const std::string &reason)
    : std::runtime_error("line " + std::to_string(line) + ": " +
                         std::string(TraceErrorKindName(kind)) + ": " + reason),
      kind_(kind),
      line_(line) {}

std::string_view TraceErrorKindName(TraceError::Kind kind) {
  switch (kind) {
    case Kind::kSyntax:
      return "syntax error";
    case Kind::kWidthMismatch:
      return "width mismatch";
    case Kind::kSemantic:
      return "semantic error";
  }
  return "error";
}

std::vector<TraceLine> ParseTrace(std::string_view text, unsigned vlen) {
  std::vector<TraceLine> out;
  size_t line_no = 0;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (const size_t hash = raw.find('#'); hash != std::string_view::npos) {
      raw = raw.substr(0, hash);
    }
    const auto tok = Tokenize(raw);
    if (tok.empty()) {
      if (end == text.size()) break;
      continue;
    }

    TraceLine tl;
    tl.line = line_no;
    const std::string directive = Lower(tok[0]);
    if (directive == "setcfg") {
      if (tok.size() < 2) {
        throw TraceError(Kind::kSyntax, line_no, "setcfg needs at least one field");
      }
      SetCfg cfg;
      for (size_t i = 1; i < tok.size(); ++i) {
        const std::string t = Lower(tok[i]);
        const size_t eq = t.find('=');
        if (eq == std::string::npos) {
          throw TraceError(Kind::kSyntax, line_no, "expected key=value, got '" + t + "'");
        }
        const std::string key = t.substr(0, eq);
        const unsigned v = ParseUnsigned(std::string_view(t).substr(eq + 1), line_no, key);
        if (key == "vlen") {
          if (v < 32 || (v & (v - 1)) != 0) {
            throw TraceError(Kind::kSyntax, line_no, "vlen must be a power of two >= 32");
          }
          cfg.vlen = v;
        } else if (key == "gmin") {
          cfg.gmin = v;
        } else if (key == "stages") {
          cfg.stages = v;
        } else {
          throw TraceError(Kind::kSyntax, line_no, "unknown setcfg field '" + key + "'");
        }
      }
      if (cfg.vlen) vlen = *cfg.vlen;
      tl.payload = cfg;
    } else if (directive == "setreg") {
      ExpectArgs(tok, 3, line_no);
      const std::string name = Lower(tok[1]);
      SetReg sr;
      if (name == "src") {
        sr.reg = RegName::kSrc;
      } else if (name == "idx") {
        sr.reg = RegName::kIdx;
      } else if (name == "dest") {
        sr.reg = RegName::kDest;
      } else {
        throw TraceError(Kind::kSyntax, line_no, "unknown register '" + name + "'");
      }
      sr.value = ParseRegLiteral(tok[2], vlen, line_no);
      tl.payload = sr;
    } else if (directive == "setmask") {
      ExpectArgs(tok, 3, line_no);
      const std::string name = Lower(tok[1]);
      SetMask sm;
      if (name == "v0") {
        sm.mask = MaskName::kV0;
      } else if (name == "mask") {
        sm.mask = MaskName::kMask;
      } else {
        throw TraceError(Kind::kSyntax, line_no, "unknown mask '" + name + "'");
      }
      sm.bits = ParseMaskLiteral(tok[2], vlen, line_no);
      tl.payload = sm;
    } else if (directive == "exec") {
      tl.payload = ParseExec(tok, line_no);
    } else if (directive == "expect") {
      ExpectArgs(tok, 2, line_no);
      tl.payload = Expect{ParseRegLiteral(tok[1], vlen, line_no)};
    } else {
      throw TraceError(Kind::kSyntax, line_no,
                       "unknown directive '" + std::string(tok[0]) + "'");
    }
    out.push_back(std::move(tl));
    if (end == text.size()) break;
  }
  return out;
}

std::string MaskToHex(const MaskReg &mask) {
  static constexpr char kDigits[] = "0123456789abcdef";
  const size_t ndigits = (mask.size() + 3) / 4;
  std::string s = "0x";
  for (size_t d = ndigits; d-- > 0;) {
    unsigned nibble = 0;
    for (unsigned k = 0; k < 4; ++k) {
      const size_t bit = 4 * d + k;
      if (bit < mask.size() && mask.Get(bit)) nibble |= 1u << k;
    }
    s.push_back(kDigits[nibble]);
  }
  return s;
}

std::optional<MaskReg> MaskFromHex(std::string_view hex, size_t nbits) {
  hex = StripHexPrefix(hex);
  if (hex.size() != nbits / 4) return std::nullopt;
  MaskReg mask(nbits);
  for (size_t d = 0; d < hex.size(); ++d) {
    const char ch = hex[hex.size() - 1 - d];
    int v;
    if (ch >= '0' && ch <= '9') {
      v = ch - '0';
    } else if (ch >= 'a' && ch <= 'f') {
      v = ch - 'a' + 10;
    } else if (ch >= 'A' && ch <= 'F') {
      v = ch - 'A' + 10;
    } else {
      return std::nullopt;
    }
    for (unsigned k = 0; k < 4; ++k) {
      if ((v >> k) & 1) mask.Set(4 * d + k, true);
    }
  }
  return mask;
}

std::string PrintLine(const TraceLine &line) {
  std::ostringstream os;
  std::visit(
      [&](const auto &p) {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, SetCfg>) {
          os << "setcfg";
          if (p.vlen) os << " vlen=" << *p.vlen;
          if (p.gmin) os << " gmin=" << *p.gmin;
          if (p.stages) os << " stages=" << *p.stages;
        } else if constexpr (std::is_same_v<T, SetReg>) {
          os << "setreg " << RegText(p.reg) << ' ' << p.value.ToHex();
        } else if constexpr (std::is_same_v<T, SetMask>) {
          os << "setmask " << MaskText(p.mask) << ' ' << MaskToHex(p.bits);
        } else if constexpr (std::is_same_v<T, Exec>) {
          os << "exec " << ToString(p.instr);
        } else {
          os << "expect " << p.value.ToHex();
        }
      },
      line.payload);
  return os.str();
}

std::string PrintTrace(const std::vector<TraceLine> &lines) {
  std::string out;
  for (const auto &l : lines) {
    out += PrintLine(l);
    out += '\n';
  }
  return out;
}

std::optional<UnitChoice> UnitChoiceFromName(std::string_view name) {
  if (name == "unified") return UnitChoice::kUnified;
  if (name == "baseline") return UnitChoice::kBaseline;
  if (name == "both") return UnitChoice::kBoth;
  return std::nullopt;
}

TraceReport RunTrace(const std::vector<TraceLine> &lines,
                     const TraceOptions &options) {
  UnitConfig cfg = options.unified;
  const bool use_unified = options.units != UnitChoice::kBaseline;
  const bool use_baseline = options.units != UnitChoice::kUnified;

  std::optional<VectorReg> src, idx, dest;
  std::optional<MaskReg> v0, mask;
  TraceReport report;

  for (const TraceLine &tl : lines) {
    if (const auto *c = std::get_if<SetCfg>(&tl.payload)) {
      if (c->vlen && *c->vlen != cfg.vlen) {
        src.reset();
        idx.reset();
        dest.reset();
        v0.reset();
        mask.reset();
      }
      if (c->vlen) cfg.vlen = *c->vlen;
      if (c->gmin) cfg.gmin = *c->gmin;
      if (c->stages) cfg.pipeline_stages = *c->stages;
      try {
        ValidateConfig(cfg);
      } catch (const PermError &e) {
        throw TraceError(Kind::kSemantic, tl.line, e.what());
      }
    } else if (const auto *r = std::get_if<SetReg>(&tl.payload)) {
      if (r->value.vlen() != cfg.vlen) {
        throw TraceError(Kind::kWidthMismatch, tl.line,
                         "register width does not match vlen");
      }
      switch (r->reg) {
        case RegName::kSrc:
          src = r->value;
          break;
        case RegName::kIdx:
          idx = r->value;
          break;
        case RegName::kDest:
          dest = r->value;
          break;
      }
    } else if (const auto *m = std::get_if<SetMask>(&tl.payload)) {
      (m->mask == MaskName::kV0 ? v0 : mask) = m->bits;
    } else if (const auto *e = std::get_if<Exec>(&tl.payload)) {
      const PermInstr &instr = e->instr;
      auto missing = [&](const char *what) {
        throw TraceError(Kind::kSemantic, tl.line,
                         std::string("exec before setting ") + what);
      };
      if (!src) missing("src");
      if (!dest) missing("dest");
      if (instr.kind == PermKind::kGather && !idx) missing("idx");
      if (instr.kind == PermKind::kCompress && !mask) missing("mask");
      if (instr.masked && !v0) missing("v0");
      if (use_unified && !SupportsSew(cfg, instr.sew)) {
        throw TraceError(Kind::kSemantic, tl.line,
                         "sew " + std::to_string(SewBits(instr.sew)) +
                             " is not supported with gmin=" +
                             std::to_string(cfg.gmin));
      }
      try {
        ValidateInstr(instr, cfg.vlen);
      } catch (const PermError &err) {
        throw TraceError(Kind::kSemantic, tl.line, err.what());
      }

      const size_t nbits = cfg.vlen / 8;
      Operands ops{*dest, *src, idx.value_or(VectorReg(cfg.vlen)),
                   v0.value_or(MaskReg(nbits)), mask.value_or(MaskReg(nbits))};
      ExecRecord rec{tl.line, instr, std::nullopt, std::nullopt};
      std::optional<VectorReg> result;
      if (use_unified) {
        const ExecResult u = UnifiedUnit(cfg).Execute(instr, ops);
        rec.unified_latency = u.latency_cycles;
        result = u.value;
      }
      if (use_baseline) {
        const ExecResult b =
            BaselineUnit({cfg.vlen, options.compress_overhead_cycles})
                .Execute(instr, ops);
        rec.baseline_latency = b.latency_cycles;
        if (result && *result != b.value) {
          report.failures.push_back("line " + std::to_string(tl.line) +
                                    ": unified and baseline disagree");
        }
        if (!result) result = b.value;
      }
      dest = *result;
      report.execs.push_back(rec);
    } else if (const auto *x = std::get_if<Expect>(&tl.payload)) {
      ++report.expects;
      if (!dest) {
        throw TraceError(Kind::kSemantic, tl.line, "expect before dest is set");
      }
      if (x->value.vlen() != cfg.vlen) {
        throw TraceError(Kind::kWidthMismatch, tl.line,
                         "expect width does not match vlen");
      }
      if (x->value != *dest) {
        report.failures.push_back("line " + std::to_string(tl.line) +
                                  ": expect mismatch: wanted " +
                                  x->value.ToHex() + " got " + dest->ToHex());
      }
    }
  }
  return report;
}

std::string FormatTraceReport(const TraceReport &report, bool porcelain) {
  std::ostringstream os;
  if (porcelain) {
    for (size_t i = 0; i < report.execs.size(); ++i) {
      const ExecRecord &r = report.execs[i];
      os << "exec." << i << ".line=" << r.line << '\n';
      os << "exec." << i << ".instr=" << ToString(r.instr) << '\n';
      if (r.unified_latency) {
        os << "exec." << i << ".unified_latency=" << *r.unified_latency << '\n';
      }
      if (r.baseline_latency) {
        os << "exec." << i << ".baseline_latency=" << *r.baseline_latency << '\n';
      }
    }
    os << "execs=" << report.execs.size() << '\n';
    os << "expects=" << report.expects << '\n';
    os << "failures=" << report.failures.size() << '\n';
    os << "status=" << (report.ok() ? "ok" : "fail") << '\n';
    return os.str();
  }
  for (const ExecRecord &r : report.execs) {
    os << "line " << r.line << ": " << ToString(r.instr);
    if (r.unified_latency) os << "  unified=" << *r.unified_latency << "c";
    if (r.baseline_latency) os << "  baseline=" << *r.baseline_latency << "c";
    os << '\n';
  }
  for (const auto &f : report.failures) os << "FAIL " << f << '\n';
  os << report.execs.size() << " exec, " << report.expects << " expect, "
     << report.failures.size() << " failure(s)\n";
  return os.str();
}

std::string ReportStructure(const std::vector<UnitConfig> &configs,
                            bool porcelain) {
  std::ostringstream os;
  for (const UnitConfig &cfg : configs) {
    const StructureReport r = DescribeStructure(cfg);
    const StructureReport ref = DescribeStructure({cfg.vlen, 1, 1});
    const double ratio =
        static_cast<double>(r.select_bits) / static_cast<double>(ref.select_bits);
    const std::string p = "structure.vlen" + std::to_string(r.vlen) + ".gmin" +
                          std::to_string(r.gmin) + ".";
    if (porcelain) {
      os << p << "granules=" << r.granules << '\n';
      os << p << "select_bits=" << r.select_bits << '\n';
      os << p << "sad_instances=" << r.sad_instances << '\n';
      os << p << "counter_cells=" << r.counter_cells << '\n';
      os << p << "csa_cells=" << r.csa_cells << '\n';
      os << p << "field_width=" << r.field_width << '\n';
      os << p << "select_mux_bits=" << r.select_mux_bits << '\n';
      os << p << "select_ratio=" << ratio << '\n';
    } else {
      os << "vlen=" << r.vlen << " gmin=" << r.gmin << ": " << r.granules
         << " granules, " << r.granules << "x" << r.granules << " = "
         << r.select_bits << " select bits, " << r.sad_instances << " SADs, "
         << r.counter_cells << " counter cells, " << r.csa_cells
         << " CSAs, field width " << r.field_width << ", ratio vs gmin=1 "
         << ratio << '\n';
    }
  }
  return os.str();
}

}  // namespace vperm
