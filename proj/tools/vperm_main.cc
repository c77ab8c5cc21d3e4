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

// Command-line front end: trace replay, differential campaigns, latency
// audits and structural reports.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "vperm/harness.h"
#include "vperm/trace.h"
#include "vperm/unified_unit.h"

namespace {

constexpr int kExitFailure = 1;
constexpr int kExitError = 2;

int RunTraceFile(const std::string &path, const vperm::TraceOptions &options,
                 bool porcelain) {
  std::ifstream in(path);
  if (!in) {
    std::cerr << "vperm: cannot open " << path << '\n';
    return kExitError;
  }
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    const auto lines = vperm::ParseTrace(buf.str(), options.unified.vlen);
    const vperm::TraceReport report = vperm::RunTrace(lines, options);
    std::cout << vperm::FormatTraceReport(report, porcelain);
    return report.ok() ? 0 : kExitFailure;
  } catch (const vperm::TraceError &e) {
    std::cerr << path << ":" << e.what() << '\n';
    if (porcelain) {
      std::cout << "error.line=" << e.line() << '\n'
                << "error.kind=" << vperm::TraceErrorKindName(e.kind()) << '\n'
                << "status=error\n";
    }
    return kExitError;
  }
}

int RunStructure(unsigned vlen, bool porcelain) {
  std::vector<vperm::UnitConfig> configs;
  for (unsigned g : {1u, 2u, 4u}) configs.push_back({vlen, g, 1});
  std::cout << vperm::ReportStructure(configs, porcelain);
  const auto s1 = vperm::DescribeStructure(configs[0]).select_bits;
  const auto s2 = vperm::DescribeStructure(configs[1]).select_bits;
  const auto s4 = vperm::DescribeStructure(configs[2]).select_bits;
  const bool quarter = s2 * 4 == s1;
  const bool sixteenth = s4 * 16 == s1;
  std::cout << "check.gmin2_quarter=" << (quarter ? "pass" : "fail") << '\n'
            << "check.gmin4_sixteenth=" << (sixteenth ? "pass" : "fail")
            << '\n';
  return quarter && sixteenth ? 0 : kExitFailure;
}

}  // namespace

int main(int argc, char **argv) {
  CLI::App app{"Unified RVV permutation unit simulator"};

  unsigned vlen = 256;
  unsigned gmin = 1;
  unsigned stages = 1;
  unsigned overhead = 1;
  std::string unit = "unified";
  std::vector<std::string> traces;
  size_t campaign = 0;
  uint64_t seed = 1;
  bool structure = false;
  bool porcelain = false;
  bool exhaustive = false;
  bool audit = false;
  bool inject_fault = false;

  app.add_option("--vlen", vlen, "Vector register width in bits")
      ->capture_default_str();
  app.add_option("--gmin", gmin, "Minimum movable element width in bytes")
      ->check(CLI::IsMember({1, 2, 4}))
      ->capture_default_str();
  app.add_option("--stages", stages, "Pipeline stages of the unified unit")
      ->check(CLI::IsMember({1, 2}))
      ->capture_default_str();
  app.add_option("--compress-overhead", overhead,
                 "Baseline compress setup cycles")
      ->capture_default_str();
  app.add_option("--unit", unit, "Unit to run")
      ->check(CLI::IsMember({"unified", "baseline", "both"}))
      ->capture_default_str();
  app.add_option("--trace", traces, "Trace file(s) to replay");
  app.add_option("--campaign", campaign, "Run N random differential cases");
  app.add_option("--seed", seed, "Campaign seed")->capture_default_str();
  app.add_flag("--structure", structure, "Print the structural report");
  app.add_flag("--exhaustive", exhaustive, "Run the exhaustive small sweeps");
  app.add_flag("--audit", audit, "Run the latency audit over the campaign");
  app.add_flag("--inject-fault", inject_fault,
               "Cross two select wires of the unified crossbar");
  app.add_flag("--porcelain", porcelain, "Stable key=value output");

  CLI11_PARSE(app, argc, argv);

  if (traces.empty() && campaign == 0 && !structure && !exhaustive) {
    std::cerr << app.help();
    return kExitError;
  }

  int status = 0;
  auto merge = [&](int s) { status = std::max(status, s); };
  try {
    if (structure) merge(RunStructure(vlen, porcelain));

    if (!traces.empty()) {
      vperm::TraceOptions options;
      options.units = *vperm::UnitChoiceFromName(unit);
      options.unified = {vlen, gmin, stages};
      options.compress_overhead_cycles = overhead;
      for (const auto &path : traces) {
        if (traces.size() > 1 && !porcelain) std::cout << "== " << path << '\n';
        merge(RunTraceFile(path, options, porcelain));
      }
    }

    if (campaign > 0) {
      vperm::CampaignConfig cfg;
      cfg.seed = seed;
      cfg.cases = campaign;
      cfg.vlen = vlen;
      cfg.gmin = gmin;
      cfg.pipeline_stages = stages;
      cfg.compress_overhead_cycles = overhead;
      cfg.run_unified = unit != "baseline";
      cfg.run_baseline = unit != "unified" || audit;
      cfg.sew_set.clear();
      for (auto sew : {vperm::Sew::kE8, vperm::Sew::kE16, vperm::Sew::kE32}) {
        if (vperm::SewBytes(sew) >= gmin) cfg.sew_set.push_back(sew);
      }
      if (inject_fault) cfg.fault = vperm::CrossbarFault{};
      if (audit) {
        const auto result = vperm::RunLatencyAudit(cfg);
        std::cout << vperm::FormatAudit(result);
        merge(result.campaign.failed == 0 && result.ok() ? 0 : kExitFailure);
      } else {
        const auto report = vperm::RunDifferential(cfg);
        std::cout << vperm::FormatReport(report);
        merge(report.failed == 0 ? 0 : kExitFailure);
      }
    }

    if (exhaustive) {
      const auto report = vperm::RunExhaustiveSmall();
      std::cout << vperm::FormatReport(report);
      merge(report.failed == 0 ? 0 : kExitFailure);
    }
  } catch (const std::exception &e) {
    std::cerr << "vperm: " << e.what() << '\n';
    return kExitError;
  }
  return status;
}
