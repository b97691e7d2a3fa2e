#pragma once

// Batch pipeline wiring ingestion -> baselines -> rankings -> sensitivity
// into one reproducible run, plus the generator and table subcommands used
// by the CLI. Identical inputs and configuration produce byte-identical
// outputs (no timestamps are embedded anywhere).

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "citerank/report.hpp"
#include "citerank/synth.hpp"

namespace citerank {

inline constexpr std::string_view kToolName = "citerank";
inline constexpr std::string_view kToolVersion = "0.1.0";

struct RunConfig {
    // input: either both file paths, or a generator configuration
    std::optional<std::filesystem::path> publications_path;
    std::optional<std::filesystem::path> researchers_path;
    std::optional<SynthConfig> synth;
    char input_delimiter = ',';
    std::optional<YearRange> window;  // derived from the data when absent
    std::string census_date;

    Scenario benchmark = kDefaultBenchmark;
    std::vector<Scenario> scenarios;  // empty selects all five
    double sds_threshold = 0.5;

    std::filesystem::path out_dir = ".";
    char output_delimiter = ',';
    bool dump_impacts = false;  // also write impacts.csv (pub_id,scenario,value)
};

struct AnalysisResult {
    Corpus filtered;
    std::vector<std::string> excluded_sds;
    BaselineTable baselines;
    RankingTable rankings;
    SensitivityReport report;
};

// Baselines are computed on the loaded corpus (the reference distribution is
// a property of the input); the coverage filter then narrows the ranked
// population. The benchmark must be part of the scenario set.
AnalysisResult run_analysis(const Corpus& loaded, Scenario benchmark,
                            std::span<const Scenario> scenarios, double sds_threshold);

// FNV-1a 64 over the resolved configuration, hex-encoded; embedded in the
// report so a run can be matched to its exact settings.
std::string config_digest(const RunConfig&);

// Exit status 0 on success. On failure: one-line error on `err`, partial
// output files removed, nonzero status.
int cmd_analyze(const RunConfig&, std::ostream& out, std::ostream& err);

int cmd_synth(const SynthConfig&, const std::filesystem::path& out_dir, char delimiter,
              std::ostream& out, std::ostream& err);

int cmd_tables(const std::filesystem::path& report_path, const std::filesystem::path& out_dir,
               char delimiter, std::ostream& out, std::ostream& err);

} // namespace citerank
