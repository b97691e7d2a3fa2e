// citerank command line: `analyze` runs the full pipeline on a corpus (from
// files or the built-in generator), `synth` writes a generated corpus to
// disk, `tables` renders the summary tables from a report.

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "citerank/errors.hpp"
#include "citerank/pipeline.hpp"

namespace {

using citerank::Scenario;

std::optional<std::vector<Scenario>> parse_scenarios(const std::string& list, std::string& bad) {
    std::vector<Scenario> out;
    std::string token;
    for (std::size_t i = 0; i <= list.size(); ++i) {
        if (i == list.size() || list[i] == ',') {
            if (!token.empty()) {
                auto s = citerank::scenario_from_tag(token);
                if (!s) {
                    bad = token;
                    return std::nullopt;
                }
                out.push_back(*s);
                token.clear();
            }
        } else {
            token += list[i];
        }
    }
    return out;
}

bool parse_range(const std::string& text, long long& lo, long long& hi) {
    const auto colon = text.find(':');
    try {
        if (colon == std::string::npos) {
            lo = hi = std::stoll(text);
        } else {
            lo = std::stoll(text.substr(0, colon));
            hi = std::stoll(text.substr(colon + 1));
        }
    } catch (const std::exception&) {
        return false;
    }
    return true;
}

bool parse_drange(const std::string& text, double& lo, double& hi) {
    const auto colon = text.find(':');
    try {
        if (colon == std::string::npos) {
            lo = hi = std::stod(text);
        } else {
            lo = std::stod(text.substr(0, colon));
            hi = std::stod(text.substr(colon + 1));
        }
    } catch (const std::exception&) {
        return false;
    }
    return true;
}

char delimiter_for(const std::string& format) {
    return format == "tsv" ? '\t' : ',';
}

void add_synth_options(CLI::App* cmd, citerank::SynthConfig& synth, std::string& researchers_range,
                       std::string& tail_range) {
    cmd->add_option("--sds", synth.n_sds, "number of SDS field codes");
    cmd->add_option("--researchers-per-sds", researchers_range,
                    "researchers per SDS, MIN:MAX or a single count");
    cmd->add_option("--pubs-mean", synth.pubs_per_researcher_mean,
                    "mean publications per active researcher");
    cmd->add_option("--inactive", synth.inactive_fraction, "fraction of researchers with no output");
    cmd->add_option("--uncited", synth.uncited_fraction, "baseline probability of zero citations");
    cmd->add_option("--uncited-spread", synth.uncited_spread,
                    "per-category jitter of the uncited probability");
    cmd->add_option("--tail", tail_range, "power-law tail exponent per category, MIN:MAX");
    cmd->add_option("--multi-cat-prob", synth.multi_category_prob,
                    "probability a publication carries two categories");
    cmd->add_option("--cross-field-prob", synth.cross_field_prob,
                    "probability of out-of-field categories and co-authors");
}

void apply_synth_ranges(const std::string& researchers_range, const std::string& tail_range,
                        const std::string& years_range, citerank::SynthConfig& synth) {
    long long lo = 0, hi = 0;
    if (!researchers_range.empty()) {
        if (!parse_range(researchers_range, lo, hi) || lo < 0) {
            throw citerank::ConfigError("bad --researchers-per-sds range: " + researchers_range);
        }
        synth.researchers_per_sds_min = static_cast<std::size_t>(lo);
        synth.researchers_per_sds_max = static_cast<std::size_t>(hi);
    }
    double dlo = 0, dhi = 0;
    if (!tail_range.empty()) {
        if (!parse_drange(tail_range, dlo, dhi)) {
            throw citerank::ConfigError("bad --tail range: " + tail_range);
        }
        synth.tail_exponent_min = dlo;
        synth.tail_exponent_max = dhi;
    }
    if (!years_range.empty()) {
        if (!parse_range(years_range, lo, hi)) {
            throw citerank::ConfigError("bad --years range: " + years_range);
        }
        synth.year_first = static_cast<int>(lo);
        synth.year_last = static_cast<int>(hi);
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"field-standardized citation impact and ranking sensitivity toolkit"};
    app.require_subcommand(1);
    app.set_config("--config", "", "read options from an INI file (flags win on conflict)");
    app.failure_message(CLI::FailureMessage::simple);

    // ---- analyze ----
    auto* analyze = app.add_subcommand("analyze", "run the full pipeline and write reports");
    std::string pubs_path, researchers_path, out_dir = "out", benchmark_tag = "a0";
    std::string scenarios_list, format = "csv", census_date, years_range;
    double sds_threshold = 0.5;
    std::string input_format = "csv";
    bool dump_impacts = false;
    citerank::SynthConfig analyze_synth;
    std::string synth_researchers, synth_tail;

    analyze->add_option("--pubs", pubs_path, "publications file");
    analyze->add_option("--researchers", researchers_path, "researchers file");
    analyze->add_option("--out", out_dir, "output directory");
    analyze->add_option("--benchmark", benchmark_tag, "benchmark scenario tag (default a0)");
    analyze->add_option("--scenarios", scenarios_list,
                        "comma list from cit,perc,a,m0,a0 (default all)");
    analyze->add_option("--sds-threshold", sds_threshold,
                        "minimum publishing share for an SDS to be retained");
    analyze->add_option("--format", format, "output format: csv or tsv")
        ->check(CLI::IsMember({"csv", "tsv"}));
    analyze->add_option("--input-format", input_format, "input format: csv or tsv")
        ->check(CLI::IsMember({"csv", "tsv"}));
    analyze->add_option("--years", years_range, "observation window FIRST:LAST (default: from data)");
    analyze->add_option("--census-date", census_date, "informational census date string");
    analyze->add_flag("--dump-impacts", dump_impacts, "also write per-publication impact values");
    auto* seed_option =
        analyze->add_option("--seed", analyze_synth.seed, "generate the input corpus with this seed");
    add_synth_options(analyze, analyze_synth, synth_researchers, synth_tail);

    // ---- synth ----
    auto* synth_cmd = app.add_subcommand("synth", "generate a corpus and write it to disk");
    citerank::SynthConfig synth;
    std::string synth_out = "out", synth_format = "csv", synth_cmd_years;
    std::string synth_cmd_researchers, synth_cmd_tail;
    synth_cmd->add_option("--seed", synth.seed, "generator seed");
    synth_cmd->add_option("--out", synth_out, "output directory");
    synth_cmd->add_option("--format", synth_format, "output format: csv or tsv")
        ->check(CLI::IsMember({"csv", "tsv"}));
    synth_cmd->add_option("--years", synth_cmd_years, "observation window, FIRST:LAST");
    add_synth_options(synth_cmd, synth, synth_cmd_researchers, synth_cmd_tail);

    // ---- tables ----
    auto* tables = app.add_subcommand("tables", "render summary tables from a report");
    std::string report_path, tables_out = "out", tables_format = "csv";
    tables->add_option("--report", report_path, "report.json produced by analyze")->required();
    tables->add_option("--out", tables_out, "output directory");
    tables->add_option("--format", tables_format, "output format: csv or tsv")
        ->check(CLI::IsMember({"csv", "tsv"}));

    CLI11_PARSE(app, argc, argv);

    try {
        if (analyze->parsed()) {
            citerank::RunConfig config;
            if (!pubs_path.empty()) config.publications_path = pubs_path;
            if (!researchers_path.empty()) config.researchers_path = researchers_path;
            if (seed_option->count() > 0) {
                apply_synth_ranges(synth_researchers, synth_tail, years_range, analyze_synth);
                config.synth = analyze_synth;
            }
            config.input_delimiter = delimiter_for(input_format);
            if (!years_range.empty()) {
                long long lo = 0, hi = 0;
                if (!parse_range(years_range, lo, hi)) {
                    throw citerank::ConfigError("bad --years range: " + years_range);
                }
                config.window = citerank::YearRange{static_cast<int>(lo), static_cast<int>(hi)};
            }
            config.census_date = census_date;
            auto benchmark = citerank::scenario_from_tag(benchmark_tag);
            if (!benchmark) {
                throw citerank::ConfigError("unknown benchmark scenario '" + benchmark_tag + "'");
            }
            config.benchmark = *benchmark;
            if (!scenarios_list.empty()) {
                std::string bad;
                auto scenarios = parse_scenarios(scenarios_list, bad);
                if (!scenarios) {
                    throw citerank::ConfigError("unknown scenario tag '" + bad + "'");
                }
                config.scenarios = *scenarios;
            }
            config.sds_threshold = sds_threshold;
            config.out_dir = out_dir;
            config.output_delimiter = delimiter_for(format);
            config.dump_impacts = dump_impacts;
            return citerank::cmd_analyze(config, std::cout, std::cerr);
        }
        if (synth_cmd->parsed()) {
            apply_synth_ranges(synth_cmd_researchers, synth_cmd_tail, synth_cmd_years, synth);
            return citerank::cmd_synth(synth, synth_out, delimiter_for(synth_format), std::cout,
                                       std::cerr);
        }
        if (tables->parsed()) {
            return citerank::cmd_tables(report_path, tables_out, delimiter_for(tables_format),
                                        std::cout, std::cerr);
        }
    } catch (const std::exception& e) {
        std::cerr << citerank::kToolName << ": error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
