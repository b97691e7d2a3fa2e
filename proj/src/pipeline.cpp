#include "citerank/pipeline.hpp"

#include <algorithm>
#include <fstream>
#include <ostream>
#include <sstream>

#include "citerank/csv.hpp"
#include "citerank/errors.hpp"

namespace citerank {

namespace {

std::vector<Scenario> resolve_scenarios(const std::vector<Scenario>& requested,
                                        Scenario benchmark) {
    std::vector<Scenario> scenarios;
    if (requested.empty()) {
        scenarios.assign(kAllScenarios.begin(), kAllScenarios.end());
    } else {
        for (Scenario s : requested) {
            if (std::find(scenarios.begin(), scenarios.end(), s) == scenarios.end()) {
                scenarios.push_back(s);
            }
        }
    }
    if (std::find(scenarios.begin(), scenarios.end(), benchmark) == scenarios.end()) {
        throw ConfigError("benchmark scenario '" + std::string(scenario_tag(benchmark)) +
                          "' is not part of the scenario set");
    }
    std::sort(scenarios.begin(), scenarios.end(),
              [](Scenario a, Scenario b) { return scenario_order(a) < scenario_order(b); });
    return scenarios;
}

std::uint64_t fnv1a(std::string_view bytes) {
    std::uint64_t hash = 1469598103934665603ULL;
    for (unsigned char c : bytes) {
        hash ^= c;
        hash *= 1099511628211ULL;
    }
    return hash;
}

std::string synth_signature(const SynthConfig& c) {
    std::ostringstream s;
    s << c.seed << '/' << c.n_sds << '/' << c.researchers_per_sds_min << ':'
      << c.researchers_per_sds_max << '/' << c.pubs_per_researcher_mean << '/'
      << c.inactive_fraction << '/' << c.uncited_fraction << '/' << c.uncited_spread << '/'
      << c.tail_exponent_min << ':' << c.tail_exponent_max << '/' << c.citation_cutoff << '/'
      << c.categories_per_sds << '/' << c.category_pool << '/' << c.category_scale_min << ':'
      << c.category_scale_max << '/' << c.multi_category_prob << '/' << c.cross_field_prob << '/'
      << c.researcher_sigma << '/' << c.coauthors_mean << '/' << c.year_first << ':'
      << c.year_last;
    return s.str();
}

} // namespace

std::string config_digest(const RunConfig& config) {
    std::ostringstream s;
    s << "pubs=" << (config.publications_path ? config.publications_path->string() : "-")
      << ";researchers=" << (config.researchers_path ? config.researchers_path->string() : "-")
      << ";synth=" << (config.synth ? synth_signature(*config.synth) : "-")
      << ";delim=" << config.input_delimiter << ";window=";
    if (config.window) {
        s << config.window->first << ':' << config.window->last;
    } else {
        s << "auto";
    }
    s << ";census=" << config.census_date << ";benchmark=" << scenario_tag(config.benchmark)
      << ";scenarios=";
    const auto scenarios = resolve_scenarios(config.scenarios, config.benchmark);
    for (Scenario sc : scenarios) s << scenario_tag(sc) << ',';
    s << ";threshold=" << config.sds_threshold << ";out_delim=" << config.output_delimiter;

    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx",
                  static_cast<unsigned long long>(fnv1a(s.str())));
    return buf;
}

AnalysisResult run_analysis(const Corpus& loaded, Scenario benchmark,
                            std::span<const Scenario> scenarios, double sds_threshold) {
    std::vector<Scenario> requested(scenarios.begin(), scenarios.end());
    const auto resolved = resolve_scenarios(requested, benchmark);

    AnalysisResult result;
    result.baselines = compute_baselines(loaded);
    FilterResult filtered = filter_sds(loaded, sds_threshold);
    result.filtered = std::move(filtered.corpus);
    result.excluded_sds = std::move(filtered.excluded_sds);
    result.rankings = rank_all(result.filtered, result.baselines, resolved);
    result.report = build_sensitivity(result.filtered, result.rankings, benchmark);

    result.report.meta.tool = kToolName;
    result.report.meta.version = kToolVersion;
    result.report.meta.sds_threshold = sds_threshold;
    result.report.meta.excluded_sds = result.excluded_sds;
    return result;
}

namespace {

class OutputSet {
public:
    explicit OutputSet(std::filesystem::path dir) : dir_(std::move(dir)) {
        std::filesystem::create_directories(dir_);
    }

    std::ofstream create(const std::string& name) {
        const auto path = dir_ / name;
        std::ofstream out(path);
        if (!out) throw Error("cannot create file: " + path.string());
        written_.push_back(path);
        return out;
    }

    const std::vector<std::filesystem::path>& written() const noexcept { return written_; }

    // removes everything written so a failed run leaves no partial outputs
    void discard() noexcept {
        for (const auto& path : written_) {
            std::error_code ec;
            std::filesystem::remove(path, ec);
        }
        written_.clear();
    }

private:
    std::filesystem::path dir_;
    std::vector<std::filesystem::path> written_;
};

void write_impacts(const Corpus& corpus, const BaselineTable& baselines,
                   const std::vector<Scenario>& scenarios, std::ostream& out, char delimiter) {
    const char d = delimiter;
    out << "pub_id" << d << "scenario" << d << "value" << '\n';
    for (const auto& pub : corpus.publications) {
        for (Scenario scenario : scenarios) {
            out << pub.pub_id << d << scenario_tag(scenario) << d
                << format_fixed(impact_of(pub, baselines, scenario), 6) << '\n';
        }
    }
}

} // namespace

int cmd_analyze(const RunConfig& config, std::ostream& out, std::ostream& err) {
    std::optional<OutputSet> outputs;
    try {
        Corpus loaded;
        if (config.publications_path || config.researchers_path) {
            if (!config.publications_path || !config.researchers_path) {
                throw ConfigError("analyze needs both --pubs and --researchers (or --seed)");
            }
            if (config.synth) {
                throw ConfigError("give either file inputs or --seed, not both");
            }
            LoadOptions options;
            options.delimiter = config.input_delimiter;
            options.window = config.window;
            options.census_date = config.census_date;
            loaded = load_corpus_files(*config.publications_path, *config.researchers_path, options);
        } else if (config.synth) {
            loaded = generate_corpus(*config.synth);
            if (!config.census_date.empty()) loaded.census_date = config.census_date;
        } else {
            throw ConfigError("no input: give --pubs/--researchers or --seed");
        }

        const auto scenarios = resolve_scenarios(config.scenarios, config.benchmark);
        AnalysisResult result =
            run_analysis(loaded, config.benchmark, scenarios, config.sds_threshold);

        result.report.meta.config_digest = config_digest(config);
        if (config.synth) {
            result.report.meta.seed = config.synth->seed;
            result.report.meta.rng_algorithm = std::string(kRngAlgorithm);
        }

        outputs.emplace(config.out_dir);
        {
            auto file = outputs->create("baselines.csv");
            write_baselines(result.baselines, file, config.output_delimiter);
            if (!file.flush()) throw Error("write failure: baselines.csv");
        }
        {
            auto file = outputs->create("rankings.csv");
            write_rankings(result.rankings, file, config.output_delimiter);
            if (!file.flush()) throw Error("write failure: rankings.csv");
        }
        if (config.dump_impacts) {
            auto file = outputs->create("impacts.csv");
            write_impacts(result.filtered, result.baselines, scenarios, file,
                          config.output_delimiter);
            if (!file.flush()) throw Error("write failure: impacts.csv");
        }
        {
            auto file = outputs->create("report.json");
            write_report_json(result.report, file);
            if (!file.flush()) throw Error("write failure: report.json");
        }

        out << "corpus: " << result.report.meta.n_publications << " publications, "
            << result.report.meta.n_researchers << " researchers, " << result.report.meta.n_sds
            << " SDSs retained (" << result.excluded_sds.size() << " excluded)\n";
        out << "quartile shift vs " << scenario_tag(config.benchmark) << " [total]:";
        for (const auto& row : result.report.quartile_changes) {
            if (!row.is_total) continue;
            out << ' ' << scenario_tag(row.scenario) << '=';
            if (row.n == 0) {
                out << "n/a";
            } else {
                out << format_fixed(row.pct, 1) << '%';
            }
        }
        out << '\n';
        for (const auto& path : outputs->written()) {
            out << "wrote " << path.string() << '\n';
        }
        return 0;
    } catch (const std::exception& e) {
        if (outputs) outputs->discard();
        err << kToolName << ": error: " << e.what() << '\n';
        return 1;
    }
}

int cmd_synth(const SynthConfig& config, const std::filesystem::path& out_dir, char delimiter,
              std::ostream& out, std::ostream& err) {
    std::optional<OutputSet> outputs;
    try {
        const Corpus corpus = generate_corpus(config);
        outputs.emplace(out_dir);
        {
            auto pubs = outputs->create("publications.csv");
            auto res = outputs->create("researchers.csv");
            save_corpus(corpus, pubs, res, delimiter);
            if (!pubs.flush() || !res.flush()) throw Error("write failure while saving corpus");
        }
        out << "seed " << config.seed << ": " << corpus.publications.size() << " publications, "
            << corpus.researchers.size() << " researchers\n";
        for (const auto& path : outputs->written()) {
            out << "wrote " << path.string() << '\n';
        }
        return 0;
    } catch (const std::exception& e) {
        if (outputs) outputs->discard();
        err << kToolName << ": error: " << e.what() << '\n';
        return 1;
    }
}

int cmd_tables(const std::filesystem::path& report_path, const std::filesystem::path& out_dir,
               char delimiter, std::ostream& out, std::ostream& err) {
    try {
        std::ifstream in(report_path);
        if (!in) throw Error("cannot open report: " + report_path.string());
        const SensitivityReport report = read_report_json(in, report_path.string());
        const auto written = render_tables(report, out_dir, delimiter);
        for (const auto& path : written) {
            out << "wrote " << path.string() << '\n';
        }
        return 0;
    } catch (const std::exception& e) {
        err << kToolName << ": error: " << e.what() << '\n';
        return 1;
    }
}

} // namespace citerank
