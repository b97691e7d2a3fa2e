#include "citerank/report.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <ostream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "citerank/csv.hpp"
#include "citerank/errors.hpp"

namespace citerank {

namespace {

using nlohmann::json;

json scenario_list(const std::vector<Scenario>& scenarios) {
    json out = json::array();
    for (Scenario s : scenarios) out.push_back(std::string(scenario_tag(s)));
    return out;
}

Scenario scenario_from_json(const json& j) {
    const auto tag = j.get<std::string>();
    if (auto s = scenario_from_tag(tag)) return *s;
    throw Error("report: unknown scenario tag '" + tag + "'");
}

json shift_rows_to_json(const std::vector<ShiftRow>& rows) {
    json out = json::array();
    for (const auto& row : rows) {
        json j{{"scenario", std::string(scenario_tag(row.scenario))},
               {"n", row.n},
               {"moved", row.moved}};
        if (row.is_total) {
            j["total"] = true;
        } else {
            j["uda"] = row.uda;
        }
        if (row.n > 0) {
            j["pct"] = row.pct;
        } else {
            j["pct"] = nullptr;  // flagged: empty class
        }
        out.push_back(std::move(j));
    }
    return out;
}

std::vector<ShiftRow> shift_rows_from_json(const json& arr) {
    std::vector<ShiftRow> rows;
    for (const auto& j : arr) {
        ShiftRow row;
        row.scenario = scenario_from_json(j.at("scenario"));
        row.n = j.at("n").get<std::size_t>();
        row.moved = j.at("moved").get<std::size_t>();
        row.is_total = j.value("total", false);
        if (!row.is_total) row.uda = j.at("uda").get<std::string>();
        row.pct = row.n ? 100.0 * static_cast<double>(row.moved) / static_cast<double>(row.n) : 0.0;
        rows.push_back(std::move(row));
    }
    return rows;
}

} // namespace

void write_report_json(const SensitivityReport& report, std::ostream& out) {
    const RunMetadata& meta = report.meta;
    json j;
    j["format_version"] = kReportFormatVersion;

    json m;
    m["tool"] = meta.tool;
    m["version"] = meta.version;
    m["benchmark"] = std::string(scenario_tag(meta.benchmark));
    m["scenarios"] = scenario_list(meta.scenarios);
    m["sds_threshold"] = meta.sds_threshold;
    if (meta.seed) {
        m["seed"] = *meta.seed;
        m["rng_algorithm"] = meta.rng_algorithm;
    }
    m["census_date"] = meta.census_date;
    m["config_digest"] = meta.config_digest;
    m["window"] = json::array({meta.window.first, meta.window.last});
    m["excluded_sds"] = meta.excluded_sds;
    m["n_publications"] = meta.n_publications;
    m["n_researchers"] = meta.n_researchers;
    m["n_sds"] = meta.n_sds;
    m["n_uda"] = meta.n_uda;
    m["tie_rule"] = meta.tie_rule;
    m["spearman_ties"] = meta.spearman_ties;
    m["nil_ss"] = meta.nil_ss;
    j["meta"] = std::move(m);

    json correlations = json::array();
    for (const auto& corr : report.correlations) {
        json c{{"sds", corr.sds},
               {"uda", corr.uda},
               {"scenario", std::string(scenario_tag(corr.scenario))},
               {"n", corr.n}};
        if (corr.rho) {
            c["rho"] = *corr.rho;
        } else {
            c["rho"] = nullptr;
        }
        correlations.push_back(std::move(c));
    }
    j["correlations"] = std::move(correlations);

    json uda_stats = json::array();
    for (const auto& stats : report.uda_stats) {
        uda_stats.push_back(json{{"uda", stats.uda},
                                 {"scenario", std::string(scenario_tag(stats.scenario))},
                                 {"n_sds", stats.n_sds},
                                 {"mean", stats.mean},
                                 {"sd", stats.sd},
                                 {"median", stats.median},
                                 {"min", stats.min},
                                 {"max", stats.max}});
    }
    j["uda_descriptives"] = std::move(uda_stats);

    j["shifts"] = json{{"quartile_change", shift_rows_to_json(report.quartile_changes)},
                       {"top_lost", shift_rows_to_json(report.top_losses)},
                       {"bottom_lost", shift_rows_to_json(report.bottom_losses)}};

    out << j.dump(2) << '\n';
}

SensitivityReport read_report_json(std::istream& in, const std::string& source_name) {
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw Error(source_name + ": not a valid report: " + e.what());
    }
    try {
        if (j.at("format_version").get<int>() != kReportFormatVersion) {
            throw Error(source_name + ": unsupported report format version");
        }
        SensitivityReport report;
        const json& m = j.at("meta");
        report.meta.tool = m.value("tool", std::string{});
        report.meta.version = m.value("version", std::string{});
        report.meta.benchmark = scenario_from_json(m.at("benchmark"));
        for (const auto& tag : m.at("scenarios")) {
            report.meta.scenarios.push_back(scenario_from_json(tag));
        }
        report.meta.sds_threshold = m.at("sds_threshold").get<double>();
        if (m.contains("seed")) {
            report.meta.seed = m.at("seed").get<std::uint64_t>();
            report.meta.rng_algorithm = m.value("rng_algorithm", std::string{});
        }
        report.meta.census_date = m.value("census_date", std::string{});
        report.meta.config_digest = m.value("config_digest", std::string{});
        report.meta.window = YearRange{m.at("window").at(0).get<int>(),
                                       m.at("window").at(1).get<int>()};
        for (const auto& sds : m.at("excluded_sds")) {
            report.meta.excluded_sds.push_back(sds.get<std::string>());
        }
        report.meta.n_publications = m.at("n_publications").get<std::size_t>();
        report.meta.n_researchers = m.at("n_researchers").get<std::size_t>();
        report.meta.n_sds = m.at("n_sds").get<std::size_t>();
        report.meta.n_uda = m.at("n_uda").get<std::size_t>();
        report.meta.tie_rule = m.value("tie_rule", std::string{});
        report.meta.spearman_ties = m.value("spearman_ties", std::string{});
        report.meta.nil_ss = m.value("nil_ss", std::string{});

        for (const auto& c : j.at("correlations")) {
            SdsCorrelation corr;
            corr.sds = c.at("sds").get<std::string>();
            corr.uda = c.at("uda").get<std::string>();
            corr.scenario = scenario_from_json(c.at("scenario"));
            corr.n = c.at("n").get<std::size_t>();
            if (!c.at("rho").is_null()) corr.rho = c.at("rho").get<double>();
            report.correlations.push_back(std::move(corr));
        }
        for (const auto& s : j.at("uda_descriptives")) {
            UdaStats stats;
            stats.uda = s.at("uda").get<std::string>();
            stats.scenario = scenario_from_json(s.at("scenario"));
            stats.n_sds = s.at("n_sds").get<std::size_t>();
            stats.mean = s.at("mean").get<double>();
            stats.sd = s.at("sd").get<double>();
            stats.median = s.at("median").get<double>();
            stats.min = s.at("min").get<double>();
            stats.max = s.at("max").get<double>();
            report.uda_stats.push_back(std::move(stats));
        }
        const json& shifts = j.at("shifts");
        report.quartile_changes = shift_rows_from_json(shifts.at("quartile_change"));
        report.top_losses = shift_rows_from_json(shifts.at("top_lost"));
        report.bottom_losses = shift_rows_from_json(shifts.at("bottom_lost"));
        return report;
    } catch (const json::exception& e) {
        throw Error(source_name + ": malformed report: " + e.what());
    }
}

namespace {

std::string signed_rho(double rho) {
    return (rho >= 0 ? "+" : "") + format_fixed(rho, 3);
}

std::vector<Scenario> report_scenarios(const SensitivityReport& report) {
    return report.meta.scenarios;
}

// column-aligned plain-text table
std::string align(const std::vector<std::vector<std::string>>& rows) {
    std::vector<std::size_t> widths;
    for (const auto& row : rows) {
        if (widths.size() < row.size()) widths.resize(row.size(), 0);
        for (std::size_t i = 0; i < row.size(); ++i) {
            widths[i] = std::max(widths[i], row[i].size());
        }
    }
    std::string out;
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) out += "  ";
            out += row[i];
            if (i + 1 < row.size()) out.append(widths[i] - row[i].size(), ' ');
        }
        out += '\n';
    }
    return out;
}

std::vector<std::vector<std::string>> correlation_rows(const SensitivityReport& report) {
    const auto scenarios = report_scenarios(report);
    std::vector<std::vector<std::string>> rows;
    std::vector<std::string> header{"sds", "uda", "n"};
    for (Scenario s : scenarios) header.emplace_back(scenario_tag(s));
    rows.push_back(std::move(header));

    // (sds) -> cells, preserving report order of SDSs
    std::vector<std::string> order;
    std::map<std::string, std::map<int, const SdsCorrelation*>> by_sds;
    for (const auto& corr : report.correlations) {
        if (!by_sds.contains(corr.sds)) order.push_back(corr.sds);
        by_sds[corr.sds][scenario_order(corr.scenario)] = &corr;
    }
    for (const auto& sds : order) {
        const auto& cells = by_sds[sds];
        std::vector<std::string> row{sds, "", ""};
        // n is the SDS's ranked population, i.e. the benchmark self-pairing
        auto n_cell = cells.find(scenario_order(report.meta.benchmark));
        if (n_cell == cells.end()) n_cell = cells.begin();
        if (n_cell != cells.end()) {
            row[1] = n_cell->second->uda;
            row[2] = std::to_string(n_cell->second->n);
        }
        for (Scenario s : scenarios) {
            auto it = cells.find(scenario_order(s));
            if (it == cells.end() || !it->second->rho) {
                row.emplace_back("");
            } else {
                row.push_back(signed_rho(*it->second->rho));
            }
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

std::vector<std::vector<std::string>> descriptive_rows(const SensitivityReport& report) {
    std::vector<std::vector<std::string>> rows;
    rows.push_back({"uda", "scenario", "n_sds", "mean", "sd", "median", "min", "max"});
    for (const auto& stats : report.uda_stats) {
        rows.push_back({stats.uda, std::string(scenario_tag(stats.scenario)),
                        std::to_string(stats.n_sds), format_fixed(stats.mean, 3),
                        format_fixed(stats.sd, 3), format_fixed(stats.median, 3),
                        format_fixed(stats.min, 3), format_fixed(stats.max, 3)});
    }
    return rows;
}

// shift rows pivoted to one row per UDA, one column per scenario
std::vector<std::vector<std::string>> shift_table_rows(const SensitivityReport& report,
                                                       const std::vector<ShiftRow>& rows) {
    const auto scenarios = report_scenarios(report);
    std::vector<std::string> uda_order;
    std::map<std::string, std::map<int, const ShiftRow*>> by_uda;
    std::map<int, const ShiftRow*> totals;
    for (const auto& row : rows) {
        if (row.is_total) {
            totals[scenario_order(row.scenario)] = &row;
            continue;
        }
        if (!by_uda.contains(row.uda)) uda_order.push_back(row.uda);
        by_uda[row.uda][scenario_order(row.scenario)] = &row;
    }

    std::vector<std::vector<std::string>> out;
    std::vector<std::string> header{"uda"};
    for (Scenario s : scenarios) header.emplace_back(scenario_tag(s));
    out.push_back(std::move(header));
    auto emit = [&](const std::string& label, const std::map<int, const ShiftRow*>& cells) {
        std::vector<std::string> row{label};
        for (Scenario s : scenarios) {
            auto it = cells.find(scenario_order(s));
            if (it == cells.end() || it->second->n == 0) {
                row.emplace_back("");
            } else {
                row.push_back(format_fixed(it->second->pct, 1));
            }
        }
        out.push_back(std::move(row));
    };
    for (const auto& uda : uda_order) emit(uda, by_uda[uda]);
    emit("Total", totals);
    return out;
}

void write_delimited(const std::vector<std::vector<std::string>>& rows, std::ostream& out,
                     char delimiter) {
    for (const auto& row : rows) {
        out << join(row, delimiter) << '\n';
    }
}

void write_file(const std::filesystem::path& path,
                const std::vector<std::vector<std::string>>& rows, char delimiter) {
    std::ofstream out(path);
    if (!out) throw Error("cannot create file: " + path.string());
    write_delimited(rows, out, delimiter);
    if (!out.flush()) throw Error("write failure: " + path.string());
}

} // namespace

std::vector<std::filesystem::path> render_tables(const SensitivityReport& report,
                                                 const std::filesystem::path& out_dir,
                                                 char delimiter) {
    std::filesystem::create_directories(out_dir);
    std::vector<std::filesystem::path> written;

    const auto correlations = correlation_rows(report);
    const auto descriptives = descriptive_rows(report);
    const auto quartile = shift_table_rows(report, report.quartile_changes);
    const auto top = shift_table_rows(report, report.top_losses);
    const auto bottom = shift_table_rows(report, report.bottom_losses);

    const std::pair<const char*, const std::vector<std::vector<std::string>>*> files[] = {
        {"correlations.csv", &correlations}, {"uda_descriptives.csv", &descriptives},
        {"quartile_shift.csv", &quartile},   {"top_shift.csv", &top},
        {"bottom_shift.csv", &bottom},
    };
    for (const auto& [name, rows] : files) {
        const auto path = out_dir / name;
        write_file(path, *rows, delimiter);
        written.push_back(path);
    }

    std::ostringstream text;
    const std::string benchmark_tag(scenario_tag(report.meta.benchmark));
    text << "Spearman correlations vs benchmark (" << benchmark_tag << "), by SDS\n"
         << align(correlations) << '\n'
         << "Descriptive statistics of the per-SDS correlations, by UDA\n"
         << align(descriptives) << '\n'
         << "Percentage of researchers changing quartile vs benchmark (" << benchmark_tag << ")\n"
         << align(quartile) << '\n'
         << "Percentage of benchmark top-quartile researchers not top under each scenario\n"
         << align(top) << '\n'
         << "Percentage of benchmark bottom-quartile researchers not bottom under each scenario\n"
         << align(bottom);
    const auto text_path = out_dir / "tables.txt";
    std::ofstream out(text_path);
    if (!out) throw Error("cannot create file: " + text_path.string());
    out << text.str();
    if (!out.flush()) throw Error("write failure: " + text_path.string());
    written.push_back(text_path);
    return written;
}

} // namespace citerank
