#include "citerank/model.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <limits>
#include <ostream>
#include <set>
#include <unordered_set>

#include "citerank/csv.hpp"
#include "citerank/errors.hpp"

namespace citerank {

namespace {

std::int64_t parse_int(const DelimitedReader& reader, const std::string& cell,
                       const char* column, std::int64_t min, std::int64_t max) {
    std::int64_t value = 0;
    const char* first = cell.data();
    const char* last = first + cell.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last || cell.empty()) {
        throw ParseError(reader.source_name(), reader.line_number(), column,
                         "not an integer: '" + cell + "'");
    }
    if (value < min || value > max) {
        throw ParseError(reader.source_name(), reader.line_number(), column,
                         "value " + cell + " out of range [" + std::to_string(min) + ", " +
                             std::to_string(max) + "]");
    }
    return value;
}

// Splits a ';'-separated cell into unique non-empty values, input order kept.
std::vector<std::string> parse_values(const DelimitedReader& reader, const std::string& cell,
                                      const char* column) {
    std::vector<std::string> out;
    for (auto& raw : split_list(cell)) {
        std::string v = trim_copy(raw);
        if (v.empty()) {
            throw ParseError(reader.source_name(), reader.line_number(), column,
                             "empty value in list '" + cell + "'");
        }
        if (std::find(out.begin(), out.end(), v) == out.end()) {
            out.push_back(std::move(v));
        }
    }
    if (out.empty()) {
        throw ParseError(reader.source_name(), reader.line_number(), column, "list must not be empty");
    }
    return out;
}

std::vector<Researcher> load_researchers(std::istream& in, const std::string& name, char delimiter) {
    DelimitedReader reader(in, name, delimiter);
    const std::size_t c_id = reader.column("researcher_id");
    const std::size_t c_sds = reader.column("sds");
    const std::size_t c_uda = reader.column("uda");

    std::vector<Researcher> researchers;
    std::unordered_map<std::string, std::string> seen_rows;      // id -> raw line
    std::unordered_map<std::string, std::string> sds_to_uda;

    std::vector<std::string> cells;
    while (reader.next_row(cells)) {
        Researcher r{cells[c_id], cells[c_sds], cells[c_uda]};
        if (r.researcher_id.empty())
            throw ParseError(name, reader.line_number(), "researcher_id", "must not be empty");
        if (r.sds.empty())
            throw ParseError(name, reader.line_number(), "sds", "must not be empty");
        if (r.uda.empty())
            throw ParseError(name, reader.line_number(), "uda", "must not be empty");

        auto [it, inserted] = seen_rows.emplace(r.researcher_id, reader.raw_line());
        if (!inserted) {
            if (it->second == reader.raw_line()) continue;  // byte-identical duplicate
            throw ParseError(name, reader.line_number(), "researcher_id",
                             "duplicate id '" + r.researcher_id + "' with conflicting fields");
        }
        auto [mit, minserted] = sds_to_uda.emplace(r.sds, r.uda);
        if (!minserted && mit->second != r.uda) {
            throw ParseError(name, reader.line_number(), "uda",
                             "SDS '" + r.sds + "' mapped to both '" + mit->second + "' and '" +
                                 r.uda + "'");
        }
        researchers.push_back(std::move(r));
    }
    if (researchers.empty()) {
        throw ParseError(name, reader.line_number(), "", "researcher set must not be empty");
    }
    return researchers;
}

} // namespace

Corpus load_corpus(std::istream& publications, std::string publications_name,
                   std::istream& researchers, std::string researchers_name,
                   const LoadOptions& options) {
    Corpus corpus;
    corpus.census_date = options.census_date;
    corpus.researchers = load_researchers(researchers, researchers_name, options.delimiter);

    std::unordered_set<std::string> researcher_ids;
    researcher_ids.reserve(corpus.researchers.size());
    for (const auto& r : corpus.researchers) researcher_ids.insert(r.researcher_id);

    DelimitedReader reader(publications, publications_name, options.delimiter);
    const std::size_t c_id = reader.column("pub_id");
    const std::size_t c_year = reader.column("year");
    const std::size_t c_cit = reader.column("citations");
    const std::size_t c_cat = reader.column("categories");
    const std::size_t c_auth = reader.column("author_ids");

    std::unordered_map<std::string, std::string> seen_rows;  // pub_id -> raw line
    int min_year = std::numeric_limits<int>::max();
    int max_year = std::numeric_limits<int>::min();

    std::vector<std::string> cells;
    while (reader.next_row(cells)) {
        Publication pub;
        pub.pub_id = cells[c_id];
        if (pub.pub_id.empty())
            throw ParseError(publications_name, reader.line_number(), "pub_id", "must not be empty");

        auto [it, inserted] = seen_rows.emplace(pub.pub_id, reader.raw_line());
        if (!inserted) {
            if (it->second == reader.raw_line()) continue;  // byte-identical duplicate
            throw ParseError(publications_name, reader.line_number(), "pub_id",
                             "duplicate id '" + pub.pub_id + "' with conflicting fields");
        }

        pub.year = static_cast<int>(parse_int(reader, cells[c_year], "year", -100000, 100000));
        pub.citations = parse_int(reader, cells[c_cit], "citations", 0,
                                  std::numeric_limits<std::int64_t>::max());
        pub.categories = parse_values(reader, cells[c_cat], "categories");
        pub.author_ids = parse_values(reader, cells[c_auth], "author_ids");

        for (const auto& author : pub.author_ids) {
            if (!researcher_ids.contains(author)) {
                throw ParseError(publications_name, reader.line_number(), "author_ids",
                                 "author '" + author + "' not present in the researchers file");
            }
        }
        if (options.window && !options.window->contains(pub.year)) {
            throw ParseError(publications_name, reader.line_number(), "year",
                             "year " + std::to_string(pub.year) + " outside observation window [" +
                                 std::to_string(options.window->first) + ", " +
                                 std::to_string(options.window->last) + "]");
        }
        min_year = std::min(min_year, pub.year);
        max_year = std::max(max_year, pub.year);
        corpus.publications.push_back(std::move(pub));
    }

    if (options.window) {
        corpus.window = *options.window;
    } else if (!corpus.publications.empty()) {
        corpus.window = YearRange{min_year, max_year};
    }
    return corpus;
}

Corpus load_corpus_files(const std::filesystem::path& publications,
                         const std::filesystem::path& researchers,
                         const LoadOptions& options) {
    std::ifstream pubs(publications);
    if (!pubs) throw Error("cannot open publications file: " + publications.string());
    std::ifstream res(researchers);
    if (!res) throw Error("cannot open researchers file: " + researchers.string());
    return load_corpus(pubs, publications.string(), res, researchers.string(), options);
}

namespace {

void check_cell(const std::string& value, char delimiter, const char* what) {
    if (value.find(delimiter) != std::string::npos || value.find(';') != std::string::npos ||
        value.find('\n') != std::string::npos || value.find('\r') != std::string::npos) {
        throw Error(std::string(what) + " '" + value +
                    "' contains a delimiter and cannot be written unquoted");
    }
}

std::string join_values(const std::vector<std::string>& values) {
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) out += ';';
        out += values[i];
    }
    return out;
}

} // namespace

void save_corpus(const Corpus& corpus, std::ostream& publications, std::ostream& researchers,
                 char delimiter) {
    const char d = delimiter;
    publications << "pub_id" << d << "year" << d << "citations" << d << "categories" << d
                 << "author_ids" << '\n';
    for (const auto& pub : corpus.publications) {
        check_cell(pub.pub_id, d, "pub_id");
        for (const auto& c : pub.categories) check_cell(c, d, "category");
        for (const auto& a : pub.author_ids) check_cell(a, d, "author id");
        publications << pub.pub_id << d << pub.year << d << pub.citations << d
                     << join_values(pub.categories) << d << join_values(pub.author_ids) << '\n';
    }
    researchers << "researcher_id" << d << "sds" << d << "uda" << '\n';
    for (const auto& r : corpus.researchers) {
        check_cell(r.researcher_id, d, "researcher_id");
        check_cell(r.sds, d, "sds");
        check_cell(r.uda, d, "uda");
        researchers << r.researcher_id << d << r.sds << d << r.uda << '\n';
    }
}

void save_corpus_files(const Corpus& corpus, const std::filesystem::path& publications,
                       const std::filesystem::path& researchers, char delimiter) {
    std::ofstream pubs(publications);
    if (!pubs) throw Error("cannot create file: " + publications.string());
    std::ofstream res(researchers);
    if (!res) throw Error("cannot create file: " + researchers.string());
    save_corpus(corpus, pubs, res, delimiter);
    if (!pubs.flush() || !res.flush()) {
        throw Error("write failure while saving corpus files");
    }
}

void validate_corpus(const Corpus& corpus) {
    std::unordered_set<std::string> researcher_ids;
    researcher_ids.reserve(corpus.researchers.size());
    std::unordered_map<std::string, std::string> sds_to_uda;
    for (const auto& r : corpus.researchers) {
        if (r.researcher_id.empty() || r.sds.empty() || r.uda.empty()) {
            throw ValidationError("researcher with empty id, sds, or uda");
        }
        if (!researcher_ids.insert(r.researcher_id).second) {
            throw ValidationError("duplicate researcher id '" + r.researcher_id + "'");
        }
        auto [it, inserted] = sds_to_uda.emplace(r.sds, r.uda);
        if (!inserted && it->second != r.uda) {
            throw ValidationError("SDS '" + r.sds + "' mapped to more than one UDA");
        }
    }
    std::unordered_set<std::string> pub_ids;
    pub_ids.reserve(corpus.publications.size());
    for (const auto& pub : corpus.publications) {
        if (pub.pub_id.empty()) throw ValidationError("publication with empty id");
        if (!pub_ids.insert(pub.pub_id).second) {
            throw ValidationError("duplicate publication id '" + pub.pub_id + "'");
        }
        if (pub.citations < 0) {
            throw ValidationError("publication '" + pub.pub_id + "' has negative citations");
        }
        if (pub.categories.empty()) {
            throw ValidationError("publication '" + pub.pub_id + "' has no subject category");
        }
        if (pub.author_ids.empty()) {
            throw ValidationError("publication '" + pub.pub_id + "' has no author");
        }
        for (const auto& author : pub.author_ids) {
            if (!researcher_ids.contains(author)) {
                throw ValidationError("publication '" + pub.pub_id + "' references unknown author '" +
                                      author + "'");
            }
        }
        if (!corpus.window.contains(pub.year)) {
            throw ValidationError("publication '" + pub.pub_id + "' dated " +
                                  std::to_string(pub.year) + " outside the observation window");
        }
    }
}

AuthorIndex build_author_index(const Corpus& corpus) {
    AuthorIndex index;
    index.reserve(corpus.researchers.size());
    for (std::size_t i = 0; i < corpus.publications.size(); ++i) {
        for (const auto& author : corpus.publications[i].author_ids) {
            index[author].push_back(i);
        }
    }
    return index;
}

Taxonomy sds_taxonomy(const Corpus& corpus) {
    Taxonomy taxonomy;
    for (const auto& r : corpus.researchers) taxonomy.emplace(r.sds, r.uda);
    return taxonomy;
}

FilterResult filter_sds(const Corpus& corpus, double threshold) {
    if (!(threshold > 0.0 && threshold <= 1.0)) {
        throw ConfigError("sds filter threshold must lie in (0, 1], got " +
                          std::to_string(threshold));
    }

    std::unordered_set<std::string> publishing;
    publishing.reserve(corpus.researchers.size());
    for (const auto& pub : corpus.publications) {
        for (const auto& author : pub.author_ids) publishing.insert(author);
    }

    // sds -> (members, members with at least one publication)
    std::map<std::string, std::pair<std::size_t, std::size_t>> coverage;
    for (const auto& r : corpus.researchers) {
        auto& [total, active] = coverage[r.sds];
        ++total;
        if (publishing.contains(r.researcher_id)) ++active;
    }

    std::unordered_set<std::string> retained_sds;
    FilterResult result;
    for (const auto& [sds, counts] : coverage) {
        const auto [total, active] = counts;
        if (static_cast<double>(active) >= threshold * static_cast<double>(total)) {
            retained_sds.insert(sds);
        } else {
            result.excluded_sds.push_back(sds);
        }
    }

    Corpus& out = result.corpus;
    out.window = corpus.window;
    out.census_date = corpus.census_date;
    std::unordered_set<std::string> retained_ids;
    for (const auto& r : corpus.researchers) {
        if (retained_sds.contains(r.sds)) {
            retained_ids.insert(r.researcher_id);
            out.researchers.push_back(r);
        }
    }
    for (const auto& pub : corpus.publications) {
        std::vector<std::string> kept_authors;
        kept_authors.reserve(pub.author_ids.size());
        for (const auto& author : pub.author_ids) {
            if (retained_ids.contains(author)) kept_authors.push_back(author);
        }
        if (kept_authors.empty()) continue;  // fully orphaned publication
        Publication copy = pub;
        copy.author_ids = std::move(kept_authors);
        out.publications.push_back(std::move(copy));
    }
    return result;
}

} // namespace citerank
