#include "acs/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "acs/chern.hpp"
#include "acs/selftest.hpp"
#include "acs/serialize.hpp"
#include "acs/topology.hpp"

namespace acs::cli {

using nlohmann::json;

void validate(const CommandConfig& c) {
    auto need_mn = [&](const char* cmd) {
        if (!c.m || !c.n) throw InvalidInput(std::string(cmd) + " requires --m and --n");
        if (*c.m < 1 || *c.n < 1) throw InvalidInput("--m and --n must be positive");
    };
    switch (c.command) {
    case Command::Verify:
        if (!c.coeffs_path) throw InvalidInput("verify requires --coeffs");
        if ((c.m && *c.m < 1) || (c.n && *c.n < 1)) throw InvalidInput("--m and --n must be positive");
        break;
    case Command::Witness:
        need_mn("witness");
        if (*c.m % 2 == 0) throw InvalidInput("witness requires odd --m, got " + std::to_string(*c.m));
        break;
    case Command::Search:
        need_mn("search");
        if (c.bound < 0) throw InvalidInput("--bound must be nonnegative");
        if (c.workers < 1) throw InvalidInput("--workers must be at least 1");
        break;
    case Command::Table:
        if (c.m_max < 1 || c.n_max < 1) throw InvalidInput("--m-max and --n-max must be positive");
        break;
    case Command::Selftest:
        if (c.samples < 0) throw InvalidInput("--samples must be nonnegative");
        break;
    }
}

namespace {

const char* kCsvHeader = "m,n,chi,sigma,hirzebruch,c_top,verdict";

std::string csv_row(const WitnessRecord& r) {
    const ManifoldInvariants inv = invariants(r.coeffs.m, r.coeffs.n);
    std::ostringstream os;
    os << inv.m << ',' << inv.n << ',' << inv.euler << ',' << inv.signature << ','
       << (hirzebruch_check(inv.m, inv.n) ? "true" : "false") << ',' << r.c_top.get_str() << ','
       << (r.verdict ? "true" : "false");
    return os.str();
}

std::string flat_coeffs(const SacsCoefficients& c) {
    std::string s;
    for (std::int64_t v : flatten(c)) {
        if (!s.empty()) s += ';';
        s += std::to_string(v);
    }
    return s;
}

void write_text_record(std::ostream& out, const WitnessRecord& r) {
    out << "m=" << r.coeffs.m << " n=" << r.coeffs.n << " chi=" << r.chi << " c_" << 2 * r.coeffs.n << "="
        << r.c_top.get_str() << " verdict=" << (r.verdict ? "true" : "false") << '\n'
        << "coeffs: " << to_json(r.coeffs).dump() << '\n';
}

json with_schema(json j) {
    j["schema_version"] = kSchemaVersion;
    return j;
}

// Accepts a coefficient object, a witness record, a search report, or JSON
// lines of either (lines starting with '#' are skipped).
std::vector<SacsCoefficients> read_coefficients(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidInput("cannot open coefficients file " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    const std::string text = buf.str();

    auto from_value = [](const json& j, std::vector<SacsCoefficients>& out) {
        if (j.is_object() && j.contains("witnesses")) {
            for (const auto& w : j.at("witnesses")) out.push_back(coefficients_from_json(w.at("coeffs")));
        } else if (j.is_object() && j.contains("coeffs")) {
            out.push_back(coefficients_from_json(j.at("coeffs")));
        } else {
            out.push_back(coefficients_from_json(j));
        }
    };

    std::vector<SacsCoefficients> out;
    json whole = json::parse(text, nullptr, false);
    if (!whole.is_discarded()) {
        if (whole.is_array()) {
            for (const auto& e : whole) from_value(e, out);
        } else {
            from_value(whole, out);
        }
    } else {
        std::istringstream lines(text);
        std::string line;
        while (std::getline(lines, line)) {
            const auto first = line.find_first_not_of(" \t\r");
            if (first == std::string::npos || line[first] == '#') continue;
            json j = json::parse(line, nullptr, false);
            if (j.is_discarded()) throw InvalidInput("malformed JSON in " + path + ": " + line);
            from_value(j, out);
        }
    }
    if (out.empty()) throw InvalidInput("no coefficient vectors in " + path);
    return out;
}

int report_records(const CommandConfig& c, const std::vector<WitnessRecord>& records, std::ostream& out) {
    bool all = true;
    for (const auto& r : records) all = all && r.verdict;
    switch (c.format) {
    case Format::Text:
        for (const auto& r : records) write_text_record(out, r);
        break;
    case Format::Json:
        if (records.size() == 1) {
            out << with_schema(to_json(records.front())).dump() << '\n';
        } else {
            json arr = json::array();
            for (const auto& r : records) arr.push_back(to_json(r));
            out << with_schema({{"records", std::move(arr)}}).dump() << '\n';
        }
        break;
    case Format::Csv:
        out << kCsvHeader << '\n';
        for (const auto& r : records) out << csv_row(r) << '\n';
        break;
    }
    return all ? kOk : kVerdictFalse;
}

int run_verify(const CommandConfig& c, std::ostream& out) {
    std::vector<WitnessRecord> records;
    for (const auto& coeffs : read_coefficients(*c.coeffs_path)) {
        if ((c.m && *c.m != coeffs.m) || (c.n && *c.n != coeffs.n)) {
            throw InvalidInput("coefficients are for m=" + std::to_string(coeffs.m) + " n=" + std::to_string(coeffs.n) +
                               " but --m/--n disagree");
        }
        records.push_back(acs_criterion(coeffs));
    }
    return report_records(c, records, out);
}

int run_witness(const CommandConfig& c, std::ostream& out) {
    return report_records(c, {acs_criterion(odd_sum_witness(*c.m, *c.n))}, out);
}

std::uint64_t resolve_ceiling(const CommandConfig& c) {
    if (c.ceiling) return *c.ceiling;
    if (const char* env = std::getenv(kCeilingEnv); env != nullptr && *env != '\0') {
        try {
            std::size_t used = 0;
            const unsigned long long v = std::stoull(env, &used);
            if (used != std::string(env).size()) throw std::invalid_argument(env);
            return v;
        } catch (const std::exception&) {
            throw InvalidInput(std::string(kCeilingEnv) + " is not a nonnegative integer: " + env);
        }
    }
    return SearchOptions{}.brute_force_ceiling;
}

int run_search(const CommandConfig& c, std::ostream& out) {
    SearchOptions opt;
    opt.mode = c.mode;
    opt.workers = c.workers;
    opt.brute_force_ceiling = resolve_ceiling(c);
    const SearchBox box{*c.m, *c.n, c.bound};
    const SearchResult res = search_witnesses(box, opt);
    const char* mode = c.mode == SearchMode::BruteForce ? "brute" : "decomposed";

    switch (c.format) {
    case Format::Text:
        for (const auto& r : res.witnesses) out << to_json(r).dump() << '\n';
        out << "# summary: m=" << box.m << " n=" << box.n << " bound=" << box.bound << " mode=" << mode
            << " candidates=" << res.candidates.get_str() << " witnesses=" << res.witnesses.size()
            << " seconds=" << std::fixed << std::setprecision(3) << res.seconds << '\n';
        break;
    case Format::Json: {
        json arr = json::array();
        for (const auto& r : res.witnesses) arr.push_back(to_json(r));
        out << with_schema({{"witnesses", std::move(arr)},
                            {"summary",
                             {{"m", box.m},
                              {"n", box.n},
                              {"bound", box.bound},
                              {"mode", mode},
                              {"candidates", res.candidates.get_str()},
                              {"witnesses", res.witnesses.size()},
                              {"seconds", res.seconds}}}})
                   .dump()
            << '\n';
        break;
    }
    case Format::Csv:
        out << kCsvHeader << ",coeffs\n";
        for (const auto& r : res.witnesses) out << csv_row(r) << ',' << flat_coeffs(r.coeffs) << '\n';
        break;
    }
    return kOk;
}

int run_table(const CommandConfig& c, std::ostream& out) {
    struct Row {
        ManifoldInvariants inv;
        bool hirzebruch;
        std::optional<WitnessRecord> witness;
    };
    std::vector<Row> rows;
    for (int m = 1; m <= c.m_max; ++m) {
        for (int n = 1; n <= c.n_max; ++n) {
            Row r{invariants(m, n), hirzebruch_check(m, n), std::nullopt};
            if (m % 2 == 1) r.witness = acs_criterion(odd_sum_witness(m, n));
            rows.push_back(std::move(r));
        }
    }
    auto c_top = [](const Row& r) { return r.witness ? r.witness->c_top.get_str() : std::string(); };
    auto verdict = [](const Row& r) { return r.witness ? std::string(r.witness->verdict ? "true" : "false") : std::string(); };

    switch (c.format) {
    case Format::Text:
        out << std::left << std::setw(4) << "m" << std::setw(4) << "n" << std::setw(8) << "chi" << std::setw(7)
            << "sigma" << std::setw(12) << "hirzebruch" << std::setw(8) << "c_top" << "verdict\n";
        for (const auto& r : rows) {
            out << std::setw(4) << r.inv.m << std::setw(4) << r.inv.n << std::setw(8) << r.inv.euler << std::setw(7)
                << r.inv.signature << std::setw(12) << (r.hirzebruch ? "true" : "false") << std::setw(8)
                << (r.witness ? c_top(r) : "-") << (r.witness ? verdict(r) : "-") << '\n';
        }
        break;
    case Format::Json: {
        json arr = json::array();
        for (const auto& r : rows) {
            json j = to_json(r.inv);
            j["hirzebruch"] = r.hirzebruch;
            j["c_top"] = r.witness ? json(c_top(r)) : json(nullptr);
            j["verdict"] = r.witness ? json(r.witness->verdict) : json(nullptr);
            arr.push_back(std::move(j));
        }
        out << with_schema({{"rows", std::move(arr)}}).dump() << '\n';
        break;
    }
    case Format::Csv:
        out << kCsvHeader << '\n';
        for (const auto& r : rows) {
            out << r.inv.m << ',' << r.inv.n << ',' << r.inv.euler << ',' << r.inv.signature << ','
                << (r.hirzebruch ? "true" : "false") << ',' << c_top(r) << ',' << verdict(r) << '\n';
        }
        break;
    }
    return kOk;
}

int run_selftest_command(const CommandConfig& c, std::ostream& out) {
    SelftestOptions opt;
    opt.samples = c.samples;
    opt.seed = c.seed;
    const auto results = run_selftest(opt);
    std::size_t passed = 0;
    for (const auto& r : results) passed += r.passed ? 1 : 0;

    switch (c.format) {
    case Format::Text:
    case Format::Csv:
        for (const auto& r : results) {
            out << (r.passed ? "[PASS] " : "[FAIL] ") << r.name << " (" << r.cases << " cases)";
            if (!r.passed) out << ": " << r.detail;
            out << '\n';
        }
        out << passed << "/" << results.size() << " suites passed\n";
        break;
    case Format::Json: {
        json arr = json::array();
        for (const auto& r : results) {
            arr.push_back({{"name", r.name}, {"passed", r.passed}, {"cases", r.cases}, {"detail", r.detail}});
        }
        out << with_schema({{"suites", std::move(arr)}, {"passed", passed}, {"failed", results.size() - passed}}).dump()
            << '\n';
        break;
    }
    }
    return passed == results.size() ? kOk : kInternalError;
}

int dispatch(const CommandConfig& c, std::ostream& out) {
    switch (c.command) {
    case Command::Verify: return run_verify(c, out);
    case Command::Witness: return run_witness(c, out);
    case Command::Search: return run_search(c, out);
    case Command::Table: return run_table(c, out);
    case Command::Selftest: return run_selftest_command(c, out);
    }
    return kInternalError;
}

} // namespace

int run(const CommandConfig& config, std::ostream& out, std::ostream& err) {
    try {
        validate(config);
        if (config.output_path) {
            std::ofstream file(*config.output_path);
            if (!file) throw InvalidInput("cannot write " + *config.output_path);
            return dispatch(config, file);
        }
        return dispatch(config, out);
    } catch (const InvalidInput& e) {
        err << "error: " << e.what() << '\n';
    } catch (const ShapeError& e) {
        err << "shape error: " << e.what() << '\n';
    } catch (const CeilingExceeded& e) {
        err << "ceiling exceeded: " << e.what() << " (raise with --ceiling or " << kCeilingEnv << ")\n";
    } catch (const IndexOutOfRange& e) {
        err << "out of range: " << e.what() << '\n';
    } catch (const Error& e) {
        err << "internal error: " << e.what() << '\n';
        return kInternalError;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return kInternalError;
    }
    return kUsageError;
}

int main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Almost complex structures on connected sums of CP^{2n}"};
    app.require_subcommand(1);
    CommandConfig config;

    std::map<std::string, Format> formats{{"text", Format::Text}, {"json", Format::Json}, {"csv", Format::Csv}};
    std::map<std::string, SearchMode> modes{{"brute", SearchMode::BruteForce}, {"decomposed", SearchMode::Decomposed}};

    auto common = [&](CLI::App* sub) {
        sub->add_option("--format", config.format, "Output format: text, json or csv")
            ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
        sub->add_option("--output,-o", config.output_path, "Write the report to this file");
    };
    auto mn = [&](CLI::App* sub) {
        sub->add_option("--m", config.m, "Number of connect summands");
        sub->add_option("--n", config.n, "Half the complex dimension (manifold is m # CP^{2n})");
    };

    auto* verify = app.add_subcommand("verify", "Evaluate the criterion for coefficient vectors from a file");
    mn(verify);
    verify->add_option("--coeffs", config.coeffs_path, "Coefficient JSON (object, record, or JSON lines)");
    common(verify);

    auto* witness = app.add_subcommand("witness", "Build and verify the standard witness for odd m");
    mn(witness);
    common(witness);

    auto* search = app.add_subcommand("search", "Enumerate witnesses in a coefficient box");
    mn(search);
    search->add_option("--bound", config.bound, "Coefficients range over [-bound, bound]");
    search->add_option("--mode", config.mode, "brute or decomposed")
        ->transform(CLI::CheckedTransformer(modes, CLI::ignore_case));
    search->add_option("--workers", config.workers, "Worker threads for brute force");
    search->add_option("--ceiling", config.ceiling, "Brute-force candidate ceiling");
    common(search);

    auto* table = app.add_subcommand("table", "Invariants and witness values for a range of (m, n)");
    table->add_option("--m-max", config.m_max, "Largest m");
    table->add_option("--n-max", config.n_max, "Largest n");
    common(table);

    auto* selftest = app.add_subcommand("selftest", "Run the identity suites");
    selftest->add_option("--samples", config.samples, "Random vectors for the route comparison");
    selftest->add_option("--seed", config.seed, "Random seed");
    common(selftest);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsageError;
    }

    if (verify->parsed()) config.command = Command::Verify;
    if (witness->parsed()) config.command = Command::Witness;
    if (search->parsed()) config.command = Command::Search;
    if (table->parsed()) config.command = Command::Table;
    if (selftest->parsed()) config.command = Command::Selftest;
    return run(config, out, err);
}

} // namespace acs::cli
