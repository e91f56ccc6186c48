#include "qatlas/cli.hpp"

#include <cstdlib>
#include <iomanip>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "qatlas/cohomology.hpp"
#include "qatlas/octonions.hpp"
#include "qatlas/structures.hpp"
#include "qatlas/study.hpp"
#include "qatlas/verify.hpp"

namespace qatlas::cli {

namespace {

using json = nlohmann::ordered_json;

enum class Format { json, csv, table };

struct GlobalOptions {
    Format format = Format::table;
    std::string data_dir;
    std::uint64_t budget = 2'000'000;
};

const cohomology::TableSet& resolve_tables(const GlobalOptions& opts,
                                           std::optional<cohomology::TableSet>& storage) {
    std::string dir = opts.data_dir;
    if (dir.empty()) {
        if (const char* env = std::getenv("QATLAS_DATA_DIR")) dir = env;
    }
    if (dir.empty()) return cohomology::builtin_tables();
    storage = cohomology::load_tables(dir);
    return *storage;
}

std::string dump(const json& doc) { return doc.dump(2) + "\n"; }

// ---- enumerate ----------------------------------------------------------

struct EnumeratedItems {
    std::string kind;
    std::vector<std::string> columns;          // csv/table header
    std::vector<std::vector<long long>> rows;  // flat code rows
    json items = json::array();                // structured json items
};

EnumeratedItems enumerate_kind(const std::string& kind) {
    EnumeratedItems out;
    auto tuple_row = [&](const auto& codes) {
        std::vector<long long> row(codes.begin(), codes.end());
        out.rows.push_back(row);
        out.items.push_back(row);
    };

    if (kind == "odd" || kind == "odd-theta" || kind == "bitangent") {
        out.kind = "odd-theta";
        out.columns = {"theta"};
        for (auto t : structures::odd_thetas()) tuple_row(std::vector<unsigned>{t.code()});
    } else if (kind == "even" || kind == "even-theta" || kind == "octad") {
        out.kind = "even-theta";
        out.columns = {"theta"};
        for (auto t : structures::even_thetas()) tuple_row(std::vector<unsigned>{t.code()});
    } else if (kind == "steiner") {
        out.kind = "steiner";
        out.columns = {"key"};
        for (int i = 1; i <= 12; ++i) out.columns.push_back("m" + std::to_string(i));
        for (const auto& sc : structures::steiner_complexes()) {
            std::vector<long long> row{sc.key.code()};
            json pairs = json::array();
            for (auto m : sc.members) row.push_back(m.code());
            for (const auto& [a, b] : sc.pairs) pairs.push_back({a.code(), b.code()});
            out.rows.push_back(row);
            json item;
            item["key"] = sc.key.code();
            item["members"] = std::vector<long long>(row.begin() + 1, row.end());
            item["pairs"] = pairs;
            out.items.push_back(item);
        }
    } else if (kind == "gopel") {
        out.kind = "gopel";
        for (int i = 1; i <= 7; ++i) out.columns.push_back("v" + std::to_string(i));
        for (const auto& g : structures::gopel_subsets()) {
            std::vector<unsigned> codes;
            for (auto p : g.points) codes.push_back(p.code());
            tuple_row(codes);
        }
    } else if (kind == "syzygetic" || kind == "tetrad") {
        out.kind = "syzygetic-tetrad";
        for (int i = 1; i <= 4; ++i) out.columns.push_back("theta" + std::to_string(i));
        for (const auto& t : structures::syzygetic_tetrads()) {
            std::vector<unsigned> codes;
            for (auto m : t.members) codes.push_back(m.code());
            tuple_row(codes);
        }
    } else if (kind == "isotropic-plane") {
        out.kind = "isotropic-plane";
        for (int i = 1; i <= 3; ++i) out.columns.push_back("v" + std::to_string(i));
        for (const auto& p : f2core::subspaces(2, true)) {
            std::vector<unsigned> codes;
            for (auto v : p.nonzero_elements()) codes.push_back(v.code());
            tuple_row(codes);
        }
    } else if (kind == "azygetic") {
        out.kind = "azygetic-triad";
        for (int i = 1; i <= 3; ++i) out.columns.push_back("key" + std::to_string(i));
        for (const auto& t : structures::azygetic_triads()) {
            std::vector<unsigned> codes;
            for (auto v : t.keys) codes.push_back(v.code());
            tuple_row(codes);
        }
    } else if (kind == "aronhold" || kind == "heptad") {
        out.kind = "aronhold-heptad";
        for (int i = 1; i <= 7; ++i) out.columns.push_back("theta" + std::to_string(i));
        for (const auto& h : structures::aronhold_heptads()) {
            std::vector<unsigned> codes;
            for (auto m : h.members) codes.push_back(m.code());
            tuple_row(codes);
        }
    } else if (kind == "ennead") {
        out.kind = "ennead";
        for (int i = 1; i <= 9; ++i) out.columns.push_back("p" + std::to_string(i));
        for (const auto& e : study::enneads()) {
            std::vector<unsigned> codes;
            for (auto p : e.points) codes.push_back(p.code());
            tuple_row(codes);
        }
    } else {
        throw std::domain_error("unknown kind '" + kind +
                                "' (expected odd|even|steiner|gopel|syzygetic|"
                                "isotropic-plane|azygetic|aronhold|ennead)");
    }
    return out;
}

std::string render_enumeration(const EnumeratedItems& items, Format format) {
    if (format == Format::json) {
        json doc;
        doc["kind"] = items.kind;
        doc["count"] = items.rows.size();
        doc["items"] = items.items;
        return dump(doc);
    }
    std::ostringstream out;
    if (format == Format::csv) {
        for (std::size_t c = 0; c < items.columns.size(); ++c)
            out << (c ? "," : "") << items.columns[c];
        out << "\n";
        for (const auto& row : items.rows) {
            for (std::size_t c = 0; c < row.size(); ++c) out << (c ? "," : "") << row[c];
            out << "\n";
        }
        return out.str();
    }
    out << items.kind << " (" << items.rows.size() << ")\n";
    for (const auto& col : items.columns) out << std::setw(7) << col;
    out << "\n";
    for (const auto& row : items.rows) {
        for (long long v : row) out << std::setw(7) << v;
        out << "\n";
    }
    return out.str();
}

// ---- polynomials --------------------------------------------------------

json polynomial_json(const cohomology::IntPolynomial& p) {
    json doc;
    doc["variable"] = std::string(1, p.variable);
    doc["coefficients"] = p.coefficients;
    doc["pretty"] = p.pretty();
    return doc;
}

std::string render_polynomial(const std::string& command, const std::string& structure,
                              const cohomology::IntPolynomial& computed,
                              const cohomology::IntPolynomial& printed, Format format,
                              std::optional<long long> q_value,
                              std::optional<long long> value) {
    const bool matches = computed.same_coefficients(printed);
    if (format == Format::json) {
        json doc;
        doc["command"] = command;
        doc["structure"] = structure;
        doc["computed"] = polynomial_json(computed);
        doc["printed"] = polynomial_json(printed);
        doc["matches_printed"] = matches;
        if (q_value) {
            doc["q"] = *q_value;
            doc["value"] = *value;
        }
        return dump(doc);
    }
    std::ostringstream out;
    if (format == Format::csv) {
        out << "structure,computed,printed,matches_printed";
        if (q_value) out << ",q,value";
        out << "\n" << structure << "," << computed.pretty() << "," << printed.pretty() << ","
            << (matches ? "true" : "false");
        if (q_value) out << "," << *q_value << "," << *value;
        out << "\n";
        return out.str();
    }
    out << command << " " << structure << ": " << computed.pretty() << "\n";
    if (!matches)
        out << "printed value differs: " << printed.pretty() << "\n";
    if (q_value) out << "value at q = " << *q_value << ": " << *value << "\n";
    return out.str();
}

// ---- verify / audit -----------------------------------------------------

std::string render_suites(const std::vector<verify::SuiteResult>& suites, Format format,
                          bool& all_pass) {
    all_pass = true;
    for (const auto& s : suites) all_pass = all_pass && s.pass();

    if (format == Format::json) {
        json doc;
        doc["suites"] = json::array();
        for (const auto& s : suites) {
            json suite;
            suite["suite"] = s.suite;
            suite["pass"] = s.pass();
            suite["checks"] = json::array();
            for (const auto& c : s.checks) {
                json check;
                check["name"] = c.name;
                check["pass"] = c.pass;
                check["detail"] = c.detail;
                for (const auto& [k, v] : c.values) check[k] = v;
                suite["checks"].push_back(check);
            }
            doc["suites"].push_back(suite);
        }
        doc["pass"] = all_pass;
        return dump(doc);
    }

    std::ostringstream out;
    if (format == Format::csv) {
        out << "suite,check,pass,detail\n";
        for (const auto& s : suites)
            for (const auto& c : s.checks) {
                std::string detail = c.detail;
                for (char& ch : detail)
                    if (ch == ',') ch = ';';
                out << s.suite << "," << c.name << "," << (c.pass ? "true" : "false") << ","
                    << detail << "\n";
            }
        return out.str();
    }
    for (const auto& s : suites) {
        std::size_t passed = 0;
        for (const auto& c : s.checks) {
            out << (c.pass ? "[PASS] " : "[FAIL] ") << s.suite << "/" << c.name << ": " << c.detail
                << "\n";
            passed += c.pass;
        }
        out << "suite " << s.suite << ": " << passed << "/" << s.checks.size()
            << " checks passed\n";
    }
    out << (all_pass ? "all suites passed\n" : "FAILURES present\n");
    return out.str();
}

std::string render_audit(const cohomology::AuditReport& report, Format format, bool allow_known,
                         int& exit_code) {
    int findings = 0, known = 0;
    for (const auto& item : report.items) {
        findings += item.finding;
        known += item.finding && item.known;
    }
    exit_code = 0;
    if (report.has_findings())
        exit_code = (allow_known && !report.has_unknown_findings()) ? 0 : 1;

    if (format == Format::json) {
        json doc;
        doc["items"] = json::array();
        for (const auto& item : report.items) {
            json j;
            j["id"] = item.id;
            j["finding"] = item.finding;
            if (item.finding) j["known"] = item.known;
            j["detail"] = item.detail;
            doc["items"].push_back(j);
        }
        doc["findings"] = findings;
        doc["known_findings"] = known;
        doc["exit_code"] = exit_code;
        return dump(doc);
    }
    std::ostringstream out;
    if (format == Format::csv) {
        out << "id,finding,known,detail\n";
        for (const auto& item : report.items) {
            std::string detail = item.detail;
            for (char& ch : detail)
                if (ch == ',') ch = ';';
            out << item.id << "," << (item.finding ? "true" : "false") << ","
                << (item.known ? "true" : "false") << "," << detail << "\n";
        }
        return out.str();
    }
    for (const auto& item : report.items) {
        const char* mark = !item.finding ? "[OK]      "
                           : item.known  ? "[KNOWN]   "
                                         : "[FINDING] ";
        out << mark << item.id << ": " << item.detail << "\n";
    }
    out << findings << " finding(s), " << known << " documented\n";
    return out.str();
}

// ---- octonion table -----------------------------------------------------

std::string render_octonion_table(Format format) {
    const octonions::Table& table = octonions::full_table();
    auto cell = [](octonions::SignedBasisProduct p) {
        return std::string(p.sign < 0 ? "-" : "") + "e" + std::to_string(p.label);
    };
    if (format == Format::json) {
        json doc;
        doc["rows"] = json::array();
        for (int x = 0; x < 8; ++x) {
            json row = json::array();
            for (int y = 0; y < 8; ++y) row.push_back(cell(table[x][y]));
            doc["rows"].push_back(row);
        }
        return dump(doc);
    }
    std::ostringstream out;
    if (format == Format::csv) {
        for (int x = 0; x < 8; ++x) {
            for (int y = 0; y < 8; ++y) out << (y ? "," : "") << cell(table[x][y]);
            out << "\n";
        }
        return out.str();
    }
    out << std::setw(5) << "";
    for (int y = 0; y < 8; ++y) out << std::setw(5) << ("e" + std::to_string(y));
    out << "\n";
    for (int x = 0; x < 8; ++x) {
        out << std::setw(5) << ("e" + std::to_string(x));
        for (int y = 0; y < 8; ++y) out << std::setw(5) << cell(table[x][y]);
        out << "\n";
    }
    return out.str();
}

}  // namespace

CommandResult run(const std::vector<std::string>& args) {
    CommandResult result;
    GlobalOptions opts;
    std::string format_name = "table";

    CLI::App app{"exact enumeration and verification of the classical structures of plane quartics"};
    app.name("qatlas");
    app.require_subcommand(1);
    app.add_option("--format", format_name, "output format")
        ->check(CLI::IsMember({"json", "csv", "table"}))
        ->capture_default_str();
    app.add_option("--data-dir", opts.data_dir,
                   "directory with the table documents (falls back to QATLAS_DATA_DIR, then to "
                   "the built-in copies)");
    app.add_option("--budget", opts.budget, "group closure element budget")
        ->capture_default_str();

    std::string enumerate_kind_name;
    CLI::App* cmd_enumerate = app.add_subcommand("enumerate", "list a structure family");
    cmd_enumerate->add_option("kind", enumerate_kind_name, "structure kind")->required();

    std::string suite_name = "all";
    CLI::App* cmd_verify = app.add_subcommand("verify", "run verification suites");
    cmd_verify->add_option("--suite", suite_name, "suite to run")
        ->check(CLI::IsMember({"counts", "stabilizers", "ranks", "study", "octonions",
                               "cohomology", "all"}))
        ->capture_default_str();

    std::string poincare_structure;
    CLI::App* cmd_poincare = app.add_subcommand("poincare", "Poincaré polynomial of a structure");
    cmd_poincare->add_option("structure", poincare_structure, "structure name")->required();

    std::string points_structure;
    long long q_value = -1;
    CLI::App* cmd_points = app.add_subcommand("points", "point-count polynomial of a structure");
    cmd_points->add_option("structure", points_structure, "structure name")->required();
    cmd_points->add_option("--q", q_value, "evaluate at a prime power q");

    app.add_subcommand("octonion-table", "emit the basis multiplication table");

    bool allow_known = false;
    CLI::App* cmd_audit = app.add_subcommand("audit", "cross-validate all ingested tables");
    cmd_audit->add_flag("--allow-known", allow_known,
                        "exit 0 when every finding is a documented discrepancy");

    // Global flags may follow the subcommand, e.g. `enumerate gopel --format json`.
    for (CLI::App* sub : app.get_subcommands(nullptr)) sub->fallthrough();

    try {
        std::vector<const char*> raw;
        raw.push_back("qatlas");
        for (const auto& a : args) raw.push_back(a.c_str());
        app.parse(static_cast<int>(raw.size()), raw.data());
    } catch (const CLI::CallForHelp&) {
        result.out = app.help();
        result.exit_code = 0;
        return result;
    } catch (const CLI::ParseError& e) {
        result.err = std::string(e.what()) + "\n" + app.help();
        result.exit_code = 2;
        return result;
    }

    const Format format = format_name == "json"  ? Format::json
                          : format_name == "csv" ? Format::csv
                                                 : Format::table;

    try {
        std::optional<cohomology::TableSet> storage;
        if (cmd_enumerate->parsed()) {
            result.out = render_enumeration(enumerate_kind(enumerate_kind_name), format);
            return result;
        }
        if (cmd_verify->parsed()) {
            verify::Options voptions;
            voptions.budget = opts.budget;
            const cohomology::TableSet& tables = resolve_tables(opts, storage);
            voptions.tables = &tables;
            std::vector<verify::SuiteResult> suites;
            if (suite_name == "all")
                suites = verify::run_all(voptions);
            else
                suites.push_back(verify::run_suite(suite_name, voptions));
            bool all_pass = false;
            result.out = render_suites(suites, format, all_pass);
            result.exit_code = all_pass ? 0 : 1;
            return result;
        }
        if (cmd_poincare->parsed() || cmd_points->parsed()) {
            const bool is_points = cmd_points->parsed();
            const std::string& name = is_points ? points_structure : poincare_structure;
            auto tag = cohomology::parse_structure(name);
            if (!tag) {
                result.err = "unknown structure '" + name + "'\n";
                result.exit_code = 2;
                return result;
            }
            const cohomology::TableSet& tables = resolve_tables(opts, storage);
            const cohomology::IntPolynomial computed =
                is_points ? cohomology::point_count(tables, *tag)
                          : cohomology::poincare(tables, *tag);
            const cohomology::IntPolynomial printed = is_points
                                                          ? tables.printed.at(*tag).point_count
                                                          : tables.printed.at(*tag).poincare;
            std::optional<long long> q, value;
            if (is_points && q_value >= 0) {
                q = q_value;
                value = computed.evaluate(q_value);
            }
            result.out = render_polynomial(is_points ? "points" : "poincare",
                                           cohomology::structure_name(*tag), computed, printed,
                                           format, q, value);
            return result;
        }
        if (app.get_subcommand("octonion-table")->parsed()) {
            result.out = render_octonion_table(format);
            return result;
        }
        if (cmd_audit->parsed()) {
            const cohomology::TableSet& tables = resolve_tables(opts, storage);
            const cohomology::AuditReport report = cohomology::audit(tables);
            result.out = render_audit(report, format, allow_known, result.exit_code);
            return result;
        }
        result.err = "no subcommand given\n" + app.help();
        result.exit_code = 2;
        return result;
    } catch (const cohomology::LoadError& e) {
        result.err = std::string("data load error: ") + e.what() + "\n";
        result.exit_code = 2;
        return result;
    } catch (const std::exception& e) {
        result.err = std::string("error: ") + e.what() + "\n";
        result.exit_code = 2;
        return result;
    }
}

}  // namespace qatlas::cli
