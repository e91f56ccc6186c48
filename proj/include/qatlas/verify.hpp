#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "qatlas/cohomology.hpp"

// Named check suites mirroring the acceptance criteria. The CLI `verify`
// subcommand, the acceptance runner and the tests all drive these.

namespace qatlas::verify {

struct Options {
    std::uint64_t budget = 2'000'000;
    const cohomology::TableSet* tables = nullptr;  // builtin when null

    [[nodiscard]] const cohomology::TableSet& table_set() const {
        return tables ? *tables : cohomology::builtin_tables();
    }
};

struct Check {
    std::string name;
    bool pass = false;
    std::string detail;
    std::map<std::string, long long> values;  // extra numeric fields for JSON output
};

struct SuiteResult {
    std::string suite;
    std::vector<Check> checks;

    [[nodiscard]] bool pass() const;
};

SuiteResult counts_suite();
SuiteResult stabilizers_suite(const Options& options);
SuiteResult ranks_suite(const Options& options);
SuiteResult study_suite();
SuiteResult octonions_suite();
SuiteResult cohomology_suite(const Options& options);

/// Checks that the auditor reproduces the documented findings and nothing else.
SuiteResult audit_suite(const Options& options);

/// The suite names accepted by `verify --suite` (excludes the audit suite,
/// which runs through the `audit` subcommand and as part of `all`).
const std::vector<std::string>& selectable_suites();

SuiteResult run_suite(const std::string& name, const Options& options);

/// Every suite, in fixed order, audit behaviour included.
std::vector<SuiteResult> run_all(const Options& options);

}  // namespace qatlas::verify
