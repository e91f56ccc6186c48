#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

// Ingestion of the printed multiplicity tables, Poincaré polynomials by
// permutation-character column sums, finite-field point-count polynomials,
// and the consistency auditor over all ingested data.
//
// The tables are taken in verbatim, typos included; the auditor reports
// contradictions but never repairs them.

namespace qatlas::cohomology {

struct LoadError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Exact integer polynomial in one variable, coefficients ascending by degree
// with the leading coefficient stored explicitly (trailing zeros trimmed).
struct IntPolynomial {
    char variable = 't';
    std::vector<long long> coefficients;

    [[nodiscard]] int degree() const { return static_cast<int>(coefficients.size()) - 1; }
    [[nodiscard]] long long coeff(int i) const {
        return i >= 0 && i < static_cast<int>(coefficients.size()) ? coefficients[i] : 0;
    }
    void trim();

    /// Exact evaluation (wide intermediate; throws on int64 overflow).
    [[nodiscard]] long long evaluate(long long x) const;

    /// "1 + t^5 + 2t^6" for t (ascending), "q^6 - q + 2" for q (descending).
    [[nodiscard]] std::string pretty() const;

    [[nodiscard]] bool same_coefficients(const IntPolynomial& o) const {
        return coefficients == o.coefficients;
    }
};

IntPolynomial make_polynomial(char variable, std::vector<long long> ascending_coefficients);

/// Degree of an irreducible from its label: the numeral of a phi-label, or
/// the hook-length degree of a partition label such as "s_{4,2,1}".
long long label_degree(const std::string& name);

/// Parses "s_7", "s_{5,1^2}", ... into the partition parts.
std::vector<int> parse_partition_label(const std::string& name);

/// Hook length rule: n! divided by the product of all hook lengths.
long long hook_length_degree(const std::vector<int>& partition);

struct IrreducibleLabel {
    std::string name;
    long long degree = 0;
};

enum class TableTag { sp6_level2, sp6_btg_level2, s7_level2 };

struct CohomologyTable {
    TableTag tag{};
    std::string name;
    std::vector<IrreducibleLabel> cols;
    std::array<std::vector<long long>, 7> mult;  // rows H0..H6

    [[nodiscard]] long long multiplicity(int row, const std::string& label) const;
    /// Total dimension of H^row: sum of multiplicity times degree.
    [[nodiscard]] long long dimension(int row) const;
};

enum class StructureTag {
    bitangent,
    octad,
    aronhold,
    steiner,
    riemann_dickson,
    gopel,
    syzygetic,
    azygetic,
    ennead,
};

inline constexpr std::array<StructureTag, 9> kAllStructures = {
    StructureTag::bitangent, StructureTag::octad,     StructureTag::aronhold,
    StructureTag::steiner,   StructureTag::riemann_dickson, StructureTag::gopel,
    StructureTag::syzygetic, StructureTag::azygetic,  StructureTag::ennead,
};

std::string structure_name(StructureTag tag);
/// Accepts the canonical name and common short aliases; empty optional if unknown.
std::optional<StructureTag> parse_structure(const std::string& name);

/// The structure counts of the summary table (the index of each stabilizer).
long long table1_index(StructureTag tag);

struct StructureCharacter {
    StructureTag tag{};
    std::vector<std::string> constituents;  // multiplicity-free
    long long index = 0;
};

struct PrintedPolynomials {
    StructureTag tag{};
    IntPolynomial poincare;     // in t
    IntPolynomial point_count;  // in q
};

struct TableSet {
    CohomologyTable sp6_level2;
    CohomologyTable sp6_btg_level2;
    CohomologyTable s7_level2;
    std::map<StructureTag, StructureCharacter> characters;
    std::map<StructureTag, PrintedPolynomials> printed;
};

/// Loads and validates the five data documents from a directory.
TableSet load_tables(const std::filesystem::path& data_dir);

/// Same documents compiled into the library.
const TableSet& builtin_tables();

/// Poincaré polynomial by Frobenius reciprocity: the t^i coefficient is the
/// sum of the level-two table multiplicities over the structure's character.
IntPolynomial poincare(const TableSet& tables, StructureTag tag);

struct AltRouteReport {
    IntPolynomial bitangent_character, bitangent_column;
    IntPolynomial aronhold_character, aronhold_column;
    bool bitangent_agree = false;
    bool aronhold_agree = false;
};

/// Recomputes the bitangent polynomial from the trivial column of the
/// marked-bitangent table and the Aronhold polynomial from the s_7 column.
AltRouteReport poincare_alt_routes(const TableSet& tables);

/// Point-count polynomial: P(q) = sum_i (-1)^i h^i q^{6-i}.
IntPolynomial point_count(const TableSet& tables, StructureTag tag);

struct AuditItem {
    std::string id;
    bool finding = false;  // a contradiction between ingested documents
    bool known = false;    // the finding matches a documented discrepancy
    std::string detail;
};

struct AuditReport {
    std::vector<AuditItem> items;
    [[nodiscard]] bool has_findings() const;
    [[nodiscard]] bool has_unknown_findings() const;
};

/// Full cross-validation: degree sums against the summary-table indices,
/// dimension consistency of the two level-two tables, the alternate-route
/// agreements, pair ranks against constituent counts, and all eighteen
/// polynomial comparisons against the printed tables.
AuditReport audit(const TableSet& tables);

}  // namespace qatlas::cohomology
