#include <doctest.h>

#include <unistd.h>

#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <vector>

#include "qatlas/cohomology.hpp"

using namespace qatlas::cohomology;

namespace {

// Brute-force count of standard Young tableaux: fill 1..n respecting row and
// column order. Independent oracle for the hook length rule.
long long count_syt(const std::vector<int>& partition) {
    const int rows = static_cast<int>(partition.size());
    int n = 0;
    for (int r : partition) n += r;
    std::vector<int> filled(rows, 0);  // cells already placed per row

    auto place = [&](auto&& self, int next) -> long long {
        if (next > n) return 1;
        long long total = 0;
        for (int r = 0; r < rows; ++r) {
            if (filled[r] >= partition[r]) continue;
            if (r > 0 && filled[r - 1] <= filled[r]) continue;  // column order
            ++filled[r];
            total += self(self, next + 1);
            --filled[r];
        }
        return total;
    };
    return place(place, 1);
}

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void spit(const std::filesystem::path& p, const std::string& text) {
    std::ofstream out(p);
    out << text;
}

// Copies the shipped data directory into a temp dir with one textual patch.
std::filesystem::path patched_data_dir(const std::string& file, const std::string& from,
                                       const std::string& to) {
    const std::filesystem::path src = QATLAS_SOURCE_DATA_DIR;
    const std::filesystem::path dst =
        std::filesystem::temp_directory_path() / ("qatlas_test_" + file + std::to_string(::getpid()));
    std::filesystem::create_directories(dst);
    for (const auto& entry : std::filesystem::directory_iterator(src)) {
        std::string text = slurp(entry.path());
        if (entry.path().filename() == file) {
            const auto pos = text.find(from);
            REQUIRE(pos != std::string::npos);
            text = text.substr(0, pos) + to + text.substr(pos + from.size());
        }
        spit(dst / entry.path().filename(), text);
    }
    return dst;
}

}  // namespace

TEST_CASE("hook length degrees match the brute-force tableau count") {
    const std::vector<std::vector<int>> partitions = {
        {7},       {6, 1},       {5, 2},       {5, 1, 1},       {4, 3},
        {4, 2, 1}, {4, 1, 1, 1}, {3, 3, 1},    {3, 2, 2},       {3, 2, 1, 1},
        {3, 1, 1, 1, 1}, {2, 2, 2, 1}, {2, 2, 1, 1, 1}, {2, 1, 1, 1, 1, 1}, {1, 1, 1, 1, 1, 1, 1}};
    long long square_sum = 0;
    for (const auto& p : partitions) {
        const long long degree = hook_length_degree(p);
        CHECK(degree == count_syt(p));
        square_sum += degree * degree;
    }
    CHECK(square_sum == 5040);  // sum of squared degrees is the group order
}

TEST_CASE("label parsing and degrees") {
    CHECK(label_degree("phi_84a") == 84);
    CHECK(label_degree("phi_1a") == 1);
    CHECK(label_degree("phi_512a") == 512);
    CHECK(label_degree("s_7") == 1);
    CHECK(label_degree("s_{6,1}") == 6);
    CHECK(label_degree("s_{4,2,1}") == 35);
    CHECK(label_degree("s_{5,1^2}") == 15);
    CHECK(label_degree("s_{3^2,1}") == 21);
    CHECK(label_degree("s_{1^7}") == 1);
    CHECK(parse_partition_label("s_{2^3,1}") == std::vector<int>{2, 2, 2, 1});
    CHECK_THROWS_AS(label_degree("phi_xa"), LoadError);
    CHECK_THROWS_AS(label_degree("tau_3"), LoadError);
    CHECK_THROWS_AS(parse_partition_label("s_{1,2}"), LoadError);
}

TEST_CASE("builtin tables load with the expected spot entries") {
    const TableSet& tables = builtin_tables();
    CHECK(tables.sp6_level2.multiplicity(1, "phi_35b") == 1);
    CHECK(tables.sp6_level2.multiplicity(4, "phi_210b") == 4);
    CHECK(tables.s7_level2.multiplicity(4, "s_7") == 4);
    CHECK(tables.sp6_btg_level2.multiplicity(0, "phi_27a") == 1);
    CHECK(tables.characters.at(StructureTag::ennead).constituents.size() == 6);
    CHECK(tables.characters.at(StructureTag::ennead).index == 960);
}

TEST_CASE("dimensions of the level-two cohomology from all three tables") {
    const TableSet& tables = builtin_tables();
    const long long sp6_dims[7] = {1, 35, 490, 3485, 13174, 24920, 18375};
    for (int i = 0; i < 7; ++i) {
        CHECK(tables.sp6_level2.dimension(i) == sp6_dims[i]);
        // The marked-bitangent space is 28 copies of the level-two space.
        CHECK(tables.sp6_btg_level2.dimension(i) == 28 * sp6_dims[i]);
    }
    // The printed S7 table disagrees at H4 only.
    for (int i = 0; i < 7; ++i) {
        if (i == 4)
            CHECK(tables.s7_level2.dimension(i) == 13162);
        else
            CHECK(tables.s7_level2.dimension(i) == sp6_dims[i]);
    }
}

TEST_CASE("poincare polynomials by the character route") {
    const TableSet& tables = builtin_tables();
    const std::map<StructureTag, std::vector<long long>> expected = {
        {StructureTag::bitangent, {1, 0, 0, 0, 0, 1, 2}},
        {StructureTag::octad, {1, 1, 0, 0, 0, 1, 4}},
        {StructureTag::aronhold, {1, 1, 0, 1, 4, 6, 6}},
        {StructureTag::steiner, {1, 1, 0, 0, 0, 2, 5}},
        {StructureTag::riemann_dickson, {1, 0, 0, 0, 0, 2, 7}},
        {StructureTag::gopel, {1, 1, 0, 0, 0, 2, 11}},
        {StructureTag::syzygetic, {1, 1, 0, 0, 1, 7, 13}},
        {StructureTag::azygetic, {1, 1, 0, 1, 3, 8, 9}},
        {StructureTag::ennead, {1, 0, 0, 3, 11, 15, 16}},  // differs from the print
    };
    for (const auto& [tag, coeffs] : expected) {
        CHECK(poincare(tables, tag).coefficients == coeffs);
        const bool printed_match =
            poincare(tables, tag).same_coefficients(tables.printed.at(tag).poincare);
        CHECK(printed_match == (tag != StructureTag::ennead));
    }
}

TEST_CASE("both alternate routes agree with the character route") {
    const AltRouteReport alt = poincare_alt_routes(builtin_tables());
    CHECK(alt.bitangent_agree);
    CHECK(alt.aronhold_agree);
    CHECK(alt.bitangent_column.coefficients == std::vector<long long>{1, 0, 0, 0, 0, 1, 2});
    CHECK(alt.aronhold_column.coefficients == std::vector<long long>{1, 1, 0, 1, 4, 6, 6});
}

TEST_CASE("point counts by minimal purity") {
    const TableSet& tables = builtin_tables();
    CHECK(point_count(tables, StructureTag::bitangent).pretty() == "q^6 - q + 2");
    CHECK(point_count(tables, StructureTag::azygetic).pretty() ==
          "q^6 - q^5 - q^3 + 3q^2 - 8q + 9");
    CHECK(point_count(tables, StructureTag::ennead).coefficients ==
          std::vector<long long>{16, -15, 11, -3, 0, 0, 1});

    for (StructureTag tag : kAllStructures) {
        const IntPolynomial h = poincare(tables, tag);
        const IntPolynomial p = point_count(tables, tag);
        CHECK(h.coeff(0) == 1);                       // h^0 = 1
        CHECK(p.degree() == 6);
        CHECK(p.coeff(6) == 1);                       // monic of degree 6
        long long alternating = 0;
        for (int i = 0; i <= 6; ++i) alternating += (i % 2 ? -1 : 1) * h.coeff(i);
        CHECK(p.evaluate(1) == alternating);          // Euler characteristic identity
    }
    CHECK(point_count(tables, StructureTag::bitangent).evaluate(3) == 729 - 3 + 2);
}

TEST_CASE("pretty printing follows the two variable conventions") {
    CHECK(make_polynomial('t', {1, 0, 0, 0, 0, 1, 2}).pretty() == "1 + t^5 + 2t^6");
    CHECK(make_polynomial('q', {2, -1, 0, 0, 0, 0, 1}).pretty() == "q^6 - q + 2");
    CHECK(make_polynomial('t', {0}).pretty() == "0");
    CHECK(make_polynomial('t', {0, 1}).pretty() == "t");
    CHECK(make_polynomial('q', {-7, 2}).pretty() == "2q - 7");
}

TEST_CASE("audit reports exactly the three documented findings") {
    const AuditReport report = audit(builtin_tables());
    CHECK(report.has_findings());
    CHECK(!report.has_unknown_findings());
    std::map<std::string, bool> findings;
    for (const auto& item : report.items)
        if (item.finding) findings[item.id] = item.known;
    CHECK(findings ==
          std::map<std::string, bool>{
              {"dimension/H4", true}, {"poincare/ennead", true}, {"points/ennead", true}});
}

TEST_CASE("loading the shipped data directory matches the builtin copy") {
    const TableSet from_disk = load_tables(QATLAS_SOURCE_DATA_DIR);
    const TableSet& builtin = builtin_tables();
    for (int i = 0; i < 7; ++i)
        CHECK(from_disk.sp6_level2.dimension(i) == builtin.sp6_level2.dimension(i));
    for (StructureTag tag : kAllStructures)
        CHECK(poincare(from_disk, tag).coefficients == poincare(builtin, tag).coefficients);
}

TEST_CASE("load errors name the offending file and cell") {
    // A negative multiplicity.
    const auto negative = patched_data_dir("sp6_level2.json",
                                           "[0, 0, 0, 1, 0, 0, 0, 0, 0, 0,  0, 0, 1",
                                           "[0, 0, 0, -1, 0, 0, 0, 0, 0, 0,  0, 0, 1");
    CHECK_THROWS_WITH_AS(load_tables(negative), doctest::Contains("mult[H3][phi_21a]"),
                         LoadError);
    std::filesystem::remove_all(negative);

    // A degree-sum mismatch in a character document.
    const auto bad_index = patched_data_dir("characters.json", "\"index\": 28", "\"index\": 29");
    CHECK_THROWS_WITH_AS(load_tables(bad_index), doctest::Contains("bitangent"), LoadError);
    std::filesystem::remove_all(bad_index);

    // A missing file.
    CHECK_THROWS_AS(load_tables("/nonexistent/qatlas-data"), LoadError);
}
