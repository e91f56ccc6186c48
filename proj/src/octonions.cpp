#include "qatlas/octonions.hpp"

#include <random>
#include <sstream>
#include <stdexcept>

namespace qatlas::octonions {

const std::array<OrientedLine, 7>& oriented_fano_lines() {
    // Circle (e1,e2,e3), triangle sides (e6,e1,e7), (e7,e2,e5), (e5,e3,e6),
    // medians through the centre e4: (e1,e4,e5), (e2,e4,e6), (e3,e4,e7).
    static const std::array<OrientedLine, 7> lines = {{
        {1, 2, 3},
        {6, 1, 7},
        {7, 2, 5},
        {5, 3, 6},
        {1, 4, 5},
        {2, 4, 6},
        {3, 4, 7},
    }};
    return lines;
}

Table generate_table(std::span<const OrientedLine, 7> lines) {
    // successor[x][y] = 1 when y follows x on the oriented line through them.
    std::array<std::array<int, 8>, 8> forward{};
    std::array<std::array<int, 8>, 8> covered{};
    for (const OrientedLine& line : lines) {
        for (int k = 0; k < 3; ++k) {
            unsigned a = line[k], b = line[(k + 1) % 3];
            if (a == 0 || a > 7 || b == 0 || b > 7 || (a ^ b) != line[(k + 2) % 3])
                throw std::invalid_argument("generate_table: not a line of the Fano plane");
            forward[a][b] = 1;
            covered[a][b] = covered[b][a] = 1;
        }
    }
    for (unsigned x = 1; x < 8; ++x)
        for (unsigned y = 1; y < 8; ++y)
            if (x != y && !covered[x][y])
                throw std::invalid_argument("generate_table: lines do not cover all pairs");

    Table t{};
    for (unsigned x = 0; x < 8; ++x)
        for (unsigned y = 0; y < 8; ++y) {
            SignedBasisProduct p;
            p.label = x ^ y;
            if (x == 0 || y == 0)
                p.sign = 1;
            else if (x == y)
                p.sign = -1;  // imaginary units square to minus the identity
            else
                p.sign = forward[x][y] ? 1 : -1;
            t[x][y] = p;
        }
    return t;
}

const Table& reference_table() {
    // Sign matrix of the printed Cayley-Graves table; labels are always the
    // GF(2)^3 sum of the factor labels. The print shows e7*e1 = +e6, which
    // contradicts its own e1*e7 = +e6 cell (off-diagonal products of
    // imaginary units anticommute) and the other five printed cells of the
    // line {e1,e6,e7}; that one cell is stored with the minus sign instead.
    static const Table table = [] {
        constexpr std::array<std::array<int, 8>, 8> signs = {{
            {+1, +1, +1, +1, +1, +1, +1, +1},
            {+1, -1, +1, -1, +1, -1, -1, +1},
            {+1, -1, -1, +1, +1, +1, -1, -1},
            {+1, +1, -1, -1, +1, -1, +1, -1},
            {+1, -1, -1, -1, -1, +1, +1, +1},
            {+1, +1, -1, +1, -1, -1, -1, +1},
            {+1, +1, +1, -1, -1, +1, -1, -1},
            {+1, -1, +1, +1, -1, -1, +1, -1},
        }};
        Table t{};
        for (unsigned x = 0; x < 8; ++x)
            for (unsigned y = 0; y < 8; ++y) t[x][y] = {signs[x][y], x ^ y};
        return t;
    }();
    return table;
}

TableValidation validate_table() {
    const Table generated = generate_table(oriented_fano_lines());
    const Table& ref = reference_table();
    for (int x = 0; x < 8; ++x)
        for (int y = 0; y < 8; ++y)
            if (generated[x][y] != ref[x][y]) return {false, x, y};
    return {};
}

const Table& full_table() {
    static const Table table = [] {
        TableValidation v = validate_table();
        if (!v.ok) {
            std::ostringstream msg;
            msg << "octonion table validation failed at cell (e" << v.row << ", e" << v.col << ")";
            throw std::logic_error(msg.str());
        }
        return generate_table(oriented_fano_lines());
    }();
    return table;
}

SignedBasisProduct multiply(unsigned x, unsigned y) {
    if (x > 7 || y > 7) throw std::invalid_argument("octonions::multiply: labels must be 0..7");
    return full_table()[x][y];
}

Octonion multiply(const Octonion& a, const Octonion& b) {
    const Table& t = full_table();
    Octonion out{};
    for (unsigned i = 0; i < 8; ++i) {
        if (a[i] == 0) continue;
        for (unsigned j = 0; j < 8; ++j) {
            if (b[j] == 0) continue;
            const SignedBasisProduct p = t[i][j];
            out[p.label] += p.sign * a[i] * b[j];
        }
    }
    return out;
}

long long norm2(const Octonion& a) {
    long long n = 0;
    for (long long c : a) n += c * c;
    return n;
}

namespace {

Octonion unit(unsigned i) {
    Octonion o{};
    o[i] = 1;
    return o;
}

std::string format_signed_unit(const Octonion& o) {
    for (unsigned i = 0; i < 8; ++i) {
        if (o[i] == 1) return "e" + std::to_string(i);
        if (o[i] == -1) return "-e" + std::to_string(i);
    }
    return "0";
}

}  // namespace

IdentityReport identity_checks(int norm_trials, std::uint64_t seed) {
    IdentityReport report;
    report.table_matches_reference = validate_table().ok;

    report.alternative_left = report.alternative_right = true;
    for (unsigned x = 0; x < 8; ++x)
        for (unsigned y = 0; y < 8; ++y) {
            Octonion ex = unit(x), ey = unit(y);
            if (multiply(ex, multiply(ex, ey)) != multiply(multiply(ex, ex), ey))
                report.alternative_left = false;
            if (multiply(multiply(ey, ex), ex) != multiply(ey, multiply(ex, ex)))
                report.alternative_right = false;
        }

    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long long> coeff(-9, 9);
    report.norm_multiplicative = true;
    report.norm_trials = norm_trials;
    for (int trial = 0; trial < norm_trials; ++trial) {
        Octonion a{}, b{};
        for (int i = 0; i < 8; ++i) {
            a[i] = coeff(rng);
            b[i] = coeff(rng);
        }
        if (norm2(multiply(a, b)) != norm2(a) * norm2(b)) {
            report.norm_multiplicative = false;
            break;
        }
    }

    Octonion lhs = multiply(multiply(unit(1), unit(2)), unit(4));
    Octonion rhs = multiply(unit(1), multiply(unit(2), unit(4)));
    report.nonassociativity_witnessed = (lhs != rhs);
    report.witness = "(e1 e2) e4 = " + format_signed_unit(lhs) +
                     " but e1 (e2 e4) = " + format_signed_unit(rhs);
    return report;
}

}  // namespace qatlas::octonions
