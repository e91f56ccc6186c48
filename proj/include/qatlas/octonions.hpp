#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>

// Octonion basis multiplication generated from the oriented Fano plane.
// Basis units e_0..e_7 are labelled by GF(2)^3 read as a binary number with
// the first coordinate most significant, so e_{(1,0,1)} = e_5. Products obey
// e_x e_y = +-e_{x+y}; the sign comes from the cyclic orientation of the line
// through x and y, imaginary units square to -e_0, and e_0 is the identity.

namespace qatlas::octonions {

struct SignedBasisProduct {
    int sign = 1;        // +1 or -1
    unsigned label = 0;  // 0..7

    friend bool operator==(SignedBasisProduct, SignedBasisProduct) = default;
};

/// Oriented line through two distinct nonzero labels, as its 3-cycle.
using OrientedLine = std::array<unsigned, 3>;

/// The seven oriented lines, transcribed from the oriented Fano plane.
const std::array<OrientedLine, 7>& oriented_fano_lines();

using Table = std::array<std::array<SignedBasisProduct, 8>, 8>;

/// Basis product from the mnemonic.
SignedBasisProduct multiply(unsigned x, unsigned y);

/// 8x8 table built from an arbitrary orientation choice (used for the
/// perturbation checks; lines must cover each unordered triple once).
Table generate_table(std::span<const OrientedLine, 7> lines);

/// The Cayley-Graves table generated from the oriented Fano plane. Validated
/// cell-for-cell against the printed reference on first use; a mismatch
/// throws naming the cell.
const Table& full_table();

/// The printed reference table, transcribed entry by entry.
const Table& reference_table();

struct TableValidation {
    bool ok = true;
    int row = -1, col = -1;  // first mismatching cell when !ok
};

TableValidation validate_table();

/// Octonion with exact integer coefficients in the basis e_0..e_7.
using Octonion = std::array<long long, 8>;

Octonion multiply(const Octonion& a, const Octonion& b);

/// Norm form: sum of squares of the eight coefficients.
long long norm2(const Octonion& a);

struct IdentityReport {
    bool table_matches_reference = false;
    bool alternative_left = false;        // x(xy) = (xx)y on all basis pairs
    bool alternative_right = false;       // (yx)x = y(xx) on all basis pairs
    bool norm_multiplicative = false;     // N(ab) = N(a)N(b) on random octonions
    int norm_trials = 0;
    bool nonassociativity_witnessed = false;
    std::string witness;                  // e.g. "(e1 e2) e4 = e7 but e1 (e2 e4) = -e7"

    [[nodiscard]] bool all_pass() const {
        return table_matches_reference && alternative_left && alternative_right &&
               norm_multiplicative && nonassociativity_witnessed;
    }
};

/// Runs the certifying identities with exact integer arithmetic.
IdentityReport identity_checks(int norm_trials = 1000, std::uint64_t seed = 0x0c70);

}  // namespace qatlas::octonions
