#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "qatlas/f2core.hpp"

// The quadric S(x) = sum_{1<=i<j<=8} x_i x_j on the 255 points of the
// projective 7-space over GF(2): point/line census, the polar form, ennead
// enumeration as 9-cliques of the non-conjugacy graph, the order-9! group of
// coordinate changes preserving S, and the projective semilinear group of the
// 9-point line over the 8-element field.

namespace qatlas::study {

// A point of the projective space, encoded as 1..255 with x_i in bit i-1.
class StudyPoint {
public:
    constexpr StudyPoint() = default;
    constexpr explicit StudyPoint(unsigned code) : code_(static_cast<std::uint8_t>(code)) {
        if (code == 0 || code > 255)
            throw std::invalid_argument("StudyPoint: code must be in 1..255");
    }

    [[nodiscard]] constexpr unsigned code() const { return code_; }
    [[nodiscard]] constexpr int coord(int i) const { return (code_ >> (i - 1)) & 1; }

    friend constexpr auto operator<=>(StudyPoint, StudyPoint) = default;

private:
    std::uint8_t code_ = 1;
};

/// S evaluated on a raw coordinate word (0..255 allowed; S(0) = 0).
int quadric_form(unsigned code);

/// S(P): 0 on the quadric, 1 off it.
int quadric_value(StudyPoint p);

/// Symmetric polarization S(x+y)+S(x)+S(y) on raw words; bilinear, total.
int polar_form(unsigned x, unsigned y);

/// Polar form of two distinct points; 0 means conjugate.
int polar(StudyPoint p, StudyPoint q);

/// The 135 points of V(S), ascending by code.
std::vector<StudyPoint> quadric_points();

/// The 120 points off the quadric, ascending by code.
std::vector<StudyPoint> off_quadric_points();

struct LineClassCounts {
    int n0 = 0, n1 = 0, n2 = 0;  // lines meeting V(S) in 0, 1, 2 points
};

/// Classifies the 127 lines through an off-quadric point.
LineClassCounts classify_lines_through(StudyPoint p);

struct Ennead {
    std::array<StudyPoint, 9> points;  // ascending code

    friend auto operator<=>(const Ennead&, const Ennead&) = default;
};

/// All 960 enneads (maximal 9-cliques of the polar-1 graph on V(S)),
/// in ascending lexicographic order.
std::vector<Ennead> enneads();

/// The ennead of the eight coordinate points plus the all-ones point.
Ennead standard_ennead();

bool is_maximal_clique(const Ennead& e);

// Linear maps on the 8-dimensional space, packed column-major in a 64-bit
// word (column j in bits [8j, 8j+8)).
class LinearMap8 {
public:
    constexpr LinearMap8() : cols_(kIdentityCode) {}
    static constexpr LinearMap8 from_code(std::uint64_t code) { return LinearMap8(code); }
    static LinearMap8 from_columns(const std::array<unsigned, 8>& cols);

    [[nodiscard]] constexpr std::uint64_t code() const { return cols_; }
    [[nodiscard]] constexpr unsigned column(int j) const {
        return unsigned(cols_ >> (8 * j)) & 255u;
    }

    [[nodiscard]] constexpr unsigned apply(unsigned x) const {
        unsigned y = 0;
        std::uint64_t c = cols_;
        while (x) {
            if (x & 1u) y ^= unsigned(c) & 255u;
            x >>= 1;
            c >>= 8;
        }
        return y;
    }

    friend constexpr LinearMap8 operator*(const LinearMap8& a, const LinearMap8& b) {
        std::uint64_t out = 0;
        for (int j = 0; j < 8; ++j)
            out |= std::uint64_t(a.apply(b.column(j))) << (8 * j);
        return LinearMap8(out);
    }

    [[nodiscard]] bool preserves_quadric() const;

    friend constexpr auto operator<=>(const LinearMap8&, const LinearMap8&) = default;

private:
    constexpr explicit LinearMap8(std::uint64_t code) : cols_(code) {}

    static constexpr std::uint64_t kIdentityCode = [] {
        std::uint64_t c = 0;
        for (int j = 0; j < 8; ++j) c |= std::uint64_t(1u << j) << (8 * j);
        return c;
    }();

    std::uint64_t cols_;
};

class LinearGroup8 {
public:
    explicit LinearGroup8(std::vector<LinearMap8> elements) : elements_(std::move(elements)) {}
    [[nodiscard]] std::uint64_t order() const { return elements_.size(); }
    [[nodiscard]] const std::vector<LinearMap8>& elements() const { return elements_; }
    [[nodiscard]] bool all_elements_preserve_quadric() const;

private:
    std::vector<LinearMap8> elements_;
};

// Closure of the coordinate transpositions together with the map fixing
// e1..e7 and sending e8 to e1+...+e8. Every generator is checked to preserve
// S on all 256 words; the closure has order 9!.
LinearGroup8 s9_linear_group();

/// Permutations of the 9 points e1..e8, all-ones induced by the group; the
/// census has exactly 9! distinct members.
std::size_t induced_point_permutation_count(const LinearGroup8& g);

// The projective semilinear group of the projective line over the field with
// 8 elements, acting on its 9 points (labels 0..7 for field elements, 8 for
// the point at infinity).
struct ProjectiveSemilinearGroup {
    std::vector<std::array<std::uint8_t, 9>> perms;  // sorted, distinct
    [[nodiscard]] std::uint64_t order() const { return perms.size(); }
    /// Largest k (up to 4) with a single orbit on ordered distinct k-tuples.
    [[nodiscard]] int transitivity_degree() const;
};

ProjectiveSemilinearGroup pgammal_2_8();

}  // namespace qatlas::study
