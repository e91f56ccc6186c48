#pragma once

#include <array>
#include <bit>
#include <compare>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

// Exact linear algebra over GF(2) for the 6-dimensional symplectic space.
//
// Conventions (fixed across the whole library):
//   * a vector (v1,...,v6) is encoded as an integer 0..63 with v_i in bit i-1;
//   * the hyperbolic pairs of the basis are (1,4), (2,5), (3,6), so the
//     symplectic pairing is <u,v> = u1v4+u2v5+u3v6+u4v1+u5v2+u6v3 mod 2;
//   * the reference even quadratic form is q0(v) = v1v4+v2v5+v3v6;
//   * a theta characteristic is the quadratic refinement
//     theta_w(v) = q0(v) + <w,v>, stored by its shift vector w.

namespace qatlas::f2core {

inline constexpr unsigned kDim = 6;
inline constexpr unsigned kNumVectors = 64;

class Vec {
public:
    constexpr Vec() = default;

    constexpr explicit Vec(unsigned code) : code_(static_cast<std::uint8_t>(code)) {
        if (code >= kNumVectors)
            throw std::invalid_argument("f2core::Vec: code must be in 0..63");
    }

    [[nodiscard]] constexpr unsigned code() const { return code_; }

    /// Coordinate v_i for i in 1..6.
    [[nodiscard]] constexpr int coord(int i) const { return (code_ >> (i - 1)) & 1; }

    [[nodiscard]] constexpr bool is_zero() const { return code_ == 0; }

    friend constexpr Vec operator+(Vec a, Vec b) { return Vec(unsigned(a.code_ ^ b.code_)); }

    friend constexpr auto operator<=>(Vec, Vec) = default;

private:
    std::uint8_t code_ = 0;
};

/// Basis vector e_i, i in 1..6.
constexpr Vec basis_vector(int i) {
    if (i < 1 || i > int(kDim)) throw std::invalid_argument("basis_vector: index must be in 1..6");
    return Vec(1u << (i - 1));
}

constexpr int parity(unsigned x) { return std::popcount(x) & 1; }

/// The symplectic pairing <u,v>. Alternating, bilinear, nondegenerate.
constexpr int pairing(Vec u, Vec v) {
    unsigned swapped = ((v.code() >> 3) | (v.code() << 3)) & 63u;
    return parity(u.code() & swapped);
}

/// Reference even quadratic form q0(v) = v1v4 + v2v5 + v3v6.
constexpr int q0(Vec v) { return parity(v.code() & (v.code() >> 3)); }

class Theta {
public:
    constexpr Theta() = default;
    constexpr explicit Theta(Vec shift) : shift_(shift) {}

    [[nodiscard]] constexpr Vec shift() const { return shift_; }
    [[nodiscard]] constexpr unsigned code() const { return shift_.code(); }

    friend constexpr auto operator<=>(Theta, Theta) = default;

private:
    Vec shift_;
};

/// Arf invariant: 1 for odd, 0 for even. Equals q0 of the shift.
constexpr int arf(Theta t) { return q0(t.shift()); }

constexpr bool is_odd(Theta t) { return arf(t) == 1; }

/// Value of the quadratic form at v; agrees with arf(theta+v)+arf(theta).
constexpr int theta_eval(Theta t, Vec v) { return q0(v) ^ pairing(t.shift(), v); }

/// Torsor action of the 2-torsion on theta characteristics.
constexpr Theta theta_translate(Theta t, Vec v) { return Theta(t.shift() + v); }

/// Pointwise sum of three quadratic refinements, again a refinement.
constexpr Theta theta_sum3(Theta a, Theta b, Theta c) {
    return Theta(a.shift() + b.shift() + c.shift());
}

// A linear subspace, held as its reduced echelon basis (pivot at the lowest
// set bit of each row, pivot bits distinct and cleared from all other rows).
// The echelon basis is the unique canonical representative; rows are stored
// in ascending code order.
class Subspace {
public:
    Subspace() = default;

    /// Canonical subspace spanned by arbitrary generators.
    static Subspace span(std::span<const Vec> generators);
    static Subspace span(std::initializer_list<Vec> generators);

    [[nodiscard]] int dim() const { return static_cast<int>(basis_.size()); }
    [[nodiscard]] const std::vector<Vec>& basis() const { return basis_; }

    [[nodiscard]] bool contains(Vec v) const;
    [[nodiscard]] bool is_isotropic() const;

    /// All 2^dim members in ascending code order.
    [[nodiscard]] std::vector<Vec> elements() const;
    [[nodiscard]] std::vector<Vec> nonzero_elements() const;

    /// Basis codes packed into one integer, 6 bits per row; total order key.
    [[nodiscard]] std::uint64_t key() const;

    friend bool operator==(const Subspace& a, const Subspace& b) { return a.basis_ == b.basis_; }
    friend std::strong_ordering operator<=>(const Subspace& a, const Subspace& b) {
        return a.key() <=> b.key();
    }

private:
    std::vector<Vec> basis_;
};

/// All k-dimensional subspaces (optionally only totally isotropic ones),
/// each exactly once, sorted by canonical basis key. k must be in 0..6.
std::vector<Subspace> subspaces(int k, bool isotropic_only = false);

}  // namespace qatlas::f2core
