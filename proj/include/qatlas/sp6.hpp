#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "qatlas/f2core.hpp"
#include "qatlas/structures.hpp"

// The symplectic group Sp(6,F2): the 63 transvection generators, breadth-first
// closure of the full group, the actions on every structure family, and
// orbit/stabilizer and pair-orbit (rank) computations driven purely by the
// generators.

namespace qatlas::sp6 {

using f2core::Subspace;
using f2core::Theta;
using f2core::Vec;

// A GF(2)-linear map on the 64-element space, packed column-major: column j
// (the image of e_{j+1}) occupies bits [6j, 6j+6).
class SymplecticMap {
public:
    constexpr SymplecticMap() : cols_(kIdentityCode) {}

    static constexpr SymplecticMap from_code(std::uint64_t code) { return SymplecticMap(code); }
    static SymplecticMap from_columns(const std::array<Vec, 6>& cols);

    [[nodiscard]] constexpr std::uint64_t code() const { return cols_; }

    [[nodiscard]] constexpr Vec column(int j) const {
        return Vec(unsigned(cols_ >> (6 * j)) & 63u);
    }

    [[nodiscard]] constexpr Vec apply(Vec v) const {
        unsigned x = v.code(), y = 0;
        std::uint64_t c = cols_;
        while (x) {
            if (x & 1u) y ^= unsigned(c) & 63u;
            x >>= 1;
            c >>= 6;
        }
        return Vec(y);
    }

    /// Composition: (a * b)(x) = a(b(x)).
    friend constexpr SymplecticMap operator*(const SymplecticMap& a, const SymplecticMap& b) {
        std::uint64_t out = 0;
        for (int j = 0; j < 6; ++j)
            out |= std::uint64_t(a.apply(b.column(j)).code()) << (6 * j);
        return SymplecticMap(out);
    }

    [[nodiscard]] bool preserves_pairing() const;
    [[nodiscard]] constexpr bool is_identity() const { return cols_ == kIdentityCode; }

    friend constexpr auto operator<=>(const SymplecticMap&, const SymplecticMap&) = default;

private:
    constexpr explicit SymplecticMap(std::uint64_t code) : cols_(code) {}

    static constexpr std::uint64_t kIdentityCode =
        1ull | (2ull << 6) | (4ull << 12) | (8ull << 18) | (16ull << 24) | (32ull << 30);

    std::uint64_t cols_;
};

/// The symplectic transvection x -> x + <x,u>u; u must be nonzero.
SymplecticMap transvection(Vec u);

/// All 63 transvections, by ascending code of u.
const std::vector<SymplecticMap>& transvection_generators();

/// Thrown when the configured closure element budget is exceeded.
struct ResourceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

class Group {
public:
    explicit Group(std::vector<SymplecticMap> elements) : elements_(std::move(elements)) {}
    [[nodiscard]] std::uint64_t order() const { return elements_.size(); }
    [[nodiscard]] const std::vector<SymplecticMap>& elements() const { return elements_; }

private:
    std::vector<SymplecticMap> elements_;  // deterministic discovery order
};

/// Breadth-first closure of the transvections under composition.
Group group_closure(std::uint64_t budget = 2'000'000);

enum class ActionKind {
    vector,
    odd_theta,
    even_theta,
    steiner,
    gopel,
    isotropic_plane,
    nonisotropic_plane,
    tetrad,
    heptad,
};

std::string action_kind_name(ActionKind kind);

// Actions on the structure families. The theta action transports the shift:
// the image of theta_w under g is theta_{g w + c(g)} where c(g) is the unique
// vector with <c(g), v> = q0(g^{-1} v) + q0(v) for all v.
Vec act(const SymplecticMap& g, Vec v);
Theta act(const SymplecticMap& g, Theta t);
Subspace act(const SymplecticMap& g, const Subspace& s);
structures::SteinerComplex act(const SymplecticMap& g, const structures::SteinerComplex& sc);
structures::SyzygeticTetrad act(const SymplecticMap& g, const structures::SyzygeticTetrad& t);
structures::GopelSubset act(const SymplecticMap& g, const structures::GopelSubset& gs);
structures::AzygeticTriad act(const SymplecticMap& g, const structures::AzygeticTriad& at);
structures::AronholdHeptad act(const SymplecticMap& g, const structures::AronholdHeptad& h);

/// Canonical packed keys of the full structure set for a kind, sorted.
const std::vector<std::uint64_t>& canonical_set(ActionKind kind);

/// Image of a packed structure key under one transvection generator (0..62).
std::uint64_t act_on_key(ActionKind kind, int generator_index, std::uint64_t key);

struct OrbitReport {
    ActionKind kind;
    std::uint64_t orbit_size = 0;
    std::uint64_t stabilizer_order = 0;
    std::uint64_t enumerated_count = 0;  // size of the structures-module set
    bool transitive = false;             // orbit coincides with that set
};

/// Generator-BFS orbit of the canonical representative, with the stabilizer
/// order obtained by exact division of the group order.
OrbitReport orbit_and_stabilizer_order(ActionKind kind, std::uint64_t group_order);

/// Number of orbits on ordered pairs X x X (diagonal included). Requires the
/// action on X to be transitive.
int pair_rank(ActionKind kind);

}  // namespace qatlas::sp6
