#pragma once

#include <array>
#include <utility>
#include <vector>

#include "qatlas/f2core.hpp"

// The classical structures attached to a plane quartic, realized inside the
// symplectic GF(2) model: theta characteristics by parity, Steiner complexes,
// syzygetic tetrads and their isotropic planes, Göpel subsets, azygetic
// triads, Aronhold heptads and the duad labeling of the 28 odd thetas.
//
// All enumerations are canonical: structures are represented by sorted code
// tuples and lists are emitted in ascending lexicographic order.

namespace qatlas::structures {

using f2core::Subspace;
using f2core::Theta;
using f2core::Vec;

/// Thetas with the given Arf parity (1 = odd, 0 = even), ascending by shift code.
std::vector<Theta> thetas_by_parity(int parity);
std::vector<Theta> odd_thetas();
std::vector<Theta> even_thetas();

// The 12 odd thetas vanishing on a fixed nonzero vector, in their natural
// six translation pairs {theta, theta+key}.
struct SteinerComplex {
    Vec key;
    std::array<Theta, 12> members;                    // ascending code
    std::array<std::pair<Theta, Theta>, 6> pairs;     // each pair sorted, list sorted
};

/// Steiner complex of v; v must be nonzero.
SteinerComplex steiner_complex(Vec v);

/// All 63 complexes, ascending by key code.
std::vector<SteinerComplex> steiner_complexes();

enum class TriadType { syzygetic, azygetic };

/// Classifies a triple of pairwise distinct odd thetas by its Arf sum.
TriadType triad_type(Theta t1, Theta t2, Theta t3);

struct SyzygeticTetrad {
    std::array<Theta, 4> members;  // ascending code

    friend auto operator<=>(const SyzygeticTetrad&, const SyzygeticTetrad&) = default;
};

/// All 315 syzygetic tetrads, sorted.
std::vector<SyzygeticTetrad> syzygetic_tetrads();

/// The isotropic plane of shift differences of a tetrad (base-independent).
Subspace tetrad_to_plane(const SyzygeticTetrad& t);

/// The unique tetrad whose difference plane is the given isotropic plane.
SyzygeticTetrad plane_to_tetrad(const Subspace& plane);

struct GopelSubset {
    Subspace subspace;          // maximal isotropic, dim 3
    std::array<Vec, 7> points;  // its nonzero vectors, ascending

    friend bool operator==(const GopelSubset& a, const GopelSubset& b) {
        return a.points == b.points;
    }
};

/// All 135 Göpel subsets, sorted by point tuple.
std::vector<GopelSubset> gopel_subsets();

// Three mutually azygetic Steiner complexes; their keys are the nonzero
// vectors of a non-isotropic plane.
struct AzygeticTriad {
    Subspace plane;
    std::array<Vec, 3> keys;  // ascending; pairwise pairing 1
    [[nodiscard]] std::array<SteinerComplex, 3> complexes() const;
};

/// All 336 azygetic triads, sorted by key tuple.
std::vector<AzygeticTriad> azygetic_triads();

struct AronholdHeptad {
    std::array<Theta, 7> members;  // ascending code

    friend auto operator<=>(const AronholdHeptad&, const AronholdHeptad&) = default;
};

/// All 288 Aronhold heptads, found by pruned depth-first extension, sorted.
std::vector<AronholdHeptad> aronhold_heptads();

/// The even theta obtained as the sum of the seven member forms.
Theta heptad_even_theta(const AronholdHeptad& h);

/// Index of the duad {i,j}, 1 <= i < j <= 8, into a 28-slot array.
int duad_index(int i, int j);

// Labeling of the 28 odd thetas by the duads of {1..8}: {i,8} carries the
// i-th heptad member and {i,j} with j <= 7 carries theta0 + theta_i + theta_j
// where theta0 is the associated even theta.
struct OctadLabeling {
    std::array<Theta, 28> labels;  // indexed by duad_index
    [[nodiscard]] Theta at(int i, int j) const { return labels[duad_index(i, j)]; }
};

OctadLabeling octad_labeling(const AronholdHeptad& h);
/// Same formula applied to an explicitly ordered heptad.
OctadLabeling octad_labeling(const std::array<Theta, 7>& ordered_members);

}  // namespace qatlas::structures
