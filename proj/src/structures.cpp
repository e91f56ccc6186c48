#include "qatlas/structures.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace qatlas::structures {

using f2core::arf;
using f2core::is_odd;
using f2core::pairing;
using f2core::q0;
using f2core::theta_eval;
using f2core::theta_sum3;
using f2core::theta_translate;

std::vector<Theta> thetas_by_parity(int parity) {
    std::vector<Theta> out;
    for (unsigned c = 0; c < f2core::kNumVectors; ++c) {
        Theta t{Vec(c)};
        if (arf(t) == parity) out.push_back(t);
    }
    return out;
}

std::vector<Theta> odd_thetas() { return thetas_by_parity(1); }
std::vector<Theta> even_thetas() { return thetas_by_parity(0); }

SteinerComplex steiner_complex(Vec v) {
    if (v.is_zero())
        throw std::domain_error("steiner_complex: key vector must be nonzero");
    SteinerComplex sc;
    sc.key = v;
    std::size_t n = 0;
    for (Theta t : odd_thetas())
        if (theta_eval(t, v) == 0) {
            if (n >= sc.members.size())
                throw std::logic_error("steiner_complex: more than 12 members");
            sc.members[n++] = t;
        }
    if (n != sc.members.size())
        throw std::logic_error("steiner_complex: fewer than 12 members");

    // theta(v)=0 makes theta and theta+v equal-parity partners; pair them up.
    std::size_t p = 0;
    for (Theta t : sc.members) {
        Theta partner = theta_translate(t, v);
        if (t.code() < partner.code()) sc.pairs[p++] = {t, partner};
    }
    if (p != sc.pairs.size())
        throw std::logic_error("steiner_complex: pairing failed");
    return sc;
}

std::vector<SteinerComplex> steiner_complexes() {
    std::vector<SteinerComplex> out;
    out.reserve(63);
    for (unsigned c = 1; c < f2core::kNumVectors; ++c) out.push_back(steiner_complex(Vec(c)));
    return out;
}

TriadType triad_type(Theta t1, Theta t2, Theta t3) {
    if (!is_odd(t1) || !is_odd(t2) || !is_odd(t3))
        throw std::domain_error("triad_type: all three thetas must be odd");
    if (t1 == t2 || t1 == t3 || t2 == t3)
        throw std::domain_error("triad_type: thetas must be pairwise distinct");
    int s = arf(t1) ^ arf(t2) ^ arf(t3) ^ arf(theta_sum3(t1, t2, t3));
    return s == 1 ? TriadType::azygetic : TriadType::syzygetic;
}

std::vector<SyzygeticTetrad> syzygetic_tetrads() {
    const std::vector<Theta> odds = odd_thetas();
    std::set<std::array<Theta, 4>> found;
    for (std::size_t i = 0; i < odds.size(); ++i)
        for (std::size_t j = i + 1; j < odds.size(); ++j)
            for (std::size_t k = j + 1; k < odds.size(); ++k) {
                Theta fourth = theta_sum3(odds[i], odds[j], odds[k]);
                if (!is_odd(fourth)) continue;
                std::array<Theta, 4> m{odds[i], odds[j], odds[k], fourth};
                std::sort(m.begin(), m.end());
                if (m[0] == m[1] || m[1] == m[2] || m[2] == m[3]) continue;
                found.insert(m);
            }
    std::vector<SyzygeticTetrad> out;
    out.reserve(found.size());
    for (const auto& m : found) out.push_back(SyzygeticTetrad{m});
    return out;
}

Subspace tetrad_to_plane(const SyzygeticTetrad& t) {
    Vec base = t.members[0].shift();
    std::array<Vec, 3> diffs{t.members[1].shift() + base, t.members[2].shift() + base,
                             t.members[3].shift() + base};
    Subspace plane = Subspace::span(std::span<const Vec>(diffs));
    if (plane.dim() != 2 || !plane.is_isotropic())
        throw std::logic_error("tetrad_to_plane: difference set is not an isotropic plane");
    return plane;
}

SyzygeticTetrad plane_to_tetrad(const Subspace& plane) {
    if (plane.dim() != 2)
        throw std::domain_error("plane_to_tetrad: subspace must have dimension 2");
    if (!plane.is_isotropic())
        throw std::domain_error("plane_to_tetrad: subspace must be isotropic");
    const std::vector<Vec> elems = plane.elements();
    for (unsigned c = 0; c < f2core::kNumVectors; ++c) {
        std::array<Theta, 4> m;
        bool all_odd = true;
        for (int i = 0; i < 4; ++i) {
            m[i] = Theta(Vec(c) + elems[i]);
            if (!is_odd(m[i])) { all_odd = false; break; }
        }
        if (!all_odd) continue;
        std::sort(m.begin(), m.end());
        return SyzygeticTetrad{m};
    }
    throw std::logic_error("plane_to_tetrad: no odd coset found");
}

std::vector<GopelSubset> gopel_subsets() {
    std::vector<GopelSubset> out;
    for (const Subspace& s : f2core::subspaces(3, /*isotropic_only=*/true)) {
        GopelSubset g;
        g.subspace = s;
        const std::vector<Vec> nz = s.nonzero_elements();
        std::copy(nz.begin(), nz.end(), g.points.begin());
        out.push_back(g);
    }
    std::sort(out.begin(), out.end(),
              [](const GopelSubset& a, const GopelSubset& b) { return a.points < b.points; });
    return out;
}

std::array<SteinerComplex, 3> AzygeticTriad::complexes() const {
    return {steiner_complex(keys[0]), steiner_complex(keys[1]), steiner_complex(keys[2])};
}

std::vector<AzygeticTriad> azygetic_triads() {
    std::vector<AzygeticTriad> out;
    for (const Subspace& s : f2core::subspaces(2, /*isotropic_only=*/false)) {
        if (s.is_isotropic()) continue;
        AzygeticTriad triad;
        triad.plane = s;
        const std::vector<Vec> nz = s.nonzero_elements();
        std::copy(nz.begin(), nz.end(), triad.keys.begin());
        out.push_back(triad);
    }
    std::sort(out.begin(), out.end(),
              [](const AzygeticTriad& a, const AzygeticTriad& b) { return a.keys < b.keys; });
    return out;
}

std::vector<AronholdHeptad> aronhold_heptads() {
    const std::vector<Theta> odds = odd_thetas();
    std::vector<AronholdHeptad> out;
    std::array<Theta, 7> chosen{};

    // Depth-first extension; a new member must make an even triple sum with
    // every chosen pair, which prunes nearly everything immediately.
    auto extend = [&](auto&& self, int depth, std::size_t next) -> void {
        if (depth == 7) {
            out.push_back(AronholdHeptad{chosen});
            return;
        }
        for (std::size_t i = next; i < odds.size(); ++i) {
            bool ok = true;
            for (int a = 0; a < depth && ok; ++a)
                for (int b = a + 1; b < depth; ++b)
                    if (arf(theta_sum3(chosen[a], chosen[b], odds[i])) != 0) { ok = false; break; }
            if (!ok) continue;
            chosen[depth] = odds[i];
            self(self, depth + 1, i + 1);
        }
    };
    extend(extend, 0, 0);
    return out;
}

namespace {

void validate_heptad(const AronholdHeptad& h) {
    for (int a = 0; a < 7; ++a)
        for (int b = a + 1; b < 7; ++b) {
            if (h.members[a] == h.members[b])
                throw std::domain_error("aronhold heptad: members must be distinct");
            if (!is_odd(h.members[a]) || !is_odd(h.members[b]))
                throw std::domain_error("aronhold heptad: members must be odd");
            for (int c = b + 1; c < 7; ++c)
                if (arf(theta_sum3(h.members[a], h.members[b], h.members[c])) != 0)
                    throw std::domain_error("aronhold heptad: a triple sums to an odd theta");
        }
}

}  // namespace

Theta heptad_even_theta(const AronholdHeptad& h) {
    validate_heptad(h);
    unsigned s = 0;
    for (Theta t : h.members) s ^= t.code();
    Theta total{Vec(s)};
    if (is_odd(total))
        throw std::logic_error("heptad_even_theta: sum of members is odd");
    return total;
}

int duad_index(int i, int j) {
    if (i < 1 || j < 1 || i > 8 || j > 8 || i >= j)
        throw std::domain_error("duad_index: need 1 <= i < j <= 8");
    // Row-major over ordered duads: (1,2),(1,3),...,(1,8),(2,3),...
    int idx = 0;
    for (int a = 1; a < i; ++a) idx += 8 - a;
    return idx + (j - i - 1);
}

OctadLabeling octad_labeling(const std::array<Theta, 7>& ordered_members) {
    validate_heptad(AronholdHeptad{ordered_members});
    unsigned s0 = 0;
    for (Theta t : ordered_members) s0 ^= t.code();

    OctadLabeling lab;
    for (int i = 1; i <= 7; ++i) lab.labels[duad_index(i, 8)] = ordered_members[i - 1];
    for (int i = 1; i <= 7; ++i)
        for (int j = i + 1; j <= 7; ++j)
            lab.labels[duad_index(i, j)] =
                Theta(Vec(s0 ^ ordered_members[i - 1].code() ^ ordered_members[j - 1].code()));

    std::array<Theta, 28> sorted = lab.labels;
    std::sort(sorted.begin(), sorted.end());
    for (int k = 0; k < 28; ++k) {
        if (!is_odd(sorted[k]))
            throw std::logic_error("octad_labeling: produced an even label");
        if (k > 0 && sorted[k] == sorted[k - 1])
            throw std::logic_error("octad_labeling: labels are not distinct");
    }
    return lab;
}

OctadLabeling octad_labeling(const AronholdHeptad& h) { return octad_labeling(h.members); }

}  // namespace qatlas::structures
