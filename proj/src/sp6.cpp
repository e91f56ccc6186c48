#include "qatlas/sp6.hpp"

#include <algorithm>
#include <unordered_map>

#include "qatlas/detail/flat_set.hpp"

namespace qatlas::sp6 {

using f2core::pairing;
using f2core::q0;

SymplecticMap SymplecticMap::from_columns(const std::array<Vec, 6>& cols) {
    std::uint64_t out = 0;
    for (int j = 0; j < 6; ++j) out |= std::uint64_t(cols[j].code()) << (6 * j);
    return SymplecticMap::from_code(out);
}

bool SymplecticMap::preserves_pairing() const {
    for (int i = 1; i <= 6; ++i)
        for (int j = i + 1; j <= 6; ++j) {
            Vec ei = f2core::basis_vector(i), ej = f2core::basis_vector(j);
            if (pairing(apply(ei), apply(ej)) != pairing(ei, ej)) return false;
        }
    return true;
}

SymplecticMap transvection(Vec u) {
    if (u.is_zero()) throw std::domain_error("transvection: direction must be nonzero");
    std::array<Vec, 6> cols;
    for (int j = 1; j <= 6; ++j) {
        Vec ej = f2core::basis_vector(j);
        cols[j - 1] = pairing(ej, u) ? ej + u : ej;
    }
    return SymplecticMap::from_columns(cols);
}

const std::vector<SymplecticMap>& transvection_generators() {
    static const std::vector<SymplecticMap> gens = [] {
        std::vector<SymplecticMap> g;
        g.reserve(63);
        for (unsigned c = 1; c < f2core::kNumVectors; ++c) g.push_back(transvection(Vec(c)));
        return g;
    }();
    return gens;
}

Group group_closure(std::uint64_t budget) {
    const auto& gens = transvection_generators();
    std::vector<SymplecticMap> elems;
    elems.reserve(1'500'000);
    detail::FlatSet seen(2'000'000);
    elems.push_back(SymplecticMap());
    seen.insert(elems.back().code());
    for (std::size_t i = 0; i < elems.size(); ++i) {
        for (const SymplecticMap& g : gens) {
            SymplecticMap n = g * elems[i];
            if (seen.insert(n.code())) {
                if (elems.size() >= budget)
                    throw ResourceError("group_closure: element budget of " +
                                        std::to_string(budget) + " exceeded");
                elems.push_back(n);
            }
        }
    }
    return Group(std::move(elems));
}

std::string action_kind_name(ActionKind kind) {
    switch (kind) {
        case ActionKind::vector: return "vector";
        case ActionKind::odd_theta: return "odd_theta";
        case ActionKind::even_theta: return "even_theta";
        case ActionKind::steiner: return "steiner";
        case ActionKind::gopel: return "gopel";
        case ActionKind::isotropic_plane: return "isotropic_plane";
        case ActionKind::nonisotropic_plane: return "nonisotropic_plane";
        case ActionKind::tetrad: return "tetrad";
        case ActionKind::heptad: return "heptad";
    }
    throw std::logic_error("action_kind_name: unknown kind");
}

Vec act(const SymplecticMap& g, Vec v) { return g.apply(v); }

Theta act(const SymplecticMap& g, Theta t) {
    // c(g) = sum_i q0(g e_i) g e_{sigma(i)} with sigma pairing columns (i, i+3).
    unsigned c = 0;
    for (int i = 0; i < 6; ++i)
        if (q0(g.column(i))) c ^= g.column((i + 3) % 6).code();
    return Theta(g.apply(t.shift()) + Vec(c));
}

Subspace act(const SymplecticMap& g, const Subspace& s) {
    std::vector<Vec> images;
    images.reserve(s.basis().size());
    for (Vec b : s.basis()) images.push_back(g.apply(b));
    return Subspace::span(std::span<const Vec>(images));
}

structures::SteinerComplex act(const SymplecticMap& g, const structures::SteinerComplex& sc) {
    return structures::steiner_complex(g.apply(sc.key));
}

structures::SyzygeticTetrad act(const SymplecticMap& g, const structures::SyzygeticTetrad& t) {
    structures::SyzygeticTetrad out;
    for (int i = 0; i < 4; ++i) out.members[i] = act(g, t.members[i]);
    std::sort(out.members.begin(), out.members.end());
    return out;
}

structures::GopelSubset act(const SymplecticMap& g, const structures::GopelSubset& gs) {
    structures::GopelSubset out;
    out.subspace = act(g, gs.subspace);
    auto nz = out.subspace.nonzero_elements();
    std::copy(nz.begin(), nz.end(), out.points.begin());
    return out;
}

structures::AzygeticTriad act(const SymplecticMap& g, const structures::AzygeticTriad& at) {
    structures::AzygeticTriad out;
    out.plane = act(g, at.plane);
    auto nz = out.plane.nonzero_elements();
    std::copy(nz.begin(), nz.end(), out.keys.begin());
    return out;
}

structures::AronholdHeptad act(const SymplecticMap& g, const structures::AronholdHeptad& h) {
    structures::AronholdHeptad out;
    for (int i = 0; i < 7; ++i) out.members[i] = act(g, h.members[i]);
    std::sort(out.members.begin(), out.members.end());
    return out;
}

namespace {

// Per-generator lookup tables for the vector and theta actions; every
// structure key action below reduces to these.
struct GeneratorTables {
    std::array<std::array<std::uint8_t, 64>, 63> vec_img;
    std::array<std::array<std::uint8_t, 64>, 63> theta_img;
};

const GeneratorTables& generator_tables() {
    static const GeneratorTables tables = [] {
        GeneratorTables t;
        const auto& gens = transvection_generators();
        for (int gi = 0; gi < 63; ++gi)
            for (unsigned c = 0; c < 64; ++c) {
                t.vec_img[gi][c] = static_cast<std::uint8_t>(gens[gi].apply(Vec(c)).code());
                t.theta_img[gi][c] = static_cast<std::uint8_t>(act(gens[gi], Theta(Vec(c))).code());
            }
        return t;
    }();
    return tables;
}

std::uint64_t pack_sorted_codes(std::vector<unsigned>& codes) {
    std::sort(codes.begin(), codes.end());
    std::uint64_t key = 0;
    for (unsigned c : codes) key = (key << 6) | c;
    return key;
}

std::uint64_t pack_subspace_image(const std::array<std::uint8_t, 64>& img, std::uint64_t key,
                                  int dim) {
    std::array<Vec, 3> rows;
    for (int r = dim - 1; r >= 0; --r) {
        rows[r] = Vec(img[key & 63u]);
        key >>= 6;
    }
    return Subspace::span(std::span<const Vec>(rows.data(), dim)).key();
}

std::uint64_t pack_tuple_image(const std::array<std::uint8_t, 64>& img, std::uint64_t key,
                               int arity) {
    std::vector<unsigned> codes(arity);
    for (int r = arity - 1; r >= 0; --r) {
        codes[r] = img[key & 63u];
        key >>= 6;
    }
    return pack_sorted_codes(codes);
}

int structure_arity(ActionKind kind) {
    switch (kind) {
        case ActionKind::vector:
        case ActionKind::odd_theta:
        case ActionKind::even_theta:
        case ActionKind::steiner: return 1;
        case ActionKind::gopel: return 3;
        case ActionKind::isotropic_plane:
        case ActionKind::nonisotropic_plane: return 2;
        case ActionKind::tetrad: return 4;
        case ActionKind::heptad: return 7;
    }
    throw std::logic_error("structure_arity: unknown kind");
}

}  // namespace

const std::vector<std::uint64_t>& canonical_set(ActionKind kind) {
    static const std::array<std::vector<std::uint64_t>, 9> sets = [] {
        std::array<std::vector<std::uint64_t>, 9> s;
        auto& vecs = s[int(ActionKind::vector)];
        for (unsigned c = 1; c < 64; ++c) vecs.push_back(c);
        for (f2core::Theta t : structures::odd_thetas())
            s[int(ActionKind::odd_theta)].push_back(t.code());
        for (f2core::Theta t : structures::even_thetas())
            s[int(ActionKind::even_theta)].push_back(t.code());
        s[int(ActionKind::steiner)] = vecs;
        for (const Subspace& sub : f2core::subspaces(3, true))
            s[int(ActionKind::gopel)].push_back(sub.key());
        for (const Subspace& sub : f2core::subspaces(2, false))
            (sub.is_isotropic() ? s[int(ActionKind::isotropic_plane)]
                                : s[int(ActionKind::nonisotropic_plane)])
                .push_back(sub.key());
        for (const auto& t : structures::syzygetic_tetrads()) {
            std::vector<unsigned> codes;
            for (auto m : t.members) codes.push_back(m.code());
            s[int(ActionKind::tetrad)].push_back(pack_sorted_codes(codes));
        }
        for (const auto& h : structures::aronhold_heptads()) {
            std::vector<unsigned> codes;
            for (auto m : h.members) codes.push_back(m.code());
            s[int(ActionKind::heptad)].push_back(pack_sorted_codes(codes));
        }
        for (auto& v : s) std::sort(v.begin(), v.end());
        return s;
    }();
    return sets[int(kind)];
}

std::uint64_t act_on_key(ActionKind kind, int generator_index, std::uint64_t key) {
    const auto& tables = generator_tables();
    const auto& vimg = tables.vec_img[generator_index];
    const auto& timg = tables.theta_img[generator_index];
    switch (kind) {
        case ActionKind::vector:
        case ActionKind::steiner: return vimg[key];
        case ActionKind::odd_theta:
        case ActionKind::even_theta: return timg[key];
        case ActionKind::gopel:
        case ActionKind::isotropic_plane:
        case ActionKind::nonisotropic_plane:
            return pack_subspace_image(vimg, key, structure_arity(kind));
        case ActionKind::tetrad:
        case ActionKind::heptad: return pack_tuple_image(timg, key, structure_arity(kind));
    }
    throw std::logic_error("act_on_key: unknown kind");
}

OrbitReport orbit_and_stabilizer_order(ActionKind kind, std::uint64_t group_order) {
    const auto& all = canonical_set(kind);
    OrbitReport report;
    report.kind = kind;
    report.enumerated_count = all.size();

    std::vector<std::uint64_t> orbit{all.front()};
    detail::FlatSet seen(2 * all.size());
    seen.insert(orbit.front());
    for (std::size_t i = 0; i < orbit.size(); ++i)
        for (int gi = 0; gi < 63; ++gi) {
            std::uint64_t img = act_on_key(kind, gi, orbit[i]);
            if (seen.insert(img)) orbit.push_back(img);
        }

    report.orbit_size = orbit.size();
    if (group_order % report.orbit_size != 0)
        throw std::logic_error("orbit_and_stabilizer_order: orbit size does not divide group order");
    report.stabilizer_order = group_order / report.orbit_size;

    std::sort(orbit.begin(), orbit.end());
    report.transitive = (orbit == all);
    return report;
}

int pair_rank(ActionKind kind) {
    const auto& all = canonical_set(kind);
    const int n = static_cast<int>(all.size());

    std::unordered_map<std::uint64_t, int> index;
    index.reserve(all.size() * 2);
    for (int i = 0; i < n; ++i) index.emplace(all[i], i);

    // Generator permutations of the structure set.
    std::vector<std::vector<int>> perm(63, std::vector<int>(n));
    for (int gi = 0; gi < 63; ++gi)
        for (int i = 0; i < n; ++i) {
            auto it = index.find(act_on_key(kind, gi, all[i]));
            if (it == index.end())
                throw std::logic_error("pair_rank: generator image left the structure set");
            perm[gi][i] = it->second;
        }

    // Transitivity precondition.
    {
        std::vector<char> seen(n, 0);
        std::vector<int> stack{0};
        seen[0] = 1;
        int count = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int gi = 0; gi < 63; ++gi) {
                int w = perm[gi][v];
                if (!seen[w]) { seen[w] = 1; ++count; stack.push_back(w); }
            }
        }
        if (count != n) throw std::domain_error("pair_rank: action is not transitive");
    }

    // Orbit count on ordered pairs via BFS with a flat visited table.
    std::vector<char> visited(std::size_t(n) * n, 0);
    std::vector<int> queue;
    int rank = 0;
    for (int start = 0; start < n * n; ++start) {
        if (visited[start]) continue;
        ++rank;
        visited[start] = 1;
        queue.assign(1, start);
        while (!queue.empty()) {
            int p = queue.back();
            queue.pop_back();
            int a = p / n, b = p % n;
            for (int gi = 0; gi < 63; ++gi) {
                int q = perm[gi][a] * n + perm[gi][b];
                if (!visited[q]) { visited[q] = 1; queue.push_back(q); }
            }
        }
    }
    return rank;
}

}  // namespace qatlas::sp6
