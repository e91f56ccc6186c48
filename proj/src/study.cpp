#include "qatlas/study.hpp"

#include <algorithm>
#include <bit>
#include <set>

#include "qatlas/detail/flat_set.hpp"

namespace qatlas::study {

namespace {

const std::array<std::uint8_t, 256>& quadric_table() {
    static const std::array<std::uint8_t, 256> table = [] {
        std::array<std::uint8_t, 256> t{};
        for (unsigned x = 0; x < 256; ++x) {
            int s = 0;
            for (int i = 1; i <= 8; ++i)
                for (int j = i + 1; j <= 8; ++j) s ^= ((x >> (i - 1)) & 1u) & ((x >> (j - 1)) & 1u);
            t[x] = static_cast<std::uint8_t>(s);
        }
        return t;
    }();
    return table;
}

}  // namespace

int quadric_form(unsigned code) { return quadric_table()[code & 255u]; }

int quadric_value(StudyPoint p) { return quadric_form(p.code()); }

int polar_form(unsigned x, unsigned y) {
    return quadric_form((x ^ y) & 255u) ^ quadric_form(x & 255u) ^ quadric_form(y & 255u);
}

int polar(StudyPoint p, StudyPoint q) {
    if (p == q) throw std::domain_error("polar: points must be distinct");
    return polar_form(p.code(), q.code());
}

std::vector<StudyPoint> quadric_points() {
    std::vector<StudyPoint> out;
    for (unsigned c = 1; c < 256; ++c)
        if (quadric_form(c) == 0) out.emplace_back(c);
    return out;
}

std::vector<StudyPoint> off_quadric_points() {
    std::vector<StudyPoint> out;
    for (unsigned c = 1; c < 256; ++c)
        if (quadric_form(c) == 1) out.emplace_back(c);
    return out;
}

LineClassCounts classify_lines_through(StudyPoint p) {
    if (quadric_value(p) != 1)
        throw std::domain_error("classify_lines_through: point must lie off the quadric");
    LineClassCounts counts;
    for (unsigned q = 1; q < 256; ++q) {
        if (q == p.code()) continue;
        unsigned r = q ^ p.code();
        if (q > r) continue;  // count each line {p, q, r} once
        int on = quadric_form(q) == 0;
        on += quadric_form(r) == 0;
        (on == 0 ? counts.n0 : on == 1 ? counts.n1 : counts.n2)++;
    }
    return counts;
}

namespace {

// 135-bit sets over the quadric points, packed into three words.
struct VertexSet {
    std::array<std::uint64_t, 3> w{};

    void set(int i) { w[i >> 6] |= std::uint64_t(1) << (i & 63); }
    [[nodiscard]] bool test(int i) const { return (w[i >> 6] >> (i & 63)) & 1u; }
    [[nodiscard]] int count() const {
        return std::popcount(w[0]) + std::popcount(w[1]) + std::popcount(w[2]);
    }
    [[nodiscard]] VertexSet intersect(const VertexSet& o) const {
        VertexSet r;
        for (int k = 0; k < 3; ++k) r.w[k] = w[k] & o.w[k];
        return r;
    }
    [[nodiscard]] bool empty() const { return (w[0] | w[1] | w[2]) == 0; }
};

struct QuadricGraph {
    std::vector<StudyPoint> verts;        // the 135 quadric points, ascending
    std::vector<VertexSet> adj;           // polar(P,Q) = 1 adjacency
    std::vector<VertexSet> adj_above;     // adjacency restricted to larger indices
};

const QuadricGraph& quadric_graph() {
    static const QuadricGraph graph = [] {
        QuadricGraph g;
        g.verts = quadric_points();
        const int n = static_cast<int>(g.verts.size());
        g.adj.assign(n, {});
        g.adj_above.assign(n, {});
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (polar(g.verts[i], g.verts[j]) == 1) {
                    g.adj[i].set(j);
                    g.adj[j].set(i);
                    g.adj_above[i].set(j);
                }
        return g;
    }();
    return graph;
}

void for_each_set_bit(const VertexSet& s, auto&& fn) {
    for (int k = 0; k < 3; ++k) {
        std::uint64_t word = s.w[k];
        while (word) {
            int b = std::countr_zero(word);
            word &= word - 1;
            fn(64 * k + b);
        }
    }
}

}  // namespace

std::vector<Ennead> enneads() {
    const QuadricGraph& g = quadric_graph();
    std::vector<Ennead> out;
    std::array<int, 9> chosen{};

    // Lexicographic clique extension over ascending vertex indices; the
    // candidate set shrinks to common upper neighbours of the prefix.
    auto extend = [&](auto&& self, int depth, VertexSet cand) -> void {
        if (depth == 9) {
            Ennead e;
            for (int i = 0; i < 9; ++i) e.points[i] = g.verts[chosen[i]];
            out.push_back(e);
            return;
        }
        if (depth + cand.count() < 9) return;
        for_each_set_bit(cand, [&](int v) {
            chosen[depth] = v;
            self(self, depth + 1, cand.intersect(g.adj_above[v]));
        });
    };
    VertexSet all;
    for (int i = 0; i < static_cast<int>(g.verts.size()); ++i) all.set(i);
    extend(extend, 0, all);
    return out;
}

Ennead standard_ennead() {
    Ennead e;
    for (int i = 0; i < 8; ++i) e.points[i] = StudyPoint(1u << i);
    e.points[8] = StudyPoint(255);
    return e;
}

bool is_maximal_clique(const Ennead& e) {
    const QuadricGraph& g = quadric_graph();
    VertexSet common;
    for (int i = 0; i < static_cast<int>(g.verts.size()); ++i) common.set(i);
    for (StudyPoint p : e.points) {
        auto it = std::lower_bound(g.verts.begin(), g.verts.end(), p);
        if (it == g.verts.end() || *it != p) return false;
        common = common.intersect(g.adj[it - g.verts.begin()]);
    }
    return common.empty();
}

LinearMap8 LinearMap8::from_columns(const std::array<unsigned, 8>& cols) {
    std::uint64_t out = 0;
    for (int j = 0; j < 8; ++j) out |= std::uint64_t(cols[j] & 255u) << (8 * j);
    return LinearMap8::from_code(out);
}

bool LinearMap8::preserves_quadric() const {
    for (unsigned x = 0; x < 256; ++x)
        if (quadric_form(apply(x)) != quadric_form(x)) return false;
    return true;
}

bool LinearGroup8::all_elements_preserve_quadric() const {
    return std::all_of(elements_.begin(), elements_.end(),
                       [](const LinearMap8& m) { return m.preserves_quadric(); });
}

LinearGroup8 s9_linear_group() {
    std::vector<LinearMap8> gens;
    for (int i = 0; i < 7; ++i) {
        std::array<unsigned, 8> cols;
        for (int j = 0; j < 8; ++j) cols[j] = 1u << j;
        std::swap(cols[i], cols[i + 1]);
        gens.push_back(LinearMap8::from_columns(cols));
    }
    {
        std::array<unsigned, 8> cols;
        for (int j = 0; j < 7; ++j) cols[j] = 1u << j;
        cols[7] = 255u;  // e8 -> e1 + ... + e8
        gens.push_back(LinearMap8::from_columns(cols));
    }
    for (const LinearMap8& g : gens)
        if (!g.preserves_quadric())
            throw std::logic_error("s9_linear_group: generator does not preserve the quadric");

    std::vector<LinearMap8> elems{LinearMap8()};
    detail::FlatSet seen(1 << 20);
    seen.insert(elems.front().code());
    for (std::size_t i = 0; i < elems.size(); ++i)
        for (const LinearMap8& g : gens) {
            LinearMap8 n = g * elems[i];
            if (seen.insert(n.code())) elems.push_back(n);
        }
    return LinearGroup8(std::move(elems));
}

std::size_t induced_point_permutation_count(const LinearGroup8& g) {
    // The nine points: e1..e8 and the all-ones word.
    std::array<unsigned, 9> pts;
    for (int i = 0; i < 8; ++i) pts[i] = 1u << i;
    pts[8] = 255u;

    detail::FlatSet perms(1 << 20);
    std::size_t distinct = 0;
    for (const LinearMap8& m : g.elements()) {
        std::uint64_t packed = 0;
        for (int i = 0; i < 9; ++i) {
            unsigned img = m.apply(pts[i]);
            int label = -1;
            for (int j = 0; j < 9; ++j)
                if (pts[j] == img) { label = j; break; }
            if (label < 0)
                throw std::logic_error("induced permutation: image is not one of the nine points");
            packed = packed * 9 + label;
        }
        if (perms.insert(packed)) ++distinct;
    }
    return distinct;
}

namespace {

// Arithmetic in the field with 8 elements, polynomials mod x^3 + x + 1.
struct F8 {
    std::array<std::array<std::uint8_t, 8>, 8> mul{};
    std::array<std::uint8_t, 8> inv{};

    F8() {
        for (unsigned a = 0; a < 8; ++a)
            for (unsigned b = 0; b < 8; ++b) {
                unsigned p = 0, x = a;
                for (int bit = 0; bit < 3; ++bit) {
                    if ((b >> bit) & 1u) p ^= x << bit;
                }
                // reduce degree-4..5 terms
                for (int d = 5; d >= 3; --d)
                    if ((p >> d) & 1u) p ^= (0b1011u << (d - 3));
                mul[a][b] = static_cast<std::uint8_t>(p & 7u);
            }
        for (unsigned a = 1; a < 8; ++a)
            for (unsigned b = 1; b < 8; ++b)
                if (mul[a][b] == 1) inv[a] = static_cast<std::uint8_t>(b);
    }
};

}  // namespace

ProjectiveSemilinearGroup pgammal_2_8() {
    static const F8 f8;
    constexpr unsigned kInfinity = 8;

    std::set<std::array<std::uint8_t, 9>> perms;
    for (unsigned a = 0; a < 8; ++a)
        for (unsigned b = 0; b < 8; ++b)
            for (unsigned c = 0; c < 8; ++c)
                for (unsigned d = 0; d < 8; ++d) {
                    if ((f8.mul[a][d] ^ f8.mul[b][c]) == 0) continue;
                    for (int k = 0; k < 3; ++k) {
                        std::array<std::uint8_t, 9> perm{};
                        for (unsigned x = 0; x <= 8; ++x) {
                            unsigned img;
                            if (x == kInfinity) {
                                img = (c == 0) ? kInfinity : f8.mul[a][f8.inv[c]];
                            } else {
                                unsigned xf = x;
                                for (int f = 0; f < k; ++f) xf = f8.mul[xf][xf];
                                unsigned num = f8.mul[a][xf] ^ b;
                                unsigned den = f8.mul[c][xf] ^ d;
                                img = (den == 0) ? kInfinity : f8.mul[num][f8.inv[den]];
                            }
                            perm[x] = static_cast<std::uint8_t>(img);
                        }
                        perms.insert(perm);
                    }
                }

    ProjectiveSemilinearGroup g;
    g.perms.assign(perms.begin(), perms.end());
    if (g.order() != 1512)
        throw std::logic_error("pgammal_2_8: unexpected group order");
    if (362880 % g.order() != 0)
        throw std::logic_error("pgammal_2_8: order does not divide 9!");
    if (960ull * g.order() != 1'451'520ull)
        throw std::logic_error("pgammal_2_8: 960 * order mismatch");
    return g;
}

int ProjectiveSemilinearGroup::transitivity_degree() const {
    // Orbit census on ordered distinct k-tuples, k = 1..4, encoded in base 9.
    int degree = 0;
    for (int k = 1; k <= 4; ++k) {
        std::vector<std::array<std::uint8_t, 4>> tuples;
        std::array<std::uint8_t, 4> t{};
        auto build = [&](auto&& self, int depth) -> void {
            if (depth == k) {
                tuples.push_back(t);
                return;
            }
            for (std::uint8_t v = 0; v < 9; ++v) {
                bool used = false;
                for (int i = 0; i < depth; ++i) used |= (t[i] == v);
                if (used) continue;
                t[depth] = v;
                self(self, depth + 1);
            }
        };
        build(build, 0);

        auto encode = [&](const std::array<std::uint8_t, 4>& tup) {
            unsigned code = 0;
            for (int i = 0; i < k; ++i) code = code * 9 + tup[i];
            return code;
        };

        std::vector<char> visited(6561, 0);  // 9^4 codes suffice for k <= 4
        int orbits = 0;
        for (const auto& start : tuples) {
            if (visited[encode(start)]) continue;
            ++orbits;
            std::vector<std::array<std::uint8_t, 4>> stack{start};
            visited[encode(start)] = 1;
            while (!stack.empty()) {
                auto cur = stack.back();
                stack.pop_back();
                for (const auto& p : perms) {
                    std::array<std::uint8_t, 4> img{};
                    for (int i = 0; i < k; ++i) img[i] = p[cur[i]];
                    if (!visited[encode(img)]) {
                        visited[encode(img)] = 1;
                        stack.push_back(img);
                    }
                }
            }
        }
        if (orbits == 1)
            degree = k;
        else
            break;
    }
    return degree;
}

}  // namespace qatlas::study
