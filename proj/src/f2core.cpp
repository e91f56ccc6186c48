#include "qatlas/f2core.hpp"

#include <algorithm>

namespace qatlas::f2core {

Subspace Subspace::span(std::span<const Vec> generators) {
    // Gaussian elimination with the pivot at the lowest set bit of each row.
    std::array<unsigned, kDim> pivot_row{};  // pivot_row[b] = row with pivot bit b, or 0
    for (Vec g : generators) {
        unsigned v = g.code();
        for (unsigned b = 0; b < kDim; ++b)
            if ((v >> b) & 1u && pivot_row[b]) v ^= pivot_row[b];
        if (v == 0) continue;
        unsigned b = static_cast<unsigned>(std::countr_zero(v));
        for (unsigned c = 0; c < kDim; ++c)
            if (pivot_row[c] && ((pivot_row[c] >> b) & 1u)) pivot_row[c] ^= v;
        pivot_row[b] = v;
    }
    Subspace s;
    for (unsigned b = 0; b < kDim; ++b)
        if (pivot_row[b]) s.basis_.push_back(Vec(pivot_row[b]));
    std::sort(s.basis_.begin(), s.basis_.end());
    return s;
}

Subspace Subspace::span(std::initializer_list<Vec> generators) {
    return span(std::span<const Vec>(generators.begin(), generators.size()));
}

bool Subspace::contains(Vec v) const {
    unsigned x = v.code();
    for (Vec row : basis_) {
        unsigned b = static_cast<unsigned>(std::countr_zero(row.code()));
        if ((x >> b) & 1u) x ^= row.code();
    }
    return x == 0;
}

bool Subspace::is_isotropic() const {
    for (std::size_t i = 0; i < basis_.size(); ++i)
        for (std::size_t j = i + 1; j < basis_.size(); ++j)
            if (pairing(basis_[i], basis_[j])) return false;
    return true;
}

std::vector<Vec> Subspace::elements() const {
    std::vector<Vec> out;
    out.reserve(std::size_t(1) << basis_.size());
    out.push_back(Vec(0));
    for (Vec row : basis_) {
        std::size_t n = out.size();
        for (std::size_t i = 0; i < n; ++i) out.push_back(out[i] + row);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Vec> Subspace::nonzero_elements() const {
    std::vector<Vec> out = elements();
    out.erase(out.begin());  // zero sorts first
    return out;
}

std::uint64_t Subspace::key() const {
    std::uint64_t k = 0;
    for (Vec row : basis_) k = (k << 6) | row.code();
    return k;
}

std::vector<Subspace> subspaces(int k, bool isotropic_only) {
    if (k < 0 || k > int(kDim))
        throw std::domain_error("f2core::subspaces: dimension must be in 0..6");

    std::vector<Subspace> out;
    if (k == 0) {
        out.emplace_back();
        return out;
    }

    // Enumerate reduced echelon bases directly: choose ascending pivot bits
    // p_1 < ... < p_k, then fill the free positions (non-pivot bits above the
    // row's own pivot) with every bit pattern. Each subspace shows up once.
    std::array<int, kDim> pivots{};
    auto emit = [&](auto&& self, int depth, int next_bit) -> void {
        if (depth == k) {
            std::array<unsigned, kDim> free_bits{};  // per row: mask of free positions
            unsigned pivot_mask = 0;
            for (int r = 0; r < k; ++r) pivot_mask |= 1u << pivots[r];
            int total_free = 0;
            std::array<std::vector<unsigned>, kDim> free_pos{};
            for (int r = 0; r < k; ++r) {
                for (unsigned b = pivots[r] + 1; b < kDim; ++b)
                    if (!((pivot_mask >> b) & 1u)) {
                        free_bits[r] |= 1u << b;
                        free_pos[r].push_back(b);
                        ++total_free;
                    }
            }
            for (unsigned pattern = 0; pattern < (1u << total_free); ++pattern) {
                std::array<Vec, kDim> rows{};
                unsigned p = pattern;
                bool ok = true;
                for (int r = 0; r < k; ++r) {
                    unsigned row = 1u << pivots[r];
                    for (unsigned b : free_pos[r]) {
                        row |= (p & 1u) << b;
                        p >>= 1;
                    }
                    rows[r] = Vec(row);
                }
                if (isotropic_only) {
                    for (int i = 0; i < k && ok; ++i)
                        for (int j = i + 1; j < k; ++j)
                            if (pairing(rows[i], rows[j])) { ok = false; break; }
                }
                if (!ok) continue;
                out.push_back(Subspace::span(std::span<const Vec>(rows.data(), k)));
            }
            return;
        }
        for (int b = next_bit; b < int(kDim); ++b) {
            pivots[depth] = b;
            self(self, depth + 1, b + 1);
        }
    };
    emit(emit, 0, 0);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace qatlas::f2core
