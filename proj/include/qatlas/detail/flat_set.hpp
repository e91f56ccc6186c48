#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace qatlas::detail {

// Insert-only open-addressing set of uint64 keys. The all-ones key is
// reserved as the empty slot marker; no packed code in this project uses it.
class FlatSet {
public:
    explicit FlatSet(std::size_t expected = 1024) {
        std::size_t cap = 16;
        while (cap < expected * 2) cap <<= 1;
        slots_.assign(cap, kEmpty);
        mask_ = cap - 1;
    }

    /// Returns true when the key was newly inserted.
    bool insert(std::uint64_t key) {
        if (key == kEmpty) throw std::invalid_argument("FlatSet: reserved key");
        if ((size_ + 1) * 2 > slots_.size()) grow();
        return insert_no_grow(key);
    }

    [[nodiscard]] bool contains(std::uint64_t key) const {
        std::size_t i = hash(key) & mask_;
        while (slots_[i] != kEmpty) {
            if (slots_[i] == key) return true;
            i = (i + 1) & mask_;
        }
        return false;
    }

    [[nodiscard]] std::size_t size() const { return size_; }

private:
    static constexpr std::uint64_t kEmpty = ~std::uint64_t(0);

    static std::uint64_t hash(std::uint64_t x) {
        x += 0x9e3779b97f4a7c15ULL;
        x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
        x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
        return x ^ (x >> 31);
    }

    bool insert_no_grow(std::uint64_t key) {
        std::size_t i = hash(key) & mask_;
        while (slots_[i] != kEmpty) {
            if (slots_[i] == key) return false;
            i = (i + 1) & mask_;
        }
        slots_[i] = key;
        ++size_;
        return true;
    }

    void grow() {
        std::vector<std::uint64_t> old = std::move(slots_);
        slots_.assign(old.size() * 2, kEmpty);
        mask_ = slots_.size() - 1;
        size_ = 0;
        for (std::uint64_t k : old)
            if (k != kEmpty) insert_no_grow(k);
    }

    std::vector<std::uint64_t> slots_;
    std::size_t mask_ = 0;
    std::size_t size_ = 0;
};

}  // namespace qatlas::detail
