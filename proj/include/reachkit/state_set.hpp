#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <vector>

namespace reachkit {

using State = std::uint32_t;

/// Subset of [0, universe) stored as a packed bitset.
///
/// Union, membership and emptiness are word-parallel; size() is a popcount
/// over the blocks. Equality and hashing only look at the bits, so sets over
/// the same universe can be used directly as keys of the power-set searches.
class StateSet {
public:
    StateSet() = default;

    explicit StateSet(std::size_t universe) : universe_(universe), blocks_((universe + 63) / 64, 0) {}

    StateSet(std::size_t universe, std::initializer_list<State> members) : StateSet(universe) {
        for (State q : members) insert(q);
    }

    static StateSet full(std::size_t universe) {
        StateSet s(universe);
        for (std::size_t q = 0; q < universe; ++q) s.insert(static_cast<State>(q));
        return s;
    }

    std::size_t universe() const noexcept { return universe_; }

    void insert(State q) { blocks_[q >> 6] |= std::uint64_t{1} << (q & 63); }
    void erase(State q) { blocks_[q >> 6] &= ~(std::uint64_t{1} << (q & 63)); }

    bool contains(State q) const noexcept {
        return q < universe_ && ((blocks_[q >> 6] >> (q & 63)) & 1u) != 0;
    }

    bool empty() const noexcept {
        for (auto b : blocks_)
            if (b != 0) return false;
        return true;
    }

    std::size_t size() const noexcept {
        std::size_t n = 0;
        for (auto b : blocks_) n += static_cast<std::size_t>(std::popcount(b));
        return n;
    }

    StateSet& operator|=(const StateSet& other) {
        for (std::size_t i = 0; i < blocks_.size() && i < other.blocks_.size(); ++i) blocks_[i] |= other.blocks_[i];
        return *this;
    }

    bool is_subset_of(const StateSet& other) const noexcept {
        for (std::size_t i = 0; i < blocks_.size(); ++i) {
            std::uint64_t o = i < other.blocks_.size() ? other.blocks_[i] : 0;
            if ((blocks_[i] & ~o) != 0) return false;
        }
        return true;
    }

    /// Members in ascending order.
    std::vector<State> members() const {
        std::vector<State> out;
        for (std::size_t i = 0; i < blocks_.size(); ++i) {
            std::uint64_t b = blocks_[i];
            while (b != 0) {
                out.push_back(static_cast<State>(i * 64 + static_cast<std::size_t>(std::countr_zero(b))));
                b &= b - 1;
            }
        }
        return out;
    }

    /// Smallest member; undefined on an empty set.
    State first() const noexcept {
        for (std::size_t i = 0; i < blocks_.size(); ++i)
            if (blocks_[i] != 0) return static_cast<State>(i * 64 + static_cast<std::size_t>(std::countr_zero(blocks_[i])));
        return 0;
    }

    friend bool operator==(const StateSet& a, const StateSet& b) noexcept { return a.blocks_ == b.blocks_; }

    std::size_t hash() const noexcept {
        std::size_t h = 0xcbf29ce484222325ull;
        for (auto b : blocks_) {
            h ^= static_cast<std::size_t>(b) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        }
        return h;
    }

private:
    std::size_t universe_ = 0;
    std::vector<std::uint64_t> blocks_;
};

struct StateSetHash {
    std::size_t operator()(const StateSet& s) const noexcept { return s.hash(); }
};

}  // namespace reachkit
