#pragma once

#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <vector>

namespace bispan {

using EdgeId = int;
using Vertex = int;

inline constexpr int kMaxEdgeId = 128;

// Fixed-width bitset over edge ids 0..127.
class EdgeSet {
public:
    constexpr EdgeSet() = default;
    EdgeSet(std::initializer_list<EdgeId> ids) {
        for (EdgeId e : ids) insert(e);
    }
    static EdgeSet from(const std::vector<EdgeId>& ids) {
        EdgeSet s;
        for (EdgeId e : ids) s.insert(e);
        return s;
    }

    bool contains(EdgeId e) const { return (w_[e >> 6] >> (e & 63)) & 1u; }
    void insert(EdgeId e) { w_[e >> 6] |= uint64_t{1} << (e & 63); }
    void erase(EdgeId e) { w_[e >> 6] &= ~(uint64_t{1} << (e & 63)); }
    void flip(EdgeId e) { w_[e >> 6] ^= uint64_t{1} << (e & 63); }

    int size() const { return std::popcount(w_[0]) + std::popcount(w_[1]); }
    bool empty() const { return (w_[0] | w_[1]) == 0; }

    // smallest id, or -1
    EdgeId first() const {
        if (w_[0]) return std::countr_zero(w_[0]);
        if (w_[1]) return 64 + std::countr_zero(w_[1]);
        return -1;
    }

    std::vector<EdgeId> ids() const {
        std::vector<EdgeId> out;
        out.reserve(size());
        for_each([&](EdgeId e) { out.push_back(e); });
        return out;
    }

    template <class F>
    void for_each(F&& f) const {
        for (int k = 0; k < 2; ++k) {
            uint64_t x = w_[k];
            while (x) {
                int b = std::countr_zero(x);
                f(EdgeId(k * 64 + b));
                x &= x - 1;
            }
        }
    }

    EdgeSet operator&(const EdgeSet& o) const { return raw(w_[0] & o.w_[0], w_[1] & o.w_[1]); }
    EdgeSet operator|(const EdgeSet& o) const { return raw(w_[0] | o.w_[0], w_[1] | o.w_[1]); }
    EdgeSet operator^(const EdgeSet& o) const { return raw(w_[0] ^ o.w_[0], w_[1] ^ o.w_[1]); }
    EdgeSet minus(const EdgeSet& o) const { return raw(w_[0] & ~o.w_[0], w_[1] & ~o.w_[1]); }
    EdgeSet& operator&=(const EdgeSet& o) { return *this = *this & o; }
    EdgeSet& operator|=(const EdgeSet& o) { return *this = *this | o; }
    bool subset_of(const EdgeSet& o) const { return minus(o).empty(); }

    bool operator==(const EdgeSet&) const = default;

    // lexicographic order of the sorted id lists
    bool lex_less(const EdgeSet& o) const;
    // elements strictly greater than e
    EdgeSet above(EdgeId e) const;

    uint64_t word(int k) const { return w_[k]; }
    std::size_t hash() const { return std::hash<uint64_t>{}(w_[0] * 0x9e3779b97f4a7c15ULL ^ (w_[1] + 0x632be59bd9b4e019ULL)); }

private:
    static EdgeSet raw(uint64_t a, uint64_t b) {
        EdgeSet s;
        s.w_ = {a, b};
        return s;
    }
    std::array<uint64_t, 2> w_{0, 0};
};

inline EdgeSet EdgeSet::above(EdgeId e) const {
    EdgeSet r = *this;
    if (e < 64) {
        r.w_[0] &= (e == 63) ? 0 : ~uint64_t{0} << (e + 1);
    } else {
        r.w_[0] = 0;
        r.w_[1] &= (e == 127) ? 0 : ~uint64_t{0} << (e - 63);
    }
    return r;
}

inline bool EdgeSet::lex_less(const EdgeSet& o) const {
    EdgeSet d = *this ^ o;
    if (d.empty()) return false;
    // first id where the sorted lists diverge; a list that runs out first is a prefix
    EdgeId e = d.first();
    if (contains(e)) return !o.above(e).empty();
    return above(e).empty();
}

struct EdgeSetHash {
    std::size_t operator()(const EdgeSet& s) const { return s.hash(); }
};

}  // namespace bispan
