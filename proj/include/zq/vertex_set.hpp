#pragma once

#include <cstdint>
#include <initializer_list>
#include <bit>
#include <vector>

#include "zq/errors.hpp"

namespace zq {

/**
 * Subset of the vertices 0..n-1 of a fixed universe, stored as a bitset.
 * Value type; all set algebra is word-parallel.
 */
class VertexSet {
public:
    VertexSet() = default;

    explicit VertexSet(int universe) : n_(universe), bits_((universe + 63) / 64, 0) {
        if (universe < 0) throw ContractViolation("VertexSet: negative universe");
    }

    static VertexSet full(int universe) {
        VertexSet s(universe);
        for (auto& w : s.bits_) w = ~std::uint64_t{0};
        s.trim();
        return s;
    }

    static VertexSet of(int universe, std::initializer_list<int> vs) {
        VertexSet s(universe);
        for (int v : vs) s.insert(v);
        return s;
    }

    int universe() const { return n_; }

    bool contains(int v) const {
        check(v);
        return (bits_[v >> 6] >> (v & 63)) & 1u;
    }

    void insert(int v) {
        check(v);
        bits_[v >> 6] |= std::uint64_t{1} << (v & 63);
    }

    void erase(int v) {
        check(v);
        bits_[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
    }

    int count() const {
        int c = 0;
        for (auto w : bits_) c += std::popcount(w);
        return c;
    }

    bool empty() const {
        for (auto w : bits_)
            if (w) return false;
        return true;
    }

    bool is_full() const { return count() == n_; }

    VertexSet& operator|=(const VertexSet& o) {
        same_universe(o);
        for (std::size_t i = 0; i < bits_.size(); ++i) bits_[i] |= o.bits_[i];
        return *this;
    }
    VertexSet& operator&=(const VertexSet& o) {
        same_universe(o);
        for (std::size_t i = 0; i < bits_.size(); ++i) bits_[i] &= o.bits_[i];
        return *this;
    }
    // set difference
    VertexSet& operator-=(const VertexSet& o) {
        same_universe(o);
        for (std::size_t i = 0; i < bits_.size(); ++i) bits_[i] &= ~o.bits_[i];
        return *this;
    }

    friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
    friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

    VertexSet complement() const {
        VertexSet s(n_);
        for (std::size_t i = 0; i < bits_.size(); ++i) s.bits_[i] = ~bits_[i];
        s.trim();
        return s;
    }

    bool is_subset_of(const VertexSet& o) const {
        same_universe(o);
        for (std::size_t i = 0; i < bits_.size(); ++i)
            if (bits_[i] & ~o.bits_[i]) return false;
        return true;
    }

    bool intersects(const VertexSet& o) const {
        same_universe(o);
        for (std::size_t i = 0; i < bits_.size(); ++i)
            if (bits_[i] & o.bits_[i]) return true;
        return false;
    }

    // Smallest member, or -1 when empty.
    int first() const {
        for (std::size_t i = 0; i < bits_.size(); ++i)
            if (bits_[i]) return int(i * 64) + std::countr_zero(bits_[i]);
        return -1;
    }

    // Smallest member greater than v, or -1.
    int next(int v) const {
        if (v < -1) v = -1;
        int start = v + 1;
        if (start >= n_) return -1;
        std::size_t w = std::size_t(start) >> 6;
        std::uint64_t cur = bits_[w] & (~std::uint64_t{0} << (start & 63));
        while (true) {
            if (cur) return int(w * 64) + std::countr_zero(cur);
            if (++w >= bits_.size()) return -1;
            cur = bits_[w];
        }
    }

    template <class F>
    void for_each(F f) const {
        for (int v = first(); v >= 0; v = next(v)) f(v);
    }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        out.reserve(count());
        for_each([&](int v) { out.push_back(v); });
        return out;
    }

    bool operator==(const VertexSet& o) const = default;

    std::size_t hash() const {
        std::uint64_t h = 1469598103934665603ull ^ std::uint64_t(n_);
        for (auto w : bits_) {
            h ^= w;
            h *= 1099511628211ull;
        }
        return std::size_t(h);
    }

private:
    int n_ = 0;
    std::vector<std::uint64_t> bits_;  // tail bits beyond n_ kept zero

    void trim() {
        if (n_ % 64 != 0 && !bits_.empty()) bits_.back() &= (std::uint64_t{1} << (n_ % 64)) - 1;
    }
    void check(int v) const {
        if (v < 0 || v >= n_) throw ContractViolation("VertexSet: vertex " + std::to_string(v) + " outside universe of size " + std::to_string(n_));
    }
    void same_universe(const VertexSet& o) const {
        if (n_ != o.n_) throw ContractViolation("VertexSet: universe mismatch");
    }
};

struct VertexSetHash {
    std::size_t operator()(const VertexSet& s) const { return s.hash(); }
};

}  // namespace zq
