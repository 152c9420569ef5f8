#pragma once

#include <bit>
#include <cassert>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace wklab {

// Subset of the vertex universe [0, n). Backed by 64-bit words; all set
// algebra is in-place friendly so hot loops can avoid allocations.
//
// The canonical order on sets (compare()) treats the membership pattern as
// an integer with vertex 0 at the least significant bit, so {1} < {0,2}
// and {0} < {1}. Iteration is always ascending by vertex id.
class VertexSet {
public:
    VertexSet() = default;

    explicit VertexSet(int universe) : n_(universe), words_(word_count(universe), 0) {
        assert(universe >= 0);
    }

    VertexSet(int universe, std::initializer_list<int> vs) : VertexSet(universe) {
        for (int v : vs) add(v);
    }

    static VertexSet full(int universe) {
        VertexSet s(universe);
        for (auto& w : s.words_) w = ~uint64_t{0};
        s.trim();
        return s;
    }

    int universe() const { return n_; }

    bool contains(int v) const {
        assert(v >= 0 && v < n_);
        return (words_[v >> 6] >> (v & 63)) & 1;
    }

    void add(int v) {
        assert(v >= 0 && v < n_);
        words_[v >> 6] |= uint64_t{1} << (v & 63);
    }

    void remove(int v) {
        assert(v >= 0 && v < n_);
        words_[v >> 6] &= ~(uint64_t{1} << (v & 63));
    }

    void clear() {
        for (auto& w : words_) w = 0;
    }

    int count() const {
        int c = 0;
        for (uint64_t w : words_) c += std::popcount(w);
        return c;
    }

    bool empty() const {
        for (uint64_t w : words_) if (w) return false;
        return true;
    }

    VertexSet& operator|=(const VertexSet& o) {
        assert(n_ == o.n_);
        for (size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
        return *this;
    }

    VertexSet& operator&=(const VertexSet& o) {
        assert(n_ == o.n_);
        for (size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
        return *this;
    }

    VertexSet& operator-=(const VertexSet& o) {
        assert(n_ == o.n_);
        for (size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
        return *this;
    }

    friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
    friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

    VertexSet complement() const {
        VertexSet r(n_);
        for (size_t i = 0; i < words_.size(); ++i) r.words_[i] = ~words_[i];
        r.trim();
        return r;
    }

    bool intersects(const VertexSet& o) const {
        assert(n_ == o.n_);
        for (size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & o.words_[i]) return true;
        return false;
    }

    bool is_disjoint(const VertexSet& o) const { return !intersects(o); }

    bool is_subset_of(const VertexSet& o) const {
        assert(n_ == o.n_);
        for (size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~o.words_[i]) return false;
        return true;
    }

    friend bool operator==(const VertexSet& a, const VertexSet& b) {
        return a.n_ == b.n_ && a.words_ == b.words_;
    }

    // Numeric order on bit patterns (vertex 0 = least significant bit).
    static int compare(const VertexSet& a, const VertexSet& b) {
        assert(a.n_ == b.n_);
        for (size_t i = a.words_.size(); i-- > 0;) {
            if (a.words_[i] != b.words_[i]) return a.words_[i] < b.words_[i] ? -1 : 1;
        }
        return 0;
    }

    friend bool operator<(const VertexSet& a, const VertexSet& b) { return compare(a, b) < 0; }
    friend bool operator<=(const VertexSet& a, const VertexSet& b) { return compare(a, b) <= 0; }

    // First member >= from, or -1.
    int next(int from) const {
        if (from >= n_) return -1;
        int wi = from >> 6;
        uint64_t w = words_[wi] >> (from & 63);
        if (w) return from + std::countr_zero(w);
        for (++wi; wi < (int)words_.size(); ++wi)
            if (words_[wi]) return (wi << 6) + std::countr_zero(words_[wi]);
        return -1;
    }

    int first() const { return next(0); }

    class iterator {
    public:
        iterator(const VertexSet* s, int v) : s_(s), v_(v) {}
        int operator*() const { return v_; }
        iterator& operator++() { v_ = s_->next(v_ + 1); return *this; }
        bool operator!=(const iterator& o) const { return v_ != o.v_; }
        bool operator==(const iterator& o) const { return v_ == o.v_; }
    private:
        const VertexSet* s_;
        int v_;
    };

    iterator begin() const { return iterator(this, first()); }
    iterator end() const { return iterator(this, -1); }

    std::vector<int> to_vector() const {
        std::vector<int> r;
        r.reserve(count());
        for (int v : *this) r.push_back(v);
        return r;
    }

    std::string to_string() const {
        std::string s = "{";
        bool sep = false;
        for (int v : *this) {
            if (sep) s += ",";
            s += std::to_string(v);
            sep = true;
        }
        return s + "}";
    }

private:
    static size_t word_count(int n) { return (static_cast<size_t>(n) + 63) / 64; }

    // Zero the bits beyond the universe.
    void trim() {
        if (n_ & 63) words_.back() &= (uint64_t{1} << (n_ & 63)) - 1;
    }

    int n_ = 0;
    std::vector<uint64_t> words_;
};

} // namespace wklab
