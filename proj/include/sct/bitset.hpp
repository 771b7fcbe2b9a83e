#ifndef SCT_BITSET_HPP
#define SCT_BITSET_HPP

#include <array>
#include <bit>
#include <cassert>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace sct {

/// Fixed-width set of 1-based vertex labels backed by an array of 64-bit
/// words, so that subset, intersection and ridge tests are word-parallel.
/// The word budget is a template parameter; the default alias below allows
/// labels up to 1024.
template <std::size_t Words = 16>
class BasicVertexSet {
    static_assert(Words >= 1);

public:
    static constexpr int capacity() { return static_cast<int>(Words * 64); }

    constexpr BasicVertexSet() = default;

    BasicVertexSet(std::initializer_list<int> labels) {
        for (int v : labels) set(v);
    }

    static BasicVertexSet singleton(int v) {
        BasicVertexSet s;
        s.set(v);
        return s;
    }

    /// The interval {a, a+1, ..., b}; empty when b < a.
    static BasicVertexSet range(int a, int b) {
        BasicVertexSet s;
        for (int v = a; v <= b; ++v) s.set(v);
        return s;
    }

    static BasicVertexSet from_labels(std::span<const int> labels) {
        BasicVertexSet s;
        for (int v : labels) s.set(v);
        return s;
    }

    bool test(int label) const {
        assert(label >= 1 && label <= capacity());
        const unsigned b = static_cast<unsigned>(label - 1);
        return (words_[b >> 6] >> (b & 63)) & 1u;
    }

    void set(int label) {
        assert(label >= 1 && label <= capacity());
        const unsigned b = static_cast<unsigned>(label - 1);
        words_[b >> 6] |= std::uint64_t{1} << (b & 63);
    }

    void reset(int label) {
        assert(label >= 1 && label <= capacity());
        const unsigned b = static_cast<unsigned>(label - 1);
        words_[b >> 6] &= ~(std::uint64_t{1} << (b & 63));
    }

    void clear() { words_.fill(0); }

    int count() const {
        int c = 0;
        for (auto w : words_) c += std::popcount(w);
        return c;
    }

    bool empty() const {
        for (auto w : words_)
            if (w) return false;
        return true;
    }

    /// True when other is a subset of *this.
    bool contains(const BasicVertexSet& other) const {
        for (std::size_t i = 0; i < Words; ++i)
            if (other.words_[i] & ~words_[i]) return false;
        return true;
    }

    bool intersects(const BasicVertexSet& other) const {
        for (std::size_t i = 0; i < Words; ++i)
            if (words_[i] & other.words_[i]) return true;
        return false;
    }

    int intersection_count(const BasicVertexSet& other) const {
        int c = 0;
        for (std::size_t i = 0; i < Words; ++i)
            c += std::popcount(words_[i] & other.words_[i]);
        return c;
    }

    friend BasicVertexSet operator|(BasicVertexSet a, const BasicVertexSet& b) {
        for (std::size_t i = 0; i < Words; ++i) a.words_[i] |= b.words_[i];
        return a;
    }

    friend BasicVertexSet operator&(BasicVertexSet a, const BasicVertexSet& b) {
        for (std::size_t i = 0; i < Words; ++i) a.words_[i] &= b.words_[i];
        return a;
    }

    /// Set difference a \ b.
    friend BasicVertexSet operator-(BasicVertexSet a, const BasicVertexSet& b) {
        for (std::size_t i = 0; i < Words; ++i) a.words_[i] &= ~b.words_[i];
        return a;
    }

    BasicVertexSet& operator|=(const BasicVertexSet& b) {
        for (std::size_t i = 0; i < Words; ++i) words_[i] |= b.words_[i];
        return *this;
    }

    BasicVertexSet& operator&=(const BasicVertexSet& b) {
        for (std::size_t i = 0; i < Words; ++i) words_[i] &= b.words_[i];
        return *this;
    }

    BasicVertexSet& operator-=(const BasicVertexSet& b) {
        for (std::size_t i = 0; i < Words; ++i) words_[i] &= ~b.words_[i];
        return *this;
    }

    bool operator==(const BasicVertexSet&) const = default;

    /// Smallest label, or 0 when empty.
    int min_label() const {
        for (std::size_t i = 0; i < Words; ++i)
            if (words_[i]) return static_cast<int>(i * 64 + std::countr_zero(words_[i])) + 1;
        return 0;
    }

    /// Largest label, or 0 when empty.
    int max_label() const {
        for (std::size_t i = Words; i-- > 0;)
            if (words_[i]) return static_cast<int>(i * 64 + 63 - std::countl_zero(words_[i])) + 1;
        return 0;
    }

    /// Smallest label strictly greater than `after`, or 0 when none.
    int next_label(int after) const {
        if (after >= capacity()) return 0;
        unsigned b = static_cast<unsigned>(after); // first candidate bit index
        std::size_t i = b >> 6;
        std::uint64_t w = words_[i] >> (b & 63) << (b & 63);
        while (true) {
            if (w) return static_cast<int>(i * 64 + std::countr_zero(w)) + 1;
            if (++i == Words) return 0;
            w = words_[i];
        }
    }

    template <class F>
    void for_each(F f) const {
        for (std::size_t i = 0; i < Words; ++i) {
            std::uint64_t w = words_[i];
            while (w) {
                const int bit = std::countr_zero(w);
                f(static_cast<int>(i * 64 + bit) + 1);
                w &= w - 1;
            }
        }
    }

    std::vector<int> labels() const {
        std::vector<int> out;
        out.reserve(static_cast<std::size_t>(count()));
        for_each([&](int v) { out.push_back(v); });
        return out;
    }

    /// Compares the sorted label sequences lexicographically; a proper
    /// prefix precedes its extensions.
    static int lex_compare(const BasicVertexSet& a, const BasicVertexSet& b) {
        for (std::size_t i = 0; i < Words; ++i) {
            const std::uint64_t diff = a.words_[i] ^ b.words_[i];
            if (!diff) continue;
            const int bit = std::countr_zero(diff);
            const bool in_a = (a.words_[i] >> bit) & 1u;
            const BasicVertexSet& other = in_a ? b : a;
            // The set owning the lowest differing label is smaller unless
            // the other set has no label beyond the common prefix at all.
            bool other_has_tail = (other.words_[i] >> bit) != 0;
            for (std::size_t j = i + 1; !other_has_tail && j < Words; ++j)
                other_has_tail = other.words_[j] != 0;
            if (in_a) return other_has_tail ? -1 : 1;
            return other_has_tail ? 1 : -1;
        }
        return 0;
    }

    bool operator<(const BasicVertexSet& other) const { return lex_compare(*this, other) < 0; }

    std::size_t hash() const {
        std::uint64_t h = 1469598103934665603ull;
        for (auto w : words_) {
            h ^= w;
            h *= 1099511628211ull;
        }
        return static_cast<std::size_t>(h);
    }

    std::string to_string() const {
        std::string out = "{";
        bool first = true;
        for_each([&](int v) {
            if (!first) out += ',';
            out += std::to_string(v);
            first = false;
        });
        out += '}';
        return out;
    }

private:
    std::array<std::uint64_t, Words> words_{};
};

using VertexSet = BasicVertexSet<>;

template <std::size_t Words>
struct VertexSetHash {
    std::size_t operator()(const BasicVertexSet<Words>& s) const { return s.hash(); }
};

} // namespace sct

#endif // SCT_BITSET_HPP
