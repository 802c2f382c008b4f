#pragma once

#include <bit>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace cmlabel {

/// Maximum number of vertices a complex may carry; vertex sets are 64-bit masks.
inline constexpr int kMaxVertices = 64;

/// A subset of the vertex set [0, n) stored as a bit mask.
class VertexSet {
public:
    constexpr VertexSet() = default;
    constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}

    static VertexSet of(std::initializer_list<int> vertices) {
        VertexSet s;
        for (int v : vertices) s.insert(v);
        return s;
    }
    static VertexSet of(const std::vector<int>& vertices) {
        VertexSet s;
        for (int v : vertices) s.insert(v);
        return s;
    }
    /// All vertices [0, n).
    static constexpr VertexSet full(int n) {
        return VertexSet(n >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1));
    }
    static constexpr VertexSet single(int v) { return VertexSet(std::uint64_t{1} << v); }

    constexpr std::uint64_t bits() const { return bits_; }
    constexpr bool empty() const { return bits_ == 0; }
    constexpr int size() const { return std::popcount(bits_); }
    constexpr bool contains(int v) const { return (bits_ >> v) & 1u; }
    constexpr void insert(int v) { bits_ |= std::uint64_t{1} << v; }
    constexpr void erase(int v) { bits_ &= ~(std::uint64_t{1} << v); }

    constexpr bool subset_of(VertexSet other) const { return (bits_ & ~other.bits_) == 0; }
    constexpr bool intersects(VertexSet other) const { return (bits_ & other.bits_) != 0; }
    constexpr VertexSet complement(int n) const { return VertexSet(~bits_ & full(n).bits_); }
    /// Lowest vertex id; undefined on the empty set.
    constexpr int first() const { return std::countr_zero(bits_); }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        out.reserve(size());
        for (std::uint64_t b = bits_; b != 0; b &= b - 1) out.push_back(std::countr_zero(b));
        return out;
    }

    template <typename Fn>
    void for_each(Fn&& fn) const {
        for (std::uint64_t b = bits_; b != 0; b &= b - 1) fn(std::countr_zero(b));
    }

    std::string to_string() const;

    friend constexpr VertexSet operator|(VertexSet a, VertexSet b) { return VertexSet(a.bits_ | b.bits_); }
    friend constexpr VertexSet operator&(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & b.bits_); }
    /// Set difference.
    friend constexpr VertexSet operator-(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & ~b.bits_); }
    constexpr VertexSet& operator|=(VertexSet o) { bits_ |= o.bits_; return *this; }
    constexpr VertexSet& operator&=(VertexSet o) { bits_ &= o.bits_; return *this; }
    friend constexpr bool operator==(VertexSet, VertexSet) = default;

private:
    std::uint64_t bits_ = 0;
};

/// Canonical order used for deterministic output: by size, then lexicographically
/// on the sorted element lists.
bool canonical_less(VertexSet a, VertexSet b);

/// Apply a vertex permutation (perm[v] is the image of v).
VertexSet permute(VertexSet s, const std::vector<int>& perm);

}  // namespace cmlabel

template <>
struct std::hash<cmlabel::VertexSet> {
    std::size_t operator()(cmlabel::VertexSet s) const noexcept { return std::hash<std::uint64_t>{}(s.bits()); }
};
