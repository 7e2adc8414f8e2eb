#ifndef CHROMA_VERTEX_SET_HPP
#define CHROMA_VERTEX_SET_HPP

#include <bit>
#include <cstdint>
#include <string>

namespace chroma {

/// Set of vertex indices over a graph of order <= 64, one bit per vertex.
struct VertexSet {
    std::uint64_t bits = 0;

    constexpr VertexSet() = default;
    constexpr explicit VertexSet(std::uint64_t raw) : bits(raw) {}

    static constexpr VertexSet single(int v) { return VertexSet{std::uint64_t{1} << v}; }

    /// All vertices 0..n-1.
    static constexpr VertexSet full(int n) {
        return VertexSet{n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1};
    }

    constexpr bool contains(int v) const { return bits >> v & 1u; }
    constexpr bool empty() const { return bits == 0; }
    constexpr int size() const { return std::popcount(bits); }
    constexpr int lowest() const { return std::countr_zero(bits); }

    constexpr void add(int v) { bits |= std::uint64_t{1} << v; }
    constexpr void remove(int v) { bits &= ~(std::uint64_t{1} << v); }

    constexpr VertexSet operator|(VertexSet o) const { return VertexSet{bits | o.bits}; }
    constexpr VertexSet operator&(VertexSet o) const { return VertexSet{bits & o.bits}; }
    constexpr VertexSet operator-(VertexSet o) const { return VertexSet{bits & ~o.bits}; }
    constexpr VertexSet& operator|=(VertexSet o) { bits |= o.bits; return *this; }
    constexpr VertexSet& operator&=(VertexSet o) { bits &= o.bits; return *this; }
    constexpr bool operator==(const VertexSet&) const = default;

    constexpr bool intersects(VertexSet o) const { return (bits & o.bits) != 0; }
    constexpr bool subset_of(VertexSet o) const { return (bits & ~o.bits) == 0; }

    template <class Fn>
    void for_each(Fn&& fn) const {
        for (std::uint64_t rest = bits; rest != 0; rest &= rest - 1)
            fn(std::countr_zero(rest));
    }

    std::string to_string() const {
        std::string s = "{";
        bool first = true;
        for_each([&](int v) {
            if (!first) s += ',';
            s += std::to_string(v);
            first = false;
        });
        return s + "}";
    }
};

/// Order on vertex sets by their sorted member lists (so {0,3} < {1,2} and a
/// set precedes its proper supersets). Used for canonical class/family order.
constexpr bool set_lex_less(VertexSet a, VertexSet b) {
    std::uint64_t d = a.bits ^ b.bits;
    if (d == 0) return false;
    int low = std::countr_zero(d);
    if (a.contains(low)) return (b.bits >> low) >> 1 != 0;
    return (a.bits >> low) >> 1 == 0;
}

}  // namespace chroma

#endif
