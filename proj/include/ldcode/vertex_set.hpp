#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <string>
#include <vector>

namespace ldcode {

using Vertex = int;

/// Largest graph order representable by a VertexSet.
inline constexpr int kMaxOrder = 64;

/// A set of vertices drawn from 0..63, stored as a single 64-bit mask.
class VertexSet {
public:
    class iterator {
    public:
        using iterator_category = std::forward_iterator_tag;
        using value_type = Vertex;
        using difference_type = std::ptrdiff_t;
        using pointer = const Vertex*;
        using reference = Vertex;

        constexpr iterator() = default;
        constexpr explicit iterator(std::uint64_t rest) : rest_(rest) {}

        constexpr Vertex operator*() const { return std::countr_zero(rest_); }
        constexpr iterator& operator++()
        {
            rest_ &= rest_ - 1;
            return *this;
        }
        constexpr iterator operator++(int)
        {
            auto old = *this;
            ++*this;
            return old;
        }
        constexpr bool operator==(const iterator&) const = default;

    private:
        std::uint64_t rest_ = 0;
    };

    constexpr VertexSet() = default;
    constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}
    constexpr VertexSet(std::initializer_list<Vertex> members)
    {
        for (Vertex v : members)
            insert(v);
    }

    /// {0, 1, ..., n-1}
    static constexpr VertexSet first(int n)
    {
        return VertexSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
    }
    static constexpr VertexSet single(Vertex v) { return VertexSet(std::uint64_t{1} << v); }
    static VertexSet from(const std::vector<Vertex>& members)
    {
        VertexSet s;
        for (Vertex v : members)
            s.insert(v);
        return s;
    }

    [[nodiscard]] constexpr std::uint64_t bits() const { return bits_; }
    [[nodiscard]] constexpr bool contains(Vertex v) const { return (bits_ >> v) & 1U; }
    [[nodiscard]] constexpr int size() const { return std::popcount(bits_); }
    [[nodiscard]] constexpr bool empty() const { return bits_ == 0; }
    [[nodiscard]] constexpr Vertex front() const { return std::countr_zero(bits_); }
    [[nodiscard]] constexpr bool is_subset_of(VertexSet other) const
    {
        return (bits_ & ~other.bits_) == 0;
    }
    [[nodiscard]] constexpr bool intersects(VertexSet other) const { return (bits_ & other.bits_) != 0; }

    constexpr void insert(Vertex v) { bits_ |= std::uint64_t{1} << v; }
    constexpr void erase(Vertex v) { bits_ &= ~(std::uint64_t{1} << v); }

    [[nodiscard]] constexpr iterator begin() const { return iterator(bits_); }
    [[nodiscard]] constexpr iterator end() const { return iterator(0); }

    [[nodiscard]] std::vector<Vertex> to_vector() const { return {begin(), end()}; }

    /// "0,3,5" style rendering used by the CLI and reports.
    [[nodiscard]] std::string to_string() const
    {
        std::string out;
        for (Vertex v : *this) {
            if (!out.empty())
                out += ',';
            out += std::to_string(v);
        }
        return out;
    }

    friend constexpr VertexSet operator|(VertexSet a, VertexSet b) { return VertexSet(a.bits_ | b.bits_); }
    friend constexpr VertexSet operator&(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & b.bits_); }
    friend constexpr VertexSet operator^(VertexSet a, VertexSet b) { return VertexSet(a.bits_ ^ b.bits_); }
    friend constexpr VertexSet operator-(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & ~b.bits_); }
    constexpr VertexSet& operator|=(VertexSet o)
    {
        bits_ |= o.bits_;
        return *this;
    }
    constexpr VertexSet& operator&=(VertexSet o)
    {
        bits_ &= o.bits_;
        return *this;
    }

    constexpr bool operator==(const VertexSet&) const = default;

    /// Orders sets by their sorted member lists, lexicographically.
    friend constexpr bool lex_less(VertexSet a, VertexSet b)
    {
        while (a.bits_ != 0 && b.bits_ != 0) {
            Vertex x = a.front();
            Vertex y = b.front();
            if (x != y)
                return x < y;
            a.erase(x);
            b.erase(y);
        }
        return a.bits_ == 0 && b.bits_ != 0;
    }

private:
    std::uint64_t bits_ = 0;
};

} // namespace ldcode
