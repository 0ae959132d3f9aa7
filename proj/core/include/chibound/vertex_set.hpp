#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <span>
#include <vector>

namespace chibound {

using Vertex = int;

/// Fixed-capacity bitset over the vertex ids 0..capacity-1 of some carrier graph.
class VertexSet
{
public:
    class Iterator
    {
    public:
        using iterator_category = std::forward_iterator_tag;
        using value_type = Vertex;
        using difference_type = std::ptrdiff_t;
        using pointer = const Vertex *;
        using reference = Vertex;

        Iterator() = default;
        Iterator(const VertexSet * set, Vertex at) : set_(set), at_(at) {}

        auto operator*() const -> Vertex { return at_; }
        auto operator++() -> Iterator &
        {
            at_ = set_->next(at_);
            return *this;
        }
        auto operator++(int) -> Iterator
        {
            auto old = *this;
            ++*this;
            return old;
        }
        auto operator==(const Iterator & other) const -> bool { return at_ == other.at_; }

    private:
        const VertexSet * set_ = nullptr;
        Vertex at_ = -1;
    };

    VertexSet() = default;
    explicit VertexSet(int capacity);
    VertexSet(int capacity, std::initializer_list<Vertex> members);
    VertexSet(int capacity, std::span<const Vertex> members);

    static auto full(int capacity) -> VertexSet;

    auto capacity() const -> int { return capacity_; }
    auto contains(Vertex v) const -> bool;
    void insert(Vertex v);
    void erase(Vertex v);
    void clear();

    auto size() const -> int;
    auto empty() const -> bool;

    /// Smallest member, or -1.
    auto first() const -> Vertex;
    /// Smallest member strictly greater than v, or -1.
    auto next(Vertex v) const -> Vertex;

    auto members() const -> std::vector<Vertex>;
    auto intersects(const VertexSet & other) const -> bool;
    auto is_subset_of(const VertexSet & other) const -> bool;

    /// Members strictly greater than v.
    auto above(Vertex v) const -> VertexSet;

    auto operator&=(const VertexSet & other) -> VertexSet &;
    auto operator|=(const VertexSet & other) -> VertexSet &;
    auto operator-=(const VertexSet & other) -> VertexSet &;

    friend auto operator&(VertexSet a, const VertexSet & b) -> VertexSet { return a &= b; }
    friend auto operator|(VertexSet a, const VertexSet & b) -> VertexSet { return a |= b; }
    friend auto operator-(VertexSet a, const VertexSet & b) -> VertexSet { return a -= b; }

    auto operator==(const VertexSet & other) const -> bool = default;

    auto begin() const -> Iterator { return {this, first()}; }
    auto end() const -> Iterator { return {this, -1}; }

private:
    void check_range(Vertex v) const;

    int capacity_ = 0;
    std::vector<std::uint64_t> words_;
};

}
