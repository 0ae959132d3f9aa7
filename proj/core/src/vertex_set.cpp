#include <chibound/vertex_set.hpp>

#include <algorithm>
#include <stdexcept>
#include <string>

namespace chibound {

namespace
{
    constexpr int word_bits = 64;

    auto words_for(int capacity) -> std::size_t
    {
        return static_cast<std::size_t>((capacity + word_bits - 1) / word_bits);
    }
}

VertexSet::VertexSet(int capacity) : capacity_(capacity)
{
    if (capacity < 0)
        throw std::invalid_argument("negative vertex set capacity");
    words_.assign(words_for(capacity), 0);
}

VertexSet::VertexSet(int capacity, std::initializer_list<Vertex> members) : VertexSet(capacity)
{
    for (auto v : members)
        insert(v);
}

VertexSet::VertexSet(int capacity, std::span<const Vertex> members) : VertexSet(capacity)
{
    for (auto v : members)
        insert(v);
}

auto VertexSet::full(int capacity) -> VertexSet
{
    VertexSet result(capacity);
    for (auto & w : result.words_)
        w = ~std::uint64_t{0};
    if (auto tail = capacity % word_bits; tail != 0)
        result.words_.back() = (std::uint64_t{1} << tail) - 1;
    return result;
}

void VertexSet::check_range(Vertex v) const
{
    if (v < 0 || v >= capacity_)
        throw std::out_of_range("vertex " + std::to_string(v) + " outside 0.." + std::to_string(capacity_ - 1));
}

auto VertexSet::contains(Vertex v) const -> bool
{
    if (v < 0 || v >= capacity_)
        return false;
    return (words_[v / word_bits] >> (v % word_bits)) & 1U;
}

void VertexSet::insert(Vertex v)
{
    check_range(v);
    words_[v / word_bits] |= std::uint64_t{1} << (v % word_bits);
}

void VertexSet::erase(Vertex v)
{
    check_range(v);
    words_[v / word_bits] &= ~(std::uint64_t{1} << (v % word_bits));
}

void VertexSet::clear()
{
    for (auto & w : words_)
        w = 0;
}

auto VertexSet::size() const -> int
{
    int total = 0;
    for (auto w : words_)
        total += std::popcount(w);
    return total;
}

auto VertexSet::empty() const -> bool
{
    for (auto w : words_)
        if (w)
            return false;
    return true;
}

auto VertexSet::first() const -> Vertex
{
    for (std::size_t i = 0; i < words_.size(); ++i)
        if (words_[i])
            return static_cast<Vertex>(i * word_bits + std::countr_zero(words_[i]));
    return -1;
}

auto VertexSet::next(Vertex v) const -> Vertex
{
    auto start = v + 1;
    if (start >= capacity_)
        return -1;
    auto i = static_cast<std::size_t>(start / word_bits);
    auto w = words_[i] & (~std::uint64_t{0} << (start % word_bits));
    while (true) {
        if (w)
            return static_cast<Vertex>(i * word_bits + std::countr_zero(w));
        if (++i == words_.size())
            return -1;
        w = words_[i];
    }
}

auto VertexSet::members() const -> std::vector<Vertex>
{
    std::vector<Vertex> result;
    result.reserve(static_cast<std::size_t>(size()));
    for (auto v : *this)
        result.push_back(v);
    return result;
}

auto VertexSet::intersects(const VertexSet & other) const -> bool
{
    auto n = std::min(words_.size(), other.words_.size());
    for (std::size_t i = 0; i < n; ++i)
        if (words_[i] & other.words_[i])
            return true;
    return false;
}

auto VertexSet::is_subset_of(const VertexSet & other) const -> bool
{
    for (std::size_t i = 0; i < words_.size(); ++i) {
        auto theirs = i < other.words_.size() ? other.words_[i] : 0;
        if (words_[i] & ~theirs)
            return false;
    }
    return true;
}

auto VertexSet::above(Vertex v) const -> VertexSet
{
    VertexSet result = *this;
    for (std::size_t i = 0; i < result.words_.size(); ++i) {
        auto lo = static_cast<Vertex>(i * word_bits);
        if (lo + word_bits - 1 <= v)
            result.words_[i] = 0;
        else if (lo <= v)
            result.words_[i] &= ~std::uint64_t{0} << (v - lo + 1);
        else
            break;
    }
    return result;
}

auto VertexSet::operator&=(const VertexSet & other) -> VertexSet &
{
    for (std::size_t i = 0; i < words_.size(); ++i)
        words_[i] &= i < other.words_.size() ? other.words_[i] : 0;
    return *this;
}

auto VertexSet::operator|=(const VertexSet & other) -> VertexSet &
{
    if (other.capacity_ > capacity_)
        throw std::invalid_argument("vertex set union exceeds capacity");
    for (std::size_t i = 0; i < other.words_.size(); ++i)
        words_[i] |= other.words_[i];
    return *this;
}

auto VertexSet::operator-=(const VertexSet & other) -> VertexSet &
{
    auto n = std::min(words_.size(), other.words_.size());
    for (std::size_t i = 0; i < n; ++i)
        words_[i] &= ~other.words_[i];
    return *this;
}

}
