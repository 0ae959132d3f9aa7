#include <chibound/cograph.hpp>

#include <algorithm>
#include <stdexcept>

namespace chibound {

namespace
{
    auto build(const Graph & g, const VertexSet & s) -> Result<Cotree, PatternWitness>
    {
        if (s.size() == 1)
            return Cotree{Cotree::Kind::leaf, s.first(), {}};

        auto split = [&](Cotree::Kind kind, const std::vector<VertexSet> & parts) -> Result<Cotree, PatternWitness> {
            Cotree node{kind, -1, {}};
            for (const auto & part : parts) {
                auto child = build(g, part);
                if (! child)
                    return child.failure();
                node.children.push_back(std::move(child).value());
            }
            return node;
        };

        if (auto parts = components(g, s); parts.size() > 1)
            return split(Cotree::Kind::disjoint_union, parts);
        if (auto parts = co_components(g, s); parts.size() > 1)
            return split(Cotree::Kind::join, parts);

        if (auto p4 = find_induced_within(g, s, patterns::p4()))
            return *p4;
        throw std::logic_error("connected and co-connected vertex set without an induced P4");
    }

    void collect(const Cotree & tree, std::vector<Vertex> & out)
    {
        if (tree.kind == Cotree::Kind::leaf)
            out.push_back(tree.vertex);
        for (const auto & child : tree.children)
            collect(child, out);
    }

    auto paint(const Cotree & tree, std::vector<int> & colors) -> int
    {
        switch (tree.kind) {
        case Cotree::Kind::leaf:
            colors[tree.vertex] = 0;
            return 1;

        case Cotree::Kind::disjoint_union: {
            // Every child colours from 0 upward, so the children share one palette.
            int width = 0;
            for (const auto & child : tree.children)
                width = std::max(width, paint(child, colors));
            return width;
        }

        case Cotree::Kind::join: {
            int offset = 0;
            for (const auto & child : tree.children) {
                auto width = paint(child, colors);
                std::vector<Vertex> members;
                collect(child, members);
                for (auto v : members)
                    colors[v] += offset;
                offset += width;
            }
            return offset;
        }
        }
        return 0;
    }
}

auto cotree(const Graph & g) -> Result<Cotree, PatternWitness>
{
    return cotree_within(g, g.vertices());
}

auto cotree_within(const Graph & g, const VertexSet & within) -> Result<Cotree, PatternWitness>
{
    if (within.empty())
        throw std::invalid_argument("cotree of an empty vertex set");
    return build(g, within);
}

auto evaluate(const Cotree & tree, int order) -> Graph
{
    std::vector<Edge> edges;
    auto walk = [&](auto && self, const Cotree & node) -> void {
        for (const auto & child : node.children)
            self(self, child);
        if (node.kind != Cotree::Kind::join)
            return;
        std::vector<std::vector<Vertex>> sides;
        for (const auto & child : node.children) {
            sides.emplace_back();
            collect(child, sides.back());
        }
        for (std::size_t a = 0; a < sides.size(); ++a)
            for (std::size_t b = a + 1; b < sides.size(); ++b)
                for (auto u : sides[a])
                    for (auto v : sides[b])
                        edges.push_back({u, v});
    };
    walk(walk, tree);
    return Graph::from_edge_list(order, edges);
}

auto leaves(const Cotree & tree) -> std::vector<Vertex>
{
    std::vector<Vertex> out;
    collect(tree, out);
    std::sort(out.begin(), out.end());
    return out;
}

auto color_cotree(const Cotree & tree, int order) -> PieceColoring
{
    PieceColoring result;
    result.colors.assign(static_cast<std::size_t>(order), -1);
    result.width = paint(tree, result.colors);
    return result;
}

auto color_cograph_within(const Graph & g, const VertexSet & within) -> Result<PieceColoring, PatternWitness>
{
    if (within.empty())
        return PieceColoring{std::vector<int>(static_cast<std::size_t>(g.order()), -1), 0};
    auto tree = cotree_within(g, within);
    if (! tree)
        return tree.failure();
    return color_cotree(*tree, g.order());
}

auto color_cograph(const Graph & g) -> Result<Coloring, PatternWitness>
{
    auto piece = color_cograph_within(g, g.vertices());
    if (! piece)
        return piece.failure();
    Coloring coloring;
    coloring.colors = piece->colors;
    coloring.colors_used = piece->width;
    coloring.bound = piece->width;
    coloring.scheme = Scheme::cograph;
    return coloring;
}

}
