#pragma once

#include <chibound/coloring.hpp>
#include <chibound/detect.hpp>
#include <chibound/result.hpp>

#include <vector>

namespace chibound {

/// Cotree of a P4-free graph. Disjoint-union and join nodes alternate along
/// every root-to-leaf path and internal nodes have at least two children.
struct Cotree
{
    enum class Kind
    {
        leaf,
        disjoint_union,
        join,
    };

    Kind kind = Kind::leaf;
    Vertex vertex = -1;
    std::vector<Cotree> children;
};

/// Recursive split on components and co-components. A graph that is
/// connected and co-connected on two or more vertices contains an induced
/// P4, which is returned instead. Throws std::invalid_argument on an empty
/// vertex set.
auto cotree(const Graph & g) -> Result<Cotree, PatternWitness>;
auto cotree_within(const Graph & g, const VertexSet & within) -> Result<Cotree, PatternWitness>;

/// The graph on `order` vertices whose edges are exactly those the cotree
/// describes; vertices that are not leaves stay isolated.
auto evaluate(const Cotree & tree, int order) -> Graph;
auto leaves(const Cotree & tree) -> std::vector<Vertex>;

/// Colouring of the leaves of a cotree; colors has one entry per host vertex
/// and -1 off the tree.
struct PieceColoring
{
    std::vector<int> colors;
    int width = 0;
};

/// Leaf: one colour. Union: children share a palette (width is the max).
/// Join: children get disjoint palettes (width is the sum).
auto color_cotree(const Cotree & tree, int order) -> PieceColoring;

/// An optimal colouring of a P4-free graph, or the P4 that prevents it.
auto color_cograph(const Graph & g) -> Result<Coloring, PatternWitness>;
/// Same for G[within]; an empty set gives width 0.
auto color_cograph_within(const Graph & g, const VertexSet & within) -> Result<PieceColoring, PatternWitness>;

}
