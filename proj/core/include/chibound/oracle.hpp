#pragma once

#include <chibound/coloring.hpp>
#include <chibound/graph.hpp>

#include <stdexcept>

namespace chibound {

/// Thrown when an exhaustive routine is asked to work above its size guard.
class SizeGuardExceeded : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

struct OracleResult
{
    int chi = 0;
    /// Proper, with colors_used == chi.
    Coloring witness;
};

struct OracleOptions
{
    int max_order = 20;
};

/// Exact chromatic number by branch and bound: clique lower bound, greedy
/// upper bound, branching on the vertex of highest saturation. Deterministic.
/// Throws SizeGuardExceeded above options.max_order.
auto chromatic_number(const Graph & g, OracleOptions options = {}) -> OracleResult;

}
