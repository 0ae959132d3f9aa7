#include <chibound/clique.hpp>

#include <algorithm>

namespace chibound {

namespace
{
    // Removal order of the min-degree peeling, reversed: dense cores first.
    auto degeneracy_order(const Graph & g, const VertexSet & within) -> std::vector<Vertex>
    {
        auto remaining = within;
        std::vector<Vertex> removed;
        while (! remaining.empty()) {
            Vertex pick = -1;
            int pick_degree = 0;
            for (auto v : remaining) {
                auto d = (g.neighbors(v) & remaining).size();
                if (pick == -1 || d < pick_degree) {
                    pick = v;
                    pick_degree = d;
                }
            }
            removed.push_back(pick);
            remaining.erase(pick);
        }
        std::reverse(removed.begin(), removed.end());
        return removed;
    }

    // Bitset branch and bound with a greedy colouring bound, run over a copy
    // of G[within] relabelled so that bit order is the degeneracy order.
    class Solver
    {
    public:
        Solver(const Graph & g, const VertexSet & within) :
            order_(degeneracy_order(g, within)),
            graph_(induced(g, std::span<const Vertex>(order_)).graph)
        {
        }

        /// Best clique found, stopping early once one of size stop_at exists.
        /// Only cliques larger than floor are reported.
        auto run(int floor, int stop_at) -> std::vector<Vertex>
        {
            best_size_ = floor;
            stop_at_ = stop_at;
            best_.clear();
            done_ = false;
            std::vector<Vertex> current;
            if (graph_.order() > 0)
                expand(current, graph_.vertices());
            std::vector<Vertex> result;
            for (auto v : best_)
                result.push_back(order_[static_cast<std::size_t>(v)]);
            std::sort(result.begin(), result.end());
            return result;
        }

    private:
        void expand(std::vector<Vertex> & current, VertexSet candidates)
        {
            std::vector<Vertex> sorted;
            std::vector<int> bounds;
            auto uncoloured = candidates;
            int colour = 0;
            while (! uncoloured.empty()) {
                ++colour;
                auto layer = uncoloured;
                while (! layer.empty()) {
                    auto v = layer.first();
                    layer -= graph_.neighbors(v);
                    layer.erase(v);
                    uncoloured.erase(v);
                    sorted.push_back(v);
                    bounds.push_back(colour);
                }
            }

            for (auto i = static_cast<int>(sorted.size()) - 1; i >= 0; --i) {
                if (static_cast<int>(current.size()) + bounds[static_cast<std::size_t>(i)] <= best_size_)
                    return;
                auto v = sorted[static_cast<std::size_t>(i)];
                current.push_back(v);
                auto next = candidates & graph_.neighbors(v);
                if (next.empty()) {
                    if (static_cast<int>(current.size()) > best_size_) {
                        best_ = current;
                        best_size_ = static_cast<int>(current.size());
                        done_ = best_size_ >= stop_at_;
                    }
                }
                else
                    expand(current, next);
                current.pop_back();
                if (done_)
                    return;
                candidates.erase(v);
            }
        }

        std::vector<Vertex> order_;
        Graph graph_;
        std::vector<Vertex> best_;
        int best_size_ = 0;
        int stop_at_ = 0;
        bool done_ = false;
    };
}

auto has_clique_of_size(const Graph & g, const VertexSet & within, int size) -> bool
{
    if (size <= 0)
        return true;
    if (within.size() < size)
        return false;
    if (size == 1)
        return true;
    Solver solver(g, within);
    return ! solver.run(size - 1, size).empty();
}

auto clique_number_within(const Graph & g, const VertexSet & within) -> int
{
    if (within.empty())
        return 0;
    Solver solver(g, within);
    return static_cast<int>(solver.run(0, within.size() + 1).size());
}

auto clique_number(const Graph & g) -> int
{
    return clique_number_within(g, g.vertices());
}

auto max_clique_within(const Graph & g, const VertexSet & within) -> CliqueResult
{
    auto omega = clique_number_within(g, within);
    CliqueResult result;
    auto candidates = within;
    while (result.size() < omega) {
        auto need = omega - result.size() - 1;
        for (auto v : candidates) {
            auto rest = (candidates & g.neighbors(v)).above(v);
            if (has_clique_of_size(g, rest, need)) {
                result.members.push_back(v);
                candidates = rest;
                break;
            }
        }
    }
    return result;
}

auto max_clique(const Graph & g) -> CliqueResult
{
    return max_clique_within(g, g.vertices());
}

}
