#include <chibound/oracle.hpp>

#include <chibound/clique.hpp>

#include <algorithm>
#include <string>
#include <vector>

namespace chibound {

namespace {

class Search
{
public:
    explicit Search(const Graph & g) :
        g_(g), colors_(static_cast<std::size_t>(g.order()), -1),
        seen_(static_cast<std::size_t>(g.order()), VertexSet(g.order() + 1))
    {
    }

    /// Greedy in degree order: the starting upper bound.
    void greedy()
    {
        std::vector<Vertex> order;
        for (auto v : g_.vertices())
            order.push_back(v);
        std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return g_.degree(a) > g_.degree(b); });

        std::vector<int> result(colors_.size(), -1);
        int used = 0;
        for (auto v : order) {
            int c = 0;
            for (bool clash = true; clash; ) {
                clash = false;
                for (auto u : g_.neighbors(v))
                    if (result[static_cast<std::size_t>(u)] == c) {
                        clash = true;
                        ++c;
                        break;
                    }
            }
            result[static_cast<std::size_t>(v)] = c;
            used = std::max(used, c + 1);
        }
        best_ = result;
        best_count_ = used;
    }

    /// Seeds the clique so its vertices are pre-coloured 0..k-1, which
    /// removes colour symmetry on them.
    void seed(const std::vector<Vertex> & clique)
    {
        for (std::size_t k = 0; k < clique.size(); ++k)
            assign(clique[k], static_cast<int>(k));
        used_ = static_cast<int>(clique.size());
        floor_ = used_;
    }

    void run(int remaining)
    {
        if (best_count_ == floor_)
            return;
        if (remaining == 0) {
            if (used_ < best_count_) {
                best_ = colors_;
                best_count_ = used_;
            }
            return;
        }

        auto v = pick();
        // Colours 0..used_ - 1 plus one new colour, if that can still improve.
        auto top = std::min(used_ + 1, best_count_ - 1);
        for (int c = 0; c < top; ++c) {
            if (seen_[static_cast<std::size_t>(v)].contains(c))
                continue;
            auto before = used_;
            used_ = std::max(used_, c + 1);
            auto undo = assign(v, c);
            run(remaining - 1);
            unassign(v, c, undo);
            used_ = before;
            if (best_count_ == floor_)
                return;
        }
    }

    auto best() const -> const std::vector<int> & { return best_; }
    auto best_count() const -> int { return best_count_; }

private:
    /// Highest saturation, ties by degree then by id.
    auto pick() const -> Vertex
    {
        Vertex chosen = -1;
        int chosen_sat = -1;
        int chosen_deg = -1;
        for (auto v : g_.vertices()) {
            if (colors_[static_cast<std::size_t>(v)] != -1)
                continue;
            auto sat = seen_[static_cast<std::size_t>(v)].size();
            auto deg = g_.degree(v);
            if (sat > chosen_sat || (sat == chosen_sat && deg > chosen_deg)) {
                chosen = v;
                chosen_sat = sat;
                chosen_deg = deg;
            }
        }
        return chosen;
    }

    /// Marks c as seen by v's neighbours; returns the neighbours that did
    /// not see it before.
    auto assign(Vertex v, int c) -> std::vector<Vertex>
    {
        colors_[static_cast<std::size_t>(v)] = c;
        std::vector<Vertex> fresh;
        for (auto u : g_.neighbors(v)) {
            auto & s = seen_[static_cast<std::size_t>(u)];
            if (! s.contains(c)) {
                s.insert(c);
                fresh.push_back(u);
            }
        }
        return fresh;
    }

    void unassign(Vertex v, int c, const std::vector<Vertex> & fresh)
    {
        colors_[static_cast<std::size_t>(v)] = -1;
        for (auto u : fresh)
            seen_[static_cast<std::size_t>(u)].erase(c);
    }

    const Graph & g_;
    std::vector<int> colors_;
    /// seen_[v] holds the colours on v's coloured neighbours.
    std::vector<VertexSet> seen_;
    std::vector<int> best_;
    int best_count_ = 0;
    int used_ = 0;
    int floor_ = 0;
};

}

auto chromatic_number(const Graph & g, OracleOptions options) -> OracleResult
{
    if (g.order() > options.max_order)
        throw SizeGuardExceeded("chromatic number oracle refuses " + std::to_string(g.order())
            + " vertices; the guard is " + std::to_string(options.max_order));
    if (g.order() == 0)
        return OracleResult{0, Coloring{{}, 0, 0, Scheme::exact}};

    auto clique = max_clique(g);
    Search search(g);
    search.greedy();
    search.seed(clique.members);
    search.run(g.order() - clique.size());

    auto chi = search.best_count();
    auto coloring = compact(search.best(), chi, Scheme::exact);
    return OracleResult{chi, std::move(coloring)};
}

}
