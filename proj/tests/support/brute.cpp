#include "brute.hpp"

#include <algorithm>
#include <deque>

namespace chibound::brute {

namespace {

auto matches(const Graph & host, const Graph & pattern, const std::vector<Vertex> & image) -> bool
{
    auto k = pattern.order();
    for (int a = 0; a < k; ++a)
        for (int b = a + 1; b < k; ++b)
            if (host.adjacent(image[a], image[b]) != pattern.adjacent(a, b))
                return false;
    return true;
}

auto color_from(const Graph & g, int k, std::vector<int> & colors, int v) -> bool
{
    if (v == g.order())
        return true;
    for (int c = 0; c < k; ++c) {
        auto clash = false;
        for (int u = 0; u < v && ! clash; ++u)
            clash = g.adjacent(u, v) && colors[u] == c;
        if (clash)
            continue;
        colors[v] = c;
        if (color_from(g, k, colors, v + 1))
            return true;
    }
    colors[v] = -1;
    return false;
}

}

auto subset(int n, unsigned long long mask) -> std::vector<Vertex>
{
    std::vector<Vertex> result;
    for (int v = 0; v < n; ++v)
        if (mask >> v & 1ULL)
            result.push_back(v);
    return result;
}

auto has_induced(const Graph & host, const Graph & pattern) -> bool
{
    auto n = host.order();
    auto k = pattern.order();
    if (k > n)
        return false;
    for (unsigned long long mask = 0; mask < (1ULL << n); ++mask) {
        if (__builtin_popcountll(mask) != k)
            continue;
        auto image = subset(n, mask);
        do {
            if (matches(host, pattern, image))
                return true;
        } while (std::next_permutation(image.begin(), image.end()));
    }
    return false;
}

auto clique_number(const Graph & g) -> int
{
    auto n = g.order();
    int best = 0;
    for (unsigned long long mask = 1; mask < (1ULL << n); ++mask) {
        auto s = subset(n, mask);
        if (static_cast<int>(s.size()) <= best)
            continue;
        auto clique = true;
        for (std::size_t a = 0; a < s.size() && clique; ++a)
            for (std::size_t b = a + 1; b < s.size() && clique; ++b)
                clique = g.adjacent(s[a], s[b]);
        if (clique)
            best = static_cast<int>(s.size());
    }
    return best;
}

auto colorable(const Graph & g, int k) -> bool
{
    std::vector<int> colors(static_cast<std::size_t>(g.order()), -1);
    return color_from(g, k, colors, 0);
}

auto chromatic_number(const Graph & g) -> int
{
    int k = 0;
    while (! colorable(g, k))
        ++k;
    return k;
}

auto is_bipartite(const Graph & g) -> bool
{
    auto n = g.order();
    std::vector<int> side(static_cast<std::size_t>(n), -1);
    for (int s = 0; s < n; ++s) {
        if (side[s] != -1)
            continue;
        side[s] = 0;
        std::deque<int> queue{s};
        while (! queue.empty()) {
            auto u = queue.front();
            queue.pop_front();
            for (int v = 0; v < n; ++v) {
                if (! g.adjacent(u, v))
                    continue;
                if (side[v] == -1) {
                    side[v] = 1 - side[u];
                    queue.push_back(v);
                }
                else if (side[v] == side[u])
                    return false;
            }
        }
    }
    return true;
}

auto is_proper(const Graph & g, const std::vector<int> & colors) -> bool
{
    if (static_cast<int>(colors.size()) != g.order())
        return false;
    for (int u = 0; u < g.order(); ++u) {
        if (colors[u] < 0)
            return false;
        for (int v = u + 1; v < g.order(); ++v)
            if (g.adjacent(u, v) && colors[u] == colors[v])
                return false;
    }
    return true;
}

}
