#include <chibound/graph_class.hpp>

#include <stdexcept>

namespace chibound {

auto to_string(GraphClass cls) -> std::string_view
{
    switch (cls) {
    case GraphClass::gem_free: return "gem";
    case GraphClass::butterfly_free: return "butterfly";
    case GraphClass::diamond_free: return "diamond";
    }
    return "unknown";
}

auto parse_graph_class(std::string_view name) -> std::optional<GraphClass>
{
    if (name == "gem")
        return GraphClass::gem_free;
    if (name == "butterfly")
        return GraphClass::butterfly_free;
    if (name == "diamond")
        return GraphClass::diamond_free;
    return std::nullopt;
}

auto forbidden_patterns(GraphClass cls) -> std::vector<Pattern>
{
    switch (cls) {
    case GraphClass::gem_free: return {patterns::p2_union_p4(), patterns::gem()};
    case GraphClass::butterfly_free: return {patterns::p2_union_p4(), patterns::butterfly()};
    case GraphClass::diamond_free: return {patterns::p2_union_p4(), patterns::diamond()};
    }
    return {};
}

auto binding_bound(GraphClass cls, int omega) -> int
{
    if (omega < 0)
        throw std::invalid_argument("negative clique number");
    if (omega <= 1)
        return omega;
    switch (cls) {
    case GraphClass::gem_free: return 3 * omega - 2;
    case GraphClass::butterfly_free: return (omega * omega + 3 * omega - 2) / 2;
    case GraphClass::diamond_free:
        switch (omega) {
        case 2: return 4;
        case 3: return 7;
        case 4: return 9;
        default: return 2 * omega - 1;
        }
    }
    return 0;
}

}
