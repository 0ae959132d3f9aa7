#include <chibound/certificate.hpp>

#include <sstream>

namespace chibound {

auto verify_certificate(const Graph & g, const Certificate & certificate) -> bool
{
    if (auto witness = std::get_if<PatternWitness>(&certificate))
        return verify_witness(g, *witness);

    const auto & clique = std::get<CliqueCertificate>(certificate);
    VertexSet members(g.order());
    for (auto v : clique.members) {
        if (v < 0 || v >= g.order() || members.contains(v))
            return false;
        members.insert(v);
    }
    return is_clique(g, members);
}

auto describe(const Certificate & certificate) -> std::string
{
    std::ostringstream out;
    const std::vector<Vertex> * vertices = nullptr;
    if (auto witness = std::get_if<PatternWitness>(&certificate)) {
        out << "induced " << witness->pattern << " on";
        vertices = &witness->embedding;
    }
    else {
        const auto & clique = std::get<CliqueCertificate>(certificate);
        out << "clique of size " << clique.members.size() << " on";
        vertices = &clique.members;
    }
    for (auto v : *vertices)
        out << ' ' << v;
    return out.str();
}

}
