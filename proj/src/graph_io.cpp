#include "nbrw/graph_io.hpp"

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace nbrw {

nlohmann::ordered_json graph_to_json(const Graph& g) {
    nlohmann::ordered_json j;
    j["n"] = g.size();
    j["d"] = g.degree();
    auto edges = nlohmann::ordered_json::array();
    for (auto [u, v] : g.edges()) edges.push_back({u, v});
    j["edges"] = std::move(edges);
    if (!g.labels().empty()) j["labels"] = g.labels();
    if (g.homogeneous()) j["homogeneous"] = true;
    return j;
}

Graph graph_from_json(const nlohmann::json& j) {
    try {
        auto n = j.at("n").get<std::size_t>();
        auto d = j.at("d").get<int>();
        std::vector<Edge> edges;
        for (const auto& e : j.at("edges")) {
            if (!e.is_array() || e.size() != 2) throw GraphError("edge entries must be [u, v] pairs");
            edges.emplace_back(e[0].get<Vertex>(), e[1].get<Vertex>());
        }
        std::vector<std::string> labels;
        if (j.contains("labels")) labels = j.at("labels").get<std::vector<std::string>>();
        Graph g = Graph::from_edges(n, d, std::move(edges), std::move(labels));
        if (j.value("homogeneous", false)) g = g.with_homogeneous(true);
        return g;
    } catch (const nlohmann::json::exception& e) {
        throw IoError(std::string("malformed graph JSON: ") + e.what());
    }
}

std::string serialize_graph(const Graph& g) { return graph_to_json(g).dump() + "\n"; }

std::string read_text_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open '" + path.string() + "': file not found or unreadable");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot write '" + path.string() + "'");
    out << text;
    if (!out) throw IoError("write failed for '" + path.string() + "'");
}

void write_graph_file(const Graph& g, const std::filesystem::path& path) {
    write_text_file(path, serialize_graph(g));
}

Graph read_graph_file(const std::filesystem::path& path) {
    auto text = read_text_file(path);
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw IoError("cannot parse '" + path.string() + "': " + e.what());
    }
    return graph_from_json(j);
}

std::string fnv1a_hex(const std::string& bytes) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

}  // namespace nbrw
