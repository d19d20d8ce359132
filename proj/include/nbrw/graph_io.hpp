#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "nbrw/graph.hpp"

namespace nbrw {

// Raised when a file cannot be opened or parsed.
class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// {"n": int, "d": int, "edges": [[u, v], ...], "labels": [...]?, "homogeneous": true?}
// Edges are emitted with u < v in lexicographic order, so equal graphs give
// byte-identical files.
nlohmann::ordered_json graph_to_json(const Graph& g);
Graph graph_from_json(const nlohmann::json& j);

std::string serialize_graph(const Graph& g);
void write_graph_file(const Graph& g, const std::filesystem::path& path);
Graph read_graph_file(const std::filesystem::path& path);

// Reads a whole file; throws IoError when it is missing or unreadable.
std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, const std::string& text);

// 64-bit FNV-1a digest, hex encoded; identifies input files in run manifests.
std::string fnv1a_hex(const std::string& bytes);

}  // namespace nbrw
