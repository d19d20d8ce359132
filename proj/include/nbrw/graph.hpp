#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace nbrw {

using Vertex = std::int32_t;
using Edge = std::pair<Vertex, Vertex>;

// Raised for malformed graphs: wrong degree, loops, multi-edges, bad indices.
class GraphError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Immutable simple d-regular undirected graph. Neighbor lists are sorted
// ascending, so two graphs with the same edge set compare and serialize
// identically.
class Graph {
public:
    Graph() = default;

    static Graph from_edges(std::size_t n, int degree, std::vector<Edge> edges,
                            std::vector<std::string> labels = {});
    static Graph from_adjacency(std::vector<std::vector<Vertex>> adjacency,
                                std::vector<std::string> labels = {});

    std::size_t size() const { return n_; }
    int degree() const { return d_; }
    // p = d - 1, the branching factor of the non-backtracking walk.
    int branching() const { return d_ - 1; }

    std::span<const Vertex> neighbors(Vertex v) const {
        return {adj_.data() + static_cast<std::size_t>(v) * d_, static_cast<std::size_t>(d_)};
    }
    bool has_edge(Vertex u, Vertex v) const;

    // Edges (u, v) with u < v in lexicographic order.
    std::vector<Edge> edges() const;

    const std::vector<std::string>& labels() const { return labels_; }

    // Vertex-transitivity is structural metadata, set by constructions that
    // guarantee it (Cayley graphs, named transitive fixtures) or asserted by
    // the caller. It is never inferred.
    bool homogeneous() const { return homogeneous_; }
    Graph with_homogeneous(bool flag) const;

    bool operator==(const Graph& other) const {
        return n_ == other.n_ && d_ == other.d_ && adj_ == other.adj_;
    }

private:
    std::size_t n_ = 0;
    int d_ = 0;
    std::vector<Vertex> adj_;
    std::vector<std::string> labels_;
    bool homogeneous_ = false;
};

struct DistanceProfile {
    static constexpr int unreachable = -1;

    Vertex source = 0;
    std::vector<int> dist;
    int eccentricity = 0;  // max finite distance

    std::size_t reachable() const;
    // Number of vertices in each BFS layer, index = distance.
    std::vector<std::size_t> layer_sizes() const;
};

DistanceProfile bfs_distances(const Graph& g, Vertex x);

// Length of the shortest cycle. Throws std::logic_error if the graph is a
// forest, which cannot happen for a finite regular graph with d >= 2.
int girth(const Graph& g);

// #{y : dist(x, y) > ell}. Unreachable vertices count as infinitely far.
std::size_t distance_tail_count(const DistanceProfile& profile, double ell);
std::size_t distance_tail_count(const Graph& g, Vertex x, double ell);

// Empty when the graph has an odd cycle; otherwise a 0/1 coloring with
// color[0 of each component] = 0.
std::vector<std::uint8_t> two_coloring(const Graph& g);
bool is_bipartite(const Graph& g);

bool is_connected(const Graph& g);

// Max eccentricity over all sources; -1 when disconnected.
int diameter(const Graph& g);

// All distance profiles, one per source, in vertex order.
std::vector<DistanceProfile> all_pairs_distances(const Graph& g);

}  // namespace nbrw
