#include "nbrw/graph.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <stdexcept>

#include "nbrw/parallel.hpp"

namespace nbrw {

namespace {

void check_vertex(std::size_t n, Vertex v) {
    if (v < 0 || static_cast<std::size_t>(v) >= n) {
        throw GraphError("vertex index " + std::to_string(v) + " out of range [0, " +
                         std::to_string(n) + ")");
    }
}

}  // namespace

Graph Graph::from_adjacency(std::vector<std::vector<Vertex>> adjacency,
                            std::vector<std::string> labels) {
    const std::size_t n = adjacency.size();
    if (n == 0) throw GraphError("graph must have at least one vertex");
    if (!labels.empty() && labels.size() != n) {
        throw GraphError("label count " + std::to_string(labels.size()) +
                         " does not match vertex count " + std::to_string(n));
    }
    const std::size_t d = adjacency[0].size();
    if (d < 3) throw GraphError("degree must be at least 3, got " + std::to_string(d));

    Graph g;
    g.n_ = n;
    g.d_ = static_cast<int>(d);
    g.adj_.reserve(n * d);
    for (std::size_t v = 0; v < n; ++v) {
        auto& row = adjacency[v];
        if (row.size() != d) {
            throw GraphError("vertex " + std::to_string(v) + " has degree " +
                             std::to_string(row.size()) + ", expected " + std::to_string(d));
        }
        std::sort(row.begin(), row.end());
        for (std::size_t k = 0; k < d; ++k) {
            check_vertex(n, row[k]);
            if (static_cast<std::size_t>(row[k]) == v) {
                throw GraphError("self-loop at vertex " + std::to_string(v));
            }
            if (k > 0 && row[k] == row[k - 1]) {
                throw GraphError("repeated edge {" + std::to_string(v) + ", " +
                                 std::to_string(row[k]) + "}");
            }
        }
        g.adj_.insert(g.adj_.end(), row.begin(), row.end());
    }
    for (std::size_t v = 0; v < n; ++v) {
        for (Vertex u : g.neighbors(static_cast<Vertex>(v))) {
            if (!g.has_edge(u, static_cast<Vertex>(v))) {
                throw GraphError("adjacency is not symmetric at {" + std::to_string(v) + ", " +
                                 std::to_string(u) + "}");
            }
        }
    }
    g.labels_ = std::move(labels);
    return g;
}

Graph Graph::from_edges(std::size_t n, int degree, std::vector<Edge> edges,
                        std::vector<std::string> labels) {
    if (n == 0) throw GraphError("graph must have at least one vertex");
    if (degree < 3) throw GraphError("degree must be at least 3, got " + std::to_string(degree));
    std::vector<std::vector<Vertex>> adjacency(n);
    for (auto [u, v] : edges) {
        check_vertex(n, u);
        check_vertex(n, v);
        if (u == v) throw GraphError("self-loop at vertex " + std::to_string(u));
        adjacency[u].push_back(v);
        adjacency[v].push_back(u);
    }
    for (std::size_t v = 0; v < n; ++v) {
        if (adjacency[v].size() != static_cast<std::size_t>(degree)) {
            throw GraphError("vertex " + std::to_string(v) + " has degree " +
                             std::to_string(adjacency[v].size()) + ", expected " +
                             std::to_string(degree));
        }
    }
    return from_adjacency(std::move(adjacency), std::move(labels));
}

bool Graph::has_edge(Vertex u, Vertex v) const {
    auto row = neighbors(u);
    return std::binary_search(row.begin(), row.end(), v);
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(n_ * d_ / 2);
    for (std::size_t u = 0; u < n_; ++u) {
        for (Vertex v : neighbors(static_cast<Vertex>(u))) {
            if (static_cast<Vertex>(u) < v) out.emplace_back(static_cast<Vertex>(u), v);
        }
    }
    return out;
}

Graph Graph::with_homogeneous(bool flag) const {
    Graph g = *this;
    g.homogeneous_ = flag;
    return g;
}

std::size_t DistanceProfile::reachable() const {
    return static_cast<std::size_t>(
        std::count_if(dist.begin(), dist.end(), [](int v) { return v != unreachable; }));
}

std::vector<std::size_t> DistanceProfile::layer_sizes() const {
    std::vector<std::size_t> layers(static_cast<std::size_t>(eccentricity) + 1, 0);
    for (int v : dist) {
        if (v != unreachable) ++layers[static_cast<std::size_t>(v)];
    }
    return layers;
}

DistanceProfile bfs_distances(const Graph& g, Vertex x) {
    check_vertex(g.size(), x);
    DistanceProfile out;
    out.source = x;
    out.dist.assign(g.size(), DistanceProfile::unreachable);
    std::vector<Vertex> queue;
    queue.reserve(g.size());
    queue.push_back(x);
    out.dist[x] = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        Vertex u = queue[head];
        for (Vertex w : g.neighbors(u)) {
            if (out.dist[w] == DistanceProfile::unreachable) {
                out.dist[w] = out.dist[u] + 1;
                queue.push_back(w);
            }
        }
    }
    out.eccentricity = out.dist[queue.back()];
    return out;
}

int girth(const Graph& g) {
    const std::size_t n = g.size();
    int best = std::numeric_limits<int>::max();
    std::vector<int> dist(n);
    std::vector<Vertex> parent(n);
    std::vector<Vertex> queue;
    queue.reserve(n);
    for (std::size_t s = 0; s < n; ++s) {
        std::fill(dist.begin(), dist.end(), -1);
        queue.clear();
        queue.push_back(static_cast<Vertex>(s));
        dist[s] = 0;
        parent[s] = -1;
        for (std::size_t head = 0; head < queue.size(); ++head) {
            Vertex u = queue[head];
            // Any cycle found from here on has length >= 2 dist[u] + 1.
            if (2 * dist[u] + 1 >= best) break;
            for (Vertex w : g.neighbors(u)) {
                if (dist[w] < 0) {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    queue.push_back(w);
                } else if (w != parent[u]) {
                    best = std::min(best, dist[u] + dist[w] + 1);
                }
            }
        }
    }
    if (best == std::numeric_limits<int>::max()) {
        throw std::logic_error("girth: graph has no cycle");
    }
    return best;
}

std::size_t distance_tail_count(const DistanceProfile& profile, double ell) {
    if (!(ell >= 0.0)) throw std::invalid_argument("distance_tail_count: ell must be >= 0");
    std::size_t count = 0;
    for (int v : profile.dist) {
        if (v == DistanceProfile::unreachable || static_cast<double>(v) > ell) ++count;
    }
    return count;
}

std::size_t distance_tail_count(const Graph& g, Vertex x, double ell) {
    return distance_tail_count(bfs_distances(g, x), ell);
}

std::vector<std::uint8_t> two_coloring(const Graph& g) {
    const std::size_t n = g.size();
    std::vector<std::uint8_t> color(n, 2);
    std::vector<Vertex> queue;
    queue.reserve(n);
    for (std::size_t s = 0; s < n; ++s) {
        if (color[s] != 2) continue;
        color[s] = 0;
        queue.clear();
        queue.push_back(static_cast<Vertex>(s));
        for (std::size_t head = 0; head < queue.size(); ++head) {
            Vertex u = queue[head];
            for (Vertex w : g.neighbors(u)) {
                if (color[w] == 2) {
                    color[w] = static_cast<std::uint8_t>(1 - color[u]);
                    queue.push_back(w);
                } else if (color[w] == color[u]) {
                    return {};
                }
            }
        }
    }
    return color;
}

bool is_bipartite(const Graph& g) { return !two_coloring(g).empty(); }

bool is_connected(const Graph& g) { return bfs_distances(g, 0).reachable() == g.size(); }

std::vector<DistanceProfile> all_pairs_distances(const Graph& g) {
    std::vector<DistanceProfile> out(g.size());
    parallel_for(g.size(), [&](std::size_t s) { out[s] = bfs_distances(g, static_cast<Vertex>(s)); });
    return out;
}

int diameter(const Graph& g) {
    int best = 0;
    for (const auto& profile : all_pairs_distances(g)) {
        if (profile.reachable() != g.size()) return -1;
        best = std::max(best, profile.eccentricity);
    }
    return best;
}

}  // namespace nbrw
