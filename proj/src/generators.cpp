#include "nbrw/generators.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace nbrw {

namespace {

constexpr std::array<std::string_view, 5> kFixtureNames = {"k4", "k5", "petersen", "heawood",
                                                           "cube3"};

Graph complete_graph(int n) {
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    return Graph::from_edges(static_cast<std::size_t>(n), n - 1, std::move(edges));
}

Graph petersen() {
    std::vector<Edge> edges;
    for (int i = 0; i < 5; ++i) {
        edges.emplace_back(i, (i + 1) % 5);              // outer 5-cycle
        edges.emplace_back(5 + i, 5 + (i + 2) % 5);      // inner pentagram
        edges.emplace_back(i, 5 + i);                    // spokes
    }
    return Graph::from_edges(10, 3, std::move(edges));
}

Graph heawood() {
    // LCF notation [5, -5]^7.
    std::vector<Edge> edges;
    for (int i = 0; i < 14; ++i) {
        edges.emplace_back(i, (i + 1) % 14);
        if (i % 2 == 0) edges.emplace_back(i, (i + 5) % 14);
    }
    return Graph::from_edges(14, 3, std::move(edges));
}

Graph cube3() {
    std::vector<Edge> edges;
    for (int v = 0; v < 8; ++v)
        for (int bit = 0; bit < 3; ++bit) {
            int w = v ^ (1 << bit);
            if (v < w) edges.emplace_back(v, w);
        }
    return Graph::from_edges(8, 3, std::move(edges));
}

// 2x2 matrices over F_q, row-major.
using Mat = std::array<std::int64_t, 4>;

std::int64_t mod(std::int64_t a, std::int64_t q) {
    a %= q;
    return a < 0 ? a + q : a;
}

std::int64_t pow_mod(std::int64_t base, std::int64_t exp, std::int64_t q) {
    std::int64_t result = 1;
    base = mod(base, q);
    while (exp > 0) {
        if (exp & 1) result = result * base % q;
        base = base * base % q;
        exp >>= 1;
    }
    return result;
}

std::int64_t inv_mod(std::int64_t a, std::int64_t q) { return pow_mod(a, q - 2, q); }

Mat mat_mul(const Mat& x, const Mat& y, std::int64_t q) {
    return {(x[0] * y[0] + x[1] * y[2]) % q, (x[0] * y[1] + x[1] * y[3]) % q,
            (x[2] * y[0] + x[3] * y[2]) % q, (x[2] * y[1] + x[3] * y[3]) % q};
}

Mat mat_scale(const Mat& m, std::int64_t s, std::int64_t q) {
    return {m[0] * s % q, m[1] * s % q, m[2] * s % q, m[3] * s % q};
}

std::int64_t det(const Mat& m, std::int64_t q) { return mod(m[0] * m[3] - m[1] * m[2], q); }

// Projective representative: first nonzero entry scaled to 1.
Mat pgl_canonical(const Mat& m, std::int64_t q) {
    for (auto e : m) {
        if (e != 0) return mat_scale(m, inv_mod(e, q), q);
    }
    throw std::logic_error("zero matrix in PGL2");
}

std::uint64_t key(const Mat& m, std::int64_t q) {
    return static_cast<std::uint64_t>(((m[0] * q + m[1]) * q + m[2]) * q + m[3]);
}

std::string mat_label(const Mat& m) {
    return "[[" + std::to_string(m[0]) + "," + std::to_string(m[1]) + "],[" + std::to_string(m[2]) +
           "," + std::to_string(m[3]) + "]]";
}

}  // namespace

Fixture fixture_from_name(std::string_view name) {
    for (std::size_t i = 0; i < kFixtureNames.size(); ++i) {
        if (kFixtureNames[i] == name) return static_cast<Fixture>(i);
    }
    throw std::invalid_argument("unknown fixture '" + std::string(name) +
                                "' (expected k4, k5, petersen, heawood or cube3)");
}

std::string_view fixture_name(Fixture f) { return kFixtureNames[static_cast<std::size_t>(f)]; }

std::vector<std::string_view> fixture_names() { return {kFixtureNames.begin(), kFixtureNames.end()}; }

Graph gen_fixture(Fixture f) {
    Graph g;
    switch (f) {
        case Fixture::k4: g = complete_graph(4); break;
        case Fixture::k5: g = complete_graph(5); break;
        case Fixture::petersen: g = petersen(); break;
        case Fixture::heawood: g = heawood(); break;
        case Fixture::cube3: g = cube3(); break;
    }
    return g.with_homogeneous(true);
}

Graph gen_fixture(std::string_view name) { return gen_fixture(fixture_from_name(name)); }

Graph gen_random_regular(const RandomRegularParams& params) {
    const std::size_t n = params.n;
    const int d = params.d;
    if (d < 3) throw std::invalid_argument("random regular graph: d must be >= 3");
    if (n <= static_cast<std::size_t>(d)) throw std::invalid_argument("random regular graph: need n > d");
    if ((n * static_cast<std::size_t>(d)) % 2 != 0) {
        throw std::invalid_argument("random regular graph: n*d must be even (n=" + std::to_string(n) +
                                    ", d=" + std::to_string(d) + ")");
    }
    if (params.max_retries < 1) throw std::invalid_argument("random regular graph: max_retries < 1");

    std::mt19937_64 rng(params.seed);
    std::vector<Vertex> stubs;
    stubs.reserve(n * d);
    std::vector<std::vector<Vertex>> adjacency(n);
    for (int attempt = 1; attempt <= params.max_retries; ++attempt) {
        stubs.clear();
        for (std::size_t v = 0; v < n; ++v) stubs.insert(stubs.end(), d, static_cast<Vertex>(v));
        std::shuffle(stubs.begin(), stubs.end(), rng);

        for (auto& row : adjacency) row.clear();
        bool simple = true;
        for (std::size_t k = 0; k < stubs.size() && simple; k += 2) {
            Vertex u = stubs[k], v = stubs[k + 1];
            auto& row = adjacency[u];
            if (u == v || std::find(row.begin(), row.end(), v) != row.end()) {
                simple = false;
                break;
            }
            row.push_back(v);
            adjacency[v].push_back(u);
        }
        if (simple) return Graph::from_adjacency(std::move(adjacency));
    }
    throw std::runtime_error("random regular graph: no simple pairing after " +
                             std::to_string(params.max_retries) + " attempts");
}

bool is_prime(std::int64_t v) {
    if (v < 2) return false;
    if (v % 2 == 0) return v == 2;
    for (std::int64_t k = 3; k * k <= v; k += 2) {
        if (v % k == 0) return false;
    }
    return true;
}

int legendre_symbol(std::int64_t a, std::int64_t q) {
    auto r = pow_mod(a, (q - 1) / 2, q);
    if (r == 0) return 0;
    return r == 1 ? 1 : -1;
}

std::vector<std::array<int, 4>> lps_quaternions(int p) {
    const int bound = static_cast<int>(std::ceil(std::sqrt(static_cast<double>(p))));
    std::vector<std::array<int, 4>> out;
    for (int a = 1; a <= bound; a += 2)
        for (int b = -bound; b <= bound; ++b)
            for (int c = -bound; c <= bound; ++c)
                for (int d = -bound; d <= bound; ++d) {
                    if (b % 2 != 0 || c % 2 != 0 || d % 2 != 0) continue;
                    if (a * a + b * b + c * c + d * d == p) out.push_back({a, b, c, d});
                }
    return out;
}

void validate_lps(const LpsParams& params) {
    const auto [p, q] = params;
    auto fail = [&](const std::string& why) {
        throw std::invalid_argument("LPS parameters p=" + std::to_string(p) + ", q=" +
                                    std::to_string(q) + ": " + why);
    };
    if (!is_prime(p) || p % 4 != 1) fail("p must be a prime congruent to 1 mod 4");
    if (!is_prime(q) || q == 2) fail("q must be an odd prime");
    if (p == q) fail("p and q must differ");
    if (static_cast<double>(q) <= 2.0 * std::sqrt(static_cast<double>(p))) fail("q must exceed 2 sqrt(p)");
}

std::size_t lps_order(const LpsParams& params) {
    validate_lps(params);
    auto q = static_cast<std::size_t>(params.q);
    std::size_t pgl = q * (q * q - 1);
    return legendre_symbol(params.p, params.q) == 1 ? pgl / 2 : pgl;
}

Graph gen_lps(const LpsParams& params) {
    validate_lps(params);
    const std::int64_t p = params.p;
    const std::int64_t q = params.q;
    const bool psl = legendre_symbol(p, q) == 1;

    // q = 1 mod 4: iota^2 = -1, a + bi + cj + dk -> [[a + iota b, c + iota d], [-c + iota d, a - iota b]].
    // q = 3 mod 4: x^2 + y^2 = -1, a + bi + cj + dk ->
    //   [[a + bx + dy, -by + c + dx], [-by - c + dx, a - bx - dy]].
    std::int64_t iota = 0, x = 0, y = 0;
    if (q % 4 == 1) {
        iota = 1;
        while (iota * iota % q != q - 1) ++iota;
    } else {
        bool found = false;
        for (x = 0; x < q && !found; ++x) {
            for (y = 0; y < q; ++y) {
                if ((x * x + y * y + 1) % q == 0) {
                    found = true;
                    break;
                }
            }
            if (found) break;
        }
    }
    auto embed = [&](std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d) -> Mat {
        if (q % 4 == 1) return {mod(a + iota * b, q), mod(c + iota * d, q), mod(-c + iota * d, q), mod(a - iota * b, q)};
        return {mod(a + b * x + d * y, q), mod(-b * y + c + d * x, q), mod(-b * y - c + d * x, q),
                mod(a - b * x - d * y, q)};
    };

    std::vector<Mat> gens;
    std::unordered_set<std::uint64_t> gen_keys;
    for (const auto& [a, b, c, d] : lps_quaternions(static_cast<int>(p))) {
        Mat m = embed(a, b, c, d);
        m = pgl_canonical(m, q);
        if (gen_keys.insert(key(m, q)).second) gens.push_back(m);
    }
    if (gens.size() != static_cast<std::size_t>(p + 1)) {
        throw std::logic_error("LPS: expected " + std::to_string(p + 1) + " distinct generators, found " +
                               std::to_string(gens.size()));
    }
    for (const auto& s : gens) {
        Mat adj{s[3], mod(-s[1], q), mod(-s[2], q), s[0]};
        if (!gen_keys.count(key(pgl_canonical(adj, q), q))) {
            throw std::logic_error("LPS: generator set is not closed under inverses");
        }
    }

    // Connected component of the identity under right multiplication.
    std::vector<Mat> elements{Mat{1, 0, 0, 1}};
    std::unordered_map<std::uint64_t, std::size_t> index{{key(elements[0], q), 0}};
    for (std::size_t head = 0; head < elements.size(); ++head) {
        for (const auto& s : gens) {
            Mat next = pgl_canonical(mat_mul(elements[head], s, q), q);
            if (index.emplace(key(next, q), elements.size()).second) elements.push_back(next);
        }
    }
    const std::size_t expected = lps_order(params);
    if (elements.size() != expected) {
        throw std::logic_error("LPS: Cayley graph is not connected (component of size " +
                               std::to_string(elements.size()) + ", group order " +
                               std::to_string(expected) + ")");
    }

    // Label representative: determinant 1 with first nonzero entry in
    // [1, (q-1)/2] for PSL2; first nonzero entry 1 for PGL2.
    std::vector<std::int64_t> sqrt_table(q, -1);
    for (std::int64_t r = 0; r < q; ++r) {
        if (sqrt_table[r * r % q] < 0) sqrt_table[r * r % q] = r;
    }
    std::vector<Mat> reps(elements.size());
    for (std::size_t i = 0; i < elements.size(); ++i) {
        Mat m = elements[i];
        if (psl) {
            std::int64_t root = sqrt_table[det(m, q)];
            if (root < 0) throw std::logic_error("LPS: element outside PSL2");
            m = mat_scale(m, inv_mod(root, q), q);
            auto first = *std::find_if(m.begin(), m.end(), [](std::int64_t e) { return e != 0; });
            if (first > (q - 1) / 2) m = mat_scale(m, q - 1, q);
        }
        reps[i] = m;
    }

    std::vector<std::size_t> order(elements.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return reps[a] < reps[b]; });
    std::vector<Vertex> relabel(elements.size());
    for (std::size_t pos = 0; pos < order.size(); ++pos) relabel[order[pos]] = static_cast<Vertex>(pos);

    std::vector<std::vector<Vertex>> adjacency(elements.size());
    std::vector<std::string> labels(elements.size());
    for (std::size_t i = 0; i < elements.size(); ++i) {
        auto& row = adjacency[relabel[i]];
        for (const auto& s : gens) {
            Mat next = pgl_canonical(mat_mul(elements[i], s, q), q);
            row.push_back(relabel[index.at(key(next, q))]);
        }
        labels[relabel[i]] = mat_label(reps[i]);
    }
    Graph g = Graph::from_adjacency(std::move(adjacency), std::move(labels)).with_homogeneous(true);
    if (!is_connected(g)) throw std::logic_error("LPS: constructed graph is not connected");
    return g;
}

}  // namespace nbrw
