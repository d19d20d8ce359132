#include "nbrw/cheby.hpp"

#include <cmath>
#include <limits>
#include <string>

namespace nbrw {

namespace {

void check_degree(int degree) {
    if (degree < 0) throw std::invalid_argument("polynomial degree must be >= 0");
}

void check_p(int p) {
    if (p < 2) throw std::invalid_argument("branching factor p must be >= 2");
}

std::int64_t checked_add(std::int64_t a, std::int64_t b, int t, int p) {
    std::int64_t out;
    if (__builtin_add_overflow(a, b, &out)) throw WalkOverflow(t, max_safe_walk_length(p), p);
    return out;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b, int t, int p) {
    std::int64_t out;
    if (__builtin_mul_overflow(a, b, &out)) throw WalkOverflow(t, max_safe_walk_length(p), p);
    return out;
}

// next = A cur - c prev, checked.
void step(const Graph& g, const std::vector<std::int64_t>& cur, const std::vector<std::int64_t>& prev,
          std::int64_t c, std::vector<std::int64_t>& next, int t, int p) {
    const std::size_t n = g.size();
    for (std::size_t y = 0; y < n; ++y) {
        std::int64_t acc = 0;
        for (Vertex z : g.neighbors(static_cast<Vertex>(y))) acc = checked_add(acc, cur[z], t, p);
        next[y] = checked_add(acc, -checked_mul(c, prev[y], t, p), t, p);
    }
}

}  // namespace

double cheb_t(int degree, double x) {
    check_degree(degree);
    if (degree == 0) return 1.0;
    double prev = 1.0, cur = x;
    for (int k = 1; k < degree; ++k) {
        double next = 2.0 * x * cur - prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

double cheb_u(int degree, double x) {
    check_degree(degree);
    if (degree == 0) return 1.0;
    double prev = 1.0, cur = 2.0 * x;
    for (int k = 1; k < degree; ++k) {
        double next = 2.0 * x * cur - prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

double cheb_p(int degree, int p, double x) {
    check_degree(degree);
    check_p(p);
    if (degree == 0) return 1.0;
    double prev = 1.0, cur = x;
    for (int k = 1; k < degree; ++k) {
        double next = x * cur - p * prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

double cheb_r(int degree, int p, double y) {
    check_p(p);
    const double pd = static_cast<double>(p);
    return (pd - 1.0) / pd * cheb_u(degree, y) + 2.0 / pd * cheb_t(degree, y);
}

double cheb_q(int degree, int p, double x) {
    check_p(p);
    const double pd = static_cast<double>(p);
    return std::pow(pd, 0.5 * degree) * cheb_r(degree, p, x / (2.0 * std::sqrt(pd)));
}

double cheb_scalar(ChebKind kind, int degree, int p, double x) {
    switch (kind) {
        case ChebKind::T: return cheb_t(degree, x);
        case ChebKind::U: return cheb_u(degree, x);
        case ChebKind::P: return cheb_p(degree, p, x);
        case ChebKind::Q: return cheb_q(degree, p, x);
        case ChebKind::R: return cheb_r(degree, p, x);
    }
    throw std::invalid_argument("unknown polynomial kind");
}

WalkOverflow::WalkOverflow(int requested, int max_safe, int p)
    : std::overflow_error("walk length " + std::to_string(requested) + " overflows 64-bit counts for p=" +
                          std::to_string(p) + "; largest safe length is " + std::to_string(max_safe)),
      max_safe_(max_safe) {}

int max_safe_walk_length(int p) {
    check_p(p);
    // Intermediate A K_{t-1} entries are bounded by (p+1) N(t-1) <= (p+1) N(t).
    const std::int64_t limit = std::numeric_limits<std::int64_t>::max() / (p + 1);
    std::int64_t total = p + 1;  // N(1)
    int t = 1;
    while (total <= limit / p) {
        total *= p;
        ++t;
    }
    return t;
}

std::int64_t walk_total(int p, int t) {
    check_p(p);
    if (t < 0) throw std::invalid_argument("walk length must be >= 0");
    if (t == 0) return 1;
    std::int64_t total = p + 1;
    for (int k = 1; k < t; ++k) total = checked_mul(total, p, t, p);
    return total;
}

std::vector<WalkRow> walk_rows(const Graph& g, Vertex x, int t_max) {
    if (t_max < 0) throw std::invalid_argument("walk length must be >= 0");
    if (x < 0 || static_cast<std::size_t>(x) >= g.size()) throw std::out_of_range("walk_rows: bad source vertex");
    const int p = g.branching();
    const std::size_t n = g.size();
    std::vector<WalkRow> rows(static_cast<std::size_t>(t_max) + 1);
    for (int t = 0; t <= t_max; ++t) {
        rows[t].source = x;
        rows[t].t = t;
        rows[t].total = walk_total(p, t);
        rows[t].counts.assign(n, 0);
    }
    rows[0].counts[x] = 1;
    if (t_max >= 1) {
        for (Vertex y : g.neighbors(x)) rows[1].counts[y] = 1;
    }
    for (int t = 2; t <= t_max; ++t) {
        const std::int64_t c = t == 2 ? p + 1 : p;
        step(g, rows[t - 1].counts, rows[t - 2].counts, c, rows[t].counts, t, p);
    }
    return rows;
}

WalkRow walk_row(const Graph& g, Vertex x, int t) {
    if (t < 0) throw std::invalid_argument("walk length must be >= 0");
    if (t <= 2) return std::move(walk_rows(g, x, t)[t]);
    const int p = g.branching();
    const std::size_t n = g.size();
    // Three rolling buffers instead of all t+1 rows.
    std::vector<std::int64_t> prev(n, 0), cur(n, 0), next(n, 0);
    prev[x] = 1;
    for (Vertex y : g.neighbors(x)) cur[y] = 1;
    for (int s = 2; s <= t; ++s) {
        step(g, cur, prev, s == 2 ? p + 1 : p, next, s, p);
        std::swap(prev, cur);
        std::swap(cur, next);
    }
    return {x, t, std::move(cur), walk_total(p, t)};
}

WalkRow walk_row_bruteforce(const Graph& g, Vertex x, int t, std::int64_t budget) {
    if (t < 0) throw std::invalid_argument("walk length must be >= 0");
    const int p = g.branching();
    const std::int64_t total = walk_total(p, t);
    if (total > budget) {
        throw std::length_error("brute-force enumeration of " + std::to_string(total) +
                                " paths exceeds budget " + std::to_string(budget));
    }
    WalkRow row{x, t, std::vector<std::int64_t>(g.size(), 0), total};
    // Explicit DFS stack of (vertex, previous vertex, depth).
    struct Frame {
        Vertex v, prev;
        int depth;
    };
    std::vector<Frame> stack{{x, -1, 0}};
    while (!stack.empty()) {
        Frame f = stack.back();
        stack.pop_back();
        if (f.depth == t) {
            ++row.counts[f.v];
            continue;
        }
        for (Vertex w : g.neighbors(f.v)) {
            if (w != f.prev) stack.push_back({w, f.v, f.depth + 1});
        }
    }
    return row;
}

std::vector<std::int64_t> p_poly_row(const Graph& g, Vertex x, int ell) {
    check_degree(ell);
    const int p = g.branching();
    const std::size_t n = g.size();
    std::vector<std::int64_t> prev(n, 0), cur(n, 0), next(n, 0);
    prev[x] = 1;
    if (ell == 0) return prev;
    for (Vertex y : g.neighbors(x)) cur[y] = 1;
    for (int s = 2; s <= ell; ++s) {
        step(g, cur, prev, p, next, s, p);
        std::swap(prev, cur);
        std::swap(cur, next);
    }
    return cur;
}

std::vector<double> apply_q_spectrally(const Spectrum& s, int p, int t, Vertex x) {
    require_branching(s, p);
    if (!s.has_vectors()) throw std::invalid_argument("apply_q_spectrally: spectrum has no eigenvectors");
    if (t < 1) throw std::invalid_argument("apply_q_spectrally: Q_t(A) = K_t needs t >= 1");
    const std::size_t n = s.size();
    std::vector<double> out(n, 0.0);
    for (std::size_t j = 0; j < n; ++j) {
        const double coeff = cheb_q(t, p, s.eigenvalue(j)) * s.component(j, x);
        auto f = s.vector(j);
        for (std::size_t y = 0; y < n; ++y) out[y] += coeff * f[y];
    }
    return out;
}

}  // namespace nbrw
