#include "nbrw/diameter.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace nbrw {

namespace {

struct Tail {
    std::size_t count = 0;
    Vertex worst = 0;
};

Tail max_tail(const std::vector<DistanceProfile>& profiles, double ell) {
    Tail out;
    for (const auto& prof : profiles) {
        auto c = distance_tail_count(prof, ell);
        if (c > out.count) {
            out.count = c;
            out.worst = prof.source;
        }
    }
    return out;
}

}  // namespace

double expansion_base(double d, double lambda) {
    if (!(lambda > 0.0) || lambda > d) throw std::invalid_argument("expansion_base: need 0 < lambda <= d");
    const double r = d / lambda;
    return r + std::sqrt(std::max(0.0, r * r - 1.0));
}

double PolySpec::operator()(double x, int p) const { return cheb_scalar(kind, degree, p, x / scale); }

PolynomialTailCheck polynomial_tail_check(const Graph& g, const Spectrum& s, const PolySpec& poly, Vertex x) {
    const int p = g.branching();
    require_branching(s, p);
    const double n = static_cast<double>(g.size());
    PolynomialTailCheck out;
    out.tail = distance_tail_count(g, x, static_cast<double>(poly.degree));
    const double top = poly(s.eigenvalue(0), p) / n;
    out.lhs = top * top * static_cast<double>(out.tail);
    for (std::size_t j = 1; j < s.size(); ++j) {
        const double v = poly(s.eigenvalue(j), p);
        out.rhs = std::max(out.rhs, v * v);
    }
    out.pass = out.lhs <= out.rhs * (1.0 + 1e-9);
    return out;
}

ChebyshevGrowthCheck chebyshev_growth_check(double ratio, int ell) {
    if (ratio < 1.0) throw std::invalid_argument("chebyshev_growth: ratio must be >= 1");
    if (ell < 0) throw std::invalid_argument("chebyshev_growth: ell must be >= 0");
    ChebyshevGrowthCheck out;
    const double b = ratio + std::sqrt(ratio * ratio - 1.0);
    out.lhs = cheb_t(ell, ratio);
    out.rhs = std::pow(b, ell) / 2.0;
    out.pass = out.lhs >= out.rhs * (1.0 - 1e-12);
    return out;
}

DiameterReport almost_diameter_report(const Graph& g, const Spectrum& s, std::span<const double> xi_grid) {
    const int p = g.branching();
    const auto cls = classify(s, p);
    if (!is_connected(g)) throw std::invalid_argument("almost_diameter_report: graph is disconnected");

    DiameterReport r;
    r.lambda = cls.lambda;
    r.ramanujan = cls.is_ramanujan;
    r.bipartite_excluded = cls.bipartite_excluded;
    r.expander = cls.expander && !cls.bipartite;
    if (cls.bipartite) r.reason = "bipartite graph: -d is an eigenvalue, so no lambda < d bounds every nontrivial eigenvalue";
    else if (!cls.expander) r.reason = "lambda = d";
    r.xi_grid.assign(xi_grid.begin(), xi_grid.end());

    const double n = static_cast<double>(g.size());
    const double d = static_cast<double>(g.degree());
    const auto profiles = all_pairs_distances(g);
    r.diameter_measured = 0;
    for (const auto& prof : profiles) r.diameter_measured = std::max(r.diameter_measured, prof.eccentricity);

    const bool have_b = cls.expander;
    if (have_b) r.b = expansion_base(d, cls.lambda);
    const double log_b_n = have_b ? std::log(n) / std::log(r.b) : 0.0;

    for (double xi : xi_grid) {
        if (!(xi > 0.0)) throw std::invalid_argument("almost_diameter_report: xi must be positive");
        TailRow row;
        row.xi = xi;
        if (have_b) {
            row.radius = 0.5 * log_b_n + xi;
            auto tail = max_tail(profiles, row.radius);
            row.tail_fraction = static_cast<double>(tail.count) / n;
            row.worst = tail.worst;
            row.bound = 4.0 / std::pow(r.b, 2.0 * xi);
            row.integer_degree_bound = 4.0 * n / std::pow(r.b, 2.0 * std::floor(row.radius));
            if (r.expander) row.status = row.tail_fraction <= row.bound ? CheckStatus::pass : CheckStatus::fail;
        }
        r.tails.push_back(row);

        if (r.ramanujan) {
            RamanujanTailRow rr;
            rr.xi = xi;
            rr.radius = std::log(n) / std::log(static_cast<double>(p)) + xi;
            rr.tail_fraction = static_cast<double>(max_tail(profiles, rr.radius).count) / n;
            rr.bound = 4.0 / std::pow(static_cast<double>(p), xi);
            rr.status = rr.tail_fraction <= rr.bound ? CheckStatus::pass : CheckStatus::fail;
            r.ramanujan_tails.push_back(rr);
        }
    }

    if (have_b) {
        for (double xi : xi_grid) {
            if (4.0 / std::pow(r.b, 2.0 * xi) < 0.5 && (!r.xi_star || xi < *r.xi_star)) r.xi_star = xi;
        }
        if (r.xi_star) {
            r.diameter_bound = log_b_n + 2.0 * *r.xi_star;
            if (r.expander) {
                r.diameter_status = r.diameter_measured <= *r.diameter_bound ? CheckStatus::pass : CheckStatus::fail;
            }
        }
    }
    return r;
}

CenteredTail centered_tail(const Graph& g, double f) {
    const int p = g.branching();
    const double n = static_cast<double>(g.size());
    const double center = std::log(n) / std::log(static_cast<double>(p));
    const auto profiles = all_pairs_distances(g);
    CenteredTail out;
    out.f = f;
    out.bound = 4.0 * std::pow(static_cast<double>(p), -f);
    std::size_t worst = 0;
    for (const auto& prof : profiles) {
        std::size_t c = 0;
        for (int dist : prof.dist) {
            if (dist == DistanceProfile::unreachable || std::abs(dist - center) > f) ++c;
        }
        worst = std::max(worst, c);
    }
    out.fraction = static_cast<double>(worst) / n;
    return out;
}

}  // namespace nbrw
