#include "nbrw/density.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "nbrw/cheby.hpp"

namespace nbrw {

DensityBound density_bound(const Spectrum& s, int p, int t) {
    if (t < 1) throw std::invalid_argument("density_bound: t must be >= 1");
    const auto params = exceptional_parameters(s, p);
    const double pd = static_cast<double>(p);
    const double n = static_cast<double>(s.size());
    DensityBound b;
    b.t = t;
    double growth = 0.0;
    for (double phi : params) growth += std::pow(pd, 2.0 * t * phi);
    b.i_n = i_n_sum(s, p, t);
    b.first = n * std::pow(pd, -t) * (t + 1.0) * (t + 1.0);
    b.second = 3.0 * pd * pd * b.i_n;
    b.dx = 0.5 * std::sqrt(b.first + b.second);
    b.envelope = std::pow(pd, t) * (t + 1.0) * (t + 1.0) + 3.0 * pd * pd * std::pow(pd, t) / n * growth;
    return b;
}

int cutoff_time(std::size_t n, int p, double eta) {
    if (!(eta > 0.0)) throw std::invalid_argument("cutoff_time: eta must be positive");
    const double x = (1.0 + eta) * std::log(static_cast<double>(n)) / std::log(static_cast<double>(p));
    return std::max(1, static_cast<int>(std::ceil(x - 1e-12)));
}

DensityCutoffReport density_cutoff_report(const Graph& g, const Spectrum& s, std::span<const double> eta_grid) {
    const int p = g.branching();
    const auto cls = classify(s, p);
    DensityCutoffReport r;
    r.eta_grid.assign(eta_grid.begin(), eta_grid.end());
    r.homogeneous = g.homogeneous();
    r.bipartite = cls.bipartite;
    r.expander = cls.expander && !cls.bipartite;
    r.lambda = cls.lambda;
    r.exceptional = cls.exceptional;
    const auto params = exceptional_parameters(s, p);
    if (!params.empty()) r.delta1 = 0.5 - *std::max_element(params.begin(), params.end());
    if (cls.bipartite) r.reason = "bipartite graph: the -d eigenvalue keeps d(t) >= 1/2";
    else if (!cls.expander) r.reason = "lambda = d";

    const double n = static_cast<double>(g.size());
    for (double eta : eta_grid) {
        DensityRow row;
        row.eta = eta;
        const int t = cutoff_time(g.size(), p, eta);
        row.bound = density_bound(s, p, t);
        auto profile = mixing_profile(g, {.t_min = t, .t_max = t});
        const auto& rec = profile.at(t);
        row.d_max = rec.d_max;
        row.d_mean = rec.d_mean;
        row.d_sq_mean = rec.d_sq_mean;
        row.w2 = rec.w2;
        row.n_t = rec.n_t;
        if (r.expander) {
            const double nt = static_cast<double>(rec.n_t);
            const double l2 = n * row.w2 / (nt * nt);
            const double envelope = n * row.bound.envelope / (nt * nt);
            const double fin = 4.0 * row.bound.dx * row.bound.dx;
            const double slack = 1.0 + 1e-9;
            const bool ok = 4.0 * row.d_sq_mean <= l2 * slack && l2 <= envelope * slack && envelope <= fin * slack;
            row.chain = ok ? CheckStatus::pass : CheckStatus::fail;
            if (r.homogeneous) {
                row.bound_status = row.d_max <= row.bound.dx * slack ? CheckStatus::pass : CheckStatus::fail;
            }
        }
        r.rows.push_back(row);
    }
    return r;
}

}  // namespace nbrw
