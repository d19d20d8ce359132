#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "nbrw/graph.hpp"
#include "nbrw/mixing.hpp"
#include "nbrw/spectral.hpp"

namespace nbrw {

// Terms of the cutoff bound at time t, from the spectrum alone:
//   first  = n p^{-t} (t+1)^2
//   second = 3 p^2 sum_j p^{-(1/2 - phi'_j) 2t}
//   dx     = 1/2 (first + second)^{1/2}
//   envelope = p^t (t+1)^2 + 3 p^2 (p^t / n) sum_j p^{2t phi'_j}
// The sums run over nontrivial exceptional eigenvalues.
struct DensityBound {
    int t = 0;
    double first = 0.0;
    double second = 0.0;
    double dx = 0.0;
    double envelope = 0.0;
    double i_n = 0.0;   // sum_j p^{-(1/2 - phi'_j) 2t}
};

DensityBound density_bound(const Spectrum& s, int p, int t);

// ceil((1 + eta) log_p n).
int cutoff_time(std::size_t n, int p, double eta);

struct DensityRow {
    double eta = 0.0;
    DensityBound bound;
    double d_max = 0.0;        // same code path as mixing_profile
    double d_mean = 0.0;
    double d_sq_mean = 0.0;    // mean_x d_x(t)^2
    double w2 = 0.0;           // mean_x W(Q_t, x)
    std::int64_t n_t = 0;
    // mean_x 4 d_x^2 <= n W_2 / N(t)^2 <= n envelope / N(t)^2 <= 4 dx^2, 1e-9 slack
    CheckStatus chain = CheckStatus::inapplicable;
    // d_max <= dx; asserted only on homogeneous graphs
    CheckStatus bound_status = CheckStatus::inapplicable;
};

struct DensityCutoffReport {
    std::vector<double> eta_grid;
    std::vector<DensityRow> rows;
    bool homogeneous = false;
    bool expander = false;
    bool bipartite = false;
    double lambda = 0.0;
    std::size_t exceptional = 0;
    std::optional<double> delta1;  // 1/2 - max phi'_j, when any eigenvalue is exceptional
    std::string reason;
};

inline const std::vector<double> kDefaultEtaGrid = {0.25, 0.5, 1.0};

DensityCutoffReport density_cutoff_report(const Graph& g, const Spectrum& s,
                                          std::span<const double> eta_grid = kDefaultEtaGrid);

}  // namespace nbrw
