#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "nbrw/cheby.hpp"
#include "nbrw/graph.hpp"
#include "nbrw/mixing.hpp"
#include "nbrw/spectral.hpp"

namespace nbrw {

// b = r + sqrt(r^2 - 1) with r = d / lambda.
double expansion_base(double d, double lambda);

// Test polynomial P(x) = kind_degree(x / scale), e.g. T_l(x / lambda).
struct PolySpec {
    ChebKind kind = ChebKind::T;
    int degree = 0;
    double scale = 1.0;

    double operator()(double x, int p) const;
};

struct PolynomialTailCheck {
    double lhs = 0.0;        // (P(lambda_0)/n)^2 N_x(deg P)
    double rhs = 0.0;        // max_{j != 0} |P(lambda_j)|^2
    std::size_t tail = 0;    // N_x(deg P)
    bool pass = false;
};

// (P(lambda_0)/n)^2 N_x(deg P) <= max_{j != 0} P(lambda_j)^2.
PolynomialTailCheck polynomial_tail_check(const Graph& g, const Spectrum& s, const PolySpec& poly, Vertex x);

struct ChebyshevGrowthCheck {
    double lhs = 0.0;  // T_l(ratio)
    double rhs = 0.0;  // b^l / 2
    bool pass = false;
};

// T_l(ratio) >= b^l / 2 with b = ratio + sqrt(ratio^2 - 1); ratio >= 1.
ChebyshevGrowthCheck chebyshev_growth_check(double ratio, int ell);

struct TailRow {
    double xi = 0.0;
    double radius = 0.0;          // 1/2 log_b n + xi
    double tail_fraction = 0.0;   // max_x N_x(radius) / n
    Vertex worst = 0;
    double bound = 0.0;           // 4 / b^{2 xi}
    // What the Chebyshev argument proves for the integer degree floor(radius):
    // N_x(radius)/n <= 4 n / b^{2 floor(radius)}.
    double integer_degree_bound = 0.0;
    CheckStatus status = CheckStatus::inapplicable;
};

struct RamanujanTailRow {
    double xi = 0.0;
    double radius = 0.0;          // log_p n + xi
    double tail_fraction = 0.0;
    double bound = 0.0;           // 4 / p^xi
    CheckStatus status = CheckStatus::inapplicable;
};

struct DiameterReport {
    double lambda = 0.0;
    double b = 0.0;
    bool expander = false;        // (n, d, lambda) graph with lambda < d, non-bipartite
    bool ramanujan = false;
    bool bipartite_excluded = false;
    std::string reason;           // why the (n, d, lambda) rows are inapplicable
    std::vector<double> xi_grid;
    std::vector<TailRow> tails;
    std::vector<RamanujanTailRow> ramanujan_tails;  // empty unless Ramanujan
    int diameter_measured = 0;
    std::optional<double> xi_star;         // smallest grid xi with 4 b^{-2 xi} < 1/2
    std::optional<double> diameter_bound;  // log_b n + 2 xi*
    CheckStatus diameter_status = CheckStatus::inapplicable;
};

inline const std::vector<double> kDefaultXiGrid = {0.5, 1.0, 2.0, 3.0};

DiameterReport almost_diameter_report(const Graph& g, const Spectrum& s,
                                      std::span<const double> xi_grid = kDefaultXiGrid);

struct CenteredTail {
    double f = 0.0;
    double fraction = 0.0;  // max_x #{y : |dist(x,y) - log_p n| > f} / n
    double bound = 0.0;     // 4 p^{-f}
};

// Readout only: how many vertices sit further than f from distance log_p n.
CenteredTail centered_tail(const Graph& g, double f);

}  // namespace nbrw
