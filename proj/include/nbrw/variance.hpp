#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "nbrw/graph.hpp"
#include "nbrw/mixing.hpp"
#include "nbrw/spectral.hpp"

namespace nbrw {

// W(Q_t, x) = sum_y (K_t(x,y) - Q_t(lambda_0)/n)^2 with Q_t(lambda_0) = N(t),
// from the exact walk row.
double variance_direct(const Graph& g, Vertex x, int t);

// sum_{j != 0} Q_t(lambda_j)^2 f_j(x)^2. Needs eigenvectors.
double variance_spectral(const Spectrum& s, int p, int t, Vertex x);

// W_2(t) = (1/n) sum_x W(Q_t, x) = (1/n) sum_{j != 0} Q_t(lambda_j)^2
// = p^t mu_X(R_t^2). Eigenvalues only.
double variance_spectral_average(const Spectrum& s, int p, int t);

// mu_X(R_t^2) = (1/n) sum_{j != 0} R_t(theta_j)^2.
double mu_x_r2(const Spectrum& s, int p, int t);

struct VarianceReport {
    int t = 0;
    std::vector<double> w_per_x;     // direct route
    double w2 = 0.0;                 // mean of w_per_x
    double w_max = 0.0;
    double spectral_w2 = 0.0;        // (1/n) sum_{j != 0} Q_t(lambda_j)^2
    double spectral_sum = 0.0;       // same sum without the 1/n, for comparison
    std::int64_t n_t = 0;
    double ratio = 0.0;              // w2 / N(t)
    double bound_ramanujan = 0.0;        // p^t (t+1)^2
    std::optional<double> bound_girth;
};

VarianceReport variance_report(const Graph& g, const Spectrum& s, int t);

struct ULocalSumCheck {
    CheckStatus status = CheckStatus::inapplicable;
    std::string reason;
    int ell = 0;
    int girth = 0;
    double value = 0.0;          // max_x sum_{j != 0} U_l(cos theta_j)^2 f_j(x)^2
    Vertex worst = 0;
    double bound = 2.0;
    double sharp_bound = 0.0;    // p / (p - 1)
};

// Needs a non-bipartite Ramanujan graph with eigenvectors and ell <= girth/5.
ULocalSumCheck check_u_local_sum(const Graph& g, const Spectrum& s, int ell);

struct GirthVarianceCheck {
    CheckStatus status = CheckStatus::inapplicable;
    std::string reason;
    int t = 0;
    double delta = 0.0;
    double w_max = 0.0;
    double bound = 0.0;          // 12 (10/delta + 1)^2 p^t
};

// Ramanujan, non-bipartite, log_p n <= t <= 2 log_p n.
GirthVarianceCheck check_girth_variance_bound(const Graph& g, const Spectrum& s, int t);

struct RamanujanVarianceCheck {
    CheckStatus status = CheckStatus::inapplicable;
    std::string reason;
    int t = 0;
    double w_max = 0.0;
    double bound = 0.0;          // p^t (t+1)^2
};

// W(Q_t, x) <= p^t (t+1)^2 for all x on a non-bipartite Ramanujan graph.
RamanujanVarianceCheck check_ramanujan_variance_bound(const Graph& g, const Spectrum& s, int t);

// Gauss-Legendre nodes and weights on [-1, 1], nodes ascending.
struct QuadratureRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};
QuadratureRule gauss_legendre(std::size_t count);

// Kesten (Plancherel) measure on [0, pi]:
//   d nu_p = 2(p+1) sin^2 theta / (pi [(p^{1/2} + p^{-1/2})^2 - 4 cos^2 theta]) d theta.
class KestenQuadrature {
public:
    explicit KestenQuadrature(int p, std::size_t nodes = 4096);

    int p() const { return p_; }
    std::size_t size() const { return thetas_.size(); }
    static double density(int p, double theta);

    // Integral of f(theta) d nu_p.
    double integrate(const std::function<double(double)>& f) const;
    double normalization() const { return integrate([](double) { return 1.0; }); }

    // Integral of R_s(theta) R_t(theta) d nu_p.
    double r_inner(int s, int t) const;

private:
    int p_;
    std::vector<double> thetas_;
    std::vector<double> weights_;  // quadrature weight times density
};

struct ConjectureRow {
    int t = 0;
    double w2 = 0.0;           // from exact walk rows
    std::int64_t n_t = 0;
    double ratio = 0.0;        // W_2 / N(t)
    double mu_r2 = 0.0;        // mu_X(R_t^2), from the spectrum
    double kesten_r2 = 0.0;    // integral of R_t^2 d nu_p
    bool girth_regime = false; // t < girth / 5
};

// Empirical table; nothing here is asserted.
std::vector<ConjectureRow> conjecture_report(const Graph& g, const Spectrum& s, int t_max);

}  // namespace nbrw
