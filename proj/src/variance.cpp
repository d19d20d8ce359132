#include "nbrw/variance.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "nbrw/cheby.hpp"
#include "nbrw/parallel.hpp"

namespace nbrw {

namespace {

double log_base(double value, int p) { return std::log(value) / std::log(static_cast<double>(p)); }

// lambda_j / (2 sqrt p), through the theta parametrization when present.
double argument_of(const Spectrum& s, int p, std::size_t j) {
    if (s.theta_p() == p && !s.thetas().empty()) return s.thetas()[j].argument(p);
    return s.eigenvalue(j) / (2.0 * std::sqrt(static_cast<double>(p)));
}

std::vector<double> direct_per_x(const Graph& g, int t) {
    std::vector<double> w(g.size());
    parallel_for(g.size(), [&](std::size_t x) { w[x] = variance_direct(g, static_cast<Vertex>(x), t); });
    return w;
}

bool in_window(int t, std::size_t n, int p) {
    const double logn = log_base(static_cast<double>(n), p);
    return t >= logn && t <= 2.0 * logn;
}

}  // namespace

double variance_direct(const Graph& g, Vertex x, int t) {
    if (t < 1) throw std::invalid_argument("variance: t must be >= 1");
    return variance_from_row(walk_row(g, x, t), g.size());
}

double variance_spectral(const Spectrum& s, int p, int t, Vertex x) {
    require_branching(s, p);
    if (t < 1) throw std::invalid_argument("variance: t must be >= 1");
    if (!s.has_vectors()) throw std::invalid_argument("variance_spectral: per-vertex form needs eigenvectors");
    double sum = 0.0;
    for (std::size_t j = 1; j < s.size(); ++j) {
        const double q = cheb_q(t, p, s.eigenvalue(j));
        const double f = s.component(j, static_cast<std::size_t>(x));
        sum += q * q * f * f;
    }
    return sum;
}

double mu_x_r2(const Spectrum& s, int p, int t) {
    require_branching(s, p);
    if (t < 1) throw std::invalid_argument("variance: t must be >= 1");
    double sum = 0.0;
    for (std::size_t j = 1; j < s.size(); ++j) {
        const double r = cheb_r(t, p, argument_of(s, p, j));
        sum += r * r;
    }
    return sum / static_cast<double>(s.size());
}

double variance_spectral_average(const Spectrum& s, int p, int t) {
    return std::pow(static_cast<double>(p), t) * mu_x_r2(s, p, t);
}

VarianceReport variance_report(const Graph& g, const Spectrum& s, int t) {
    const int p = g.branching();
    VarianceReport r;
    r.t = t;
    r.w_per_x = direct_per_x(g, t);
    double sum = 0.0;
    for (double w : r.w_per_x) sum += w;
    r.w2 = sum / static_cast<double>(g.size());
    r.w_max = *std::max_element(r.w_per_x.begin(), r.w_per_x.end());
    r.spectral_w2 = variance_spectral_average(s, p, t);
    r.spectral_sum = r.spectral_w2 * static_cast<double>(g.size());
    r.n_t = walk_total(p, t);
    r.ratio = r.w2 / static_cast<double>(r.n_t);
    r.bound_ramanujan = std::pow(static_cast<double>(p), t) * (t + 1.0) * (t + 1.0);
    auto girth_check = check_girth_variance_bound(g, s, t);
    if (girth_check.status != CheckStatus::inapplicable) r.bound_girth = girth_check.bound;
    return r;
}

ULocalSumCheck check_u_local_sum(const Graph& g, const Spectrum& s, int ell) {
    const int p = g.branching();
    ULocalSumCheck out;
    out.ell = ell;
    out.sharp_bound = static_cast<double>(p) / (p - 1.0);
    if (ell < 0) throw std::invalid_argument("u_local_sum: ell must be >= 0");
    const auto cls = classify(s, p);
    if (cls.bipartite) {
        out.reason = "bipartite graph";
        return out;
    }
    if (!cls.is_ramanujan || cls.exceptional > 0) {
        out.reason = "exceptional eigenvalues present";
        return out;
    }
    out.girth = girth(g);
    if (5 * ell > out.girth) {
        out.reason = "ell exceeds girth/5";
        return out;
    }
    if (!s.has_vectors()) throw std::invalid_argument("u_local_sum: needs eigenvectors");
    const std::size_t n = s.size();
    std::vector<double> u2(n, 0.0);
    for (std::size_t j = 1; j < n; ++j) {
        const double u = cheb_u(ell, argument_of(s, p, j));
        u2[j] = u * u;
    }
    for (std::size_t x = 0; x < n; ++x) {
        double sum = 0.0;
        for (std::size_t j = 1; j < n; ++j) {
            const double f = s.component(j, x);
            sum += u2[j] * f * f;
        }
        if (x == 0 || sum > out.value) {
            out.value = sum;
            out.worst = static_cast<Vertex>(x);
        }
    }
    out.status = out.value <= out.bound + 1e-9 ? CheckStatus::pass : CheckStatus::fail;
    return out;
}

GirthVarianceCheck check_girth_variance_bound(const Graph& g, const Spectrum& s, int t) {
    const int p = g.branching();
    GirthVarianceCheck out;
    out.t = t;
    const auto cls = classify(s, p);
    if (cls.bipartite || !cls.is_ramanujan) {
        out.reason = cls.bipartite ? "bipartite graph" : "not Ramanujan";
        return out;
    }
    if (!in_window(t, g.size(), p)) {
        out.reason = "t outside [log_p n, 2 log_p n]";
        return out;
    }
    out.delta = girth(g) / log_base(static_cast<double>(g.size()), p);
    const double k = 10.0 / out.delta + 1.0;
    out.bound = 12.0 * k * k * std::pow(static_cast<double>(p), t);
    auto w = direct_per_x(g, t);
    out.w_max = *std::max_element(w.begin(), w.end());
    out.status = out.w_max <= out.bound * (1.0 + 1e-9) ? CheckStatus::pass : CheckStatus::fail;
    return out;
}

RamanujanVarianceCheck check_ramanujan_variance_bound(const Graph& g, const Spectrum& s, int t) {
    const int p = g.branching();
    RamanujanVarianceCheck out;
    out.t = t;
    const auto cls = classify(s, p);
    if (cls.bipartite || !cls.is_ramanujan) {
        out.reason = cls.bipartite ? "bipartite graph: Q_t(-d)^2 / n = N(t)^2 / n is not covered" : "not Ramanujan";
        return out;
    }
    out.bound = std::pow(static_cast<double>(p), t) * (t + 1.0) * (t + 1.0);
    auto w = direct_per_x(g, t);
    out.w_max = *std::max_element(w.begin(), w.end());
    out.status = out.w_max <= out.bound * (1.0 + 1e-9) ? CheckStatus::pass : CheckStatus::fail;
    return out;
}

QuadratureRule gauss_legendre(std::size_t count) {
    if (count == 0) throw std::invalid_argument("gauss_legendre: need at least one node");
    QuadratureRule rule;
    rule.nodes.resize(count);
    rule.weights.resize(count);
    const std::size_t half = (count + 1) / 2;
    for (std::size_t i = 0; i < half; ++i) {
        double z = std::cos(std::numbers::pi * (i + 0.75) / (count + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0, p1 = 0.0;
            for (std::size_t k = 1; k <= count; ++k) {
                double p2 = p1;
                p1 = p0;
                p0 = ((2.0 * k - 1.0) * z * p1 - (k - 1.0) * p2) / static_cast<double>(k);
            }
            dp = count * (z * p0 - p1) / (z * z - 1.0);
            double step = p0 / dp;
            z -= step;
            if (std::abs(step) <= 1e-15) break;
        }
        const double w = 2.0 / ((1.0 - z * z) * dp * dp);
        rule.nodes[i] = -z;
        rule.nodes[count - 1 - i] = z;
        rule.weights[i] = w;
        rule.weights[count - 1 - i] = w;
    }
    return rule;
}

KestenQuadrature::KestenQuadrature(int p, std::size_t nodes) : p_(p) {
    if (p < 2) throw std::invalid_argument("Kesten measure: p must be >= 2");
    auto rule = gauss_legendre(nodes);
    const double half_pi = 0.5 * std::numbers::pi;
    thetas_.resize(nodes);
    weights_.resize(nodes);
    for (std::size_t i = 0; i < nodes; ++i) {
        thetas_[i] = half_pi * (rule.nodes[i] + 1.0);
        weights_[i] = half_pi * rule.weights[i] * density(p, thetas_[i]);
    }
}

double KestenQuadrature::density(int p, double theta) {
    const double pd = static_cast<double>(p);
    const double a = std::sqrt(pd) + 1.0 / std::sqrt(pd);
    const double s = std::sin(theta), c = std::cos(theta);
    return 2.0 * (pd + 1.0) * s * s / (std::numbers::pi * (a * a - 4.0 * c * c));
}

double KestenQuadrature::integrate(const std::function<double(double)>& f) const {
    double sum = 0.0;
    for (std::size_t i = 0; i < thetas_.size(); ++i) sum += weights_[i] * f(thetas_[i]);
    return sum;
}

double KestenQuadrature::r_inner(int s, int t) const {
    return integrate([&](double theta) {
        const double c = std::cos(theta);
        return cheb_r(s, p_, c) * cheb_r(t, p_, c);
    });
}

std::vector<ConjectureRow> conjecture_report(const Graph& g, const Spectrum& s, int t_max) {
    const int p = g.branching();
    const int gir = girth(g);
    KestenQuadrature kesten(p);
    std::vector<ConjectureRow> rows;
    if (t_max < 1) return rows;
    const auto profile = mixing_profile(g, {.t_min = 1, .t_max = t_max});
    for (int t = 1; t <= t_max; ++t) {
        ConjectureRow row;
        row.t = t;
        row.mu_r2 = mu_x_r2(s, p, t);
        row.w2 = profile.at(t).w2;
        row.n_t = walk_total(p, t);
        row.ratio = row.w2 / static_cast<double>(row.n_t);
        row.kesten_r2 = kesten.r_inner(t, t);
        row.girth_regime = 5 * t < gir;
        rows.push_back(row);
    }
    return rows;
}

}  // namespace nbrw
