#include "nbrw/verify.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "nbrw/cheby.hpp"
#include "nbrw/density.hpp"
#include "nbrw/diameter.hpp"
#include "nbrw/spectral.hpp"
#include "nbrw/variance.hpp"

namespace nbrw {

namespace {

std::string num(double v) {
    std::ostringstream os;
    os.precision(6);
    os << v;
    return os.str();
}

CheckStatus status_of(bool ok) { return ok ? CheckStatus::pass : CheckStatus::fail; }

class Rows {
public:
    explicit Rows(std::string fixture) : fixture_(std::move(fixture)) {}

    void add(std::string check, CheckStatus status, std::string detail) {
        rows_.push_back({fixture_, std::move(check), status, std::move(detail)});
    }
    std::vector<VerifyRow> take() { return std::move(rows_); }

private:
    std::string fixture_;
    std::vector<VerifyRow> rows_;
};

bool rel_close(double a, double b, double tol) {
    const double scale = std::max(std::abs(a), std::abs(b));
    return std::abs(a - b) <= tol * scale;
}

// n^2 W is an integer, so an exact zero is meaningful; the spectral sum then
// only has to vanish to within tol.
bool variance_close(double exact, double spectral, double tol) {
    if (exact == 0.0) return std::abs(spectral) <= tol;
    return rel_close(exact, spectral, tol);
}

void walk_checks(const Graph& g, const Spectrum& s, const VerifyOptions& o, Rows& rows) {
    const int p = g.branching();
    const auto n = static_cast<Vertex>(g.size());
    bool exact = true;
    double worst_q = 0.0;
    for (Vertex x = 0; x < n; ++x) {
        auto ks = walk_rows(g, x, o.walk_t_max);
        for (int t = 1; t <= o.walk_t_max; ++t) {
            if (walk_row_bruteforce(g, x, t).counts != ks[t].counts) exact = false;
            auto q = apply_q_spectrally(s, p, t, x);
            for (std::size_t y = 0; y < q.size(); ++y) {
                worst_q = std::max(worst_q, std::abs(q[y] - static_cast<double>(ks[t].counts[y])));
            }
        }
    }
    rows.add("walk_count_recurrence", status_of(exact),
             "K_t recurrence vs path enumeration, t <= " + std::to_string(o.walk_t_max));
    rows.add("q_polynomial_identity", status_of(worst_q <= 1e-6), "max |Q_t(A) - K_t| = " + num(worst_q));

    bool p_ok = true;
    for (Vertex x = 0; x < n; ++x) {
        auto ks = walk_rows(g, x, o.p_ell_max);
        for (int ell = 0; ell <= o.p_ell_max; ++ell) {
            std::vector<std::int64_t> sum(g.size(), 0);
            for (int j = 0; 2 * j <= ell; ++j) {
                const auto& k = ks[ell - 2 * j].counts;
                for (std::size_t y = 0; y < sum.size(); ++y) sum[y] += k[y];
            }
            if (p_poly_row(g, x, ell) != sum) p_ok = false;
        }
    }
    rows.add("p_polynomial_identity", status_of(p_ok), "P_l(A) = sum_j K_{l-2j}, l <= " + std::to_string(o.p_ell_max));
}

void variance_checks(const Graph& g, const Spectrum& s, const VerifyOptions& o, Rows& rows) {
    const int p = g.branching();
    const auto n = static_cast<Vertex>(g.size());
    double worst = 0.0;
    bool ok = true;
    bool mean_ok = true;
    for (int t = 1; t <= o.variance_t_max; ++t) {
        double sum = 0.0;
        for (Vertex x = 0; x < n; ++x) {
            const double a = variance_direct(g, x, t);
            const double b = variance_spectral(s, p, t, x);
            sum += a;
            if (!variance_close(a, b, 1e-8)) ok = false;
            if (a != 0.0) worst = std::max(worst, std::abs(a - b) / std::max(std::abs(a), std::abs(b)));
        }
        if (!variance_close(sum / n, variance_spectral_average(s, p, t), 1e-8)) mean_ok = false;
    }
    rows.add("variance_dual_route", status_of(ok), "max relative gap where W > 0: " + num(worst));
    rows.add("variance_average_spectral", status_of(mean_ok), "W_2(t) = p^t mu_X(R_t^2)");

    const auto cls = classify(s, p);
    double worst_ratio = 0.0;
    CheckStatus ram_status = CheckStatus::inapplicable;
    std::string reason = "not Ramanujan";
    for (int t = 1; t <= o.variance_t_max; ++t) {
        auto c = check_ramanujan_variance_bound(g, s, t);
        if (c.status == CheckStatus::inapplicable) break;
        if (ram_status != CheckStatus::fail) ram_status = c.status;
        worst_ratio = std::max(worst_ratio, c.w_max / c.bound);
    }
    if (ram_status != CheckStatus::inapplicable) reason = "max W / (p^t (t+1)^2) = " + num(worst_ratio);
    rows.add("variance_ramanujan_bound", ram_status, reason);

    if (cls.is_ramanujan && !cls.bipartite) {
        const int gir = girth(g);
        CheckStatus st = CheckStatus::pass;
        double worst42 = 0.0;
        for (int ell = 0; 5 * ell <= gir; ++ell) {
            auto c = check_u_local_sum(g, s, ell);
            if (c.status == CheckStatus::fail) st = CheckStatus::fail;
            worst42 = std::max(worst42, c.value);
        }
        rows.add("chebyshev_u_local_sum", st, "max value = " + num(worst42) + " (bound 2)");
    } else {
        rows.add("chebyshev_u_local_sum", CheckStatus::inapplicable,
                 cls.bipartite ? "bipartite graph" : "not Ramanujan");
    }

    const double logn = std::log(static_cast<double>(g.size())) / std::log(static_cast<double>(p));
    CheckStatus st44 = CheckStatus::inapplicable;
    std::string d44 = "no integer t in [log_p n, 2 log_p n] or hypotheses unmet";
    for (int t = static_cast<int>(std::ceil(logn)); t <= std::floor(2 * logn) && t <= o.variance_t_max; ++t) {
        auto c = check_girth_variance_bound(g, s, t);
        if (c.status == CheckStatus::inapplicable) {
            d44 = c.reason;
            break;
        }
        if (st44 != CheckStatus::fail) st44 = c.status;
        d44 = "t = " + std::to_string(t) + ": W = " + num(c.w_max) + " <= " + num(c.bound);
    }
    rows.add("variance_girth_bound", st44, d44);
}

void mixing_checks(const Graph& g, const Spectrum& s, const VerifyOptions& o, Rows& rows) {
    auto profile = mixing_profile(g, {.t_min = 0, .t_max = o.variance_t_max});
    bool lb = true;
    for (const auto& c : check_lower_bound(profile)) lb = lb && c.pass;
    rows.add("nbrw_tv_lower_bound", status_of(lb), "d(t) >= 1 - N(t)/n for N(t) <= n");

    bool l2 = true;
    for (int t = 1; t <= o.walk_t_max; ++t) l2 = l2 && check_l2_bound(g, t).pass;
    rows.add("l2_tv_bound", status_of(l2), "4 d_x(t)^2 <= n W / N(t)^2, t <= " + std::to_string(o.walk_t_max));

    auto th = check_mixing_time_bound(g, s, o.eps);
    std::string detail = th.reason;
    if (th.status != CheckStatus::inapplicable) {
        detail = "t_mix = " + (th.t_mix_observed ? std::to_string(*th.t_mix_observed) : std::string("none")) +
                 ", bound = " + num(th.bound);
    }
    rows.add("ramanujan_mixing_time", th.status, detail);
}

void diameter_checks(const Graph& g, const Spectrum& s, Rows& rows) {
    const int p = g.branching();
    const auto cls = classify(s, p);
    const auto n = static_cast<Vertex>(g.size());

    if (cls.lambda > 0.0) {
        const int diam = diameter(g);
        bool ok = true;
        for (int ell = 0; ell <= diam + 1; ++ell) {
            PolySpec poly{ChebKind::T, ell, cls.lambda};
            for (Vertex x = 0; x < n; ++x) ok = ok && polynomial_tail_check(g, s, poly, x).pass;
        }
        rows.add("polynomial_tail_bound", status_of(ok), "P = T_l(x / lambda), l <= diameter + 1");

        bool ok32 = true;
        const double ratio = static_cast<double>(g.degree()) / cls.lambda;
        if (ratio >= 1.0) {
            for (int ell = 0; ell <= 10; ++ell) ok32 = ok32 && chebyshev_growth_check(ratio, ell).pass;
        }
        rows.add("chebyshev_t_growth", ratio >= 1.0 ? status_of(ok32) : CheckStatus::inapplicable,
                 "T_l(d / lambda) >= b^l / 2, l <= 10");
    }

    auto rep = almost_diameter_report(g, s);
    for (const auto& row : rep.tails) {
        std::string detail = rep.reason;
        if (rep.expander) {
            detail = "xi = " + num(row.xi) + ": tail " + num(row.tail_fraction) + " vs " + num(row.bound) +
                     " (integer-degree bound " + num(row.integer_degree_bound) + ")";
        }
        rows.add("almost_diameter_tail xi=" + num(row.xi), row.status, detail);
    }
    for (const auto& row : rep.ramanujan_tails) {
        rows.add("ramanujan_almost_diameter xi=" + num(row.xi), row.status,
                 "tail " + num(row.tail_fraction) + " vs " + num(row.bound));
    }
    std::string detail = rep.reason;
    if (rep.diameter_bound) {
        detail = "diameter " + std::to_string(rep.diameter_measured) + " vs " + num(*rep.diameter_bound);
        if (!rep.expander) detail += " (" + rep.reason + ")";
    }
    rows.add("diameter_bound", rep.diameter_status, detail);
}

void density_checks(const Graph& g, const Spectrum& s, Rows& rows) {
    const int p = g.branching();
    const auto cls = classify(s, p);
    auto rep = density_cutoff_report(g, s);
    for (const auto& row : rep.rows) {
        std::string d = rep.reason.empty() ? "t = " + std::to_string(row.bound.t) + ": d_max " + num(row.d_max) +
                                                 " vs " + num(row.bound.dx)
                                           : rep.reason;
        rows.add("cutoff_bound_chain eta=" + num(row.eta), row.chain, d);
        rows.add("cutoff_bound eta=" + num(row.eta), row.bound_status,
                 rep.homogeneous ? d : "graph not marked homogeneous");
    }
    if (cls.is_ramanujan && !cls.bipartite) {
        bool zero = true;
        for (int t = 1; t <= 12; ++t) zero = zero && i_n_sum(s, p, t) == 0.0;
        rows.add("exceptional_sum_vanishes", status_of(zero), "I_n = 0 on a Ramanujan graph");
    }
}

}  // namespace

std::vector<VerifyRow> verify_graph(const Graph& g, const std::string& name, const VerifyOptions& options) {
    Rows rows(name);
    const int p = g.branching();
    EigenOptions eo;
    eo.want_vectors = true;
    auto s = parametrize_thetas(eigendecompose(g, eo), p);
    walk_checks(g, s, options, rows);
    variance_checks(g, s, options, rows);
    mixing_checks(g, s, options, rows);
    diameter_checks(g, s, rows);
    density_checks(g, s, rows);
    return rows.take();
}

std::vector<VerifyRow> verify_kesten(int p) {
    Rows rows("kesten p=" + std::to_string(p));
    KestenQuadrature k(p);
    const double norm = k.normalization();
    rows.add("kesten_normalization", status_of(std::abs(norm - 1.0) <= 1e-10), "integral = " + num(norm));
    const double target = (p + 1.0) / p;
    double worst = 0.0;
    for (int t = 1; t <= 50; ++t) worst = std::max(worst, std::abs(k.r_inner(t, t) - target));
    rows.add("kesten_r_norm", status_of(worst <= 1e-8), "max |int R_t^2 - (p+1)/p| = " + num(worst));
    double cross = 0.0;
    for (int t = 2; t <= 20; ++t) {
        for (int s = 1; s < t; ++s) cross = std::max(cross, std::abs(k.r_inner(s, t)));
    }
    rows.add("kesten_r_orthogonal", status_of(cross <= 1e-8), "max |int R_s R_t| = " + num(cross));
    return rows.take();
}

bool any_failed(const std::vector<VerifyRow>& rows) {
    return std::any_of(rows.begin(), rows.end(), [](const VerifyRow& r) { return r.status == CheckStatus::fail; });
}

}  // namespace nbrw
