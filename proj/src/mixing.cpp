#include "nbrw/mixing.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

#include "nbrw/parallel.hpp"

namespace nbrw {

namespace {

// sum_y (n K - N)^2, exactly when 2 n N < 2^63 (then the sum is below
// (2 n N)^2 < 2^126), otherwise by compensated long double summation.
long double squared_deviation_sum(const WalkRow& row, std::size_t n) {
    const auto nn = static_cast<__int128>(n);
    const auto total = static_cast<__int128>(row.total);
    if (2 * nn * total < (static_cast<__int128>(1) << 63)) {
        __int128 sum = 0;
        for (auto k : row.counts) {
            __int128 dev = nn * k - total;
            sum += dev * dev;
        }
        return static_cast<long double>(sum);
    }
    long double sum = 0.0L, comp = 0.0L;
    for (auto k : row.counts) {
        long double dev = static_cast<long double>(n) * k - static_cast<long double>(row.total);
        long double term = dev * dev;
        long double t = sum + term;
        comp += std::fabs(sum) >= std::fabs(term) ? (sum - t) + term : (term - t) + sum;
        sum = t;
    }
    return sum + comp;
}

struct StartStats {
    std::vector<ExactTv> tv;
    std::vector<double> l2;
    std::vector<double> w;
};

}  // namespace

const char* to_string(CheckStatus s) {
    switch (s) {
        case CheckStatus::pass: return "pass";
        case CheckStatus::fail: return "fail";
        case CheckStatus::inapplicable: return "inapplicable";
    }
    return "?";
}

double ExactTv::value() const {
    return static_cast<double>(static_cast<long double>(numerator) / static_cast<long double>(denominator));
}

bool ExactTv::at_most(double eta) const {
    return static_cast<long double>(numerator) <= static_cast<long double>(eta) * static_cast<long double>(denominator);
}

ExactTv exact_tv(const WalkRow& row, std::size_t n) {
    if (row.total <= 0) throw std::invalid_argument("exact_tv: walk total must be positive");
    const auto nn = static_cast<__int128>(n);
    const auto total = static_cast<__int128>(row.total);
    ExactTv out;
    for (auto k : row.counts) {
        __int128 dev = nn * k - total;
        out.numerator += dev < 0 ? -dev : dev;
    }
    out.denominator = 2 * nn * total;
    return out;
}

double tv_from_row(const WalkRow& row, std::size_t n) { return exact_tv(row, n).value(); }

double l2_sq_from_row(const WalkRow& row, std::size_t n) {
    const long double scale = static_cast<long double>(n) * static_cast<long double>(row.total);
    return static_cast<double>(squared_deviation_sum(row, n) / (scale * scale));
}

double variance_from_row(const WalkRow& row, std::size_t n) {
    const long double nn = static_cast<long double>(n);
    return static_cast<double>(squared_deviation_sum(row, n) / (nn * nn));
}

const MixingRecord& MixingProfile::at(int t) const {
    if (t < t_min || t > t_max) throw std::out_of_range("profile has no record for t=" + std::to_string(t));
    return records[static_cast<std::size_t>(t - t_min)];
}

MixingProfile mixing_profile(const Graph& g, const ProfileOptions& options) {
    if (options.t_min < 0 || options.t_max < options.t_min) {
        throw std::invalid_argument("mixing_profile: need 0 <= t_min <= t_max");
    }
    const int p = g.branching();
    if (options.t_max > max_safe_walk_length(p)) {
        throw WalkOverflow(options.t_max, max_safe_walk_length(p), p);
    }
    const std::size_t n = g.size();
    MixingProfile profile;
    profile.n = n;
    profile.p = p;
    profile.t_min = options.t_min;
    profile.t_max = options.t_max;
    profile.parity_warning = is_bipartite(g);

    if (options.starts == StartMode::sample && n > options.sample_threshold) {
        std::vector<Vertex> all(n);
        for (std::size_t v = 0; v < n; ++v) all[v] = static_cast<Vertex>(v);
        std::mt19937_64 rng(options.seed);
        std::sample(all.begin(), all.end(), std::back_inserter(profile.starts),
                    std::min(options.sample_size, n), rng);
        profile.sampled = true;
    } else {
        profile.starts.resize(n);
        for (std::size_t v = 0; v < n; ++v) profile.starts[v] = static_cast<Vertex>(v);
    }

    const std::size_t span = static_cast<std::size_t>(options.t_max - options.t_min + 1);
    std::vector<StartStats> stats(profile.starts.size());
    parallel_for(profile.starts.size(), [&](std::size_t i) {
        auto rows = walk_rows(g, profile.starts[i], options.t_max);
        auto& st = stats[i];
        st.tv.reserve(span);
        for (int t = options.t_min; t <= options.t_max; ++t) {
            const auto& row = rows[static_cast<std::size_t>(t)];
            st.tv.push_back(exact_tv(row, n));
            st.l2.push_back(l2_sq_from_row(row, n));
            st.w.push_back(variance_from_row(row, n));
        }
    });

    const double starts = static_cast<double>(profile.starts.size());
    for (std::size_t k = 0; k < span; ++k) {
        MixingRecord rec;
        rec.t = options.t_min + static_cast<int>(k);
        rec.n_t = walk_total(p, rec.t);
        rec.lower_bound = std::max(0.0, 1.0 - static_cast<double>(rec.n_t) / static_cast<double>(n));
        double tv_sum = 0.0, tv_sq_sum = 0.0, l2_sum = 0.0, w_sum = 0.0, w_max = 0.0;
        for (std::size_t i = 0; i < stats.size(); ++i) {
            const auto& tv = stats[i].tv[k];
            if (i == 0 || rec.d_max_exact < tv) {
                rec.d_max_exact = tv;
                rec.argmax = profile.starts[i];
            }
            tv_sum += tv.value();
            tv_sq_sum += tv.value() * tv.value();
            l2_sum += stats[i].l2[k];
            w_sum += stats[i].w[k];
            w_max = std::max(w_max, stats[i].w[k]);
        }
        rec.d_max = rec.d_max_exact.value();
        rec.d_mean = tv_sum / starts;
        rec.d_sq_mean = tv_sq_sum / starts;
        rec.d2 = l2_sum / starts;
        rec.w2 = w_sum / starts;
        rec.l2_bound = std::sqrt(static_cast<double>(n) * w_max) / (2.0 * static_cast<double>(rec.n_t));
        profile.records.push_back(rec);
    }
    return profile;
}

MixResult t_mix(const MixingProfile& profile, double eta) {
    for (const auto& rec : profile.records) {
        if (rec.d_max_exact.at_most(eta)) return {eta, rec.t};
    }
    throw std::domain_error("d(t) stays above eta=" + std::to_string(eta) + " for t <= " +
                            std::to_string(profile.t_max) + "; increase t_max");
}

std::vector<LowerBoundCheck> check_lower_bound(const MixingProfile& profile) {
    std::vector<LowerBoundCheck> out;
    const auto n = static_cast<__int128>(profile.n);
    for (const auto& rec : profile.records) {
        if (rec.n_t > static_cast<std::int64_t>(profile.n)) continue;
        LowerBoundCheck c;
        c.t = rec.t;
        c.n_t = rec.n_t;
        c.d_max = rec.d_max;
        c.bound = 1.0 - static_cast<double>(rec.n_t) / static_cast<double>(profile.n);
        // num / (2 n N) >= (n - N) / n  <=>  num >= 2 N (n - N).
        const auto total = static_cast<__int128>(rec.n_t);
        c.pass = rec.d_max_exact.numerator >= 2 * total * (n - total);
        out.push_back(c);
    }
    return out;
}

double mixing_time_constant(int p, double delta) {
    return 2.0 * std::log(2.0 + 20.0 / delta) / std::log(static_cast<double>(p));
}

MixingTimeCheck check_mixing_time_bound(const Graph& g, const Spectrum& s, double eps) {
    MixingTimeCheck out;
    out.eps = eps;
    if (!(eps > 0.0 && eps < 1.0)) throw std::invalid_argument("mixing time bound: eps must be in (0, 1)");
    const int p = g.branching();
    const auto cls = classify(s, p);
    if (cls.bipartite) {
        out.reason = "bipartite graph: the walk is periodic and d(t) >= 1/2";
        return out;
    }
    if (!cls.is_ramanujan) {
        out.reason = "not Ramanujan";
        return out;
    }
    const double logp = std::log(static_cast<double>(p));
    const double logn = std::log(static_cast<double>(g.size())) / logp;
    out.girth = girth(g);
    out.delta = out.girth / logn;
    out.bound = logn + 2.0 * std::log(1.0 / eps) / logp + mixing_time_constant(p, out.delta);
    out.bound_ceil = static_cast<int>(std::ceil(out.bound));
    const int t_max = std::min(out.bound_ceil, max_safe_walk_length(p));
    auto profile = mixing_profile(g, {.t_min = 0, .t_max = t_max});
    try {
        out.t_mix_observed = t_mix(profile, eps).t_mix;
    } catch (const std::domain_error&) {
        out.t_mix_observed.reset();
    }
    out.status = out.t_mix_observed && *out.t_mix_observed <= out.bound_ceil ? CheckStatus::pass : CheckStatus::fail;
    return out;
}

L2Check check_l2_bound(const Graph& g, int t) {
    if (t < 1) throw std::invalid_argument("l2 bound: t must be >= 1");
    const std::size_t n = g.size();
    std::vector<double> lhs(n), rhs(n);
    parallel_for(n, [&](std::size_t x) {
        auto row = walk_row(g, static_cast<Vertex>(x), t);
        const double d = tv_from_row(row, n);
        const double total = static_cast<double>(row.total);
        lhs[x] = 4.0 * d * d;
        rhs[x] = static_cast<double>(n) * variance_from_row(row, n) / (total * total);
    });
    L2Check out;
    out.t = t;
    out.pass = true;
    double worst_ratio = -1.0;
    for (std::size_t x = 0; x < n; ++x) {
        if (lhs[x] > rhs[x] * (1.0 + 1e-9)) out.pass = false;
        const double ratio = rhs[x] > 0 ? lhs[x] / rhs[x] : (lhs[x] > 0 ? INFINITY : 0.0);
        if (ratio > worst_ratio) {
            worst_ratio = ratio;
            out.worst = static_cast<Vertex>(x);
            out.lhs = lhs[x];
            out.rhs = rhs[x];
        }
    }
    return out;
}

}  // namespace nbrw
