#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "nbrw/cheby.hpp"
#include "nbrw/graph.hpp"
#include "nbrw/spectral.hpp"

namespace nbrw {

// Outcome of checking one inequality. Inapplicable means a hypothesis of the
// inequality is not met by this input; it is reported, never asserted.
enum class CheckStatus { pass, fail, inapplicable };
const char* to_string(CheckStatus s);

// Total variation d_x(t) = numerator / denominator exactly, with
// numerator = sum_y |n K_t(x,y) - N(t)| and denominator = 2 n N(t).
struct ExactTv {
    __int128 numerator = 0;
    __int128 denominator = 1;

    double value() const;
    // this <= eta, with eta compared in long double.
    bool at_most(double eta) const;
    bool operator<(const ExactTv& o) const { return numerator * o.denominator < o.numerator * denominator; }
};

ExactTv exact_tv(const WalkRow& row, std::size_t n);

// d_x(t) = 1/2 sum_y |K_t(x,y)/N(t) - 1/n|.
double tv_from_row(const WalkRow& row, std::size_t n);

// ||P_x^t - U||_2^2 = sum_y (K_t(x,y)/N(t) - 1/n)^2, compensated summation.
double l2_sq_from_row(const WalkRow& row, std::size_t n);

// W(Q_t, x) = sum_y (K_t(x,y) - N(t)/n)^2, exact integer accumulation.
double variance_from_row(const WalkRow& row, std::size_t n);

struct MixingRecord {
    int t = 0;
    double d_max = 0.0;
    double d_mean = 0.0;
    double d_sq_mean = 0.0;      // mean over starts of d_x(t)^2
    double d2 = 0.0;             // mean over starts of ||P_x^t - U||_2^2
    std::int64_t n_t = 0;        // N(t)
    double lower_bound = 0.0;    // max(0, 1 - N(t)/n)
    double l2_bound = 0.0;       // max_x sqrt(n W(Q_t, x)) / (2 N(t)), bounds d_max
    double w2 = 0.0;             // mean over starts of W(Q_t, x)
    ExactTv d_max_exact;
    Vertex argmax = 0;
};

enum class StartMode { all, sample };

struct ProfileOptions {
    int t_min = 1;
    int t_max = 12;
    StartMode starts = StartMode::all;
    // With StartMode::sample and n above sample_threshold, d_mean, d2 and
    // d_max use sample_size seeded starts; d_max is then a lower estimate.
    std::size_t sample_size = 64;
    std::size_t sample_threshold = 2048;
    std::uint64_t seed = 0;
};

struct MixingProfile {
    std::size_t n = 0;
    int p = 0;
    int t_min = 0;
    int t_max = 0;
    std::vector<MixingRecord> records;  // one per t in [t_min, t_max]
    std::vector<Vertex> starts;
    bool sampled = false;
    // Bipartite graph: the walk at time t lives on one side, so d(t) >= 1/2
    // against the uniform measure.
    bool parity_warning = false;

    const MixingRecord& at(int t) const;
};

MixingProfile mixing_profile(const Graph& g, const ProfileOptions& options = {});

struct MixResult {
    double eta = 0.0;
    int t_mix = 0;
};

// Smallest t in the profile with d_max(t) <= eta (exact comparison). Throws
// std::domain_error when the profile never reaches eta.
MixResult t_mix(const MixingProfile& profile, double eta);

struct LowerBoundCheck {
    int t = 0;
    std::int64_t n_t = 0;
    double d_max = 0.0;
    double bound = 0.0;
    bool pass = false;
};

// d(t) >= 1 - N(t)/n for every profiled t with N(t) <= n, compared exactly.
std::vector<LowerBoundCheck> check_lower_bound(const MixingProfile& profile);

struct MixingTimeCheck {
    CheckStatus status = CheckStatus::inapplicable;
    std::string reason;
    double eps = 0.0;
    int girth = 0;
    double delta = 0.0;           // girth / log_p n
    double bound = 0.0;           // log_p n + 2 log_p(1/eps) + 2 log_p(2 + 20/delta)
    int bound_ceil = 0;
    std::optional<int> t_mix_observed;
};

// Mixing-time bound for Ramanujan graphs with girth delta log_p n. The
// profile is computed up to ceil(bound).
MixingTimeCheck check_mixing_time_bound(const Graph& g, const Spectrum& s, double eps);

// Additive constant 2 log_p(2 + 20/delta) of the bound.
double mixing_time_constant(int p, double delta);

struct L2Check {
    int t = 0;
    double lhs = 0.0;        // 4 d_x(t)^2 at the worst x (largest lhs / rhs)
    double rhs = 0.0;        // n W(Q_t, x) / ((p+1)^2 p^{2t-2}) at that x
    Vertex worst = 0;
    bool pass = false;       // lhs <= rhs (1 + 1e-9) for every x
};

// 4 d_x(t)^2 <= n / ((p+1)^2 p^{2t-2}) W(Q_t, x), for all x.
L2Check check_l2_bound(const Graph& g, int t);

}  // namespace nbrw
