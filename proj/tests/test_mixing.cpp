#include <doctest.h>

#include <cmath>

#include "nbrw/generators.hpp"
#include "nbrw/mixing.hpp"
#include "oracles.hpp"

using namespace nbrw;

namespace {

// d_x(t) from the dense K_t matrix.
double tv_oracle(const oracle::Matrix& k, std::size_t x, double total) {
    const double n = static_cast<double>(k.size());
    double s = 0.0;
    for (auto c : k[x]) s += std::abs(c / total - 1.0 / n);
    return s / 2.0;
}

}  // namespace

TEST_CASE("K4 profile: d(1) = d(2) = d(3) = 1/4, t_mix(1/4) = 1, uniform at t = 4") {
    auto prof = mixing_profile(gen_fixture(Fixture::k4), {.t_min = 1, .t_max = 4});
    CHECK(prof.at(3).d_max == doctest::Approx(0.25));
    // K_4(0, .) = (6, 6, 6, 6).
    CHECK(prof.at(4).d_max == 0.0);
    CHECK(prof.at(4).w2 == 0.0);
    CHECK(t_mix(prof, 0.1).t_mix == 4);
    CHECK(prof.at(1).d_max == doctest::Approx(0.25));
    CHECK(prof.at(2).d_max == doctest::Approx(0.25));
    CHECK(prof.at(1).d_max_exact.numerator * 4 == prof.at(1).d_max_exact.denominator);
    CHECK(t_mix(prof, 0.25).t_mix == 1);
    CHECK(prof.at(1).n_t == 3);
    CHECK(prof.at(1).lower_bound == 0.25);
    CHECK(prof.at(2).lower_bound == 0.0);
    CHECK_FALSE(prof.parity_warning);
    CHECK_THROWS_AS(t_mix(mixing_profile(gen_fixture(Fixture::k4), {.t_min = 1, .t_max = 3}), 0.1),
                    std::domain_error);
    CHECK_THROWS_AS(prof.at(9), std::out_of_range);
}

TEST_CASE("TV, l2 and W per row agree with the dense oracle") {
    std::vector<Graph> gs;
    for (auto name : fixture_names()) gs.push_back(gen_fixture(name));
    gs.push_back(gen_random_regular({.n = 10, .d = 3, .seed = 1}));
    for (const auto& g : gs) {
        const auto n = g.size();
        auto mats = oracle::walk_matrices(g, 7);
        auto prof = mixing_profile(g, {.t_min = 1, .t_max = 7});
        for (int t = 1; t <= 7; ++t) {
            const double total = static_cast<double>(walk_total(g.branching(), t));
            double worst = 0.0, mean = 0.0, sq = 0.0, w2 = 0.0;
            for (std::size_t x = 0; x < n; ++x) {
                const double d = tv_oracle(mats[t], x, total);
                worst = std::max(worst, d);
                mean += d / n;
                sq += d * d / n;
                double w = 0.0, l2 = 0.0;
                for (auto c : mats[t][x]) {
                    w += (c - total / n) * (c - total / n);
                    l2 += (c / total - 1.0 / n) * (c / total - 1.0 / n);
                }
                w2 += w / n;
                auto row = walk_row(g, static_cast<Vertex>(x), t);
                CHECK(tv_from_row(row, n) == doctest::Approx(d).epsilon(1e-12));
                CHECK(exact_tv(row, n).value() == doctest::Approx(d).epsilon(1e-12));
                CHECK(variance_from_row(row, n) == doctest::Approx(w).epsilon(1e-12));
                CHECK(l2_sq_from_row(row, n) == doctest::Approx(l2).epsilon(1e-10).scale(1e-12));
                // l2 identity: ||P - U||^2 N(t)^2 = W.
                CHECK(l2_sq_from_row(row, n) * total * total == doctest::Approx(w).epsilon(1e-9).scale(1e-9));
            }
            const auto& rec = prof.at(t);
            CHECK(rec.d_max == doctest::Approx(worst).epsilon(1e-12));
            CHECK(rec.d_mean == doctest::Approx(mean).epsilon(1e-12));
            CHECK(rec.d_sq_mean == doctest::Approx(sq).epsilon(1e-12));
            CHECK(rec.w2 == doctest::Approx(w2).epsilon(1e-12).scale(1e-12));
            CHECK(rec.d2 * total * total == doctest::Approx(rec.w2).epsilon(1e-9).scale(1e-9));
            CHECK(rec.d_max <= rec.l2_bound * (1 + 1e-12) + 1e-15);
        }
    }
}

TEST_CASE("exact TV comparisons") {
    ExactTv a{1, 4}, b{1, 5};
    CHECK(b < a);
    CHECK(a.at_most(0.25));
    CHECK_FALSE(a.at_most(0.2499999));
    CHECK(a.value() == 0.25);
}

TEST_CASE("lower bound 1 - N(t)/n holds exactly on every fixture") {
    for (auto name : fixture_names()) {
        auto prof = mixing_profile(gen_fixture(name), {.t_min = 1, .t_max = 10});
        for (const auto& c : check_lower_bound(prof)) {
            CAPTURE(name);
            CAPTURE(c.t);
            CHECK(c.n_t <= static_cast<std::int64_t>(prof.n));
            CHECK(c.pass);
            CHECK(c.d_max >= c.bound);
        }
    }
}

TEST_CASE("4 d_x^2 <= n W / N(t)^2 for every start") {
    for (auto name : fixture_names()) {
        auto g = gen_fixture(name);
        for (int t = 1; t <= 10; ++t) {
            auto c = check_l2_bound(g, t);
            CAPTURE(name);
            CAPTURE(t);
            CHECK(c.pass);
            CHECK(c.lhs <= c.rhs * (1 + 1e-9));
        }
    }
    CHECK_THROWS_AS(check_l2_bound(gen_fixture(Fixture::k4), 0), std::invalid_argument);
}

TEST_CASE("bipartite fixtures never get below 1/2") {
    for (auto f : {Fixture::heawood, Fixture::cube3}) {
        auto prof = mixing_profile(gen_fixture(f), {.t_min = 1, .t_max = 14});
        CHECK(prof.parity_warning);
        for (const auto& r : prof.records) CHECK(r.d_max >= 0.5);
    }
}

TEST_CASE("sampled starts are seed deterministic") {
    auto g = gen_random_regular({.n = 200, .d = 3, .seed = 7});
    ProfileOptions o{.t_min = 3, .t_max = 6, .starts = StartMode::sample, .sample_size = 16,
                     .sample_threshold = 100, .seed = 11};
    auto a = mixing_profile(g, o);
    auto b = mixing_profile(g, o);
    CHECK(a.sampled);
    CHECK(a.starts.size() == 16);
    CHECK(a.starts == b.starts);
    CHECK(a.at(6).d_max == b.at(6).d_max);
    auto full = mixing_profile(g, {.t_min = 3, .t_max = 6});
    CHECK_FALSE(full.sampled);
    CHECK(full.starts.size() == 200);
    CHECK(a.at(6).d_max <= full.at(6).d_max);
}

TEST_CASE("mixing time bound constant and applicability") {
    CHECK(mixing_time_constant(5, 1.0) == doctest::Approx(2.0 * std::log(22.0) / std::log(5.0)));
    auto pet = gen_fixture(Fixture::petersen);
    auto c = check_mixing_time_bound(pet, eigendecompose(pet), 0.25);
    CHECK(c.status == CheckStatus::pass);
    CHECK(c.girth == 5);
    REQUIRE(c.t_mix_observed);
    CHECK(*c.t_mix_observed <= c.bound);
    auto hw = gen_fixture(Fixture::heawood);
    CHECK(check_mixing_time_bound(hw, eigendecompose(hw), 0.25).status == CheckStatus::inapplicable);
}
