#include <doctest.h>

#include <cmath>

#include "nbrw/cheby.hpp"
#include "nbrw/generators.hpp"
#include "nbrw/spectral.hpp"
#include "oracles.hpp"

using namespace nbrw;

namespace {

std::vector<Graph> small_graphs() {
    std::vector<Graph> gs;
    for (auto name : fixture_names()) gs.push_back(gen_fixture(name));
    gs.push_back(gen_random_regular({.n = 10, .d = 3, .seed = 1}));
    return gs;
}

}  // namespace

TEST_CASE("scalar Chebyshev values") {
    CHECK(cheb_t(3, 0.5) == doctest::Approx(-1.0));
    CHECK(cheb_u(3, 0.5) == doctest::Approx(-1.0));
    CHECK(cheb_t(0, 7.0) == 1.0);
    CHECK(cheb_u(0, 7.0) == 1.0);
    for (int p : {2, 3, 5}) {
        for (int l = 0; l <= 12; ++l) {
            const double expected = (std::pow(p, l + 1) - 1.0) / (p - 1.0);
            CHECK(cheb_p(l, p, p + 1.0) == doctest::Approx(expected).epsilon(1e-12));
        }
        for (int t = 1; t <= 12; ++t) {
            CHECK(cheb_q(t, p, p + 1.0) == doctest::Approx((p + 1.0) * std::pow(p, t - 1)).epsilon(1e-12));
        }
        CHECK(cheb_q(0, p, 1.7) == doctest::Approx((p + 1.0) / p));
    }
    CHECK(cheb_scalar(ChebKind::T, 4, 0, 0.3) == cheb_t(4, 0.3));
    CHECK(cheb_scalar(ChebKind::R, 4, 3, 0.3) == cheb_r(4, 3, 0.3));
}

TEST_CASE("recurrences match trigonometric and hyperbolic closed forms") {
    for (int l = 0; l <= 30; ++l) {
        for (double x : {-3.0, -1.0, -0.999, -0.6, 0.0, 0.13, 0.5, 0.97, 1.0, 1.05, 2.5}) {
            CAPTURE(l);
            CAPTURE(x);
            const double t = oracle::cheb_t(l, x), u = oracle::cheb_u(l, x);
            CHECK(std::abs(cheb_t(l, x) - t) <= 1e-9 * std::max(1.0, std::abs(t)));
            CHECK(std::abs(cheb_u(l, x) - u) <= 1e-9 * std::max(1.0, std::abs(u)));
        }
    }
}

TEST_CASE("U_t = U_{t-2} + 2 T_t") {
    for (int t = 2; t <= 60; ++t) {
        for (int k = 0; k < 100; ++k) {
            const double x = -1.0 + 2.0 * k / 99.0;
            const double lhs = cheb_u(t, x);
            const double rhs = cheb_u(t - 2, x) + 2.0 * cheb_t(t, x);
            CHECK(std::abs(lhs - rhs) <= 1e-9 * std::max(1.0, std::abs(lhs)));
        }
    }
}

TEST_CASE("Q, R and P are the stated combinations of T and U") {
    for (int p : {2, 3, 7}) {
        for (int t = 0; t <= 15; ++t) {
            for (double x : {-5.0, -1.2, 0.0, 0.9, 2.0 * std::sqrt(p), 4.4}) {
                const double y = x / (2.0 * std::sqrt(p));
                const double r = (p - 1.0) / p * oracle::cheb_u(t, y) + 2.0 / p * oracle::cheb_t(t, y);
                const double scale = std::pow(p, t / 2.0);
                const double u = oracle::cheb_u(t, y);
                CHECK(std::abs(cheb_r(t, p, y) - r) <= 1e-9 * std::max(1.0, std::abs(r)));
                CHECK(std::abs(cheb_q(t, p, x) - scale * r) <= 1e-9 * scale * std::max(1.0, std::abs(r)));
                CHECK(std::abs(cheb_p(t, p, x) - scale * u) <= 1e-9 * scale * std::max(1.0, std::abs(u)));
            }
        }
        // R_t at the endpoints: U_t(+-1) = (+-1)^t (t+1), T_t(+-1) = (+-1)^t.
        for (int t = 0; t <= 10; ++t) {
            const double sign = t % 2 ? -1.0 : 1.0;
            CHECK(cheb_r(t, p, 1.0) == doctest::Approx((p - 1.0) / p * (t + 1) + 2.0 / p));
            CHECK(cheb_r(t, p, -1.0) == doctest::Approx(sign * ((p - 1.0) / p * (t + 1) + 2.0 / p)));
        }
    }
}

TEST_CASE("walk counts: hand examples") {
    auto k4 = gen_fixture(Fixture::k4);
    auto r1 = walk_row(k4, 0, 1);
    CHECK(r1.counts == std::vector<std::int64_t>{0, 1, 1, 1});
    CHECK(r1.total == 3);
    auto r2 = walk_row(k4, 0, 2);
    CHECK(r2.counts == std::vector<std::int64_t>{0, 2, 2, 2});
    CHECK(r2.total == 6);
    auto r0 = walk_row(k4, 2, 0);
    CHECK(r0.counts == std::vector<std::int64_t>{0, 0, 1, 0});
    CHECK(r0.total == 1);
    CHECK(walk_row_bruteforce(gen_fixture(Fixture::petersen), 0, 5).total == 48);
    // Girth 6: walks of length 2 are unique; the 12 walks of length 3 split evenly
    // over the 4 vertices at distance 3.
    auto hw2 = walk_row_bruteforce(gen_fixture(Fixture::heawood), 0, 2);
    for (auto c : hw2.counts) CHECK((c == 0 || c == 1));
    auto hw3 = walk_row_bruteforce(gen_fixture(Fixture::heawood), 0, 3);
    CHECK(*std::max_element(hw3.counts.begin(), hw3.counts.end()) == 3);
    CHECK_THROWS_AS(walk_row(k4, 0, -1), std::invalid_argument);
}

TEST_CASE("walk_row equals dense matrix recurrence and path enumeration") {
    for (const auto& g : small_graphs()) {
        auto mats = oracle::walk_matrices(g, 8);
        const int p = g.branching();
        for (Vertex x = 0; x < static_cast<Vertex>(g.size()); ++x) {
            auto rows = walk_rows(g, x, 8);
            for (int t = 0; t <= 8; ++t) {
                CHECK(rows[t].counts == mats[t][x]);
                CHECK(rows[t].counts == walk_row_bruteforce(g, x, t).counts);
                CHECK(rows[t].total == walk_total(p, t));
                std::int64_t sum = 0;
                for (auto c : rows[t].counts) {
                    CHECK(c >= 0);
                    sum += c;
                }
                CHECK(sum == rows[t].total);
                if (2 * t < girth(g)) {
                    for (auto c : rows[t].counts) CHECK(c <= 1);
                }
            }
            CHECK(walk_row(g, x, 6).counts == rows[6].counts);
        }
    }
}

TEST_CASE("P_l(A) row equals the sum of K_{l-2j}") {
    for (const auto& g : small_graphs()) {
        for (Vertex x = 0; x < static_cast<Vertex>(g.size()); ++x) {
            auto rows = walk_rows(g, x, 10);
            for (int l = 0; l <= 10; ++l) {
                std::vector<std::int64_t> sum(g.size(), 0);
                for (int j = 0; 2 * j <= l; ++j)
                    for (std::size_t y = 0; y < g.size(); ++y) sum[y] += rows[l - 2 * j].counts[y];
                CHECK(p_poly_row(g, x, l) == sum);
            }
        }
    }
}

TEST_CASE("Q_t(A) applied through the spectrum reproduces K_t") {
    EigenOptions o;
    o.want_vectors = true;
    for (const auto& g : small_graphs()) {
        auto s = eigendecompose(g, o);
        const int p = g.branching();
        for (Vertex x = 0; x < static_cast<Vertex>(g.size()); ++x) {
            for (int t = 1; t <= 12; ++t) {
                auto row = walk_row(g, x, t);
                auto q = apply_q_spectrally(s, p, t, x);
                for (std::size_t y = 0; y < g.size(); ++y) CHECK(std::abs(q[y] - row.counts[y]) <= 1e-6);
            }
        }
        CHECK_THROWS_AS(apply_q_spectrally(s, p, 0, 0), std::invalid_argument);
        CHECK_THROWS_AS(apply_q_spectrally(eigendecompose(g), p, 2, 0), std::invalid_argument);
    }
}

TEST_CASE("overflow is reported with the largest safe length") {
    const int safe = max_safe_walk_length(5);
    CHECK(walk_total(5, safe) > 0);
    int too_long = safe;
    while (true) {
        try {
            walk_total(5, too_long);
            ++too_long;
        } catch (const WalkOverflow&) {
            break;
        }
    }
    auto k = gen_lps({5, 13});
    CHECK_NOTHROW(walk_row(gen_fixture(Fixture::k5), 0, max_safe_walk_length(3)));
    CHECK_NOTHROW(walk_row(k, 0, safe));
    try {
        walk_row(k, 0, too_long);
        FAIL("expected overflow");
    } catch (const WalkOverflow& e) {
        CHECK(e.max_safe() == safe);
    }
    CHECK_THROWS_AS(walk_total(2, 80), WalkOverflow);
    CHECK_THROWS_AS(walk_row_bruteforce(gen_fixture(Fixture::petersen), 0, 30), std::length_error);
}
