#include <doctest.h>

#include <cmath>

#include "nbrw/diameter.hpp"
#include "nbrw/generators.hpp"

using namespace nbrw;

TEST_CASE("expansion base") {
    // Petersen: d/lambda = 3/2, b = golden ratio squared.
    CHECK(expansion_base(3.0, 2.0) == doctest::Approx((3.0 + std::sqrt(5.0)) / 2.0));
    CHECK(expansion_base(3.0, 3.0) == 1.0);
    CHECK_THROWS_AS(expansion_base(3.0, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(expansion_base(3.0, 3.5), std::invalid_argument);
}

TEST_CASE("polynomial tail inequality holds for every polynomial, start and fixture") {
    for (auto name : fixture_names()) {
        auto g = gen_fixture(name);
        auto s = eigendecompose(g);
        for (auto kind : {ChebKind::T, ChebKind::U, ChebKind::P, ChebKind::Q}) {
            for (int deg = 0; deg <= 4; ++deg) {
                for (double scale : {1.0, 1.7, static_cast<double>(g.degree())}) {
                    PolySpec poly{kind, deg, scale};
                    for (Vertex x = 0; x < static_cast<Vertex>(g.size()); ++x) {
                        auto c = polynomial_tail_check(g, s, poly, x);
                        CAPTURE(name);
                        CAPTURE(deg);
                        CHECK(c.pass);
                        CHECK(c.tail == distance_tail_count(g, x, deg));
                    }
                }
            }
        }
    }
}

TEST_CASE("polynomial tail: hand values") {
    auto g = gen_fixture(Fixture::petersen);
    auto s = eigendecompose(g);
    // Constant polynomial: (1/n)^2 (n - 1) against 1.
    auto c0 = polynomial_tail_check(g, s, {ChebKind::T, 0, 1.0}, 0);
    CHECK(c0.tail == 9);
    CHECK(c0.lhs == doctest::Approx(0.09));
    CHECK(c0.rhs == 1.0);
    // T_1(x / 2) = x / 2: (3/20)^2 * 6 against (2/2)^2.
    auto c1 = polynomial_tail_check(g, s, {ChebKind::T, 1, 2.0}, 3);
    CHECK(c1.tail == 6);
    CHECK(c1.lhs == doctest::Approx(0.135));
    CHECK(c1.rhs == doctest::Approx(1.0));
}

TEST_CASE("T_l(r) >= b^l / 2") {
    for (double r : {1.0, 1.001, 1.2, 1.5, 2.0, 5.0}) {
        for (int l = 0; l <= 40; ++l) {
            auto c = chebyshev_growth_check(r, l);
            CHECK(c.pass);
            const double b = r + std::sqrt(r * r - 1.0);
            // Closed form: T_l(r) = (b^l + b^{-l}) / 2.
            CHECK(c.lhs == doctest::Approx((std::pow(b, l) + std::pow(b, -l)) / 2.0).epsilon(1e-10));
        }
    }
    CHECK_THROWS_AS(chebyshev_growth_check(0.5, 2), std::invalid_argument);
}

TEST_CASE("Petersen tails and diameter bound") {
    auto g = gen_fixture(Fixture::petersen);
    auto r = almost_diameter_report(g, eigendecompose(g));
    const double b = (3.0 + std::sqrt(5.0)) / 2.0;
    CHECK(r.expander);
    CHECK(r.ramanujan);
    CHECK(r.b == doctest::Approx(b));
    REQUIRE(r.tails.size() == 4);
    CHECK(r.tails[0].radius == doctest::Approx(0.5 * std::log(10.0) / std::log(b) + 0.5));
    CHECK(r.tails[0].tail_fraction == doctest::Approx(0.6));
    for (const auto& row : r.tails) {
        CHECK(row.status == CheckStatus::pass);
        CHECK(row.bound == doctest::Approx(4.0 / std::pow(b, 2.0 * row.xi)));
    }
    REQUIRE(r.ramanujan_tails.size() == 4);
    for (const auto& row : r.ramanujan_tails) {
        CHECK(row.status == CheckStatus::pass);
        CHECK(row.radius == doctest::Approx(std::log2(10.0) + row.xi));
    }
    CHECK(r.diameter_measured == 2);
    // 4 / b^{2 xi} < 1/2 first at xi = 2.
    REQUIRE(r.xi_star);
    CHECK(*r.xi_star == 2.0);
    CHECK(*r.diameter_bound == doctest::Approx(std::log(10.0) / std::log(b) + 4.0));
    CHECK(r.diameter_status == CheckStatus::pass);
}

TEST_CASE("K4 at xi = 1/2: real-radius form fails, integer-degree form holds") {
    auto g = gen_fixture(Fixture::k4);
    auto r = almost_diameter_report(g, eigendecompose(g));
    const auto& row = r.tails[0];
    CHECK(row.xi == 0.5);
    CHECK(row.radius < 1.0);
    CHECK(row.tail_fraction == 0.75);
    CHECK(row.bound < 0.75);
    CHECK(row.status == CheckStatus::fail);
    CHECK(row.tail_fraction <= row.integer_degree_bound);
    for (std::size_t i = 1; i < r.tails.size(); ++i) CHECK(r.tails[i].status == CheckStatus::pass);
}

TEST_CASE("bipartite fixtures: expander rows inapplicable, Ramanujan rows checked") {
    for (auto f : {Fixture::heawood, Fixture::cube3}) {
        auto g = gen_fixture(f);
        auto r = almost_diameter_report(g, eigendecompose(g));
        CHECK_FALSE(r.expander);
        CHECK(r.bipartite_excluded);
        CHECK(r.reason.find("bipartite") != std::string::npos);
        for (const auto& row : r.tails) CHECK(row.status == CheckStatus::inapplicable);
        CHECK(r.diameter_status == CheckStatus::inapplicable);
        CHECK(r.ramanujan);
        for (const auto& row : r.ramanujan_tails) CHECK(row.status == CheckStatus::pass);
    }
}

TEST_CASE("disconnected graphs and bad xi are rejected") {
    std::vector<Edge> edges;
    for (int base : {0, 4})
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j) edges.emplace_back(base + i, base + j);
    auto split = Graph::from_edges(8, 3, edges);
    CHECK_THROWS_AS(almost_diameter_report(split, eigendecompose(split)), std::invalid_argument);
    auto g = gen_fixture(Fixture::k5);
    const double bad[] = {0.0};
    CHECK_THROWS_AS(almost_diameter_report(g, eigendecompose(g), bad), std::invalid_argument);
}

TEST_CASE("centered distance readout") {
    auto c = centered_tail(gen_fixture(Fixture::petersen), 1.0);
    // log_2 10 = 3.32: every distance (0, 1, 2) is more than 1 away.
    CHECK(c.fraction == 1.0);
    CHECK(c.bound == 2.0);
}
