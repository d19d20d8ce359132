#include <doctest.h>

#include <cmath>

#include "nbrw/generators.hpp"
#include "nbrw/spectral.hpp"
#include "oracles.hpp"

using namespace nbrw;

namespace {

void check_values(const Spectrum& s, std::vector<double> expected, double tol = 1e-9) {
    std::sort(expected.begin(), expected.end(), std::greater<>());
    REQUIRE(s.size() == expected.size());
    for (std::size_t j = 0; j < expected.size(); ++j) CHECK(s.eigenvalue(j) == doctest::Approx(expected[j]).epsilon(tol));
}

std::vector<double> repeat(std::initializer_list<std::pair<double, int>> parts) {
    std::vector<double> out;
    for (auto [v, k] : parts) out.insert(out.end(), static_cast<std::size_t>(k), v);
    return out;
}

// max_j ||A f_j - lambda_j f_j|| and max |<f_i, f_j> - delta_ij|.
std::pair<double, double> residuals(const Graph& g, const Spectrum& s) {
    const std::size_t n = g.size();
    double res = 0.0, orth = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
        auto f = s.vector(j);
        double r2 = 0.0;
        for (std::size_t x = 0; x < n; ++x) {
            double af = 0.0;
            for (Vertex y : g.neighbors(static_cast<Vertex>(x))) af += f[y];
            r2 += (af - s.eigenvalue(j) * f[x]) * (af - s.eigenvalue(j) * f[x]);
        }
        res = std::max(res, std::sqrt(r2));
        for (std::size_t k = 0; k <= j; ++k) {
            auto h = s.vector(k);
            double dot = 0.0;
            for (std::size_t x = 0; x < n; ++x) dot += f[x] * h[x];
            orth = std::max(orth, std::abs(dot - (j == k ? 1.0 : 0.0)));
        }
    }
    return {res, orth};
}

}  // namespace

TEST_CASE("fixture spectra match closed forms") {
    check_values(eigendecompose(gen_fixture(Fixture::k4)), repeat({{3, 1}, {-1, 3}}));
    check_values(eigendecompose(gen_fixture(Fixture::k5)), repeat({{4, 1}, {-1, 4}}));
    check_values(eigendecompose(gen_fixture(Fixture::petersen)), repeat({{3, 1}, {1, 5}, {-2, 4}}));
    // Q3 = K2 x K2 x K2: eigenvalues are sums of three +-1.
    check_values(eigendecompose(gen_fixture(Fixture::cube3)), repeat({{3, 1}, {1, 3}, {-1, 3}, {-3, 1}}));
    const double r2 = std::sqrt(2.0);
    check_values(eigendecompose(gen_fixture(Fixture::heawood)), repeat({{3, 1}, {r2, 6}, {-r2, 6}, {-3, 1}}));
}

TEST_CASE("Jacobi and tridiagonal QR agree with an independent solve on random graphs") {
    for (std::uint64_t seed = 1; seed <= 6; ++seed) {
        auto g = gen_random_regular({.n = 10 * seed + 10, .d = 3 + static_cast<int>(seed % 2), .seed = seed});
        auto ref = oracle::eigenvalues(g);
        for (auto method : {EigenMethod::jacobi, EigenMethod::tridiagonal}) {
            EigenOptions o;
            o.want_vectors = true;
            o.method = method;
            auto s = eigendecompose(g, o);
            for (std::size_t j = 0; j < ref.size(); ++j) CHECK(std::abs(s.eigenvalue(j) - ref[j]) <= 1e-10);
            auto [res, orth] = residuals(g, s);
            CHECK(res <= 1e-9);
            CHECK(orth <= 1e-9);
        }
    }
}

TEST_CASE("eigenvector signs and order are deterministic") {
    EigenOptions o;
    o.want_vectors = true;
    auto g = gen_fixture(Fixture::petersen);
    auto a = eigendecompose(g, o);
    auto b = eigendecompose(g, o);
    CHECK(a.eigenvalues() == b.eigenvalues());
    for (std::size_t j = 0; j < a.size(); ++j) {
        auto f = a.vector(j);
        CHECK(std::equal(f.begin(), f.end(), b.vector(j).begin()));
        auto first = std::find_if(f.begin(), f.end(), [](double v) { return std::abs(v) > 1e-8; });
        CHECK(*first > 0);
    }
    // The top eigenvector of a connected regular graph is constant.
    for (double v : a.vector(0)) CHECK(v == doctest::Approx(1.0 / std::sqrt(10.0)));
}

TEST_CASE("dense limit is enforced") {
    EigenOptions o;
    o.dense_limit = 8;
    CHECK_THROWS_AS(eigendecompose(gen_fixture(Fixture::petersen), o), SpectralError);
}

TEST_CASE("Jacobi reports non-convergence") {
    std::vector<double> m = {2, 1, 0, 1, 2, 1, 0, 1, 2};
    CHECK_THROWS_AS(jacobi_eigen(m, 3, false, 0.0, 1), SpectralError);
    auto r = jacobi_eigen(m, 3, true, 1e-14, 50);
    std::sort(r.values.begin(), r.values.end());
    CHECK(r.values[0] == doctest::Approx(2 - std::sqrt(2.0)));
    CHECK(r.values[1] == doctest::Approx(2.0));
    CHECK(r.values[2] == doctest::Approx(2 + std::sqrt(2.0)));
}

TEST_CASE("theta parametrization") {
    const int p = 2;
    const double edge = 2.0 * std::sqrt(2.0);
    auto in = theta_of(1.0, p);
    CHECK(in.kind == ThetaKind::inside);
    CHECK(2.0 * std::sqrt(2.0) * in.argument(p) == doctest::Approx(1.0));
    auto up = theta_of(3.0, p);
    CHECK(up.kind == ThetaKind::above);
    CHECK(edge * std::cosh(up.value * std::log(2.0)) == doctest::Approx(3.0));
    auto down = theta_of(-2.9, p);
    CHECK(down.kind == ThetaKind::below);
    CHECK(edge * down.argument(p) == doctest::Approx(-2.9));
    // Boundary within tolerance stays inside: theta = 0.
    auto edge_theta = theta_of(edge + 1e-12, p);
    CHECK(edge_theta.kind == ThetaKind::inside);
    CHECK(edge_theta.value == 0.0);
    // lambda_0 = p + 1 gives phi = 1/2.
    auto s = parametrize_thetas(eigendecompose(gen_fixture(Fixture::heawood)), 2);
    CHECK(s.thetas()[0].kind == ThetaKind::above);
    CHECK(s.thetas()[0].value == 0.5);
    CHECK(s.thetas().back().kind == ThetaKind::below);
    CHECK(s.thetas().back().value == 0.5);
    CHECK(theta_of(3.0, 2).value == doctest::Approx(0.5));
    CHECK_THROWS_AS(parametrize_thetas(eigendecompose(gen_fixture(Fixture::heawood)), 3), std::invalid_argument);
}

TEST_CASE("classification") {
    auto k4 = classify(eigendecompose(gen_fixture(Fixture::k4)), 2);
    CHECK(k4.lambda == doctest::Approx(1.0));
    CHECK(k4.is_ramanujan);
    CHECK_FALSE(k4.bipartite);
    CHECK(k4.expander);

    auto hw = classify(eigendecompose(gen_fixture(Fixture::heawood)), 2);
    CHECK(hw.bipartite);
    CHECK(hw.bipartite_excluded);
    CHECK(hw.lambda == doctest::Approx(std::sqrt(2.0)));
    CHECK(hw.is_ramanujan);
    CHECK(hw.exceptional == 0);

    // Two disjoint K4: lambda_1 = d, not an expander.
    std::vector<Edge> edges;
    for (int base : {0, 4})
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j) edges.emplace_back(base + i, base + j);
    auto split = classify(eigendecompose(Graph::from_edges(8, 3, edges)), 2);
    CHECK_FALSE(split.expander);
    CHECK_FALSE(split.is_ramanujan);
    CHECK(split.exceptional == 1);
}

TEST_CASE("exceptional counts and the I_n sum on a synthetic spectrum") {
    // p = 2, n = 1024: lambda_0 = 3, one eigenvalue with phi = 0.3, one with psi = 0.2.
    const int p = 2;
    const double edge = 2.0 * std::sqrt(2.0);
    std::vector<double> values(1024, 0.0);
    values[0] = 3.0;
    values[1] = edge * std::cosh(0.3 * std::log(2.0));
    values[2] = -edge * std::cosh(0.2 * std::log(2.0));
    auto s = Spectrum::synthetic(1024, 3, values);
    auto params = exceptional_parameters(s, p);
    REQUIRE(params.size() == 2);
    std::sort(params.begin(), params.end());
    CHECK(params[0] == doctest::Approx(0.2));
    CHECK(params[1] == doctest::Approx(0.3));
    const double alphas[] = {0.1, 0.25, 0.35};
    auto curve = density_curve(s, p, alphas);
    CHECK(curve.counts == std::vector<std::size_t>{2, 1, 0});
    CHECK(curve.exponents[1] == doctest::Approx(0.0));
    CHECK(std::isnan(curve.exponents[2]));
    const int t = 20;
    CHECK(i_n_sum(s, p, t) == doctest::Approx(std::pow(2.0, -0.4 * t) + std::pow(2.0, -0.6 * t)));
    CHECK(classify(s, p).exceptional == 2);
}
