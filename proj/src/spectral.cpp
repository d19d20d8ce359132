#include "nbrw/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include <Eigen/Dense>

namespace nbrw {

namespace {

// Tolerance used to recognise lambda_0 = d and the bipartite -d eigenvalue.
constexpr double kTrivialTolerance = 1e-6;

std::vector<double> adjacency_matrix(const Graph& g) {
    const std::size_t n = g.size();
    std::vector<double> a(n * n, 0.0);
    for (std::size_t u = 0; u < n; ++u)
        for (Vertex v : g.neighbors(static_cast<Vertex>(u))) a[u * n + v] = 1.0;
    return a;
}

double off_diagonal_norm(const std::vector<double>& a, std::size_t n) {
    double sum = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (i != j) sum += a[i * n + j] * a[i * n + j];
    return std::sqrt(sum);
}

// Orders eigenpairs by descending eigenvalue, ties by solver index, and flips
// each eigenvector so its first clearly nonzero entry is positive.
void sort_into(const std::vector<double>& values, std::vector<double>& values_out,
               const std::vector<double>* row_major_vectors, std::vector<double>& vectors_out,
               std::size_t n) {
    std::vector<std::size_t> order(values.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return values[a] > values[b]; });
    values_out.resize(values.size());
    for (std::size_t j = 0; j < order.size(); ++j) values_out[j] = values[order[j]];
    if (!row_major_vectors) return;
    vectors_out.assign(n * n, 0.0);
    for (std::size_t j = 0; j < n; ++j) {
        const std::size_t col = order[j];
        double sign = 1.0;
        for (std::size_t x = 0; x < n; ++x) {
            double v = (*row_major_vectors)[x * n + col];
            if (std::abs(v) > 1e-8) {
                sign = v < 0 ? -1.0 : 1.0;
                break;
            }
        }
        for (std::size_t x = 0; x < n; ++x) vectors_out[j * n + x] = sign * (*row_major_vectors)[x * n + col];
    }
}

}  // namespace

double Theta::argument(int p) const {
    switch (kind) {
        case ThetaKind::inside: return std::cos(value);
        case ThetaKind::above: return std::cosh(value * std::log(static_cast<double>(p)));
        case ThetaKind::below: return -std::cosh(value * std::log(static_cast<double>(p)));
    }
    return 0.0;
}

Spectrum Spectrum::synthetic(std::size_t n, int degree, std::vector<double> eigenvalues, bool bipartite) {
    if (eigenvalues.size() != n) throw std::invalid_argument("synthetic spectrum: need n eigenvalues");
    Spectrum s;
    s.n_ = n;
    s.d_ = degree;
    s.bipartite_ = bipartite;
    std::stable_sort(eigenvalues.begin(), eigenvalues.end(), std::greater<>());
    s.values_ = std::move(eigenvalues);
    return s;
}

std::size_t Spectrum::excluded_bipartite_index() const {
    if (!bipartite_ || n_ < 2) return n_;
    if (std::abs(values_.back() + d_) > kTrivialTolerance) return n_;
    return n_ - 1;
}

bool Spectrum::is_trivial(std::size_t j) const { return j == 0 || j == excluded_bipartite_index(); }

SymmetricEigen jacobi_eigen(std::vector<double> a, std::size_t n, bool want_vectors, double tolerance,
                            int max_sweeps) {
    SymmetricEigen out;
    if (want_vectors) {
        out.vectors.assign(n * n, 0.0);
        for (std::size_t i = 0; i < n; ++i) out.vectors[i * n + i] = 1.0;
    }
    // Round-robin tournament over m (even) slots; a slot >= n sits out.
    const std::size_t m = n + (n % 2);
    std::vector<std::size_t> slots(m);
    std::iota(slots.begin(), slots.end(), 0);
    std::vector<std::size_t> ps, qs;
    std::vector<double> cs, ss;
    ps.reserve(m / 2);
    qs.reserve(m / 2);
    cs.reserve(m / 2);
    ss.reserve(m / 2);

    auto rotate_columns = [&](double* row) {
        for (std::size_t k = 0; k < ps.size(); ++k) {
            double x = row[ps[k]], y = row[qs[k]];
            row[ps[k]] = cs[k] * x - ss[k] * y;
            row[qs[k]] = ss[k] * x + cs[k] * y;
        }
    };

    for (int sweep = 0;; ++sweep) {
        if (off_diagonal_norm(a, n) <= tolerance) {
            out.sweeps = sweep;
            break;
        }
        if (sweep == max_sweeps) {
            throw SpectralError("Jacobi eigensolver did not converge in " + std::to_string(max_sweeps) +
                                " sweeps");
        }
        for (std::size_t round = 0; round + 1 < m; ++round) {
            ps.clear();
            qs.clear();
            cs.clear();
            ss.clear();
            for (std::size_t k = 0; k < m / 2; ++k) {
                std::size_t p = slots[k], q = slots[m - 1 - k];
                if (p >= n || q >= n) continue;
                if (p > q) std::swap(p, q);
                const double apq = a[p * n + q];
                if (apq == 0.0) continue;
                const double theta = (a[q * n + q] - a[p * n + p]) / (2.0 * apq);
                const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                ps.push_back(p);
                qs.push_back(q);
                cs.push_back(c);
                ss.push_back(t * c);
            }
            // A <- J^T A J: rows first, then columns row by row.
            for (std::size_t k = 0; k < ps.size(); ++k) {
                double* rp = &a[ps[k] * n];
                double* rq = &a[qs[k] * n];
                const double c = cs[k], s = ss[k];
                for (std::size_t j = 0; j < n; ++j) {
                    double x = rp[j], y = rq[j];
                    rp[j] = c * x - s * y;
                    rq[j] = s * x + c * y;
                }
            }
            for (std::size_t i = 0; i < n; ++i) rotate_columns(&a[i * n]);
            if (want_vectors) {
                for (std::size_t i = 0; i < n; ++i) rotate_columns(&out.vectors[i * n]);
            }
            for (std::size_t k = 0; k < ps.size(); ++k) {
                a[ps[k] * n + qs[k]] = 0.0;
                a[qs[k] * n + ps[k]] = 0.0;
            }
            // Fixed slot 0, everyone else moves one place.
            std::rotate(slots.begin() + 1, slots.end() - 1, slots.end());
        }
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) {
                double mean = 0.5 * (a[i * n + j] + a[j * n + i]);
                a[i * n + j] = a[j * n + i] = mean;
            }
    }
    out.values.resize(n);
    for (std::size_t i = 0; i < n; ++i) out.values[i] = a[i * n + i];
    return out;
}

Spectrum eigendecompose(const Graph& g, const EigenOptions& options) {
    const std::size_t n = g.size();
    if (n > options.dense_limit) {
        throw SpectralError("graph has " + std::to_string(n) + " vertices, above the dense limit of " +
                            std::to_string(options.dense_limit));
    }
    EigenMethod method = options.method;
    if (method == EigenMethod::automatic) {
        method = n <= options.jacobi_limit ? EigenMethod::jacobi : EigenMethod::tridiagonal;
    }

    Spectrum s;
    s.n_ = n;
    s.d_ = g.degree();
    s.bipartite_ = is_bipartite(g);

    std::vector<double> values;
    std::vector<double> vectors;
    if (method == EigenMethod::jacobi) {
        const double tol = options.tolerance_scale * static_cast<double>(n) * g.degree();
        auto result = jacobi_eigen(adjacency_matrix(g), n, options.want_vectors, tol, options.max_sweeps);
        values = std::move(result.values);
        vectors = std::move(result.vectors);
        s.method_ = "jacobi";
        s.sweeps_ = result.sweeps;
    } else {
        auto dense = adjacency_matrix(g);
        Eigen::Map<const Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>> mat(
            dense.data(), static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(
            Eigen::MatrixXd(mat), options.want_vectors ? Eigen::ComputeEigenvectors : Eigen::EigenvaluesOnly);
        if (solver.info() != Eigen::Success) throw SpectralError("tridiagonal QR eigensolver failed");
        values.assign(solver.eigenvalues().data(), solver.eigenvalues().data() + n);
        if (options.want_vectors) {
            vectors.resize(n * n);
            const auto& v = solver.eigenvectors();
            for (std::size_t x = 0; x < n; ++x)
                for (std::size_t k = 0; k < n; ++k)
                    vectors[x * n + k] = v(static_cast<Eigen::Index>(x), static_cast<Eigen::Index>(k));
        }
        s.method_ = "tridiagonal";
    }
    sort_into(values, s.values_, options.want_vectors ? &vectors : nullptr, s.vectors_, n);
    return s;
}

void require_branching(const Spectrum& s, int p) {
    if (p != s.degree() - 1) {
        throw std::invalid_argument("branching factor p=" + std::to_string(p) + " does not match d - 1 = " +
                                    std::to_string(s.degree() - 1));
    }
}

Theta theta_of(double lambda, int p) {
    const double edge = 2.0 * std::sqrt(static_cast<double>(p));
    const double lnp = std::log(static_cast<double>(p));
    if (lambda > edge + kBoundaryTolerance) return {ThetaKind::above, std::acosh(lambda / edge) / lnp};
    if (lambda < -edge - kBoundaryTolerance) return {ThetaKind::below, std::acosh(-lambda / edge) / lnp};
    return {ThetaKind::inside, std::acos(std::clamp(lambda / edge, -1.0, 1.0))};
}

Spectrum parametrize_thetas(Spectrum s, int p) {
    require_branching(s, p);
    s.thetas_.resize(s.size());
    for (std::size_t j = 0; j < s.size(); ++j) s.thetas_[j] = theta_of(s.values_[j], p);
    // lambda_0 = p + 1 = sqrt(p)(p^{1/2} + p^{-1/2}) gives phi_0 = 1/2 exactly.
    if (s.size() > 0 && std::abs(s.values_[0] - s.d_) <= kTrivialTolerance) s.thetas_[0] = {ThetaKind::above, 0.5};
    auto bip = s.excluded_bipartite_index();
    if (bip < s.size()) s.thetas_[bip] = {ThetaKind::below, 0.5};
    s.theta_p_ = p;
    return s;
}

Classification classify(const Spectrum& s, int p, double tol) {
    require_branching(s, p);
    Classification c;
    c.ramanujan_bound = 2.0 * std::sqrt(static_cast<double>(p));
    c.bipartite = s.bipartite();
    c.bipartite_excluded = s.excluded_bipartite_index() < s.size();
    for (std::size_t j = 0; j < s.size(); ++j) {
        if (s.is_trivial(j)) continue;
        const double mag = std::abs(s.eigenvalue(j));
        c.lambda = std::max(c.lambda, mag);
        if (mag > c.ramanujan_bound + kBoundaryTolerance) ++c.exceptional;
    }
    c.is_ramanujan = c.lambda <= c.ramanujan_bound + tol;
    c.expander = c.lambda < s.degree() - kTrivialTolerance;
    return c;
}

std::vector<double> exceptional_parameters(const Spectrum& s, int p) {
    require_branching(s, p);
    std::vector<double> out;
    for (std::size_t j = 0; j < s.size(); ++j) {
        if (s.is_trivial(j)) continue;
        Theta th = s.theta_p() == p && !s.thetas().empty() ? s.thetas()[j] : theta_of(s.eigenvalue(j), p);
        if (th.exceptional()) out.push_back(th.value);
    }
    return out;
}

DensityCurve density_curve(const Spectrum& s, int p, std::span<const double> alphas) {
    const auto params = exceptional_parameters(s, p);
    DensityCurve curve;
    curve.alphas.assign(alphas.begin(), alphas.end());
    const double logn = std::log(static_cast<double>(s.size()));
    for (double alpha : alphas) {
        auto m = static_cast<std::size_t>(
            std::count_if(params.begin(), params.end(), [&](double v) { return v >= alpha; }));
        curve.counts.push_back(m);
        curve.exponents.push_back(m == 0 ? std::numeric_limits<double>::quiet_NaN()
                                         : std::log(static_cast<double>(m)) / logn);
    }
    return curve;
}

double i_n_sum(const Spectrum& s, int p, int t) {
    if (t < 1) throw std::invalid_argument("i_n_sum: t must be >= 1");
    double sum = 0.0;
    for (double v : exceptional_parameters(s, p)) {
        sum += std::pow(static_cast<double>(p), -(0.5 - v) * 2.0 * t);
    }
    return sum;
}

}  // namespace nbrw
