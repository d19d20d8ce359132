#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "nbrw/graph.hpp"

namespace nbrw {

class SpectralError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Position of an eigenvalue relative to the Ramanujan interval [-2 sqrt(p), 2 sqrt(p)].
//   inside: lambda = 2 sqrt(p) cos(theta), value = theta in [0, pi]
//   above:  lambda = 2 sqrt(p) cosh(phi ln p),   value = phi
//   below:  lambda = -2 sqrt(p) cosh(psi ln p),  value = psi
enum class ThetaKind { inside, above, below };

struct Theta {
    ThetaKind kind = ThetaKind::inside;
    double value = 0.0;

    // lambda / (2 sqrt(p)): cos(theta) inside the interval, +-cosh(value ln p) outside.
    double argument(int p) const;
    bool exceptional() const { return kind != ThetaKind::inside; }
};

enum class EigenMethod {
    automatic,    // Jacobi up to EigenOptions::jacobi_limit, tridiagonal QR above
    jacobi,       // cyclic Jacobi, round-robin pivot order
    tridiagonal,  // Householder tridiagonalization + implicit QR
};

struct EigenOptions {
    bool want_vectors = false;
    std::size_t dense_limit = 5000;
    std::size_t jacobi_limit = 1024;
    EigenMethod method = EigenMethod::automatic;
    int max_sweeps = 100;
    // Jacobi stops once the off-diagonal Frobenius norm is <= scale * n * d.
    double tolerance_scale = 1e-12;
};

// Adjacency spectrum, eigenvalues descending. Eigenvectors (when requested)
// are orthonormal and stored contiguously per eigenvalue: f_j(x) = vector(j)[x].
class Spectrum {
public:
    Spectrum() = default;

    // For bound checks on spectra that do not come from a graph. The
    // eigenvalues are sorted descending; no eigenvectors.
    static Spectrum synthetic(std::size_t n, int degree, std::vector<double> eigenvalues,
                              bool bipartite = false);

    std::size_t size() const { return n_; }
    int degree() const { return d_; }
    bool bipartite() const { return bipartite_; }
    const std::vector<double>& eigenvalues() const { return values_; }
    double eigenvalue(std::size_t j) const { return values_[j]; }

    bool has_vectors() const { return !vectors_.empty(); }
    std::span<const double> vector(std::size_t j) const { return {vectors_.data() + j * n_, n_}; }
    double component(std::size_t j, std::size_t x) const { return vectors_[j * n_ + x]; }

    // Index of the trivial eigenvalue -d of a bipartite graph, which is left
    // out of lambda, the Ramanujan test and the exceptional counts. Returns
    // size() when there is none.
    std::size_t excluded_bipartite_index() const;
    // j = 0, or the excluded bipartite -d eigenvalue.
    bool is_trivial(std::size_t j) const;

    const std::vector<Theta>& thetas() const { return thetas_; }
    int theta_p() const { return theta_p_; }

    const std::string& method() const { return method_; }
    int sweeps() const { return sweeps_; }

private:
    friend Spectrum eigendecompose(const Graph&, const EigenOptions&);
    friend Spectrum parametrize_thetas(Spectrum, int);

    std::size_t n_ = 0;
    int d_ = 0;
    bool bipartite_ = false;
    std::vector<double> values_;
    std::vector<double> vectors_;
    std::vector<Theta> thetas_;
    int theta_p_ = 0;
    std::string method_ = "synthetic";
    int sweeps_ = 0;
};

struct SymmetricEigen {
    std::vector<double> values;   // unsorted, as produced by the solver
    std::vector<double> vectors;  // row-major n x n, column k pairs with values[k]
    int sweeps = 0;
};

// Cyclic Jacobi on a dense symmetric row-major matrix. Each sweep visits every
// pair (p, q) once, in round-robin order so that the n/2 rotations of a round
// touch disjoint rows. Converged when the off-diagonal Frobenius norm is
// <= tolerance; throws SpectralError after max_sweeps sweeps.
SymmetricEigen jacobi_eigen(std::vector<double> matrix, std::size_t n, bool want_vectors,
                            double tolerance, int max_sweeps);

Spectrum eigendecompose(const Graph& g, const EigenOptions& options = {});

// Throws std::invalid_argument unless p == d - 1.
void require_branching(const Spectrum& s, int p);

// Eigenvalues within 1e-9 of +-2 sqrt(p) are treated as inside the interval.
inline constexpr double kBoundaryTolerance = 1e-9;

Theta theta_of(double lambda, int p);
Spectrum parametrize_thetas(Spectrum s, int p);

struct Classification {
    double lambda = 0.0;            // max |lambda_j| over nontrivial j
    double ramanujan_bound = 0.0;   // 2 sqrt(p)
    bool is_ramanujan = false;
    bool bipartite = false;
    bool bipartite_excluded = false;  // -d left out of lambda
    bool expander = false;            // lambda < d
    std::size_t exceptional = 0;      // nontrivial eigenvalues outside the interval
};

Classification classify(const Spectrum& s, int p, double tol = 1e-9);

struct DensityCurve {
    std::vector<double> alphas;
    std::vector<std::size_t> counts;       // M(alpha)
    std::vector<double> exponents;         // log_n M(alpha); NaN when M = 0
};

// M(alpha) = #{nontrivial j : phi_j >= alpha} + #{nontrivial j : psi_j >= alpha}.
DensityCurve density_curve(const Spectrum& s, int p, std::span<const double> alphas);

// phi'_j of every nontrivial exceptional eigenvalue (phi_j above, psi_j below).
std::vector<double> exceptional_parameters(const Spectrum& s, int p);

// sum over nontrivial exceptional j of p^{-(1/2 - phi'_j) 2t}.
double i_n_sum(const Spectrum& s, int p, int t);

}  // namespace nbrw
