#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "nbrw/graph.hpp"
#include "nbrw/spectral.hpp"

namespace nbrw {

// T, U: Chebyshev polynomials of the first and second kind.
// P: P_l(x) = p^{l/2} U_l(x / (2 sqrt p)), the generating polynomial of
//    non-backtracking walk counts summed over l, l-2, ...
// Q: Q_t(x) = p^{t/2} ((p-1)/p U_t(y) + (2/p) T_t(y)), y = x / (2 sqrt p);
//    Q_t(A) = K_t for t >= 1.
// R: R_t(y) = (p-1)/p U_t(y) + (2/p) T_t(y), so Q_t(x) = p^{t/2} R_t(y).
enum class ChebKind { T, U, P, Q, R };

// Evaluated by three-term recurrences, which stay finite and accurate for
// |x| >= 1 (lambda_0 and exceptional eigenvalues) and at the endpoints where
// sin(theta) vanishes.
double cheb_t(int degree, double x);
double cheb_u(int degree, double x);
double cheb_p(int degree, int p, double x);
double cheb_q(int degree, int p, double x);
double cheb_r(int degree, int p, double y);
double cheb_scalar(ChebKind kind, int degree, int p, double x);

class WalkOverflow : public std::overflow_error {
public:
    WalkOverflow(int requested, int max_safe, int p);
    int max_safe() const { return max_safe_; }

private:
    int max_safe_;
};

// N(t) = (p+1) p^{t-1} for t >= 1, N(0) = 1. Throws WalkOverflow past 2^63.
std::int64_t walk_total(int p, int t);

// Largest t for which walk_row runs in checked 64-bit arithmetic.
int max_safe_walk_length(int p);

// K_t(x, .): exact counts of non-backtracking walks of length t from source.
struct WalkRow {
    Vertex source = 0;
    int t = 0;
    std::vector<std::int64_t> counts;
    std::int64_t total = 0;
};

// Vector recurrence K_0 = e_x, K_1 = A e_x, K_2 = A K_1 - (p+1) K_0,
// K_{s+1} = A K_s - p K_{s-1}.
WalkRow walk_row(const Graph& g, Vertex x, int t);
// Rows for every length 0..t_max, sharing one recurrence run.
std::vector<WalkRow> walk_rows(const Graph& g, Vertex x, int t_max);

// Depth-first enumeration of every non-backtracking path; the oracle for
// walk_row. Throws std::length_error when N(t) exceeds the path budget.
WalkRow walk_row_bruteforce(const Graph& g, Vertex x, int t, std::int64_t budget = 10'000'000);

// P_l(A) e_x by P_0 = I, P_1 = A, P_{l+1} = A P_l - p P_{l-1}.
std::vector<std::int64_t> p_poly_row(const Graph& g, Vertex x, int ell);

// y -> sum_j Q_t(lambda_j) f_j(x) f_j(y). Needs eigenvectors and t >= 1.
std::vector<double> apply_q_spectrally(const Spectrum& s, int p, int t, Vertex x);

}  // namespace nbrw
