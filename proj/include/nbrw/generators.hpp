#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "nbrw/graph.hpp"

namespace nbrw {

// Small named graphs used as test fixtures. All of them are vertex-transitive
// and are returned with the homogeneous flag set.
enum class Fixture { k4, k5, petersen, heawood, cube3 };

Fixture fixture_from_name(std::string_view name);  // throws std::invalid_argument
std::string_view fixture_name(Fixture f);
std::vector<std::string_view> fixture_names();
Graph gen_fixture(Fixture f);
Graph gen_fixture(std::string_view name);

struct RandomRegularParams {
    std::size_t n = 0;
    int d = 3;
    std::uint64_t seed = 0;
    int max_retries = 10000;
};

// Configuration model with full rejection: a uniformly shuffled pairing of the
// n*d half-edges is kept only if it has no loops and no multi-edges.
// Deterministic for a given seed. Throws std::invalid_argument on bad
// parameters and std::runtime_error when the retry budget runs out.
Graph gen_random_regular(const RandomRegularParams& params);

struct LpsParams {
    int p = 5;
    int q = 13;
};

bool is_prime(std::int64_t v);
// (a | q) for an odd prime q, via Euler's criterion. Returns 0 when q divides a.
int legendre_symbol(std::int64_t a, std::int64_t q);

// Integer quaternions a + bi + cj + dk with a^2 + b^2 + c^2 + d^2 = p, a > 0 odd
// and b, c, d even. For a prime p = 1 mod 4 there are exactly p + 1 of them.
std::vector<std::array<int, 4>> lps_quaternions(int p);

// Throws std::invalid_argument unless p is a prime = 1 mod 4, q is an odd
// prime other than p, and q > 2 sqrt(p). Both residues of q mod 4 are
// supported: q = 1 mod 4 embeds the quaternions with a square root of -1,
// q = 3 mod 4 with a solution of x^2 + y^2 = -1.
void validate_lps(const LpsParams& params);

// Expected vertex count: q(q^2 - 1)/2 when (p|q) = 1, else q(q^2 - 1).
std::size_t lps_order(const LpsParams& params);

// (p+1)-regular Cayley graph of PSL2(F_q) when (p|q) = 1 (non-bipartite) or
// PGL2(F_q) when (p|q) = -1 (bipartite). Vertices are ordered by their
// canonical matrix representative; labels hold that representative as
// "[[a,b],[c,d]]".
Graph gen_lps(const LpsParams& params);

}  // namespace nbrw
