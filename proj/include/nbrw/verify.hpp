#pragma once

#include <string>
#include <vector>

#include "nbrw/graph.hpp"
#include "nbrw/mixing.hpp"

namespace nbrw {

// One checked inequality or identity on one graph.
struct VerifyRow {
    std::string fixture;
    std::string check;   // short name of the statement checked, e.g. "nbrw_tv_lower_bound"
    CheckStatus status = CheckStatus::inapplicable;
    std::string detail;  // worst case, slack, or why it is inapplicable
};

struct VerifyOptions {
    int walk_t_max = 8;      // brute-force and spectral walk oracles
    int p_ell_max = 10;      // P-identity
    int variance_t_max = 12; // dual-route variance, W <= p^t (t+1)^2
    double eps = 0.25;       // mixing-time bound
};

// Every property check that applies to g. Rows whose hypotheses g does not
// meet are kept with status inapplicable.
std::vector<VerifyRow> verify_graph(const Graph& g, const std::string& name, const VerifyOptions& options = {});

// Kesten measure normalization and R_t orthogonality for one p.
std::vector<VerifyRow> verify_kesten(int p);

bool any_failed(const std::vector<VerifyRow>& rows);

}  // namespace nbrw
