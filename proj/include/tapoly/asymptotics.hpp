#pragma once

#include "tapoly/tap.hpp"

namespace tapoly {

// The limit of log(TAP of rho_2N)/2N as N grows: the pair (period p,
// product of the p block values), read as t -> (1/2p) log(product(t)).
struct LimitExpression {
    unsigned period = 1;
    RationalFunction product;
};

struct ConvergenceRow {
    unsigned n_half = 0;  // the N of rho_2N
    double finite_value = 0.0;
    double limit_value = 0.0;
    double gap = 0.0;
};

// The p = period(data) block TAP values, in ascending block index.
std::vector<RationalFunction> block_values(const Presentation& p, const MetabelianData& data,
                                           const Abelianization& alpha, unsigned count,
                                           bool parallel = true);

LimitExpression tap_limit(const Presentation& p, const MetabelianData& data,
                          const Abelianization& alpha, bool parallel = true);

// (1/2p) sum_j log |block_j(1)|, blocks evaluated exactly at t = 1 before the
// single numeric log. Throws HypothesisFailure when a block vanishes at 1.
double torsion_limit(const Presentation& p, const MetabelianData& data,
                     const Abelianization& alpha, bool parallel = true);

// Rows N = 1..n_max of log|TAP(rho_2N)(t0)|/2N against the limit. Uses the
// block periodicity, so the gap is exactly zero whenever period | N.
std::vector<ConvergenceRow> convergence_table(const Presentation& p, const MetabelianData& data,
                                              const Abelianization& alpha, unsigned n_max,
                                              double t0, bool parallel = true);

}  // namespace tapoly
