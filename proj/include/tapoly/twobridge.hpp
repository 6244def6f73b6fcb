#pragma once

#include "tapoly/asymptotics.hpp"

namespace tapoly {

enum class KnotSign { plus, minus };  // J(2m, +2n) vs J(2m, -2n)

// Parameters of the genus-one two-bridge knot J(2m, +-2n); Q = |Delta(-1)|.
struct TwoBridgeParams {
    unsigned m = 1;
    unsigned n = 1;
    KnotSign sign = KnotSign::plus;

    unsigned modulus() const {  // Q = 4mn -+ 1, always odd >= 3
        return sign == KnotSign::plus ? 4 * m * n - 1 : 4 * m * n + 1;
    }
};

// Index of one irreducible metabelian representation class, 1 <= i <= (Q-1)/2;
// q_i = Q / gcd(Q, i) is the block period of that class.
struct MetabelianIndex {
    unsigned i = 1;
    unsigned q = 1;
};
MetabelianIndex metabelian_index(const TwoBridgeParams& params, unsigned i);

// mn t^2 + (1 - 2mn) t + mn for J(2m,2n) and mn t^2 - (1 + 2mn) t + mn for
// J(2m,-2n); normalized so that Delta(1) = +-1 and |Delta(-1)| = Q.
Laurent alexander_polynomial(const TwoBridgeParams& params);

// <x1, x2, mu | mu x1^m mu^-1 x2 x1^-m, mu x2^-+n x1 mu^-1 x2^+-n> with mu
// marked as the meridian.
Presentation lin_presentation(const TwoBridgeParams& params);

// The (Q-1)/2 irreducible metabelian classes: z1 = zeta_Q^i, z2 = zeta_Q^{2mi}.
std::vector<MetabelianData> enumerate_metabelian(const TwoBridgeParams& params);
MetabelianData metabelian_data(const TwoBridgeParams& params, unsigned i);

// Per-block closed form for J(2m,2n), block index 1 <= j <= q_i:
//   xi^{i(2j-1)} != 1: (xi^{i(2j-1)})^{1+m-2mn} (d_{m-1} d_{n-1})^2 (t^2+1)
//   xi^{i(2j-1)} == 1: (m^2n^2 t^4 + (2m^2n^2-4mn+1) t^2 + m^2n^2)/(t^2+1).
// Only the + family has a closed block form.
RationalFunction closed_form_block(const TwoBridgeParams& params, unsigned i, unsigned j);

// Limit expression (q_i, P(t) (t^2+1)^{q_i-2}) with
// P(t) = m^2n^2 t^4 + (2m^2n^2 -+ 4mn + 1) t^2 + m^2n^2.
LimitExpression closed_form_limit(const TwoBridgeParams& params, unsigned i);
Laurent limit_product_polynomial(const TwoBridgeParams& params);  // P(t)

// (1/q_i) log((2mn -+ 1)/2) + (1/2) log 2.
double closed_form_torsion_limit(const TwoBridgeParams& params, unsigned i);

// prod_{1<=j<=q, j != (q+1)/2} delta_{k-1}(lambda^{2j-1}) for odd q and
// gcd(k, q) = 1; equals 1. lambda defaults to zeta_q and must be a primitive
// q-th root of unity.
Cyclotomic lemma_delta_product(unsigned q, unsigned k,
                               std::optional<Cyclotomic> lambda = std::nullopt);

// One named check of the oracle-equivalence suite.
struct VerifyCheck {
    std::string name;
    bool pass = false;
    std::string detail;
};

// Cross-validates the closed forms against the generic Fox-calculus pipeline
// for the given parameters (every class when index is nullopt).
std::vector<VerifyCheck> verify_two_bridge(const TwoBridgeParams& params,
                                           std::optional<unsigned> index = std::nullopt,
                                           bool parallel = true);

}  // namespace tapoly
