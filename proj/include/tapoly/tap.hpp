#pragma once

#include "tapoly/group_ring.hpp"
#include "tapoly/poly_matrix.hpp"
#include "tapoly/rational_function.hpp"
#include "tapoly/representation.hpp"

namespace tapoly {

// Result of a twisted Alexander polynomial computation: the normalized value
// together with the raw determinants it came from and the removed column.
struct TapResult {
    RationalFunction value;
    Laurent numerator_raw;
    Laurent denominator_raw;  // det Phi(g_col - 1), never zero
    size_t column_index = 0;
    std::string column;
    unsigned dim = 0;
};

enum class Strategy { direct, blocks };

// The Z-linear extension of alpha (x) rho: sum a_i gamma_i maps to
// sum a_i t^{alpha(gamma_i)} rho(gamma_i).
PolyMatrix phi_map(const GroupRingElement& e, const Representation& rho,
                   const Abelianization& alpha);

// Wada's invariant from a deficiency-1 presentation: determinant of the Fox
// Jacobian with the chosen generator column removed, divided by
// det Phi(g_col - 1). When no column is given, the marked meridian is
// preferred if its denominator is nonzero, otherwise the smallest valid
// generator index.
TapResult twisted_alexander(const Presentation& p, const Representation& rho,
                            const Abelianization& alpha,
                            std::optional<size_t> column = std::nullopt);

// n-dimensional TAP for a 2-dimensional representation. `direct` goes through
// sym_power; `blocks` multiplies the N = n/2 block values of the metabelian
// decomposition (requires even n and metabelian normal form). The two
// strategies agree exactly.
TapResult tap_higher(const Presentation& p, const Representation& rho2,
                     const Abelianization& alpha, unsigned n, Strategy strategy,
                     bool parallel = true);

// Laurent-ness witness: gamma must have abelianization degree 0; true iff
// rho(gamma) does not have eigenvalue 1 (det(rho(gamma) - 1) != 0).
bool wada_criterion(const Presentation& p, const Representation& rho,
                    const Abelianization& alpha, const Word& gamma);

// TAP evaluated at t = 1 (numerator and denominator substituted before the
// division), reported up to sign together with its numeric modulus.
struct TorsionValue {
    Cyclotomic exact;
    double modulus = 0.0;
    bool up_to_sign = true;
};
TorsionValue reidemeister_torsion(const Presentation& p, const Representation& rho,
                                  const Abelianization& alpha,
                                  std::optional<size_t> column = std::nullopt);

}  // namespace tapoly
