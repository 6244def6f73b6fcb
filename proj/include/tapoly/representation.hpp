#pragma once

#include <map>
#include <optional>
#include <vector>

#include "tapoly/cyc_matrix.hpp"
#include "tapoly/presentation.hpp"

namespace tapoly {

// Map from presentation generators to invertible matrices over a cyclotomic
// field. sl_flag records that every image has determinant 1 (verified on the
// constructors that claim it).
struct Representation {
    unsigned dim = 0;
    unsigned order = 1;
    bool sl_flag = false;
    std::map<std::string, CycMatrix> images;

    const CycMatrix& image(const std::string& gen) const;
    CycMatrix word_image(const Word& w) const;
};

// Diagonal data of a metabelian normal form: one root of unity z_i per
// non-meridian Lin generator x_i, plus the meridian name. Every z_i must be
// a root of unity of odd order.
struct MetabelianData {
    std::vector<Cyclotomic> zs;
    std::string meridian;
};

// Renders of the relators whose images are not the identity; empty = valid.
// Throws InvalidRepresentation if a generator image is missing.
std::vector<std::string> validate(const Representation& rho, const Presentation& p);

// The normal form x_i -> diag(z_i, z_i^-1), mu -> [[0,1],[-1,0]] on a
// Lin-form presentation (deg x_i = 0, deg mu = 1); validates the relators.
Representation metabelian_rep(const Presentation& p, const MetabelianData& data);

// sigma_n composed with a 2-dimensional representation: the action on
// homogeneous polynomials of degree n-1 in the basis {x^{n-1}, ..., y^{n-1}}
// via A.p(x,y) = p(A^{-1}(x,y)).
Representation sym_power(const Representation& rho, unsigned n);

// Matrix of sigma_n(A) alone (exposed for eigenvalue/characteristic tests).
CycMatrix sym_power_matrix(const CycMatrix& a, unsigned n);

// Block-diagonal direct sum; generator sets must coincide.
Representation direct_sum(const std::vector<Representation>& rhos);

// The blocks psi_1..psi_N with psi_j(x_i) = diag(z_i^{1-2j}, z_i^{2j-1}) and
// psi_j(mu) = [[0,1],[-1,0]]; each is validated. psi_1 is metabelian_rep(data).
std::vector<Representation> block_decomposition(const MetabelianData& data,
                                                const Presentation& p, unsigned count);

// lcm of the multiplicative orders of the z_i; always odd.
unsigned period(const MetabelianData& data);

// Checks that the restriction of sym_power(rho, 2N) to the coordinate pair
// (N-j, N+j-1) equals psi_j on every x_i and (-1)^{N-j} psi_j(mu) on mu,
// and that those coordinate pairs are genuinely invariant.
bool conjugacy_check_blocks(const MetabelianData& data, const Presentation& p, unsigned n_blocks);

// Recognizes a dim-2 representation in metabelian normal form and recovers
// its data; nullopt when the images do not have the required shape.
std::optional<MetabelianData> extract_metabelian(const Representation& rho,
                                                 const Presentation& p);

}  // namespace tapoly
