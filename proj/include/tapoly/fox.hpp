#pragma once

#include "tapoly/group_ring.hpp"

namespace tapoly {

// Fox free differential calculus on Z[F]: d(g)/dg = 1, d(g^-1)/dg = -g^-1,
// d(h)/dg = 0 for h != g, and d(uv)/dg = du/dg + u * dv/dg. Derivatives are
// taken in the free group ring; relations are never applied.
GroupRingElement fox_derivative(const Word& w, const std::string& gen);

}  // namespace tapoly
