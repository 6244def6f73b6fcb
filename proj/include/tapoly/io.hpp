#pragma once

#include <iosfwd>
#include <string>

#include "tapoly/asymptotics.hpp"
#include "tapoly/tap.hpp"

#include <nlohmann/json_fwd.hpp>

namespace tapoly {

using Json = nlohmann::ordered_json;

// Presentation text format:
//   # comment
//   gens: x1 x2 mu
//   meridian: mu          (optional)
//   rel: mu x1 mu^-1 x2 x1^-1
// Parse errors carry the offending line/column position.
Presentation parse_presentation(const std::string& text);
Presentation load_presentation(const std::string& path);
std::string render_presentation(const Presentation& p);

// Representation JSON document:
//   {"order": q, "dim": n, "images": {"g": [[entry, ...], ...], ...}}
// with each entry a list of monomials {"pow": k, "num": a, "den": b}
// meaning sum (a/b) * zeta_q^k. num/den may be strings for big values.
Representation parse_representation(const std::string& text);
Representation load_representation(const std::string& path);
// Emits generator images in the order of `p`; byte-stable output.
std::string render_representation(const Representation& rho, const Presentation& p);

// Laurent polynomial as {"low": k, "coeffs": [[monomial, ...], ...]}.
Json laurent_to_json(const Laurent& p);
Json rational_function_to_json(const RationalFunction& f);
Json tap_result_to_json(const TapResult& result);

// Fixed 12-significant-digit decimal, used for every numeric output.
std::string format_numeric(double v);

// CSV rows "N,finite,limit,gap" (with header) for the convergence table.
std::string convergence_csv(const std::vector<ConvergenceRow>& rows);

}  // namespace tapoly
