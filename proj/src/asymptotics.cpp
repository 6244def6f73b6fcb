#include "tapoly/asymptotics.hpp"

#include <cmath>

#include "tapoly/errors.hpp"
#include "tapoly/parallel.hpp"

namespace tapoly {

std::vector<RationalFunction> block_values(const Presentation& p, const MetabelianData& data,
                                           const Abelianization& alpha, unsigned count,
                                           bool parallel) {
    std::vector<Representation> psi = block_decomposition(data, p, count);
    std::vector<RationalFunction> values(count);
    parallel_for(count, [&](size_t j) { values[j] = twisted_alexander(p, psi[j], alpha).value; },
                 parallel);
    return values;
}

LimitExpression tap_limit(const Presentation& p, const MetabelianData& data,
                          const Abelianization& alpha, bool parallel) {
    LimitExpression out;
    out.period = period(data);
    RationalFunction acc = RationalFunction::one();
    for (const auto& v : block_values(p, data, alpha, out.period, parallel)) acc = acc * v;
    out.product = std::move(acc);
    return out;
}

double torsion_limit(const Presentation& p, const MetabelianData& data,
                     const Abelianization& alpha, bool parallel) {
    const unsigned per = period(data);
    std::vector<Representation> psi = block_decomposition(data, p, per);
    std::vector<double> logs(per);
    parallel_for(per, [&](size_t j) {
        TapResult tap = twisted_alexander(p, psi[j], alpha);
        Cyclotomic den1 = tap.denominator_raw.eval_one();
        if (den1.is_zero())
            throw HypothesisFailure("block " + std::to_string(j + 1) +
                                    " has denominator zero at t = 1");
        Cyclotomic num1 = tap.numerator_raw.eval_one();
        if (num1.is_zero())
            throw HypothesisFailure("block " + std::to_string(j + 1) +
                                    " vanishes at t = 1: torsion limit hypothesis fails");
        logs[j] = std::log(std::abs((num1 * den1.inverse()).to_complex()));
    }, parallel);
    double sum = 0.0;
    for (double v : logs) sum += v;
    return sum / (2.0 * static_cast<double>(per));
}

std::vector<ConvergenceRow> convergence_table(const Presentation& p, const MetabelianData& data,
                                              const Abelianization& alpha, unsigned n_max,
                                              double t0, bool parallel) {
    if (n_max < 1) throw Error("convergence_table requires n_max >= 1");
    const unsigned per = period(data);
    std::vector<RationalFunction> values = block_values(p, data, alpha, per, parallel);
    std::vector<double> logs(per);
    for (unsigned j = 0; j < per; ++j) {
        std::complex<double> v = values[j].eval(std::complex<double>(t0, 0.0));
        if (std::abs(v) < 1e-300)
            throw HypothesisFailure("block value vanishes at t0: log diverges");
        logs[j] = std::log(std::abs(v));
    }
    std::vector<double> prefix(per + 1, 0.0);  // prefix[r] = sum of first r logs
    for (unsigned j = 0; j < per; ++j) prefix[j + 1] = prefix[j] + logs[j];

    const double limit = prefix[per] / (2.0 * per);
    std::vector<ConvergenceRow> rows;
    rows.reserve(n_max);
    for (unsigned n = 1; n <= n_max; ++n) {
        // S_N/2N rearranged through the periodicity psi_{j+p} = psi_j:
        // finite = limit + (p*S_r - r*S_p) / (2Np), so period | N gives an
        // exactly zero gap.
        const unsigned r = n % per;
        const double corr = (per * prefix[r] - r * prefix[per]) /
                            (2.0 * static_cast<double>(n) * per);
        ConvergenceRow row;
        row.n_half = n;
        row.limit_value = limit;
        row.finite_value = limit + corr;
        row.gap = std::abs(row.finite_value - row.limit_value);
        rows.push_back(row);
    }
    return rows;
}

}  // namespace tapoly
