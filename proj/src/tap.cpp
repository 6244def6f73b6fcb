#include "tapoly/tap.hpp"

#include "tapoly/errors.hpp"
#include "tapoly/fox.hpp"
#include "tapoly/parallel.hpp"

namespace tapoly {

PolyMatrix phi_map(const GroupRingElement& e, const Representation& rho,
                   const Abelianization& alpha) {
    PolyMatrix out(rho.dim, rho.dim);
    for (const auto& [w, c] : e.terms()) {
        const long deg = alpha.degree_of_word(w);
        const CycMatrix m = rho.word_image(w);
        const Cyclotomic coeff = Cyclotomic::rational(Rational(c), 1);
        for (size_t i = 0; i < rho.dim; ++i)
            for (size_t j = 0; j < rho.dim; ++j) {
                if (m.at(i, j).is_zero()) continue;
                out.at(i, j) = out.at(i, j) + Laurent::monomial(coeff * m.at(i, j), deg);
            }
    }
    return out;
}

namespace {

// det Phi(g - 1) for a single generator.
Laurent column_denominator(const Presentation& p, const Representation& rho,
                           const Abelianization& alpha, size_t col) {
    GroupRingElement gm1 = GroupRingElement::of_word(Word::generator(p.generators()[col])) -
                           GroupRingElement::one();
    return phi_map(gm1, rho, alpha).determinant();
}

}  // namespace

TapResult twisted_alexander(const Presentation& p, const Representation& rho,
                            const Abelianization& alpha, std::optional<size_t> column) {
    if (p.deficiency() != 1)
        throw TapUndefined("twisted Alexander polynomial requires deficiency 1, got " +
                           std::to_string(p.deficiency()));
    {
        auto failed = validate(rho, p);
        if (!failed.empty())
            throw InvalidRepresentation("representation does not kill relator " + failed.front());
    }
    const size_t k = p.generators().size();

    size_t col = 0;
    Laurent den;
    if (column) {
        if (*column >= k) throw TapUndefined("column index out of range");
        col = *column;
        den = column_denominator(p, rho, alpha, col);
        if (den.is_zero())
            throw TapUndefined("det Phi(" + p.generators()[col] +
                               " - 1) = 0: column is not admissible");
    } else {
        bool found = false;
        if (p.meridian()) {
            size_t mi = p.generator_index(*p.meridian());
            Laurent d = column_denominator(p, rho, alpha, mi);
            if (!d.is_zero()) {
                col = mi;
                den = std::move(d);
                found = true;
            }
        }
        for (size_t j = 0; !found && j < k; ++j) {
            Laurent d = column_denominator(p, rho, alpha, j);
            if (!d.is_zero()) {
                col = j;
                den = std::move(d);
                found = true;
            }
        }
        if (!found)
            throw TapUndefined("no admissible column: det Phi(g - 1) vanishes for every generator");
    }

    // Fox Jacobian with column `col` removed; rows follow relator order,
    // columns generator order.
    const unsigned n = rho.dim;
    const size_t rows = p.relators().size();
    PolyMatrix jac(rows * n, rows * n);
    size_t jc = 0;
    for (size_t j = 0; j < k; ++j) {
        if (j == col) continue;
        for (size_t i = 0; i < rows; ++i) {
            PolyMatrix blk =
                phi_map(fox_derivative(p.relators()[i], p.generators()[j]), rho, alpha);
            for (size_t bi = 0; bi < n; ++bi)
                for (size_t bj = 0; bj < n; ++bj)
                    jac.at(i * n + bi, jc * n + bj) = blk.at(bi, bj);
        }
        ++jc;
    }

    TapResult out;
    out.numerator_raw = jac.determinant();
    out.denominator_raw = std::move(den);
    out.value = ratfn_normalize(out.numerator_raw, out.denominator_raw);
    out.column_index = col;
    out.column = p.generators()[col];
    out.dim = n;
    return out;
}

TapResult tap_higher(const Presentation& p, const Representation& rho2,
                     const Abelianization& alpha, unsigned n, Strategy strategy,
                     bool parallel) {
    if (rho2.dim != 2) throw Error("tap_higher requires a 2-dimensional representation");
    if (n < 2) throw Error("tap_higher requires n >= 2");
    if (strategy == Strategy::direct)
        return twisted_alexander(p, sym_power(rho2, n), alpha);

    if (n % 2 != 0)
        throw TapUndefined("blocks strategy requires an even dimension, got " +
                           std::to_string(n));
    auto data = extract_metabelian(rho2, p);
    if (!data)
        throw TapUndefined("blocks strategy requires the metabelian normal form "
                           "(diagonal x_i images, mu -> [[0,1],[-1,0]])");
    const unsigned count = n / 2;
    std::vector<Representation> psi = block_decomposition(*data, p, count);
    std::vector<TapResult> parts(count);
    parallel_for(count, [&](size_t j) { parts[j] = twisted_alexander(p, psi[j], alpha); },
                 parallel);

    TapResult out;
    out.numerator_raw = Laurent::one();
    out.denominator_raw = Laurent::one();
    RationalFunction value = RationalFunction::one();
    for (const auto& part : parts) {
        out.numerator_raw = out.numerator_raw * part.numerator_raw;
        out.denominator_raw = out.denominator_raw * part.denominator_raw;
        value = value * part.value;
    }
    out.value = std::move(value);
    out.column_index = parts.front().column_index;
    out.column = parts.front().column;
    out.dim = n;
    return out;
}

bool wada_criterion(const Presentation& p, const Representation& rho,
                    const Abelianization& alpha, const Word& gamma) {
    if (alpha.degree_of_word(gamma) != 0)
        throw Error("wada_criterion witness must have abelianization degree 0, got " +
                    std::to_string(alpha.degree_of_word(gamma)));
    CycMatrix m = rho.word_image(gamma) - CycMatrix::identity(rho.dim, rho.order);
    return !m.determinant().is_zero();
}

TorsionValue reidemeister_torsion(const Presentation& p, const Representation& rho,
                                  const Abelianization& alpha,
                                  std::optional<size_t> column) {
    TapResult tap = twisted_alexander(p, rho, alpha, column);
    Cyclotomic den1 = tap.denominator_raw.eval_one();
    if (den1.is_zero())
        throw HypothesisFailure("torsion undefined: det(rho(" + tap.column +
                                ") - 1) = 0 at t = 1");
    Cyclotomic num1 = tap.numerator_raw.eval_one();
    if (num1.is_zero())
        throw HypothesisFailure("torsion undefined: Fox Jacobian determinant vanishes at t = 1 "
                                "(twisted complex is not acyclic)");
    TorsionValue out;
    out.exact = num1 * den1.inverse();
    out.modulus = std::abs(out.exact.to_complex());
    out.up_to_sign = true;
    return out;
}

}  // namespace tapoly
