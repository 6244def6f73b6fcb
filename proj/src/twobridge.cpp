#include "tapoly/twobridge.hpp"

#include <cmath>
#include <numeric>
#include <sstream>

#include "tapoly/errors.hpp"
#include "tapoly/parallel.hpp"

namespace tapoly {

MetabelianIndex metabelian_index(const TwoBridgeParams& params, unsigned i) {
    const unsigned q_mod = params.modulus();
    if (i < 1 || i > (q_mod - 1) / 2)
        throw Error("metabelian index must satisfy 1 <= i <= " + std::to_string((q_mod - 1) / 2) +
                    ", got " + std::to_string(i));
    MetabelianIndex out;
    out.i = i;
    out.q = q_mod / std::gcd(q_mod, i);
    return out;
}

Laurent alexander_polynomial(const TwoBridgeParams& params) {
    const long mn = static_cast<long>(params.m) * static_cast<long>(params.n);
    const long middle =
        params.sign == KnotSign::plus ? 1 - 2 * mn : -(1 + 2 * mn);
    return Laurent::from_rationals(0, {Rational(mn), Rational(middle), Rational(mn)});
}

Presentation lin_presentation(const TwoBridgeParams& params) {
    const long m = static_cast<long>(params.m);
    const long n = static_cast<long>(params.n);
    const long n_signed = params.sign == KnotSign::plus ? -n : n;
    Word mu = Word::generator("mu");
    Word r1 = mu * Word::generator("x1", m) * mu.inverse() * Word::generator("x2") *
              Word::generator("x1", -m);
    Word r2 = mu * Word::generator("x2", n_signed) * Word::generator("x1") * mu.inverse() *
              Word::generator("x2", -n_signed);
    return Presentation({"x1", "x2", "mu"}, {r1, r2}, "mu");
}

MetabelianData metabelian_data(const TwoBridgeParams& params, unsigned i) {
    metabelian_index(params, i);  // range check
    const unsigned q_mod = params.modulus();
    MetabelianData data;
    data.meridian = "mu";
    data.zs.push_back(Cyclotomic::zeta(q_mod, static_cast<long>(i)));
    data.zs.push_back(Cyclotomic::zeta(q_mod, 2 * static_cast<long>(params.m) *
                                                  static_cast<long>(i)));
    return data;
}

std::vector<MetabelianData> enumerate_metabelian(const TwoBridgeParams& params) {
    const unsigned q_mod = params.modulus();
    std::vector<MetabelianData> out;
    out.reserve((q_mod - 1) / 2);
    for (unsigned i = 1; i <= (q_mod - 1) / 2; ++i) out.push_back(metabelian_data(params, i));
    return out;
}

namespace {

// Numerator P(t) of case (b): m^2n^2 t^4 + (2m^2n^2 -+ 4mn + 1) t^2 + m^2n^2.
Laurent case_b_numerator(const TwoBridgeParams& params) {
    const long mn = static_cast<long>(params.m) * static_cast<long>(params.n);
    const long mid = params.sign == KnotSign::plus ? 2 * mn * mn - 4 * mn + 1
                                                   : 2 * mn * mn + 4 * mn + 1;
    return Laurent::from_rationals(
        0, {Rational(mn * mn), Rational(0), Rational(mid), Rational(0), Rational(mn * mn)});
}

Laurent t_squared_plus_one() {
    return Laurent::from_rationals(0, {Rational(1), Rational(0), Rational(1)});
}

}  // namespace

Laurent limit_product_polynomial(const TwoBridgeParams& params) {
    return case_b_numerator(params);
}

RationalFunction closed_form_block(const TwoBridgeParams& params, unsigned i, unsigned j) {
    if (params.sign != KnotSign::plus)
        throw Error("per-block closed form exists only for the J(2m,2n) family");
    MetabelianIndex idx = metabelian_index(params, i);
    if (j < 1 || j > idx.q)
        throw Error("block index must satisfy 1 <= j <= q_i = " + std::to_string(idx.q));
    const unsigned q_mod = params.modulus();
    const long m = params.m, n = params.n;
    const long e = static_cast<long>(i) * (2 * static_cast<long>(j) - 1);
    const Cyclotomic xi_pow = Cyclotomic::zeta(q_mod, e);
    if (xi_pow.is_one())
        return RationalFunction(case_b_numerator(params), t_squared_plus_one());
    const Cyclotomic unit = xi_pow.pow(1 + m - 2 * m * n);
    const Cyclotomic deltas = delta_sum(static_cast<unsigned>(m - 1), xi_pow) *
                              delta_sum(static_cast<unsigned>(n - 1), xi_pow.pow(2 * m));
    return RationalFunction::from_laurent(
        t_squared_plus_one().scaled(unit * deltas * deltas));
}

LimitExpression closed_form_limit(const TwoBridgeParams& params, unsigned i) {
    MetabelianIndex idx = metabelian_index(params, i);
    LimitExpression out;
    out.period = idx.q;
    out.product = RationalFunction::from_laurent(
        case_b_numerator(params) * t_squared_plus_one().pow(idx.q - 2));
    return out;
}

double closed_form_torsion_limit(const TwoBridgeParams& params, unsigned i) {
    MetabelianIndex idx = metabelian_index(params, i);
    const double mn = static_cast<double>(params.m) * static_cast<double>(params.n);
    const double top = params.sign == KnotSign::plus ? 2.0 * mn - 1.0 : 2.0 * mn + 1.0;
    return std::log(top / 2.0) / static_cast<double>(idx.q) + 0.5 * std::log(2.0);
}

Cyclotomic lemma_delta_product(unsigned q, unsigned k, std::optional<Cyclotomic> lambda) {
    if (q < 3 || q % 2 == 0) throw Error("lemma_delta_product requires an odd q >= 3");
    if (k == 0 || std::gcd(q, k) != 1)
        throw Error("lemma_delta_product requires gcd(k, q) = 1");
    Cyclotomic root = lambda ? *lambda : Cyclotomic::zeta(q);
    if (root.multiplicative_order() != q)
        throw Error("lambda must be a primitive root of unity of order " + std::to_string(q));
    Cyclotomic acc = Cyclotomic::one(root.order());
    for (unsigned j = 1; j <= q; ++j) {
        if (j == (q + 1) / 2) continue;
        acc = acc * delta_sum(k - 1, root.pow(2 * static_cast<long>(j) - 1));
    }
    return acc;
}

namespace {

std::string fraction_str(const RationalFunction& f) { return f.str(); }

VerifyCheck make_check(const std::string& name, bool pass, const std::string& detail = "") {
    return VerifyCheck{name, pass, detail};
}

}  // namespace

std::vector<VerifyCheck> verify_two_bridge(const TwoBridgeParams& params,
                                           std::optional<unsigned> index, bool parallel) {
    std::vector<VerifyCheck> checks;
    const unsigned q_mod = params.modulus();
    const unsigned class_count = (q_mod - 1) / 2;

    Presentation pres = lin_presentation(params);
    Abelianization alpha = abelianize(pres);
    checks.push_back(make_check(
        "abelianization degrees (x1, x2, mu) = (0, 0, 1)",
        alpha.degree("x1") == 0 && alpha.degree("x2") == 0 && alpha.degree("mu") == 1));

    {
        const unsigned expected =
            params.sign == KnotSign::plus ? 2 * params.m * params.n - 1 : 2 * params.m * params.n;
        auto all = enumerate_metabelian(params);
        bool ok = all.size() == expected && all.size() == class_count;
        for (const auto& d : all)
            ok = ok && validate(metabelian_rep(pres, d), pres).empty();
        checks.push_back(make_check("metabelian count = (|Delta(-1)|-1)/2 = " +
                                        std::to_string(expected) + ", all classes validate",
                                    ok));
    }

    {
        Laurent delta = alexander_polynomial(params);
        Cyclotomic at1 = delta.eval_one();
        Cyclotomic atm1 = delta.eval_exact(-Cyclotomic::one());
        bool ok = at1.is_rational() && (at1.rational_value() == 1 || at1.rational_value() == -1);
        Rational v = atm1.rational_value();
        if (v < 0) v = -v;
        ok = ok && v == Rational(q_mod);
        checks.push_back(make_check("Delta(1) = +-1 and |Delta(-1)| = " + std::to_string(q_mod), ok));
    }

    std::vector<unsigned> indices;
    if (index)
        indices.push_back(*index);
    else
        for (unsigned i = 1; i <= class_count; ++i) indices.push_back(i);

    struct ClassResult {
        std::vector<VerifyCheck> checks;
    };
    std::vector<ClassResult> per_class(indices.size());

    parallel_for(indices.size(), [&](size_t slot) {
        const unsigned i = indices[slot];
        auto& out = per_class[slot].checks;
        MetabelianIndex idx = metabelian_index(params, i);
        MetabelianData data = metabelian_data(params, i);
        const std::string tag = "i = " + std::to_string(i) + " (q_i = " + std::to_string(idx.q) + ")";

        std::vector<RationalFunction> blocks = block_values(pres, data, alpha, idx.q, false);

        if (params.sign == KnotSign::plus) {
            bool ok = true;
            std::string detail;
            for (unsigned j = 1; j <= idx.q; ++j) {
                RationalFunction closed = closed_form_block(params, i, j);
                if (!eq_up_to_unit(blocks[j - 1], closed)) {
                    ok = false;
                    detail = "block j = " + std::to_string(j) + ": pipeline " +
                             fraction_str(blocks[j - 1]) + " vs closed form " +
                             fraction_str(closed);
                    break;
                }
            }
            out.push_back(make_check("per-block closed form, " + tag, ok, detail));
        }

        {
            RationalFunction prod = RationalFunction::one();
            for (const auto& b : blocks) prod = prod * b;
            RationalFunction expected = closed_form_limit(params, i).product;
            bool ok = prod == expected;
            out.push_back(make_check("block product = P(t)(t^2+1)^{q_i-2}, " + tag, ok,
                                     ok ? "" : "pipeline " + fraction_str(prod) + " vs " +
                                                   fraction_str(expected)));
        }

        {
            unsigned ones = 0, where = 0;
            for (unsigned j = 1; j <= idx.q; ++j) {
                if (Cyclotomic::zeta(q_mod, static_cast<long>(i) * (2 * static_cast<long>(j) - 1))
                        .is_one()) {
                    ++ones;
                    where = j;
                }
            }
            out.push_back(make_check("exactly one abelian block, at j = (q_i+1)/2, " + tag,
                                     ones == 1 && where == (idx.q + 1) / 2));
        }

        {
            double pipeline = torsion_limit(pres, data, alpha, false);
            double closed = closed_form_torsion_limit(params, i);
            bool ok = std::abs(pipeline - closed) <= 1e-12;
            std::ostringstream detail;
            detail << "pipeline " << pipeline << " vs closed form " << closed;
            out.push_back(make_check("torsion limit within 1e-12, " + tag, ok, detail.str()));
        }
    }, parallel);

    for (auto& c : per_class)
        for (auto& chk : c.checks) checks.push_back(std::move(chk));
    return checks;
}

}  // namespace tapoly
