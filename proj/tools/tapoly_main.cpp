// tapoly: exact twisted Alexander polynomials, Reidemeister torsion values
// and their higher-dimensional limits for knot-group representations.
//
//   tapoly tap <presentation> <representation> [--dim n] [--strategy ...]
//   tapoly twobridge --m M --n N --sign plus|minus --i I --what tap|limit|torsion|verify
//   tapoly converge --m M --n N --sign plus|minus --i I --nmax K --t T0
//
// stdout carries data, stderr diagnostics. Exit codes: 0 ok, 2 parse error,
// 3 invalid representation, 4 TAP undefined, 5 hypothesis failure.

#include <fstream>
#include <iostream>
#include <numeric>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "tapoly/errors.hpp"
#include "tapoly/io.hpp"
#include "tapoly/twobridge.hpp"

namespace {

using tapoly::Json;

struct CommonFormat {
    std::string format = "text";
};

void print_tap_text(const tapoly::TapResult& r, std::ostream& out) {
    out << "dim:         " << r.dim << "\n";
    out << "column:      " << r.column << " (index " << r.column_index << ")\n";
    out << "numerator:   " << r.numerator_raw.str() << "\n";
    out << "denominator: " << r.denominator_raw.str() << "\n";
    out << "value:       " << r.value.str() << "\n";
}

tapoly::TwoBridgeParams params_from(unsigned m, unsigned n, const std::string& sign) {
    tapoly::TwoBridgeParams params;
    params.m = m;
    params.n = n;
    if (sign == "plus")
        params.sign = tapoly::KnotSign::plus;
    else if (sign == "minus")
        params.sign = tapoly::KnotSign::minus;
    else
        throw tapoly::Error("--sign must be plus or minus");
    return params;
}

int run_tap(const std::string& pres_path, const std::string& rep_path, unsigned dim,
            const std::string& strategy_name, const std::string& column,
            const std::string& format) {
    tapoly::Presentation pres = tapoly::load_presentation(pres_path);
    tapoly::Representation rho = tapoly::load_representation(rep_path);
    tapoly::Abelianization alpha = tapoly::abelianize(pres);
    {
        auto failed = tapoly::validate(rho, pres);
        if (!failed.empty())
            throw tapoly::InvalidRepresentation("representation does not kill relator " +
                                                failed.front());
    }

    std::optional<size_t> col;
    if (!column.empty()) col = pres.generator_index(column);

    if (dim == 0) dim = rho.dim;
    tapoly::TapResult result;
    if (dim == rho.dim && strategy_name != "blocks") {
        result = tapoly::twisted_alexander(pres, rho, alpha, col);
    } else {
        if (rho.dim != 2)
            throw tapoly::TapUndefined("--dim differs from the file dimension; this needs a "
                                       "2-dimensional input representation");
        tapoly::Strategy strategy =
            strategy_name == "blocks" ? tapoly::Strategy::blocks : tapoly::Strategy::direct;
        result = tapoly::tap_higher(pres, rho, alpha, dim, strategy);
    }

    if (format == "json")
        std::cout << tapoly::tap_result_to_json(result).dump(2) << "\n";
    else
        print_tap_text(result, std::cout);
    return 0;
}

int run_twobridge(unsigned m, unsigned n, const std::string& sign, unsigned index, unsigned dim,
                  const std::string& what, const std::string& format,
                  const std::string& emit_rep) {
    tapoly::TwoBridgeParams params = params_from(m, n, sign);
    tapoly::Presentation pres = tapoly::lin_presentation(params);
    tapoly::Abelianization alpha = tapoly::abelianize(pres);

    if (!emit_rep.empty()) {
        tapoly::MetabelianData data = tapoly::metabelian_data(params, index);
        tapoly::Representation rho = tapoly::metabelian_rep(pres, data);
        std::ofstream out(emit_rep, std::ios::binary);
        if (!out) throw tapoly::Error("cannot write " + emit_rep);
        out << tapoly::render_representation(rho, pres);
        std::cerr << "wrote representation file " << emit_rep << "\n";
    }

    if (what == "tap") {
        tapoly::MetabelianData data = tapoly::metabelian_data(params, index);
        tapoly::Representation rho = tapoly::metabelian_rep(pres, data);
        tapoly::TapResult result =
            dim <= 2 ? tapoly::twisted_alexander(pres, rho, alpha)
                     : tapoly::tap_higher(pres, rho, alpha, dim,
                                          dim % 2 == 0 ? tapoly::Strategy::blocks
                                                       : tapoly::Strategy::direct);
        if (format == "json")
            std::cout << tapoly::tap_result_to_json(result).dump(2) << "\n";
        else
            print_tap_text(result, std::cout);
        return 0;
    }

    if (what == "limit") {
        tapoly::MetabelianData data = tapoly::metabelian_data(params, index);
        tapoly::LimitExpression pipeline = tapoly::tap_limit(pres, data, alpha);
        tapoly::LimitExpression closed = tapoly::closed_form_limit(params, index);
        bool match = pipeline.period == closed.period && pipeline.product == closed.product;
        if (format == "json") {
            Json out;
            out["format"] = 1;
            out["period"] = pipeline.period;
            out["product"] = tapoly::rational_function_to_json(pipeline.product);
            out["closed_form"] = tapoly::rational_function_to_json(closed.product);
            out["matches_closed_form"] = match;
            std::cout << out.dump(2) << "\n";
        } else {
            std::cout << "period:      " << pipeline.period << "\n";
            std::cout << "product:     " << pipeline.product.str() << "\n";
            std::cout << "closed form: " << closed.product.str() << "\n";
            std::cout << "limit(t) = (1/" << 2 * pipeline.period << ") * log(product(t))\n";
            std::cout << "matches closed form: " << (match ? "yes" : "no") << "\n";
        }
        return match ? 0 : 1;
    }

    if (what == "torsion") {
        tapoly::MetabelianData data = tapoly::metabelian_data(params, index);
        tapoly::MetabelianIndex idx = tapoly::metabelian_index(params, index);
        std::vector<tapoly::RationalFunction> blocks =
            tapoly::block_values(pres, data, alpha, idx.q);
        std::vector<std::string> block_exact;
        std::vector<double> block_moduli;
        for (const auto& b : blocks) {
            tapoly::Cyclotomic v = b.eval_exact(tapoly::Cyclotomic::one());
            block_exact.push_back(v.str());
            block_moduli.push_back(std::abs(v.to_complex()));
        }
        double limit = tapoly::torsion_limit(pres, data, alpha);
        double closed = tapoly::closed_form_torsion_limit(params, index);
        const unsigned q_mod = params.modulus();
        const long top = params.sign == tapoly::KnotSign::plus
                             ? 2l * m * n - 1
                             : 2l * m * n + 1;
        std::string gcd_form = "(" + std::to_string(std::gcd(q_mod, index)) + "/" +
                               std::to_string(q_mod) + ")*log(" + std::to_string(top) +
                               "/2) + (1/2)*log(2)";
        if (format == "json") {
            Json out;
            out["format"] = 1;
            out["q"] = idx.q;
            out["gcd"] = std::gcd(q_mod, index);
            Json blocks_json = Json::array();
            for (size_t j = 0; j < blocks.size(); ++j) {
                Json b;
                b["j"] = j + 1;
                b["value_at_1"] = block_exact[j];
                b["modulus"] = tapoly::format_numeric(block_moduli[j]);
                blocks_json.push_back(std::move(b));
            }
            out["blocks"] = std::move(blocks_json);
            out["limit"] = tapoly::format_numeric(limit);
            out["closed_form"] = tapoly::format_numeric(closed);
            out["gcd_form"] = gcd_form;
            std::cout << out.dump(2) << "\n";
        } else if (format == "csv") {
            std::cout << "j,value_at_1,modulus\n";
            for (size_t j = 0; j < blocks.size(); ++j)
                std::cout << j + 1 << ",\"" << block_exact[j] << "\","
                          << tapoly::format_numeric(block_moduli[j]) << "\n";
            std::cout << "limit,," << tapoly::format_numeric(limit) << "\n";
        } else {
            std::cout << "q_i = " << idx.q << " (gcd(" << q_mod << ", " << index
                      << ") = " << std::gcd(q_mod, index) << ")\n";
            for (size_t j = 0; j < blocks.size(); ++j)
                std::cout << "block j=" << j + 1 << " at t=1: " << block_exact[j]
                          << "  |.| = " << tapoly::format_numeric(block_moduli[j]) << "\n";
            std::cout << "torsion limit: " << tapoly::format_numeric(limit) << "\n";
            std::cout << "closed form:   " << tapoly::format_numeric(closed) << " = " << gcd_form
                      << "\n";
        }
        return 0;
    }

    if (what == "verify") {
        std::optional<unsigned> only;
        if (index != 0) only = index;
        auto checks = tapoly::verify_two_bridge(params, only);
        bool all = true;
        if (format == "json") {
            Json out;
            out["format"] = 1;
            Json arr = Json::array();
            for (const auto& c : checks) {
                Json j;
                j["name"] = c.name;
                j["pass"] = c.pass;
                if (!c.detail.empty()) j["detail"] = c.detail;
                arr.push_back(std::move(j));
                all = all && c.pass;
            }
            out["checks"] = std::move(arr);
            out["all_pass"] = all;
            std::cout << out.dump(2) << "\n";
        } else if (format == "csv") {
            std::cout << "check,pass\n";
            for (const auto& c : checks) {
                std::cout << "\"" << c.name << "\"," << (c.pass ? "1" : "0") << "\n";
                all = all && c.pass;
            }
        } else {
            for (const auto& c : checks) {
                std::cout << (c.pass ? "[PASS] " : "[FAIL] ") << c.name;
                if (!c.pass && !c.detail.empty()) std::cout << " -- " << c.detail;
                std::cout << "\n";
                all = all && c.pass;
            }
        }
        return all ? 0 : 1;
    }

    if (what.empty() && !emit_rep.empty()) return 0;
    throw tapoly::Error("--what must be tap, limit, torsion or verify");
}

int run_converge(unsigned m, unsigned n, const std::string& sign, unsigned index, unsigned nmax,
                 double t0, const std::string& format) {
    tapoly::TwoBridgeParams params = params_from(m, n, sign);
    tapoly::Presentation pres = tapoly::lin_presentation(params);
    tapoly::Abelianization alpha = tapoly::abelianize(pres);
    tapoly::MetabelianData data = tapoly::metabelian_data(params, index);
    auto rows = tapoly::convergence_table(pres, data, alpha, nmax, t0);
    if (format != "csv") throw tapoly::Error("converge supports --format csv only");
    std::cout << tapoly::convergence_csv(rows);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact twisted Alexander polynomial engine"};
    app.require_subcommand(1);

    // tap
    std::string pres_path, rep_path, column;
    unsigned tap_dim = 0;
    std::string tap_strategy = "direct", tap_format = "text";
    CLI::App* tap = app.add_subcommand("tap", "TAP of a representation from files");
    tap->add_option("presentation", pres_path, "presentation file")->required();
    tap->add_option("representation", rep_path, "representation file (JSON)")->required();
    tap->add_option("--dim", tap_dim, "target dimension n (uses sigma_n for dim-2 input)");
    tap->add_option("--strategy", tap_strategy, "direct|blocks")
        ->check(CLI::IsMember({"direct", "blocks"}));
    tap->add_option("--column", column, "generator whose Fox column is removed");
    tap->add_option("--format", tap_format, "json|text")
        ->check(CLI::IsMember({"json", "text"}));

    // twobridge
    unsigned tb_m = 1, tb_n = 1, tb_i = 1, tb_dim = 2;
    std::string tb_sign = "plus", tb_what, tb_format = "text", tb_emit;
    CLI::App* tb = app.add_subcommand("twobridge", "J(2m, +-2n) family computations");
    tb->add_option("--m", tb_m, "twist parameter m >= 1")->required();
    tb->add_option("--n", tb_n, "twist parameter n >= 1")->required();
    tb->add_option("--sign", tb_sign, "plus|minus")
        ->check(CLI::IsMember({"plus", "minus"}))
        ->required();
    tb->add_option("--i", tb_i, "metabelian class index (default 1)");
    tb->add_option("--dim", tb_dim, "representation dimension 2N for --what tap");
    tb->add_option("--what", tb_what, "tap|limit|torsion|verify");
    tb->add_option("--format", tb_format, "json|csv|text")
        ->check(CLI::IsMember({"json", "csv", "text"}));
    tb->add_option("--emit-rep", tb_emit, "write the metabelian representation file here");

    // converge
    unsigned cv_m = 1, cv_n = 1, cv_i = 1, cv_nmax = 10;
    double cv_t = 1.0;
    std::string cv_sign = "plus", cv_format = "csv";
    CLI::App* cv = app.add_subcommand("converge", "finite-N convergence table (CSV)");
    cv->add_option("--m", cv_m)->required();
    cv->add_option("--n", cv_n)->required();
    cv->add_option("--sign", cv_sign)->check(CLI::IsMember({"plus", "minus"}))->required();
    cv->add_option("--i", cv_i, "metabelian class index (default 1)");
    cv->add_option("--nmax", cv_nmax, "largest N")->required();
    cv->add_option("--t", cv_t, "evaluation point t0 (default 1)");
    cv->add_option("--format", cv_format, "csv")->check(CLI::IsMember({"csv"}));

    CLI11_PARSE(app, argc, argv);

    try {
        if (tap->parsed())
            return run_tap(pres_path, rep_path, tap_dim, tap_strategy, column, tap_format);
        if (tb->parsed())
            return run_twobridge(tb_m, tb_n, tb_sign, tb_i, tb_dim, tb_what, tb_format, tb_emit);
        if (cv->parsed())
            return run_converge(cv_m, cv_n, cv_sign, cv_i, cv_nmax, cv_t, cv_format);
    } catch (const tapoly::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const tapoly::InvalidRepresentation& e) {
        std::cerr << "invalid representation: " << e.what() << "\n";
        return 3;
    } catch (const tapoly::TapUndefined& e) {
        std::cerr << "TAP undefined: " << e.what() << "\n";
        return 4;
    } catch (const tapoly::HypothesisFailure& e) {
        std::cerr << "hypothesis failure: " << e.what() << "\n";
        return 5;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
