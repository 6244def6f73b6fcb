#include "tapoly/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "tapoly/errors.hpp"

namespace tapoly {

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::string strip(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

std::vector<std::string> split_ws(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream in(s);
    std::string tok;
    while (in >> tok) out.push_back(tok);
    return out;
}

}  // namespace

Presentation parse_presentation(const std::string& text) {
    std::vector<std::string> gens;
    std::vector<Word> relators;
    std::optional<std::string> meridian;
    bool saw_gens = false;

    std::istringstream in(text);
    std::string line;
    size_t line_no = 0;
    size_t offset = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const size_t line_offset = offset;
        offset += line.size() + 1;
        std::string body = line;
        size_t hash = body.find('#');
        if (hash != std::string::npos) body = body.substr(0, hash);
        body = strip(body);
        if (body.empty()) continue;
        size_t colon = body.find(':');
        if (colon == std::string::npos)
            throw ParseError("expected 'gens:', 'meridian:' or 'rel:' on line " +
                                 std::to_string(line_no),
                             line_offset);
        std::string key = strip(body.substr(0, colon));
        std::string rest = strip(body.substr(colon + 1));
        if (key == "gens") {
            if (saw_gens) throw ParseError("duplicate gens: line", line_offset);
            gens = split_ws(rest);
            if (gens.empty()) throw ParseError("gens: line lists no generators", line_offset);
            saw_gens = true;
        } else if (key == "meridian") {
            if (meridian) throw ParseError("duplicate meridian: line", line_offset);
            auto toks = split_ws(rest);
            if (toks.size() != 1)
                throw ParseError("meridian: expects exactly one generator", line_offset);
            meridian = toks[0];
        } else if (key == "rel") {
            try {
                relators.push_back(parse_word(rest));
            } catch (const ParseError& e) {
                throw ParseError("relator on line " + std::to_string(line_no) + ": " +
                                     std::string(e.what()),
                                 line_offset + colon + 1 + e.position);
            }
        } else {
            throw ParseError("unknown key '" + key + "'", line_offset);
        }
    }
    if (!saw_gens) throw ParseError("missing gens: line", 0);
    try {
        return Presentation(std::move(gens), std::move(relators), std::move(meridian));
    } catch (const Error& e) {
        throw ParseError(e.what(), 0);
    }
}

Presentation load_presentation(const std::string& path) {
    return parse_presentation(read_file(path));
}

std::string render_presentation(const Presentation& p) {
    std::ostringstream out;
    out << "gens:";
    for (const auto& g : p.generators()) out << " " << g;
    out << "\n";
    if (p.meridian()) out << "meridian: " << *p.meridian() << "\n";
    for (const auto& r : p.relators()) out << "rel: " << r.str() << "\n";
    return out.str();
}

namespace {

Int json_to_int(const Json& v, const char* what) {
    if (v.is_number_integer()) return Int(static_cast<long>(v.get<int64_t>()));
    if (v.is_string()) return Int(v.get<std::string>());
    throw Error(std::string("representation file: ") + what + " must be an integer or string");
}

Json int_to_json(const Int& z) {
    if (z.fits_slong_p()) return Json(static_cast<int64_t>(z.get_si()));
    return Json(z.get_str());
}

Cyclotomic entry_from_json(const Json& monomials, unsigned order) {
    Cyclotomic acc = Cyclotomic::zero(order);
    if (!monomials.is_array())
        throw Error("representation file: matrix entry must be a list of monomials");
    for (const auto& m : monomials) {
        if (!m.is_object() || !m.contains("pow") || !m.contains("num") || !m.contains("den"))
            throw Error("representation file: monomial needs pow, num, den");
        long p = m["pow"].get<long>();
        Int num = json_to_int(m["num"], "num");
        Int den = json_to_int(m["den"], "den");
        if (den <= 0) throw Error("representation file: den must be positive");
        Rational c(num, den);
        c.canonicalize();
        acc = acc + Cyclotomic::zeta(order, p).embedded(order) *
                        Cyclotomic::rational(c, 1).embedded(order);
    }
    return acc;
}

Json entry_to_json(const Cyclotomic& c) {
    Json out = Json::array();
    for (size_t k = 0; k < c.coeffs().size(); ++k) {
        const Rational& r = c.coeffs()[k];
        if (r == 0) continue;
        Json m;
        m["pow"] = static_cast<int64_t>(k);
        m["num"] = int_to_json(r.get_num());
        m["den"] = int_to_json(r.get_den());
        out.push_back(std::move(m));
    }
    return out;
}

}  // namespace

Representation parse_representation(const std::string& text) {
    Json doc;
    try {
        doc = Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("representation file: ") + e.what(),
                         static_cast<size_t>(e.byte));
    }
    try {
        if (!doc.contains("order") || !doc.contains("dim") || !doc.contains("images"))
            throw Error("representation file: needs order, dim, images");
        unsigned order = doc["order"].get<unsigned>();
        unsigned dim = doc["dim"].get<unsigned>();
        if (order < 1 || dim < 1) throw Error("representation file: order and dim must be >= 1");
        Representation rho;
        rho.dim = dim;
        rho.order = order;
        for (const auto& [gen, rows] : doc["images"].items()) {
            if (!rows.is_array() || rows.size() != dim)
                throw Error("representation file: image of " + gen + " must have " +
                            std::to_string(dim) + " rows");
            CycMatrix m(dim, order);
            for (size_t i = 0; i < dim; ++i) {
                if (!rows[i].is_array() || rows[i].size() != dim)
                    throw Error("representation file: image of " + gen + " row " +
                                std::to_string(i) + " must have " + std::to_string(dim) +
                                " entries");
                for (size_t j = 0; j < dim; ++j)
                    m.at(i, j) = entry_from_json(rows[i][j], order);
            }
            if (m.determinant().is_zero())
                throw InvalidRepresentation("image of " + gen + " is singular");
            rho.images.emplace(gen, std::move(m));
        }
        bool sl = true;
        for (const auto& [g, m] : rho.images) {
            (void)g;
            sl = sl && m.determinant().is_one();
        }
        rho.sl_flag = sl;
        return rho;
    } catch (const InvalidRepresentation&) {
        throw;
    } catch (const Error&) {
        throw;
    } catch (const nlohmann::json::exception& e) {
        throw Error(std::string("representation file: ") + e.what());
    }
}

Representation load_representation(const std::string& path) {
    return parse_representation(read_file(path));
}

std::string render_representation(const Representation& rho, const Presentation& p) {
    Json doc;
    doc["format"] = 1;
    doc["order"] = rho.order;
    doc["dim"] = rho.dim;
    Json images;
    for (const auto& g : p.generators()) {
        const CycMatrix& m = rho.image(g);
        Json rows = Json::array();
        for (size_t i = 0; i < rho.dim; ++i) {
            Json row = Json::array();
            for (size_t j = 0; j < rho.dim; ++j)
                row.push_back(entry_to_json(m.at(i, j).embedded(rho.order)));
            rows.push_back(std::move(row));
        }
        images[g] = std::move(rows);
    }
    doc["images"] = std::move(images);
    return doc.dump(2) + "\n";
}

Json laurent_to_json(const Laurent& p) {
    Json out;
    out["low"] = p.low_degree();
    Json coeffs = Json::array();
    for (const auto& c : p.coeffs()) coeffs.push_back(entry_to_json(c));
    out["coeffs"] = std::move(coeffs);
    return out;
}

Json rational_function_to_json(const RationalFunction& f) {
    Json out;
    out["numerator"] = laurent_to_json(f.numerator());
    out["denominator"] = laurent_to_json(f.denominator());
    return out;
}

Json tap_result_to_json(const TapResult& result) {
    Json out;
    out["format"] = 1;
    out["numerator"] = laurent_to_json(result.numerator_raw);
    out["denominator"] = laurent_to_json(result.denominator_raw);
    out["value"] = rational_function_to_json(result.value);
    out["column"] = result.column;
    out["dim"] = result.dim;
    return out;
}

std::string format_numeric(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

std::string convergence_csv(const std::vector<ConvergenceRow>& rows) {
    std::ostringstream out;
    out << "N,finite,limit,gap\n";
    for (const auto& r : rows)
        out << r.n_half << "," << format_numeric(r.finite_value) << ","
            << format_numeric(r.limit_value) << "," << format_numeric(r.gap) << "\n";
    return out.str();
}

}  // namespace tapoly
