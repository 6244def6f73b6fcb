#include "tapoly/presentation.hpp"

#include <numeric>

#include "tapoly/errors.hpp"

namespace tapoly {

Presentation::Presentation(std::vector<std::string> generators, std::vector<Word> relators,
                           std::optional<std::string> meridian)
    : generators_(std::move(generators)), relators_(std::move(relators)),
      meridian_(std::move(meridian)) {
    for (size_t i = 0; i < generators_.size(); ++i) {
        auto [it, inserted] = index_.emplace(generators_[i], i);
        (void)it;
        if (!inserted) throw Error("duplicate generator name: " + generators_[i]);
    }
    for (const auto& r : relators_)
        for (const auto& s : r.syllables())
            if (!index_.count(s.gen))
                throw Error("relator uses undeclared generator: " + s.gen);
    if (meridian_ && !index_.count(*meridian_))
        throw Error("meridian is not a declared generator: " + *meridian_);
}

size_t Presentation::generator_index(const std::string& name) const {
    auto it = index_.find(name);
    if (it == index_.end()) throw Error("unknown generator: " + name);
    return it->second;
}

bool Presentation::has_generator(const std::string& name) const {
    return index_.count(name) > 0;
}

long Abelianization::degree(const std::string& gen) const {
    auto it = degrees_.find(gen);
    if (it == degrees_.end()) throw Error("abelianization has no degree for: " + gen);
    return it->second;
}

long Abelianization::degree_of_word(const Word& w) const {
    long d = 0;
    for (const auto& s : w.syllables()) d += s.exp * degree(s.gen);
    return d;
}

namespace {

// Determinant of a square integer matrix by fraction-free Bareiss.
Int int_det(std::vector<std::vector<Int>> m) {
    const size_t n = m.size();
    if (n == 0) return 1;
    int sign = 1;
    Int prev = 1;
    for (size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            size_t pr = k + 1;
            while (pr < n && m[pr][k] == 0) ++pr;
            if (pr == n) return 0;
            std::swap(m[k], m[pr]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j < n; ++j)
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    return sign < 0 ? -m[n - 1][n - 1] : m[n - 1][n - 1];
}

}  // namespace

Abelianization abelianize(const Presentation& p) {
    if (p.deficiency() != 1)
        throw TapUndefined("abelianization onto <t> requires deficiency exactly 1, got " +
                           std::to_string(p.deficiency()));
    const size_t k = p.generators().size();
    const size_t r = p.relators().size();  // = k - 1

    // Exponent-sum matrix (relators x generators).
    std::vector<std::vector<Int>> m(r, std::vector<Int>(k, Int(0)));
    for (size_t i = 0; i < r; ++i)
        for (const auto& s : p.relators()[i].syllables())
            m[i][p.generator_index(s.gen)] += s.exp;

    // H_1 is Z iff the matrix has full rank r and all invariant factors are 1,
    // i.e. the gcd of the r x r minors is 1.
    Int minor_gcd = 0;
    for (size_t drop = 0; drop < k; ++drop) {
        std::vector<std::vector<Int>> sq(r, std::vector<Int>(r));
        for (size_t i = 0; i < r; ++i) {
            size_t c = 0;
            for (size_t j = 0; j < k; ++j) {
                if (j == drop) continue;
                sq[i][c++] = m[i][j];
            }
        }
        Int d = int_det(sq);
        mpz_gcd(minor_gcd.get_mpz_t(), minor_gcd.get_mpz_t(), d.get_mpz_t());
    }
    if (minor_gcd == 0)
        throw HypothesisFailure(
            "H_1 of the presented group is not infinite cyclic: relator matrix rank < " +
            std::to_string(r) + " (kernel rank != 1)");
    if (minor_gcd != 1)
        throw HypothesisFailure(
            "H_1 of the presented group is not infinite cyclic: torsion of order dividing " +
            minor_gcd.get_str());

    // Rank is r, so the rational kernel is one-dimensional; solve by Gaussian
    // elimination over Q and scale to the primitive integer vector.
    std::vector<std::vector<Rational>> a(r, std::vector<Rational>(k));
    for (size_t i = 0; i < r; ++i)
        for (size_t j = 0; j < k; ++j) a[i][j] = Rational(m[i][j]);
    std::vector<long> pivot_of_row;
    size_t row = 0;
    for (size_t col = 0; col < k && row < r; ++col) {
        size_t pr = row;
        while (pr < r && a[pr][col] == 0) ++pr;
        if (pr == r) continue;
        std::swap(a[pr], a[row]);
        Rational inv = 1 / a[row][col];
        for (size_t j = col; j < k; ++j) a[row][j] *= inv;
        for (size_t i = 0; i < r; ++i) {
            if (i == row || a[i][col] == 0) continue;
            Rational f = a[i][col];
            for (size_t j = col; j < k; ++j) a[i][j] -= f * a[row][j];
        }
        pivot_of_row.push_back(static_cast<long>(col));
        ++row;
    }
    // One free column; set it to 1 and back-substitute.
    std::vector<bool> is_pivot(k, false);
    for (long c : pivot_of_row) is_pivot[static_cast<size_t>(c)] = true;
    size_t free_col = 0;
    while (free_col < k && is_pivot[free_col]) ++free_col;
    std::vector<Rational> sol(k, Rational(0));
    sol[free_col] = 1;
    for (size_t i = 0; i < pivot_of_row.size(); ++i)
        sol[static_cast<size_t>(pivot_of_row[i])] = -a[i][free_col];

    // Clear denominators and divide by the content to get the primitive vector.
    Int lcm_den = 1;
    for (const auto& s : sol) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), s.get_den().get_mpz_t());
    std::vector<Int> d(k);
    Int content = 0;
    for (size_t j = 0; j < k; ++j) {
        d[j] = sol[j].get_num() * (lcm_den / sol[j].get_den());
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), d[j].get_mpz_t());
    }
    for (auto& v : d) v /= content;

    // Orientation: marked meridian positive when it has nonzero degree,
    // otherwise the first generator with nonzero degree.
    size_t anchor = k;
    if (p.meridian()) {
        size_t mi = p.generator_index(*p.meridian());
        if (d[mi] != 0) anchor = mi;
    }
    if (anchor == k)
        for (size_t j = 0; j < k; ++j)
            if (d[j] != 0) {
                anchor = j;
                break;
            }
    if (d[anchor] < 0)
        for (auto& v : d) v = -v;

    std::map<std::string, long> degrees;
    Int g = 0;
    for (size_t j = 0; j < k; ++j) {
        if (!d[j].fits_slong_p()) throw Error("abelianization degree overflow");
        degrees[p.generators()[j]] = d[j].get_si();
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), d[j].get_mpz_t());
    }
    if (g != 1)
        throw HypothesisFailure("abelianization is not surjective onto <t> (degree gcd " +
                                g.get_str() + ")");
    return Abelianization(std::move(degrees));
}

}  // namespace tapoly
