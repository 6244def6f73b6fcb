#include "tapoly/word.hpp"

#include <cctype>
#include <sstream>

#include "tapoly/errors.hpp"

namespace tapoly {

// Stack-based reduction: the accumulated prefix stays freely reduced, so a
// single pass suffices (a pop can only expose syllables that were already
// non-adjacent or distinct).
Word free_reduce(const std::vector<Syllable>& syllables) {
    std::vector<Syllable> out;
    for (const auto& s : syllables) {
        if (s.exp == 0) continue;
        if (!out.empty() && out.back().gen == s.gen) {
            out.back().exp += s.exp;
            if (out.back().exp == 0) out.pop_back();
        } else {
            out.push_back(s);
        }
    }
    Word w;
    w.syllables_ = std::move(out);
    return w;
}

Word::Word(std::vector<Syllable> syllables) { *this = free_reduce(syllables); }

Word Word::generator(const std::string& name, long exp) {
    if (exp == 0) return Word();
    return Word({Syllable{name, exp}});
}

size_t Word::length() const {
    size_t n = 0;
    for (const auto& s : syllables_) n += static_cast<size_t>(s.exp < 0 ? -s.exp : s.exp);
    return n;
}

Word Word::operator*(const Word& rhs) const {
    std::vector<Syllable> cat = syllables_;
    cat.insert(cat.end(), rhs.syllables_.begin(), rhs.syllables_.end());
    return free_reduce(cat);
}

Word Word::inverse() const {
    std::vector<Syllable> inv;
    inv.reserve(syllables_.size());
    for (auto it = syllables_.rbegin(); it != syllables_.rend(); ++it)
        inv.push_back(Syllable{it->gen, -it->exp});
    Word w;
    w.syllables_ = std::move(inv);  // already reduced
    return w;
}

Word Word::pow(long e) const {
    if (e == 0) return Word();
    Word base = e < 0 ? inverse() : *this;
    long n = e < 0 ? -e : e;
    Word acc;
    for (long i = 0; i < n; ++i) acc = acc * base;
    return acc;
}

std::string Word::str() const {
    if (is_identity()) return "1";
    std::ostringstream out;
    bool first = true;
    for (const auto& s : syllables_) {
        if (!first) out << " ";
        out << s.gen;
        if (s.exp != 1) out << "^" << s.exp;
        first = false;
    }
    return out.str();
}

namespace {

bool is_name_start(char c) { return std::isalpha(static_cast<unsigned char>(c)); }
bool is_name_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

}  // namespace

Word parse_word(const std::string& text) {
    std::vector<Syllable> syllables;
    size_t i = 0;
    const size_t n = text.size();
    while (i < n) {
        if (std::isspace(static_cast<unsigned char>(text[i]))) {
            ++i;
            continue;
        }
        size_t start = i;
        // the bare token "1" denotes the identity word (render_word emits it)
        if (text[i] == '1' &&
            (i + 1 == n || std::isspace(static_cast<unsigned char>(text[i + 1])))) {
            ++i;
            continue;
        }
        if (!is_name_start(text[i]))
            throw ParseError("expected a generator name", start);
        size_t j = i;
        while (j < n && is_name_char(text[j])) ++j;
        std::string name = text.substr(i, j - i);
        long exp = 1;
        i = j;
        if (i < n && text[i] == '^') {
            ++i;
            size_t exp_start = i;
            bool neg = false;
            if (i < n && (text[i] == '-' || text[i] == '+')) {
                neg = text[i] == '-';
                ++i;
            }
            if (i >= n || !std::isdigit(static_cast<unsigned char>(text[i])))
                throw ParseError("expected an integer exponent after '^'", exp_start);
            long v = 0;
            while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) {
                v = v * 10 + (text[i] - '0');
                if (v > 1000000) throw ParseError("exponent too large", exp_start);
                ++i;
            }
            if (i < n && !std::isspace(static_cast<unsigned char>(text[i])))
                throw ParseError("unexpected character after exponent", i);
            exp = neg ? -v : v;
            if (exp == 0) throw ParseError("zero exponent is not allowed", exp_start);
        }
        syllables.push_back(Syllable{std::move(name), exp});
    }
    return free_reduce(syllables);
}

}  // namespace tapoly
