#include "tapoly/fox.hpp"

namespace tapoly {

namespace {

// d(g^e)/dg: 1 + g + ... + g^{e-1} for e > 0, and -(g^-1 + ... + g^e) for e < 0.
GroupRingElement syllable_derivative(const Syllable& s) {
    GroupRingElement out;
    if (s.exp > 0) {
        for (long i = 0; i < s.exp; ++i)
            out = out + GroupRingElement::of_word(Word::generator(s.gen, i));
    } else {
        for (long i = 1; i <= -s.exp; ++i)
            out = out - GroupRingElement::of_word(Word::generator(s.gen, -i));
    }
    return out;
}

}  // namespace

GroupRingElement fox_derivative(const Word& w, const std::string& gen) {
    // Product rule over the syllables: d(s1 s2 ... sk)/dg
    // = sum_i (s1...s_{i-1}) * d(s_i)/dg.
    GroupRingElement acc;
    Word prefix;
    for (const auto& s : w.syllables()) {
        if (s.gen == gen)
            acc = acc + GroupRingElement::of_word(prefix) * syllable_derivative(s);
        prefix = prefix * Word::generator(s.gen, s.exp);
    }
    return acc;
}

}  // namespace tapoly
