#pragma once

#include <map>

#include "tapoly/rational.hpp"
#include "tapoly/word.hpp"

namespace tapoly {

// Integer formal sum of freely reduced words: an element of the group ring
// Z[F]. No zero coefficients are stored; the empty sum is 0.
class GroupRingElement {
public:
    GroupRingElement() = default;

    static GroupRingElement zero() { return GroupRingElement(); }
    static GroupRingElement one() { return of_word(Word::identity()); }
    static GroupRingElement of_word(const Word& w, const Int& coeff = 1);

    bool is_zero() const { return terms_.empty(); }
    const std::map<Word, Int>& terms() const { return terms_; }

    GroupRingElement operator-() const;
    GroupRingElement operator+(const GroupRingElement& rhs) const;
    GroupRingElement operator-(const GroupRingElement& rhs) const;
    GroupRingElement operator*(const GroupRingElement& rhs) const;

    bool operator==(const GroupRingElement& rhs) const { return terms_ == rhs.terms_; }

    std::string str() const;

private:
    std::map<Word, Int> terms_;

    void add_term(const Word& w, const Int& c);
};

}  // namespace tapoly
