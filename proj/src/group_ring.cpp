#include "tapoly/group_ring.hpp"

#include <sstream>

namespace tapoly {

GroupRingElement GroupRingElement::of_word(const Word& w, const Int& coeff) {
    GroupRingElement e;
    if (coeff != 0) e.terms_.emplace(w, coeff);
    return e;
}

void GroupRingElement::add_term(const Word& w, const Int& c) {
    auto it = terms_.find(w);
    if (it == terms_.end()) {
        if (c != 0) terms_.emplace(w, c);
        return;
    }
    it->second += c;
    if (it->second == 0) terms_.erase(it);
}

GroupRingElement GroupRingElement::operator-() const {
    GroupRingElement out;
    for (const auto& [w, c] : terms_) out.terms_.emplace(w, -c);
    return out;
}

GroupRingElement GroupRingElement::operator+(const GroupRingElement& rhs) const {
    GroupRingElement out = *this;
    for (const auto& [w, c] : rhs.terms_) out.add_term(w, c);
    return out;
}

GroupRingElement GroupRingElement::operator-(const GroupRingElement& rhs) const {
    GroupRingElement out = *this;
    for (const auto& [w, c] : rhs.terms_) out.add_term(w, -c);
    return out;
}

GroupRingElement GroupRingElement::operator*(const GroupRingElement& rhs) const {
    GroupRingElement out;
    for (const auto& [u, a] : terms_)
        for (const auto& [v, b] : rhs.terms_) out.add_term(u * v, a * b);
    return out;
}

std::string GroupRingElement::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [w, c] : terms_) {
        Int a = c;
        bool neg = a < 0;
        if (neg) a = -a;
        if (first)
            out << (neg ? "-" : "");
        else
            out << (neg ? " - " : " + ");
        if (a != 1)
            out << a.get_str() << "*" << w.str();
        else
            out << w.str();
        first = false;
    }
    return out.str();
}

}  // namespace tapoly
