#pragma once

#include <string>
#include <vector>

namespace tapoly {

// One maximal run g^e in a freely reduced word; e is never zero.
struct Syllable {
    std::string gen;
    long exp = 0;

    friend bool operator==(const Syllable& a, const Syllable& b) {
        return a.gen == b.gen && a.exp == b.exp;
    }
    friend auto operator<=>(const Syllable& a, const Syllable& b) = default;
};

// Freely reduced group word. The empty word is the identity.
class Word {
public:
    Word() = default;
    explicit Word(std::vector<Syllable> syllables);  // reduces

    static Word identity() { return Word(); }
    static Word generator(const std::string& name, long exp = 1);

    bool is_identity() const { return syllables_.empty(); }
    const std::vector<Syllable>& syllables() const { return syllables_; }
    size_t length() const;  // total letter count

    Word operator*(const Word& rhs) const;
    Word inverse() const;
    Word pow(long e) const;

    bool operator==(const Word& rhs) const { return syllables_ == rhs.syllables_; }
    auto operator<=>(const Word& rhs) const = default;

    std::string str() const;  // round-trips through parse_word

private:
    std::vector<Syllable> syllables_;

    friend Word free_reduce(const std::vector<Syllable>& syllables);
};

// Parses the grammar: whitespace-separated tokens, each `name` or `name^k`
// with k a nonzero signed integer and name = letter (letter|digit|_)*.
// Throws ParseError with the offending position. The result is freely reduced.
Word parse_word(const std::string& text);

// Canonical freely reduced form of an arbitrary syllable sequence.
Word free_reduce(const std::vector<Syllable>& syllables);

}  // namespace tapoly
