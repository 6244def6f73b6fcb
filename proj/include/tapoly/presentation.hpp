#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tapoly/rational.hpp"
#include "tapoly/word.hpp"

namespace tapoly {

// Finitely presented group with ordered generators and relators, optionally
// with one generator marked as the meridian. Generators must be declared
// before they appear in relators.
class Presentation {
public:
    Presentation(std::vector<std::string> generators, std::vector<Word> relators,
                 std::optional<std::string> meridian = std::nullopt);

    const std::vector<std::string>& generators() const { return generators_; }
    const std::vector<Word>& relators() const { return relators_; }
    const std::optional<std::string>& meridian() const { return meridian_; }

    size_t generator_index(const std::string& name) const;  // throws if unknown
    bool has_generator(const std::string& name) const;

    // |generators| - |relators|; TAP operations require exactly 1.
    long deficiency() const {
        return static_cast<long>(generators_.size()) - static_cast<long>(relators_.size());
    }

private:
    std::vector<std::string> generators_;
    std::vector<Word> relators_;
    std::optional<std::string> meridian_;
    std::map<std::string, size_t> index_;
};

// The abelianization map onto <t>: each generator gets the exponent of t it
// maps to. Every relator has weighted exponent sum 0 and the degree gcd is 1.
class Abelianization {
public:
    explicit Abelianization(std::map<std::string, long> degrees)
        : degrees_(std::move(degrees)) {}

    const std::map<std::string, long>& degrees() const { return degrees_; }
    long degree(const std::string& gen) const;
    long degree_of_word(const Word& w) const;

private:
    std::map<std::string, long> degrees_;
};

// Computes the abelianization of a deficiency-1 presentation by solving the
// integer kernel of the relator exponent matrix. Throws HypothesisFailure
// when H_1 of the presented group is not infinite cyclic (kernel rank != 1
// or a torsion obstruction), and TapUndefined when deficiency != 1.
Abelianization abelianize(const Presentation& p);

}  // namespace tapoly
