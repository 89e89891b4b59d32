#pragma once

#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace lacunae {

/// Unbounded integer used for exponents, series coefficients and exact
/// length values throughout the library.
using Integer = boost::multiprecision::cpp_int;

/// One syllable of a reduced word: generator^exponent with exponent != 0.
/// Generators are 1-based (1 ↦ a, 2 ↦ b, ...).
struct Syllable {
    int gen = 1;
    Integer exp = 1;

    friend bool operator==(const Syllable&, const Syllable&) = default;
};

/// Reduced element of the rank-k free group in syllable normal form.
/// Adjacent syllables always carry distinct generator indices and no
/// syllable has exponent zero; the empty syllable list is the identity.
/// Words are immutable values; all operations return fresh words.
class Word {
public:
    explicit Word(int rank) : rank_(rank) { check_rank(rank); }
    Word(int rank, std::vector<Syllable> syllables);

    static Word identity(int rank) { return Word(rank); }
    static Word generator(int rank, int gen, Integer exp = 1);

    int rank() const { return rank_; }
    const std::vector<Syllable>& syllables() const { return syls_; }
    bool is_identity() const { return syls_.empty(); }

    /// Sum of |exponent| over all syllables (the reduced word length).
    Integer length() const;

    friend bool operator==(const Word&, const Word&) = default;

private:
    static void check_rank(int rank);

    int rank_;
    std::vector<Syllable> syls_;
};

/// Free reduction of an arbitrary syllable list (zero exponents allowed,
/// adjacent repeats allowed) into normal form.
Word reduce(int rank, const std::vector<Syllable>& raw);

Word multiply(const Word& g, const Word& h);
Word inverse(const Word& g);
Word power(const Word& g, const Integer& n);

/// Net exponent of one generator (sum of that generator's exponents).
Integer net_exponent(const Word& g, int gen);

/// Canonical order on words: by length, then lexicographically as reduced
/// letter strings over the alphabet a < a^-1 < b < b^-1 < ...  This is the
/// enumeration order of ball() and the iteration order of every word-keyed
/// map in the library, so downstream matrices are reproducible.
bool canonical_less(const Word& lhs, const Word& rhs);

struct WordCanonicalLess {
    bool operator()(const Word& lhs, const Word& rhs) const {
        return canonical_less(lhs, rhs);
    }
};

/// All reduced words of length <= radius in canonical order.
/// Size is 1 + sum_{r=1..radius} 2k(2k-1)^{r-1}; enumeration throws
/// if that exceeds max_size.
std::vector<Word> ball(int rank, int radius, std::size_t max_size = 5'000'000);

/// Closed-form cardinality of ball(rank, radius).
Integer ball_size(int rank, int radius);

/// Word <-> text.  Grammar: space-separated syllables "a^3 b^-2" with
/// generators a..z for rank <= 26 and x1, x2, ... beyond; "e" (or an empty
/// string) is the identity; "a" abbreviates "a^1".
std::string to_string(const Word& g);
Word parse_word(int rank, const std::string& text);

/// Named length function g ↦ ψ(g) >= 0.
class LengthFunction {
public:
    enum class Kind { word_length, q_length, psi_z, pullback, table };

    static LengthFunction word_length();
    /// q-length sum_i |exponent_i|^q; only 0 < q <= 2 is accepted.
    static LengthFunction q_length(double q);
    /// psi_z(g) = sum over generators of (net exponent)^2.
    static LengthFunction psi_z();
    /// Pullback along the endomorphism generator_i ↦ generator_i^{m_i};
    /// evaluates the word length of the image.
    static LengthFunction pullback(std::vector<Integer> image_exponents);
    /// Explicit finite table with a default for missing words.
    static LengthFunction table(std::vector<std::pair<Word, double>> values,
                                double default_value);

    Kind kind() const { return kind_; }
    double q() const { return q_; }
    const std::vector<Integer>& image_exponents() const { return image_exponents_; }

    double operator()(const Word& g) const;

    /// Exact integer value where the kind admits one (word_length,
    /// q in {1,2}, psi_z, pullback); nullopt otherwise.
    std::optional<Integer> exact(const Word& g) const;

    /// Short spec string ("word", "q:0.5", "psiz", "pullback:2,4", "table").
    std::string describe() const;

private:
    LengthFunction() = default;

    Kind kind_ = Kind::word_length;
    double q_ = 1.0;
    std::vector<Integer> image_exponents_;
    std::vector<std::pair<Word, double>> table_;
    double table_default_ = 0.0;
};

/// Parses "word", "q:<value>", "psiz", "pullback:m1,m2,..." into a
/// LengthFunction (tables are built programmatically or from JSON).
LengthFunction parse_length(const std::string& spec);

}  // namespace lacunae
