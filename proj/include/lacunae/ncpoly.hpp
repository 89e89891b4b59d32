#pragma once

#include <map>
#include <string>
#include <vector>

#include "lacunae/words.hpp"

namespace lacunae {

/// Monomial in noncommuting letters A1..Ak, stored as a packed byte string
/// (byte i-1 is the letter Ai).  The empty string is the ring unit.
using Monomial = std::string;

/// Degree-ascending, then lexicographic with A before B.  This is both the
/// canonical serialization order and the dictionary order used by the
/// bi-invariant group order.
struct MonomialDegLex {
    bool operator()(const Monomial& a, const Monomial& b) const {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    }
};

Monomial monomial_from_letters(std::initializer_list<int> letters);

/// "1" for the unit, otherwise letter names concatenated: "AB", "AAB", ...
/// (rank > 26 falls back to dotted "A1.A2" names).
std::string monomial_name(const Monomial& m, int rank);
Monomial parse_monomial(const std::string& name, int rank);

/// Integer polynomial in k noncommuting variables, truncated at a fixed
/// degree: monomials above the truncation degree are discarded by every
/// operation.  Zero coefficients are never stored.
class NCPolynomial {
public:
    NCPolynomial(int rank, int truncation_degree);

    static NCPolynomial unit(int rank, int truncation_degree);
    /// The single letter A_gen (gen is 1-based), or zero if degree < 1.
    static NCPolynomial letter(int rank, int truncation_degree, int gen);

    int rank() const { return rank_; }
    int truncation_degree() const { return degree_; }
    const std::map<Monomial, Integer, MonomialDegLex>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    Integer coefficient(const Monomial& m) const;
    void set_coefficient(const Monomial& m, Integer value);

    NCPolynomial& operator+=(const NCPolynomial& other);
    NCPolynomial& operator-=(const NCPolynomial& other);
    friend NCPolynomial operator+(NCPolynomial a, const NCPolynomial& b) { return a += b; }
    friend NCPolynomial operator-(NCPolynomial a, const NCPolynomial& b) { return a -= b; }

    friend bool operator==(const NCPolynomial&, const NCPolynomial&) = default;

    /// "1 + A - 2*AB + BAB" style with explicit integer coefficients.
    std::string to_string() const;

private:
    int rank_;
    int degree_;
    std::map<Monomial, Integer, MonomialDegLex> terms_;
};

/// Product truncated at the common degree; rank/degree mismatch is an error.
NCPolynomial nc_multiply(const NCPolynomial& p, const NCPolynomial& q);

NCPolynomial nc_scale(const NCPolynomial& p, const Integer& c);

}  // namespace lacunae
