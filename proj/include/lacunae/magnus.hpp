#pragma once

#include <map>

#include "lacunae/ncpoly.hpp"
#include "lacunae/words.hpp"

namespace lacunae {

/// Truncation degree used when a caller does not fix one: large enough to
/// separate desk-scale words (see order_compare for the escape hatch).
int default_truncation_degree(const Word& g);

/// Image of g under the embedding generator ↦ 1 + letter, inverse ↦
/// alternating geometric series, truncated at the given degree.
NCPolynomial magnus_embed(const Word& g, int degree);

/// Coefficient of one monomial in the embedding of g (series extraction).
Integer j_coefficient(const Word& g, const Monomial& monomial);

/// Degree <= 2 coefficients of the embedding; named accessors follow the
/// rank-2 convention (A = generator 1, B = generator 2).
struct JProfile {
    int rank = 2;
    std::map<Monomial, Integer, MonomialDegLex> coefficients;  // degrees 1 and 2

    Integer j_a() const;
    Integer j_b() const;
    Integer j_ab() const;
    Integer j_ba() const;
};

JProfile j_profile(const Word& g);

/// Closed forms over the alternating a/b exponent lists of a rank-2 word.
/// These are an independent route to the same numbers as series extraction
/// and exist so the two can be cross-checked.
Integer j_a_closed_form(const Word& g);
Integer j_b_closed_form(const Word& g);
Integer j_ab_closed_form(const Word& g);
Integer j_ba_closed_form(const Word& g);

struct SubgroupMembership {
    bool in_f0 = false;   // J_A = J_B = 0
    bool in_f00 = false;  // additionally J_AB = 0
};

/// Rank-2 only.
SubgroupMembership subgroup_membership(const Word& g);

/// Verifies J_A(g)^2 + J_B(g)^2 == psi_z(g) exactly, with the left side
/// from series extraction and the right side from net-exponent sums.
bool transference_check(const Word& g);

}  // namespace lacunae
