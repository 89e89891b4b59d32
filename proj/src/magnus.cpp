#include "lacunae/magnus.hpp"

#include <algorithm>

#include "lacunae/errors.hpp"

namespace lacunae {

namespace {

// Series of one syllable: (1 + X)^e for e > 0 has coefficients C(e, i);
// (1 + X)^e for e < 0 has coefficients (-1)^i C(|e| + i - 1, i).  Both are
// built by the iterative binomial recurrence, exact for unbounded e.
NCPolynomial syllable_series(int rank, int degree, const Syllable& s) {
    NCPolynomial p(rank, degree);
    Integer coeff = 1;
    p.set_coefficient(Monomial{}, 1);
    if (s.exp > 0) {
        for (int i = 1; i <= degree; ++i) {
            if (s.exp < i) break;  // C(e, i) = 0 beyond e
            coeff = coeff * (s.exp - (i - 1)) / i;
            p.set_coefficient(Monomial(static_cast<std::size_t>(i), static_cast<char>(s.gen)), coeff);
        }
    } else {
        Integer n = -s.exp;
        for (int i = 1; i <= degree; ++i) {
            coeff = coeff * (n + (i - 1)) / i;  // C(n + i - 1, i)
            Integer signed_coeff = (i % 2 == 0) ? coeff : Integer(-coeff);
            p.set_coefficient(Monomial(static_cast<std::size_t>(i), static_cast<char>(s.gen)),
                              std::move(signed_coeff));
        }
    }
    return p;
}

// Alternating exponent lists (j_s, k_s) of a rank-2 word: syllables strictly
// alternate between the generators, so only a leading b or trailing a
// syllable needs a zero mate.
void alternating_exponents(const Word& g, std::vector<Integer>& js, std::vector<Integer>& ks) {
    if (g.rank() != 2) throw InputError("closed-form J requires rank 2");
    js.clear();
    ks.clear();
    for (const auto& s : g.syllables()) {
        if (s.gen == 1) {
            js.push_back(s.exp);
        } else {
            if (js.size() == ks.size()) js.push_back(0);
            ks.push_back(s.exp);
        }
    }
    if (ks.size() < js.size()) ks.push_back(0);
}

}  // namespace

int default_truncation_degree(const Word& g) {
    Integer len = g.length();
    if (len < 2) return 2;
    if (len > 64) return 64;
    return len.convert_to<int>();
}

NCPolynomial magnus_embed(const Word& g, int degree) {
    if (degree < 1) throw InputError("embedding degree must be >= 1");
    NCPolynomial acc = NCPolynomial::unit(g.rank(), degree);
    for (const auto& s : g.syllables())
        acc = nc_multiply(acc, syllable_series(g.rank(), degree, s));
    return acc;
}

Integer j_coefficient(const Word& g, const Monomial& monomial) {
    int degree = std::max(static_cast<int>(monomial.size()), 1);
    return magnus_embed(g, degree).coefficient(monomial);
}

Integer JProfile::j_a() const {
    auto it = coefficients.find(monomial_from_letters({1}));
    return it == coefficients.end() ? Integer(0) : it->second;
}

Integer JProfile::j_b() const {
    auto it = coefficients.find(monomial_from_letters({2}));
    return it == coefficients.end() ? Integer(0) : it->second;
}

Integer JProfile::j_ab() const {
    auto it = coefficients.find(monomial_from_letters({1, 2}));
    return it == coefficients.end() ? Integer(0) : it->second;
}

Integer JProfile::j_ba() const {
    auto it = coefficients.find(monomial_from_letters({2, 1}));
    return it == coefficients.end() ? Integer(0) : it->second;
}

JProfile j_profile(const Word& g) {
    JProfile profile;
    profile.rank = g.rank();
    NCPolynomial mu = magnus_embed(g, 2);
    for (const auto& [m, c] : mu.terms())
        if (!m.empty()) profile.coefficients[m] = c;
    return profile;
}

Integer j_a_closed_form(const Word& g) {
    std::vector<Integer> js, ks;
    alternating_exponents(g, js, ks);
    Integer total = 0;
    for (const auto& j : js) total += j;
    return total;
}

Integer j_b_closed_form(const Word& g) {
    std::vector<Integer> js, ks;
    alternating_exponents(g, js, ks);
    Integer total = 0;
    for (const auto& k : ks) total += k;
    return total;
}

Integer j_ab_closed_form(const Word& g) {
    // sum over s <= t of j_s k_t, via prefix sums of j.
    std::vector<Integer> js, ks;
    alternating_exponents(g, js, ks);
    Integer total = 0, j_prefix = 0;
    for (std::size_t t = 0; t < js.size(); ++t) {
        j_prefix += js[t];
        total += j_prefix * ks[t];
    }
    return total;
}

Integer j_ba_closed_form(const Word& g) {
    // sum over t < s of j_s k_t, via prefix sums of k.
    std::vector<Integer> js, ks;
    alternating_exponents(g, js, ks);
    Integer total = 0, k_prefix = 0;
    for (std::size_t s = 0; s < js.size(); ++s) {
        total += js[s] * k_prefix;
        k_prefix += ks[s];
    }
    return total;
}

SubgroupMembership subgroup_membership(const Word& g) {
    if (g.rank() != 2) throw InputError("subgroup membership requires rank 2");
    JProfile profile = j_profile(g);
    SubgroupMembership m;
    m.in_f0 = profile.j_a() == 0 && profile.j_b() == 0;
    m.in_f00 = m.in_f0 && profile.j_ab() == 0;
    return m;
}

bool transference_check(const Word& g) {
    if (g.rank() != 2) throw InputError("transference check requires rank 2");
    JProfile profile = j_profile(g);
    Integer lhs = profile.j_a() * profile.j_a() + profile.j_b() * profile.j_b();
    Integer rhs = *LengthFunction::psi_z().exact(g);
    return lhs == rhs;
}

}  // namespace lacunae
