#include <doctest.h>

#include <random>

#include "lacunae/errors.hpp"
#include "lacunae/magnus.hpp"
#include "test_util.hpp"

using namespace lacunae;
using lacunae::testing::random_word_up_to;

namespace {

Word w(int rank, const std::string& text) { return parse_word(rank, text); }

const Monomial kA = monomial_from_letters({1});
const Monomial kB = monomial_from_letters({2});
const Monomial kAB = monomial_from_letters({1, 2});
const Monomial kBA = monomial_from_letters({2, 1});

}  // namespace

TEST_CASE("generator images") {
    NCPolynomial mu_a = magnus_embed(w(2, "a"), 3);
    NCPolynomial expected(2, 3);
    expected.set_coefficient({}, 1);
    expected.set_coefficient(kA, 1);
    CHECK(mu_a == expected);

    NCPolynomial mu_a_inv = magnus_embed(w(2, "a^-1"), 3);
    CHECK(mu_a_inv.to_string() == "1 - A + AA - AAA");

    CHECK(magnus_embed(Word::identity(2), 4) == NCPolynomial::unit(2, 4));
}

TEST_CASE("truncated product oracle for a b a^-1") {
    // (1+A)(1+B)(1-A+A^2) truncated at degree 2 expands by hand to
    // 1 + B + AB - BA.
    NCPolynomial mu = magnus_embed(w(2, "a b a^-1"), 2);
    NCPolynomial expected(2, 2);
    expected.set_coefficient({}, 1);
    expected.set_coefficient(kB, 1);
    expected.set_coefficient(kAB, 1);
    expected.set_coefficient(kBA, -1);
    CHECK(mu == expected);
}

TEST_CASE("embedding is a homomorphism up to truncation") {
    std::mt19937_64 rng(17);
    for (int i = 0; i < 200; ++i) {
        Word g = random_word_up_to(rng, 2, 8);
        Word h = random_word_up_to(rng, 2, 8);
        NCPolynomial lhs = magnus_embed(multiply(g, h), 5);
        NCPolynomial rhs = nc_multiply(magnus_embed(g, 5), magnus_embed(h, 5));
        CHECK(lhs == rhs);
    }
}

TEST_CASE("series coefficients against closed forms") {
    // J_A(a^3 b^2 a^-1) = 3 - 1 = 2, via the alternating-exponent formula
    CHECK(j_coefficient(w(2, "a^3 b^2 a^-1"), kA) == 2);
    CHECK(j_a_closed_form(w(2, "a^3 b^2 a^-1")) == 2);

    // commutator: j = (1, -1), k = (1, -1), J_AB = 1*1 + 1*(-1) + (-1)(-1) = 1
    Word c = w(2, "a b a^-1 b^-1");
    CHECK(j_coefficient(c, kAB) == 1);
    CHECK(j_ab_closed_form(c) == 1);

    // mu(e) = 1: all non-unit coefficients vanish
    for (const Monomial& m : {kA, kB, kAB, kBA})
        CHECK(j_coefficient(Word::identity(2), m) == 0);

    std::mt19937_64 rng(19);
    for (int i = 0; i < 300; ++i) {
        Word g = random_word_up_to(rng, 2, 10);
        JProfile p = j_profile(g);
        CHECK(p.j_a() == j_a_closed_form(g));
        CHECK(p.j_b() == j_b_closed_form(g));
        CHECK(p.j_ab() == j_ab_closed_form(g));
        CHECK(p.j_ba() == j_ba_closed_form(g));
    }
}

TEST_CASE("cocycle laws and the profile identity") {
    std::mt19937_64 rng(23);
    for (int i = 0; i < 200; ++i) {
        Word g = random_word_up_to(rng, 2, 8);
        Word h = random_word_up_to(rng, 2, 8);
        JProfile pg = j_profile(g);
        JProfile ph = j_profile(h);
        JProfile pgh = j_profile(multiply(g, h));
        CHECK(pgh.j_a() == pg.j_a() + ph.j_a());
        CHECK(pgh.j_ab() == pg.j_a() * ph.j_b() + pg.j_ab() + ph.j_ab());
        CHECK(pg.j_ab() + pg.j_ba() == pg.j_a() * pg.j_b());
    }
}

TEST_CASE("embedding separates short words") {
    std::mt19937_64 rng(29);
    for (int i = 0; i < 100; ++i) {
        Word g = random_word_up_to(rng, 2, 6);
        Word h = random_word_up_to(rng, 2, 6);
        if (g == h) continue;
        CHECK(magnus_embed(g, 6) != magnus_embed(h, 6));
    }
}

TEST_CASE("binomial series handles huge exponents exactly") {
    Word g = w(1, "a^-1024");
    NCPolynomial mu = magnus_embed(g, 2);
    CHECK(mu.coefficient(kA) == -1024);
    // C(1025, 2) = 1025 * 1024 / 2
    CHECK(mu.coefficient(monomial_from_letters({1, 1})) == Integer(1025) * 512);
}

TEST_CASE("subgroup membership") {
    auto c = w(2, "a b a^-1 b^-1");
    auto mc = subgroup_membership(c);
    CHECK(mc.in_f0);
    CHECK_FALSE(mc.in_f00);

    auto me = subgroup_membership(Word::identity(2));
    CHECK(me.in_f0);
    CHECK(me.in_f00);

    auto ma = subgroup_membership(w(2, "a"));
    CHECK_FALSE(ma.in_f0);
    CHECK_FALSE(ma.in_f00);

    CHECK_THROWS_AS(subgroup_membership(w(3, "c")), InputError);
}

TEST_CASE("transference identity") {
    CHECK(transference_check(w(2, "a b a^-1 b^-1")));
    CHECK(transference_check(w(2, "a^2 b")));
    std::mt19937_64 rng(31);
    for (int i = 0; i < 300; ++i) CHECK(transference_check(random_word_up_to(rng, 2, 12)));
}
