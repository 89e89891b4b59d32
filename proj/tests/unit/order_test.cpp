#include <doctest.h>

#include <random>

#include "lacunae/errors.hpp"
#include "lacunae/order.hpp"
#include "test_util.hpp"

using namespace lacunae;
using lacunae::testing::random_word_up_to;

namespace {

Word w(int rank, const std::string& text) { return parse_word(rank, text); }

}  // namespace

TEST_CASE("generator comparisons pin the convention") {
    OrderVerdict v = order_compare(w(2, "a"), w(2, "b"));
    CHECK(v.relation == OrderRelation::greater);
    REQUIRE(v.deciding_monomial);
    CHECK(monomial_name(*v.deciding_monomial, 2) == "A");
    CHECK(*v.deciding_degree == 1);

    CHECK(order_compare(w(2, "a b"), w(2, "a b")).relation == OrderRelation::equal);

    OrderVerdict c = order_compare(w(2, "a b a^-1 b^-1"), Word::identity(2));
    CHECK(c.relation == OrderRelation::greater);
    REQUIRE(c.deciding_monomial);
    CHECK(monomial_name(*c.deciding_monomial, 2) == "AB");
}

TEST_CASE("positivity basics") {
    CHECK_FALSE(is_positive(w(2, "a^-1")));
    CHECK(is_positive(w(2, "a b a^-1 b^-1")));
    CHECK(is_positive(Word::identity(2)));
    CHECK_FALSE(is_positive(w(2, "b^-1 a^-1 b a")));  // inverse commutator
}

TEST_CASE("rank 1 order agrees with the integers exhaustively") {
    for (int m = -20; m <= 20; ++m) {
        for (int n = -20; n <= 20; ++n) {
            Word gm = Word::generator(1, 1, m);
            Word gn = Word::generator(1, 1, n);
            OrderVerdict v = order_compare(gm, gn);
            if (m < n) CHECK(v.relation == OrderRelation::less);
            if (m == n) CHECK(v.relation == OrderRelation::equal);
            if (m > n) CHECK(v.relation == OrderRelation::greater);
        }
    }
}

TEST_CASE("total order laws on random decided samples") {
    std::mt19937_64 rng(37);
    int decided = 0;
    while (decided < 300) {
        Word g = random_word_up_to(rng, 2, 6);
        Word h = random_word_up_to(rng, 2, 6);
        Word f = random_word_up_to(rng, 2, 6);
        OrderVerdict gh = order_compare(g, h);
        OrderVerdict hg = order_compare(h, g);
        OrderVerdict hf = order_compare(h, f);
        OrderVerdict gf = order_compare(g, f);
        if (!gh.decided() || !hf.decided() || !gf.decided()) continue;
        ++decided;
        // totality + antisymmetry
        if (gh.relation == OrderRelation::less) CHECK(hg.relation == OrderRelation::greater);
        if (gh.relation == OrderRelation::greater) CHECK(hg.relation == OrderRelation::less);
        if (gh.relation == OrderRelation::equal) CHECK(hg.relation == OrderRelation::equal);
        // transitivity
        bool g_le_h = gh.relation == OrderRelation::less || gh.relation == OrderRelation::equal;
        bool h_le_f = hf.relation == OrderRelation::less || hf.relation == OrderRelation::equal;
        if (g_le_h && h_le_f)
            CHECK((gf.relation == OrderRelation::less || gf.relation == OrderRelation::equal));
    }
}

TEST_CASE("bi-invariance on random samples") {
    std::mt19937_64 rng(41);
    int checked = 0;
    while (checked < 300) {
        Word g = random_word_up_to(rng, 2, 5);
        Word h = random_word_up_to(rng, 2, 5);
        Word x = random_word_up_to(rng, 2, 5);
        Word y = random_word_up_to(rng, 2, 5);
        OrderVerdict base = order_compare(g, h);
        if (!base.decided()) continue;
        OrderVerdict moved = order_compare(multiply(multiply(x, g), y), multiply(multiply(x, h), y));
        REQUIRE(moved.decided());
        CHECK(base.relation == moved.relation);
        ++checked;
    }
}

TEST_CASE("positive cone is a subsemigroup and inversion flips sign") {
    std::mt19937_64 rng(43);
    int checked = 0;
    while (checked < 200) {
        Word g = random_word_up_to(rng, 2, 5);
        Word h = random_word_up_to(rng, 2, 5);
        if (!is_positive(g) || !is_positive(h)) continue;
        CHECK(is_positive(multiply(g, h)));
        if (!g.is_identity()) CHECK_FALSE(is_positive(inverse(g)));
        ++checked;
    }
}

TEST_CASE("undecided outcomes are reported, not guessed") {
    // Distinct central-series-deep elements with a tiny truncation budget:
    // the commutator differs from e first at degree 2.
    OrderVerdict v = order_compare(w(2, "a b a^-1 b^-1"), Word::identity(2), 1);
    CHECK(v.relation == OrderRelation::undecided);
    CHECK(v.depth == 1);
    CHECK_THROWS_AS(is_positive(w(2, "a b a^-1 b^-1"), 1), UndecidedOrderError);
}

TEST_CASE("positive part split") {
    FourierElement x = FourierElement::delta(w(2, "a")) + FourierElement::delta(w(2, "a^-1"));
    auto [pos, neg] = positive_part_split(x);
    CHECK(pos.support_size() == 1);
    CHECK(neg.support_size() == 1);
    CHECK(pos.coefficient(w(2, "a"))(0, 0) == std::complex<double>(1.0, 0.0));
    CHECK(neg.coefficient(w(2, "a^-1"))(0, 0) == std::complex<double>(1.0, 0.0));

    // support already positive: split is (x, 0)
    FourierElement y = FourierElement::delta(w(2, "a")) + FourierElement::delta(w(2, "a b"));
    auto [py, ny] = positive_part_split(y);
    CHECK(py.support_size() == 2);
    CHECK(ny.is_zero());

    // commutator and its inverse split by the sign of the AB coefficient
    Word c = w(2, "a b a^-1 b^-1");
    FourierElement z = FourierElement::delta(c) + FourierElement::delta(inverse(c));
    auto [pz, nz] = positive_part_split(z);
    CHECK(pz.coefficient(c)(0, 0) == std::complex<double>(1.0, 0.0));
    CHECK(nz.coefficient(inverse(c))(0, 0) == std::complex<double>(1.0, 0.0));

    // the parts always sum back to x
    FourierElement back = pos + neg;
    CHECK(back.coefficient(w(2, "a"))(0, 0) == std::complex<double>(1.0, 0.0));
    CHECK(back.support_size() == 2);
}

TEST_CASE("order sort") {
    std::vector<Word> words = {w(2, "a"), w(2, "a^-1"), Word::identity(2), w(2, "b")};
    auto sorted = order_sort(words);
    CHECK(sorted[0] == w(2, "a^-1"));
    CHECK(sorted[1] == Word::identity(2));
    CHECK(sorted[2] == w(2, "b"));
    CHECK(sorted[3] == w(2, "a"));
}
