#include "lacunae/order.hpp"

#include <algorithm>

#include "lacunae/errors.hpp"
#include "lacunae/magnus.hpp"

namespace lacunae {

std::string relation_name(OrderRelation r) {
    switch (r) {
        case OrderRelation::less: return "less";
        case OrderRelation::equal: return "equal";
        case OrderRelation::greater: return "greater";
        case OrderRelation::undecided: return "undecided";
    }
    return "?";
}

namespace {

// First monomial (degree-lex) where the two series differ, if any.
std::optional<std::pair<Monomial, int>> first_difference(const NCPolynomial& pg,
                                                         const NCPolynomial& ph) {
    auto ig = pg.terms().begin(), eg = pg.terms().end();
    auto ih = ph.terms().begin(), eh = ph.terms().end();
    MonomialDegLex less;
    while (ig != eg || ih != eh) {
        if (ih == eh || (ig != eg && less(ig->first, ih->first))) {
            // Monomial present only in g: its coefficient compares against 0.
            return std::make_pair(ig->first, ig->second > 0 ? 1 : -1);
        }
        if (ig == eg || less(ih->first, ig->first)) {
            // Present only in h: g's implicit 0 compares against it.
            return std::make_pair(ih->first, ih->second > 0 ? -1 : 1);
        }
        if (ig->second != ih->second)
            return std::make_pair(ig->first, ig->second > ih->second ? 1 : -1);
        ++ig;
        ++ih;
    }
    return std::nullopt;
}

}  // namespace

OrderVerdict order_compare(const Word& g, const Word& h, int max_degree) {
    if (g.rank() != h.rank()) throw InputError("rank mismatch in order comparison");
    OrderVerdict verdict;
    if (g == h) {
        verdict.relation = OrderRelation::equal;
        return verdict;
    }
    Word quotient = multiply(inverse(g), h);
    if (quotient.is_identity()) {  // unreachable for normal forms, kept as a guard
        verdict.relation = OrderRelation::equal;
        return verdict;
    }
    if (max_degree <= 0) {
        Integer len = quotient.length();
        max_degree = len > 8 ? (len > 64 ? 64 : len.convert_to<int>()) : 8;
    }
    for (int degree = 1; degree <= max_degree; ++degree) {
        NCPolynomial pg = magnus_embed(g, degree);
        NCPolynomial ph = magnus_embed(h, degree);
        auto diff = first_difference(pg, ph);
        if (diff) {
            verdict.relation = diff->second > 0 ? OrderRelation::greater : OrderRelation::less;
            verdict.deciding_monomial = diff->first;
            verdict.deciding_degree = static_cast<int>(diff->first.size());
            verdict.depth = degree;
            return verdict;
        }
    }
    verdict.relation = OrderRelation::undecided;
    verdict.depth = max_degree;
    return verdict;
}

bool is_positive(const Word& g, int max_degree) {
    OrderVerdict v = order_compare(g, Word::identity(g.rank()), max_degree);
    if (!v.decided())
        throw UndecidedOrderError("order of '" + to_string(g) +
                                      "' vs identity undecided through degree " +
                                      std::to_string(v.depth),
                                  v.depth);
    return v.geq();
}

std::vector<Word> positive_cone_filter(const std::vector<Word>& words, int max_degree) {
    std::vector<Word> out;
    for (const auto& w : words)
        if (is_positive(w, max_degree)) out.push_back(w);
    return out;
}

std::pair<FourierElement, FourierElement> positive_part_split(const FourierElement& x,
                                                              int max_degree) {
    FourierElement pos(x.rank(), x.coeff_dim());
    FourierElement neg(x.rank(), x.coeff_dim());
    for (const auto& [g, c] : x.terms()) {
        if (is_positive(g, max_degree))
            pos.add_term(g, c);
        else
            neg.add_term(g, c);
    }
    return {std::move(pos), std::move(neg)};
}

std::vector<Word> order_sort(std::vector<Word> words, int max_degree) {
    std::stable_sort(words.begin(), words.end(), [max_degree](const Word& a, const Word& b) {
        OrderVerdict v = order_compare(a, b, max_degree);
        if (!v.decided())
            throw UndecidedOrderError("sort comparison of '" + to_string(a) + "' and '" +
                                          to_string(b) + "' undecided",
                                      v.depth);
        return v.relation == OrderRelation::less;
    });
    return words;
}

}  // namespace lacunae
