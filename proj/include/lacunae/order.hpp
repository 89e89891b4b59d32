#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lacunae/fourier.hpp"
#include "lacunae/ncpoly.hpp"
#include "lacunae/words.hpp"

namespace lacunae {

enum class OrderRelation { less, equal, greater, undecided };

/// Outcome of one dictionary comparison of two embedded series.  "equal"
/// happens only for identical normal forms; "undecided" records the
/// truncation depth at which the comparison gave up.
struct OrderVerdict {
    OrderRelation relation = OrderRelation::undecided;
    std::optional<Monomial> deciding_monomial;
    std::optional<int> deciding_degree;
    int depth = 0;  // depth reached (deciding degree, or max when undecided)

    bool decided() const { return relation != OrderRelation::undecided; }
    bool geq() const {
        return relation == OrderRelation::greater || relation == OrderRelation::equal;
    }
};

std::string relation_name(OrderRelation r);

/// Compares the embedded series by iterative degree deepening: monomials are
/// scanned degree-ascending, lexicographically with A before B inside each
/// degree, and the first differing coefficient decides.  max_degree <= 0
/// selects the default max(reduced length of g^-1 h, 8).
OrderVerdict order_compare(const Word& g, const Word& h, int max_degree = 0);

/// g >= e under the order; throws UndecidedOrderError when the comparison
/// runs out of degrees.
bool is_positive(const Word& g, int max_degree = 0);

std::vector<Word> positive_cone_filter(const std::vector<Word>& words, int max_degree = 0);

/// Splits x into the parts supported on {g >= e} and {g < e}; the two parts
/// sum back to x exactly.
std::pair<FourierElement, FourierElement> positive_part_split(const FourierElement& x,
                                                              int max_degree = 0);

/// Sorts words ascending under the order (throws on undecided pairs).
std::vector<Word> order_sort(std::vector<Word> words, int max_degree = 0);

}  // namespace lacunae
