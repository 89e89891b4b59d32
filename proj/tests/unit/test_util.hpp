#pragma once

#include <random>
#include <vector>

#include "lacunae/words.hpp"

namespace lacunae::testing {

/// Uniform random reduced word of exactly the given letter length.
inline Word random_word(std::mt19937_64& rng, int rank, int length) {
    std::uniform_int_distribution<int> letter(0, 2 * rank - 1);
    std::vector<Syllable> syls;
    int last_letter = -1;
    for (int i = 0; i < length; ++i) {
        int pick;
        do {
            pick = letter(rng);
        } while (last_letter >= 0 && (pick ^ 1) == last_letter);  // no immediate inverse
        last_letter = pick;
        int gen = pick / 2 + 1;
        Integer exp = (pick % 2 == 0) ? 1 : -1;
        if (!syls.empty() && syls.back().gen == gen)
            syls.back().exp += exp;
        else
            syls.push_back(Syllable{gen, exp});
    }
    return Word(rank, std::move(syls));
}

/// Random reduced word with length uniform in [0, max_length].
inline Word random_word_up_to(std::mt19937_64& rng, int rank, int max_length) {
    std::uniform_int_distribution<int> len(0, max_length);
    return random_word(rng, rank, len(rng));
}

}  // namespace lacunae::testing
