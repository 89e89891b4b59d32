#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lacunae/rational.hpp"
#include "lacunae/words.hpp"

namespace lacunae {

/// Certificate for one lacunarity test.  delta carries the best feasible
/// constant (psi/integer kinds), n_hat the window-certified lower bound
/// (rudin kind), criterion the matched clause index (prop51 kind).
struct LacunarityCertificate {
    enum class Kind { psi, integer, rudin, prop51 };

    Kind kind = Kind::psi;
    bool pass = false;

    double delta = 0.0;
    std::optional<Rational> delta_rational;  // present when psi is integer-valued

    // psi kind: worst pair per condition.
    std::optional<std::pair<std::size_t, std::size_t>> witness_pair;
    std::string witness_note;

    // rudin kind.
    long long n_hat = 0;
    std::optional<Word> n_hat_witness;  // the window center attaining n_hat

    // prop51 kind.
    int criterion = 0;                  // 1, 2 or 3; 0 on failure
    std::vector<Integer> tested_values; // the integer sequence that decided
};

/// Best feasible delta over a finite sequence: the minimum of the growth
/// ratios psi(h_{k+1})/psi(h_k) - 1 and the separation ratios
/// psi(h_k^-1 h_k') / max(psi(h_k), psi(h_k')).  Fails iff delta <= 0.
/// psi must be nonzero on every element.
LacunarityCertificate psi_lacunary_delta(const LengthFunction& psi,
                                         const std::vector<Word>& sequence);

/// delta = min_n l_{n+1}/l_n over a nonzero integer sequence; pass iff > 1.
LacunarityCertificate integer_lacunary(const std::vector<Integer>& values);

/// #(E ∩ [g, g^2]) under the bi-invariant order; g must be positive.
long long rudin_count(const std::vector<Word>& set, const Word& g, int max_degree = 0);

struct RudinOptions {
    int candidate_length = 6;  // positive words up to this length join the pool
    int max_degree = 0;        // order truncation (0 = default)
};

/// Window-certified lower bound for N(E) = sup_g #(E ∩ [g, g^2]): maximizes
/// the count over E, the positive parts of pairwise quotients, and short
/// positive words.  A genuine supremum over the group is not computable;
/// every report is labeled a lower bound.
LacunarityCertificate rudin_lacunarity_estimate(const std::vector<Word>& set,
                                                const std::vector<Word>& extra_candidates = {},
                                                const RudinOptions& options = {});

/// Rank-2 sufficient criteria, tested in order: (1) J_A values lacunary,
/// (2) all J_A zero and J_B values lacunary, (3) all J_A and J_B zero and
/// J_AB values lacunary.
LacunarityCertificate prop51_check(const std::vector<Word>& sequence);

}  // namespace lacunae
