#pragma once

#include <string>
#include <vector>

#include <Eigen/Dense>

#include "lacunae/words.hpp"

namespace lacunae {

/// Result of testing sum conj(a_g) a_h psi(g^-1 h) <= 0 over mean-zero
/// coefficient vectors on a finite word set.
struct GramReport {
    std::vector<Word> test_set;
    int matrix_dim = 0;
    double max_constrained_eigenvalue = 0.0;
    double tolerance = 0.0;
    bool symmetric_ok = true;         // psi(g) == psi(g^-1) held on the set
    bool zero_iff_identity_ok = true; // psi vanishes on the set only at e
    std::vector<std::string> structural_notes;
    bool pass = false;                // symmetric_ok && eigenvalue <= tolerance
};

/// Builds M[g,h] = psi(g^-1 h), restricts to the mean-zero hyperplane via a
/// Householder basis and reports the largest eigenvalue of the restriction.
/// tolerance <= 0 selects the scale-aware default 1e-9 * max|M|.
GramReport cnd_gram_test(const LengthFunction& psi, const std::vector<Word>& words,
                         double tolerance = 0.0);

struct SchoenbergEntry {
    double t = 0.0;
    double min_eigenvalue = 0.0;
    bool pass = false;
};

struct SchoenbergReport {
    std::vector<SchoenbergEntry> entries;
    double tolerance = 0.0;
    bool pass = false;
};

/// Checks [e^{-t psi(g^-1 h)}] is positive semidefinite (min eigenvalue >=
/// -tolerance) at every grid point.
SchoenbergReport schoenberg_test(const LengthFunction& psi, const std::vector<Word>& words,
                                 const std::vector<double>& t_grid, double tolerance = 1e-9);

}  // namespace lacunae
