#include "lacunae/cnd.hpp"

#include <cmath>

#include "lacunae/errors.hpp"

namespace lacunae {

namespace {

Eigen::MatrixXd gram_matrix(const LengthFunction& psi, const std::vector<Word>& words) {
    const auto n = static_cast<Eigen::Index>(words.size());
    Eigen::MatrixXd m(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        const Word inv = inverse(words[static_cast<std::size_t>(i)]);
        for (Eigen::Index j = 0; j < n; ++j)
            m(i, j) = psi(multiply(inv, words[static_cast<std::size_t>(j)]));
    }
    return m;
}

// Orthonormal basis of the mean-zero hyperplane: the trailing n-1 columns of
// the Householder reflection sending ones/sqrt(n) to e_1.
Eigen::MatrixXd mean_zero_basis(Eigen::Index n) {
    Eigen::VectorXd u = Eigen::VectorXd::Ones(n) / std::sqrt(static_cast<double>(n));
    Eigen::VectorXd v = u;
    v(0) -= 1.0;
    Eigen::MatrixXd h = Eigen::MatrixXd::Identity(n, n);
    double norm2 = v.squaredNorm();
    if (norm2 > 0) h -= (2.0 / norm2) * (v * v.transpose());
    return h.rightCols(n - 1);
}

}  // namespace

GramReport cnd_gram_test(const LengthFunction& psi, const std::vector<Word>& words,
                         double tolerance) {
    if (words.empty()) throw InputError("conditional negativity test needs a nonempty word set");
    GramReport report;
    report.test_set = words;
    report.matrix_dim = static_cast<int>(words.size());

    for (const auto& g : words) {
        double forward = psi(g);
        double backward = psi(inverse(g));
        if (std::abs(forward - backward) > 1e-12 * std::max(1.0, std::abs(forward))) {
            report.symmetric_ok = false;
            report.structural_notes.push_back("psi('" + to_string(g) + "') = " +
                                              std::to_string(forward) + " but psi(inverse) = " +
                                              std::to_string(backward));
        }
        if (g.is_identity()) {
            if (forward != 0.0) {
                report.zero_iff_identity_ok = false;
                report.structural_notes.push_back("psi(e) != 0");
            }
        } else if (forward == 0.0) {
            report.zero_iff_identity_ok = false;
            report.structural_notes.push_back("psi vanishes at '" + to_string(g) + "' != e");
        }
    }
    if (!report.symmetric_ok) {
        report.pass = false;
        return report;
    }

    Eigen::MatrixXd m = gram_matrix(psi, words);
    m = 0.5 * (m + m.transpose());  // kill last-bit asymmetry before eigensolving
    double scale = m.cwiseAbs().maxCoeff();
    report.tolerance = tolerance > 0 ? tolerance : 1e-9 * std::max(scale, 1.0);

    if (words.size() == 1) {
        // Mean-zero hyperplane is trivial; the form is vacuously nonpositive.
        report.max_constrained_eigenvalue = 0.0;
        report.pass = true;
        return report;
    }

    Eigen::MatrixXd basis = mean_zero_basis(m.rows());
    Eigen::MatrixXd constrained = basis.transpose() * m * basis;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(constrained, Eigen::EigenvaluesOnly);
    report.max_constrained_eigenvalue = solver.eigenvalues().maxCoeff();
    report.pass = report.max_constrained_eigenvalue <= report.tolerance;
    return report;
}

SchoenbergReport schoenberg_test(const LengthFunction& psi, const std::vector<Word>& words,
                                 const std::vector<double>& t_grid, double tolerance) {
    if (words.empty()) throw InputError("Schoenberg test needs a nonempty word set");
    SchoenbergReport report;
    report.tolerance = tolerance;
    report.pass = true;
    Eigen::MatrixXd m = gram_matrix(psi, words);
    m = 0.5 * (m + m.transpose());
    for (double t : t_grid) {
        if (t <= 0) throw InputError("Schoenberg grid needs positive t");
        Eigen::MatrixXd k = (-t * m).array().exp().matrix();
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(k, Eigen::EigenvaluesOnly);
        SchoenbergEntry entry;
        entry.t = t;
        entry.min_eigenvalue = solver.eigenvalues().minCoeff();
        entry.pass = entry.min_eigenvalue >= -tolerance;
        report.pass = report.pass && entry.pass;
        report.entries.push_back(entry);
    }
    return report;
}

}  // namespace lacunae
