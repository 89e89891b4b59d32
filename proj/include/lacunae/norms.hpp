#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "lacunae/fourier.hpp"
#include "lacunae/words.hpp"

namespace lacunae {

/// Enumerated ball with its index map, shareable across compressions so a
/// t-grid of defects pays for the enumeration once.
struct BallIndex {
    BallIndex(int rank, int radius, std::size_t max_basis = 2'000'000);

    int rank;
    int radius;
    std::vector<Word> basis;
    std::map<Word, int, WordCanonicalLess> index;
};

using BallIndexPtr = std::shared_ptr<const BallIndex>;

/// Left-multiplication by a Fourier element compressed to the ball of the
/// given radius: the matrix of P_R λ(x) P_R on ℓ²(B_R) ⊗ C^n.  Entry
/// ((w', i), (w, j)) is sum over {g : g w = w'} of (c_g)_{i,j}.  Kept as a
/// sparse move table per support word; multiplication is matrix-free.
class CompressedOperator {
public:
    CompressedOperator(const FourierElement& x, int radius, std::size_t max_basis = 2'000'000);
    CompressedOperator(const FourierElement& x, BallIndexPtr ball);

    int radius() const { return radius_; }
    int coeff_dim() const { return dim_; }
    const std::vector<Word>& basis() const { return ball_->basis; }
    Eigen::Index dimension() const {
        return static_cast<Eigen::Index>(ball_->basis.size()) * dim_;
    }

    void apply(const Eigen::VectorXcd& in, Eigen::VectorXcd& out) const;
    void apply_adjoint(const Eigen::VectorXcd& in, Eigen::VectorXcd& out) const;

    /// Dense materialization for tests and small balls.
    Eigen::MatrixXcd to_dense() const;

    /// Index of a word in the basis, or -1 when outside the ball.
    Eigen::Index basis_index(const Word& w) const;

private:
    struct Term {
        Coefficient coeff;
        std::vector<std::pair<int, int>> moves;  // (source word idx, target word idx)
    };

    int radius_;
    int dim_;
    BallIndexPtr ball_;
    std::vector<Term> terms_;
};

CompressedOperator compress(const FourierElement& x, int radius,
                            std::size_t max_basis = 2'000'000);

struct NormEstimate {
    double value = 0.0;
    int radius = 0;
    int iterations = 0;
    double residual = 0.0;  // last relative change of the estimate
    bool converged = false;
};

struct EstimatorOptions {
    double tolerance = 1e-6;
    int max_iterations = 20000;
    int krylov_steps = 64;
    std::uint64_t seed = 0;
    double positivity_tolerance = 1e-9;
    std::size_t max_basis = 2'000'000;  // ball-size budget for compressions
};

/// Largest singular value of the compression, via power iteration on x*x;
/// a certified lower bound for the true operator norm, nondecreasing in R.
/// Throws ConvergenceError (carrying the last iterate) if the tolerance is
/// not reached.
NormEstimate operator_norm_estimate(const FourierElement& x, int radius,
                                    const EstimatorOptions& options = {});
NormEstimate operator_norm_estimate(const FourierElement& x, BallIndexPtr ball,
                                    const EstimatorOptions& options = {});

struct SpectralTraceReport {
    double value = 0.0;
    int radius = 0;
    int steps = 0;
    /// Moments of the compression against the delta-at-identity state are
    /// exact up to this order; -1 when the horizon is vacuous, a large
    /// sentinel when the operand is a multiple of the identity.
    long long exactness_horizon = 0;
    double min_ritz_value = 0.0;
};

/// Estimates (normalized trace ⊗ tau) f(y) for a positive y: Lanczos
/// quadrature on the compression, started at the identity-word basis
/// vectors and averaged over the matrix factor.  Ritz values below
/// -positivity_tolerance * scale raise PositivityError.
SpectralTraceReport spectral_trace(const std::function<double(double)>& f,
                                   const FourierElement& y, int radius,
                                   const EstimatorOptions& options = {});

struct SupSearchResult {
    double argmax = 0.0;
    double value = 0.0;
    std::vector<double> grid_values;
};

/// Maximizes a smooth function of t over a grid, then refines around the
/// best bracket (and any extra seeds) by golden-section in log t.
SupSearchResult maximize_over_t(const std::function<double(double)>& f,
                                const std::vector<double>& grid,
                                const std::vector<double>& extra_seeds = {},
                                int refine_iterations = 120);

struct BmoEstimate {
    double trace_bound = 0.0;     // sqrt of max_t tau⊗tr of the defect (exact per t)
    double operator_bound = 0.0;  // sqrt of max_t compressed operator norm
    double trace_argmax_t = 0.0;
    double operator_argmax_t = 0.0;
    int radius = 0;
    std::vector<double> t_grid;
};

/// Both lower bounds for the semigroup BMO_c norm: the state bound (exact
/// per t) and the compressed operator bound.  The trace argmax t joins the
/// operator-route candidates so the state bound never exceeds the operator
/// bound.
BmoEstimate bmo_norm_estimate(const FourierElement& x, const LengthFunction& psi,
                              const std::vector<double>& t_grid, int radius,
                              const EstimatorOptions& options = {});

/// (normalized trace ⊗ tau) of the square root of the H^1 integrand.
SpectralTraceReport h1_norm_estimate(const FourierElement& x, const LengthFunction& psi,
                                     int radius, const EstimatorOptions& options = {});

}  // namespace lacunae
