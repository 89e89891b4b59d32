#include "lacunae/norms.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include "lacunae/errors.hpp"

namespace lacunae {

BallIndex::BallIndex(int rank, int radius, std::size_t max_basis) : rank(rank), radius(radius) {
    if (radius < 0) throw InputError("compression radius must be >= 0");
    basis = ball(rank, radius, max_basis);
    int idx = 0;
    for (const auto& w : basis) index.emplace(w, idx++);
}

CompressedOperator::CompressedOperator(const FourierElement& x, BallIndexPtr ball_index)
    : radius_(ball_index->radius), dim_(x.coeff_dim()), ball_(std::move(ball_index)) {
    if (ball_->rank != x.rank()) throw InputError("ball rank does not match the element");
    for (const auto& [g, c] : x.terms()) {
        Term term;
        term.coeff = c;
        for (int j = 0; j < static_cast<int>(ball_->basis.size()); ++j) {
            Word gw = multiply(g, ball_->basis[static_cast<std::size_t>(j)]);
            auto it = ball_->index.find(gw);
            if (it != ball_->index.end()) term.moves.emplace_back(j, it->second);
        }
        if (!term.moves.empty()) terms_.push_back(std::move(term));
    }
}

CompressedOperator::CompressedOperator(const FourierElement& x, int radius,
                                       std::size_t max_basis)
    : CompressedOperator(x, std::make_shared<const BallIndex>(x.rank(), radius, max_basis)) {}

CompressedOperator compress(const FourierElement& x, int radius, std::size_t max_basis) {
    return CompressedOperator(x, radius, max_basis);
}

Eigen::Index CompressedOperator::basis_index(const Word& w) const {
    auto it = ball_->index.find(w);
    return it == ball_->index.end() ? Eigen::Index(-1) : Eigen::Index(it->second);
}

void CompressedOperator::apply(const Eigen::VectorXcd& in, Eigen::VectorXcd& out) const {
    out.setZero(dimension());
    const int n = dim_;
    for (const auto& term : terms_) {
        for (const auto& [src, dst] : term.moves) {
            auto in_block = in.segment(static_cast<Eigen::Index>(src) * n, n);
            out.segment(static_cast<Eigen::Index>(dst) * n, n).noalias() +=
                term.coeff * in_block;
        }
    }
}

void CompressedOperator::apply_adjoint(const Eigen::VectorXcd& in, Eigen::VectorXcd& out) const {
    out.setZero(dimension());
    const int n = dim_;
    for (const auto& term : terms_) {
        const Coefficient adj = term.coeff.adjoint();
        for (const auto& [src, dst] : term.moves) {
            auto in_block = in.segment(static_cast<Eigen::Index>(dst) * n, n);
            out.segment(static_cast<Eigen::Index>(src) * n, n).noalias() += adj * in_block;
        }
    }
}

Eigen::MatrixXcd CompressedOperator::to_dense() const {
    const Eigen::Index d = dimension();
    if (d > 8192) throw BudgetError("dense materialization of a " + std::to_string(d) +
                                    "-dimensional compression");
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(d, d);
    const int n = dim_;
    for (const auto& term : terms_)
        for (const auto& [src, dst] : term.moves)
            m.block(static_cast<Eigen::Index>(dst) * n, static_cast<Eigen::Index>(src) * n, n, n) +=
                term.coeff;
    return m;
}

NormEstimate operator_norm_estimate(const FourierElement& x, int radius,
                                    const EstimatorOptions& options) {
    return operator_norm_estimate(
        x, std::make_shared<const BallIndex>(x.rank(), radius, options.max_basis), options);
}

NormEstimate operator_norm_estimate(const FourierElement& x, BallIndexPtr ball,
                                    const EstimatorOptions& options) {
    const int radius = ball->radius;
    CompressedOperator op(x, std::move(ball));
    NormEstimate estimate;
    estimate.radius = radius;
    const Eigen::Index d = op.dimension();
    if (x.is_zero() || d == 0) {
        estimate.converged = true;
        return estimate;
    }

    std::mt19937_64 rng(options.seed + 0x9e3779b97f4a7c15ULL);
    std::normal_distribution<double> gauss(0.0, 1.0);
    Eigen::VectorXcd v(d);
    for (Eigen::Index i = 0; i < d; ++i) v(i) = std::complex<double>(gauss(rng), gauss(rng));
    v.normalize();

    Eigen::VectorXcd w(d), u(d);
    double previous = 0.0;
    for (int iter = 1; iter <= options.max_iterations; ++iter) {
        op.apply(v, w);
        double sigma2 = w.squaredNorm();  // <x*x v, v> for unit v
        if (sigma2 == 0.0) {
            estimate.value = 0.0;
            estimate.iterations = iter;
            estimate.converged = true;
            return estimate;
        }
        op.apply_adjoint(w, u);
        double sigma = std::sqrt(sigma2);
        estimate.value = sigma;
        estimate.iterations = iter;
        estimate.residual = std::abs(sigma - previous) / sigma;
        if (iter > 1 && estimate.residual <= options.tolerance) {
            estimate.converged = true;
            return estimate;
        }
        previous = sigma;
        v = u / u.norm();
    }
    throw ConvergenceError("operator norm power iteration did not reach tolerance " +
                               std::to_string(options.tolerance) + "; last estimate " +
                               std::to_string(estimate.value),
                           estimate.value);
}

namespace {

struct LanczosQuadrature {
    std::vector<double> nodes;
    std::vector<double> weights;
    int steps = 0;
};

// Lanczos with full reorthogonalization, started from a unit vector; returns
// the Gauss quadrature of the spectral measure of that vector.
LanczosQuadrature lanczos_quadrature(const CompressedOperator& op, const Eigen::VectorXcd& start,
                                     int max_steps) {
    const Eigen::Index d = op.dimension();
    std::vector<Eigen::VectorXcd> krylov;
    std::vector<double> alpha, beta;  // beta[i] couples step i and i+1
    Eigen::VectorXcd q = start;
    Eigen::VectorXcd w(d);
    int steps = std::min<int>(max_steps, static_cast<int>(d));
    for (int j = 0; j < steps; ++j) {
        krylov.push_back(q);
        op.apply(q, w);
        double a = std::real(q.dot(w));
        alpha.push_back(a);
        w -= a * q;
        if (j > 0) w -= beta[static_cast<std::size_t>(j - 1)] * krylov[static_cast<std::size_t>(j - 1)];
        for (const auto& prev : krylov) w -= prev.dot(w) * prev;  // reorthogonalize
        double b = w.norm();
        if (b < 1e-13 * std::max(1.0, std::abs(a))) break;  // invariant subspace found
        beta.push_back(b);
        q = w / b;
    }

    const int m = static_cast<int>(alpha.size());
    Eigen::MatrixXd tri = Eigen::MatrixXd::Zero(m, m);
    for (int i = 0; i < m; ++i) {
        tri(i, i) = alpha[static_cast<std::size_t>(i)];
        if (i + 1 < m) {
            tri(i, i + 1) = beta[static_cast<std::size_t>(i)];
            tri(i + 1, i) = beta[static_cast<std::size_t>(i)];
        }
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(tri);
    LanczosQuadrature quad;
    quad.steps = m;
    for (int i = 0; i < m; ++i) {
        quad.nodes.push_back(solver.eigenvalues()(i));
        double w0 = solver.eigenvectors()(0, i);
        quad.weights.push_back(w0 * w0);
    }
    return quad;
}

}  // namespace

SpectralTraceReport spectral_trace(const std::function<double(double)>& f,
                                   const FourierElement& y, int radius,
                                   const EstimatorOptions& options) {
    SpectralTraceReport report;
    report.radius = radius;
    if (y.is_zero()) {
        report.exactness_horizon = std::numeric_limits<long long>::max();
        return report;
    }
    Integer r_y = y.support_radius();
    if (r_y == 0) {
        report.exactness_horizon = std::numeric_limits<long long>::max();
    } else if (Integer(radius) < r_y) {
        // Clipped compression: still positive, still a quadrature of a state,
        // but no moment beyond the zeroth is exact.  The horizon says so.
        report.exactness_horizon = 0;
    } else {
        report.exactness_horizon = ((Integer(radius) - r_y) / r_y).convert_to<long long>();
    }

    CompressedOperator op(y, radius, options.max_basis);
    const int n = y.coeff_dim();
    const Eigen::Index e_index = op.basis_index(Word::identity(y.rank()));
    double total = 0.0;
    double min_ritz = 0.0;
    double max_ritz = 0.0;
    int steps_used = 0;
    for (int i = 0; i < n; ++i) {
        Eigen::VectorXcd start = Eigen::VectorXcd::Zero(op.dimension());
        start(e_index * n + i) = 1.0;
        LanczosQuadrature quad = lanczos_quadrature(op, start, options.krylov_steps);
        steps_used = std::max(steps_used, quad.steps);
        for (std::size_t j = 0; j < quad.nodes.size(); ++j) {
            min_ritz = std::min(min_ritz, quad.nodes[j]);
            max_ritz = std::max(max_ritz, quad.nodes[j]);
        }
        for (std::size_t j = 0; j < quad.nodes.size(); ++j)
            total += quad.weights[j] * f(std::max(quad.nodes[j], 0.0));
    }
    double scale = std::max(std::abs(max_ritz), 1e-300);
    if (min_ritz < -options.positivity_tolerance * scale)
        throw PositivityError("operand is not positive: Ritz value " + std::to_string(min_ritz) +
                              " below -" + std::to_string(options.positivity_tolerance) +
                              " * scale");
    report.value = total / n;
    report.steps = steps_used;
    report.min_ritz_value = min_ritz;
    return report;
}

SupSearchResult maximize_over_t(const std::function<double(double)>& f,
                                const std::vector<double>& grid,
                                const std::vector<double>& extra_seeds,
                                int refine_iterations) {
    if (grid.empty()) throw InputError("sup search needs a nonempty grid");
    SupSearchResult result;
    result.grid_values.reserve(grid.size());
    std::size_t best = 0;
    for (std::size_t i = 0; i < grid.size(); ++i) {
        result.grid_values.push_back(f(grid[i]));
        if (result.grid_values[i] > result.grid_values[best]) best = i;
    }
    result.argmax = grid[best];
    result.value = result.grid_values[best];
    if (result.argmax <= 0.0) return result;  // degenerate grid {0}

    // Golden-section in log t around a bracket.
    auto refine = [&](double lo, double hi) {
        if (!(lo > 0.0) || !(hi > lo)) return;
        const double inv_phi = 0.6180339887498949;
        double a = std::log(lo), b = std::log(hi);
        double c = b - inv_phi * (b - a);
        double d = a + inv_phi * (b - a);
        double fc = f(std::exp(c)), fd = f(std::exp(d));
        for (int i = 0; i < refine_iterations && (b - a) > 1e-14; ++i) {
            if (fc > fd) {
                b = d;
                d = c;
                fd = fc;
                c = b - inv_phi * (b - a);
                fc = f(std::exp(c));
            } else {
                a = c;
                c = d;
                fc = fd;
                d = a + inv_phi * (b - a);
                fd = f(std::exp(d));
            }
        }
        double mid = std::exp(0.5 * (a + b));
        double fm = f(mid);
        if (fm > result.value) {
            result.value = fm;
            result.argmax = mid;
        }
    };

    auto bracket_around = [&](double t) {
        // enclosing grid points (the grid is ascending), or +-2x off-grid
        double lo = 0.0, hi = 0.0;
        for (double g : grid) {
            if (g < t) {
                lo = g;
            } else {
                hi = g;
                break;
            }
        }
        if (!(lo > 0.0)) lo = t * 0.5;
        if (!(hi > lo)) hi = t * 2.0;
        refine(lo, hi);
    };

    // Refine around the best grid point.
    {
        double lo = best > 0 ? grid[best - 1] : grid[best] * 0.5;
        double hi = best + 1 < grid.size() ? grid[best + 1] : grid[best] * 2.0;
        refine(lo, hi);
    }
    for (double t : extra_seeds)
        if (t > 0.0) bracket_around(t);
    return result;
}

BmoEstimate bmo_norm_estimate(const FourierElement& x, const LengthFunction& psi,
                              const std::vector<double>& t_grid, int radius,
                              const EstimatorOptions& options) {
    BmoEstimate estimate;
    estimate.radius = radius;
    estimate.t_grid = t_grid;
    if (x.is_zero()) return estimate;

    // One refinement seed per term scale 1/psi(g): each term's transition
    // region gets probed even when the grid is coarse there.
    std::vector<double> seeds;
    for (const auto& [g, c] : x.terms()) {
        double v = psi(g);
        if (v > 0.0) seeds.push_back(std::log(3.0) / v);
    }

    auto trace_at = [&](double t) {
        return std::real(bmo_defect(x, psi, t).trace());
    };
    SupSearchResult trace_sup = maximize_over_t(trace_at, t_grid, seeds);
    estimate.trace_bound = std::sqrt(std::max(trace_sup.value, 0.0));
    estimate.trace_argmax_t = trace_sup.argmax;

    auto shared_ball = std::make_shared<const BallIndex>(x.rank(), radius, options.max_basis);
    auto op_at = [&](double t) {
        return operator_norm_estimate(bmo_defect(x, psi, t), shared_ball, options).value;
    };
    std::vector<double> op_seeds = {trace_sup.argmax};
    SupSearchResult op_sup = maximize_over_t(op_at, t_grid, op_seeds, 24);
    // The defect is positive, so its norm dominates the identity-state value;
    // guard against estimator shortfall at the trace argmax.
    double op_value = std::max(op_sup.value, trace_sup.value);
    estimate.operator_bound = std::sqrt(std::max(op_value, 0.0));
    estimate.operator_argmax_t = op_sup.argmax;
    return estimate;
}

SpectralTraceReport h1_norm_estimate(const FourierElement& x, const LengthFunction& psi,
                                     int radius, const EstimatorOptions& options) {
    FourierElement integrand = h1_integrand(x, psi);
    return spectral_trace([](double v) { return std::sqrt(v); }, integrand, radius, options);
}

}  // namespace lacunae
