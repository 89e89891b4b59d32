#include "lacunae/paley.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "lacunae/errors.hpp"
#include "lacunae/magnus.hpp"
#include "lacunae/order.hpp"

namespace lacunae {

namespace {

// Operator norm of a small dense matrix (largest singular value).  Jacobi
// SVD leaves diagonal matrices untouched, which keeps the matrix-unit
// examples exact.
double dense_operator_norm(const Coefficient& m) {
    if (m.rows() == 1 && m.cols() == 1) return std::abs(m(0, 0));
    Eigen::JacobiSVD<Coefficient> svd(m);
    return svd.singularValues()(0);
}

// Normalized trace of the positive square root of a PSD matrix.
double normalized_trace_sqrt(const Coefficient& m) {
    Eigen::SelfAdjointEigenSolver<Coefficient> solver(m);
    double total = 0.0;
    for (Eigen::Index i = 0; i < solver.eigenvalues().size(); ++i)
        total += std::sqrt(std::max(solver.eigenvalues()(i), 0.0));
    return total / static_cast<double>(m.rows());
}

void check_sequence_coefficients(const std::vector<Word>& sequence,
                                 const std::vector<Coefficient>& coefficients) {
    if (sequence.size() != coefficients.size())
        throw InputError("sequence and coefficient counts differ");
    if (sequence.empty()) return;
    const int rank = sequence.front().rank();
    const Eigen::Index dim = coefficients.front().rows();
    for (const auto& h : sequence)
        if (h.rank() != rank) throw InputError("mixed ranks in sequence");
    for (const auto& c : coefficients)
        if (c.rows() != dim || c.cols() != dim)
            throw InputError("mixed coefficient dimensions");
}

FourierElement assemble(const std::vector<Word>& sequence,
                        const std::vector<Coefficient>& coefficients) {
    const int rank = sequence.empty() ? 1 : sequence.front().rank();
    const int dim = sequence.empty() ? 1 : static_cast<int>(coefficients.front().rows());
    FourierElement x(rank, dim);
    for (std::size_t k = 0; k < sequence.size(); ++k)
        x.add_term(sequence[k], coefficients[k]);
    return x;
}

}  // namespace

PaleyReport theorem1_check(const std::vector<Word>& sequence,
                           const std::vector<Coefficient>& coefficients,
                           const LengthFunction& psi, const PaleyConfig& config) {
    check_sequence_coefficients(sequence, coefficients);
    PaleyReport report;
    if (sequence.empty()) {
        report.pass = true;
        report.upper_bmo_ok = report.upper_h1_ok = report.lower_floor_ok = true;
        report.note = "empty sequence: all quantities vanish";
        return report;
    }

    report.lacunarity = psi_lacunary_delta(psi, sequence);
    if (!report.lacunarity.pass) {
        report.note = "lacunarity certificate failed; analytic checks skipped";
        return report;
    }
    report.delta = report.lacunarity.delta;
    report.c_delta_value = c_delta(report.delta);

    const int dim = static_cast<int>(coefficients.front().rows());
    Coefficient column = Coefficient::Zero(dim, dim);
    Coefficient row = Coefficient::Zero(dim, dim);
    double max_term_trace = 0.0;
    for (const auto& c : coefficients) {
        column += c.adjoint() * c;
        row += c * c.adjoint();
        max_term_trace = std::max(max_term_trace,
                                  std::real((c.adjoint() * c).trace()) / dim);
    }
    report.coeff_column_norm = dense_operator_norm(column);
    report.coeff_row_norm = dense_operator_norm(row);
    report.coeff_column_trace = std::real(column.trace()) / dim;

    FourierElement x = assemble(sequence, coefficients);
    std::vector<double> grid = default_t_grid(x, psi, config.t_grid);
    report.bmo = bmo_norm_estimate(x, psi, grid, config.radius, config.estimator);
    report.h1 = h1_norm_estimate(x, psi, config.radius, config.estimator);

    double bmo_sq = std::max(report.bmo.operator_bound, report.bmo.trace_bound);
    bmo_sq *= bmo_sq;
    report.upper_bmo_ok =
        bmo_sq <= report.c_delta_value * report.coeff_column_norm + config.floor_slack;
    report.upper_h1_ok =
        report.h1.value <= 0.5 * std::sqrt(report.coeff_column_trace) + config.h1_slack;
    double floor = (4.0 / 27.0) * max_term_trace;
    report.lower_floor_ok =
        report.bmo.trace_bound * report.bmo.trace_bound >= floor - config.floor_slack;
    report.pass = report.upper_bmo_ok && report.upper_h1_ok && report.lower_floor_ok;
    return report;
}

Lambda4Report lambda4_check(const std::vector<Word>& sequence,
                            const std::vector<Coefficient>& coefficients,
                            const LengthFunction& psi, std::size_t moment_budget) {
    check_sequence_coefficients(sequence, coefficients);
    Lambda4Report report;
    if (sequence.empty()) {
        report.pass = report.upper_ok = report.l2_ok = true;
        report.note = "empty sequence";
        return report;
    }
    report.lacunarity = psi_lacunary_delta(psi, sequence);
    if (!report.lacunarity.pass) {
        report.note = "lacunarity certificate failed";
        return report;
    }
    report.delta = report.lacunarity.delta;
    report.c_delta_value = c_delta(report.delta);

    FourierElement x = assemble(sequence, coefficients);
    const int dim = x.coeff_dim();
    report.l4_norm = std::pow(std::real(trace_moment(x, 2, moment_budget)), 0.25);
    double l2_sq = 0.0;
    Coefficient column = Coefficient::Zero(dim, dim);
    Coefficient row = Coefficient::Zero(dim, dim);
    for (const auto& c : coefficients) {
        l2_sq += std::real((c.adjoint() * c).trace()) / dim;
        column += c.adjoint() * c;
        row += c * c.adjoint();
    }
    report.l2_norm = std::sqrt(l2_sq);
    // ||(M)^{1/2}||_{S^4} = (tr M^2)^{1/4} for PSD M, unnormalized trace.
    report.column_s4 = std::pow(std::real((column * column).trace()), 0.25);
    report.row_s4 = std::pow(std::real((row * row).trace()), 0.25);
    report.upper_bound = std::pow(report.c_delta_value, 0.25) * 4.0 *
                         std::max(report.column_s4, report.row_s4);
    report.upper_ok = report.l4_norm <= report.upper_bound + 1e-9;
    report.l2_ok = report.l4_norm >= report.l2_norm - 1e-9;
    report.pass = report.upper_ok && report.l2_ok;
    return report;
}

SplitReport paley_split(const FourierElement& y, const FourierElement& z,
                        const std::vector<Word>& targets, int max_degree) {
    if (y.rank() != z.rank() || y.coeff_dim() != z.coeff_dim())
        throw InputError("split factors must share rank and coefficient dimension");
    const int dim = y.coeff_dim();
    for (const auto& [g, c] : y.terms())
        if (!is_positive(g, max_degree))
            throw InputError("left factor supported at negative word '" + to_string(g) + "'");
    for (const auto& [g, c] : z.terms())
        if (!is_positive(g, max_degree))
            throw InputError("right factor supported at negative word '" + to_string(g) + "'");
    for (const auto& g : targets)
        if (!is_positive(g, max_degree))
            throw InputError("target '" + to_string(g) + "' is not positive");

    SplitReport report;
    FourierElement product = fmultiply(y, z);
    std::set<Word, WordCanonicalLess> centers;

    for (const auto& gi : targets) {
        Coefficient a = Coefficient::Zero(dim, dim);
        Coefficient b = Coefficient::Zero(dim, dim);
        for (const auto& [h, yh] : y.terms()) {
            // contributes only when h <= g_i and z has mass at h^-1 g_i
            OrderVerdict h_le_gi = order_compare(h, gi, max_degree);
            if (!h_le_gi.decided())
                throw UndecidedOrderError("split window comparison undecided", h_le_gi.depth);
            if (h_le_gi.relation == OrderRelation::greater) continue;
            Word rest = multiply(inverse(h), gi);
            auto zt = z.terms().find(rest);
            if (zt == z.terms().end()) continue;
            Word h2 = multiply(h, h);
            OrderVerdict h2_le_gi = order_compare(h2, gi, max_degree);
            if (!h2_le_gi.decided())
                throw UndecidedOrderError("split window comparison undecided", h2_le_gi.depth);
            if (h2_le_gi.relation == OrderRelation::greater) {
                a += yh * zt->second;  // g_i < h^2
                centers.insert(h);     // g_i lies in the window [h, h^2]
            } else {
                b += yh * zt->second;  // h^2 <= g_i
                centers.insert(rest);  // g_i lies in the window [h^-1 g_i, ...]
            }
        }
        report.a_parts.push_back(a);
        report.b_parts.push_back(b);
        Coefficient target_coeff = product.coefficient(gi);
        Coefficient residual = a + b - target_coeff;
        report.reconstruction_residual =
            std::max(report.reconstruction_residual, residual.cwiseAbs().maxCoeff());
    }

    report.window_count = 0;
    for (const auto& g : centers)
        report.window_count = std::max(report.window_count, rudin_count(targets, g, max_degree));

    Coefficient row_sum = Coefficient::Zero(dim, dim);
    Coefficient col_sum = Coefficient::Zero(dim, dim);
    for (const auto& a : report.a_parts) row_sum += a * a.adjoint();
    for (const auto& b : report.b_parts) col_sum += b.adjoint() * b;
    report.a_row_norm = normalized_trace_sqrt(row_sum);
    report.b_column_norm = normalized_trace_sqrt(col_sum);

    double y2 = std::sqrt(std::real(trace_moment(y, 1)));
    double z2 = std::sqrt(std::real(trace_moment(z, 1)));
    report.l2_product = y2 * z2;
    double bound = std::sqrt(static_cast<double>(report.window_count)) * report.l2_product;
    report.row_bound_ok = report.a_row_norm <= bound + 1e-9;
    report.column_bound_ok = report.b_column_norm <= bound + 1e-9;
    // Exact inputs reconstruct bit-exactly; floating inputs may differ by
    // summation order, so the verdict allows rounding while the raw residual
    // stays in the report.
    double scale = 1.0;
    for (const auto& a : report.a_parts) scale = std::max(scale, a.cwiseAbs().maxCoeff());
    for (const auto& b : report.b_parts) scale = std::max(scale, b.cwiseAbs().maxCoeff());
    report.pass = report.row_bound_ok && report.column_bound_ok &&
                  report.reconstruction_residual <= 1e-12 * scale;
    return report;
}

ReH1Report reh1_norm(const FourierElement& x, int radius, const EstimatorOptions& options) {
    ReH1Report report;
    auto [pos, neg] = positive_part_split(x);
    auto sqrt_fn = [](double v) { return std::sqrt(v); };
    report.positive_part = spectral_trace(sqrt_fn, fmultiply(fadjoint(pos), pos), radius, options);
    report.negative_part = spectral_trace(sqrt_fn, fmultiply(fadjoint(neg), neg), radius, options);
    report.value = report.positive_part.value + report.negative_part.value;
    return report;
}

JabDecomposition jab_decomposition(const FourierElement& x) {
    if (x.rank() != 2) throw InputError("AB decomposition requires rank 2");
    JabDecomposition out{FourierElement(2, x.coeff_dim()), FourierElement(2, x.coeff_dim()),
                         FourierElement(2, x.coeff_dim()), FourierElement(2, x.coeff_dim())};
    for (const auto& [g, c] : x.terms()) {
        JProfile profile = j_profile(g);
        bool f0 = profile.j_a() == 0 && profile.j_b() == 0;
        if (f0) {
            out.p0.add_term(g, c);
            if (profile.j_ab() == 0) out.p00.add_term(g, c);
        }
        if (profile.j_ab() >= 0)
            out.ab_plus.add_term(g, c);
        else
            out.ab_minus.add_term(g, c);
    }
    return out;
}

std::pair<double, double> coefficient_gap_demo(int n) {
    if (n < 1) throw InputError("demo size must be >= 1");
    Coefficient column = Coefficient::Zero(n, n);
    Coefficient row = Coefficient::Zero(n, n);
    for (int k = 1; k <= n; ++k) {
        Coefficient c = Coefficient::Zero(n, n);
        c(0, k - 1) = 1.0;  // e_{1,k}
        column += c.adjoint() * c;
        row += c * c.adjoint();
    }
    return {dense_operator_norm(column), dense_operator_norm(row)};
}

}  // namespace lacunae
