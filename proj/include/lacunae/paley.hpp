#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lacunae/fourier.hpp"
#include "lacunae/lacunarity.hpp"
#include "lacunae/norms.hpp"
#include "lacunae/words.hpp"

namespace lacunae {

struct PaleyConfig {
    int radius = 8;
    TGridSpec t_grid;
    EstimatorOptions estimator;
    double h1_slack = 1e-6;
    double floor_slack = 1e-9;
};

/// Everything needed to audit one run of the BMO/H^1 equivalences on a
/// lacunary sequence: the certificate, both coefficient-side norms, the
/// analytic estimates with their provenance, and per-inequality verdicts.
struct PaleyReport {
    LacunarityCertificate lacunarity;
    double delta = 0.0;
    double c_delta_value = 0.0;

    double coeff_column_norm = 0.0;  // || sum c_k* c_k ||
    double coeff_row_norm = 0.0;     // || sum c_k c_k* ||
    double coeff_column_trace = 0.0; // normalized trace of sum c_k* c_k

    BmoEstimate bmo;
    SpectralTraceReport h1;

    bool upper_bmo_ok = false;   // bmo^2 <= c_delta * column norm
    bool upper_h1_ok = false;    // h1 <= (1/2) sqrt(trace of sum |c_k|^2) + slack
    bool lower_floor_ok = false; // trace bound^2 >= (4/27) max_k tr_n |c_k|^2
    bool pass = false;
    std::string note;
};

/// Runs the full pipeline on x = sum c_k λ_{h_k}.  Aborts (pass = false,
/// note set) when the lacunarity certificate fails.
PaleyReport theorem1_check(const std::vector<Word>& sequence,
                           const std::vector<Coefficient>& coefficients,
                           const LengthFunction& psi, const PaleyConfig& config = {});

struct Lambda4Report {
    LacunarityCertificate lacunarity;
    double delta = 0.0;
    double c_delta_value = 0.0;
    double l4_norm = 0.0;       // tau((x*x)^2)^{1/4}, exact expansion
    double l2_norm = 0.0;       // (sum tr|c_k|^2 / n)^{1/2}
    double column_s4 = 0.0;     // ||(sum c_k* c_k)^{1/2}||_{S^4}
    double row_s4 = 0.0;        // ||(sum c_k c_k*)^{1/2}||_{S^4}
    double upper_bound = 0.0;   // c_delta^{1/4} * 4 * max(column, row)
    bool upper_ok = false;
    bool l2_ok = false;         // l4 >= l2
    bool pass = false;
    std::string note;
};

Lambda4Report lambda4_check(const std::vector<Word>& sequence,
                            const std::vector<Coefficient>& coefficients,
                            const LengthFunction& psi,
                            std::size_t moment_budget = 4'000'000);

/// Paley split of the convolution coefficients of a product of two
/// positive-support elements at the given targets:
///   A_i sums over e <= h <= g_i < h^2,  B_i over e <= h <= h^2 <= g_i,
/// so A_i + B_i reconstructs the g_i coefficient of y z exactly.
struct SplitReport {
    std::vector<Coefficient> a_parts;
    std::vector<Coefficient> b_parts;
    long long window_count = 0;        // K: max Rudin count of the targets
                                       // over the realized window centers
    double a_row_norm = 0.0;           // tr_n (sum A_i A_i*)^{1/2}
    double b_column_norm = 0.0;        // tr_n (sum B_i* B_i)^{1/2}
    double l2_product = 0.0;           // ||y||_2 ||z||_2
    double reconstruction_residual = 0.0;
    bool row_bound_ok = false;         // a_row <= sqrt(K) * l2_product
    bool column_bound_ok = false;
    bool pass = false;
};

SplitReport paley_split(const FourierElement& y, const FourierElement& z,
                        const std::vector<Word>& targets, int max_degree = 0);

/// tau|x_+| + tau|x_-| with both absolute values estimated spectrally.
struct ReH1Report {
    double value = 0.0;
    SpectralTraceReport positive_part;
    SpectralTraceReport negative_part;
};

ReH1Report reh1_norm(const FourierElement& x, int radius,
                     const EstimatorOptions& options = {});

/// Support projections of a rank-2 element: onto the subgroup with vanishing
/// degree-1 coefficients, onto the smaller subgroup with vanishing AB
/// coefficient, and the split by the sign of the AB coefficient.
struct JabDecomposition {
    FourierElement p0;       // support in {J_A = J_B = 0}
    FourierElement p00;      // support additionally in {J_AB = 0}
    FourierElement ab_plus;  // support in {J_AB >= 0}
    FourierElement ab_minus; // support in {J_AB < 0}
};

JabDecomposition jab_decomposition(const FourierElement& x);

/// Coefficient-side row/column gap for f = sum_{k<=n} e_{1,k} λ_{a^{2^k}}:
/// returns (column norm, row norm); their ratio is exactly n.
std::pair<double, double> coefficient_gap_demo(int n);

}  // namespace lacunae
