#pragma once

#include <complex>
#include <functional>
#include <map>
#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "lacunae/words.hpp"

namespace lacunae {

using Coefficient = Eigen::MatrixXcd;

/// Finitely supported operator-valued Fourier series x = sum c_g ⊗ λ_g.
/// Coefficients are dense n x n complex matrices; support words are reduced
/// and exactly-zero matrices are dropped.  Iteration follows the canonical
/// word order, so serialized output and derived matrices are reproducible.
class FourierElement {
public:
    FourierElement(int rank, int coeff_dim);

    static FourierElement zero(int rank, int coeff_dim = 1) {
        return FourierElement(rank, coeff_dim);
    }
    /// c * λ_g with a scalar coefficient (coeff_dim 1).
    static FourierElement delta(const Word& g, std::complex<double> c = 1.0);
    /// c ⊗ λ_g with a matrix coefficient.
    static FourierElement delta_matrix(const Word& g, const Coefficient& c);

    int rank() const { return rank_; }
    int coeff_dim() const { return dim_; }
    const std::map<Word, Coefficient, WordCanonicalLess>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    std::size_t support_size() const { return terms_.size(); }
    /// Largest word length in the support (0 for the zero element).
    Integer support_radius() const;

    Coefficient coefficient(const Word& g) const;
    void add_term(const Word& g, const Coefficient& c);

    /// Normalized trace: tr(c_e) / n.
    std::complex<double> trace() const;

    FourierElement& operator+=(const FourierElement& other);
    FourierElement& operator-=(const FourierElement& other);
    friend FourierElement operator+(FourierElement a, const FourierElement& b) { return a += b; }
    friend FourierElement operator-(FourierElement a, const FourierElement& b) { return a -= b; }

private:
    int rank_;
    int dim_;
    std::map<Word, Coefficient, WordCanonicalLess> terms_;
};

/// Convolution product: λ_g λ_h = λ_{gh} with matrix coefficients multiplying.
FourierElement fmultiply(const FourierElement& x, const FourierElement& y);
/// Adjoint: c_g λ_g ↦ c_g^* λ_{g^-1}.
FourierElement fadjoint(const FourierElement& x);
FourierElement fscale(const FourierElement& x, std::complex<double> s);

/// Fourier multiplier symbol, either the semigroup e^{-t psi(g)} or an
/// explicit table (which must cover the support it is applied to).
class MultiplierSpec {
public:
    static MultiplierSpec semigroup(LengthFunction psi, double t);
    static MultiplierSpec table(std::map<Word, double, WordCanonicalLess> symbol);

    double symbol(const Word& g) const;

private:
    MultiplierSpec() = default;
    std::optional<LengthFunction> psi_;
    double t_ = 0.0;
    std::map<Word, double, WordCanonicalLess> table_;
    bool is_table_ = false;
};

FourierElement apply_multiplier(const MultiplierSpec& spec, const FourierElement& x);

/// tau((x* x)^m) / with the normalized matrix trace; equals ||x||_{2m}^{2m}.
/// Exact (by integer convolution in doubles) whenever all inputs are exact.
/// support_budget caps the support of intermediate powers.
std::complex<double> trace_moment(const FourierElement& x, int m,
                                  std::size_t support_budget = 4'000'000);

/// H^1 kernel a_{k,j} = psi_k psi_j / (psi_k + psi_j)^2 over a sequence.
Eigen::MatrixXd h1_kernel(const std::vector<Word>& seq, const LengthFunction& psi);

/// BMO kernel a_{k,j}(t) = e^{-t psi(h_k^-1 h_j)} (1-e^{-t psi_k})(1-e^{-t psi_j}).
Eigen::MatrixXd bmo_kernel(const std::vector<Word>& seq, const LengthFunction& psi, double t);

/// integral_0^inf |d_s T_s x|^2 s ds, expanded exactly through the closed-form
/// H^1 kernel.  The support must not contain the identity.
FourierElement h1_integrand(const FourierElement& x, const LengthFunction& psi);

/// T_t |x - T_t x|^2, expanded exactly through the closed-form BMO kernel.
FourierElement bmo_defect(const FourierElement& x, const LengthFunction& psi, double t);

/// Row/column sup-sums of a nonnegative kernel (negative entries rejected).
std::pair<double, double> schur_sums(const Eigen::MatrixXd& kernel);

/// c_delta = 1 + 1/delta + 1/(1 - e^{-delta^2}): the explicit constant that
/// bounds both Schur sums of the BMO kernel of a delta-lacunary sequence.
double c_delta(double delta);

struct TGridSpec {
    int count = 48;
    double lo_factor = 1e-3;  // lower endpoint is lo_factor / psi_max
    double hi_factor = 10.0;  // upper endpoint is hi_factor / psi_min
};

/// Logarithmic grid spanning [lo/psi_max, hi/psi_min] over the support of x.
std::vector<double> default_t_grid(const FourierElement& x, const LengthFunction& psi,
                                   const TGridSpec& spec = {});
std::vector<double> default_t_grid(const std::vector<double>& psi_values,
                                   const TGridSpec& spec = {});

}  // namespace lacunae
