#include "lacunae/fourier.hpp"

#include <algorithm>
#include <cmath>

#include "lacunae/errors.hpp"

namespace lacunae {

namespace {

bool exactly_zero(const Coefficient& c) {
    for (Eigen::Index i = 0; i < c.rows(); ++i)
        for (Eigen::Index j = 0; j < c.cols(); ++j)
            if (c(i, j) != std::complex<double>(0.0, 0.0)) return false;
    return true;
}

}  // namespace

FourierElement::FourierElement(int rank, int coeff_dim) : rank_(rank), dim_(coeff_dim) {
    if (rank < 1) throw InputError("Fourier element rank must be >= 1");
    if (coeff_dim < 1) throw InputError("coefficient dimension must be >= 1");
}

FourierElement FourierElement::delta(const Word& g, std::complex<double> c) {
    Coefficient m(1, 1);
    m(0, 0) = c;
    return delta_matrix(g, m);
}

FourierElement FourierElement::delta_matrix(const Word& g, const Coefficient& c) {
    if (c.rows() != c.cols() || c.rows() < 1)
        throw InputError("coefficient must be a square matrix");
    FourierElement x(g.rank(), static_cast<int>(c.rows()));
    x.add_term(g, c);
    return x;
}

Integer FourierElement::support_radius() const {
    Integer r = 0;
    for (const auto& [g, c] : terms_) r = std::max(r, g.length());
    return r;
}

Coefficient FourierElement::coefficient(const Word& g) const {
    auto it = terms_.find(g);
    if (it != terms_.end()) return it->second;
    return Coefficient::Zero(dim_, dim_);
}

void FourierElement::add_term(const Word& g, const Coefficient& c) {
    if (g.rank() != rank_) throw InputError("word rank does not match element rank");
    if (c.rows() != dim_ || c.cols() != dim_)
        throw InputError("coefficient dimension mismatch");
    auto it = terms_.find(g);
    if (it == terms_.end()) {
        if (!exactly_zero(c)) terms_.emplace(g, c);
    } else {
        it->second += c;
        if (exactly_zero(it->second)) terms_.erase(it);
    }
}

std::complex<double> FourierElement::trace() const {
    auto it = terms_.find(Word::identity(rank_));
    if (it == terms_.end()) return 0.0;
    return it->second.trace() / static_cast<double>(dim_);
}

FourierElement& FourierElement::operator+=(const FourierElement& other) {
    if (rank_ != other.rank_ || dim_ != other.dim_)
        throw InputError("Fourier element rank/dimension mismatch");
    for (const auto& [g, c] : other.terms_) add_term(g, c);
    return *this;
}

FourierElement& FourierElement::operator-=(const FourierElement& other) {
    if (rank_ != other.rank_ || dim_ != other.dim_)
        throw InputError("Fourier element rank/dimension mismatch");
    for (const auto& [g, c] : other.terms_) add_term(g, -c);
    return *this;
}

FourierElement fmultiply(const FourierElement& x, const FourierElement& y) {
    if (x.rank() != y.rank() || x.coeff_dim() != y.coeff_dim())
        throw InputError("Fourier element rank/dimension mismatch");
    FourierElement out(x.rank(), x.coeff_dim());
    const bool scalar = x.coeff_dim() == 1;
    for (const auto& [g, cg] : x.terms()) {
        for (const auto& [h, ch] : y.terms()) {
            Word gh = multiply(g, h);
            if (scalar) {
                Coefficient prod(1, 1);
                prod(0, 0) = cg(0, 0) * ch(0, 0);
                out.add_term(gh, prod);
            } else {
                out.add_term(gh, cg * ch);
            }
        }
    }
    return out;
}

FourierElement fadjoint(const FourierElement& x) {
    FourierElement out(x.rank(), x.coeff_dim());
    for (const auto& [g, c] : x.terms()) out.add_term(inverse(g), c.adjoint());
    return out;
}

FourierElement fscale(const FourierElement& x, std::complex<double> s) {
    FourierElement out(x.rank(), x.coeff_dim());
    if (s == std::complex<double>(0.0, 0.0)) return out;
    for (const auto& [g, c] : x.terms()) out.add_term(g, s * c);
    return out;
}

MultiplierSpec MultiplierSpec::semigroup(LengthFunction psi, double t) {
    if (t < 0) throw InputError("semigroup multiplier requires t >= 0");
    MultiplierSpec spec;
    spec.psi_ = std::move(psi);
    spec.t_ = t;
    return spec;
}

MultiplierSpec MultiplierSpec::table(std::map<Word, double, WordCanonicalLess> symbol) {
    MultiplierSpec spec;
    spec.table_ = std::move(symbol);
    spec.is_table_ = true;
    return spec;
}

double MultiplierSpec::symbol(const Word& g) const {
    if (is_table_) {
        auto it = table_.find(g);
        if (it == table_.end())
            throw InputError("multiplier table does not cover word '" + to_string(g) + "'");
        return it->second;
    }
    return std::exp(-t_ * (*psi_)(g));
}

FourierElement apply_multiplier(const MultiplierSpec& spec, const FourierElement& x) {
    FourierElement out(x.rank(), x.coeff_dim());
    for (const auto& [g, c] : x.terms()) out.add_term(g, spec.symbol(g) * c);
    return out;
}

std::complex<double> trace_moment(const FourierElement& x, int m, std::size_t support_budget) {
    if (m < 1) throw InputError("trace moment order must be >= 1");
    FourierElement square = fmultiply(fadjoint(x), x);
    FourierElement acc = square;
    for (int i = 1; i < m; ++i) {
        if (acc.support_size() * std::max<std::size_t>(square.support_size(), 1) > support_budget)
            throw BudgetError("trace moment support growth " + std::to_string(acc.support_size()) +
                              " x " + std::to_string(square.support_size()) +
                              " exceeds budget " + std::to_string(support_budget));
        acc = fmultiply(acc, square);
    }
    return acc.trace();
}

namespace {

std::vector<double> psi_values_of(const std::vector<Word>& seq, const LengthFunction& psi) {
    std::vector<double> values;
    values.reserve(seq.size());
    for (const auto& h : seq) values.push_back(psi(h));
    return values;
}

}  // namespace

Eigen::MatrixXd h1_kernel(const std::vector<Word>& seq, const LengthFunction& psi) {
    const auto n = static_cast<Eigen::Index>(seq.size());
    std::vector<double> v = psi_values_of(seq, psi);
    for (std::size_t k = 0; k < seq.size(); ++k)
        if (v[k] <= 0.0)
            throw InputError("H^1 kernel needs psi > 0 on the sequence; offending word '" +
                             to_string(seq[k]) + "'");
    Eigen::MatrixXd kernel(n, n);
    for (Eigen::Index k = 0; k < n; ++k)
        for (Eigen::Index j = 0; j < n; ++j) {
            double s = v[static_cast<std::size_t>(k)] + v[static_cast<std::size_t>(j)];
            kernel(k, j) = v[static_cast<std::size_t>(k)] * v[static_cast<std::size_t>(j)] / (s * s);
        }
    return kernel;
}

Eigen::MatrixXd bmo_kernel(const std::vector<Word>& seq, const LengthFunction& psi, double t) {
    if (t < 0) throw InputError("BMO kernel requires t >= 0");
    const auto n = static_cast<Eigen::Index>(seq.size());
    std::vector<double> v = psi_values_of(seq, psi);
    Eigen::MatrixXd kernel(n, n);
    for (Eigen::Index k = 0; k < n; ++k) {
        const Word inv_k = inverse(seq[static_cast<std::size_t>(k)]);
        for (Eigen::Index j = 0; j < n; ++j) {
            double cross = psi(multiply(inv_k, seq[static_cast<std::size_t>(j)]));
            kernel(k, j) = std::exp(-t * cross) *
                           (1.0 - std::exp(-t * v[static_cast<std::size_t>(k)])) *
                           (1.0 - std::exp(-t * v[static_cast<std::size_t>(j)]));
        }
    }
    return kernel;
}

namespace {

FourierElement kernel_quadratic_form(const FourierElement& x,
                                     const std::vector<Word>& seq,
                                     const std::vector<Coefficient>& coeffs,
                                     const Eigen::MatrixXd& kernel) {
    FourierElement out(x.rank(), x.coeff_dim());
    const bool scalar = x.coeff_dim() == 1;
    for (std::size_t k = 0; k < seq.size(); ++k) {
        const Word inv_k = inverse(seq[k]);
        const Coefficient adj_k = coeffs[k].adjoint();
        for (std::size_t j = 0; j < seq.size(); ++j) {
            double a = kernel(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(j));
            if (a == 0.0) continue;
            Word w = multiply(inv_k, seq[j]);
            if (scalar) {
                Coefficient prod(1, 1);
                prod(0, 0) = a * adj_k(0, 0) * coeffs[j](0, 0);
                out.add_term(w, prod);
            } else {
                out.add_term(w, a * (adj_k * coeffs[j]));
            }
        }
    }
    return out;
}

void split_terms(const FourierElement& x, std::vector<Word>& seq, std::vector<Coefficient>& coeffs) {
    seq.clear();
    coeffs.clear();
    for (const auto& [g, c] : x.terms()) {
        seq.push_back(g);
        coeffs.push_back(c);
    }
}

}  // namespace

FourierElement h1_integrand(const FourierElement& x, const LengthFunction& psi) {
    if (!exactly_zero(x.coefficient(Word::identity(x.rank()))) )
        throw InputError("H^1 integrand requires the identity outside the support");
    std::vector<Word> seq;
    std::vector<Coefficient> coeffs;
    split_terms(x, seq, coeffs);
    if (seq.empty()) return FourierElement(x.rank(), x.coeff_dim());
    return kernel_quadratic_form(x, seq, coeffs, h1_kernel(seq, psi));
}

FourierElement bmo_defect(const FourierElement& x, const LengthFunction& psi, double t) {
    std::vector<Word> seq;
    std::vector<Coefficient> coeffs;
    split_terms(x, seq, coeffs);
    if (seq.empty()) return FourierElement(x.rank(), x.coeff_dim());
    return kernel_quadratic_form(x, seq, coeffs, bmo_kernel(seq, psi, t));
}

std::pair<double, double> schur_sums(const Eigen::MatrixXd& kernel) {
    for (Eigen::Index k = 0; k < kernel.rows(); ++k)
        for (Eigen::Index j = 0; j < kernel.cols(); ++j)
            if (kernel(k, j) < 0.0) throw InputError("Schur sums need a nonnegative kernel");
    double row = kernel.rows() == 0 ? 0.0 : kernel.rowwise().sum().maxCoeff();
    double col = kernel.cols() == 0 ? 0.0 : kernel.colwise().sum().maxCoeff();
    // sup_k sum_j runs over rows; sup_j sum_k over columns.
    return {col, row};
}

double c_delta(double delta) {
    if (delta <= 0) throw InputError("c_delta requires delta > 0");
    return 1.0 + 1.0 / delta + 1.0 / (1.0 - std::exp(-delta * delta));
}

std::vector<double> default_t_grid(const std::vector<double>& psi_values, const TGridSpec& spec) {
    double lo_psi = 0.0, hi_psi = 0.0;
    bool any = false;
    for (double v : psi_values) {
        if (v <= 0.0) continue;  // identity contributes nothing to the sup
        if (!any) {
            lo_psi = hi_psi = v;
            any = true;
        } else {
            lo_psi = std::min(lo_psi, v);
            hi_psi = std::max(hi_psi, v);
        }
    }
    if (!any) return {0.0};
    double lo = spec.lo_factor / hi_psi;
    double hi = spec.hi_factor / lo_psi;
    std::vector<double> grid;
    grid.reserve(static_cast<std::size_t>(spec.count));
    if (spec.count == 1) {
        grid.push_back(std::sqrt(lo * hi));
        return grid;
    }
    double step = std::log(hi / lo) / (spec.count - 1);
    for (int i = 0; i < spec.count; ++i) grid.push_back(lo * std::exp(step * i));
    return grid;
}

std::vector<double> default_t_grid(const FourierElement& x, const LengthFunction& psi,
                                   const TGridSpec& spec) {
    std::vector<double> values;
    values.reserve(x.support_size());
    for (const auto& [g, c] : x.terms()) values.push_back(psi(g));
    return default_t_grid(values, spec);
}

}  // namespace lacunae
