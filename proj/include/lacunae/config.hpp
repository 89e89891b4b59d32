#pragma once

#include <cstdint>
#include <string>

#include "lacunae/fourier.hpp"
#include "lacunae/norms.hpp"

namespace lacunae {

/// Resolved settings of one CLI job; embedded verbatim in every report so
/// results are reproducible from the report alone.
struct JobConfig {
    int rank = 2;
    std::string length = "word";
    int truncation_degree = 0;  // 0 = per-word default
    int ball_radius = 8;
    TGridSpec t_grid;
    double eig_tolerance = 0.0;  // 0 = scale-aware default
    double norm_tolerance = 1e-6;
    double positivity_tolerance = 1e-9;
    std::uint64_t seed = 0;
    std::string output_format = "json";  // json | csv
    std::size_t budget_bytes = 512ull << 20;
    int jobs = 1;

    EstimatorOptions estimator() const {
        EstimatorOptions opts;
        opts.tolerance = norm_tolerance;
        opts.seed = seed;
        opts.positivity_tolerance = positivity_tolerance;
        opts.max_basis = max_ball_words();
        return opts;
    }

    /// Budget translated into a cap on ball sizes (64 bytes per word is the
    /// accounting rate; documented, not measured).
    std::size_t max_ball_words() const { return budget_bytes / 64; }
};

/// Reads LACUNAE_BUDGET_MB if set.
std::size_t budget_bytes_from_env(std::size_t fallback = 512ull << 20);

}  // namespace lacunae
