#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "hylag/polynomial.hpp"

namespace hylag {

struct OptimizerConfig {
    int restarts = 32;
    long max_iterations = 100000;
    double step_tolerance = 1e-10;
    double value_tolerance = 1e-12;
    std::uint64_t seed = 1;
    bool symmetrize = true;
};

struct AscentOutcome {
    std::vector<double> x;
    double value = 0.0;
    long iterations = 0;
    bool converged = false;
};

struct MultiStartResult {
    std::vector<double> x;
    double value = 0.0;
    long iterations = 0;  // summed over restarts
    bool converged = false;
    int winning_restart = -1;
    std::vector<AscentOutcome> endpoints;  // filled when keep_endpoints
};

/// Euclidean projection onto {x >= 0, sum x = 1}.
std::vector<double> project_to_simplex(std::span<const double> y);

/// Uniform sample from the simplex (Dirichlet(1,...,1)).
void dirichlet_uniform(std::mt19937_64& rng, std::span<double> out);

/// Deterministic per-restart generator: fixed offsets from the base seed.
std::mt19937_64 substream(std::uint64_t seed, int index);

/// Single ascent run from x0. Uses the multiplicative replicator update
/// x_i <- x_i * grad_i / (d * value) when the polynomial has nonnegative
/// coefficients (monotone by the Baum-Eagon inequality), with a projected
/// gradient step as fallback when the value is zero or coefficients are
/// signed.
AscentOutcome ascend_on_simplex(const SimplexPoly& poly, std::vector<double> x0, const OptimizerConfig& cfg);

/// Multi-start maximization over the unit simplex: uniform start, then the
/// provided extra starts, then cfg.restarts Dirichlet samples. Ties are
/// broken toward the earliest restart. The winning point gets a support
/// cleanup pass (coordinates below 1e-12 zeroed, renormalized, re-ascended).
MultiStartResult maximize_on_simplex(const SimplexPoly& poly, const OptimizerConfig& cfg,
                                     const std::vector<std::vector<double>>& extra_starts = {},
                                     bool keep_endpoints = false);

}  // namespace hylag
