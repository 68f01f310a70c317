#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "hylag/hypergraph.hpp"
#include "hylag/optimizer.hpp"

namespace hylag {

/// A point of the probability simplex over a graph's vertices.
struct WeightVector {
    std::vector<double> values;

    static WeightVector uniform(int m);
    bool on_simplex(double tol = 1e-12) const;
};

/// The edge polynomial sum_{e in E} prod_{i in e} x_i.
double evaluate(const Hypergraph& g, std::span<const double> x);

/// Partial derivatives of evaluate; entry i equals the link polynomial of
/// vertex i at the remaining weights.
std::vector<double> gradient(const Hypergraph& g, std::span<const double> x);

/// max over supported i of |grad_i - r * evaluate|; zero at an
/// interior-support optimum.
double kkt_residual(const Hypergraph& g, std::span<const double> x);

struct OptResult {
    double lambda_lower = 0.0;
    WeightVector argmax;
    double kkt_residual = 0.0;
    int restarts = 0;
    long iterations = 0;
    std::uint64_t seed = 0;
    bool converged = true;
};

/// Certified numeric lower bound for the Lagrangian: multi-start replicator
/// ascent, deterministic per seed. With cfg.symmetrize, starts are pooled
/// uniformly within symmetry classes and the pooled variant of each endpoint
/// is also considered, so pooling never lowers the reported value.
OptResult maximize(const Hypergraph& g, const OptimizerConfig& cfg = {});

/// Exhaustive grid oracle: max of evaluate over all simplex points with
/// denominator grid_resolution. Refuses graphs with more than 7 vertices.
double brute_force_lagrangian(const Hypergraph& g, int grid_resolution);

}  // namespace hylag
