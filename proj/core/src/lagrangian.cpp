#include "hylag/lagrangian.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "hylag/errors.hpp"

namespace hylag {

WeightVector WeightVector::uniform(int m) {
    if (m < 1) throw InvalidInputError("WeightVector::uniform needs m >= 1");
    return WeightVector{std::vector<double>(m, 1.0 / static_cast<double>(m))};
}

bool WeightVector::on_simplex(double tol) const {
    double sum = 0.0;
    for (double v : values) {
        if (v < 0.0) return false;
        sum += v;
    }
    return std::fabs(sum - 1.0) <= tol;
}

namespace {

void check_dimension(const Hypergraph& g, std::span<const double> x, const char* where) {
    if (static_cast<int>(x.size()) != g.vertex_count())
        throw InvalidInputError(std::string(where) + ": weight vector has " +
                                std::to_string(x.size()) + " entries for " +
                                std::to_string(g.vertex_count()) + " vertices");
}

}  // namespace

double evaluate(const Hypergraph& g, std::span<const double> x) {
    check_dimension(g, x, "evaluate");
    double sum = 0.0;
    for (const Edge& e : g.edges()) {
        double prod = 1.0;
        for (int v : e) prod *= x[v];
        sum += prod;
    }
    return sum;
}

std::vector<double> gradient(const Hypergraph& g, std::span<const double> x) {
    check_dimension(g, x, "gradient");
    std::vector<double> grad(x.size(), 0.0);
    for (const Edge& e : g.edges()) {
        // grad_v += product of the other weights, for each v in e
        for (int v : e) {
            double prod = 1.0;
            for (int u : e)
                if (u != v) prod *= x[u];
            grad[v] += prod;
        }
    }
    return grad;
}

double kkt_residual(const Hypergraph& g, std::span<const double> x) {
    check_dimension(g, x, "kkt_residual");
    const std::vector<double> grad = gradient(g, x);
    const double target = static_cast<double>(g.uniformity()) * evaluate(g, x);
    double residual = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i)
        if (x[i] > 0.0) residual = std::max(residual, std::fabs(grad[i] - target));
    return residual;
}

namespace {

std::vector<double> pooled_within_classes(const std::vector<double>& x,
                                          const std::vector<std::vector<int>>& classes) {
    std::vector<double> out(x.size());
    for (const auto& cls : classes) {
        double sum = 0.0;
        for (int v : cls) sum += x[v];
        const double share = sum / static_cast<double>(cls.size());
        for (int v : cls) out[v] = share;
    }
    return out;
}

}  // namespace

OptResult maximize(const Hypergraph& g, const OptimizerConfig& cfg) {
    if (g.vertex_count() < 1) throw InvalidInputError("maximize: graph has no vertices");

    OptResult result;
    result.seed = cfg.seed;
    result.restarts = cfg.restarts;
    const int m = g.vertex_count();

    if (g.edge_count() == 0) {
        result.argmax = WeightVector::uniform(m);
        result.lambda_lower = 0.0;
        result.kkt_residual = 0.0;
        return result;
    }

    const SimplexPoly poly = SimplexPoly::from_hypergraph(g);

    std::vector<std::vector<int>> classes;
    std::vector<std::vector<double>> extra_starts;
    if (cfg.symmetrize) {
        classes = symmetry_classes(g);
        // one start concentrated uniformly on each class
        for (const auto& cls : classes) {
            if (static_cast<int>(cls.size()) == m) continue;  // equals the uniform start
            std::vector<double> x(m, 0.0);
            for (int v : cls) x[v] = 1.0 / static_cast<double>(cls.size());
            extra_starts.push_back(std::move(x));
        }
    }

    MultiStartResult best = maximize_on_simplex(poly, cfg, extra_starts);

    if (cfg.symmetrize && classes.size() < static_cast<std::size_t>(m)) {
        // Equivalent vertices may share weight at an optimum, so the pooled
        // endpoint is a legitimate candidate; keep whichever evaluates higher.
        std::vector<double> pooled = pooled_within_classes(best.x, classes);
        AscentOutcome run = ascend_on_simplex(poly, pooled, cfg);
        best.iterations += run.iterations;
        if (run.value >= best.value) {
            best.value = run.value;
            best.x = std::move(run.x);
            best.converged = run.converged;
        }
    }

    result.argmax = WeightVector{best.x};
    result.lambda_lower = evaluate(g, best.x);  // recomputed from the argmax
    result.kkt_residual = kkt_residual(g, best.x);
    result.iterations = best.iterations;
    result.converged = best.converged;
    return result;
}

namespace {

double eval_grid_point(const Hypergraph& g, const std::vector<int>& counts, int resolution,
                       std::vector<double>& scratch) {
    for (std::size_t i = 0; i < counts.size(); ++i)
        scratch[i] = static_cast<double>(counts[i]) / static_cast<double>(resolution);
    return evaluate(g, scratch);
}

}  // namespace

double brute_force_lagrangian(const Hypergraph& g, int grid_resolution) {
    const int m = g.vertex_count();
    if (m > 7)
        throw SizeLimitError("brute_force_lagrangian: refusing " + std::to_string(m) +
                             " vertices (limit 7)");
    if (m < 1 || grid_resolution < 1)
        throw InvalidInputError("brute_force_lagrangian: need m >= 1 and resolution >= 1");

    // Walk all compositions of grid_resolution into m nonnegative parts.
    std::vector<int> counts(m, 0);
    counts[0] = grid_resolution;
    std::vector<double> scratch(m);
    double best = eval_grid_point(g, counts, grid_resolution, scratch);
    while (true) {
        // next composition in colex-style order
        int i = 0;
        while (i < m - 1 && counts[i] == 0) ++i;
        if (i == m - 1) break;
        const int head = counts[i];
        counts[i] = 0;
        counts[0] = head - 1;
        ++counts[i + 1];
        best = std::max(best, eval_grid_point(g, counts, grid_resolution, scratch));
    }
    return best;
}

}  // namespace hylag
