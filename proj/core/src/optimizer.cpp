#include "hylag/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "hylag/errors.hpp"

namespace hylag {

std::vector<double> project_to_simplex(std::span<const double> y) {
    // Sort-based projection (Held et al.): find the largest k with
    // u_k + (1 - sum_{i<=k} u_i)/k > 0 for descending u.
    std::vector<double> u(y.begin(), y.end());
    std::sort(u.begin(), u.end(), std::greater<>());
    double cumsum = 0.0;
    double theta = 0.0;
    int k = 0;
    for (std::size_t i = 0; i < u.size(); ++i) {
        cumsum += u[i];
        const double t = (cumsum - 1.0) / static_cast<double>(i + 1);
        if (u[i] - t > 0.0) {
            theta = t;
            k = static_cast<int>(i + 1);
        }
    }
    if (k == 0) theta = (cumsum - 1.0) / static_cast<double>(u.size());
    std::vector<double> x(y.size());
    for (std::size_t i = 0; i < y.size(); ++i) x[i] = std::max(0.0, y[i] - theta);
    const double s = std::accumulate(x.begin(), x.end(), 0.0);
    if (s > 0.0)
        for (double& v : x) v /= s;
    else
        std::fill(x.begin(), x.end(), 1.0 / static_cast<double>(x.size()));
    return x;
}

void dirichlet_uniform(std::mt19937_64& rng, std::span<double> out) {
    std::exponential_distribution<double> exp1(1.0);
    double sum = 0.0;
    for (double& v : out) {
        v = exp1(rng);
        sum += v;
    }
    for (double& v : out) v /= sum;
}

std::mt19937_64 substream(std::uint64_t seed, int index) {
    return std::mt19937_64(seed + 0x9E3779B97F4A7C15ULL * static_cast<std::uint64_t>(index + 1));
}

namespace {

void normalize(std::vector<double>& x) {
    double sum = 0.0;
    for (double& v : x) {
        if (v < 0.0) v = 0.0;
        sum += v;
    }
    if (sum <= 0.0) {
        std::fill(x.begin(), x.end(), 1.0 / static_cast<double>(x.size()));
    } else {
        for (double& v : x) v /= sum;
    }
}

double max_abs_diff(const std::vector<double>& a, const std::vector<double>& b) {
    double m = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::fabs(a[i] - b[i]));
    return m;
}

// One backtracking projected-gradient step; returns true if it moved.
bool pg_step(const SimplexPoly& poly, std::vector<double>& x, double& value,
             const std::vector<double>& grad) {
    double eta = 0.25;
    while (eta > 1e-16) {
        std::vector<double> y(x.size());
        for (std::size_t i = 0; i < x.size(); ++i) y[i] = x[i] + eta * grad[i];
        std::vector<double> xt = project_to_simplex(y);
        const double vt = poly.eval(xt);
        if (vt > value) {
            x = std::move(xt);
            value = vt;
            return true;
        }
        eta *= 0.5;
    }
    return false;
}

}  // namespace

AscentOutcome ascend_on_simplex(const SimplexPoly& poly, std::vector<double> x0, const OptimizerConfig& cfg) {
    if (static_cast<int>(x0.size()) != poly.nvars())
        throw InvalidInputError("ascend_on_simplex: start has wrong dimension");
    AscentOutcome out;
    normalize(x0);
    std::vector<double> x = std::move(x0);
    double value = poly.eval(x);
    std::vector<double> grad(x.size());
    const bool replicator_ok = poly.nonnegative_coeffs();
    const double degree = static_cast<double>(poly.degree());

    if (poly.terms().empty() || poly.degree() == 0) {
        out.x = std::move(x);
        out.value = value;
        out.converged = true;
        return out;
    }

    long it = 0;
    for (; it < cfg.max_iterations; ++it) {
        poly.gradient(x, grad);
        if (replicator_ok && value > 1e-300) {
            std::vector<double> xn(x.size());
            const double denom = degree * value;
            for (std::size_t i = 0; i < x.size(); ++i) xn[i] = x[i] * grad[i] / denom;
            normalize(xn);
            const double vn = poly.eval(xn);
            const double improvement = vn - value;
            const double step = max_abs_diff(x, xn);
            if (vn >= value) {
                x = std::move(xn);
                value = vn;
            }
            if (improvement < cfg.value_tolerance || step < cfg.step_tolerance) {
                out.converged = true;
                ++it;
                break;
            }
        } else {
            const double before = value;
            if (!pg_step(poly, x, value, grad)) {
                out.converged = true;
                ++it;
                break;
            }
            if (value - before < cfg.value_tolerance) {
                out.converged = true;
                ++it;
                break;
            }
        }
    }
    out.x = std::move(x);
    out.value = value;
    out.iterations = it;
    return out;
}

MultiStartResult maximize_on_simplex(const SimplexPoly& poly, const OptimizerConfig& cfg,
                                     const std::vector<std::vector<double>>& extra_starts,
                                     bool keep_endpoints) {
    const int m = poly.nvars();
    std::vector<std::vector<double>> starts;
    starts.emplace_back(m, 1.0 / static_cast<double>(m));
    for (const auto& s : extra_starts) starts.push_back(s);
    for (int i = 0; i < cfg.restarts; ++i) {
        std::mt19937_64 rng = substream(cfg.seed, i);
        std::vector<double> x(m);
        dirichlet_uniform(rng, x);
        starts.push_back(std::move(x));
    }

    MultiStartResult best;
    for (std::size_t i = 0; i < starts.size(); ++i) {
        AscentOutcome run = ascend_on_simplex(poly, starts[i], cfg);
        best.iterations += run.iterations;
        if (best.winning_restart < 0 || run.value > best.value) {
            best.value = run.value;
            best.x = run.x;
            best.converged = run.converged;
            best.winning_restart = static_cast<int>(i);
        }
        if (keep_endpoints) best.endpoints.push_back(std::move(run));
    }

    // Support cleanup on the winner: exact zeros make downstream support
    // checks meaningful, and re-ascending recovers any value lost to it.
    bool truncated = false;
    std::vector<double> cleaned = best.x;
    for (double& v : cleaned) {
        if (v > 0.0 && v < 1e-12) {
            v = 0.0;
            truncated = true;
        }
    }
    if (truncated) {
        AscentOutcome run = ascend_on_simplex(poly, cleaned, cfg);
        best.iterations += run.iterations;
        if (run.value >= best.value) {
            best.value = run.value;
            best.x = std::move(run.x);
            best.converged = run.converged;
        }
    }
    return best;
}

}  // namespace hylag
