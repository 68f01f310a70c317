#pragma once

#include <span>
#include <vector>

#include "hylag/hypergraph.hpp"
#include "hylag/rational.hpp"

namespace hylag {

/// coeff * x[vars[0]] * x[vars[1]] * ... (vars sorted, repeats allowed).
struct Monomial {
    Rat coeff;
    std::vector<int> vars;
};

/// Homogeneous multivariate polynomial kept as an explicit monomial list,
/// evaluated on (scaled) simplex points. Exact coefficients are retained for
/// rational evaluation; a double mirror is kept for the optimizer's hot path.
class SimplexPoly {
public:
    SimplexPoly(int nvars, std::vector<Monomial> terms);

    int nvars() const { return nvars_; }
    int degree() const { return degree_; }
    const std::vector<Monomial>& terms() const { return terms_; }
    bool nonnegative_coeffs() const { return nonneg_; }

    double eval(std::span<const double> x) const;
    Rat eval_exact(std::span<const Rat> x) const;

    /// All partial derivatives at x.
    void gradient(std::span<const double> x, std::span<double> out) const;

    /// The Lagrangian polynomial of a hypergraph: one unit monomial per edge.
    static SimplexPoly from_hypergraph(const Hypergraph& g);

private:
    int nvars_;
    int degree_;
    bool nonneg_;
    std::vector<Monomial> terms_;
    std::vector<double> coeff_d_;
};

}  // namespace hylag
