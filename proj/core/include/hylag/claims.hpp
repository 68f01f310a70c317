#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hylag/constructions.hpp"
#include "hylag/hypergraph.hpp"
#include "hylag/polynomial.hpp"
#include "hylag/rational.hpp"

namespace hylag {

/// Outcome of one certified claim. For upper-bound claims `achieved_max` is
/// the best value the search found and pass means achieved <= target + tol
/// (with the target attained at the stated optimizer point). Sign/identity
/// claims use achieved/target loosely and explain themselves in `note`.
struct ClaimReport {
    std::string claim;
    bool pass = false;
    bool refused = false;  // claim not asserted under these parameters
    double achieved_max = 0.0;
    Rat target = 0;
    double slack = 0.0;  // target - achieved
    long samples = 0;
    std::uint64_t seed = 0;
    std::string note;
};

struct VerificationReport {
    std::vector<ClaimReport> claims;
    std::uint64_t seed = 0;
    bool global_pass() const {
        for (const auto& c : claims)
            if (!c.pass) return false;
        return !claims.empty();
    }
};

struct ClaimBudget {
    int restarts = 64;
    long max_iterations = 200000;
    std::uint64_t seed = 1;
};

// ---------------------------------------------------------------------------
// bounding polynomials

/// Within-block limit polynomial of a family on `ell` part weights: each edge
/// type contributes prod 1/mult! times the corresponding monomial. Its
/// maximum over the unit simplex is N(ell)/120.
SimplexPoly family_block_poly(Family f, int ell);

/// Shared symmetric part of the block-1 bound (the Alpha family's g with
/// L = ell); kept as its own name because several claims quote it directly.
SimplexPoly g_poly(int L);

/// The degree-4 residual polynomial on the non-first parts (variables are
/// a_2..a_ell); maximum (1/24)(1 - 1/(ell-1)^3) c^4 on the scaled simplex.
SimplexPoly h_poly(int ell);

/// Part-1 correction: rho^2 [a1 rho^2 - 4 rho^3 + (2 rho/3 - a1)(1-a1)^2
/// - (1-a1)^3 / 3], defined for 0 <= rho <= a1/4.
double rho_block(double a1, double rho);
Rat rho_block_exact(const Rat& a1, const Rat& rho);
double rho_block_da1(double a1, double rho);
double rho_block_drho(double a1, double rho);

/// Layered simplex part on ell*q variables: per-block family polynomials plus
/// every cross-block rainbow monomial.
SimplexPoly layered_bound_poly(Family f, int ell, int q);

/// Block-1 bound with the rho correction, and the q-block composite built on
/// top of it.
double eval_f(Family f, int ell, std::span<const double> a, double rho);
Rat eval_f_exact(Family f, int ell, std::span<const Rat> a, const Rat& rho);
double eval_composite(Family f, int ell, int q, std::span<const double> a, double rho);
Rat eval_composite_exact(Family f, int ell, int q, std::span<const Rat> a, const Rat& rho);

/// Block-collapsed bound on q block weights (the literal displayed form,
/// valid on sum b = 1/ell), and its on-constraint homogenization with
/// nonnegative coefficients used by the ascent.
Rat collapsed_eval_exact(Family f, int ell, std::span<const Rat> b);
SimplexPoly collapsed_poly(Family f, int ell, int q);

/// One-variable tail bound used by the interval scan, and its derivative.
Rat f_a1_value(int ell, const Rat& a1);
Rat f_a1_derivative(int ell, const Rat& a1);

/// The increasing cubic -21 a1^3 + 32 a1^2 + 8 a1 - 16 controlling the sign
/// of the rho correction.
Rat rho_cubic(const Rat& a1);

// ---------------------------------------------------------------------------
// claim verifiers

/// Block-1 bound: max over the constraint set of eval_f(Alpha) vs
/// alpha_value(ell)/120.
ClaimReport verify_claim_f_bound(int ell, const ClaimBudget& budget);

/// g reaches (1/120)(1 - 5/L^3 + 4/L^4) c^5 at the uniform point.
ClaimReport verify_claim_g_max(int L, double c, const ClaimBudget& budget);

/// h reaches (1/24)(1 - 1/(ell-1)^3) c^4 at the uniform point.
ClaimReport verify_claim_h_max(int ell, double c, const ClaimBudget& budget);

/// f(a1) <= alpha/120 and f'(a1) <= 0 on [11/15, 1], scanned at rational grid
/// points plus both endpoints.
ClaimReport verify_claim_f_a1(int ell, int grid);

/// rho correction: <= 0 for a1 <= 11/15 and <= 1/1728 for a1 >= 11/15, on a
/// rational (a1, rho) grid; exact anchors rho_cubic(11/15) < 0 < rho_cubic(1).
ClaimReport verify_rho_block_bound(int grid);

/// Composite bound F <= N(ell,q)/120 with exact equality at the uniform
/// point; refused when q > 1 and the layering condition fails.
ClaimReport verify_claim_F(Family f, int ell, int q, const ClaimBudget& budget);

/// Collapsed bound H <= N(ell,q)/120, exact at uniform, plus the structure
/// check that near-optimal points have equal positive block weights.
ClaimReport verify_claim_H(Family f, int ell, int q, const ClaimBudget& budget);

/// Perturbation coefficients of H: fit the eps and eps^2 coefficients of
/// H(b1+eps, b2-eps, ...) - H(b) exactly (5-point rational Vandermonde) and
/// compare A + B against the closed form; the (b1+b2)(b1-b2)^2 coefficient
/// must equal the family's quoted constant.
ClaimReport verify_claim8_coefficients(Family f, int ell, int q, int samples, std::uint64_t seed);

Rat claim8_coefficient(Family f, int ell);         // (N/24) ell^5 - 3 ell C(ell,4) + C(ell,3) C(ell,2)
Rat claim8_quoted_coefficient(Family f, int ell);  // the per-family quoted closed form

/// Monotonicity of N(ell, q): the derivative numerator of the family's case
/// is >= 0 and increasing at every integer of [q_lo, q_hi], the anchors hold,
/// and the numerator matches the termwise derivative of n_of_ell_q.
ClaimReport verify_case_derivatives(Family f, int ell, int q_lo, int q_hi);

/// First valid q of the family's monotonicity case (2 ell^2 + 2 ell,
/// 10 ell^3, 2, 2, 3).
int case_region_start(Family f, int ell);

/// Derivative numerators and condition anchors, exposed for tests/reports.
Rat case_derivative_numerator(Family f, int ell, const Rat& q);
Rat anchor_poly(Family f, int ell, const Rat& q);  // f1..f5

/// Empirical subgraph bound: sampled induced subgraphs M with at most k
/// vertices (over-sampling part-1-heavy subsets when part1_size > 0) all have
/// maximize(M) <= bound + 1e-8.
ClaimReport verify_subgraph_bound(const Hypergraph& h, const Rat& bound, int k, int samples,
                                  std::uint64_t seed, int part1_size = 0);

/// Sorted-weight edge-sum bound for a locally sparse graph: at random weight
/// vectors, sum of edge products <= (product of 4 largest weights) * (sum of
/// the remaining weights).
ClaimReport verify_claim1(const Hypergraph& m1, int trials, std::uint64_t seed);

}  // namespace hylag
