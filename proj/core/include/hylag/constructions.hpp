#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hylag/hypergraph.hpp"
#include "hylag/rational.hpp"

namespace hylag {

/// The five 5-uniform construction families. The last three are defined only
/// at ell = 5.
enum class Family { Alpha, Complement, N12_125, N96_625, N252_625 };

std::string family_name(Family f);
Family family_from_name(std::string_view name);
constexpr Family kAllFamilies[] = {Family::Alpha, Family::Complement, Family::N12_125,
                                   Family::N96_625, Family::N252_625};

struct ConstructionParams {
    Family family = Family::Alpha;
    int ell = 2;  // number of parts per block, >= 2 (forced to 5 by the fixed families)
    int q = 1;    // number of blocks, >= 1
    int t = 1;    // part size, >= 1
    int r = 5;    // uniformity of the lifted graph, >= 5
};

void validate(const ConstructionParams& p);

/// 1 - 5/ell^3 + 4/ell^4.
Rat alpha_value(int ell);

/// The family's limiting density N(ell).
Rat n_of_ell(Family f, int ell);

/// The layered limiting density N(ell, q).
Rat n_of_ell_q(Family f, int ell, int q);

/// Exact d/dq of n_of_ell_q at integer q >= 1.
Rat n_of_ell_q_derivative(Family f, int ell, int q);

/// ell^3 (1 - N(ell)) (q^3+q^2+q+1) - 10 ell^2 (q^2+q+1) + 35 ell (q+1) - 50.
Rat layering_condition_lhs(Family f, int ell, int q);

/// True iff q == 1 or layering_condition_lhs >= 0; gates the layered claims.
bool layering_condition(Family f, int ell, int q);

/// One edge type: (part index, multiplicity) pairs with multiplicities
/// summing to 5. The families are exactly their edge-type lists.
struct EdgeType {
    std::vector<std::pair<int, int>> part_mult;
};

std::vector<EdgeType> family_edge_types(Family f, int ell);

/// The base graph G on ell * t vertices, parts laid out contiguously:
/// part i occupies [i*t, (i+1)*t).
Hypergraph build_base(const ConstructionParams& p);

/// The layered graph on ell * q * t vertices: q block copies of the base
/// graph plus every rainbow 5-set (one vertex from each of 5 distinct parts)
/// that is not contained in a single block.
Hypergraph build_layered(const ConstructionParams& p);

/// Union of g with a 5-uniform graph a embedded into the vertices `part1`
/// (a's vertex i maps to part1[i]). Overlapping edges are rejected: every
/// family keeps single parts edge-free, so an overlap signals a misuse.
Hypergraph attach_sparse(const Hypergraph& g, const Hypergraph& a, std::span<const int> part1);

/// Lift a 5-uniform graph on 5 parts of size t to uniformity r: each edge is
/// extended by one vertex from each of the r-5 new parts.
Hypergraph lift_to_r(const Hypergraph& h5, int r, int t);

/// Blow-up with class sizes floor(n * y_i); zero-size classes are dropped.
Hypergraph weighted_blowup(const Hypergraph& g, std::span<const double> y, int n);

/// Closed-form edge counts (cross-checked against enumeration in tests).
Int base_edge_count(Family f, int ell, int t);
Int layered_edge_count(Family f, int ell, int q, int t);

/// Exact coefficients c[0..5] of the base edge count of the Alpha family as
/// a polynomial in t (fixed ell), recovered by interpolation at t = 1..6 and
/// checked at t = 7, 8.
std::vector<Rat> alpha_edge_poly_in_t(int ell);

/// The (positive) coefficient of -t^4 in that polynomial.
Rat c0_of_ell(int ell);

/// Padded density threshold: smallest t1 such that
///   (|E(G)| + ell^4 t^4 / 12) / (ell t)^5 >= (N(ell) + 1/(ell^5 t)) / 120
/// holds for every t in [t1, t_max]; returns 0 when no such t1 exists.
bool padded_density_holds(Family f, int ell, int t);
int padded_density_threshold(Family f, int ell, int t_max);

}  // namespace hylag
