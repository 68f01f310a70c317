#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "hylag/hypergraph.hpp"

namespace hylag {

struct SparseParams {
    int r = 5;
    int t = 10;        // vertex count
    int k = 7;         // largest subset size checked for local sparsity
    double sigma = 0;  // edge-count target: |E| >= sigma * t^(r-1)
    std::uint64_t seed = 1;
    int max_attempts = 16;
    double pstar_scale = 4.0;                    // inclusion probability min(1, scale*sigma*r!/t)
    std::uint64_t subset_budget = 10'000'000;    // refuse scans beyond this many subsets
};

struct SparsityWitness {
    bool ok = true;
    std::vector<int> violating_subset;  // a smallest violating vertex set when !ok
    long edges_inside = 0;
};

/// Exhaustive check of local sparsity: every vertex set V0 with
/// r <= |V0| <= k contains at most |V0| - r + 1 edges. Returns a smallest
/// violating subset on failure.
SparsityWitness verify_local_sparsity(const Hypergraph& a, int k,
                                      std::uint64_t subset_budget = 10'000'000);

/// |E(A)| >= sigma * t^(r-1).
bool verify_edge_count(const Hypergraph& a, double sigma);

struct SparseBuildInfo {
    int attempts_used = 0;
    long edges_sampled = 0;
    long edges_deleted = 0;
};

/// Randomized construction of a locally sparse graph: include each r-set
/// independently with probability p*, then repeatedly delete the
/// lexicographically last edge of each violating subset (scanned by
/// increasing size) until clean. Retries with fresh randomness up to
/// max_attempts; every returned graph has passed both verifiers.
Hypergraph build_sparse(const SparseParams& p, SparseBuildInfo* info = nullptr);

}  // namespace hylag
