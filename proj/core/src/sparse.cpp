#include "hylag/sparse.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>

#include "hylag/errors.hpp"
#include "hylag/optimizer.hpp"
#include "hylag/rational.hpp"

namespace hylag {

namespace {

double required_edges(int t, int r, double sigma) {
    return sigma * std::pow(static_cast<double>(t), r - 1);
}

bool subset_contains(const std::vector<int>& subset, const Edge& e) {
    // both sorted
    return std::includes(subset.begin(), subset.end(), e.begin(), e.end());
}

long count_inside(const std::vector<Edge>& edges, const std::vector<int>& subset) {
    long count = 0;
    for (const Edge& e : edges)
        if (subset_contains(subset, e)) ++count;
    return count;
}

std::uint64_t subsets_to_scan(int t, int lo, int hi) {
    Int total = 0;
    for (int s = lo; s <= hi; ++s) total += binomial(t, s);
    if (total > Int(std::numeric_limits<std::uint64_t>::max())) return std::numeric_limits<std::uint64_t>::max();
    return total.convert_to<std::uint64_t>();
}

template <typename Visit>
void for_each_subset(int t, int size, Visit&& visit) {
    std::vector<int> subset(size);
    for (int i = 0; i < size; ++i) subset[i] = i;
    while (true) {
        if (!visit(subset)) return;
        int i = size - 1;
        while (i >= 0 && subset[i] == t - size + i) --i;
        if (i < 0) break;
        ++subset[i];
        for (int j = i + 1; j < size; ++j) subset[j] = subset[j - 1] + 1;
    }
}

std::vector<Edge> all_r_subsets(int t, int r) {
    std::vector<Edge> out;
    for_each_subset(t, r, [&](const std::vector<int>& s) {
        out.push_back(s);
        return true;
    });
    return out;
}

}  // namespace

SparsityWitness verify_local_sparsity(const Hypergraph& a, int k, std::uint64_t subset_budget) {
    const int r = a.uniformity();
    const int t = a.vertex_count();
    if (k < r) throw InvalidInputError("verify_local_sparsity: k must be >= r");
    const int top = std::min(k, t);
    if (subsets_to_scan(t, r, top) > subset_budget)
        throw SizeLimitError("verify_local_sparsity: subset scan exceeds budget");

    SparsityWitness witness;
    for (int size = r; size <= top && witness.ok; ++size) {
        const long allowed = size - r + 1;
        for_each_subset(t, size, [&](const std::vector<int>& subset) {
            const long inside = count_inside(a.edges(), subset);
            if (inside > allowed) {
                witness.ok = false;
                witness.violating_subset = subset;
                witness.edges_inside = inside;
                return false;
            }
            return true;
        });
    }
    return witness;
}

bool verify_edge_count(const Hypergraph& a, double sigma) {
    return static_cast<double>(a.edge_count()) >= required_edges(a.vertex_count(), a.uniformity(), sigma);
}

Hypergraph build_sparse(const SparseParams& p, SparseBuildInfo* info) {
    if (p.r < 2 || p.t < 1 || p.k < p.r || p.sigma < 0 || p.max_attempts < 1)
        throw InvalidInputError("build_sparse: invalid parameters");
    if (subsets_to_scan(p.t, p.r, std::min(p.k, p.t)) > p.subset_budget)
        throw SizeLimitError("build_sparse: subset scan exceeds budget");
    const double needed = required_edges(p.t, p.r, p.sigma);

    double rfact = 1.0;
    for (int i = 2; i <= p.r; ++i) rfact *= i;
    const double pstar = std::min(1.0, p.pstar_scale * p.sigma * rfact / static_cast<double>(p.t));

    const std::vector<Edge> candidates = all_r_subsets(p.t, p.r);
    long best_edges = -1;

    for (int attempt = 0; attempt < p.max_attempts; ++attempt) {
        std::mt19937_64 rng = substream(p.seed, attempt);
        std::uniform_real_distribution<double> unit(0.0, 1.0);

        std::vector<Edge> edges;
        for (const Edge& e : candidates)
            if (unit(rng) < pstar) edges.push_back(e);
        const long sampled = static_cast<long>(edges.size());

        // deletion pass: scan subset sizes r+1..k in lexicographic order and
        // delete the lexicographically last edge of each violator until clean
        long deleted = 0;
        const int top = std::min(p.k, p.t);
        bool dirty = true;
        while (dirty) {
            dirty = false;
            for (int size = p.r + 1; size <= top; ++size) {
                const long allowed = size - p.r + 1;
                for_each_subset(p.t, size, [&](const std::vector<int>& subset) {
                    while (count_inside(edges, subset) > allowed) {
                        // edges are kept sorted, so the last contained one is
                        // the lexicographically last
                        for (auto it = edges.rbegin(); it != edges.rend(); ++it) {
                            if (subset_contains(subset, *it)) {
                                edges.erase(std::next(it).base());
                                ++deleted;
                                dirty = true;
                                break;
                            }
                        }
                    }
                    return true;
                });
            }
        }

        if (static_cast<double>(edges.size()) >= needed) {
            Hypergraph a(p.r, p.t, edges);
            const SparsityWitness w = verify_local_sparsity(a, p.k, p.subset_budget);
            if (w.ok && verify_edge_count(a, p.sigma)) {
                if (info) *info = {attempt + 1, sampled, deleted};
                return a;
            }
        }
        best_edges = std::max(best_edges, static_cast<long>(edges.size()));
    }

    throw SparseBuildError("build_sparse: no valid graph after " + std::to_string(p.max_attempts) +
                               " attempts (best " + std::to_string(best_edges) + " edges, need " +
                               std::to_string(static_cast<long>(std::ceil(needed))) + ")",
                           best_edges, static_cast<long>(std::ceil(needed)));
}

}  // namespace hylag
