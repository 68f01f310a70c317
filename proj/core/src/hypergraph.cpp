#include "hylag/hypergraph.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "hylag/errors.hpp"

namespace hylag {

Hypergraph::Hypergraph(int r, int n, std::vector<Edge> edges) : r_(r), n_(n), edges_(std::move(edges)) {
    if (r_ < 1) throw InvalidInputError("uniformity must be >= 1, got " + std::to_string(r_));
    if (n_ < 0) throw InvalidInputError("vertex count must be >= 0, got " + std::to_string(n_));
    for (Edge& e : edges_) {
        if (static_cast<int>(e.size()) != r_)
            throw InvalidInputError("edge has " + std::to_string(e.size()) + " vertices, expected " +
                                    std::to_string(r_));
        std::sort(e.begin(), e.end());
        if (std::adjacent_find(e.begin(), e.end()) != e.end())
            throw InvalidInputError("edge contains a repeated vertex");
        if (e.front() < 0 || e.back() >= n_)
            throw InvalidInputError("edge vertex out of range [0, " + std::to_string(n_) + ")");
    }
    std::sort(edges_.begin(), edges_.end());
    if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
        throw InvalidInputError("duplicate edge");
}

Hypergraph Hypergraph::complete(int r, int n) {
    if (r < 1 || n < 0) throw InvalidInputError("complete(r, n) needs r >= 1, n >= 0");
    std::vector<Edge> edges;
    if (n >= r) {
        Edge e(r);
        for (int i = 0; i < r; ++i) e[i] = i;
        while (true) {
            edges.push_back(e);
            int i = r - 1;
            while (i >= 0 && e[i] == n - r + i) --i;
            if (i < 0) break;
            ++e[i];
            for (int j = i + 1; j < r; ++j) e[j] = e[j - 1] + 1;
        }
    }
    return Hypergraph(r, n, std::move(edges));
}

Hypergraph Hypergraph::single_edge(int r) {
    Edge e(r);
    for (int i = 0; i < r; ++i) e[i] = i;
    return Hypergraph(r, r, {e});
}

bool Hypergraph::has_edge(const Edge& e) const {
    return std::binary_search(edges_.begin(), edges_.end(), e);
}

Rat density(const Hypergraph& g) {
    if (g.vertex_count() < g.uniformity())
        throw InvalidInputError("density needs n >= r");
    return Rat(Int(g.edge_count())) / Rat(binomial(g.vertex_count(), g.uniformity()));
}

Hypergraph induced_subgraph(const Hypergraph& g, std::span<const int> vertices) {
    std::vector<int> keep(vertices.begin(), vertices.end());
    std::sort(keep.begin(), keep.end());
    keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
    if (keep.size() != vertices.size())
        throw InvalidInputError("induced_subgraph: repeated vertex in subset");
    if (!keep.empty() && (keep.front() < 0 || keep.back() >= g.vertex_count()))
        throw InvalidInputError("induced_subgraph: vertex out of range");

    std::vector<int> relabel(g.vertex_count(), -1);
    for (std::size_t i = 0; i < keep.size(); ++i) relabel[keep[i]] = static_cast<int>(i);

    std::vector<Edge> edges;
    for (const Edge& e : g.edges()) {
        Edge mapped;
        mapped.reserve(e.size());
        for (int v : e) {
            if (relabel[v] < 0) break;
            mapped.push_back(relabel[v]);
        }
        if (mapped.size() == e.size()) edges.push_back(std::move(mapped));
    }
    return Hypergraph(g.uniformity(), static_cast<int>(keep.size()), std::move(edges));
}

Hypergraph link(const Hypergraph& g, int v) {
    if (g.uniformity() < 2) throw InvalidInputError("link needs uniformity >= 2");
    if (v < 0 || v >= g.vertex_count()) throw InvalidInputError("link: vertex out of range");
    std::vector<Edge> edges;
    for (const Edge& e : g.edges()) {
        if (!std::binary_search(e.begin(), e.end(), v)) continue;
        Edge f;
        f.reserve(e.size() - 1);
        for (int u : e)
            if (u != v) f.push_back(u > v ? u - 1 : u);
        edges.push_back(std::move(f));
    }
    return Hypergraph(g.uniformity() - 1, g.vertex_count() - 1, std::move(edges));
}

namespace {

// Link of `a` restricted to V - {a, b}: the (r-1)-sets f with f + {a} an edge
// and b not in f. Vertices keep their original labels.
std::set<Edge> restricted_link(const Hypergraph& g, int a, int b) {
    std::set<Edge> out;
    for (const Edge& e : g.edges()) {
        if (!std::binary_search(e.begin(), e.end(), a)) continue;
        if (std::binary_search(e.begin(), e.end(), b)) continue;
        Edge f;
        f.reserve(e.size() - 1);
        for (int u : e)
            if (u != a) f.push_back(u);
        out.insert(std::move(f));
    }
    return out;
}

}  // namespace

bool equivalent(const Hypergraph& g, int i, int j) {
    if (i == j) throw InvalidInputError("equivalent: vertices must be distinct");
    if (i < 0 || j < 0 || i >= g.vertex_count() || j >= g.vertex_count())
        throw InvalidInputError("equivalent: vertex out of range");
    // Both sides are families of (r-1)-sets inside V - {i, j}, so they are
    // directly comparable without relabeling.
    return restricted_link(g, i, j) == restricted_link(g, j, i);
}

std::vector<std::vector<int>> symmetry_classes(const Hypergraph& g) {
    std::vector<std::vector<int>> classes;
    for (int v = 0; v < g.vertex_count(); ++v) {
        bool placed = false;
        for (auto& cls : classes) {
            bool all = true;
            for (int u : cls) {
                if (!equivalent(g, u, v)) {
                    all = false;
                    break;
                }
            }
            if (all) {
                cls.push_back(v);
                placed = true;
                break;
            }
        }
        if (!placed) classes.push_back({v});
    }
    return classes;
}

Hypergraph blow_up(const Hypergraph& g, const BlowupVector& nv) {
    if (static_cast<int>(nv.size()) != g.vertex_count())
        throw InvalidInputError("blow_up: size vector length must equal vertex count");
    for (int s : nv)
        if (s < 1) throw InvalidInputError("blow_up: every class size must be >= 1");

    std::vector<int> offset(nv.size() + 1, 0);
    for (std::size_t i = 0; i < nv.size(); ++i) offset[i + 1] = offset[i] + nv[i];
    const int n = offset.back();

    std::vector<Edge> edges;
    const int r = g.uniformity();
    for (const Edge& e : g.edges()) {
        std::vector<int> pick(r, 0);
        while (true) {
            Edge copy(r);
            for (int i = 0; i < r; ++i) copy[i] = offset[e[i]] + pick[i];
            edges.push_back(std::move(copy));
            int i = r - 1;
            while (i >= 0 && pick[i] + 1 == nv[e[i]]) pick[i--] = 0;
            if (i < 0) break;
            ++pick[i];
        }
    }
    return Hypergraph(r, n, std::move(edges));
}

}  // namespace hylag
