#pragma once

#include <span>
#include <vector>

#include "hylag/rational.hpp"

namespace hylag {

/// An edge is a strictly increasing list of vertex ids.
using Edge = std::vector<int>;

/// Immutable r-uniform hypergraph on vertices {0, ..., n-1}.
///
/// Edges are stored sorted (within each edge and lexicographically across
/// edges) with duplicates rejected, so equal graphs have equal
/// representations and file output is deterministic.
class Hypergraph {
public:
    Hypergraph(int r, int n, std::vector<Edge> edges);

    static Hypergraph empty(int r, int n) { return Hypergraph(r, n, {}); }
    static Hypergraph complete(int r, int n);
    /// Single edge {0,...,r-1} on exactly r vertices.
    static Hypergraph single_edge(int r);

    int uniformity() const { return r_; }
    int vertex_count() const { return n_; }
    std::size_t edge_count() const { return edges_.size(); }
    const std::vector<Edge>& edges() const { return edges_; }

    bool has_edge(const Edge& e) const;

    bool operator==(const Hypergraph& other) const = default;

private:
    int r_;
    int n_;
    std::vector<Edge> edges_;
};

/// |E| / C(n, r) as an exact rational. Requires n >= r.
Rat density(const Hypergraph& g);

/// Subgraph induced on `vertices` (any order, duplicates rejected), relabeled
/// to 0..|S|-1 preserving the original vertex order.
Hypergraph induced_subgraph(const Hypergraph& g, std::span<const int> vertices);

/// (r-1)-uniform link of vertex v: e is an edge iff e + {v} is an edge of g.
/// Vertex v is removed and the rest relabeled order-preservingly.
Hypergraph link(const Hypergraph& g, int v);

/// True iff i and j have identical links off {i, j}.
bool equivalent(const Hypergraph& g, int i, int j);

/// Partition of the vertex set into classes of pairwise-equivalent vertices.
/// A vertex joins the first class all of whose members it is equivalent to,
/// so pairwise equivalence inside each class holds by construction.
std::vector<std::vector<int>> symmetry_classes(const Hypergraph& g);

/// Class sizes for a blow-up, one entry (>= 1) per vertex of the base graph.
using BlowupVector = std::vector<int>;

/// Blow-up: vertex i becomes a class of nv[i] clones; every edge becomes the
/// set of its rainbow copies (one clone per class).
Hypergraph blow_up(const Hypergraph& g, const BlowupVector& nv);

}  // namespace hylag
