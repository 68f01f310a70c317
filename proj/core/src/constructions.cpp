#include "hylag/constructions.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

#include "hylag/errors.hpp"

namespace hylag {

std::string family_name(Family f) {
    switch (f) {
        case Family::Alpha: return "alpha";
        case Family::Complement: return "complement";
        case Family::N12_125: return "n12_125";
        case Family::N96_625: return "n96_625";
        case Family::N252_625: return "n252_625";
    }
    throw InvalidInputError("unknown family");
}

Family family_from_name(std::string_view name) {
    for (Family f : kAllFamilies)
        if (family_name(f) == name) return f;
    throw InvalidInputError("unknown family name: " + std::string(name));
}

namespace {

bool fixed_ell5(Family f) {
    return f == Family::N12_125 || f == Family::N96_625 || f == Family::N252_625;
}

}  // namespace

void validate(const ConstructionParams& p) {
    if (p.ell < 2) throw InvalidInputError("ell must be >= 2");
    if (fixed_ell5(p.family) && p.ell != 5)
        throw InvalidInputError(family_name(p.family) + " requires ell = 5");
    if (p.q < 1) throw InvalidInputError("q must be >= 1");
    if (p.t < 1) throw InvalidInputError("t must be >= 1");
    if (p.r < 5) throw InvalidInputError("r must be >= 5");
}

Rat alpha_value(int ell) {
    if (ell < 2) throw InvalidInputError("alpha_value: ell must be >= 2");
    const Rat l(ell);
    return 1 - 5 / pow_rat(l, 3) + 4 / pow_rat(l, 4);
}

Rat n_of_ell(Family f, int ell) {
    if (ell < 2) throw InvalidInputError("n_of_ell: ell must be >= 2");
    if (fixed_ell5(f) && ell != 5)
        throw InvalidInputError("n_of_ell: " + family_name(f) + " requires ell = 5");
    switch (f) {
        case Family::Alpha: return alpha_value(ell);
        case Family::Complement: return 1 - 1 / pow_rat(Rat(ell), 4);
        case Family::N12_125: return rat(12, 125);
        case Family::N96_625: return rat(96, 625);
        case Family::N252_625: return rat(252, 625);
    }
    throw InvalidInputError("unknown family");
}

Rat n_of_ell_q(Family f, int ell, int q) {
    if (q < 1) throw InvalidInputError("n_of_ell_q: q must be >= 1");
    const Rat n = n_of_ell(f, ell);
    const Rat l(ell), qq(q);
    const Rat q4 = pow_rat(qq, 4);
    return 1 - 10 / (l * qq) + 35 / (l * l * qq * qq) - 50 / (l * l * l * qq * qq * qq) +
           10 / (l * q4) - 35 / (l * l * q4) + 50 / (l * l * l * q4) - 1 / q4 + n / q4;
}

Rat n_of_ell_q_derivative(Family f, int ell, int q) {
    if (q < 1) throw InvalidInputError("n_of_ell_q_derivative: q must be >= 1");
    const Rat n = n_of_ell(f, ell);
    const Rat l(ell), qq(q);
    const Rat q5 = pow_rat(qq, 5);
    // termwise derivative of n_of_ell_q in q
    return 10 / (l * qq * qq) - 70 / (l * l * qq * qq * qq) + 150 / (l * l * l * pow_rat(qq, 4)) -
           4 * (10 / l - 35 / (l * l) + 50 / (l * l * l) - 1 + n) / q5;
}

Rat layering_condition_lhs(Family f, int ell, int q) {
    const Rat n = n_of_ell(f, ell);
    const Rat l(ell), qq(q);
    return l * l * l * (1 - n) * (qq * qq * qq + qq * qq + qq + 1) -
           10 * l * l * (qq * qq + qq + 1) + 35 * l * (qq + 1) - 50;
}

bool layering_condition(Family f, int ell, int q) {
    if (q < 1) throw InvalidInputError("layering_condition: q must be >= 1");
    return q == 1 || layering_condition_lhs(f, ell, q) >= 0;
}

std::vector<EdgeType> family_edge_types(Family f, int ell) {
    if (ell < 2) throw InvalidInputError("family_edge_types: ell must be >= 2");
    if (fixed_ell5(f) && ell != 5)
        throw InvalidInputError("family_edge_types: " + family_name(f) + " requires ell = 5");
    std::vector<EdgeType> types;
    switch (f) {
        case Family::Alpha: {
            // one vertex from each of five parts
            for (int i = 0; i < ell; ++i)
                for (int j = i + 1; j < ell; ++j)
                    for (int k = j + 1; k < ell; ++k)
                        for (int h = k + 1; h < ell; ++h)
                            for (int s = h + 1; s < ell; ++s)
                                types.push_back({{{i, 1}, {j, 1}, {k, 1}, {h, 1}, {s, 1}}});
            // two from one part, one from each of three others
            for (int i = 0; i < ell; ++i)
                for (int j = 0; j < ell; ++j)
                    for (int k = j + 1; k < ell; ++k)
                        for (int h = k + 1; h < ell; ++h)
                            if (j != i && k != i && h != i)
                                types.push_back({{{i, 2}, {j, 1}, {k, 1}, {h, 1}}});
            // two + two + one
            for (int i = 0; i < ell; ++i)
                for (int j = i + 1; j < ell; ++j)
                    for (int k = 0; k < ell; ++k)
                        if (k != i && k != j) types.push_back({{{i, 2}, {j, 2}, {k, 1}}});
            // three + one + one
            for (int i = 0; i < ell; ++i)
                for (int j = 0; j < ell; ++j)
                    for (int k = j + 1; k < ell; ++k)
                        if (j != i && k != i) types.push_back({{{i, 3}, {j, 1}, {k, 1}}});
            // three + two
            for (int i = 0; i < ell; ++i)
                for (int j = 0; j < ell; ++j)
                    if (j != i) types.push_back({{{i, 3}, {j, 2}}});
            break;
        }
        case Family::Complement: {
            // every multiset of five parts except a single part repeated
            std::vector<int> pick(5, 0);
            while (true) {
                if (pick.front() != pick.back()) {
                    EdgeType ty;
                    for (int p = 0; p < ell; ++p) {
                        const int m = static_cast<int>(std::count(pick.begin(), pick.end(), p));
                        if (m > 0) ty.part_mult.push_back({p, m});
                    }
                    types.push_back(std::move(ty));
                }
                int i = 4;
                while (i >= 0 && pick[i] == ell - 1) --i;
                if (i < 0) break;
                ++pick[i];
                for (int j = i + 1; j < 5; ++j) pick[j] = pick[i];
            }
            break;
        }
        case Family::N12_125: {
            types.push_back({{{0, 1}, {1, 1}, {2, 1}, {3, 1}, {4, 1}}});
            // ordered pair structure: pairs in part 0 go with part 1,
            // pairs in part 1 with part 2, pairs in part 2 with part 0
            types.push_back({{{0, 2}, {1, 1}, {3, 1}, {4, 1}}});
            types.push_back({{{1, 2}, {2, 1}, {3, 1}, {4, 1}}});
            types.push_back({{{0, 1}, {2, 2}, {3, 1}, {4, 1}}});
            break;
        }
        case Family::N96_625: {
            types.push_back({{{0, 1}, {1, 1}, {2, 1}, {3, 1}, {4, 1}}});
            for (int i = 0; i < 3; ++i)
                for (int j = 0; j < 3; ++j)
                    if (j != i) {
                        EdgeType ty{{{i, 2}, {j, 1}, {3, 1}, {4, 1}}};
                        std::sort(ty.part_mult.begin(), ty.part_mult.end());
                        types.push_back(std::move(ty));
                    }
            break;
        }
        case Family::N252_625: {
            // 4-multisets over parts 0..3 that are not inside one part, plus part 4
            std::vector<int> pick(4, 0);
            while (true) {
                if (pick.front() != pick.back()) {
                    EdgeType ty;
                    for (int p = 0; p < 4; ++p) {
                        const int m = static_cast<int>(std::count(pick.begin(), pick.end(), p));
                        if (m > 0) ty.part_mult.push_back({p, m});
                    }
                    ty.part_mult.push_back({4, 1});
                    types.push_back(std::move(ty));
                }
                int i = 3;
                while (i >= 0 && pick[i] == 3) --i;
                if (i < 0) break;
                ++pick[i];
                for (int j = i + 1; j < 4; ++j) pick[j] = pick[i];
            }
            break;
        }
    }
    return types;
}

namespace {

// Append every edge matching one type: choose mult vertices from each listed
// part, parts laid out as [part*t, (part+1)*t) shifted by `offset`.
void emit_type_edges(const EdgeType& type, int t, int offset, std::vector<Edge>& out) {
    std::vector<std::size_t> idx(type.part_mult.size(), 0);
    std::vector<std::vector<std::vector<int>>> per_part;
    for (const auto& [part, mult] : type.part_mult) {
        if (mult > t) return;  // vacant type at this part size
        std::vector<std::vector<int>> cs;
        std::vector<int> c(mult);
        for (int i = 0; i < mult; ++i) c[i] = i;
        while (true) {
            std::vector<int> mapped(mult);
            for (int i = 0; i < mult; ++i) mapped[i] = offset + part * t + c[i];
            cs.push_back(std::move(mapped));
            int i = mult - 1;
            while (i >= 0 && c[i] == t - mult + i) --i;
            if (i < 0) break;
            ++c[i];
            for (int j = i + 1; j < mult; ++j) c[j] = c[j - 1] + 1;
        }
        per_part.push_back(std::move(cs));
    }
    while (true) {
        Edge e;
        e.reserve(5);
        for (std::size_t p = 0; p < per_part.size(); ++p)
            e.insert(e.end(), per_part[p][idx[p]].begin(), per_part[p][idx[p]].end());
        out.push_back(std::move(e));
        int p = static_cast<int>(per_part.size()) - 1;
        while (p >= 0 && idx[p] + 1 == per_part[p].size()) idx[p--] = 0;
        if (p < 0) break;
        ++idx[p];
    }
}

}  // namespace

Hypergraph build_base(const ConstructionParams& p) {
    validate(p);
    std::vector<Edge> edges;
    for (const EdgeType& type : family_edge_types(p.family, p.ell))
        emit_type_edges(type, p.t, 0, edges);
    return Hypergraph(5, p.ell * p.t, std::move(edges));
}

Hypergraph build_layered(const ConstructionParams& p) {
    validate(p);
    const int parts = p.ell * p.q;
    std::vector<Edge> edges;
    const std::vector<EdgeType> types = family_edge_types(p.family, p.ell);
    for (int block = 0; block < p.q; ++block)
        for (const EdgeType& type : types) emit_type_edges(type, p.t, block * p.ell * p.t, edges);

    // rainbow 5-sets across parts, skipping those inside a single block
    if (parts >= 5) {
        std::vector<int> ps(5);
        for (int i = 0; i < 5; ++i) ps[i] = i;
        while (true) {
            if (ps.front() / p.ell != ps.back() / p.ell) {
                std::vector<int> pick(5, 0);
                while (true) {
                    Edge e(5);
                    for (int i = 0; i < 5; ++i) e[i] = ps[i] * p.t + pick[i];
                    edges.push_back(std::move(e));
                    int i = 4;
                    while (i >= 0 && pick[i] + 1 == p.t) pick[i--] = 0;
                    if (i < 0) break;
                    ++pick[i];
                }
            }
            int i = 4;
            while (i >= 0 && ps[i] == parts - 5 + i) --i;
            if (i < 0) break;
            ++ps[i];
            for (int j = i + 1; j < 5; ++j) ps[j] = ps[j - 1] + 1;
        }
    }
    return Hypergraph(5, parts * p.t, std::move(edges));
}

Hypergraph attach_sparse(const Hypergraph& g, const Hypergraph& a, std::span<const int> part1) {
    if (a.uniformity() != g.uniformity())
        throw InvalidInputError("attach_sparse: uniformity mismatch");
    if (a.vertex_count() != static_cast<int>(part1.size()))
        throw InvalidInputError("attach_sparse: sparse graph order must equal the target part size");
    for (int v : part1)
        if (v < 0 || v >= g.vertex_count())
            throw InvalidInputError("attach_sparse: part vertex out of range");

    std::vector<Edge> edges = g.edges();
    for (const Edge& e : a.edges()) {
        Edge mapped;
        mapped.reserve(e.size());
        for (int v : e) mapped.push_back(part1[v]);
        std::sort(mapped.begin(), mapped.end());
        if (g.has_edge(mapped))
            throw InvalidInputError("attach_sparse: edge already present inside the part");
        edges.push_back(std::move(mapped));
    }
    return Hypergraph(g.uniformity(), g.vertex_count(), std::move(edges));
}

Hypergraph lift_to_r(const Hypergraph& h5, int r, int t) {
    if (r < 6) throw InvalidInputError("lift_to_r: r must be >= 6 (use the base graph for r = 5)");
    if (h5.uniformity() != 5) throw InvalidInputError("lift_to_r: base graph must be 5-uniform");
    if (t < 1 || h5.vertex_count() != 5 * t)
        throw InvalidInputError("lift_to_r: base graph must live on 5 parts of size t");

    const int extra = r - 5;
    std::vector<Edge> edges;
    for (const Edge& base : h5.edges()) {
        std::vector<int> pick(extra, 0);
        while (true) {
            Edge e = base;
            e.reserve(r);
            for (int j = 0; j < extra; ++j) e.push_back(5 * t + j * t + pick[j]);
            edges.push_back(std::move(e));
            int j = extra - 1;
            while (j >= 0 && pick[j] + 1 == t) pick[j--] = 0;
            if (j < 0) break;
            ++pick[j];
        }
    }
    return Hypergraph(r, r * t, std::move(edges));
}

Hypergraph weighted_blowup(const Hypergraph& g, std::span<const double> y, int n) {
    if (static_cast<int>(y.size()) != g.vertex_count())
        throw InvalidInputError("weighted_blowup: weight vector length mismatch");
    std::vector<int> keep;
    BlowupVector sizes;
    for (int i = 0; i < g.vertex_count(); ++i) {
        const int size = static_cast<int>(std::floor(static_cast<double>(n) * y[i]));
        if (size >= 1) {
            keep.push_back(i);
            sizes.push_back(size);
        }
    }
    if (keep.empty()) throw InvalidInputError("weighted_blowup: every class is empty");
    return blow_up(induced_subgraph(g, keep), sizes);
}

Int base_edge_count(Family f, int ell, int t) {
    const Int T(t), L(ell);
    switch (f) {
        case Family::Alpha:
            return binomial(ell, 5) * pow(T, 5) + L * binomial(ell - 1, 3) * binomial(t, 2) * pow(T, 3) +
                   binomial(ell, 2) * (L - 2) * binomial(t, 2) * binomial(t, 2) * T +
                   L * binomial(ell - 1, 2) * binomial(t, 3) * pow(T, 2) +
                   L * (L - 1) * binomial(t, 3) * binomial(t, 2);
        case Family::Complement:
            return binomial(static_cast<long long>(ell) * t, 5) - L * binomial(t, 5);
        case Family::N12_125:
            return pow(T, 5) + 3 * binomial(t, 2) * pow(T, 3);
        case Family::N96_625:
            return (binomial(3LL * t, 3) - 3 * binomial(t, 3)) * pow(T, 2);
        case Family::N252_625:
            return (binomial(4LL * t, 4) - 4 * binomial(t, 4)) * T;
    }
    throw InvalidInputError("unknown family");
}

Int layered_edge_count(Family f, int ell, int q, int t) {
    return Int(q) * base_edge_count(f, ell, t) +
           (binomial(static_cast<long long>(ell) * q, 5) - Int(q) * binomial(ell, 5)) * pow(Int(t), 5);
}

std::vector<Rat> alpha_edge_poly_in_t(int ell) {
    if (ell < 2) throw InvalidInputError("alpha_edge_poly_in_t: ell must be >= 2");
    std::vector<std::vector<Rat>> vand(6, std::vector<Rat>(6));
    std::vector<Rat> rhs(6);
    for (int row = 0; row < 6; ++row) {
        const int t = row + 1;
        Rat p = 1;
        for (int d = 0; d < 6; ++d) {
            vand[row][d] = p;
            p *= t;
        }
        rhs[row] = Rat(base_edge_count(Family::Alpha, ell, t));
    }
    std::vector<Rat> coeffs = solve_linear(std::move(vand), std::move(rhs));
    for (int t = 7; t <= 8; ++t) {
        Rat value = 0, p = 1;
        for (int d = 0; d < 6; ++d) {
            value += coeffs[d] * p;
            p *= t;
        }
        if (value != Rat(base_edge_count(Family::Alpha, ell, t)))
            throw SizeLimitError("alpha_edge_poly_in_t: interpolation check failed");
    }
    return coeffs;
}

Rat c0_of_ell(int ell) { return -alpha_edge_poly_in_t(ell)[4]; }

bool padded_density_holds(Family f, int ell, int t) {
    if (t < 1) throw InvalidInputError("padded_density_holds: t must be >= 1");
    const Rat l(ell), tt(t);
    const Rat lhs = (Rat(base_edge_count(f, ell, t)) + pow_rat(l, 4) * pow_rat(tt, 4) / 12) /
                    pow_rat(l * tt, 5);
    const Rat rhs = (n_of_ell(f, ell) + 1 / (pow_rat(l, 5) * tt)) / 120;
    return lhs >= rhs;
}

int padded_density_threshold(Family f, int ell, int t_max) {
    int t1 = 0;
    for (int t = t_max; t >= 1; --t) {
        if (!padded_density_holds(f, ell, t)) break;
        t1 = t;
    }
    return t1;
}

}  // namespace hylag
