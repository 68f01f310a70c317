#include "hylag/polynomial.hpp"

#include <algorithm>
#include <string>

#include "hylag/errors.hpp"

namespace hylag {

SimplexPoly::SimplexPoly(int nvars, std::vector<Monomial> terms)
    : nvars_(nvars), degree_(0), nonneg_(true), terms_(std::move(terms)) {
    if (nvars_ < 1) throw InvalidInputError("SimplexPoly needs at least one variable");
    for (Monomial& t : terms_) {
        if (t.vars.empty()) throw InvalidInputError("SimplexPoly: constant monomial not allowed");
        std::sort(t.vars.begin(), t.vars.end());
        if (t.vars.front() < 0 || t.vars.back() >= nvars_)
            throw InvalidInputError("SimplexPoly: variable index out of range");
        if (t.coeff < 0) nonneg_ = false;
    }
    if (!terms_.empty()) {
        degree_ = static_cast<int>(terms_.front().vars.size());
        for (const Monomial& t : terms_)
            if (static_cast<int>(t.vars.size()) != degree_)
                throw InvalidInputError("SimplexPoly must be homogeneous");
    }
    coeff_d_.reserve(terms_.size());
    for (const Monomial& t : terms_) coeff_d_.push_back(to_double(t.coeff));
}

double SimplexPoly::eval(std::span<const double> x) const {
    if (static_cast<int>(x.size()) != nvars_)
        throw InvalidInputError("SimplexPoly::eval: dimension mismatch");
    double sum = 0.0;
    for (std::size_t i = 0; i < terms_.size(); ++i) {
        double prod = coeff_d_[i];
        for (int v : terms_[i].vars) prod *= x[v];
        sum += prod;
    }
    return sum;
}

Rat SimplexPoly::eval_exact(std::span<const Rat> x) const {
    if (static_cast<int>(x.size()) != nvars_)
        throw InvalidInputError("SimplexPoly::eval_exact: dimension mismatch");
    Rat sum = 0;
    for (const Monomial& t : terms_) {
        Rat prod = t.coeff;
        for (int v : t.vars) prod *= x[v];
        sum += prod;
    }
    return sum;
}

void SimplexPoly::gradient(std::span<const double> x, std::span<double> out) const {
    if (static_cast<int>(x.size()) != nvars_ || out.size() != x.size())
        throw InvalidInputError("SimplexPoly::gradient: dimension mismatch");
    std::fill(out.begin(), out.end(), 0.0);
    for (std::size_t i = 0; i < terms_.size(); ++i) {
        const auto& vars = terms_[i].vars;
        // d/dx_v of c * prod: for each run of equal indices of length m,
        // add c * m * x_v^(m-1) * (product over the other runs).
        std::size_t a = 0;
        while (a < vars.size()) {
            std::size_t b = a;
            while (b < vars.size() && vars[b] == vars[a]) ++b;
            const int v = vars[a];
            const int mult = static_cast<int>(b - a);
            double prod = coeff_d_[i] * mult;
            for (int k = 1; k < mult; ++k) prod *= x[v];
            for (std::size_t c = 0; c < vars.size();) {
                std::size_t d = c;
                while (d < vars.size() && vars[d] == vars[c]) ++d;
                if (vars[c] != v)
                    for (std::size_t k = c; k < d; ++k) prod *= x[vars[c]];
                c = d;
            }
            out[v] += prod;
            a = b;
        }
    }
}

SimplexPoly SimplexPoly::from_hypergraph(const Hypergraph& g) {
    std::vector<Monomial> terms;
    terms.reserve(g.edge_count());
    for (const Edge& e : g.edges()) terms.push_back({Rat(1), e});
    const int nvars = std::max(1, g.vertex_count());
    return SimplexPoly(nvars, std::move(terms));
}

}  // namespace hylag
