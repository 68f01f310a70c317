#include "hylag/rational.hpp"

#include <stdexcept>
#include <vector>

namespace hylag {

Int binomial(long long n, long long k) {
    if (k < 0 || k > n || n < 0) return 0;
    k = std::min(k, n - k);
    Int result = 1;
    for (long long i = 1; i <= k; ++i) {
        result *= (n - k + i);
        result /= i;  // exact: product of i consecutive integers is divisible by i!
    }
    return result;
}

Rat pow_rat(const Rat& base, unsigned exp) {
    Rat result = 1;
    Rat b = base;
    while (exp > 0) {
        if (exp & 1u) result *= b;
        b *= b;
        exp >>= 1u;
    }
    return result;
}

double to_double(const Rat& x) { return x.convert_to<double>(); }

std::string rat_string(const Rat& x) {
    const Int num = boost::multiprecision::numerator(x);
    const Int den = boost::multiprecision::denominator(x);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

std::vector<Rat> solve_linear(std::vector<std::vector<Rat>> a, std::vector<Rat> b) {
    const std::size_t n = b.size();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && a[pivot][col] == 0) ++pivot;
        if (pivot == n) throw std::runtime_error("solve_linear: singular system");
        std::swap(a[pivot], a[col]);
        std::swap(b[pivot], b[col]);
        for (std::size_t row = 0; row < n; ++row) {
            if (row == col || a[row][col] == 0) continue;
            const Rat factor = a[row][col] / a[col][col];
            for (std::size_t k = col; k < n; ++k) a[row][k] -= factor * a[col][k];
            b[row] -= factor * b[col];
        }
    }
    std::vector<Rat> x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = b[i] / a[i][i];
    return x;
}

}  // namespace hylag
