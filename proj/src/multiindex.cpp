#include "dshift/multiindex.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace dshift {

int total_degree(const MultiIndex& alpha) {
    return std::accumulate(alpha.begin(), alpha.end(), 0);
}

BigInt factorial(int n) {
    if (n < 0) throw std::invalid_argument("factorial: negative argument");
    BigInt r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

BigInt multiindex_factorial(const MultiIndex& alpha) {
    BigInt r = 1;
    for (int a : alpha) r *= factorial(a);
    return r;
}

BigInt dim_symmetric(int d, int n) {
    if (d < 1) throw std::invalid_argument("dim_symmetric: d must be >= 1");
    if (n < 0) throw std::invalid_argument("dim_symmetric: n must be >= 0");
    // (n+d-1)! / (n! (d-1)!) as a falling-product binomial
    BigInt num = 1, den = 1;
    for (int i = 1; i <= d - 1; ++i) {
        num *= n + i;
        den *= i;
    }
    return num / den;
}

BigInt dim_by_recurrence(int d, int n) {
    if (d < 1) throw std::invalid_argument("dim_by_recurrence: d must be >= 1");
    if (n < 0) throw std::invalid_argument("dim_by_recurrence: n must be >= 0");
    std::vector<BigInt> a(static_cast<size_t>(n) + 1, BigInt(1));  // d = 1 row
    for (int dd = 2; dd <= d; ++dd) {
        BigInt acc = 0;
        for (int k = 0; k <= n; ++k) {
            acc += a[static_cast<size_t>(k)];
            a[static_cast<size_t>(k)] = acc;
        }
    }
    return a[static_cast<size_t>(n)];
}

double dim_asymptotic_ratio(int d, int n) {
    if (n < 1) throw std::invalid_argument("dim_asymptotic_ratio: n must be >= 1");
    Rational r(dim_symmetric(d, n) * factorial(d - 1), 1);
    BigInt pow = 1;
    for (int i = 0; i < d - 1; ++i) pow *= (n + 1);
    r /= pow;
    return static_cast<double>(r);
}

namespace {
void enumerate_rec(int d, int n, MultiIndex& cur, std::vector<MultiIndex>& out) {
    if (d == 1) {
        cur.push_back(n);
        out.push_back(cur);
        cur.pop_back();
        return;
    }
    for (int k = n; k >= 0; --k) {
        cur.push_back(k);
        enumerate_rec(d - 1, n - k, cur, out);
        cur.pop_back();
    }
}
}  // namespace

std::vector<MultiIndex> enumerate_degree(int d, int n) {
    if (d < 1) throw std::invalid_argument("enumerate_degree: d must be >= 1");
    if (n < 0) throw std::invalid_argument("enumerate_degree: n must be >= 0");
    std::vector<MultiIndex> out;
    MultiIndex cur;
    cur.reserve(static_cast<size_t>(d));
    enumerate_rec(d, n, cur, out);
    return out;
}

}  // namespace dshift
