#include "dshift/zeta.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "dshift/multiindex.hpp"

namespace dshift {

namespace {

// exact dim as a double; __int128 numerator is exact for d <= 8, n <= 1e7
double dim_as_double(int d, long n) {
    if (d <= 8 && n <= 10000000L) {
        unsigned __int128 num = 1;
        for (int i = 1; i <= d - 1; ++i) num *= static_cast<unsigned long>(n + i);
        unsigned long den = 1;
        for (int i = 2; i <= d - 1; ++i) den *= static_cast<unsigned long>(i);
        return static_cast<double>(num / den) +
               static_cast<double>(num % den) / static_cast<double>(den);
    }
    return static_cast<double>(dim_symmetric(d, static_cast<int>(n)));
}

}  // namespace

double zeta_partial(int d, double p, long cutoff) {
    if (d < 1) throw std::invalid_argument("zeta_partial: d must be >= 1");
    if (p <= 0.0) throw std::invalid_argument("zeta_partial: p must be > 0");
    if (cutoff < 1) throw std::invalid_argument("zeta_partial: cutoff must be >= 1");
    double acc = 0.0, comp = 0.0;
    for (long n = 0; n <= cutoff; ++n) {
        double term = dim_as_double(d, n) / std::pow(static_cast<double>(n + 1), p);
        double y = term - comp;
        double t = acc + y;
        comp = (t - acc) - y;
        acc = t;
    }
    return acc;
}

TraceReport convergence_verdict(int d, double p, long cutoff) {
    if (d < 1) throw std::invalid_argument("convergence_verdict: d must be >= 1");
    if (p <= 0.0) throw std::invalid_argument("convergence_verdict: p must be > 0");
    TraceReport r;
    r.d = d;
    r.p = p;
    r.cutoff = cutoff;
    r.partial_sum = zeta_partial(d, p, cutoff);
    if (p > static_cast<double>(d)) {
        r.verdict = "convergent";
        // summand <= C (n+1)^{d-1-p}/(d-1)! with C the (decreasing) ratio of
        // the exact dimension to its asymptote, taken at the cutoff
        double fact = 1.0;
        for (int i = 2; i <= d - 1; ++i) fact *= i;
        double c = dim_as_double(d, cutoff) * fact /
                   std::pow(static_cast<double>(cutoff + 1), d - 1);
        r.tail_bound = c * std::pow(static_cast<double>(cutoff), d - p) / ((p - d) * fact);
        r.slow = r.tail_bound > 1.0;
    } else {
        r.verdict = "divergent";
        r.boundary = (p == static_cast<double>(d));
        r.tail_bound = std::numeric_limits<double>::infinity();
    }
    return r;
}

}  // namespace dshift
