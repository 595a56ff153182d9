#ifndef DSHIFT_ZETA_HPP
#define DSHIFT_ZETA_HPP

#include <string>

namespace dshift {

/// Partial sum sum_{n=0}^{M} dim(d,n) / (n+1)^p with exact dimensions and
/// Kahan-compensated floating accumulation.
double zeta_partial(int d, double p, long cutoff);

struct TraceReport {
    int d = 0;
    double p = 0.0;
    long cutoff = 0;
    double partial_sum = 0.0;
    double tail_bound = 0.0;       // integral comparison bound past the cutoff
    std::string verdict;           // "convergent" or "divergent"
    bool boundary = false;         // p == d
    bool slow = false;             // convergent but with an enormous tail
};

/// Integral-test verdict on sum dim(d,n)/(n+1)^p: convergent iff p > d.
/// Divergence is decided analytically, never from partial-sum growth.
TraceReport convergence_verdict(int d, double p, long cutoff = 10000);

}  // namespace dshift

#endif
