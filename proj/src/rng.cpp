#include "cspchain/rng.hpp"

#include <cmath>
#include <stdexcept>

namespace cspchain {

PoissonSampler::PoissonSampler(double lambda) : lambda_(lambda) {
    if (!(lambda >= 0.0) || !std::isfinite(lambda))
        throw std::invalid_argument("PoissonSampler: lambda must be finite and >= 0");
    // pmf recurrence p_{k} = p_{k-1} * lambda / k, accumulated until the tail
    // is below 1e-17 (and at least mean + 12 sqrt(mean) entries).
    double p = std::exp(-lambda);
    double c = p;
    cdf_.push_back(c);
    const int kmin = static_cast<int>(lambda + 12.0 * std::sqrt(lambda + 1.0)) + 2;
    for (int k = 1; k < 4096; ++k) {
        p *= lambda / k;
        c += p;
        cdf_.push_back(c);
        if (k > kmin && 1.0 - c < 1e-17) break;
    }
}

} // namespace cspchain
