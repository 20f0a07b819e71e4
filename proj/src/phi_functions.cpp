#include "gfpc/phi_functions.hpp"

#include <cmath>
#include <stdexcept>

namespace gfpc {
namespace {

constexpr int kTaylorTerms = 24;
constexpr double kTaylorRadius = 2.0;

// 1/n! for n = 0..kTaylorTerms+4
constexpr int kMaxFact = kTaylorTerms + 5;
const double* inv_factorials() {
    static double inv[kMaxFact];
    static bool init = [] {
        double f = 1.0;
        inv[0] = 1.0;
        for (int n = 1; n < kMaxFact; ++n) {
            f *= n;
            inv[n] = 1.0 / f;
        }
        return true;
    }();
    (void)init;
    return inv;
}

} // namespace

double phi_eval(int k, double z) {
    if (k < 0 || k > 4) throw std::invalid_argument("phi_eval: k must be in [0, 4]");
    if (!std::isfinite(z)) throw std::invalid_argument("phi_eval: z must be finite");
    const double* inv = inv_factorials();
    if (std::abs(z) < kTaylorRadius) {
        // phi_k(z) = sum_{j>=0} z^j / (j+k)!; remainder after 24 terms < 2^24/24!
        double acc = inv[kTaylorTerms - 1 + k];
        for (int j = kTaylorTerms - 2; j >= 0; --j) acc = acc * z + inv[j + k];
        return acc;
    }
    // upward recurrence from e^z; the subtraction does not cancel for |z| >= 2
    double v = std::exp(z);
    for (int m = 0; m < k; ++m) v = (v - inv[m]) / z;
    return v;
}

} // namespace gfpc
