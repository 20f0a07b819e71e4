#pragma once

namespace gfpc {

/// phi_0(z) = e^z, phi_{k+1}(z) = (phi_k(z) - 1/k!)/z, phi_k(0) = 1/k!.
/// Evaluated by a 24-term Horner Taylor sum for |z| < 2 (remainder ~ 2^24/24!)
/// and by the upward recurrence from e^z otherwise, where the subtraction no
/// longer cancels. Supports k in [0, 4], any finite z.
double phi_eval(int k, double z);

} // namespace gfpc
