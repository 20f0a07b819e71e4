#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "gfpc/tableau.hpp"

namespace gfpc {

struct CertificationSample {
    double z;
    double min_eig; // smallest eigenvalue of the symmetric part of P(z); NaN if A(z) singular
};

/// Result of the energy-stability test: P(z) = z E_L + A(z)^{-1} E_L - (z/2) I
/// must have positive-definite symmetric part at every sampled z < 0, where
/// E_L is the lower-triangular all-ones matrix and A(z) stacks the stage rows
/// a_{i,*}(z) over the b row.
struct CertificationReport {
    std::string tableau;
    bool certified = false;
    double min_eig = 0.0;        // worst over the sweep
    double first_failure_z = 0.0; // NaN when certified
    std::vector<CertificationSample> samples;
};

CertificationReport certify_assumption_A(const ExponentialTableau& t,
                                         int n_samples = 200, double z_lo = -1e6,
                                         double z_hi = -1e-6);

void write_certification_text(std::ostream& os,
                              const std::vector<CertificationReport>& reports);
void write_certification_csv(std::ostream& os,
                             const std::vector<CertificationReport>& reports);

struct OrderConditionEntry {
    std::string condition;
    double max_residual;
};

/// Stiff order-condition residuals up to the requested order (<= 3):
///   order 1: psi_1(z) = phi_1(z) - sum_k b_k(z)
///   order 2: psi_2(z), and stage conditions psi_{1,i}(z)
///   order 3: psi_3(0), psi_{1,i}, the weighted sum_{i} b_i(0) psi_{2,i}(z)
///            (reported both as the J=1 combination and per-stage blocks)
/// with psi_j(z) = phi_j(z) - sum_k b_k(z) c_k^{j-1}/(j-1)! and
/// psi_{j,i}(z) = c_i^j phi_j(c_i z) - sum_{k<i} a_{i,k}(z) c_k^{j-1}/(j-1)!;
/// the stage phi argument is c_i*z (the sign convention that makes the
/// second-order catalog entries vanish identically).
struct OrderConditionReport {
    std::string tableau;
    int order_checked = 0;
    std::vector<OrderConditionEntry> entries;
};

OrderConditionReport check_order_conditions(const ExponentialTableau& t, int order,
                                            int n_samples = 64, double z_lo = -1e3);

void write_order_text(std::ostream& os, const OrderConditionReport& report);
void write_order_csv(std::ostream& os, const OrderConditionReport& report);

} // namespace gfpc
