#include "gfpc/certify.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include <cmath>
#include <limits>
#include <ostream>

#include "gfpc/phi_functions.hpp"

namespace gfpc {
namespace {

std::vector<double> log_spaced_negative(int n, double z_lo, double z_hi) {
    // z_lo, z_hi < 0 with |z_lo| >= |z_hi|; returns n points from z_hi to z_lo
    std::vector<double> zs(n);
    const double la = std::log10(-z_hi), lb = std::log10(-z_lo);
    for (int i = 0; i < n; ++i)
        zs[i] = -std::pow(10.0, la + (lb - la) * i / (n - 1));
    return zs;
}

} // namespace

CertificationReport certify_assumption_A(const ExponentialTableau& t, int n_samples,
                                         double z_lo, double z_hi) {
    const int s = t.stages;
    CertificationReport rep;
    rep.tableau = t.name;
    rep.certified = true;
    rep.min_eig = std::numeric_limits<double>::infinity();
    rep.first_failure_z = std::numeric_limits<double>::quiet_NaN();

    Eigen::MatrixXd EL = Eigen::MatrixXd::Zero(s, s);
    for (int i = 0; i < s; ++i)
        for (int j = 0; j <= i; ++j) EL(i, j) = 1.0;

    for (double z : log_spaced_negative(n_samples, z_lo, z_hi)) {
        Eigen::MatrixXd A = Eigen::MatrixXd::Zero(s, s);
        for (int i = 2; i <= s; ++i)
            for (int j = 1; j < i; ++j) A(i - 2, j - 1) = t.coeff_a(i, j, z);
        for (int j = 1; j <= s; ++j) A(s - 1, j - 1) = t.coeff_b(j, z);

        CertificationSample sample{z, std::numeric_limits<double>::quiet_NaN()};
        Eigen::FullPivLU<Eigen::MatrixXd> lu(A);
        if (lu.isInvertible()) {
            const Eigen::MatrixXd P =
                z * EL + lu.inverse() * EL - 0.5 * z * Eigen::MatrixXd::Identity(s, s);
            const Eigen::MatrixXd sym = 0.5 * (P + P.transpose());
            Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(sym);
            sample.min_eig = eig.eigenvalues().minCoeff();
        }
        if (!(sample.min_eig > 0.0)) { // also catches NaN from a singular A(z)
            if (rep.certified) rep.first_failure_z = z;
            rep.certified = false;
        }
        if (std::isfinite(sample.min_eig))
            rep.min_eig = std::min(rep.min_eig, sample.min_eig);
        rep.samples.push_back(sample);
    }
    return rep;
}

void write_certification_text(std::ostream& os,
                              const std::vector<CertificationReport>& reports) {
    os << "energy-stability certification: min eig of sym(P(z)), "
          "P(z) = z*E_L + A(z)^{-1} E_L - (z/2) I\n";
    os << "tableau      certified  min_eig       first_failure_z\n";
    for (const auto& r : reports) {
        char buf[160];
        if (r.certified)
            std::snprintf(buf, sizeof buf, "%-12s %-10s %-13.4e %s\n", r.tableau.c_str(),
                          "yes", r.min_eig, "-");
        else
            std::snprintf(buf, sizeof buf, "%-12s %-10s %-13.4e %.6e\n", r.tableau.c_str(),
                          "no", r.min_eig, r.first_failure_z);
        os << buf;
    }
}

void write_certification_csv(std::ostream& os,
                             const std::vector<CertificationReport>& reports) {
    os << "tableau,z,min_eig\n";
    char buf[120];
    for (const auto& r : reports)
        for (const auto& s : r.samples) {
            std::snprintf(buf, sizeof buf, "%s,%.17g,%.17g\n", r.tableau.c_str(), s.z,
                          s.min_eig);
            os << buf;
        }
}

namespace {

double factorial(int n) {
    double f = 1.0;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

// psi_j(z) = phi_j(z) - sum_k b_k(z) c_k^{j-1}/(j-1)!
double psi_weight(const ExponentialTableau& t, int j, double z) {
    double s = 0.0;
    for (int k = 1; k <= t.stages; ++k)
        s += t.coeff_b(k, z) * std::pow(t.c[k - 1], j - 1) / factorial(j - 1);
    return phi_eval(j, z) - s;
}

// psi_{j,i}(z) = c_i^j phi_j(c_i z) - sum_{k<i} a_{i,k}(z) c_k^{j-1}/(j-1)!
double psi_stage(const ExponentialTableau& t, int j, int i, double z) {
    const double ci = t.c[i - 1];
    double s = 0.0;
    for (int k = 1; k < i; ++k)
        s += t.coeff_a(i, k, z) * std::pow(t.c[k - 1], j - 1) / factorial(j - 1);
    return std::pow(ci, j) * phi_eval(j, ci * z) - s;
}

} // namespace

OrderConditionReport check_order_conditions(const ExponentialTableau& t, int order,
                                            int n_samples, double z_lo) {
    if (order < 1 || order > 3)
        throw std::invalid_argument("order conditions implemented up to order 3");
    if (order > t.claimed_order)
        throw std::invalid_argument("requested order exceeds the tableau's claimed order");

    std::vector<double> zs = log_spaced_negative(n_samples - 1, z_lo, -1e-3);
    zs.push_back(0.0);

    OrderConditionReport rep;
    rep.tableau = t.name;
    rep.order_checked = order;

    auto max_over = [&](const std::function<double(double)>& fn) {
        double m = 0.0;
        for (double z : zs) m = std::max(m, std::abs(fn(z)));
        return m;
    };

    rep.entries.push_back({"psi_1", max_over([&](double z) { return psi_weight(t, 1, z); })});
    if (order >= 2) {
        rep.entries.push_back(
            {"psi_2", max_over([&](double z) { return psi_weight(t, 2, z); })});
        for (int i = 2; i <= t.stages; ++i)
            rep.entries.push_back({"psi_1," + std::to_string(i), max_over([&](double z) {
                                       return psi_stage(t, 1, i, z);
                                   })});
    }
    if (order >= 3) {
        rep.entries.push_back({"psi_3(0)", std::abs(psi_weight(t, 3, 0.0))});
        // third-order coupling sum_i b_i(0) J psi_{2,i}(z), reported for J = 1
        // and as per-stage blocks (a J-independent certificate needs each block)
        rep.entries.push_back({"sum_i b_i(0) psi_2,i (J=1)", max_over([&](double z) {
                                   double s = 0.0;
                                   for (int i = 2; i <= t.stages; ++i)
                                       s += t.coeff_b(i, 0.0) * psi_stage(t, 2, i, z);
                                   return s;
                               })});
        for (int i = 2; i <= t.stages; ++i)
            rep.entries.push_back(
                {"b_" + std::to_string(i) + "(0) psi_2," + std::to_string(i),
                 max_over([&](double z) {
                     return t.coeff_b(i, 0.0) * psi_stage(t, 2, i, z);
                 })});
    }
    return rep;
}

void write_order_text(std::ostream& os, const OrderConditionReport& report) {
    os << "order-condition residuals for " << report.tableau << " up to order "
       << report.order_checked << " (stage phi argument c_i*z)\n";
    char buf[120];
    for (const auto& e : report.entries) {
        std::snprintf(buf, sizeof buf, "  %-28s max residual %.6e\n", e.condition.c_str(),
                      e.max_residual);
        os << buf;
    }
}

void write_order_csv(std::ostream& os, const OrderConditionReport& report) {
    os << "tableau,condition,max_residual\n";
    char buf[160];
    for (const auto& e : report.entries) {
        std::snprintf(buf, sizeof buf, "%s,\"%s\",%.17g\n", report.tableau.c_str(),
                      e.condition.c_str(), e.max_residual);
        os << buf;
    }
}

} // namespace gfpc
