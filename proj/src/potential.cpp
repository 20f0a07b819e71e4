#include "gfpc/potential.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace gfpc {
namespace {

// Flory-Huggins core on the open interval (-beta, beta).
double fh_F(double v, double beta, double eps2, double theta0) {
    return ((beta + v) * std::log(beta + v) + (beta - v) * std::log(beta - v) -
            0.5 * theta0 * v * v) / eps2;
}
double fh_f(double v, double beta, double eps2, double theta0) {
    return (std::log(beta + v) - std::log(beta - v) - theta0 * v) / eps2;
}
double fh_fp(double v, double beta, double eps2, double theta0) {
    return (1.0 / (beta + v) + 1.0 / (beta - v) - theta0) / eps2;
}
double fh_fpp(double v, double beta, double eps2) {
    return (-1.0 / ((beta + v) * (beta + v)) + 1.0 / ((beta - v) * (beta - v))) / eps2;
}

} // namespace

PotentialModel PotentialModel::double_well(double beta, double eps2) {
    if (!(beta > 0) || !(eps2 > 0))
        throw std::invalid_argument("double_well: beta and eps2 must be positive");
    PotentialModel m;
    m.kind_ = PotentialKind::DoubleWell;
    m.beta_ = beta;
    m.eps2_ = eps2;
    m.bound_ = beta;
    m.finalize();
    return m;
}

PotentialModel PotentialModel::flory_huggins(double beta, double eps2, double theta0,
                                             double delta, double delta_prime) {
    if (!(beta > 0) || !(eps2 > 0))
        throw std::invalid_argument("flory_huggins: beta and eps2 must be positive");
    if (delta_prime < 0) delta_prime = 0.5 * delta;
    if (!(delta > 0) || !(delta_prime > 0) || !(delta_prime < delta) || !(delta < beta))
        throw std::invalid_argument("flory_huggins: need 0 < delta' < delta < beta");
    PotentialModel m;
    m.kind_ = PotentialKind::FloryHuggins;
    m.beta_ = beta;
    m.eps2_ = eps2;
    m.theta0_ = theta0;
    m.delta_ = delta;
    m.delta_prime_ = delta_prime;
    m.bound_ = beta - delta;
    // junction of the safe extension
    m.a_ = beta - delta_prime;
    m.Fa_ = fh_F(m.a_, beta, eps2, theta0);
    m.fa_ = fh_f(m.a_, beta, eps2, theta0);
    m.fpa_ = fh_fp(m.a_, beta, eps2, theta0);
    m.fppa_ = fh_fpp(m.a_, beta, eps2);
    m.finalize();
    return m;
}

PotentialModel PotentialModel::zero(double beta) {
    if (!(beta > 0)) throw std::invalid_argument("zero potential: beta must be positive");
    PotentialModel m;
    m.kind_ = PotentialKind::Zero;
    m.beta_ = beta;
    m.bound_ = beta;
    m.finalize();
    return m;
}

void PotentialModel::finalize() {
    // sign condition at the admissible boundary: f(-b) <= 0 <= f(b)
    const double fb = f(bound_);
    const double fmb = f(-bound_);
    if (!(fb >= -1e-14) || !(fmb <= 1e-14))
        throw std::invalid_argument(
            "potential violates the boundary sign condition f(-b) <= 0 <= f(b)");
    // sampled Lipschitz bound of f on [-b, b]
    const int n = 10000;
    double lip = 0.0;
    for (int i = 0; i <= n; ++i) {
        const double v = -bound_ + 2.0 * bound_ * i / n;
        lip = std::max(lip, std::abs(f_prime(v)));
    }
    lipschitz_ = lip;
}

double PotentialModel::F(double v) const {
    switch (kind_) {
    case PotentialKind::Zero:
        return 0.0;
    case PotentialKind::DoubleWell: {
        const double q = v * v - beta_;
        return q * q / (4.0 * eps2_);
    }
    case PotentialKind::FloryHuggins: {
        const double s = v < 0 ? -1.0 : 1.0;
        const double w = s * v; // F is even
        if (w <= a_) return fh_F(w, beta_, eps2_, theta0_);
        // antiderivative of the quadratic f-extension: keeps F' = f everywhere
        const double d = w - a_;
        return Fa_ + fa_ * d + 0.5 * fpa_ * d * d + fppa_ * d * d * d / 6.0;
    }
    }
    return 0.0;
}

double PotentialModel::f(double v) const {
    switch (kind_) {
    case PotentialKind::Zero:
        return 0.0;
    case PotentialKind::DoubleWell:
        return (v * v - beta_) * v / eps2_;
    case PotentialKind::FloryHuggins: {
        const double s = v < 0 ? -1.0 : 1.0;
        const double w = s * v; // f is odd
        if (w <= a_) return s * fh_f(w, beta_, eps2_, theta0_);
        const double d = w - a_;
        return s * (fa_ + fpa_ * d + 0.5 * fppa_ * d * d);
    }
    }
    return 0.0;
}

double PotentialModel::f_prime(double v) const {
    switch (kind_) {
    case PotentialKind::Zero:
        return 0.0;
    case PotentialKind::DoubleWell:
        return (3.0 * v * v - beta_) / eps2_;
    case PotentialKind::FloryHuggins: {
        const double w = std::abs(v); // f' is even
        if (w <= a_) return fh_fp(w, beta_, eps2_, theta0_);
        return fpa_ + fppa_ * (w - a_);
    }
    }
    return 0.0;
}

std::string PotentialModel::describe() const {
    std::ostringstream os;
    switch (kind_) {
    case PotentialKind::Zero:
        os << "zero(beta=" << beta_ << ")";
        break;
    case PotentialKind::DoubleWell:
        os << "double-well(beta=" << beta_ << ", eps2=" << eps2_ << ")";
        break;
    case PotentialKind::FloryHuggins:
        os << "flory-huggins(beta=" << beta_ << ", eps2=" << eps2_
           << ", theta0=" << theta0_ << ", delta=" << delta_
           << ", delta'=" << delta_prime_ << ")";
        break;
    }
    return os.str();
}

} // namespace gfpc
