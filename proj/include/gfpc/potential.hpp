#pragma once

#include <memory>
#include <string>

namespace gfpc {

enum class PotentialKind { DoubleWell, FloryHuggins, Zero };

/// Bulk free-energy density F and its derivative f = F'. The admissible range
/// is [-bound, bound]; the cutoff corrector clamps to it. For the logarithmic
/// potential, f and F are replaced outside +-(beta - delta_prime) by the
/// quadratic Taylor extension of f about the junction (and its antiderivative
/// for F), so predictor stages that overshoot stay finite with F' = f intact.
class PotentialModel {
public:
    static PotentialModel double_well(double beta, double eps2);
    static PotentialModel flory_huggins(double beta, double eps2, double theta0,
                                        double delta, double delta_prime = -1.0);
    static PotentialModel zero(double beta);

    PotentialKind kind() const { return kind_; }
    double beta() const { return beta_; }
    double eps2() const { return eps2_; }
    double bound() const { return bound_; } // beta, or beta - delta for Flory-Huggins

    double F(double v) const;
    double f(double v) const;
    double f_prime(double v) const;

    /// max |f'| over [-bound, bound], sampled; used by the small-eta check.
    double lipschitz_f() const { return lipschitz_; }

    std::string describe() const;

private:
    PotentialModel() = default;
    void finalize();

    PotentialKind kind_ = PotentialKind::Zero;
    double beta_ = 1.0;
    double eps2_ = 1.0;
    double theta0_ = 0.0;
    double delta_ = 0.0;
    double delta_prime_ = 0.0;
    double bound_ = 1.0;
    double lipschitz_ = 0.0;
    // cached junction data for the Flory-Huggins extension
    double a_ = 0.0, Fa_ = 0.0, fa_ = 0.0, fpa_ = 0.0, fppa_ = 0.0;
};

enum class Mobility { AllenCahn, CahnHilliard }; // G = I or G = -Laplacian

/// Everything that defines one gradient flow: mobility, potential, and the
/// splitting stabilizer S used by the exponential predictor (L = -Lap + S,
/// g(v) = -f(v) + S v). Choosing S at least as large as a Lipschitz bound of
/// f on the admissible range is the caller's responsibility.
struct FlowSpec {
    Mobility mobility = Mobility::AllenCahn;
    PotentialModel potential = PotentialModel::zero(1.0);
    double stabilizer = 0.0;

    double g(double v) const { return -potential.f(v) + stabilizer * v; }
};

} // namespace gfpc
