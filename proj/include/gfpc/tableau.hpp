#pragma once

#include <string>
#include <vector>

namespace gfpc {

/// One term of a coefficient function: weight * phi_k(scale * z).
struct PhiTerm {
    double weight;
    int k;
    double scale;
};

/// Finite sum of phi-function terms; the representation every a_{i,j}(z) and
/// b_j(z) of the catalog reduces to.
using CoeffExpr = std::vector<PhiTerm>;

double eval_coeff(const CoeffExpr& e, double z);

/// Exponential Runge-Kutta tableau with operator-valued weights.
/// Stage i (1-based, stage 1 is the step start) combines
///   u_i = e^{c_i z} u_n + tau * sum_{j<i} a_{i,j}(z) G g(u_j),   z = -tau G L,
/// and the step result uses e^{z} and the b_j. Nodes: c[0] = 0; the final
/// combination node is 1.
struct ExponentialTableau {
    std::string name;
    int stages = 1;
    int claimed_order = 1;
    bool energy_stable = false; // catalog annotation, validated by certification tests
    std::vector<double> c;                  // size == stages
    std::vector<std::vector<CoeffExpr>> a;  // a[i-2][j-1] for stage i >= 2, j < i
    std::vector<CoeffExpr> b;               // size == stages

    double coeff_a(int i, int j, double z) const; // 1-based, j < i
    double coeff_b(int j, double z) const;        // 1-based
};

/// The five built-in tableaus: ETDRK1, ETDRK2, ETDRK3, U-ETDRK3, U-ETDRK4.
const ExponentialTableau& tableau_catalog(const std::string& name);
std::vector<std::string> tableau_names();

/// Max over rows of |sum_j a_{i,j}(z) - c_i phi_1(c_i z)| and the same for b
/// against phi_1(z); zero (to round-off) exactly when the tableau reproduces
/// the exponential on g = const flows. Well defined at z = 0.
double consistency_residual(const ExponentialTableau& t, double z);

} // namespace gfpc
