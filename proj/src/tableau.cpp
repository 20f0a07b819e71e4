#include "gfpc/tableau.hpp"

#include <cmath>
#include <map>
#include <stdexcept>

#include "gfpc/phi_functions.hpp"

namespace gfpc {

double eval_coeff(const CoeffExpr& e, double z) {
    double s = 0.0;
    for (const PhiTerm& t : e) s += t.weight * phi_eval(t.k, t.scale * z);
    return s;
}

double ExponentialTableau::coeff_a(int i, int j, double z) const {
    if (i < 2 || i > stages || j < 1 || j >= i)
        throw std::invalid_argument("coeff_a: stage indices out of range");
    return eval_coeff(a[i - 2][j - 1], z);
}

double ExponentialTableau::coeff_b(int j, double z) const {
    if (j < 1 || j > stages) throw std::invalid_argument("coeff_b: index out of range");
    return eval_coeff(b[j - 1], z);
}

namespace {

CoeffExpr term(double w, int k, double s = 1.0) { return {{w, k, s}}; }

std::map<std::string, ExponentialTableau> build_catalog() {
    std::map<std::string, ExponentialTableau> cat;

    {
        ExponentialTableau t;
        t.name = "etdrk1";
        t.stages = 1;
        t.claimed_order = 1;
        t.energy_stable = true;
        t.c = {0.0};
        t.b = {term(1.0, 1)};
        cat[t.name] = t;
    }
    {
        ExponentialTableau t;
        t.name = "etdrk2";
        t.stages = 2;
        t.claimed_order = 2;
        t.energy_stable = true;
        t.c = {0.0, 1.0};
        t.a = {{term(1.0, 1)}};
        t.b = {{{1.0, 1, 1.0}, {-1.0, 2, 1.0}}, term(1.0, 2)};
        cat[t.name] = t;
    }
    {
        ExponentialTableau t;
        t.name = "etdrk3";
        t.stages = 3;
        t.claimed_order = 3;
        t.energy_stable = true;
        t.c = {0.0, 1.0, 2.0 / 3.0};
        t.a = {{term(1.0, 1)},
               {{{2.0 / 3.0, 1, 2.0 / 3.0}, {-4.0 / 9.0, 2, 2.0 / 3.0}},
                {{4.0 / 9.0, 2, 2.0 / 3.0}}}};
        t.b = {{{0.75, 1, 1.0}, {-1.0, 2, 1.0}},
               {{-0.5, 1, 1.0}, {1.0, 2, 1.0}},
               {{0.75, 1, 1.0}}};
        cat[t.name] = t;
    }
    {
        ExponentialTableau t;
        t.name = "u-etdrk3";
        t.stages = 3;
        t.claimed_order = 3;
        t.energy_stable = false;
        t.c = {0.0, 0.5, 1.0};
        t.a = {{term(0.5, 1, 0.5)},
               {{{-1.0, 1, 1.0}}, {{2.0, 1, 1.0}}}};
        t.b = {{{1.0, 1, 1.0}, {-3.0, 2, 1.0}, {4.0, 3, 1.0}},
               {{4.0, 2, 1.0}, {-8.0, 3, 1.0}},
               {{-1.0, 2, 1.0}, {4.0, 3, 1.0}}};
        cat[t.name] = t;
    }
    {
        ExponentialTableau t;
        t.name = "u-etdrk4";
        t.stages = 4;
        t.claimed_order = 4;
        t.energy_stable = false;
        t.c = {0.0, 0.5, 0.5, 1.0};
        t.a = {{term(0.5, 1, 0.5)},
               {{{0.5, 1, 0.5}, {-1.0, 2, 0.5}}, {{1.0, 2, 0.5}}},
               {{{1.0, 1, 1.0}, {-2.0, 2, 1.0}}, {}, {{2.0, 2, 1.0}}}};
        t.b = {{{1.0, 1, 1.0}, {-3.0, 2, 1.0}, {4.0, 3, 1.0}},
               {{2.0, 2, 1.0}, {-4.0, 3, 1.0}},
               {{2.0, 2, 1.0}, {-4.0, 3, 1.0}},
               {{-1.0, 2, 1.0}, {4.0, 3, 1.0}}};
        cat[t.name] = t;
    }
    return cat;
}

const std::map<std::string, ExponentialTableau>& catalog() {
    static const std::map<std::string, ExponentialTableau> cat = build_catalog();
    return cat;
}

} // namespace

const ExponentialTableau& tableau_catalog(const std::string& name) {
    const auto& cat = catalog();
    auto it = cat.find(name);
    if (it == cat.end()) throw std::invalid_argument("unknown tableau: " + name);
    return it->second;
}

std::vector<std::string> tableau_names() {
    std::vector<std::string> names;
    for (const auto& [k, v] : catalog()) names.push_back(k);
    return names;
}

double consistency_residual(const ExponentialTableau& t, double z) {
    double worst = 0.0;
    for (int i = 2; i <= t.stages; ++i) {
        double row = 0.0;
        for (int j = 1; j < i; ++j) row += t.coeff_a(i, j, z);
        const double ci = t.c[i - 1];
        worst = std::max(worst, std::abs(row - ci * phi_eval(1, ci * z)));
    }
    double brow = 0.0;
    for (int j = 1; j <= t.stages; ++j) brow += t.coeff_b(j, z);
    worst = std::max(worst, std::abs(brow - phi_eval(1, z)));
    return worst;
}

} // namespace gfpc
