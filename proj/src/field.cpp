#include "gfpc/field.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace gfpc {

Field::Field(GridPtr grid, std::vector<double> values)
    : grid_(std::move(grid)), values_(std::move(values)) {
    if (!grid_) throw std::invalid_argument("field needs a grid");
    if (values_.size() != grid_->size())
        throw std::invalid_argument("field size does not match grid");
}

Field::Field(GridPtr grid, std::vector<double> values, Coefficients coeffs)
    : Field(std::move(grid), std::move(values)) {
    if (coeffs.size() != values_.size())
        throw std::invalid_argument("coefficient cache size does not match grid");
    coeffs_ = std::make_shared<const Coefficients>(std::move(coeffs));
}

double Field::min() const { return *std::min_element(values_.begin(), values_.end()); }
double Field::max() const { return *std::max_element(values_.begin(), values_.end()); }

double Field::max_abs() const {
    double m = 0.0;
    for (double v : values_) m = std::max(m, std::abs(v));
    return m;
}

double Field::mean() const {
    return std::accumulate(values_.begin(), values_.end(), 0.0) /
           static_cast<double>(values_.size());
}

bool Field::all_finite() const {
    for (double v : values_)
        if (!std::isfinite(v)) return false;
    return true;
}

double l2_norm(const Field& f) {
    double s = 0.0;
    for (double v : f.values()) s += v * v;
    return std::sqrt(f.grid().cell_volume() * s);
}

double l2_error(const Field& a, const Field& b) {
    if (a.grid() != b.grid()) throw std::invalid_argument("l2_error: grid mismatch");
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double d = a[i] - b[i];
        s += d * d;
    }
    return std::sqrt(a.grid().cell_volume() * s);
}

} // namespace gfpc
