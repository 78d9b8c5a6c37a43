#include "tpgabor/window.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>

#include "tpgabor/errors.hpp"

namespace tpgabor {

namespace {

bool coincide(double a, double b) {
    const double scale = std::max(std::abs(a), std::abs(b));
    return std::abs(a - b) < kDeltaDistinctTol * scale;
}

bool all_distinct(const std::vector<double>& deltas) {
    for (std::size_t i = 0; i < deltas.size(); ++i)
        for (std::size_t k = i + 1; k < deltas.size(); ++k)
            if (coincide(deltas[i], deltas[k])) return false;
    return true;
}

bool negation_closed(const std::vector<double>& deltas) {
    std::vector<bool> used(deltas.size(), false);
    for (std::size_t i = 0; i < deltas.size(); ++i) {
        bool found = false;
        for (std::size_t k = 0; k < deltas.size(); ++k) {
            if (!used[k] && coincide(deltas[i], -deltas[k])) {
                used[k] = true;
                found = true;
                break;
            }
        }
        if (!found) return false;
    }
    return true;
}

// Partial-fraction coefficient divided by |delta_i|, times the scale.
// Factors are accumulated smallest magnitude first to limit rounding when
// deltas cluster.
double exp_weight(const std::vector<double>& deltas, std::size_t i, double scale) {
    std::vector<double> factors;
    factors.reserve(deltas.size() - 1);
    for (std::size_t k = 0; k < deltas.size(); ++k)
        if (k != i) factors.push_back(1.0 - deltas[k] / deltas[i]);
    std::sort(factors.begin(), factors.end(),
              [](double a, double b) { return std::abs(a) < std::abs(b); });
    double product = 1.0;
    for (double f : factors) product *= f;
    return scale / (product * std::abs(deltas[i]));
}

} // namespace

TpfftWindow::TpfftWindow(std::vector<double> deltas, double scale)
    : deltas_(std::move(deltas)), scale_(scale) {
    if (deltas_.size() < 2)
        throw Error(ErrorCode::TooFewPoles, "a window needs at least two poles");
    for (double d : deltas_)
        if (d == 0.0 || !std::isfinite(d))
            throw Error(ErrorCode::ZeroDelta, "every delta must be nonzero and finite");
    if (!(scale_ > 0.0) || !std::isfinite(scale_))
        throw Error(ErrorCode::NonpositiveScale, "scale must be positive");

    positive_count_ = static_cast<int>(
        std::count_if(deltas_.begin(), deltas_.end(), [](double d) { return d > 0.0; }));
    distinct_ = all_distinct(deltas_);
    even_ = negation_closed(deltas_);
    max_abs_delta_ = 0.0;
    for (double d : deltas_) max_abs_delta_ = std::max(max_abs_delta_, std::abs(d));

    if (distinct_) {
        weights_.resize(deltas_.size());
        for (std::size_t i = 0; i < deltas_.size(); ++i)
            weights_[i] = exp_weight(deltas_, i, scale_);
        weight_abs_sum_ = 0.0;
        for (double w : weights_) weight_abs_sum_ += std::abs(w);
    } else {
        // No partial-fraction weights exist; tail estimates fall back on the
        // polynomial-times-exponential bound below.
        weight_abs_sum_ = 0.0;
    }
}

double TpfftWindow::evaluate(double x) const {
    if (!distinct_)
        throw Error(ErrorCode::RepeatedPoles,
                    "pointwise evaluation needs pairwise distinct deltas; "
                    "perturb them or use the divided-difference Zak form");
    double sum = 0.0;
    for (std::size_t i = 0; i < deltas_.size(); ++i) {
        const double step = heaviside(x * deltas_[i]);
        if (step != 0.0) sum += weights_[i] * std::exp(-x / deltas_[i]) * step;
    }
    return sum;
}

std::complex<double> TpfftWindow::fourier(double xi) const {
    constexpr double two_pi = 6.283185307179586476925286766559;
    std::complex<double> value(scale_, 0.0);
    for (double d : deltas_)
        value /= std::complex<double>(1.0, two_pi * d * xi);
    return value;
}

double TpfftWindow::decay_bound(double x) const {
    if (distinct_)
        return weight_abs_sum_ * std::exp(-std::abs(x) / max_abs_delta_);
    // Repeated poles contribute x^k exp(-x/delta) terms; a crude but safe
    // envelope uses a slightly slower rate and a generous constant.
    const int p = type();
    const double rate = 1.0 / (max_abs_delta_ * (1.0 + static_cast<double>(p)));
    return scale_ * std::pow(2.0 + std::abs(x) / max_abs_delta_, p) * std::exp(-std::abs(x) * rate);
}

TpfftWindow TpfftWindow::perturbed(double relative_eps) const {
    std::vector<double> adjusted = deltas_;
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < adjusted.size() && !changed; ++i) {
            for (std::size_t k = i + 1; k < adjusted.size() && !changed; ++k) {
                if (coincide(adjusted[i], adjusted[k])) {
                    adjusted[k] *= 1.0 + relative_eps;
                    changed = true;
                }
            }
        }
    }
    return TpfftWindow(std::move(adjusted), scale_);
}

TpfftWindow make_window(std::vector<double> deltas, double scale) {
    return TpfftWindow(std::move(deltas), scale);
}

} // namespace tpgabor
