#pragma once

#include <complex>
#include <vector>

namespace tpgabor {

/// Unit step with the midpoint convention: 1 for x > 0, 1/2 at x = 0, 0 for x < 0.
inline double heaviside(double x) {
    if (x > 0.0) return 1.0;
    if (x < 0.0) return 0.0;
    return 0.5;
}

/// Totally positive window of finite type, defined by the Fourier-domain
/// factorization  g^(xi) = C * prod_k (1 + 2*pi*i*delta_k*xi)^{-1}  with real
/// nonzero time constants delta_k.  For pairwise distinct deltas the window
/// evaluates in closed form as
///
///     g(x) = sum_i w_i * exp(-x/delta_i) * h(x*delta_i),
///     w_i  = C / |delta_i| * prod_{k != i} (1 - delta_k/delta_i)^{-1},
///
/// which is nonnegative, continuous for two or more poles, and decays like
/// exp(-|x| / max_i |delta_i|).
class TpfftWindow {
public:
    /// Builds a window from its pole parameters. Input order is preserved.
    /// Throws TooFewPoles (< 2 entries), ZeroDelta, or NonpositiveScale.
    /// Repeated deltas are accepted (the closed-form Zak transform still
    /// exists via divided differences) but pointwise evaluation then throws.
    explicit TpfftWindow(std::vector<double> deltas, double scale = 1.0);

    /// Pointwise value of g. Requires pairwise distinct deltas.
    double evaluate(double x) const;

    /// Fourier transform C * prod_k (1 + 2*pi*i*delta_k*xi)^{-1}.
    std::complex<double> fourier(double xi) const;

    const std::vector<double>& deltas() const { return deltas_; }
    /// Exponential coefficients w_i; empty when deltas repeat.
    const std::vector<double>& weights() const { return weights_; }
    double scale() const { return scale_; }

    /// Count of positive deltas (branches supported on x > 0).
    int positive_count() const { return positive_count_; }
    /// Count of negative deltas.
    int negative_count() const { return static_cast<int>(deltas_.size()) - positive_count_; }
    int type() const { return static_cast<int>(deltas_.size()); }

    /// True when no two deltas agree to relative 1e-12.
    bool distinct_deltas() const { return distinct_; }
    /// True when the delta multiset is closed under negation (g is even).
    bool is_even() const { return even_; }

    double max_abs_delta() const { return max_abs_delta_; }
    /// sum_i |w_i|; together with max_abs_delta this bounds the tail:
    /// |g(x)| <= weight_abs_sum * exp(-|x| / max_abs_delta).
    double weight_abs_sum() const { return weight_abs_sum_; }
    double decay_bound(double x) const;

    /// Copy with coincident deltas split apart by the given relative step,
    /// restoring distinctness at a matching accuracy cost.
    TpfftWindow perturbed(double relative_eps = 1e-7) const;

private:
    std::vector<double> deltas_;
    std::vector<double> weights_;
    double scale_ = 1.0;
    int positive_count_ = 0;
    bool distinct_ = true;
    bool even_ = false;
    double max_abs_delta_ = 0.0;
    double weight_abs_sum_ = 0.0;
};

/// Relative tolerance below which two deltas count as coincident.
inline constexpr double kDeltaDistinctTol = 1e-12;

TpfftWindow make_window(std::vector<double> deltas, double scale = 1.0);

} // namespace tpgabor
