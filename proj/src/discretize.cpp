#include "tpgabor/discretize.hpp"

#include <cmath>

#include "tpgabor/errors.hpp"
#include "tpgabor/zak.hpp"

namespace tpgabor {

SampledSignal sample(const TpfftWindow& w, double h, long k_first, long k_last) {
    if (!(h > 0.0))
        throw Error(ErrorCode::InvalidArgument, "sampling step must be positive");
    SampledSignal out;
    out.step = h;
    out.first_index = k_first;
    if (k_last < k_first) return out; // empty range, empty signal
    out.values.resize(static_cast<std::size_t>(k_last - k_first + 1));
    for (long k = k_first; k <= k_last; ++k)
        out.values[static_cast<std::size_t>(k - k_first)] =
            w.evaluate(h * static_cast<double>(k));
    return out;
}

SampledSignal sample_auto(const TpfftWindow& w, double h) {
    if (!(h > 0.0))
        throw Error(ErrorCode::InvalidArgument, "sampling step must be positive");
    // Peak value is at least g(0); cut where the decay bound is below
    // 1e-14 times that.
    const double peak = std::max(w.evaluate(0.0), 1e-300);
    double reach = w.max_abs_delta();
    while (w.decay_bound(reach) > 1e-14 * peak) reach += w.max_abs_delta();
    const long k_max = static_cast<long>(std::ceil(reach / h));
    return sample(w, h, -k_max, k_max);
}

PeriodicSignal periodize(const SampledSignal& in, const Rational& period,
                         const Rational& step) {
    if (!period.positive() || !step.positive())
        throw Error(ErrorCode::InvalidArgument, "period and step must be positive");
    const Rational ratio = period / step;
    if (!ratio.is_integer())
        throw Error(ErrorCode::DivisibilityError,
                    "step " + step.str() + " does not divide period " + period.str());
    const long n = static_cast<long>(ratio.num);
    PeriodicSignal out;
    out.period = period;
    out.step = step;
    out.values.assign(static_cast<std::size_t>(n), 0.0);
    for (long k = in.first_index; k <= in.last_index(); ++k) {
        long l = k % n;
        if (l < 0) l += n;
        out.values[static_cast<std::size_t>(l)] += in.value_at(k);
    }
    return out;
}

double periodize_closed(const TpfftWindow& w, double period, double x) {
    if (!(period > 0.0))
        throw Error(ErrorCode::InvalidArgument, "period must be positive");
    return zak_transform(w, period, x, 0.0).real();
}

Eigen::VectorXd qkn_window(const TpfftWindow& w, int K, int N) {
    if (K <= 0 || N <= 0)
        throw Error(ErrorCode::InvalidArgument, "K and N must be positive integers");
    if (!w.distinct_deltas())
        throw Error(ErrorCode::RepeatedPoles, "the sampled-periodized generator needs "
                                              "distinct deltas");
    const double norm = 1.0 / std::sqrt(static_cast<double>(N));
    Eigen::VectorXd out(static_cast<Eigen::Index>(K) * N);
    for (Eigen::Index l = 0; l < out.size(); ++l) {
        const double x = static_cast<double>(l) / static_cast<double>(N);
        out[l] = norm * zak_closed(w, static_cast<double>(K), x, 0.0).real();
    }
    return out;
}

} // namespace tpgabor
