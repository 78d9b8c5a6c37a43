#pragma once

#include <vector>

#include <Eigen/Core>

#include "tpgabor/rational.hpp"
#include "tpgabor/window.hpp"

namespace tpgabor {

/// Uniform samples f(offset + step*k) for k in [first_index, last_index()],
/// treated as zero outside the stored range.
struct SampledSignal {
    double offset = 0.0;
    double step = 1.0;
    long first_index = 0;
    std::vector<double> values;

    long last_index() const { return first_index + static_cast<long>(values.size()) - 1; }
    double value_at(long k) const {
        const long j = k - first_index;
        if (j < 0 || j >= static_cast<long>(values.size())) return 0.0;
        return values[static_cast<std::size_t>(j)];
    }
    double location(long k) const { return offset + step * static_cast<double>(k); }
};

/// One period of a periodic sequence; length * step = period holds exactly
/// (both are carried as rationals).
struct PeriodicSignal {
    Rational period{1};
    Rational step{1};
    std::vector<double> values; // index l -> value at l*step, l = 0..period/step-1
};

/// Samples the window on the grid h*k, k in [k_first, k_last].
SampledSignal sample(const TpfftWindow& w, double h, long k_first, long k_last);

/// Samples the window over its numerically relevant support: the stored
/// range is grown until the decay bound falls below 1e-14 * max|value|.
SampledSignal sample_auto(const TpfftWindow& w, double h);

/// Periodizes a sampled signal: out(l) = sum_j in(l + j*n) with n = period/step.
/// Throws DivisibilityError unless step divides the period exactly.
PeriodicSignal periodize(const SampledSignal& in, const Rational& period,
                         const Rational& step);

/// Periodization of the window in closed form,
///   P_K g(x) = sum_i C/delta_i * exp(-x/delta_i)/(1 - exp(-K/delta_i))
///              * prod_{k != i}(1 - delta_k/delta_i)^{-1}  = Z_K g(x, 0),
/// with the divided-difference fallback when deltas repeat.
double periodize_closed(const TpfftWindow& w, double period, double x);

/// Sampled-and-periodized window at step 1/N over period K, normalized so the
/// squared norm approximates the continuous one:
///   entry l = N^{-1/2} * Z_K g(l/N, 0),  l = 0..K*N-1.
/// Requires distinct deltas.
Eigen::VectorXd qkn_window(const TpfftWindow& w, int K, int N);

} // namespace tpgabor
