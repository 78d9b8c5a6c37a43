#include "tpgabor/zak.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <vector>

#include "tpgabor/errors.hpp"
#include "tpgabor/parallel.hpp"

namespace tpgabor {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;
constexpr double kPoleTol = 1e-14;

struct ReducedPoint {
    double x;                    // in [0, alpha)
    double xi;                   // in [0, 1/alpha)
    std::complex<double> phase;  // exp(2 pi i alpha n xi) for the stripped shift n
};

// Quasiperiodic reduction: Z(x + alpha n, xi + m/alpha) = exp(2 pi i alpha n xi) Z(x, xi).
ReducedPoint reduce(double alpha, double x, double xi) {
    double n = std::floor(x / alpha);
    double xr = x - n * alpha;
    if (xr >= alpha) {
        xr -= alpha;
        n += 1.0;
    }
    if (xr < 0.0) {
        xr += alpha;
        n -= 1.0;
    }
    double xir = xi - std::floor(xi * alpha) / alpha;
    if (xir >= 1.0 / alpha) xir = 0.0;
    if (xir < 0.0) xir = 0.0;
    const std::complex<double> phase =
        n == 0.0 ? std::complex<double>(1.0, 0.0)
                 : std::polar(1.0, kTwoPi * alpha * n * xir);
    return {xr, xir, phase};
}

void require_valid_point(double alpha, double x, double xi) {
    if (!(alpha > 0.0) || !std::isfinite(alpha))
        throw Error(ErrorCode::InvalidArgument, "alpha must be positive and finite");
    if (!std::isfinite(x) || !std::isfinite(xi))
        throw Error(ErrorCode::InvalidArgument, "(x, xi) must be finite");
}

std::complex<double> closed_form_reduced(const TpfftWindow& w, double alpha,
                                         const ReducedPoint& pt) {
    const std::complex<double> ephase = std::polar(1.0, kTwoPi * alpha * pt.xi);
    std::complex<double> sum(0.0, 0.0);
    const auto& deltas = w.deltas();
    const auto& weights = w.weights();
    for (std::size_t i = 0; i < deltas.size(); ++i) {
        const double d = deltas[i];
        const double q = weights[i] * (d > 0.0 ? 1.0 : -1.0); // C * C_i / delta_i
        std::complex<double> term;
        if (d > 0.0) {
            const std::complex<double> denom = 1.0 - std::exp(-alpha / d) * std::conj(ephase);
            if (std::abs(denom) < kPoleTol)
                throw Error(ErrorCode::PoleOnTorus, "Zak denominator vanished");
            term = q * std::exp(-pt.x / d) / denom;
        } else {
            // Multiply numerator and denominator by exp(alpha (1/d + 2 pi i xi));
            // all exponents are then <= 0 on the fundamental domain.
            const std::complex<double> denom = 1.0 - std::exp(alpha / d) * ephase;
            if (std::abs(denom) < kPoleTol)
                throw Error(ErrorCode::PoleOnTorus, "Zak denominator vanished");
            term = -q * std::exp((alpha - pt.x) / d) * ephase / denom;
        }
        sum += term;
    }
    return sum;
}

// r(y) = c * exp(-x y) * u(y) with u(y) = 1/(1 - exp(-alpha (y + 2 pi i xi))).
// Derivatives follow from u' = alpha u (1 - u); products with exp(-x y) are
// assembled jointly so no intermediate exponent is positive.
class ZakIntegrand {
public:
    ZakIntegrand(double alpha, double x, double xi, std::complex<double> c)
        : alpha_(alpha), x_(x), c_(c), ephase_(std::polar(1.0, kTwoPi * alpha * xi)) {}

    // r^{(k)}(y) / k!  for k = 0..3
    std::complex<double> scaled_derivative(double y, int k) const {
        std::complex<double> u, au0;
        if (y > 0.0) {
            const std::complex<double> e = std::exp(-alpha_ * y) * std::conj(ephase_);
            const std::complex<double> denom = 1.0 - e;
            if (std::abs(denom) < kPoleTol)
                throw Error(ErrorCode::PoleOnTorus, "Zak denominator vanished");
            u = 1.0 / denom;
            au0 = std::exp(-x_ * y) * u;
        } else {
            const std::complex<double> f = std::exp(alpha_ * y) * ephase_;
            const std::complex<double> denom = 1.0 - f;
            if (std::abs(denom) < kPoleTol)
                throw Error(ErrorCode::PoleOnTorus, "Zak denominator vanished");
            u = -f / denom;
            au0 = -std::exp((alpha_ - x_) * y) * ephase_ / denom;
        }
        if (k == 0) return c_ * au0;

        const std::complex<double> one_minus_u = 1.0 - u;
        const std::complex<double> one_minus_2u = 1.0 - 2.0 * u;
        std::complex<double> au[4];
        au[0] = au0;
        au[1] = alpha_ * au0 * one_minus_u;
        au[2] = alpha_ * alpha_ * au0 * one_minus_u * one_minus_2u;
        au[3] = alpha_ * alpha_ * alpha_ * au0 * one_minus_u *
                (one_minus_2u * one_minus_2u - 2.0 * u * one_minus_u);

        // Leibniz on exp(-x y) * u:  (d/dy)^k = sum_j C(k,j) (-x)^{k-j} exp(-x y) u^{(j)}
        static constexpr double binom[4][4] = {
            {1, 0, 0, 0}, {1, 1, 0, 0}, {1, 2, 1, 0}, {1, 3, 3, 1}};
        static constexpr double factorial[4] = {1, 1, 2, 6};
        std::complex<double> deriv(0.0, 0.0);
        double xpow = 1.0;
        for (int j = k; j >= 0; --j) {
            deriv += binom[k][j] * xpow * au[j];
            xpow *= -x_;
        }
        return c_ * deriv / factorial[k];
    }

private:
    double alpha_;
    double x_;
    std::complex<double> c_;
    std::complex<double> ephase_;
};

// Confluent Newton table over sorted knots; coincident knots (relative 1e-12)
// are snapped to a common representative and consume scaled derivatives.
std::complex<double> confluent_divided_difference(std::vector<double> knots,
                                                  const ZakIntegrand& f) {
    std::sort(knots.begin(), knots.end());
    const std::size_t n = knots.size();
    for (std::size_t i = 0; i < n;) {
        std::size_t j = i + 1;
        const double scale = std::abs(knots[i]);
        while (j < n && std::abs(knots[j] - knots[i]) < kDeltaDistinctTol * scale) ++j;
        if (j - i > 4)
            throw Error(ErrorCode::MultiplicityTooHigh,
                        "knot multiplicity above 4 is not supported");
        for (std::size_t k = i + 1; k < j; ++k) knots[k] = knots[i];
        i = j;
    }

    std::vector<std::complex<double>> column(n);
    for (std::size_t i = 0; i < n; ++i) column[i] = f.scaled_derivative(knots[i], 0);
    for (std::size_t order = 1; order < n; ++order) {
        for (std::size_t i = 0; i + order < n; ++i) {
            if (knots[i] == knots[i + order]) {
                column[i] = f.scaled_derivative(knots[i], static_cast<int>(order));
            } else {
                column[i] = (column[i + 1] - column[i]) / (knots[i + order] - knots[i]);
            }
        }
    }
    return column[0];
}

double zak_abs2(const TpfftWindow& w, double alpha, double x, double xi) {
    return std::norm(zak_transform(w, alpha, x, xi));
}

// Golden-section minimum of fn over [lo, hi], refined to the given width.
double golden_minimize(double lo, double hi, double width,
                       const std::function<double(double)>& fn) {
    constexpr double inv_phi = 0.61803398874989484820458683436564;
    double a = lo, b = hi;
    double c = b - inv_phi * (b - a);
    double d = a + inv_phi * (b - a);
    double fc = fn(c), fd = fn(d);
    while (b - a > width) {
        if (fc < fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - inv_phi * (b - a);
            fc = fn(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + inv_phi * (b - a);
            fd = fn(d);
        }
    }
    return 0.5 * (a + b);
}

} // namespace

std::complex<double> zak_closed(const TpfftWindow& w, double alpha, double x, double xi) {
    require_valid_point(alpha, x, xi);
    if (!w.distinct_deltas())
        throw Error(ErrorCode::RepeatedPoles,
                    "closed-form Zak transform needs distinct deltas; "
                    "use the divided-difference form");
    const ReducedPoint pt = reduce(alpha, x, xi);
    return pt.phase * closed_form_reduced(w, alpha, pt);
}

std::complex<double> zak_divided_difference(const TpfftWindow& w, double alpha, double x,
                                            double xi) {
    require_valid_point(alpha, x, xi);
    const ReducedPoint pt = reduce(alpha, x, xi);
    const auto& deltas = w.deltas();
    std::vector<double> knots(deltas.size());
    double knot_product = 1.0;
    for (std::size_t i = 0; i < deltas.size(); ++i) {
        knots[i] = 1.0 / deltas[i];
        knot_product *= knots[i];
    }
    const double sign = deltas.size() % 2 == 0 ? -1.0 : 1.0; // (-1)^{m-1}
    const std::complex<double> c = w.scale() * sign * knot_product;
    const ZakIntegrand f(alpha, pt.x, pt.xi, c);
    return pt.phase * confluent_divided_difference(std::move(knots), f);
}

std::complex<double> zak_series(const TpfftWindow& w, double alpha, double x, double xi,
                                double tol) {
    require_valid_point(alpha, x, xi);
    if (!(tol > 0.0))
        throw Error(ErrorCode::InvalidArgument, "series tolerance must be positive");
    const ReducedPoint pt = reduce(alpha, x, xi);

    // Tail of the shift sum: sum_{|k| > K} |g(x - alpha k)| <= 2 C_b rho^K / (1 - rho)
    // with rho = exp(-alpha / max|delta|).
    const double rho = std::exp(-alpha / w.max_abs_delta());
    const double cb = std::max(w.weight_abs_sum(), 1e-300);
    long cutoff = 4;
    if (rho > 0.0) {
        const double needed =
            std::log(20.0 * cb / ((1.0 - rho) * tol)) / (alpha / w.max_abs_delta());
        cutoff = std::max<long>(cutoff, static_cast<long>(std::ceil(needed)) + 1);
    }

    std::complex<double> sum(0.0, 0.0);
    for (long k = -cutoff; k <= cutoff; ++k) {
        const double g = w.evaluate(pt.x - alpha * static_cast<double>(k));
        if (g != 0.0)
            sum += g * std::polar(1.0, kTwoPi * alpha * static_cast<double>(k) * pt.xi);
    }
    return pt.phase * sum;
}

std::complex<double> zak_transform(const TpfftWindow& w, double alpha, double x, double xi) {
    return w.distinct_deltas() ? zak_closed(w, alpha, x, xi)
                               : zak_divided_difference(w, alpha, x, xi);
}

ZakZero find_zak_zero(const TpfftWindow& w, double alpha, double tol) {
    if (!(alpha > 0.0))
        throw Error(ErrorCode::InvalidArgument, "alpha must be positive");
    const double xi0 = 1.0 / (2.0 * alpha);
    const auto objective = [&](double x) { return zak_abs2(w, alpha, x, xi0); };

    constexpr int kNodes = 256;
    double best_x = 0.0;
    double best_val = std::numeric_limits<double>::infinity();
    for (int j = 0; j < kNodes; ++j) {
        const double x = alpha * (j + 0.5) / kNodes;
        const double v = objective(x);
        if (v < best_val) {
            best_val = v;
            best_x = x;
        }
    }
    const double half_cell = alpha / kNodes;
    const double lo = std::max(best_x - half_cell, alpha * 1e-12);
    const double hi = std::min(best_x + half_cell, alpha * (1.0 - 1e-12));
    const double x0 = golden_minimize(lo, hi, alpha * 1e-13, objective);
    const double residual = std::sqrt(objective(x0));
    if (!(residual < tol))
        throw Error(ErrorCode::ZeroNotResolved,
                    "Zak zero residual " + std::to_string(residual) +
                        " did not reach tolerance " + std::to_string(tol) + " at x0=" +
                        std::to_string(x0));
    return {x0, xi0, residual};
}

CriticalBounds critical_bounds(const TpfftWindow& w, int M, std::optional<int> K,
                               Setting setting, int grid_nodes, double frame_tol) {
    if (M <= 0)
        throw Error(ErrorCode::InvalidArgument, "M must be a positive integer");
    if (grid_nodes < 2)
        throw Error(ErrorCode::InvalidArgument, "grid_nodes must be at least 2");
    const double alpha = static_cast<double>(M);
    int periods = 0;
    if (setting != Setting::Sequence) {
        if (!K.has_value())
            throw Error(ErrorCode::DivisibilityError,
                        "the periodic and finite settings require K");
        if (*K <= 0 || *K % M != 0)
            throw Error(ErrorCode::DivisibilityError, "K must be a positive multiple of M");
        periods = *K / M;
    }

    double lower = std::numeric_limits<double>::infinity();
    double upper = 0.0;
    double min_x = 0.0, min_xi = 0.0;
    const auto record = [&](double x, double xi) {
        const double v = zak_abs2(w, alpha, x, xi);
        if (v < lower) {
            lower = v;
            min_x = x;
            min_xi = xi;
        }
        upper = std::max(upper, v);
    };

    switch (setting) {
    case Setting::Sequence:
        for (int k = 0; k < M; ++k)
            for (int q = 0; q < grid_nodes; ++q)
                record(static_cast<double>(k), q / (alpha * grid_nodes));
        break;
    case Setting::Periodic:
        for (int l = 0; l < periods; ++l)
            for (int p = 0; p < grid_nodes; ++p)
                record(alpha * p / grid_nodes, static_cast<double>(l) / *K);
        break;
    case Setting::Finite:
        for (int k = 0; k < M; ++k)
            for (int l = 0; l < periods; ++l)
                record(static_cast<double>(k), static_cast<double>(l) / *K);
        break;
    }

    // A grid minimum on a continuous axis only bounds the infimum from above;
    // polish around the minimizer before declaring a positive lower bound.
    if (setting == Setting::Sequence) {
        const double step = 1.0 / (alpha * grid_nodes);
        const double lo = std::max(min_xi - step, 0.0);
        const double hi = std::min(min_xi + step, 1.0 / alpha);
        const double xi_star = golden_minimize(lo, hi, step * 1e-9, [&](double xi) {
            return zak_abs2(w, alpha, min_x, xi);
        });
        lower = std::min(lower, zak_abs2(w, alpha, min_x, xi_star));
    } else if (setting == Setting::Periodic) {
        const double step = alpha / grid_nodes;
        const double lo = std::max(min_x - step, 0.0);
        const double hi = std::min(min_x + step, alpha);
        const double x_star = golden_minimize(lo, hi, step * 1e-9, [&](double x) {
            return zak_abs2(w, alpha, x, min_xi);
        });
        lower = std::min(lower, zak_abs2(w, alpha, x_star, min_xi));
    }

    return {lower, upper, lower > frame_tol};
}

ZakGrid zak_grid(const TpfftWindow& w, double alpha, Eigen::Index nx, Eigen::Index nxi) {
    if (!(alpha > 0.0) || nx <= 0 || nxi <= 0)
        throw Error(ErrorCode::InvalidArgument, "zak_grid needs alpha > 0 and positive sizes");
    ZakGrid grid;
    grid.alpha = alpha;
    grid.nx = nx;
    grid.nxi = nxi;
    grid.values.resize(nx, nxi);
    parallel_for(static_cast<long>(nx), [&](long p) {
        const double x = alpha * static_cast<double>(p) / static_cast<double>(nx);
        for (Eigen::Index q = 0; q < nxi; ++q) {
            const double xi =
                static_cast<double>(q) / (alpha * static_cast<double>(nxi));
            grid.values(p, q) = zak_transform(w, alpha, x, xi);
        }
    });
    return grid;
}

} // namespace tpgabor
