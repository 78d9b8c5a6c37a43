#pragma once

#include <complex>
#include <optional>

#include <Eigen/Core>

#include "tpgabor/window.hpp"

namespace tpgabor {

/// Zak transform values over the fundamental domain [0,alpha) x [0,1/alpha),
/// sampled at x_p = p*alpha/nx and xi_q = q/(alpha*nxi).
struct ZakGrid {
    double alpha = 1.0;
    Eigen::Index nx = 0;
    Eigen::Index nxi = 0;
    Eigen::MatrixXcd values; // (p, q) -> Z(x_p, xi_q)
};

/// Closed form of Z_alpha g(x, xi) for pairwise distinct deltas:
///
///   sum_i C/delta_i * exp(-x/delta_i) / (1 - exp(-alpha*(1/delta_i + 2 pi i xi)))
///        * prod_{k != i} (1 - delta_k/delta_i)^{-1}.
///
/// Arbitrary (x, xi) are reduced into the fundamental domain first; negative
/// poles are rewritten so every exponent stays nonpositive.
/// Throws RepeatedPoles for coincident deltas and PoleOnTorus if a
/// denominator modulus drops below 1e-14 (impossible for finite real input).
std::complex<double> zak_closed(const TpfftWindow& w, double alpha, double x, double xi);

/// Same value as a confluent divided difference over knots a_i = 1/delta_i:
///
///   Z_alpha g(x, xi) = [a_1, ..., a_m | r],
///   r(y) = (-1)^{m-1} (prod_i a_i) * exp(-x*y) / (1 - exp(-alpha*(y + 2 pi i xi))),
///
/// valid for repeated deltas as well (knot multiplicity at most 4; higher
/// multiplicities throw MultiplicityTooHigh).
std::complex<double> zak_divided_difference(const TpfftWindow& w, double alpha, double x,
                                            double xi);

/// Truncated defining series sum_k g(x - alpha k) exp(2 pi i alpha k xi); the
/// cutoff is chosen from the window's decay bound so the dropped tail is
/// below tol/10. Reference implementation used to cross-check the closed
/// forms; needs distinct deltas.
std::complex<double> zak_series(const TpfftWindow& w, double alpha, double x, double xi,
                                double tol);

/// Dispatches to the closed form or the divided-difference form.
std::complex<double> zak_transform(const TpfftWindow& w, double alpha, double x, double xi);

struct ZakZero {
    double x0 = 0.0;       // in (0, alpha)
    double xi0 = 0.0;      // always 1/(2*alpha)
    double residual = 0.0; // |Z(x0, xi0)|
};

/// Locates the zero of Z_alpha g on the line xi = 1/(2*alpha) by a 256-node
/// scan of |Z|^2 plus golden-section refinement. Throws ZeroNotResolved when
/// the refined residual is still >= tol.
ZakZero find_zak_zero(const TpfftWindow& w, double alpha, double tol);

enum class Setting { Sequence, Periodic, Finite };

struct CriticalBounds {
    double lower = 0.0; // min |Z_M g|^2 over the evaluation set
    double upper = 0.0; // max |Z_M g|^2 over the evaluation set
    bool is_frame = false;
};

/// Frame-bound estimates at critical density alpha = M, beta = 1/M. The
/// evaluation set depends on the setting:
///   Sequence: k in {0..M-1} x dense xi-grid of [0, 1/M)
///   Periodic: dense x-grid of [0, M) x {l/K : l = 0..K/M-1}
///   Finite:   {0..M-1} x {l/K : l = 0..K/M-1}        (exact, no refinement)
/// Continuous axes are scanned on grid_nodes points and the minimum is
/// polished by golden-section search before the frame decision, so a dip
/// between nodes cannot be missed at the reported resolution.
/// K is required for Periodic/Finite and must be a multiple of M.
CriticalBounds critical_bounds(const TpfftWindow& w, int M, std::optional<int> K,
                               Setting setting, int grid_nodes = 4096,
                               double frame_tol = 1e-10);

ZakGrid zak_grid(const TpfftWindow& w, double alpha, Eigen::Index nx, Eigen::Index nxi);

} // namespace tpgabor
