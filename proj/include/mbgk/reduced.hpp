#ifndef MBGK_REDUCED_HPP
#define MBGK_REDUCED_HPP

#include <span>

#include "mbgk/grid.hpp"
#include "mbgk/maxwellian.hpp"
#include "mbgk/model.hpp"

namespace mbgk {

/**
 * Chu-reduced representation of a 3D distribution on a 1D lattice in v_x:
 * g is the v_x marginal and h the transverse-energy moment
 * h(v_x) = int |v_perp|^2 f dv_perp. Transverse bulk velocity is assumed zero,
 * so h carries purely thermal transverse energy.
 */
struct ReducedPair {
    GridPtr grid;  // 1D
    std::vector<double> g;
    std::vector<double> h;
    int species = 1;

    ReducedPair() = default;
    ReducedPair(GridPtr gr, int sp)
        : grid(std::move(gr)), g(grid->size(), 0.0), h(grid->size(), 0.0), species(sp) {}
};

/// Marginalizes a 3D distribution to (g, h) on the matching 1D lattice.
ReducedPair chu_reduce(const DiscreteDistribution& f3);

/**
 * Moments of a reduced pair: n and u_x from g; the temperature combines the
 * longitudinal variance of g with the transverse energy carried by h,
 * 3 n T / m = sum w (v-u_x)^2 g + sum w h.
 */
Moments reduced_moments(const ReducedPair& rp, double mass);

/// Span variant used by the spatial solver (g, h live in cell-major storage).
Moments reduced_moments(const VelocityGrid& grid, std::span<const double> g,
                        std::span<const double> h, double mass);

/**
 * Exact reduction of the 3D Maxwellian with the target moments: g is the
 * conservative 1D Maxwellian (discrete moments n, n u_x, and longitudinal
 * variance n T/m) and h = 2 (T/m) g. Discrete reduced moments reproduce the
 * target exactly.
 */
ReducedPair reduced_maxwellian(const Moments& target, GridPtr grid1d, double mass,
                               int species = 1);

/// In-place variant writing into preallocated per-cell storage.
void reduced_maxwellian_into(const VelocityGrid& grid, const Moments& target, double mass,
                             std::span<double> g_out, std::span<double> h_out);

} // namespace mbgk

#endif
