#include "mbgk/reduced.hpp"

#include <cmath>
#include <memory>
#include <stdexcept>

namespace mbgk {

ReducedPair chu_reduce(const DiscreteDistribution& f3) {
    const VelocityGrid& g3 = *f3.grid;
    if (g3.dim() != 3)
        throw std::invalid_argument("chu_reduce: expected a 3D grid");

    const GridAxis& ax = g3.axis(0);
    auto g1 = std::make_shared<VelocityGrid>(VelocityGrid::line(ax.nodes, ax.v_min, ax.v_max));
    ReducedPair rp(g1, f3.species);

    const auto& vy = g3.coords(1);
    const auto& vz = g3.coords(2);
    const int nx = ax.nodes, ny = g3.axis(1).nodes, nz = g3.axis(2).nodes;
    const double w_perp = g3.axis(1).spacing() * g3.axis(2).spacing();

    std::size_t idx = 0;
    for (int i = 0; i < nx; ++i) {
        double sg = 0.0, sh = 0.0;
        for (int j = 0; j < ny; ++j) {
            const double cy2 = vy[static_cast<std::size_t>(j)] * vy[static_cast<std::size_t>(j)];
            for (int k = 0; k < nz; ++k, ++idx) {
                const double fv = f3.values[idx];
                sg += fv;
                sh += (cy2 + vz[static_cast<std::size_t>(k)] * vz[static_cast<std::size_t>(k)]) * fv;
            }
        }
        rp.g[static_cast<std::size_t>(i)] = w_perp * sg;
        rp.h[static_cast<std::size_t>(i)] = w_perp * sh;
    }
    return rp;
}

Moments reduced_moments(const VelocityGrid& grid, std::span<const double> g,
                        std::span<const double> h, double mass) {
    if (grid.dim() != 1)
        throw std::invalid_argument("reduced_moments: expected a 1D grid");
    const double w = grid.weight();
    const auto& v = grid.coords(0);

    double s0 = 0.0, s1 = 0.0, s2 = 0.0, sh = 0.0;
    for (std::size_t i = 0; i < g.size(); ++i) {
        s0 += g[i];
        s1 += v[i] * g[i];
        s2 += v[i] * v[i] * g[i];
        sh += h[i];
    }

    Moments mom;
    mom.n = w * s0;
    if (mom.n <= kVacuumDensity)
        throw VacuumError("reduced_moments: density below vacuum floor");
    const double ux = w * s1 / mom.n;
    mom.u = Vec3{ux, 0.0, 0.0};
    mom.T = mass * ((w * s2 - mom.n * ux * ux) + w * sh) / (3.0 * mom.n);
    return mom;
}

Moments reduced_moments(const ReducedPair& rp, double mass) {
    return reduced_moments(*rp.grid, rp.g, rp.h, mass);
}

void reduced_maxwellian_into(const VelocityGrid& grid, const Moments& target, double mass,
                             std::span<double> g_out, std::span<double> h_out) {
    if (!(target.n > 0.0) || !(target.T > 0.0))
        throw std::invalid_argument("reduced_maxwellian: target density and temperature "
                                    "must be positive");
    if (grid.dim() != 1)
        throw std::invalid_argument("reduced_maxwellian: expected a 1D grid");

    const double sigma = std::sqrt(target.T / mass);
    const GridAxis& ax = grid.axis(0);
    if (target.u.x - 4.0 * sigma < ax.v_min || target.u.x + 4.0 * sigma > ax.v_max)
        throw std::invalid_argument("reduced_maxwellian: target not representable on the "
                                    "grid (|u| + 4 sigma exceeds the bounds)");

    std::vector<double> g(grid.size());
    detail::project_exponential(grid, target.n, Vec3{target.u.x, 0.0, 0.0},
                                target.n * target.T / mass, g);
    const double c = 2.0 * target.T / mass;
    for (std::size_t i = 0; i < g.size(); ++i) {
        g_out[i] = g[i];
        h_out[i] = c * g[i];
    }
}

ReducedPair reduced_maxwellian(const Moments& target, GridPtr grid1d, double mass,
                               int species) {
    ReducedPair rp(std::move(grid1d), species);
    reduced_maxwellian_into(*rp.grid, target, mass, rp.g, rp.h);
    return rp;
}

} // namespace mbgk
