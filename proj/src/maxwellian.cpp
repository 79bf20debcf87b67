#include "mbgk/maxwellian.hpp"

#include <algorithm>
#include <array>
#include <cmath>

namespace mbgk {

Moments discrete_moments(const DiscreteDistribution& f, double mass) {
    const VelocityGrid& g = *f.grid;
    if (g.dim() != 3)
        throw std::invalid_argument("discrete_moments: expected a 3D grid");
    const double w = g.weight();
    const auto& vx = g.coords(0);
    const auto& vy = g.coords(1);
    const auto& vz = g.coords(2);
    const int nx = g.axis(0).nodes, ny = g.axis(1).nodes, nz = g.axis(2).nodes;

    double s0 = 0.0, sx = 0.0, sy = 0.0, sz = 0.0, s2 = 0.0;
    std::size_t idx = 0;
    for (int i = 0; i < nx; ++i) {
        const double cx = vx[static_cast<std::size_t>(i)];
        for (int j = 0; j < ny; ++j) {
            const double cy = vy[static_cast<std::size_t>(j)];
            const double cxy = cx * cx + cy * cy;
            double t0 = 0.0, tz = 0.0, t2 = 0.0;
            for (int k = 0; k < nz; ++k, ++idx) {
                const double fv = f.values[idx];
                const double cz = vz[static_cast<std::size_t>(k)];
                t0 += fv;
                tz += cz * fv;
                t2 += (cxy + cz * cz) * fv;
            }
            s0 += t0;
            sx += cx * t0;
            sy += cy * t0;
            sz += tz;
            s2 += t2;
        }
    }

    Moments mom;
    mom.n = w * s0;
    if (mom.n <= kVacuumDensity)
        throw VacuumError("discrete_moments: density below vacuum floor");
    mom.u = Vec3{w * sx / mom.n, w * sy / mom.n, w * sz / mom.n};
    mom.T = mass * (w * s2 - mom.n * norm_sq(mom.u)) / (3.0 * mom.n);
    return mom;
}

namespace detail {

namespace {

// Per-axis power sums S[p] = dv * sum_i c_i^p exp(b c_i + c c_i^2), p = 0..4.
void axis_sums(const std::vector<double>& coords, double dv, double b, double c,
               std::vector<double>& table, std::array<double, 5>& s) {
    s.fill(0.0);
    const std::size_t n = coords.size();
    table.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double v = coords[i];
        const double e = std::exp((b + c * v) * v);
        table[i] = e;
        const double v2 = v * v;
        s[0] += e;
        s[1] += v * e;
        s[2] += v2 * e;
        s[3] += v2 * v * e;
        s[4] += v2 * v2 * e;
    }
    for (double& x : s) x *= dv;
}

// Cholesky solve for the small SPD Gram system (m <= 5).
bool solve_spd(int m, double A[5][5], double rhs[5], double sol[5]) {
    double L[5][5] = {};
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j <= i; ++j) {
            double sum = A[i][j];
            for (int k = 0; k < j; ++k) sum -= L[i][k] * L[j][k];
            if (i == j) {
                if (!(sum > 0.0)) return false;
                L[i][i] = std::sqrt(sum);
            } else {
                L[i][j] = sum / L[j][j];
            }
        }
    }
    double y[5];
    for (int i = 0; i < m; ++i) {
        double sum = rhs[i];
        for (int k = 0; k < i; ++k) sum -= L[i][k] * y[k];
        y[i] = sum / L[i][i];
    }
    for (int i = m - 1; i >= 0; --i) {
        double sum = y[i];
        for (int k = i + 1; k < m; ++k) sum -= L[k][i] * sol[k];
        sol[i] = sum / L[i][i];
    }
    return true;
}

} // namespace

ExpParams project_exponential(const VelocityGrid& grid, double n, const Vec3& u,
                              double second_moment, std::vector<double>& out) {
    const int dim = grid.dim();
    const int m = dim + 2;  // unknowns: a, b (dim), c

    // Work in coordinates shifted by the target velocity: the targets become
    // (n, 0, second_moment) and the Gram system stays well conditioned.
    std::array<std::vector<double>, 3> shifted;
    for (int a = 0; a < dim; ++a) {
        shifted[static_cast<std::size_t>(a)] = grid.coords(a);
        for (double& v : shifted[static_cast<std::size_t>(a)]) v -= u[a];
    }

    const double sigma2 = second_moment / (n * dim);
    const double sigma = std::sqrt(sigma2);

    ExpParams p;
    p.a = std::log(n) - 0.5 * dim * std::log(2.0 * M_PI * sigma2);
    p.c = -0.5 / sigma2;

    const double scale_n = n;
    const double scale_p = n * sigma;
    const double scale_e = second_moment;

    std::array<std::vector<double>, 3> tables;
    std::array<std::array<double, 5>, 3> S;

    auto residual = [&](double r[5]) -> double {
        // moments of the current iterate against the shifted basis
        double prod0 = 1.0;
        for (int a = 0; a < dim; ++a) prod0 *= S[static_cast<std::size_t>(a)][0];
        const double ea = std::exp(p.a);
        const double mom_n = ea * prod0;
        double mom_e = 0.0;
        double mom_p[3] = {0.0, 0.0, 0.0};
        for (int a = 0; a < dim; ++a) {
            double px = 1.0, qx = 1.0;
            for (int b = 0; b < dim; ++b) {
                const auto& sb = S[static_cast<std::size_t>(b)];
                px *= (b == a) ? sb[1] : sb[0];
                qx *= (b == a) ? sb[2] : sb[0];
            }
            mom_p[a] = ea * px;
            mom_e += ea * qx;
        }
        r[0] = n - mom_n;
        for (int a = 0; a < dim; ++a) r[1 + a] = -mom_p[a];
        r[m - 1] = second_moment - mom_e;
        double rn = std::fabs(r[0]) / scale_n;
        for (int a = 0; a < dim; ++a) rn = std::max(rn, std::fabs(r[1 + a]) / scale_p);
        rn = std::max(rn, std::fabs(r[m - 1]) / scale_e);
        if (!std::isfinite(rn)) rn = HUGE_VAL;
        return rn;
    };

    auto refresh = [&]() {
        for (int a = 0; a < dim; ++a)
            axis_sums(shifted[static_cast<std::size_t>(a)], grid.axis(a).spacing(),
                      p.b[a], p.c, tables[static_cast<std::size_t>(a)],
                      S[static_cast<std::size_t>(a)]);
    };

    refresh();
    double r[5];
    double res = residual(r);
    const double tol = 1e-13;

    for (int iter = 0; iter < 50 && res > tol; ++iter) {
        // Gram matrix of the basis (1, c_a, |c|^2) weighted by the iterate.
        const double ea = std::exp(p.a);
        double prod0 = 1.0;
        for (int a = 0; a < dim; ++a) prod0 *= S[static_cast<std::size_t>(a)][0];
        auto term = [&](const int pw[3]) {
            double t = ea;
            for (int a = 0; a < dim; ++a)
                t *= S[static_cast<std::size_t>(a)][static_cast<std::size_t>(pw[a])];
            return t;
        };
        double J[5][5] = {};
        {
            // index order: [1, c_0..c_{dim-1}, |c|^2]
            int pw[3] = {0, 0, 0};
            J[0][0] = ea * prod0;
            for (int a = 0; a < dim; ++a) {
                pw[0] = pw[1] = pw[2] = 0;
                pw[a] = 1;
                J[0][1 + a] = J[1 + a][0] = term(pw);
                for (int b = a; b < dim; ++b) {
                    pw[0] = pw[1] = pw[2] = 0;
                    pw[a] += 1;
                    pw[b] += 1;
                    J[1 + a][1 + b] = J[1 + b][1 + a] = term(pw);
                    pw[a] = pw[b] = 0;
                }
            }
            // <1, |c|^2> and <c_a, |c|^2>
            double e1 = 0.0;
            for (int b = 0; b < dim; ++b) {
                pw[0] = pw[1] = pw[2] = 0;
                pw[b] = 2;
                e1 += term(pw);
            }
            J[0][m - 1] = J[m - 1][0] = e1;
            for (int a = 0; a < dim; ++a) {
                double s = 0.0;
                for (int b = 0; b < dim; ++b) {
                    pw[0] = pw[1] = pw[2] = 0;
                    pw[a] += 1;
                    pw[b] += 2;
                    s += term(pw);
                }
                J[1 + a][m - 1] = J[m - 1][1 + a] = s;
            }
            // <|c|^2, |c|^2>
            double s = 0.0;
            for (int a = 0; a < dim; ++a)
                for (int b = 0; b < dim; ++b) {
                    pw[0] = pw[1] = pw[2] = 0;
                    pw[a] += 2;
                    pw[b] += 2;
                    s += term(pw);
                }
            J[m - 1][m - 1] = s;
        }

        double step[5];
        if (!solve_spd(m, J, r, step))
            throw ProjectionFailure("project_maxwellian: singular Gram matrix", res);

        const ExpParams saved = p;
        double lambda = 1.0;
        double new_res = HUGE_VAL;
        for (int halving = 0; halving < 40; ++halving) {
            p = saved;
            p.a += lambda * step[0];
            for (int a = 0; a < dim; ++a) p.b[a] += lambda * step[1 + a];
            p.c += lambda * step[m - 1];
            if (p.c < 0.0) {
                refresh();
                new_res = residual(r);
                if (new_res < res) break;
            }
            lambda *= 0.5;
        }
        if (!(new_res < res)) {
            p = saved;
            refresh();
            res = residual(r);
            break;
        }
        res = new_res;
    }

    if (res > 1e-12)
        throw ProjectionFailure("project_maxwellian: Newton did not reach the moment "
                                "tolerance", res);

    // evaluate on the full lattice
    out.resize(grid.size());
    const double ea = std::exp(p.a);
    if (dim == 1) {
        const auto& ex = tables[0];
        for (std::size_t i = 0; i < ex.size(); ++i) out[i] = ea * ex[i];
    } else {
        const auto& ex = tables[0];
        const auto& ey = tables[1];
        const auto& ez = tables[2];
        const std::size_t nz = ez.size();
        std::size_t idx = 0;
        for (std::size_t i = 0; i < ex.size(); ++i) {
            const double exa = ea * ex[i];
            for (std::size_t j = 0; j < ey.size(); ++j) {
                const double pxy = exa * ey[j];
                for (std::size_t k = 0; k < nz; ++k, ++idx) out[idx] = pxy * ez[k];
            }
        }
    }

    // report parameters in unshifted coordinates: exp(a' + b'.v + c|v|^2)
    ExpParams global = p;
    global.a = p.a;
    for (int a = 0; a < dim; ++a) {
        global.b[a] = p.b[a] - 2.0 * p.c * u[a];
        global.a += (p.c * u[a] - p.b[a]) * u[a];
    }
    return global;
}

} // namespace detail

DiscreteDistribution project_maxwellian(const Moments& target, GridPtr grid, double mass,
                                        int species) {
    if (!(target.n > 0.0) || !(target.T > 0.0))
        throw std::invalid_argument("project_maxwellian: target density and temperature "
                                    "must be positive");
    if (grid->dim() != 3)
        throw std::invalid_argument("project_maxwellian: expected a 3D grid");

    const double sigma = std::sqrt(target.T / mass);
    for (int a = 0; a < 3; ++a) {
        const auto& ax = grid->axis(a);
        if (target.u[a] - 4.0 * sigma < ax.v_min || target.u[a] + 4.0 * sigma > ax.v_max)
            throw std::invalid_argument("project_maxwellian: target not representable on "
                                        "the grid (|u| + 4 sigma exceeds the bounds)");
    }

    DiscreteDistribution f(grid, species);
    detail::project_exponential(*grid, target.n, target.u,
                                3.0 * target.n * target.T / mass, f.values);
    return f;
}

} // namespace mbgk
