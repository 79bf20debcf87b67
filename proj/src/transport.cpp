#include "mbgk/transport.hpp"

#include <algorithm>
#include <cmath>

#include "mbgk/parallel.hpp"

namespace mbgk {

SpatialField::SpatialField(SpatialMesh m, GridPtr g) : mesh(m), grid(std::move(g)) {
    if (mesh.cells <= 0 || !(mesh.length > 0.0))
        throw std::invalid_argument("SpatialField: bad mesh");
    if (grid->dim() != 1)
        throw std::invalid_argument("SpatialField: expected a 1D velocity grid");
    const std::size_t total = static_cast<std::size_t>(mesh.cells) * grid->size();
    g1.assign(total, 0.0);
    h1.assign(total, 0.0);
    g2.assign(total, 0.0);
    h2.assign(total, 0.0);
}

ReducedPair SpatialField::cell_pair(int c, int species) const {
    ReducedPair rp(grid, species);
    const auto g = cell(species == 1 ? g1 : g2, c);
    const auto h = cell(species == 1 ? h1 : h2, c);
    std::copy(g.begin(), g.end(), rp.g.begin());
    std::copy(h.begin(), h.end(), rp.h.begin());
    return rp;
}

namespace {

// First-order upwind sweep of one cell-major array, periodic in space.
void upwind1(const std::vector<double>& in, std::vector<double>& out, int cells,
             std::size_t nv, const std::vector<double>& lambda) {
    for (int c = 0; c < cells; ++c) {
        const double* q = in.data() + static_cast<std::size_t>(c) * nv;
        const double* qm = in.data() + static_cast<std::size_t>((c + cells - 1) % cells) * nv;
        const double* qp = in.data() + static_cast<std::size_t>((c + 1) % cells) * nv;
        double* o = out.data() + static_cast<std::size_t>(c) * nv;
        for (std::size_t j = 0; j < nv; ++j) {
            const double l = lambda[j];
            o[j] = l > 0.0 ? q[j] - l * (q[j] - qm[j]) : q[j] - l * (qp[j] - q[j]);
        }
    }
}

inline double minmod(double a, double b) {
    return a * b > 0.0 ? (std::fabs(a) < std::fabs(b) ? a : b) : 0.0;
}

// Minmod-limited MUSCL sweep, forward Euler in time.
void muscl2(const std::vector<double>& in, std::vector<double>& out, int cells,
            std::size_t nv, const std::vector<double>& lambda) {
    // slope * 1 (cell units); interface flux in units of lambda * value
    std::vector<double> slope(in.size());
    for (int c = 0; c < cells; ++c) {
        const double* q = in.data() + static_cast<std::size_t>(c) * nv;
        const double* qm = in.data() + static_cast<std::size_t>((c + cells - 1) % cells) * nv;
        const double* qp = in.data() + static_cast<std::size_t>((c + 1) % cells) * nv;
        double* s = slope.data() + static_cast<std::size_t>(c) * nv;
        for (std::size_t j = 0; j < nv; ++j) s[j] = minmod(q[j] - qm[j], qp[j] - q[j]);
    }
    for (int c = 0; c < cells; ++c) {
        const int cm = (c + cells - 1) % cells;
        const int cp = (c + 1) % cells;
        const double* q = in.data() + static_cast<std::size_t>(c) * nv;
        const double* qm = in.data() + static_cast<std::size_t>(cm) * nv;
        const double* qp = in.data() + static_cast<std::size_t>(cp) * nv;
        const double* s = slope.data() + static_cast<std::size_t>(c) * nv;
        const double* sm = slope.data() + static_cast<std::size_t>(cm) * nv;
        const double* sp = slope.data() + static_cast<std::size_t>(cp) * nv;
        double* o = out.data() + static_cast<std::size_t>(c) * nv;
        for (std::size_t j = 0; j < nv; ++j) {
            const double l = lambda[j];
            double f_right, f_left;  // fluxes at c+1/2 and c-1/2, premultiplied by lambda
            if (l > 0.0) {
                f_right = l * (q[j] + 0.5 * s[j]);
                f_left = l * (qm[j] + 0.5 * sm[j]);
            } else {
                f_right = l * (qp[j] - 0.5 * sp[j]);
                f_left = l * (q[j] - 0.5 * s[j]);
            }
            o[j] = q[j] - (f_right - f_left);
        }
    }
}

} // namespace

SpatialField transport_step(const SpatialField& field, double dt, TransportOrder order) {
    if (!(dt > 0.0)) throw std::invalid_argument("transport_step: dt must be positive");
    const VelocityGrid& g = *field.grid;
    const double dx = field.mesh.dx();
    double vmax = 0.0;
    for (double v : g.coords(0)) vmax = std::max(vmax, std::fabs(v));
    const double cfl = dt * vmax / dx;
    const double limit = order == TransportOrder::first ? 1.0 : 0.5;
    if (cfl > limit * (1.0 + 1e-12))
        throw CflError("transport_step: CFL " + std::to_string(cfl) + " exceeds " +
                       std::to_string(limit));

    std::vector<double> lambda(g.size());
    for (std::size_t j = 0; j < lambda.size(); ++j) lambda[j] = g.coords(0)[j] * dt / dx;

    SpatialField out = field;
    const std::size_t nv = field.nv();
    auto sweep = [&](const std::vector<double>& in, std::vector<double>& o) {
        if (order == TransportOrder::first)
            upwind1(in, o, field.mesh.cells, nv, lambda);
        else
            muscl2(in, o, field.mesh.cells, nv, lambda);
    };
    sweep(field.g1, out.g1);
    sweep(field.h1, out.h1);
    sweep(field.g2, out.g2);
    sweep(field.h2, out.h2);
    out.time = field.time + dt;
    return out;
}

SpatialField relax_step(const SpatialField& field, double dt, const MixtureModel& model,
                        int threads) {
    SpatialField out = field;
    const VelocityGrid& grid = *field.grid;

    parallel_for(field.mesh.cells, threads, [&](int c) {
        const auto g1 = field.cell(field.g1, c);
        const auto h1 = field.cell(field.h1, c);
        const auto g2 = field.cell(field.g2, c);
        const auto h2 = field.cell(field.h2, c);

        const Moments mom1 = reduced_moments(grid, g1, h1, model.sp1.mass);
        const Moments mom2 = reduced_moments(grid, g2, h2, model.sp2.mass);
        const InteractionParams ip = model.ip_at(mom1.n, mom2.n);

        const auto [new1, new2] =
            implicit_moment_update(mom1, mom2, dt, ip, model.sp1, model.sp2);
        const MixtureMoments mm = mixture_moments(new1, new2, ip, model.sp1, model.sp2);

        std::vector<double> G1(grid.size()), H1(grid.size());
        std::vector<double> G12(grid.size()), H12(grid.size());
        std::vector<double> G2(grid.size()), H2(grid.size());
        std::vector<double> G21(grid.size()), H21(grid.size());
        reduced_maxwellian_into(grid, new1, model.sp1.mass, G1, H1);
        reduced_maxwellian_into(grid, mm.m12, model.sp1.mass, G12, H12);
        reduced_maxwellian_into(grid, new2, model.sp2.mass, G2, H2);
        reduced_maxwellian_into(grid, mm.m21, model.sp2.mass, G21, H21);

        const double r11 = model.sp1.nu_intra * new1.n;
        const double r12 = ip.nu12 * new2.n;
        const double r22 = model.sp2.nu_intra * new2.n;
        const double r21 = ip.nu21() * new1.n;
        const double d1 = 1.0 + dt * (r11 + r12);
        const double d2 = 1.0 + dt * (r22 + r21);

        auto og1 = out.cell(out.g1, c);
        auto oh1 = out.cell(out.h1, c);
        auto og2 = out.cell(out.g2, c);
        auto oh2 = out.cell(out.h2, c);
        for (std::size_t j = 0; j < grid.size(); ++j) {
            og1[j] = (g1[j] + dt * (r11 * G1[j] + r12 * G12[j])) / d1;
            oh1[j] = (h1[j] + dt * (r11 * H1[j] + r12 * H12[j])) / d1;
            og2[j] = (g2[j] + dt * (r22 * G2[j] + r21 * G21[j])) / d2;
            oh2[j] = (h2[j] + dt * (r22 * H2[j] + r21 * H21[j])) / d2;
        }
    });
    out.time = field.time;
    return out;
}

SpatialField imex_step(const SpatialField& field, double dt, const MixtureModel& model,
                       TransportOrder order, int threads) {
    if (order == TransportOrder::first) {
        SpatialField streamed = transport_step(field, dt, order);
        SpatialField out = relax_step(streamed, dt, model, threads);
        out.time = field.time + dt;
        return out;
    }

    // Heun pairing: average the transport increments of the begin-of-step and
    // predictor states, then relax implicitly over the full step.
    SpatialField t0 = transport_step(field, dt, order);
    SpatialField predictor = relax_step(t0, dt, model, threads);
    predictor.time = field.time + dt;
    SpatialField t1 = transport_step(predictor, dt, order);

    SpatialField avg = field;
    auto combine = [&](const std::vector<double>& base, const std::vector<double>& a0,
                       const std::vector<double>& p, const std::vector<double>& a1,
                       std::vector<double>& o) {
        for (std::size_t i = 0; i < o.size(); ++i)
            o[i] = base[i] + 0.5 * ((a0[i] - base[i]) + (a1[i] - p[i]));
    };
    combine(field.g1, t0.g1, predictor.g1, t1.g1, avg.g1);
    combine(field.h1, t0.h1, predictor.h1, t1.h1, avg.h1);
    combine(field.g2, t0.g2, predictor.g2, t1.g2, avg.g2);
    combine(field.h2, t0.h2, predictor.h2, t1.h2, avg.h2);

    SpatialField out = relax_step(avg, dt, model, threads);
    out.time = field.time + dt;
    return out;
}

TransportSample field_totals(const SpatialField& field, const MixtureModel& model) {
    const VelocityGrid& grid = *field.grid;
    const double w = grid.weight();
    const double dx = field.mesh.dx();
    const auto& v = grid.coords(0);

    TransportSample s;
    s.time = field.time;
    double ent = 0.0;
    for (int c = 0; c < field.mesh.cells; ++c) {
        const auto g1 = field.cell(field.g1, c);
        const auto h1 = field.cell(field.h1, c);
        const auto g2 = field.cell(field.g2, c);
        const auto h2 = field.cell(field.h2, c);
        double n1 = 0, n2 = 0, p1 = 0, p2 = 0, e1 = 0, e2 = 0, q1 = 0, q2 = 0;
        for (std::size_t j = 0; j < grid.size(); ++j) {
            n1 += g1[j];
            n2 += g2[j];
            p1 += v[j] * g1[j];
            p2 += v[j] * g2[j];
            e1 += v[j] * v[j] * g1[j];
            e2 += v[j] * v[j] * g2[j];
            q1 += h1[j];
            q2 += h2[j];
            const double kEntropyFloor = 1e-300;
            if (g1[j] > kEntropyFloor && h1[j] > kEntropyFloor)
                ent += g1[j] * (std::log(g1[j] * g1[j] / (M_PI * h1[j])) - 1.0);
            if (g2[j] > kEntropyFloor && h2[j] > kEntropyFloor)
                ent += g2[j] * (std::log(g2[j] * g2[j] / (M_PI * h2[j])) - 1.0);
        }
        s.mass1 += dx * w * n1;
        s.mass2 += dx * w * n2;
        s.momentum_x += dx * w * (model.sp1.mass * p1 + model.sp2.mass * p2);
        s.energy += dx * w * 0.5 * (model.sp1.mass * (e1 + q1) + model.sp2.mass * (e2 + q2));
    }
    s.entropy = dx * w * ent;
    return s;
}

std::vector<ProfileRow> field_profile(const SpatialField& field, const MixtureModel& model) {
    std::vector<ProfileRow> rows;
    rows.reserve(static_cast<std::size_t>(field.mesh.cells));
    for (int c = 0; c < field.mesh.cells; ++c) {
        ProfileRow row;
        row.x = (c + 0.5) * field.mesh.dx();
        row.m1 = reduced_moments(*field.grid, field.cell(field.g1, c),
                                 field.cell(field.h1, c), model.sp1.mass);
        row.m2 = reduced_moments(*field.grid, field.cell(field.g2, c),
                                 field.cell(field.h2, c), model.sp2.mass);
        rows.push_back(row);
    }
    return rows;
}

double equilibrium_deviation(const SpatialField& field, const MixtureModel& model) {
    const VelocityGrid& grid = *field.grid;
    const double w = grid.weight();
    const double dx = field.mesh.dx();

    double dev = 0.0;
    std::vector<double> G1(grid.size()), H1(grid.size());
    std::vector<double> G2(grid.size()), H2(grid.size());
    for (int c = 0; c < field.mesh.cells; ++c) {
        const auto g1 = field.cell(field.g1, c);
        const auto h1 = field.cell(field.h1, c);
        const auto g2 = field.cell(field.g2, c);
        const auto h2 = field.cell(field.h2, c);
        const Moments mom1 = reduced_moments(grid, g1, h1, model.sp1.mass);
        const Moments mom2 = reduced_moments(grid, g2, h2, model.sp2.mass);
        const auto [eq1, eq2] = equilibrium_moments(mom1, mom2, model.sp1, model.sp2);
        reduced_maxwellian_into(grid, eq1, model.sp1.mass, G1, H1);
        reduced_maxwellian_into(grid, eq2, model.sp2.mass, G2, H2);
        double s = 0.0;
        for (std::size_t j = 0; j < grid.size(); ++j)
            s += std::fabs(g1[j] - G1[j]) + std::fabs(h1[j] - H1[j]) +
                 std::fabs(g2[j] - G2[j]) + std::fabs(h2[j] - H2[j]);
        dev += dx * w * s;
    }
    return dev;
}

TransportResult run_1d(SpatialField initial, const TransportRunConfig& cfg) {
    if (!(cfg.dt > 0.0) || !(cfg.t_end >= 0.0) || cfg.output_stride < 1)
        throw std::invalid_argument("run_1d: bad time configuration");

    TransportResult result;
    auto sample = [&](const SpatialField& f) {
        const TransportSample s = field_totals(f, cfg.model);
        result.samples.push_back(s);
        ConservationLedger::Sample ls;
        ls.time = s.time;
        ls.mass1 = s.mass1;
        ls.mass2 = s.mass2;
        ls.momentum = Vec3{s.momentum_x, 0.0, 0.0};
        ls.energy = s.energy;
        ls.entropy = s.entropy;
        result.ledger.append(ls);
    };

    SpatialField field = std::move(initial);
    sample(field);
    double H_prev = result.samples.front().entropy;

    const long nsteps = std::lround(cfg.t_end / cfg.dt);
    for (long k = 1; k <= nsteps; ++k) {
        field = imex_step(field, cfg.dt, cfg.model, cfg.order, cfg.threads);
        const double H = field_totals(field, cfg.model).entropy;
        result.max_entropy_increase = std::max(result.max_entropy_increase, H - H_prev);
        H_prev = H;
        if (k % cfg.output_stride == 0 || k == nsteps) sample(field);
    }

    result.final_field = std::move(field);
    return result;
}

} // namespace mbgk
