#include "mbgk/homogeneous.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace mbgk {

double MixtureModel::nu12_at(double n1, double n2) const {
    if (!density_dependent_nu) return ip.nu12;
    return collision_frequency_formula(alpha12, n1, n2, sp1.mass, sp2.mass);
}

InteractionParams MixtureModel::ip_at(double n1, double n2) const {
    InteractionParams out = ip;
    out.nu12 = nu12_at(n1, n2);
    return out;
}

std::pair<std::vector<double>, std::vector<double>>
rhs_homogeneous(const HomogeneousState& s, const MixtureModel& model) {
    const Moments mom1 = discrete_moments(s.f1, model.sp1.mass);
    const Moments mom2 = discrete_moments(s.f2, model.sp2.mass);
    const InteractionParams ip = model.ip_at(mom1.n, mom2.n);

    const DiscreteDistribution M1 = project_maxwellian(mom1, s.f1.grid, model.sp1.mass, 1);
    const DiscreteDistribution M2 = project_maxwellian(mom2, s.f2.grid, model.sp2.mass, 2);
    const MixtureMoments mm = mixture_moments(mom1, mom2, ip, model.sp1, model.sp2);
    const DiscreteDistribution M12 = project_maxwellian(mm.m12, s.f1.grid, model.sp1.mass, 1);
    const DiscreteDistribution M21 = project_maxwellian(mm.m21, s.f2.grid, model.sp2.mass, 2);

    const double r11 = model.sp1.nu_intra * mom1.n;
    const double r12 = ip.nu12 * mom2.n;
    const double r22 = model.sp2.nu_intra * mom2.n;
    const double r21 = ip.nu21() * mom1.n;

    std::vector<double> df1(s.f1.values.size());
    std::vector<double> df2(s.f2.values.size());
    for (std::size_t i = 0; i < df1.size(); ++i)
        df1[i] = r11 * (M1.values[i] - s.f1.values[i]) + r12 * (M12.values[i] - s.f1.values[i]);
    for (std::size_t i = 0; i < df2.size(); ++i)
        df2[i] = r22 * (M2.values[i] - s.f2.values[i]) + r21 * (M21.values[i] - s.f2.values[i]);
    return {std::move(df1), std::move(df2)};
}

std::pair<Moments, Moments> implicit_moment_update(const Moments& mom1, const Moments& mom2,
                                                   double dt, const InteractionParams& ip,
                                                   const SpeciesParams& sp1,
                                                   const SpeciesParams& sp2) {
    const double m1 = sp1.mass, m2 = sp2.mass;
    const double eps = ip.epsilon, d = ip.delta, alpha = ip.alpha, gamma = ip.gamma;
    const double n1 = mom1.n, n2 = mom2.n;

    // velocities: u1' = u1 + A(u2'-u1'), u2' = u2 - B(u2'-u1')
    const double A = dt * ip.nu12 * n2 * (1.0 - d);
    const double B = dt * ip.nu12 * n1 * (m1 / m2) * (1.0 - d);
    const double den = 1.0 + A + B;
    const Vec3 u1n = (1.0 / den) * ((1.0 + B) * mom1.u + A * mom2.u);
    const Vec3 u2n = (1.0 / den) * ((1.0 + A) * mom2.u + B * mom1.u);

    // temperatures from the discrete second-moment equations
    const double beta1 = dt * ip.nu12 * n2;
    const double beta2 = dt * ip.nu21() * n1;
    const Vec3 u12n = d * u1n + (1.0 - d) * u2n;
    const Vec3 u21n = u2n - (m1 / m2) * eps * (1.0 - d) * (u2n - u1n);
    const double dusq = norm_sq(u1n - u2n);
    const double kap = eps * m1 * (1.0 - d) * ((m1 / m2) * eps * (d - 1.0) + d + 1.0) / 3.0 -
                       eps * gamma;

    const double a1 = beta1 * (1.0 - alpha);
    const double a2 = beta2 * eps * (1.0 - alpha);
    const double b1 = mom1.T + (m1 / 3.0) * (norm_sq(mom1.u) - norm_sq(u1n)) +
                      beta1 * ((m1 / 3.0) * (norm_sq(u12n) - norm_sq(u1n)) + gamma * dusq);
    const double b2 = mom2.T + (m2 / 3.0) * (norm_sq(mom2.u) - norm_sq(u2n)) +
                      beta2 * ((m2 / 3.0) * (norm_sq(u21n) - norm_sq(u2n)) + kap * dusq);
    const double det = (1.0 + a1) * (1.0 + a2) - a1 * a2;
    const double T1n = ((1.0 + a2) * b1 + a1 * b2) / det;
    const double T2n = (a2 * b1 + (1.0 + a1) * b2) / det;

    return {Moments{n1, u1n, T1n}, Moments{n2, u2n, T2n}};
}

namespace {

HomogeneousState step_rk4(const HomogeneousState& s, double dt, const MixtureModel& model) {
    const auto k1 = rhs_homogeneous(s, model);

    HomogeneousState mid = s;
    auto advance = [&](const HomogeneousState& base,
                       const std::pair<std::vector<double>, std::vector<double>>& k,
                       double c, HomogeneousState& out) {
        for (std::size_t i = 0; i < base.f1.values.size(); ++i)
            out.f1.values[i] = base.f1.values[i] + c * k.first[i];
        for (std::size_t i = 0; i < base.f2.values.size(); ++i)
            out.f2.values[i] = base.f2.values[i] + c * k.second[i];
    };

    advance(s, k1, 0.5 * dt, mid);
    const auto k2 = rhs_homogeneous(mid, model);
    advance(s, k2, 0.5 * dt, mid);
    const auto k3 = rhs_homogeneous(mid, model);
    advance(s, k3, dt, mid);
    const auto k4 = rhs_homogeneous(mid, model);

    HomogeneousState out = s;
    const double c = dt / 6.0;
    for (std::size_t i = 0; i < out.f1.values.size(); ++i)
        out.f1.values[i] += c * (k1.first[i] + 2.0 * k2.first[i] + 2.0 * k3.first[i] + k4.first[i]);
    for (std::size_t i = 0; i < out.f2.values.size(); ++i)
        out.f2.values[i] += c * (k1.second[i] + 2.0 * k2.second[i] + 2.0 * k3.second[i] + k4.second[i]);
    out.time = s.time + dt;
    return out;
}

HomogeneousState step_implicit(const HomogeneousState& s, double dt, const MixtureModel& model) {
    const Moments mom1 = discrete_moments(s.f1, model.sp1.mass);
    const Moments mom2 = discrete_moments(s.f2, model.sp2.mass);
    const InteractionParams ip = model.ip_at(mom1.n, mom2.n);

    const auto [new1, new2] = implicit_moment_update(mom1, mom2, dt, ip, model.sp1, model.sp2);

    const DiscreteDistribution M1 = project_maxwellian(new1, s.f1.grid, model.sp1.mass, 1);
    const DiscreteDistribution M2 = project_maxwellian(new2, s.f2.grid, model.sp2.mass, 2);
    const MixtureMoments mm = mixture_moments(new1, new2, ip, model.sp1, model.sp2);
    const DiscreteDistribution M12 = project_maxwellian(mm.m12, s.f1.grid, model.sp1.mass, 1);
    const DiscreteDistribution M21 = project_maxwellian(mm.m21, s.f2.grid, model.sp2.mass, 2);

    const double r11 = model.sp1.nu_intra * new1.n;
    const double r12 = ip.nu12 * new2.n;
    const double r22 = model.sp2.nu_intra * new2.n;
    const double r21 = ip.nu21() * new1.n;

    HomogeneousState out = s;
    const double d1 = 1.0 + dt * (r11 + r12);
    const double d2 = 1.0 + dt * (r22 + r21);
    for (std::size_t i = 0; i < out.f1.values.size(); ++i)
        out.f1.values[i] = (s.f1.values[i] + dt * (r11 * M1.values[i] + r12 * M12.values[i])) / d1;
    for (std::size_t i = 0; i < out.f2.values.size(); ++i)
        out.f2.values[i] = (s.f2.values[i] + dt * (r22 * M2.values[i] + r21 * M21.values[i])) / d2;
    out.time = s.time + dt;
    return out;
}

} // namespace

HomogeneousState step(const HomogeneousState& s, double dt, TimeScheme scheme,
                      const MixtureModel& model) {
    if (!(dt > 0.0)) throw std::invalid_argument("step: dt must be positive");
    if (scheme == TimeScheme::rk4) {
        const Moments mom1 = discrete_moments(s.f1, model.sp1.mass);
        const Moments mom2 = discrete_moments(s.f2, model.sp2.mass);
        const InteractionParams ip = model.ip_at(mom1.n, mom2.n);
        const double rate = std::max(model.sp1.nu_intra * mom1.n + ip.nu12 * mom2.n,
                                     model.sp2.nu_intra * mom2.n + ip.nu21() * mom1.n);
        if (dt * rate > 2.0)
            throw std::invalid_argument("step: explicit stability bound dt*max(nu n) <= 2 "
                                        "violated");
        return step_rk4(s, dt, model);
    }
    return step_implicit(s, dt, model);
}

HomogeneousResult run_homogeneous(HomogeneousState initial, const HomogeneousRunConfig& cfg) {
    if (!(cfg.dt > 0.0) || !(cfg.t_end >= 0.0) || cfg.output_stride < 1)
        throw std::invalid_argument("run_homogeneous: bad time configuration");

    HomogeneousResult result;

    const Moments mom1_0 = discrete_moments(initial.f1, cfg.model.sp1.mass);
    const Moments mom2_0 = discrete_moments(initial.f2, cfg.model.sp2.mass);
    result.rc = relaxation_coefficients(cfg.model.ip_at(mom1_0.n, mom2_0.n), cfg.model.sp1,
                                        cfg.model.sp2, mom1_0.n, mom2_0.n);

    const DiscreteDistribution M1_0 =
        project_maxwellian(mom1_0, initial.f1.grid, cfg.model.sp1.mass, 1);
    const DiscreteDistribution M2_0 =
        project_maxwellian(mom2_0, initial.f2.grid, cfg.model.sp2.mass, 2);
    result.h0 = std::sqrt(std::max(0.0, relative_entropy(initial.f1, M1_0) +
                                            relative_entropy(initial.f2, M2_0)));

    const double du_sq_0 = norm_sq(mom1_0.u - mom2_0.u);
    const double dT_0 = mom1_0.T - mom2_0.T;

    auto totals = [&](const Moments& m1, const Moments& m2, double& energy, Vec3& p) {
        p = cfg.model.sp1.mass * m1.n * m1.u + cfg.model.sp2.mass * m2.n * m2.u;
        energy = 0.5 * cfg.model.sp1.mass * m1.n * norm_sq(m1.u) + 1.5 * m1.n * m1.T +
                 0.5 * cfg.model.sp2.mass * m2.n * norm_sq(m2.u) + 1.5 * m2.n * m2.T;
    };

    auto sample = [&](const HomogeneousState& s) {
        const Moments m1 = discrete_moments(s.f1, cfg.model.sp1.mass);
        const Moments m2 = discrete_moments(s.f2, cfg.model.sp2.mass);
        HomogeneousSample smp;
        smp.time = s.time;
        smp.m1 = m1;
        smp.m2 = m2;
        smp.entropy_total = entropy(s.f1) + entropy(s.f2);
        const DiscreteDistribution M1 = project_maxwellian(m1, s.f1.grid, cfg.model.sp1.mass, 1);
        const DiscreteDistribution M2 = project_maxwellian(m2, s.f2.grid, cfg.model.sp2.mass, 2);
        smp.l1_dist_1 = l1_distance(s.f1, M1);
        smp.l1_dist_2 = l1_distance(s.f2, M2);
        totals(m1, m2, smp.total_energy, smp.total_momentum);
        smp.du_sq = norm_sq(m1.u - m2.u);
        smp.du_sq_closed = closed_form_velocity_diff(s.time, du_sq_0, result.rc);
        smp.dT = m1.T - m2.T;
        smp.dT_closed = closed_form_temperature_diff(s.time, dT_0, du_sq_0, result.rc).value;
        smp.entropy_bound = entropy_decay_bound(s.time, result.h0, result.rc);
        result.samples.push_back(smp);

        ConservationLedger::Sample ls;
        ls.time = s.time;
        ls.mass1 = m1.n;
        ls.mass2 = m2.n;
        ls.momentum = smp.total_momentum;
        ls.energy = smp.total_energy;
        ls.entropy = smp.entropy_total;
        result.ledger.append(ls);
    };

    const long nsteps = std::lround(cfg.t_end / cfg.dt);
    HomogeneousState state = std::move(initial);
    sample(state);

    double H_prev = result.samples.front().entropy_total;
    double E_prev = result.ledger.reference().energy;
    Vec3 p_prev = result.ledger.reference().momentum;
    const double p_scale = std::max(norm(p_prev), std::sqrt(2.0 * std::fabs(E_prev) *
                                                            (mom1_0.n * cfg.model.sp1.mass +
                                                             mom2_0.n * cfg.model.sp2.mass)));

    for (long k = 1; k <= nsteps; ++k) {
        state = step(state, cfg.dt, cfg.scheme, cfg.model);
        if (cfg.entropy_every_step) {
            const double H = entropy(state.f1) + entropy(state.f2);
            result.max_entropy_increase = std::max(result.max_entropy_increase, H - H_prev);
            H_prev = H;
            // per-step drift of the conserved totals
            const Moments m1 = discrete_moments(state.f1, cfg.model.sp1.mass);
            const Moments m2 = discrete_moments(state.f2, cfg.model.sp2.mass);
            double E;
            Vec3 p;
            totals(m1, m2, E, p);
            result.max_step_drift = std::max(
                {result.max_step_drift, std::fabs(E - E_prev) / std::fabs(E_prev),
                 norm(p - p_prev) / p_scale});
            E_prev = E;
            p_prev = p;
        }
        if (k % cfg.output_stride == 0 || k == nsteps) sample(state);
    }

    result.final_state = std::move(state);
    return result;
}

} // namespace mbgk
