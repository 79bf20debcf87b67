#include "mbgk/model.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace mbgk {

namespace {

// Relative threshold below which c1 - c3 is treated as a removable singularity.
constexpr double kSingularRel = 1e-10;

std::string fmt(double v) {
    std::ostringstream os;
    os.precision(10);
    os << v;
    return os.str();
}

} // namespace

void SpeciesParams::check() const {
    if (!(mass > 0.0))
        throw std::invalid_argument("SpeciesParams: mass must be positive");
    if (!(nu_intra >= 0.0))
        throw std::invalid_argument("SpeciesParams: nu_intra must be nonnegative");
}

bool ValidationReport::has(const std::string& constraint) const {
    for (const auto& v : violations)
        if (v.constraint == constraint) return true;
    return false;
}

std::string ValidationReport::to_string() const {
    if (admissible()) return "admissible";
    std::string out;
    for (const auto& v : violations) {
        if (!out.empty()) out += "; ";
        out += v.constraint + ": " + v.message;
    }
    return out;
}

double delta_lower_bound(double epsilon, double m1, double m2) {
    const double r = epsilon * m1 / m2;
    return (r - 1.0) / (1.0 + r);
}

double gamma_upper_bound(double epsilon, double delta, double m1, double m2) {
    const double r = epsilon * m1 / m2;
    return (m1 / 3.0) * (1.0 - delta) * ((1.0 + r) * delta + 1.0 - r);
}

ValidationReport validate_params(const InteractionParams& ip,
                                 const SpeciesParams& sp1, const SpeciesParams& sp2) {
    sp1.check();
    sp2.check();

    ValidationReport report;
    auto violate = [&report](std::string id, double margin, std::string msg) {
        report.violations.push_back({std::move(id), margin, std::move(msg)});
    };

    if (!(ip.nu12 > 0.0))
        violate("nu12_positive", -ip.nu12,
                "nu12 must be positive, got " + fmt(ip.nu12));

    if (ip.epsilon <= 0.0) {
        violate("epsilon_range", -ip.epsilon,
                "epsilon must lie in (0, 1], got " + fmt(ip.epsilon));
    } else if (ip.epsilon > 1.0) {
        violate("epsilon_range", ip.epsilon - 1.0,
                "epsilon must lie in (0, 1], got " + fmt(ip.epsilon) +
                    "; swap the species labels and use 1/epsilon");
    }

    if (ip.alpha < 0.0)
        violate("alpha_range", -ip.alpha, "alpha must lie in [0, 1], got " + fmt(ip.alpha));
    else if (ip.alpha > 1.0)
        violate("alpha_range", ip.alpha - 1.0, "alpha must lie in [0, 1], got " + fmt(ip.alpha));

    // delta and gamma bounds only make sense for a usable epsilon
    const double eps = (ip.epsilon > 0.0 && ip.epsilon <= 1.0) ? ip.epsilon : std::min(std::max(ip.epsilon, 1e-12), 1.0);
    const double dlo = delta_lower_bound(eps, sp1.mass, sp2.mass);
    if (ip.delta < dlo)
        violate("delta_range", dlo - ip.delta,
                "delta must lie in [" + fmt(dlo) + ", 1], got " + fmt(ip.delta));
    else if (ip.delta > 1.0)
        violate("delta_range", ip.delta - 1.0,
                "delta must lie in [" + fmt(dlo) + ", 1], got " + fmt(ip.delta));

    if (ip.gamma < 0.0) {
        violate("gamma_range", -ip.gamma, "gamma must be nonnegative, got " + fmt(ip.gamma));
    } else {
        const double gmax = gamma_upper_bound(eps, std::clamp(ip.delta, dlo, 1.0),
                                              sp1.mass, sp2.mass);
        if (ip.gamma > gmax)
            violate("gamma_range", ip.gamma - gmax,
                    "gamma must not exceed " + fmt(gmax) + " at delta=" + fmt(ip.delta) +
                        ", got " + fmt(ip.gamma));
    }
    return report;
}

MixtureMoments mixture_moments(const Moments& mom1, const Moments& mom2,
                               const InteractionParams& ip,
                               const SpeciesParams& sp1, const SpeciesParams& sp2) {
    if (mom1.is_vacuum() || mom2.is_vacuum())
        throw std::domain_error("mixture_moments: vacuum species density");
    if (!(mom1.T > 0.0) || !(mom2.T > 0.0))
        throw std::domain_error("mixture_moments: nonpositive temperature");

    const double m1 = sp1.mass, m2 = sp2.mass;
    const double eps = ip.epsilon, delta = ip.delta, alpha = ip.alpha, gamma = ip.gamma;
    const Vec3 du = mom1.u - mom2.u;
    const double du_sq = norm_sq(du);

    MixtureMoments mm;
    mm.m12.n = mom1.n;
    mm.m21.n = mom2.n;
    mm.m12.u = delta * mom1.u + (1.0 - delta) * mom2.u;
    mm.m21.u = mom2.u - (m1 / m2) * eps * (1.0 - delta) * (mom2.u - mom1.u);
    mm.m12.T = alpha * mom1.T + (1.0 - alpha) * mom2.T + gamma * du_sq;
    mm.m21.T = (eps * m1 * (1.0 - delta) *
                    ((m1 / m2) * eps * (delta - 1.0) + delta + 1.0) / 3.0 -
                eps * gamma) * du_sq +
               eps * (1.0 - alpha) * mom1.T + (1.0 - eps * (1.0 - alpha)) * mom2.T;
    return mm;
}

ExchangeTerms exchange_terms(const Moments& mom1, const Moments& mom2,
                             const InteractionParams& ip,
                             const SpeciesParams& sp1, const SpeciesParams& sp2) {
    const MixtureMoments mm = mixture_moments(mom1, mom2, ip, sp1, sp2);
    const double nn = ip.nu12 * mom1.n * mom2.n;

    ExchangeTerms ex;
    ex.momentum = sp1.mass * nn * (1.0 - ip.delta) * (mom2.u - mom1.u);
    ex.energy = nn * (0.5 * sp1.mass * (norm_sq(mm.m12.u) - norm_sq(mom1.u)) +
                      1.5 * (mm.m12.T - mom1.T));
    return ex;
}

InteractionParams hamel_preset(const SpeciesParams& sp1, const SpeciesParams& sp2) {
    sp1.check();
    sp2.check();
    const double m1 = sp1.mass, m2 = sp2.mass;
    const double msum = m1 + m2;

    InteractionParams ip;
    ip.nu12 = 1.0;
    ip.epsilon = 1.0;
    ip.delta = m1 / msum;
    ip.alpha = (m1 * m1 + m2 * m2) / (msum * msum);
    ip.gamma = (m1 * m2 / (msum * msum)) * (m2 / 3.0);
    return ip;
}

MatchedParams match_boltzmann_rates(double alpha12, double nu12, double epsilon,
                                    const SpeciesParams& sp1, const SpeciesParams& sp2,
                                    double n1, double n2) {
    sp1.check();
    sp2.check();
    if (!(alpha12 > 0.0) || !(nu12 > 0.0) || !(n1 > 0.0) || !(n2 > 0.0))
        throw std::invalid_argument("match_boltzmann_rates: inputs must be positive");

    const double m1 = sp1.mass, m2 = sp2.mass;

    MatchedParams out;
    out.params.nu12 = nu12;
    out.params.epsilon = epsilon;
    out.params.delta =
        1.0 - (alpha12 / nu12) * (m1 + m2) / 2.0 * (m1 * n1 + m2 * n2) /
                  (m1 * n1 * m2 * n2) / (n1 * (m1 / m2) + n2);
    out.params.alpha = 1.0 - alpha12 / (nu12 * n2 * n1);
    const double d = out.params.delta;
    out.params.gamma =
        (1.0 / 3.0) / (n1 + n2) *
        ((alpha12 / nu12) * (m2 * n2 - m1 * n1) / (n2 * n1) -
         m1 * n2 * (1.0 - d) * (1.0 - d) + m1 * n1 * (1.0 - d * d));
    out.report = validate_params(out.params, sp1, sp2);
    return out;
}

double collision_frequency_formula(double alpha_kj, double n_k, double n_j,
                                   double m_k, double m_j) {
    if (!(alpha_kj > 0.0) || !(n_k > 0.0) || !(n_j > 0.0) || !(m_k > 0.0) || !(m_j > 0.0))
        throw std::invalid_argument("collision_frequency_formula: inputs must be positive");
    const double msum = m_k + m_j;
    return 0.5 * (alpha_kj / (n_k * n_j)) * (msum * msum / (m_k * m_j));
}

RelaxationCoefficients relaxation_coefficients(const InteractionParams& ip,
                                               const SpeciesParams& sp1,
                                               const SpeciesParams& sp2,
                                               double n1, double n2) {
    const double m1 = sp1.mass, m2 = sp2.mass;
    const double d = ip.delta;

    RelaxationCoefficients rc;
    rc.c1 = (1.0 - ip.alpha) * ip.nu12 * (n2 + n1);
    rc.c2 = ip.nu12 * (n2 * ((m1 / 3.0) * (1.0 - d) * (1.0 - d) + ip.gamma) -
                       n1 * ((m1 / 3.0) * (1.0 - d * d) - ip.gamma));
    rc.c3 = 2.0 * ip.nu12 * (1.0 - d) * (n2 + (m1 / m2) * n1);
    rc.c_entropy = std::min(sp1.nu_intra * n1 + ip.nu12 * n2,
                            sp2.nu_intra * n2 + ip.nu21() * n1);
    return rc;
}

double closed_form_velocity_diff(double t, double du0_sq, const RelaxationCoefficients& rc) {
    return std::exp(-rc.c3 * t) * du0_sq;
}

TemperatureDiff closed_form_temperature_diff(double t, double dT0, double du0_sq,
                                             const RelaxationCoefficients& rc) {
    TemperatureDiff out;
    const double gap = rc.c1 - rc.c3;
    const double scale = std::max({std::fabs(rc.c1), std::fabs(rc.c3), 1.0});
    if (std::fabs(gap) < kSingularRel * scale) {
        out.used_limit_branch = true;
        out.value = std::exp(-rc.c1 * t) * (dT0 + rc.c2 * t * du0_sq);
    } else {
        out.value = std::exp(-rc.c1 * t) *
                    (dT0 + rc.c2 / gap * (std::expm1(gap * t)) * du0_sq);
    }
    return out;
}

double entropy_decay_bound(double t, double h0, const RelaxationCoefficients& rc) {
    return 4.0 * std::exp(-0.5 * rc.c_entropy * t) * h0;
}

std::pair<Moments, Moments> equilibrium_moments(const Moments& mom1, const Moments& mom2,
                                                const SpeciesParams& sp1,
                                                const SpeciesParams& sp2) {
    const double rho = sp1.mass * mom1.n + sp2.mass * mom2.n;
    const Vec3 p = sp1.mass * mom1.n * mom1.u + sp2.mass * mom2.n * mom2.u;
    const double energy = 0.5 * sp1.mass * mom1.n * norm_sq(mom1.u) + 1.5 * mom1.n * mom1.T +
                          0.5 * sp2.mass * mom2.n * norm_sq(mom2.u) + 1.5 * mom2.n * mom2.T;
    const Vec3 u_eq = (1.0 / rho) * p;
    const double T_eq = (energy - 0.5 * rho * norm_sq(u_eq)) / (1.5 * (mom1.n + mom2.n));

    Moments eq1{mom1.n, u_eq, T_eq};
    Moments eq2{mom2.n, u_eq, T_eq};
    return {eq1, eq2};
}

std::pair<Moments, Moments> moment_ode_rhs(const Moments& mom1, const Moments& mom2,
                                           const InteractionParams& ip,
                                           const SpeciesParams& sp1,
                                           const SpeciesParams& sp2) {
    const double m1 = sp1.mass, m2 = sp2.mass, d = ip.delta;
    const Vec3 rel = mom2.u - mom1.u;
    const double du_sq = norm_sq(rel);

    Moments d1{0.0, ip.nu12 * mom2.n * (1.0 - d) * rel,
               ip.nu12 * mom2.n * (((m1 / 3.0) * (1.0 - d) * (1.0 - d) + ip.gamma) * du_sq +
                                   (1.0 - ip.alpha) * (mom2.T - mom1.T))};
    Moments d2{0.0, -ip.nu12 * mom1.n * (m1 / m2) * (1.0 - d) * rel,
               ip.nu12 * mom1.n * (((m1 / 3.0) * (1.0 - d * d) - ip.gamma) * du_sq +
                                   (1.0 - ip.alpha) * (mom1.T - mom2.T))};
    return {d1, d2};
}

} // namespace mbgk
