#ifndef MBGK_MODEL_HPP
#define MBGK_MODEL_HPP

#include <string>
#include <utility>
#include <vector>

#include "mbgk/vec3.hpp"

namespace mbgk {

/** Densities at or below this floor are treated as vacuum. */
inline constexpr double kVacuumDensity = 1e-300;

/** Per-species data: particle mass and intra-species collision frequency per density. */
struct SpeciesParams {
    double mass = 1.0;      // particle mass m_k, > 0
    double nu_intra = 0.0;  // nu_kk, collision frequency per density, >= 0

    /// Throws std::invalid_argument if mass <= 0 or nu_intra < 0.
    void check() const;
};

/**
 * Free parameters of the inter-species relaxation.
 *
 * Admissibility (checked by validate_params, not by construction):
 *   0 < epsilon <= 1,  0 <= alpha <= 1,
 *   (eps*m1/m2 - 1)/(1 + eps*m1/m2) <= delta <= 1,
 *   0 <= gamma <= (m1/3)(1-delta)[(1 + eps*m1/m2)*delta + 1 - eps*m1/m2].
 */
struct InteractionParams {
    double nu12 = 1.0;     // inter-species collision frequency per density, > 0
    double epsilon = 1.0;  // nu12 / nu21
    double delta = 0.5;    // velocity mixing weight
    double alpha = 0.5;    // temperature mixing weight
    double gamma = 0.0;    // frictional-heating coefficient

    double nu21() const { return nu12 / epsilon; }
};

/** Density, mean velocity and temperature of one species (k_B absorbed into T). */
struct Moments {
    double n = 0.0;
    Vec3 u{};
    double T = 0.0;

    /// True when the density is below the vacuum floor; u and T are then undefined.
    bool is_vacuum() const { return n <= kVacuumDensity; }
};

/** Parameters of the two mixture Maxwellians: m12 attracts species 1, m21 species 2. */
struct MixtureMoments {
    Moments m12;
    Moments m21;
};

/** One violated admissibility constraint, with how far outside the bound the value lies. */
struct Violation {
    std::string constraint;  // short id: epsilon_range, alpha_range, delta_range, gamma_range, nu12_positive
    double margin = 0.0;     // distance past the violated bound
    std::string message;
};

struct ValidationReport {
    std::vector<Violation> violations;

    bool admissible() const { return violations.empty(); }
    bool has(const std::string& constraint) const;
    std::string to_string() const;
};

/**
 * Constants of the closed-form relaxation laws:
 *   |u1(t)-u2(t)|^2        = exp(-c3 t) |u1(0)-u2(0)|^2
 *   d/dt (T1-T2)           = -c1 (T1-T2) + c2 |u1-u2|^2
 *   ||f_k - M_k||_L1       <= 4 exp(-c_entropy t / 2) [H(f1^0|M1^0)+H(f2^0|M2^0)]^(1/2)
 */
struct RelaxationCoefficients {
    double c1 = 0.0;
    double c2 = 0.0;
    double c3 = 0.0;
    double c_entropy = 0.0;

    /// Relaxation rate of u1-u2 itself (half the |du|^2 rate).
    double rate_u() const { return 0.5 * c3; }
};

/** Momentum and energy gained by species 1 from inter-species relaxation; species 2 gets the negation. */
struct ExchangeTerms {
    Vec3 momentum{};
    double energy = 0.0;
};

/** Result of matching the Boltzmann relaxation rates; admissibility is not guaranteed. */
struct MatchedParams {
    InteractionParams params;
    ValidationReport report;
};

/** Value of the temperature-difference closed form; flags use of the c1 == c3 limit branch. */
struct TemperatureDiff {
    double value = 0.0;
    bool used_limit_branch = false;
};

/// Lower admissible bound on delta: (eps*m1/m2 - 1)/(1 + eps*m1/m2).
double delta_lower_bound(double epsilon, double m1, double m2);

/// Upper admissible bound on gamma at the given delta (0 when delta = 1).
double gamma_upper_bound(double epsilon, double delta, double m1, double m2);

/**
 * Checks the interaction parameters against the admissibility constraints.
 * Violations are returned as data; an empty report means the set is admissible.
 * Masses must be positive.
 */
ValidationReport validate_params(const InteractionParams& ip,
                                 const SpeciesParams& sp1, const SpeciesParams& sp2);

/**
 * Mixture-Maxwellian parameters (n12, u12, T12) and (n21, u21, T21) from the
 * species moments. Requires an admissible parameter set, positive densities and
 * temperatures; throws std::domain_error on degenerate input. Both output
 * temperatures are strictly positive for admissible parameters.
 */
MixtureMoments mixture_moments(const Moments& mom1, const Moments& mom2,
                               const InteractionParams& ip,
                               const SpeciesParams& sp1, const SpeciesParams& sp2);

/**
 * Macroscopic momentum and energy exchange received by species 1:
 *   momentum = m1 nu12 n1 n2 (1-delta)(u2-u1)
 *   energy   = nu12 n1 n2 [ (m1/2)(|u12|^2-|u1|^2) + (3/2)(T12-T1) ]
 */
ExchangeTerms exchange_terms(const Moments& mom1, const Moments& mom2,
                             const InteractionParams& ip,
                             const SpeciesParams& sp1, const SpeciesParams& sp2);

/** Hamel parameter choice: eps=1, delta=m1/(m1+m2), alpha=(m1^2+m2^2)/(m1+m2)^2,
 *  gamma=(m1 m2/(m1+m2)^2)(m2/3). Always admissible. nu12 is set to 1. */
InteractionParams hamel_preset(const SpeciesParams& sp1, const SpeciesParams& sp2);

/**
 * Chooses (delta, alpha, gamma) so the mean-velocity and temperature relaxation
 * rates match Boltzmann rates with energy-transfer coefficient alpha12, at the
 * given nu12 and epsilon. The result is returned together with its validation
 * report; callers must not assume admissibility.
 */
MatchedParams match_boltzmann_rates(double alpha12, double nu12, double epsilon,
                                    const SpeciesParams& sp1, const SpeciesParams& sp2,
                                    double n1, double n2);

/// nu_kj = (1/2)(alpha_kj/(n_k n_j))((m_k+m_j)^2/(m_k m_j)).
double collision_frequency_formula(double alpha_kj, double n_k, double n_j,
                                   double m_k, double m_j);

/**
 * Relaxation-law constants at the given densities:
 *   c1 = (1-alpha) nu12 (n2+n1)
 *   c2 = nu12 [ n2((m1/3)(1-delta)^2 + gamma) - n1((m1/3)(1-delta^2) - gamma) ]
 *   c3 = 2 nu12 (1-delta)(n2 + (m1/m2) n1)
 *   c_entropy = min(nu11 n1 + nu12 n2, nu22 n2 + nu21 n1)
 */
RelaxationCoefficients relaxation_coefficients(const InteractionParams& ip,
                                               const SpeciesParams& sp1,
                                               const SpeciesParams& sp2,
                                               double n1, double n2);

/// exp(-c3 t) * du0_sq.
double closed_form_velocity_diff(double t, double du0_sq, const RelaxationCoefficients& rc);

/**
 * exp(-c1 t)[dT0 + c2/(c1-c3)(exp((c1-c3)t)-1) du0_sq]; near c1 == c3 the
 * removable singularity is evaluated through its analytic limit
 * exp(-c1 t)[dT0 + c2 t du0_sq] and flagged in the result.
 */
TemperatureDiff closed_form_temperature_diff(double t, double dT0, double du0_sq,
                                             const RelaxationCoefficients& rc);

/// 4 exp(-c_entropy t / 2) * h0, with h0 = [H(f1^0|M1^0)+H(f2^0|M2^0)]^(1/2).
double entropy_decay_bound(double t, double h0, const RelaxationCoefficients& rc);

/**
 * Moments of the joint equilibrium sharing the conserved totals of the two
 * input states: common velocity u = P/(m1 n1 + m2 n2) and common temperature
 * from total energy. Densities are carried through unchanged.
 */
std::pair<Moments, Moments> equilibrium_moments(const Moments& mom1, const Moments& mom2,
                                                const SpeciesParams& sp1,
                                                const SpeciesParams& sp2);

/**
 * Right-hand side of the space-homogeneous moment ODE system at fixed densities:
 *   du1/dt = nu12 n2 (1-delta)(u2-u1)
 *   du2/dt = -nu12 n1 (m1/m2)(1-delta)(u2-u1)
 *   dT1/dt = nu12 n2 [ ((m1/3)(1-delta)^2 + gamma)|du|^2 + (1-alpha)(T2-T1) ]
 *   dT2/dt = nu12 n1 [ ((m1/3)(1-delta^2) - gamma)|du|^2 + (1-alpha)(T1-T2) ]
 */
std::pair<Moments, Moments> moment_ode_rhs(const Moments& mom1, const Moments& mom2,
                                           const InteractionParams& ip,
                                           const SpeciesParams& sp1,
                                           const SpeciesParams& sp2);

} // namespace mbgk

#endif
