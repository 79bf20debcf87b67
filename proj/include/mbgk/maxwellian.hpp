#ifndef MBGK_MAXWELLIAN_HPP
#define MBGK_MAXWELLIAN_HPP

#include <stdexcept>

#include "mbgk/grid.hpp"
#include "mbgk/model.hpp"

namespace mbgk {

/** Raised when the quadrature density of a distribution is below the vacuum floor. */
class VacuumError : public std::domain_error {
  public:
    using std::domain_error::domain_error;
};

/** Raised when the moment-matching Newton iteration does not converge. */
class ProjectionFailure : public std::runtime_error {
  public:
    ProjectionFailure(const std::string& what, double residual)
        : std::runtime_error(what), residual_(residual) {}
    double residual() const { return residual_; }

  private:
    double residual_;
};

/**
 * Quadrature moments of a 3D distribution:
 *   n = sum w f,  u = (1/n) sum w v f,  T = (m/(3n)) sum w |v-u|^2 f.
 * Throws VacuumError when n is at the vacuum floor.
 */
Moments discrete_moments(const DiscreteDistribution& f, double mass);

/**
 * Conservative discrete Maxwellian: the exponential-form distribution
 * exp(a + b.v + c|v|^2), c < 0, whose DISCRETE moments match the target to
 * 1e-12 relative (Newton iteration on the exponential-family parameters).
 *
 * Preconditions: target.n > 0, target.T > 0 and |u_a| + 4 sqrt(T/m) inside the
 * grid bounds on every axis (std::invalid_argument otherwise). Newton
 * non-convergence raises ProjectionFailure carrying the final residual.
 */
DiscreteDistribution project_maxwellian(const Moments& target, GridPtr grid, double mass,
                                        int species = 1);

namespace detail {

/// Exponential-family parameters produced by a converged projection.
struct ExpParams {
    double a = 0.0;
    double b[3] = {0.0, 0.0, 0.0};
    double c = 0.0;
};

/**
 * Shared Newton core for 1D and 3D lattices. `second_moment` is the target of
 * sum w |v|^2 f. Fills `out` (sized to the grid) and returns the parameters.
 */
ExpParams project_exponential(const VelocityGrid& grid, double n, const Vec3& u,
                              double second_moment, std::vector<double>& out);

} // namespace detail

} // namespace mbgk

#endif
