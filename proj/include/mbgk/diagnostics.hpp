#ifndef MBGK_DIAGNOSTICS_HPP
#define MBGK_DIAGNOSTICS_HPP

#include <string>
#include <vector>

#include "mbgk/grid.hpp"
#include "mbgk/reduced.hpp"
#include "mbgk/vec3.hpp"

namespace mbgk {

/// Quadrature of f ln f with the convention 0 ln 0 = 0 (values <= 1e-300 count as 0).
double entropy(const DiscreteDistribution& f);

/// Same convention, for a reduced marginal g alone.
double marginal_entropy(const ReducedPair& rp);

/**
 * Entropy of the transverse-Gaussian reconstruction of a reduced pair:
 * sum w g [ln(g^2/(pi h)) - 1]. This is the minimal full entropy over
 * distributions with marginal g and transverse energy h; exact whenever the
 * transverse shape is Gaussian (initial data and all relaxation attractors).
 */
double reduced_entropy(const ReducedPair& rp);

/**
 * Quadrature of f ln(f/g). Throws std::domain_error where f > 0 but g is not.
 * Nonnegative whenever f and g carry the same discrete density.
 */
double relative_entropy(const DiscreteDistribution& f, const DiscreteDistribution& g);

/// Quadrature of |f - g|; grids must share the same layout.
double l1_distance(const DiscreteDistribution& f, const DiscreteDistribution& g);

/**
 * Tracks conserved totals over a run against their t = 0 reference values and
 * reports the worst relative drift.
 */
class ConservationLedger {
  public:
    struct Sample {
        double time = 0.0;
        double mass1 = 0.0;
        double mass2 = 0.0;
        Vec3 momentum{};
        double energy = 0.0;
        double entropy = 0.0;
    };

    struct DriftSummary {
        double mass1 = 0.0;
        double mass2 = 0.0;
        double momentum = 0.0;  // absolute, relative to the momentum/energy scale
        double energy = 0.0;
        double max_drift = 0.0;
    };

    /// The first appended sample fixes the reference values.
    void append(const Sample& s);

    bool empty() const { return samples_.empty(); }
    const std::vector<Sample>& samples() const { return samples_; }
    const Sample& reference() const { return samples_.front(); }

    DriftSummary summary() const;
    bool within(double tol_rel) const { return summary().max_drift <= tol_rel; }

    /// Plain-text PASS/FAIL report against the given tolerance.
    std::string report(double tol_rel) const;

  private:
    std::vector<Sample> samples_;
};

} // namespace mbgk

#endif
