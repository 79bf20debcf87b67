#ifndef MBGK_TRANSPORT_HPP
#define MBGK_TRANSPORT_HPP

#include <span>
#include <stdexcept>
#include <vector>

#include "mbgk/diagnostics.hpp"
#include "mbgk/homogeneous.hpp"
#include "mbgk/reduced.hpp"

namespace mbgk {

/** Raised when a step violates the CFL bound of the requested transport order. */
class CflError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/** Uniform periodic 1D spatial mesh. */
struct SpatialMesh {
    int cells = 0;
    double length = 0.0;
    bool periodic = true;  // the only supported boundary in v1

    double dx() const { return length / cells; }
};

/**
 * Chu-reduced kinetic field: one (g, h) pair per cell per species on a shared
 * 1D velocity lattice. Storage is cell-major: value of cell c at node j sits
 * at [c * grid->size() + j].
 */
struct SpatialField {
    SpatialMesh mesh;
    GridPtr grid;
    double time = 0.0;
    std::vector<double> g1, h1, g2, h2;

    SpatialField() = default;
    SpatialField(SpatialMesh m, GridPtr g);

    std::size_t nv() const { return grid->size(); }
    std::span<double> cell(std::vector<double>& a, int c) {
        return {a.data() + static_cast<std::size_t>(c) * nv(), nv()};
    }
    std::span<const double> cell(const std::vector<double>& a, int c) const {
        return {a.data() + static_cast<std::size_t>(c) * nv(), nv()};
    }
    /// Copy of one cell's reduced pair (species 1 or 2).
    ReducedPair cell_pair(int c, int species) const;
};

enum class TransportOrder { first, second };

/**
 * Free-streaming finite-volume update applied independently per velocity node
 * and species, to both g and h: first-order upwind, or minmod-limited
 * second-order reconstruction. CFL bound: dt max|v|/dx <= 1 (first) or 0.5
 * (second).
 */
SpatialField transport_step(const SpatialField& field, double dt, TransportOrder order);

/**
 * Implicit relaxation of every cell over dt (moments-first, exactly the
 * homogeneous implicit-Euler update on the reduced system). Unconditionally
 * stable. Cell updates are independent; `threads` > 1 splits them across
 * threads with bitwise-identical results.
 */
SpatialField relax_step(const SpatialField& field, double dt, const MixtureModel& model,
                        int threads = 1);

/**
 * First-order IMEX Euler: explicit transport, then implicit per-cell
 * relaxation. With TransportOrder::second a Heun-type pairing averages the
 * transport increments of the begin-of-step and predictor states (second order
 * in transport only).
 */
SpatialField imex_step(const SpatialField& field, double dt, const MixtureModel& model,
                       TransportOrder order = TransportOrder::first, int threads = 1);

struct TransportRunConfig {
    MixtureModel model;
    double dt = 1e-3;
    double t_end = 1.0;
    int output_stride = 10;
    TransportOrder order = TransportOrder::first;
    int threads = 1;
};

struct TransportSample {
    double time = 0.0;
    double mass1 = 0.0, mass2 = 0.0;
    double momentum_x = 0.0;
    double energy = 0.0;
    double entropy = 0.0;  // transverse-Gaussian-ansatz entropy
};

/** Per-cell moment profile row. */
struct ProfileRow {
    double x = 0.0;
    Moments m1, m2;
};

struct TransportResult {
    std::vector<TransportSample> samples;
    ConservationLedger ledger;
    double max_entropy_increase = 0.0;
    SpatialField final_field;
};

/** Advances the field with IMEX steps, sampling global conservation ledgers. */
TransportResult run_1d(SpatialField initial, const TransportRunConfig& cfg);

/// Global totals of a field (used by the ledger and tests).
TransportSample field_totals(const SpatialField& field, const MixtureModel& model);

/// Per-cell moment profile.
std::vector<ProfileRow> field_profile(const SpatialField& field, const MixtureModel& model);

/**
 * L1 deviation of the field from its cell-local mixture equilibria (common
 * velocity and temperature from each cell's conserved totals); the AP metric.
 */
double equilibrium_deviation(const SpatialField& field, const MixtureModel& model);

} // namespace mbgk

#endif
