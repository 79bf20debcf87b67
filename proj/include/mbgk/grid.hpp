#ifndef MBGK_GRID_HPP
#define MBGK_GRID_HPP

#include <cstddef>
#include <memory>
#include <vector>

namespace mbgk {

/** One axis of a uniform velocity lattice; nodes sit at cell midpoints. */
struct GridAxis {
    int nodes = 0;
    double v_min = 0.0;
    double v_max = 0.0;

    double spacing() const { return (v_max - v_min) / nodes; }
    double coord(int i) const { return v_min + (i + 0.5) * spacing(); }
};

/**
 * Uniform Cartesian velocity lattice (1D or 3D) with midpoint-rule quadrature:
 * every node carries the weight prod_axes(spacing).
 */
class VelocityGrid {
  public:
    explicit VelocityGrid(std::vector<GridAxis> axes);

    static VelocityGrid cubic(int nodes, double v_min, double v_max);
    static VelocityGrid line(int nodes, double v_min, double v_max);

    int dim() const { return static_cast<int>(axes_.size()); }
    const GridAxis& axis(int a) const { return axes_[static_cast<std::size_t>(a)]; }
    std::size_t size() const { return size_; }

    /// Quadrature weight shared by all nodes.
    double weight() const { return weight_; }
    /// Sum of all weights = product of axis extents.
    double total_weight() const;

    /// Node coordinates along one axis (length axis(a).nodes).
    const std::vector<double>& coords(int a) const { return coords_[static_cast<std::size_t>(a)]; }

    /// Row-major flat index for 3D grids: ((i * ny) + j) * nz + k.
    std::size_t index3(int i, int j, int k) const {
        return (static_cast<std::size_t>(i) * axes_[1].nodes + j) * axes_[2].nodes + k;
    }

    bool same_layout(const VelocityGrid& other) const;

  private:
    std::vector<GridAxis> axes_;
    std::vector<std::vector<double>> coords_;
    std::size_t size_ = 0;
    double weight_ = 0.0;
};

using GridPtr = std::shared_ptr<const VelocityGrid>;

/** Nonnegative distribution sampled on a velocity lattice. */
struct DiscreteDistribution {
    GridPtr grid;
    std::vector<double> values;
    int species = 1;  // 1 or 2

    DiscreteDistribution() = default;
    DiscreteDistribution(GridPtr g, int sp)
        : grid(std::move(g)), values(grid->size(), 0.0), species(sp) {}

    /// Throws std::logic_error if sizes mismatch, values are negative or not finite.
    void check() const;
};

} // namespace mbgk

#endif
