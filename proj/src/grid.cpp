#include "mbgk/grid.hpp"

#include <cmath>
#include <stdexcept>

namespace mbgk {

VelocityGrid::VelocityGrid(std::vector<GridAxis> axes) : axes_(std::move(axes)) {
    if (axes_.size() != 1 && axes_.size() != 3)
        throw std::invalid_argument("VelocityGrid: dimension must be 1 or 3");
    size_ = 1;
    weight_ = 1.0;
    for (const auto& ax : axes_) {
        if (ax.nodes <= 0 || ax.nodes % 2 != 0)
            throw std::invalid_argument("VelocityGrid: node count must be even and positive");
        if (!(ax.v_min < ax.v_max))
            throw std::invalid_argument("VelocityGrid: v_min must be below v_max");
        size_ *= static_cast<std::size_t>(ax.nodes);
        weight_ *= ax.spacing();
        std::vector<double> c(static_cast<std::size_t>(ax.nodes));
        for (int i = 0; i < ax.nodes; ++i) c[static_cast<std::size_t>(i)] = ax.coord(i);
        coords_.push_back(std::move(c));
    }
}

VelocityGrid VelocityGrid::cubic(int nodes, double v_min, double v_max) {
    return VelocityGrid({GridAxis{nodes, v_min, v_max},
                         GridAxis{nodes, v_min, v_max},
                         GridAxis{nodes, v_min, v_max}});
}

VelocityGrid VelocityGrid::line(int nodes, double v_min, double v_max) {
    return VelocityGrid({GridAxis{nodes, v_min, v_max}});
}

double VelocityGrid::total_weight() const {
    double w = 1.0;
    for (const auto& ax : axes_) w *= (ax.v_max - ax.v_min);
    return w;
}

bool VelocityGrid::same_layout(const VelocityGrid& other) const {
    if (dim() != other.dim()) return false;
    for (int a = 0; a < dim(); ++a) {
        const auto& x = axis(a);
        const auto& y = other.axis(a);
        if (x.nodes != y.nodes || x.v_min != y.v_min || x.v_max != y.v_max) return false;
    }
    return true;
}

void DiscreteDistribution::check() const {
    if (!grid) throw std::logic_error("DiscreteDistribution: missing grid");
    if (values.size() != grid->size())
        throw std::logic_error("DiscreteDistribution: value count does not match grid");
    if (species != 1 && species != 2)
        throw std::logic_error("DiscreteDistribution: species index must be 1 or 2");
    for (double v : values)
        if (!(v >= 0.0) || !std::isfinite(v))
            throw std::logic_error("DiscreteDistribution: values must be finite and nonnegative");
}

} // namespace mbgk
