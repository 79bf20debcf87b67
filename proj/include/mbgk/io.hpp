#ifndef MBGK_IO_HPP
#define MBGK_IO_HPP

#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "mbgk/grid.hpp"
#include "mbgk/transport.hpp"

namespace mbgk {

/// Locale-independent decimal formatting with 17 significant digits.
std::string format_sig17(double v);

/** Line-buffered CSV writer: mandatory header row, 17-significant-digit numbers. */
class CsvWriter {
  public:
    explicit CsvWriter(const std::filesystem::path& path);

    void header(const std::vector<std::string>& columns);
    void row(const std::vector<double>& values);
    void close();

  private:
    std::ofstream out_;
    std::size_t columns_ = 0;
};

/**
 * Binary distribution dump, version 1: header (magic "MBGK", version u32, dim
 * u32, per-axis node_count u32 / v_min f64 / v_max f64, species count u32)
 * followed by each species' node values as little-endian 64-bit floats in
 * row-major axis order. Round-trips bit-exactly.
 */
void write_distributions(const std::filesystem::path& path,
                         const std::vector<DiscreteDistribution>& species);
std::vector<DiscreteDistribution> read_distributions(const std::filesystem::path& path);

/**
 * Spatial field dump, version 2: the version-1 header plus a spatial section
 * (cell_count u32, length f64) after the species count; payload is cell-major,
 * species-inner, g values then h values per species.
 */
void write_field(const std::filesystem::path& path, const SpatialField& field);
SpatialField read_field(const std::filesystem::path& path);

} // namespace mbgk

#endif
