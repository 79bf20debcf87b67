#include "mbgk/io.hpp"

#include <bit>
#include <charconv>
#include <cstdint>
#include <cstring>
#include <memory>
#include <stdexcept>

static_assert(std::endian::native == std::endian::little,
              "binary dumps are little-endian; byte swapping is not implemented");

namespace mbgk {

std::string format_sig17(double v) {
    char buf[40];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, 17);
    return std::string(buf, res.ptr);
}

CsvWriter::CsvWriter(const std::filesystem::path& path) : out_(path, std::ios::binary) {
    if (!out_) throw std::runtime_error("CsvWriter: cannot open " + path.string());
}

void CsvWriter::header(const std::vector<std::string>& columns) {
    columns_ = columns.size();
    for (std::size_t i = 0; i < columns.size(); ++i) {
        if (i) out_ << ',';
        out_ << columns[i];
    }
    out_ << '\n';
}

void CsvWriter::row(const std::vector<double>& values) {
    if (values.size() != columns_)
        throw std::logic_error("CsvWriter: row width does not match header");
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) out_ << ',';
        out_ << format_sig17(values[i]);
    }
    out_ << '\n';
}

void CsvWriter::close() { out_.close(); }

namespace {

constexpr char kMagic[4] = {'M', 'B', 'G', 'K'};

void put_u32(std::ostream& os, std::uint32_t v) {
    os.write(reinterpret_cast<const char*>(&v), sizeof v);
}
void put_f64(std::ostream& os, double v) {
    os.write(reinterpret_cast<const char*>(&v), sizeof v);
}
std::uint32_t get_u32(std::istream& is) {
    std::uint32_t v;
    is.read(reinterpret_cast<char*>(&v), sizeof v);
    return v;
}
double get_f64(std::istream& is) {
    double v;
    is.read(reinterpret_cast<char*>(&v), sizeof v);
    return v;
}

void write_header(std::ostream& os, std::uint32_t version, const VelocityGrid& grid,
                  std::uint32_t species_count) {
    os.write(kMagic, 4);
    put_u32(os, version);
    put_u32(os, static_cast<std::uint32_t>(grid.dim()));
    for (int a = 0; a < grid.dim(); ++a) {
        put_u32(os, static_cast<std::uint32_t>(grid.axis(a).nodes));
        put_f64(os, grid.axis(a).v_min);
        put_f64(os, grid.axis(a).v_max);
    }
    put_u32(os, species_count);
}

struct Header {
    std::uint32_t version = 0;
    GridPtr grid;
    std::uint32_t species_count = 0;
};

Header read_header(std::istream& is, const char* what) {
    char magic[4];
    is.read(magic, 4);
    if (!is || std::memcmp(magic, kMagic, 4) != 0)
        throw std::runtime_error(std::string(what) + ": bad magic");
    Header h;
    h.version = get_u32(is);
    const std::uint32_t dim = get_u32(is);
    if (dim != 1 && dim != 3) throw std::runtime_error(std::string(what) + ": bad dimension");
    std::vector<GridAxis> axes;
    for (std::uint32_t a = 0; a < dim; ++a) {
        GridAxis ax;
        ax.nodes = static_cast<int>(get_u32(is));
        ax.v_min = get_f64(is);
        ax.v_max = get_f64(is);
        axes.push_back(ax);
    }
    h.grid = std::make_shared<VelocityGrid>(std::move(axes));
    h.species_count = get_u32(is);
    if (!is) throw std::runtime_error(std::string(what) + ": truncated header");
    return h;
}

} // namespace

void write_distributions(const std::filesystem::path& path,
                         const std::vector<DiscreteDistribution>& species) {
    if (species.empty()) throw std::invalid_argument("write_distributions: empty list");
    std::ofstream os(path, std::ios::binary);
    if (!os) throw std::runtime_error("write_distributions: cannot open " + path.string());
    write_header(os, 1, *species.front().grid, static_cast<std::uint32_t>(species.size()));
    for (const auto& f : species) {
        if (!f.grid->same_layout(*species.front().grid))
            throw std::invalid_argument("write_distributions: grids differ");
        os.write(reinterpret_cast<const char*>(f.values.data()),
                 static_cast<std::streamsize>(f.values.size() * sizeof(double)));
    }
    if (!os) throw std::runtime_error("write_distributions: write failed");
}

std::vector<DiscreteDistribution> read_distributions(const std::filesystem::path& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw std::runtime_error("read_distributions: cannot open " + path.string());
    const Header h = read_header(is, "read_distributions");
    if (h.version != 1) throw std::runtime_error("read_distributions: unexpected version");
    std::vector<DiscreteDistribution> out;
    for (std::uint32_t s = 0; s < h.species_count; ++s) {
        DiscreteDistribution f(h.grid, static_cast<int>(s) + 1);
        is.read(reinterpret_cast<char*>(f.values.data()),
                static_cast<std::streamsize>(f.values.size() * sizeof(double)));
        out.push_back(std::move(f));
    }
    if (!is) throw std::runtime_error("read_distributions: truncated payload");
    return out;
}

void write_field(const std::filesystem::path& path, const SpatialField& field) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw std::runtime_error("write_field: cannot open " + path.string());
    write_header(os, 2, *field.grid, 2);
    put_u32(os, static_cast<std::uint32_t>(field.mesh.cells));
    put_f64(os, field.mesh.length);
    const std::size_t nv = field.nv();
    for (int c = 0; c < field.mesh.cells; ++c) {
        auto dump = [&](const std::vector<double>& a) {
            os.write(reinterpret_cast<const char*>(a.data() + static_cast<std::size_t>(c) * nv),
                     static_cast<std::streamsize>(nv * sizeof(double)));
        };
        dump(field.g1);
        dump(field.h1);
        dump(field.g2);
        dump(field.h2);
    }
    if (!os) throw std::runtime_error("write_field: write failed");
}

SpatialField read_field(const std::filesystem::path& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw std::runtime_error("read_field: cannot open " + path.string());
    const Header h = read_header(is, "read_field");
    if (h.version != 2) throw std::runtime_error("read_field: unexpected version");
    if (h.species_count != 2) throw std::runtime_error("read_field: expected two species");
    SpatialMesh mesh;
    mesh.cells = static_cast<int>(get_u32(is));
    mesh.length = get_f64(is);
    SpatialField field(mesh, h.grid);
    const std::size_t nv = field.nv();
    for (int c = 0; c < mesh.cells; ++c) {
        auto load = [&](std::vector<double>& a) {
            is.read(reinterpret_cast<char*>(a.data() + static_cast<std::size_t>(c) * nv),
                    static_cast<std::streamsize>(nv * sizeof(double)));
        };
        load(field.g1);
        load(field.h1);
        load(field.g2);
        load(field.h2);
    }
    if (!is) throw std::runtime_error("read_field: truncated payload");
    return field;
}

} // namespace mbgk
