#include "gfpc/snapshot.hpp"

#include <bit>
#include <cstring>
#include <fstream>
#include <stdexcept>
#include <vector>

namespace gfpc {
namespace {

static_assert(std::endian::native == std::endian::little,
              "snapshot I/O assumes a little-endian host");

template <typename T>
void put(std::ofstream& os, T v) {
    os.write(reinterpret_cast<const char*>(&v), sizeof v);
}

template <typename T>
T get(std::ifstream& is, const char* what) {
    T v{};
    if (!is.read(reinterpret_cast<char*>(&v), sizeof v))
        throw std::runtime_error(std::string("snapshot: truncated ") + what);
    return v;
}

} // namespace

void write_snapshot(const std::filesystem::path& path, const Field& f) {
    std::ofstream os(path, std::ios::binary | std::ios::trunc);
    if (!os) throw std::runtime_error("snapshot: cannot open " + path.string());
    const Grid& g = f.grid();
    os.write("GFPC", 4);
    put<std::uint32_t>(os, kSnapshotVersion);
    put<std::uint32_t>(os, static_cast<std::uint32_t>(g.dim()));
    for (int a = 0; a < g.dim(); ++a)
        put<std::uint32_t>(os, static_cast<std::uint32_t>(g.modes(a)));
    for (int a = 0; a < g.dim(); ++a) {
        put<double>(os, g.lo(a));
        put<double>(os, g.hi(a));
    }
    os.write(reinterpret_cast<const char*>(f.values().data()),
             static_cast<std::streamsize>(f.size() * sizeof(double)));
    if (!os) throw std::runtime_error("snapshot: write failed for " + path.string());
}

Field read_snapshot(const std::filesystem::path& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw std::runtime_error("snapshot: cannot open " + path.string());
    char magic[4];
    if (!is.read(magic, 4) || std::memcmp(magic, "GFPC", 4) != 0)
        throw std::runtime_error("snapshot: bad magic in " + path.string());
    const auto version = get<std::uint32_t>(is, "version");
    if (version != kSnapshotVersion)
        throw std::runtime_error("snapshot: unsupported version " + std::to_string(version));
    const auto dim = get<std::uint32_t>(is, "dim");
    if (dim < 1 || dim > 3) throw std::runtime_error("snapshot: bad dim");

    std::array<int, 3> m{1, 1, 1};
    std::array<double, 3> lo{0, 0, 0}, hi{1, 1, 1};
    for (std::uint32_t a = 0; a < dim; ++a)
        m[a] = static_cast<int>(get<std::uint32_t>(is, "modes"));
    for (std::uint32_t a = 0; a < dim; ++a) {
        lo[a] = get<double>(is, "lo");
        hi[a] = get<double>(is, "hi");
    }
    auto grid = make_grid(static_cast<int>(dim), m, lo, hi);
    std::vector<double> v(grid->size());
    if (!is.read(reinterpret_cast<char*>(v.data()),
                 static_cast<std::streamsize>(v.size() * sizeof(double))))
        throw std::runtime_error("snapshot: truncated payload in " + path.string());
    return Field(grid, std::move(v));
}

} // namespace gfpc
