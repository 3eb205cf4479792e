#include "ellab/elsf.hpp"

#include <bit>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <stdexcept>

static_assert(std::endian::native == std::endian::little,
              "ELSF I/O assumes a little-endian host");

namespace ellab {

namespace {

constexpr char kMagic[4] = {'E', 'L', 'S', 'F'};
constexpr std::uint32_t kVersion = 1;

void put_u32(std::ostream& os, std::uint32_t v) {
    os.write(reinterpret_cast<const char*>(&v), sizeof(v));
}

void put_f64(std::ostream& os, double v) {
    os.write(reinterpret_cast<const char*>(&v), sizeof(v));
}

std::uint32_t get_u32(std::istream& is) {
    std::uint32_t v = 0;
    is.read(reinterpret_cast<char*>(&v), sizeof(v));
    return v;
}

double get_f64(std::istream& is) {
    double v = 0.0;
    is.read(reinterpret_cast<char*>(&v), sizeof(v));
    return v;
}

} // namespace

void write_elsf(const std::string& path, const SpectralField& f, double time) {
    std::ofstream os(path, std::ios::binary | std::ios::trunc);
    if (!os) throw std::runtime_error("write_elsf: cannot open " + path);
    os.write(kMagic, 4);
    put_u32(os, kVersion);
    put_u32(os, static_cast<std::uint32_t>(f.grid().dim()));
    put_u32(os, static_cast<std::uint32_t>(f.grid().res()));
    put_f64(os, f.grid().box_len());
    put_f64(os, time);
    put_u32(os, static_cast<std::uint32_t>(f.ncomp()));
    os.write(reinterpret_cast<const char*>(f.coeffs().data()),
             static_cast<std::streamsize>(f.coeffs().size() * sizeof(Complex)));
    if (!os) throw std::runtime_error("write_elsf: write failed for " + path);
}

ElsfSnapshot read_elsf(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw std::runtime_error("read_elsf: cannot open " + path);
    char magic[4];
    is.read(magic, 4);
    if (!is || std::memcmp(magic, kMagic, 4) != 0)
        throw std::runtime_error("read_elsf: bad magic in " + path);
    if (get_u32(is) != kVersion)
        throw std::runtime_error("read_elsf: unsupported version in " + path);
    const int dim = static_cast<int>(get_u32(is));
    const int res = static_cast<int>(get_u32(is));
    const double box_len = get_f64(is);
    const double time = get_f64(is);
    const int ncomp = static_cast<int>(get_u32(is));
    if (!is) throw std::runtime_error("read_elsf: truncated header in " + path);
    Grid grid(dim, res, box_len);
    SpectralField f(grid, ncomp);
    is.read(reinterpret_cast<char*>(f.coeffs().data()),
            static_cast<std::streamsize>(f.coeffs().size() * sizeof(Complex)));
    if (!is) throw std::runtime_error("read_elsf: truncated payload in " + path);
    return ElsfSnapshot{std::move(f), time};
}

} // namespace ellab
