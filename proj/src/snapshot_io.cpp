#include "gpelab/snapshot_io.hpp"

#include <bit>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <sstream>

#include "gpelab/errors.hpp"

namespace gpelab {

namespace {

static_assert(std::endian::native == std::endian::little,
              "snapshot encoding assumes a little-endian host");

template <class T>
void put(std::string& out, T value) {
    char buf[sizeof(T)];
    std::memcpy(buf, &value, sizeof(T));
    out.append(buf, sizeof(T));
}

template <class T>
T take(const std::string& in, std::size_t& pos) {
    if (pos + sizeof(T) > in.size()) throw ContractViolation("snapshot truncated");
    T value;
    std::memcpy(&value, in.data() + pos, sizeof(T));
    pos += sizeof(T);
    return value;
}

}  // namespace

std::string encode_snapshot(const Field& f) {
    const Grid& g = f.grid();
    std::string out;
    out.reserve(32 + 16 * f.size());
    put<std::int64_t>(out, g.dim());
    put<std::int64_t>(out, g.n());
    put<double>(out, g.length());
    put<std::int64_t>(out, static_cast<std::int64_t>(f.representation()));
    for (const auto& v : f.values()) {
        put<double>(out, v.real());
        put<double>(out, v.imag());
    }
    return out;
}

Field decode_snapshot(const std::string& bytes) {
    std::size_t pos = 0;
    const auto dim = take<std::int64_t>(bytes, pos);
    const auto n = take<std::int64_t>(bytes, pos);
    const auto length = take<double>(bytes, pos);
    const auto rep = take<std::int64_t>(bytes, pos);
    if (rep != 0 && rep != 1) throw ContractViolation("snapshot has unknown representation tag");
    Grid g(static_cast<int>(dim), static_cast<int>(n), length);
    if (bytes.size() != pos + 16 * g.size()) throw ContractViolation("snapshot payload size mismatch");
    std::vector<Complex> values(g.size());
    for (auto& v : values) {
        const double re = take<double>(bytes, pos);
        const double im = take<double>(bytes, pos);
        v = Complex{re, im};
    }
    return Field(g, static_cast<Representation>(rep), std::move(values));
}

void atomic_write(const std::filesystem::path& path, const std::string& contents) {
    if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
    std::filesystem::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream os(tmp, std::ios::binary | std::ios::trunc);
        if (!os) throw std::runtime_error("cannot open " + tmp.string() + " for writing");
        os.write(contents.data(), static_cast<std::streamsize>(contents.size()));
        if (!os) throw std::runtime_error("write failed for " + tmp.string());
    }
    std::filesystem::rename(tmp, path);
}

void write_snapshot(const std::filesystem::path& path, const Field& f) {
    atomic_write(path, encode_snapshot(f));
}

Field read_snapshot(const std::filesystem::path& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw std::runtime_error("cannot open " + path.string());
    std::ostringstream ss;
    ss << is.rdbuf();
    return decode_snapshot(ss.str());
}

}  // namespace gpelab
