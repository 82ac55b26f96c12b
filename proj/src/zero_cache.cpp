// Zero cache persistence.
//
// CSV (primary, inspectable):
//   index,gamma,err_bound
//   1,14.1347251417347,1e-09
//   ...
//   # t_max_certified=<value> version=1
// The trailing metadata line doubles as the truncation check. gamma carries
// 15 significant digits; records are canonicalized to that precision when
// they are created, so save/load is an identity on records.
//
// Binary sidecar (optional, fast): 8-byte magic, little-endian u32 version,
// then (u64 index, f64 gamma, f64 err_bound) records.

#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <fstream>

#include "zmom/errors.hpp"
#include "zmom/zeros.hpp"

namespace zmom {

namespace {

constexpr char kMagic[8] = {'Z', 'M', 'O', 'M', 'Z', 'E', 'R', '1'};
constexpr char kHeader[] = "index,gamma,err_bound";

std::string fmt15(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.15g", x);
    return buf;
}

void validate_records(const ZeroCache& c) {
    double prev = 0.0;
    for (std::size_t i = 0; i < c.records.size(); ++i) {
        const auto& r = c.records[i];
        if (r.index != i + 1) throw CorruptCache("record index not contiguous from 1");
        if (!(r.gamma > prev)) throw CorruptCache("record ordinates not strictly increasing");
        if (!(r.err_bound > 0.0) || r.err_bound > 1e-8)
            throw CorruptCache("record error bound out of range");
        prev = r.gamma;
    }
    if (!c.records.empty() && c.records.front().gamma <= 14.0)
        throw CorruptCache("first record below the first-zero sanity bound");
}

void save_binary(const ZeroCache& cache, const std::string& path) {
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    if (!f) throw Error("cannot open " + path + " for writing");
    f.write(kMagic, 8);
    std::uint32_t ver = static_cast<std::uint32_t>(cache.format_version);
    f.write(reinterpret_cast<const char*>(&ver), 4);
    for (const auto& r : cache.records) {
        f.write(reinterpret_cast<const char*>(&r.index), 8);
        f.write(reinterpret_cast<const char*>(&r.gamma), 8);
        f.write(reinterpret_cast<const char*>(&r.err_bound), 8);
    }
    if (!f) throw Error("write failure on " + path);
}

ZeroCache load_binary(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw Error("cannot open " + path);
    char magic[8];
    f.read(magic, 8);
    if (f.gcount() != 8 || std::memcmp(magic, kMagic, 8) != 0)
        throw CorruptCache("bad magic in binary cache");
    std::uint32_t ver = 0;
    f.read(reinterpret_cast<char*>(&ver), 4);
    if (f.gcount() != 4) throw CorruptCache("truncated binary cache header");
    if (ver != 1) throw VersionMismatch("binary cache version " + std::to_string(ver));
    ZeroCache cache;
    cache.format_version = static_cast<int>(ver);
    for (;;) {
        ZeroRecord r;
        f.read(reinterpret_cast<char*>(&r.index), 8);
        if (f.gcount() == 0) break;
        f.read(reinterpret_cast<char*>(&r.gamma), 8);
        f.read(reinterpret_cast<char*>(&r.err_bound), 8);
        if (f.gcount() != 8) throw CorruptCache("truncated binary cache record");
        cache.records.push_back(r);
    }
    cache.t_max_certified = cache.records.empty() ? 0.0 : cache.records.back().gamma;
    validate_records(cache);
    return cache;
}

} // namespace

void save_cache(const ZeroCache& cache, const std::string& path, bool binary_sidecar) {
    validate_records(cache);
    std::ofstream f(path, std::ios::trunc);
    if (!f) throw Error("cannot open " + path + " for writing");
    f << kHeader << "\n";
    for (const auto& r : cache.records)
        f << r.index << "," << fmt15(r.gamma) << "," << fmt15(r.err_bound) << "\n";
    f << "# t_max_certified=" << fmt15(cache.t_max_certified)
      << " version=" << cache.format_version << "\n";
    if (!f) throw Error("write failure on " + path);
    f.close();
    if (binary_sidecar) save_binary(cache, path + ".bin");
}

ZeroCache load_cache(const std::string& path) {
    {
        std::ifstream probe(path, std::ios::binary);
        if (!probe) throw Error("cannot open " + path);
        char magic[8] = {};
        probe.read(magic, 8);
        if (probe.gcount() == 8 && std::memcmp(magic, kMagic, 8) == 0) return load_binary(path);
    }
    std::ifstream f(path);
    if (!f) throw Error("cannot open " + path);
    std::string line;
    if (!std::getline(f, line) || line != kHeader)
        throw CorruptCache("missing or malformed cache header");
    ZeroCache cache;
    bool saw_meta = false;
    while (std::getline(f, line)) {
        if (line.empty()) continue;
        if (line[0] == '#') {
            double tmax = 0.0;
            int ver = -1;
            if (std::sscanf(line.c_str(), "# t_max_certified=%lf version=%d", &tmax, &ver) != 2)
                throw CorruptCache("malformed metadata line");
            if (ver != 1) throw VersionMismatch("cache version " + std::to_string(ver));
            cache.t_max_certified = tmax;
            cache.format_version = ver;
            saw_meta = true;
            continue;
        }
        if (saw_meta) throw CorruptCache("records after the metadata line");
        ZeroRecord r;
        char* end = nullptr;
        r.index = std::strtoull(line.c_str(), &end, 10);
        if (end == nullptr || *end != ',') throw CorruptCache("malformed record line");
        r.gamma = std::strtod(end + 1, &end);
        if (end == nullptr || *end != ',') throw CorruptCache("malformed record line");
        r.err_bound = std::strtod(end + 1, &end);
        if (end == nullptr || (*end != '\0' && *end != '\r')) throw CorruptCache("malformed record line");
        cache.records.push_back(r);
    }
    if (!saw_meta) throw CorruptCache("truncated cache: metadata line missing");
    validate_records(cache);
    return cache;
}

} // namespace zmom
