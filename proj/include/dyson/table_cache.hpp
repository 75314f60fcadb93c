#ifndef DYSON_TABLE_CACHE_HPP
#define DYSON_TABLE_CACHE_HPP

// Binary rank-table cache.
//
//   offset 0  : "RNKT"
//   offset 4  : format version, uint32 little-endian
//   offset 8  : n_max, uint32 little-endian
//   offset 12 : rows n = 0..n_max, each entry m = -n..n in ascending m:
//               LEB128 byte count L, then L bytes of the magnitude, least
//               significant byte first (L = 0 encodes zero).

#include <array>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "bigint.hpp"
#include "rank_table.hpp"

namespace dyson
{

inline constexpr std::array<char, 4> kCacheMagic{'R', 'N', 'K', 'T'};
inline constexpr std::uint32_t kCacheVersion = 1;

class CacheFormatError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

namespace detail
{

inline void put_u32(std::ostream &os, std::uint32_t v)
{
    for (int i = 0; i < 4; ++i) {
        os.put(static_cast<char>((v >> (8 * i)) & 0xFFu));
    }
}

inline std::uint32_t get_u32(std::istream &is)
{
    std::uint32_t v = 0;
    for (int i = 0; i < 4; ++i) {
        const int c = is.get();
        if (c == std::char_traits<char>::eof()) {
            throw CacheFormatError("rank table cache: truncated header");
        }
        v |= static_cast<std::uint32_t>(static_cast<unsigned char>(c)) << (8 * i);
    }
    return v;
}

inline void put_varint(std::ostream &os, std::uint64_t v)
{
    do {
        auto byte = static_cast<unsigned char>(v & 0x7Fu);
        v >>= 7;
        if (v) {
            byte |= 0x80u;
        }
        os.put(static_cast<char>(byte));
    } while (v);
}

inline std::uint64_t get_varint(std::istream &is)
{
    std::uint64_t v = 0;
    for (int shift = 0; shift < 64; shift += 7) {
        const int c = is.get();
        if (c == std::char_traits<char>::eof()) {
            throw CacheFormatError("rank table cache: truncated entry length");
        }
        v |= static_cast<std::uint64_t>(c & 0x7F) << shift;
        if (!(c & 0x80)) {
            return v;
        }
    }
    throw CacheFormatError("rank table cache: entry length overflows");
}

} // namespace detail

inline void write_table_cache(std::ostream &os, const RankTable &table)
{
    os.write(kCacheMagic.data(), kCacheMagic.size());
    detail::put_u32(os, kCacheVersion);
    detail::put_u32(os, static_cast<std::uint32_t>(table.n_max()));
    std::vector<unsigned char> bytes;
    for (int n = 0; n <= table.n_max(); ++n) {
        for (const BigInt &c : table.row(n)) {
            if (c.sign() < 0) {
                throw std::invalid_argument("write_table_cache: negative count");
            }
            bytes.clear();
            if (!c.is_zero()) {
                boost::multiprecision::export_bits(c, std::back_inserter(bytes), 8, false);
            }
            detail::put_varint(os, bytes.size());
            os.write(reinterpret_cast<const char *>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
        }
    }
    if (!os) {
        throw std::runtime_error("write_table_cache: stream write failed");
    }
}

/// Reads a cache; throws CacheFormatError on bad magic, version, truncation, or a
/// table whose rows fail the basic invariants.
inline RankTable read_table_cache(std::istream &is)
{
    std::array<char, 4> magic{};
    is.read(magic.data(), magic.size());
    if (is.gcount() != 4 || magic != kCacheMagic) {
        throw CacheFormatError("rank table cache: bad magic");
    }
    const std::uint32_t version = detail::get_u32(is);
    if (version != kCacheVersion) {
        throw CacheFormatError("rank table cache: unsupported version " + std::to_string(version));
    }
    const std::uint32_t n_max = detail::get_u32(is);
    if (n_max < 1 || n_max > 100000) {
        throw CacheFormatError("rank table cache: implausible n_max " + std::to_string(n_max));
    }
    std::vector<std::vector<BigInt>> rows(n_max + 1);
    std::vector<unsigned char> bytes;
    for (std::uint32_t n = 0; n <= n_max; ++n) {
        auto &row = rows[n];
        row.resize(2 * n + 1);
        for (auto &c : row) {
            const std::uint64_t len = detail::get_varint(is);
            if (len > (1u << 20)) {
                throw CacheFormatError("rank table cache: entry too long");
            }
            bytes.resize(len);
            is.read(reinterpret_cast<char *>(bytes.data()), static_cast<std::streamsize>(len));
            if (static_cast<std::uint64_t>(is.gcount()) != len) {
                throw CacheFormatError("rank table cache: truncated entry");
            }
            c = 0;
            if (len) {
                boost::multiprecision::import_bits(c, bytes.begin(), bytes.end(), 8, false);
            }
        }
    }
    if (is.peek() != std::char_traits<char>::eof()) {
        throw CacheFormatError("rank table cache: trailing bytes");
    }
    RankTable table(static_cast<int>(n_max), std::move(rows));
    const auto p = partition_numbers(table.n_max());
    for (int n = 0; n <= table.n_max(); ++n) {
        if (table.row_sum(n) != p[static_cast<std::size_t>(n)]) {
            throw CacheFormatError("rank table cache: row " + std::to_string(n) + " does not sum to p(n)");
        }
    }
    return table;
}

inline void save_table_cache(const std::filesystem::path &path, const RankTable &table)
{
    std::ofstream os(path, std::ios::binary | std::ios::trunc);
    if (!os) {
        throw std::runtime_error("cannot open " + path.string() + " for writing");
    }
    write_table_cache(os, table);
}

inline RankTable load_table_cache(const std::filesystem::path &path)
{
    std::ifstream is(path, std::ios::binary);
    if (!is) {
        throw std::runtime_error("cannot open " + path.string());
    }
    return read_table_cache(is);
}

} // namespace dyson

#endif
