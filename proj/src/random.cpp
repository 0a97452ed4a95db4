#include "kicktops/random.hpp"

namespace kicktops {

namespace {

constexpr std::uint32_t kMul0 = 0xD2511F53;
constexpr std::uint32_t kMul1 = 0xCD9E8D57;
constexpr std::uint32_t kWeyl0 = 0x9E3779B9;
constexpr std::uint32_t kWeyl1 = 0xBB67AE85;

inline void mulhilo(std::uint32_t a, std::uint32_t b, std::uint32_t& hi, std::uint32_t& lo)
{
    const std::uint64_t p = static_cast<std::uint64_t>(a) * b;
    hi = static_cast<std::uint32_t>(p >> 32);
    lo = static_cast<std::uint32_t>(p);
}

inline double to_unit(std::uint32_t hi, std::uint32_t lo)
{
    // top 53 bits of the 64-bit word
    const std::uint64_t bits = (static_cast<std::uint64_t>(hi) << 32 | lo) >> 11;
    return static_cast<double>(bits) * 0x1.0p-53;
}

}  // namespace

Philox4x32::Block Philox4x32::generate(Block ctr, Key key)
{
    for (int round = 0; round < 10; ++round) {
        std::uint32_t hi0, lo0, hi1, lo1;
        mulhilo(kMul0, ctr[0], hi0, lo0);
        mulhilo(kMul1, ctr[2], hi1, lo1);
        ctr = {hi1 ^ ctr[1] ^ key[0], lo1, hi0 ^ ctr[3] ^ key[1], lo0};
        key[0] += kWeyl0;
        key[1] += kWeyl1;
    }
    return ctr;
}

std::array<double, 4> uniform4(std::uint64_t seed, std::uint64_t stream, std::uint32_t draw)
{
    const Philox4x32::Key key{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32)};
    const auto lo = static_cast<std::uint32_t>(stream);
    const auto hi = static_cast<std::uint32_t>(stream >> 32);
    const auto a = Philox4x32::generate({lo, hi, 2 * draw, 0}, key);
    const auto b = Philox4x32::generate({lo, hi, 2 * draw + 1, 0}, key);
    return {to_unit(a[0], a[1]), to_unit(a[2], a[3]), to_unit(b[0], b[1]), to_unit(b[2], b[3])};
}

}  // namespace kicktops
