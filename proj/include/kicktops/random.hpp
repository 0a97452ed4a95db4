#pragma once

#include <array>
#include <cstdint>

namespace kicktops {

/// Philox4x32-10 counter-based generator (Salmon et al., SC'11).
///
/// A stream is addressed by (key, counter); there is no hidden state, so the
/// draws for ensemble member i depend only on (seed, i) and never on which
/// thread evaluates them.
class Philox4x32 {
public:
    using Block = std::array<std::uint32_t, 4>;
    using Key = std::array<std::uint32_t, 2>;

    static Block generate(Block counter, Key key);
};

/// Four independent uniforms in [0, 1) with 53-bit resolution for
/// (seed, stream, draw). Each call consumes two Philox blocks.
std::array<double, 4> uniform4(std::uint64_t seed, std::uint64_t stream, std::uint32_t draw);

}  // namespace kicktops
