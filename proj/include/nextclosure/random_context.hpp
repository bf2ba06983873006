#pragma once

#include <cstddef>
#include <cstdint>

#include "nextclosure/context.hpp"
#include "nextclosure/splitmix64.hpp"

namespace nextclosure {

/// Objects g0.., attributes m0..; cell (g, m) is drawn row-major, one draw per
/// cell, and set iff draw / 2^64 < density. Throws std::invalid_argument unless
/// 0 <= density <= 1.
FormalContext random_context(std::size_t objects, std::size_t attributes, double density, std::uint64_t seed);

}  // namespace nextclosure
