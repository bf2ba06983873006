#include "nextclosure/random_context.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace nextclosure {

FormalContext random_context(std::size_t objects, std::size_t attributes, double density, std::uint64_t seed) {
  if (!(density >= 0.0 && density <= 1.0))
    throw std::invalid_argument("density must lie in [0, 1], got " + std::to_string(density));

  // draw / 2^64 < density  <=>  draw < ceil(density * 2^64), exactly; the
  // product is below 2^64 whenever density < 1.
  const bool always = density >= 1.0;
  const auto threshold = always ? 0 : static_cast<std::uint64_t>(std::ceil(std::ldexp(density, 64)));

  SplitMix64 rng(seed);
  std::vector<std::string> object_names, attribute_names;
  for (std::size_t g = 0; g < objects; ++g) object_names.push_back("g" + std::to_string(g));
  for (std::size_t m = 0; m < attributes; ++m) attribute_names.push_back("m" + std::to_string(m));
  std::vector<BitSet> rows;
  rows.reserve(objects);
  for (std::size_t g = 0; g < objects; ++g) {
    BitSet row(attributes);
    for (std::size_t m = 0; m < attributes; ++m) {
      const std::uint64_t draw = rng.next();
      if (always || draw < threshold) row.set(m);
    }
    rows.push_back(std::move(row));
  }
  return FormalContext(std::move(object_names), std::move(attribute_names), std::move(rows));
}

}  // namespace nextclosure
