#include "nextclosure/bitset.hpp"

namespace nextclosure {

std::string BitSet::to_string() const {
  std::string s = "{";
  bool first = true;
  for (auto i : indices()) {
    if (!first) s += ',';
    s += std::to_string(i);
    first = false;
  }
  return s + "}";
}

}  // namespace nextclosure
