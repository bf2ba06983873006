#include "nextclosure/closure.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

#include "nextclosure/splitmix64.hpp"

namespace nextclosure {

std::string to_string(ClosureAxiom axiom) {
  switch (axiom) {
    case ClosureAxiom::kIdempotent: return "idempotent";
    case ClosureAxiom::kMonotone: return "monotone";
    case ClosureAxiom::kExtensive: return "extensive";
  }
  return "unknown";
}

namespace {

// Checks every axiom at `a`; monotonicity against a ∪ {i} for each i ∉ a,
// which implies it for all supersets by chaining.
void check_at(const ClosureOperator& c, const BitSet& a, AxiomReport& report, std::size_t cap) {
  auto add = [&](ClosureAxiom ax, const BitSet& sub, const BitSet& sup) {
    if (report.violations.size() < cap) report.violations.push_back({ax, sub, sup});
  };
  const BitSet ca = c(a);
  if (!a.is_subset_of(ca)) add(ClosureAxiom::kExtensive, a, BitSet(a.size()));
  if (c(ca) != ca) add(ClosureAxiom::kIdempotent, a, BitSet(a.size()));
  for (std::size_t i = 0; i < c.n; ++i) {
    if (a.test(i)) continue;
    BitSet b = a;
    b.set(i);
    if (!ca.is_subset_of(c(b))) add(ClosureAxiom::kMonotone, a, b);
  }
  ++report.checked_sets;
}

}  // namespace

AxiomReport validate_closure_axioms(const ClosureOperator& c, const AxiomCheckOptions& options) {
  AxiomReport report;
  if (c.n <= options.exhaustive_limit && c.n < 64) {
    report.exhaustive = true;
    const std::uint64_t total = std::uint64_t{1} << c.n;
    for (std::uint64_t mask = 0; mask < total; ++mask)
      check_at(c, BitSet::from_mask(c.n, mask), report, options.max_violations);
    return report;
  }
  SplitMix64 rng(options.seed);
  for (std::size_t s = 0; s < options.samples; ++s) {
    BitSet a(c.n);
    for (std::size_t i = 0; i < c.n; ++i)
      if (rng.next() & 1U) a.set(i);
    check_at(c, a, report, options.max_violations);
  }
  return report;
}

bool classic_lectic_less(const BitSet& a, const BitSet& b) {
  const auto i = (a ^ b).find_first();
  return i != BitSet::npos && b.test(i);
}

BitSet classic_plus(const BitSet& a, std::size_t i, const ClosureOperator& c) {
  BitSet seed(c.n);
  for (auto j = a.find_first(); j < i; j = a.find_next(j + 1)) seed.set(j);
  seed.set(i);
  return c(seed);
}

std::optional<BitSet> classic_next(const BitSet& a, const ClosureOperator& c) {
  for (std::size_t i = c.n; i-- > 0;) {
    if (a.test(i)) continue;
    BitSet b = classic_plus(a, i, c);
    // a <_i b: b agrees with a below i (b ⊇ a ∩ [0,i) holds by extensivity).
    const auto first_new = (b ^ a).find_first();
    if (first_new == i) return b;
  }
  return std::nullopt;
}

std::vector<BitSet> classic_enumerate(const ClosureOperator& c) {
  std::vector<BitSet> out;
  std::optional<BitSet> current = c(BitSet(c.n));
  while (current) {
    out.push_back(*current);
    current = classic_next(*current, c);
  }
  return out;
}

GeneratorTable<ClosureSemilattice> closure_generators(const ClosureOperator& c) {
  std::vector<BitSet> gens;
  gens.reserve(c.n + 1);
  for (std::size_t i = 0; i < c.n; ++i) gens.push_back(c(BitSet::from_indices(c.n, {i})));
  gens.push_back(c(BitSet(c.n)));
  return GeneratorTable<ClosureSemilattice>(ClosureSemilattice(ClosureJoin{c}), std::move(gens));
}

std::vector<BitSet> brute_force_closed(const ClosureOperator& c, std::size_t max_n) {
  if (c.n > max_n || c.n >= 64)
    throw std::length_error("base set of size " + std::to_string(c.n) + " exceeds brute-force limit " +
                            std::to_string(max_n));
  std::unordered_set<BitSet> seen;
  const std::uint64_t total = std::uint64_t{1} << c.n;
  for (std::uint64_t mask = 0; mask < total; ++mask) seen.insert(c(BitSet::from_mask(c.n, mask)));
  std::vector<BitSet> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end(), classic_lectic_less);
  return out;
}

}  // namespace nextclosure
