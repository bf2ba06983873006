#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "nextclosure/bitset.hpp"
#include "nextclosure/semilattice.hpp"

namespace nextclosure {

/// A closure operator on {0, ..., n-1}. Callers own the axioms; see
/// validate_closure_axioms for an opt-in check.
struct ClosureOperator {
  std::size_t n = 0;
  std::function<BitSet(const BitSet&)> apply;

  BitSet operator()(const BitSet& a) const { return apply(a); }
};

enum class ClosureAxiom { kIdempotent, kMonotone, kExtensive };

std::string to_string(ClosureAxiom axiom);

struct AxiomViolation {
  ClosureAxiom axiom;
  BitSet subset;
  /// Only meaningful for kMonotone: subset ⊆ superset but c(subset) ⊄ c(superset).
  BitSet superset;
};

struct AxiomReport {
  std::vector<AxiomViolation> violations;
  std::size_t checked_sets = 0;
  bool exhaustive = false;

  bool ok() const { return violations.empty(); }
};

struct AxiomCheckOptions {
  /// Base sets up to this size are checked on every subset.
  std::size_t exhaustive_limit = 12;
  /// Random subsets drawn above the exhaustive limit.
  std::size_t samples = 1000;
  std::uint64_t seed = 0x5eed;
  std::size_t max_violations = 32;
};

AxiomReport validate_closure_axioms(const ClosureOperator& c, const AxiomCheckOptions& options = {});

/// Classic lectic order on subsets of {0..n-1}: a < b iff min(a Δ b) ∈ b.
bool classic_lectic_less(const BitSet& a, const BitSet& b);

/// c({ j ∈ a : j < i } ∪ {i})
BitSet classic_plus(const BitSet& a, std::size_t i, const ClosureOperator& c);

/// Lectically next closed set after the closed set `a`.
std::optional<BitSet> classic_next(const BitSet& a, const ClosureOperator& c);

/// All closed sets in lectic order, starting from c(∅).
std::vector<BitSet> classic_enumerate(const ClosureOperator& c);

struct ClosureJoin {
  ClosureOperator closure;
  BitSet operator()(const BitSet& a, const BitSet& b) const { return closure(a | b); }
};

/// (c[2^M], X ∨ Y = c(X ∪ Y)); the order is inclusion.
using ClosureSemilattice = Semilattice<BitSet, ClosureJoin>;

/// Generators x_i = c({i}) for i < n and x_n = c(∅).
GeneratorTable<ClosureSemilattice> closure_generators(const ClosureOperator& c);

inline constexpr std::size_t kDefaultBruteForceLimit = 20;

/// { c(A) : A ⊆ M }, deduplicated and sorted in classic lectic order.
/// Throws std::length_error when n exceeds `max_n`.
std::vector<BitSet> brute_force_closed(const ClosureOperator& c, std::size_t max_n = kDefaultBruteForceLimit);

}  // namespace nextclosure
