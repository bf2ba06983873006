#pragma once

#include <atomic>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nextclosure/bitset.hpp"
#include "nextclosure/closure.hpp"
#include "nextclosure/semilattice.hpp"

namespace nextclosure {

/// A formal context (G, M, J): named objects, named attributes and an
/// incidence matrix stored as one attribute BitSet per object.
///
/// Every read of the incidence matrix goes through `incident` or `row` and
/// bumps a relaxed atomic counter (one per cell touched), so tests can assert
/// how often an algorithm traverses the context.
class FormalContext {
 public:
  FormalContext() = default;
  /// Throws std::invalid_argument on dimension mismatch or duplicate names.
  FormalContext(std::vector<std::string> objects, std::vector<std::string> attributes, std::vector<BitSet> rows);

  FormalContext(const FormalContext& other);
  FormalContext& operator=(const FormalContext& other);
  FormalContext(FormalContext&& other) noexcept;
  FormalContext& operator=(FormalContext&& other) noexcept;

  std::size_t object_count() const { return objects_.size(); }
  std::size_t attribute_count() const { return attributes_.size(); }
  const std::vector<std::string>& objects() const { return objects_; }
  const std::vector<std::string>& attributes() const { return attributes_; }

  bool incident(std::size_t g, std::size_t m) const {
    reads_.fetch_add(1, std::memory_order_relaxed);
    return rows_[g].test(m);
  }

  /// Row {g}'; counts as attribute_count() cell reads.
  const BitSet& row(std::size_t g) const {
    reads_.fetch_add(attributes_.size(), std::memory_order_relaxed);
    return rows_[g];
  }

  std::uint64_t incidence_reads() const { return reads_.load(std::memory_order_relaxed); }
  void reset_incidence_reads() const { reads_.store(0, std::memory_order_relaxed); }

  BitSet all_attributes() const { return BitSet::full(attribute_count()); }
  BitSet all_objects() const { return BitSet::full(object_count()); }

  /// Structural equality: names and incidence; the read counter is ignored.
  friend bool operator==(const FormalContext& a, const FormalContext& b) {
    return a.objects_ == b.objects_ && a.attributes_ == b.attributes_ && a.rows_ == b.rows_;
  }

 private:
  std::vector<std::string> objects_;
  std::vector<std::string> attributes_;
  std::vector<BitSet> rows_;
  mutable std::atomic<std::uint64_t> reads_{0};
};

/// Objects and attributes swapped, incidence transposed.
FormalContext transpose(const FormalContext& k);

/// A' : attributes shared by every object in `objects`; ∅' = M.
BitSet derive_attributes(const FormalContext& k, const BitSet& objects);

/// B' : objects having every attribute in `attributes`; ∅' = G.
BitSet derive_objects(const FormalContext& k, const BitSet& attributes);

/// B''
BitSet intent_closure(const FormalContext& k, const BitSet& attributes);

/// The '' operator on attribute sets as a ClosureOperator. Holds a copy of `k`.
ClosureOperator intent_closure_operator(const FormalContext& k);

/// Drops objects whose row is M, duplicates a row of an earlier object, or
/// equals the intersection of the rows strictly containing it. Relative
/// object order is preserved; the intent set is unchanged.
FormalContext clarify_reduce_objects(const FormalContext& k);

/// The rows {g}' read once from the context, in object order.
struct ObjectIntentTable {
  std::size_t attribute_count = 0;
  std::vector<BitSet> rows;
};

ObjectIntentTable object_intent_rows(const FormalContext& k);

/// Work done by one next_intent call.
struct IntentCounters {
  std::uint64_t superset_tests = 0;
  std::uint64_t intersections = 0;

  IntentCounters& operator+=(const IntentCounters& o) {
    superset_tests += o.superset_tests;
    intersections += o.intersections;
    return *this;
  }
};

/// Next intent after the intent `current` for the meet-semilattice of intents
/// generated by the table rows (order ⊇, generators indexed by object).
///
/// With F = { h : {h}' ⊇ current }, candidate g ∉ F (scanned descending) gives
///   B = {g}' ∩ ⋂_{h < g, h ∈ F} {h}'
/// and is accepted iff {h}' ⊉ B for every h < g outside F. Never touches the
/// formal context itself.
std::optional<BitSet> next_intent(const ObjectIntentTable& table, const BitSet& current,
                                  IntentCounters* counters = nullptr);

std::pair<std::optional<BitSet>, IntentCounters> instrumented_next_intent(const ObjectIntentTable& table,
                                                                          const BitSet& current);

struct IntentOptions {
  /// Clarify and reduce objects first. Only disable for contexts already
  /// object-clarified and object-reduced.
  bool reduce = true;
};

/// Visits intents in the order produced by next_intent, starting with M,
/// until `visit` returns false. Returns the number visited.
std::size_t for_each_intent(const FormalContext& k, const std::function<bool(const BitSet&)>& visit,
                            const IntentOptions& options = {});

std::vector<BitSet> enumerate_intents(const FormalContext& k, const IntentOptions& options = {});

/// Extents (object subsets), via enumerate_intents on the transposed context.
std::vector<BitSet> enumerate_extents(const FormalContext& k, const IntentOptions& options = {});

/// Baseline: classic Next-Closure with c = '' on attribute sets.
std::vector<BitSet> intents_classic(const FormalContext& k);

/// The intent semilattice (Int(K), ∩) with generators ({g}' | g ∈ G) followed
/// by M. Its lectic order is the one enumerate_intents follows.
GeneratorTable<IntersectionSemilattice<BitSet>> intent_generators(const ObjectIntentTable& table);

/// { B'' : B ⊆ M }, sorted. Throws std::length_error above `max_attributes`.
std::vector<BitSet> brute_force_intents(const FormalContext& k, std::size_t max_attributes = kDefaultBruteForceLimit);

}  // namespace nextclosure
