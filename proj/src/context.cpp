#include "nextclosure/context.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

namespace nextclosure {

namespace {

void require_unique(const std::vector<std::string>& names, const char* what) {
  std::unordered_set<std::string> seen;
  for (const auto& n : names)
    if (!seen.insert(n).second) throw std::invalid_argument(std::string("duplicate ") + what + " name '" + n + "'");
}

}  // namespace

FormalContext::FormalContext(std::vector<std::string> objects, std::vector<std::string> attributes,
                             std::vector<BitSet> rows)
    : objects_(std::move(objects)), attributes_(std::move(attributes)), rows_(std::move(rows)) {
  if (rows_.size() != objects_.size())
    throw std::invalid_argument("incidence has " + std::to_string(rows_.size()) + " rows for " +
                                std::to_string(objects_.size()) + " objects");
  for (const auto& r : rows_)
    if (r.size() != attributes_.size())
      throw std::invalid_argument("incidence row width " + std::to_string(r.size()) + " does not match " +
                                  std::to_string(attributes_.size()) + " attributes");
  require_unique(objects_, "object");
  require_unique(attributes_, "attribute");
}

FormalContext::FormalContext(const FormalContext& other)
    : objects_(other.objects_), attributes_(other.attributes_), rows_(other.rows_) {}

FormalContext& FormalContext::operator=(const FormalContext& other) {
  if (this != &other) {
    objects_ = other.objects_;
    attributes_ = other.attributes_;
    rows_ = other.rows_;
    reads_.store(0, std::memory_order_relaxed);
  }
  return *this;
}

FormalContext::FormalContext(FormalContext&& other) noexcept
    : objects_(std::move(other.objects_)), attributes_(std::move(other.attributes_)), rows_(std::move(other.rows_)) {}

FormalContext& FormalContext::operator=(FormalContext&& other) noexcept {
  objects_ = std::move(other.objects_);
  attributes_ = std::move(other.attributes_);
  rows_ = std::move(other.rows_);
  reads_.store(0, std::memory_order_relaxed);
  return *this;
}

FormalContext transpose(const FormalContext& k) {
  std::vector<BitSet> rows(k.attribute_count(), BitSet(k.object_count()));
  for (std::size_t g = 0; g < k.object_count(); ++g) {
    const BitSet& r = k.row(g);
    for (auto m = r.find_first(); m != BitSet::npos; m = r.find_next(m + 1)) rows[m].set(g);
  }
  return FormalContext(k.attributes(), k.objects(), std::move(rows));
}

BitSet derive_attributes(const FormalContext& k, const BitSet& objects) {
  BitSet out = k.all_attributes();
  for (auto g = objects.find_first(); g != BitSet::npos; g = objects.find_next(g + 1)) out &= k.row(g);
  return out;
}

BitSet derive_objects(const FormalContext& k, const BitSet& attributes) {
  BitSet out(k.object_count());
  for (std::size_t g = 0; g < k.object_count(); ++g)
    if (k.row(g).is_superset_of(attributes)) out.set(g);
  return out;
}

BitSet intent_closure(const FormalContext& k, const BitSet& attributes) {
  return derive_attributes(k, derive_objects(k, attributes));
}

ClosureOperator intent_closure_operator(const FormalContext& k) {
  return ClosureOperator{k.attribute_count(), [k](const BitSet& b) { return intent_closure(k, b); }};
}

FormalContext clarify_reduce_objects(const FormalContext& k) {
  const std::size_t n = k.object_count();
  const BitSet all = k.all_attributes();
  std::vector<BitSet> rows;
  rows.reserve(n);
  for (std::size_t g = 0; g < n; ++g) rows.push_back(k.row(g));

  std::vector<bool> keep(n, true);
  // Clarify: first occurrence of each row survives; rows equal to M go.
  for (std::size_t g = 0; g < n; ++g) {
    if (rows[g] == all) keep[g] = false;
    for (std::size_t h = 0; h < g && keep[g]; ++h)
      if (keep[h] && rows[h] == rows[g]) keep[g] = false;
  }
  // Reduce: decided against the clarified rows, all at once.
  std::vector<bool> reducible(n, false);
  for (std::size_t g = 0; g < n; ++g) {
    if (!keep[g]) continue;
    BitSet meet = all;
    for (std::size_t h = 0; h < n; ++h)
      if (h != g && keep[h] && rows[h].is_superset_of(rows[g])) meet &= rows[h];
    reducible[g] = (meet == rows[g]);
  }

  std::vector<std::string> objects;
  std::vector<BitSet> kept_rows;
  for (std::size_t g = 0; g < n; ++g) {
    if (!keep[g] || reducible[g]) continue;
    objects.push_back(k.objects()[g]);
    kept_rows.push_back(rows[g]);
  }
  return FormalContext(std::move(objects), k.attributes(), std::move(kept_rows));
}

ObjectIntentTable object_intent_rows(const FormalContext& k) {
  ObjectIntentTable table{k.attribute_count(), {}};
  table.rows.reserve(k.object_count());
  for (std::size_t g = 0; g < k.object_count(); ++g) {
    BitSet r(k.attribute_count());
    for (std::size_t m = 0; m < k.attribute_count(); ++m)
      if (k.incident(g, m)) r.set(m);
    table.rows.push_back(std::move(r));
  }
  return table;
}

std::optional<BitSet> next_intent(const ObjectIntentTable& table, const BitSet& current, IntentCounters* counters) {
  IntentCounters local;
  const auto& rows = table.rows;
  const std::size_t n = rows.size();

  // Footprint of `current`: objects whose row contains it.
  std::vector<char> above(n);
  for (std::size_t h = 0; h < n; ++h) {
    ++local.superset_tests;
    above[h] = rows[h].is_superset_of(current);
  }

  std::optional<BitSet> result;
  for (std::size_t g = n; g-- > 0 && !result;) {
    if (above[g]) continue;
    BitSet candidate = rows[g];
    for (std::size_t h = 0; h < g; ++h) {
      if (!above[h]) continue;
      candidate &= rows[h];
      ++local.intersections;
    }
    bool accepted = true;
    for (std::size_t h = 0; h < g && accepted; ++h) {
      if (above[h]) continue;
      ++local.superset_tests;
      if (rows[h].is_superset_of(candidate)) accepted = false;
    }
    if (accepted) result = std::move(candidate);
  }
  if (counters) *counters = local;
  return result;
}

std::pair<std::optional<BitSet>, IntentCounters> instrumented_next_intent(const ObjectIntentTable& table,
                                                                          const BitSet& current) {
  IntentCounters counters;
  auto next = next_intent(table, current, &counters);
  return {std::move(next), counters};
}

std::size_t for_each_intent(const FormalContext& k, const std::function<bool(const BitSet&)>& visit,
                            const IntentOptions& options) {
  const ObjectIntentTable table =
      options.reduce ? object_intent_rows(clarify_reduce_objects(k)) : object_intent_rows(k);
  std::optional<BitSet> current = BitSet::full(table.attribute_count);
  std::size_t count = 0;
  while (current) {
    ++count;
    if (!visit(*current)) break;
    current = next_intent(table, *current);
  }
  return count;
}

std::vector<BitSet> enumerate_intents(const FormalContext& k, const IntentOptions& options) {
  std::vector<BitSet> out;
  for_each_intent(
      k,
      [&](const BitSet& b) {
        out.push_back(b);
        return true;
      },
      options);
  return out;
}

std::vector<BitSet> enumerate_extents(const FormalContext& k, const IntentOptions& options) {
  return enumerate_intents(transpose(k), options);
}

std::vector<BitSet> intents_classic(const FormalContext& k) { return classic_enumerate(intent_closure_operator(k)); }

GeneratorTable<IntersectionSemilattice<BitSet>> intent_generators(const ObjectIntentTable& table) {
  std::vector<BitSet> gens = table.rows;
  gens.push_back(BitSet::full(table.attribute_count));
  return GeneratorTable<IntersectionSemilattice<BitSet>>(IntersectionSemilattice<BitSet>{}, std::move(gens));
}

std::vector<BitSet> brute_force_intents(const FormalContext& k, std::size_t max_attributes) {
  return brute_force_closed(intent_closure_operator(k), max_attributes);
}

}  // namespace nextclosure
