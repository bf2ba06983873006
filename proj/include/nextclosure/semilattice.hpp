#pragma once

// Next-Closure over an arbitrary finite join-semilattice.
//
// A semilattice is given by a join operation and a decidable equality; the
// order is a <= b  :<=>  join(a, b) == b. Enumeration is relative to a
// GeneratorTable (x_0, ..., x_{n-1}): position 0 is the smallest index and the
// most significant one for the lectic order, so
//
//   a <_i b  :<=>  i = min { j : x_j <= a  xor  x_j <= b }  and  x_i <= b.
//
// Successors are built by  a (+) i = join(x_i, join{ x_j : j < i, x_j <= a }).

#include <algorithm>
#include <concepts>
#include <cstddef>
#include <functional>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "nextclosure/bitset.hpp"

namespace nextclosure {

template <class L>
concept SemilatticeLike = requires(const L& l, const typename L::value_type& a) {
  { l.join(a, a) } -> std::convertible_to<typename L::value_type>;
  { l.equals(a, a) } -> std::convertible_to<bool>;
};

/// Adapts a join functor and an equality functor to the semilattice interface.
template <class T, class JoinOp, class EqualOp = std::equal_to<T>>
class Semilattice {
 public:
  using value_type = T;

  explicit Semilattice(JoinOp join = JoinOp{}, EqualOp equal = EqualOp{})
      : join_(std::move(join)), equal_(std::move(equal)) {}

  T join(const T& a, const T& b) const { return join_(a, b); }
  bool equals(const T& a, const T& b) const { return equal_(a, b); }

 private:
  JoinOp join_;
  EqualOp equal_;
};

struct UnionJoin {
  template <class T>
  T operator()(const T& a, const T& b) const { return a | b; }
};

struct IntersectionJoin {
  template <class T>
  T operator()(const T& a, const T& b) const { return a & b; }
};

/// (2^S, union): order is inclusion.
template <class T>
using UnionSemilattice = Semilattice<T, UnionJoin>;

/// (2^S, intersection): order is reverse inclusion.
template <class T>
using IntersectionSemilattice = Semilattice<T, IntersectionJoin>;

template <SemilatticeLike L>
bool leq(const L& lattice, const typename L::value_type& a, const typename L::value_type& b) {
  return lattice.equals(lattice.join(a, b), b);
}

class EmptyGeneratorTable : public std::invalid_argument {
 public:
  EmptyGeneratorTable() : std::invalid_argument("generator table is empty: no semilattice to enumerate") {}
};

/// Ordered generating sequence of a semilattice. Immutable after construction.
template <SemilatticeLike L>
class GeneratorTable {
 public:
  using lattice_type = L;
  using value_type = typename L::value_type;

  GeneratorTable(L lattice, std::vector<value_type> generators)
      : lattice_(std::move(lattice)), generators_(std::move(generators)) {
    if (generators_.empty()) throw EmptyGeneratorTable();
  }

  std::size_t size() const { return generators_.size(); }
  const value_type& operator[](std::size_t i) const { return generators_[i]; }
  const std::vector<value_type>& generators() const { return generators_; }
  const L& lattice() const { return lattice_; }

  bool leq(const value_type& a, const value_type& b) const { return nextclosure::leq(lattice_, a, b); }

 private:
  L lattice_;
  std::vector<value_type> generators_;
};

enum class LecticOutcome { kLess, kEqual, kGreater };

struct LecticOrdering {
  LecticOutcome outcome = LecticOutcome::kEqual;
  std::optional<std::size_t> witness;  // min of the separating index set

  friend bool operator==(const LecticOrdering&, const LecticOrdering&) = default;
};

/// Bit i set iff x_i <= a.
template <class L>
BitSet footprint(const typename L::value_type& a, const GeneratorTable<L>& table) {
  BitSet fp(table.size());
  for (std::size_t i = 0; i < table.size(); ++i)
    if (table.leq(table[i], a)) fp.set(i);
  return fp;
}

/// Indices of generators below exactly one of a, b.
template <class L>
BitSet delta(const typename L::value_type& a, const typename L::value_type& b, const GeneratorTable<L>& table) {
  return footprint(a, table) ^ footprint(b, table);
}

template <class L>
LecticOrdering lectic_compare(const typename L::value_type& a, const typename L::value_type& b,
                              const GeneratorTable<L>& table) {
  for (std::size_t i = 0; i < table.size(); ++i) {
    const bool in_a = table.leq(table[i], a);
    const bool in_b = table.leq(table[i], b);
    if (in_a != in_b) return {in_b ? LecticOutcome::kLess : LecticOutcome::kGreater, i};
  }
  return {};
}

template <class L>
bool lectic_less(const typename L::value_type& a, const typename L::value_type& b, const GeneratorTable<L>& table) {
  return lectic_compare(a, b, table).outcome == LecticOutcome::kLess;
}

namespace detail {

template <class L>
typename L::value_type plus_with_footprint(const BitSet& fp, std::size_t i, const GeneratorTable<L>& table) {
  auto result = table[i];
  for (std::size_t j = fp.find_first(); j < i; j = fp.find_next(j + 1))
    result = table.lattice().join(result, table[j]);
  return result;
}

}  // namespace detail

/// a (+) i. Equals x_i when no earlier generator lies below a.
template <class L>
typename L::value_type plus(const typename L::value_type& a, std::size_t i, const GeneratorTable<L>& table) {
  return detail::plus_with_footprint(footprint(a, table), i, table);
}

enum class SuccessorScan {
  /// Only indices with x_i not below a are tried; acceptance checks the prefix
  /// implication  x_k !<= a  =>  x_k !<= a (+) i  for k < i.
  kSkipBelow,
  /// Every index is tried and accepted iff lectic_compare(a, a (+) i) is LESS
  /// with witness i. Reference route for testing.
  kExhaustive,
};

/// Lectic successor of a, or nullopt if a is the lectic maximum.
template <class L>
std::optional<typename L::value_type> next_element(const typename L::value_type& a, const GeneratorTable<L>& table,
                                                   SuccessorScan scan = SuccessorScan::kSkipBelow) {
  const std::size_t n = table.size();
  if (scan == SuccessorScan::kExhaustive) {
    for (std::size_t i = n; i-- > 0;) {
      auto candidate = plus(a, i, table);
      const auto ord = lectic_compare(a, candidate, table);
      if (ord.outcome == LecticOutcome::kLess && ord.witness == i) return candidate;
    }
    return std::nullopt;
  }

  const BitSet fp = footprint(a, table);
  for (std::size_t i = n; i-- > 0;) {
    if (fp.test(i)) continue;
    auto candidate = detail::plus_with_footprint(fp, i, table);
    bool accepted = true;
    for (std::size_t k = 0; k < i && accepted; ++k)
      if (!fp.test(k) && table.leq(table[k], candidate)) accepted = false;
    if (accepted) return candidate;
  }
  return std::nullopt;
}

/// Lectic minimum of the generated semilattice.
///
/// It is a <=-minimal generator. Among those, the lectically smallest is the
/// one whose first occurrence in the table comes last; for tables without
/// duplicates that is simply the largest index.
template <class L>
typename L::value_type first_element(const GeneratorTable<L>& table) {
  const std::size_t n = table.size();
  const auto& lat = table.lattice();
  std::optional<std::size_t> best;
  for (std::size_t i = 0; i < n; ++i) {
    bool minimal = true;
    bool first_occurrence = true;
    for (std::size_t j = 0; j < n && minimal; ++j) {
      if (j == i) continue;
      if (lat.equals(table[j], table[i])) {
        if (j < i) first_occurrence = false;
      } else if (table.leq(table[j], table[i])) {
        minimal = false;
      }
    }
    if (minimal && first_occurrence) best = i;
  }
  // A finite semilattice always has a minimal generator.
  return table[*best];
}

/// Calls `visit(element)` in lectic order until it returns false or the
/// enumeration is exhausted. Returns the number of elements visited.
template <class L, class Visitor>
std::size_t for_each_element(const GeneratorTable<L>& table, Visitor&& visit) {
  std::optional<typename L::value_type> current = first_element(table);
  std::size_t count = 0;
  while (current) {
    ++count;
    if (!visit(std::as_const(*current))) break;
    current = next_element(*current, table);
  }
  return count;
}

template <class L>
std::vector<typename L::value_type> enumerate_all(const GeneratorTable<L>& table) {
  std::vector<typename L::value_type> out;
  for_each_element(table, [&](const auto& e) {
    out.push_back(e);
    return true;
  });
  return out;
}

/// Elements a of `elements` not expressible as the join of strictly smaller
/// members of `elements`.
template <SemilatticeLike L>
std::vector<typename L::value_type> join_irreducibles(const std::vector<typename L::value_type>& elements,
                                                      const L& lattice) {
  std::vector<typename L::value_type> out;
  for (const auto& a : elements) {
    std::optional<typename L::value_type> below;
    for (const auto& b : elements) {
      if (lattice.equals(a, b) || !leq(lattice, b, a)) continue;
      below = below ? lattice.join(*below, b) : b;
    }
    if (!below || !lattice.equals(*below, a)) out.push_back(a);
  }
  return out;
}

/// Closure of the generators under pairwise join, in discovery order.
/// Quadratic in the result size; intended as a test oracle.
template <class L>
std::vector<typename L::value_type> generated_semilattice(const GeneratorTable<L>& table) {
  const auto& lat = table.lattice();
  std::vector<typename L::value_type> elements;
  auto contains = [&](const auto& x) {
    return std::any_of(elements.begin(), elements.end(), [&](const auto& e) { return lat.equals(e, x); });
  };
  for (const auto& g : table.generators())
    if (!contains(g)) elements.push_back(g);
  for (std::size_t done = 0; done < elements.size(); ++done) {
    // Pair element `done` with every earlier one; new joins are appended and
    // picked up later in the sweep.
    for (std::size_t k = 0; k <= done; ++k) {
      auto j = lat.join(elements[k], elements[done]);
      if (!contains(j)) elements.push_back(std::move(j));
    }
  }
  return elements;
}

}  // namespace nextclosure
