#pragma once

// Finite partial, total and cyclic orders.
//
// All three relation types are immutable once built. The validate_* functions
// are the only checked way to construct them; the `unchecked` factories exist
// so tests can feed deliberately broken relations to the property checkers.

#include <array>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <variant>
#include <vector>

namespace ordprox {

using ElementId = std::string;
using OrderedPair = std::pair<ElementId, ElementId>;
using OrderedTriple = std::array<ElementId, 3>;

enum class OrderKind { Partial, Total, Cyclic };

std::string_view to_string(OrderKind kind);

/// Declared element ids of one space, with index lookup. Ids are nonempty and
/// unique; positions in the declaration list are the element indices used by
/// every index-based API in this library.
class ElementSet {
 public:
  ElementSet() = default;
  explicit ElementSet(std::vector<ElementId> ids);

  std::size_t size() const noexcept { return ids_.size(); }
  bool empty() const noexcept { return ids_.empty(); }
  const ElementId& id(std::size_t index) const { return ids_.at(index); }
  const std::vector<ElementId>& ids() const noexcept { return ids_; }

  bool contains(std::string_view id) const;
  /// Throws Error(UnknownElement) for undeclared ids.
  std::size_t index_of(std::string_view id) const;

 private:
  std::vector<ElementId> ids_;
  std::unordered_map<std::string, std::size_t> index_;
};

/// Validated reflexive, antisymmetric, transitive relation stored as a dense
/// n×n matrix (`leq(a, b)` means a ≤ b).
class PartialOrder {
 public:
  const ElementSet& elements() const noexcept { return elements_; }
  std::size_t size() const noexcept { return elements_.size(); }

  bool leq(std::size_t a, std::size_t b) const { return matrix_[a * size() + b] != 0; }
  bool leq(std::string_view a, std::string_view b) const;

  /// All (a, b) with a ≤ b, including reflexive pairs, in index order.
  std::vector<OrderedPair> pairs() const;

  /// Builds a relation from index pairs without any axiom checks.
  static PartialOrder unchecked(ElementSet elements,
                                std::span<const std::pair<std::size_t, std::size_t>> pairs);

 private:
  friend PartialOrder validate_partial_order(const std::vector<ElementId>&,
                                             const std::vector<OrderedPair>&);
  PartialOrder(ElementSet elements, std::vector<unsigned char> matrix)
      : elements_(std::move(elements)), matrix_(std::move(matrix)) {}

  ElementSet elements_;
  std::vector<unsigned char> matrix_;
};

/// Partial order that is also connex. rank(a) is the number of elements
/// strictly below a, so ranks form a bijection onto 0..n-1.
class TotalOrder {
 public:
  const PartialOrder& relation() const noexcept { return relation_; }
  const ElementSet& elements() const noexcept { return relation_.elements(); }
  std::size_t size() const noexcept { return relation_.size(); }
  bool leq(std::size_t a, std::size_t b) const { return relation_.leq(a, b); }

  std::size_t rank(std::size_t element) const { return rank_.at(element); }
  std::size_t rank(std::string_view id) const;
  std::size_t at_rank(std::size_t rank) const { return by_rank_.at(rank); }
  const std::vector<std::size_t>& ascending() const noexcept { return by_rank_; }

  /// Wraps a relation without checking connexity. Ranks are meaningless when
  /// the relation is not total.
  static TotalOrder unchecked(PartialOrder relation);

 private:
  friend TotalOrder validate_total_order(const std::vector<ElementId>&,
                                         const std::vector<OrderedPair>&);
  friend TotalOrder total_order_from_sequence(const std::vector<ElementId>&);
  explicit TotalOrder(PartialOrder relation);

  PartialOrder relation_;
  std::vector<std::size_t> rank_;
  std::vector<std::size_t> by_rank_;
};

/// Total cyclic order stored as a successor permutation forming one cycle.
/// [a, b, c] holds iff a, b, c are distinct and walking successors from a
/// reaches b before c.
class CyclicOrder {
 public:
  const ElementSet& elements() const noexcept { return elements_; }
  std::size_t size() const noexcept { return elements_.size(); }

  std::size_t successor(std::size_t element) const { return successor_.at(element); }
  std::size_t predecessor(std::size_t element) const;
  const std::vector<std::size_t>& successors() const noexcept { return successor_; }

  bool triple_holds(std::size_t a, std::size_t b, std::size_t c) const;

  /// Elements in successor order starting from index 0.
  std::vector<std::size_t> cycle() const;

  /// Every triple [a, b, c] that holds, in index order.
  std::vector<OrderedTriple> triples() const;

  /// Builds an order from an arbitrary successor map without checking that
  /// it is a single cycle.
  static CyclicOrder unchecked(ElementSet elements, std::vector<std::size_t> successor);

 private:
  friend CyclicOrder validate_cyclic_order(const std::vector<ElementId>&,
                                           const std::vector<OrderedTriple>&);
  friend CyclicOrder cyclic_from_total(const TotalOrder&);
  CyclicOrder(ElementSet elements, std::vector<std::size_t> successor)
      : elements_(std::move(elements)), successor_(std::move(successor)) {}

  ElementSet elements_;
  std::vector<std::size_t> successor_;
};

using OrderSpace = std::variant<PartialOrder, TotalOrder, CyclicOrder>;

OrderKind kind_of(const OrderSpace& space);
const ElementSet& elements_of(const OrderSpace& space);

PartialOrder validate_partial_order(const std::vector<ElementId>& elements,
                                    const std::vector<OrderedPair>& pairs);

TotalOrder validate_total_order(const std::vector<ElementId>& elements,
                                const std::vector<OrderedPair>& pairs);

/// Total order in which `ascending` lists the elements from least to greatest.
TotalOrder total_order_from_sequence(const std::vector<ElementId>& ascending);

/// Finds a circular arrangement of `elements` satisfying every supplied
/// triple. Consistency of arbitrary triple sets is NP-complete in general, so
/// this is a backtracking search over insertion positions; when the triples
/// under-determine the arrangement the first one found in insertion order
/// wins.
CyclicOrder validate_cyclic_order(const std::vector<ElementId>& elements,
                                  const std::vector<OrderedTriple>& triples);

/// Cyclic order induced by a total order: [a,b,c] iff a≤b≤c or b≤c≤a or c≤a≤b.
CyclicOrder cyclic_from_total(const TotalOrder& total);

bool triple_holds(const CyclicOrder& order, std::string_view a, std::string_view b,
                  std::string_view c);

}  // namespace ordprox
