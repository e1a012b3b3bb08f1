#pragma once

// Proximities induced by an order relation, in the Smirnov functional
// convention: near is 0, far is 1. Pairs the inducing order says nothing
// about (b not above a) get no verdict at all.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ordprox/order.hpp"

namespace ordprox {

enum class Proximity { Near, Far, Undefined };

/// 0 for Near, 1 for Far, nullopt for Undefined.
std::optional<int> numeric_value(Proximity p);
std::string_view to_string(Proximity p);

Proximity near_partial(const PartialOrder& order, std::size_t a, std::size_t b);
Proximity near_partial(const PartialOrder& order, std::string_view a, std::string_view b);

Proximity near_total(const TotalOrder& order, std::size_t a, std::size_t b);
Proximity near_total(const TotalOrder& order, std::string_view a, std::string_view b);

Proximity near_cyclic(const CyclicOrder& order, std::size_t a, std::size_t b);
Proximity near_cyclic(const CyclicOrder& order, std::string_view a, std::string_view b);

/// Dispatches on the order kind.
Proximity near(const OrderSpace& space, std::size_t a, std::size_t b);

struct PropertyResult {
  std::string name;
  bool holds = true;
  /// Offending element ids; present iff `holds` is false.
  std::optional<std::vector<ElementId>> counterexample;
};

struct PropertyReport {
  OrderKind kind = OrderKind::Partial;
  std::vector<PropertyResult> properties;

  bool all_hold() const;
  const PropertyResult* find(std::string_view name) const;
};

/// Exhaustively evaluates the structural properties of the induced proximity.
///   partial: reflexivity, antisymmetry, antitransitivity
///   total:   the above plus totality-chain
///   cyclic:  irreflexivity, antisymmetry, antitransitivity, totality-chain,
///            cyclicity
/// Totality-chain and cyclicity are evaluated as path properties of the
/// proximity graph (edges are the Near pairs). Failures are reported, never
/// thrown.
PropertyReport check_properties(const PartialOrder& order);
PropertyReport check_properties(const TotalOrder& order);
PropertyReport check_properties(const CyclicOrder& order);
PropertyReport check_properties(const OrderSpace& space);

/// Cover chain a = c0, c1, ..., ck = b with every adjacent pair Near.
/// Throws NotComparable unless a ≤ b.
std::vector<ElementId> chain_between(const TotalOrder& order, std::string_view a,
                                     std::string_view b);

}  // namespace ordprox
