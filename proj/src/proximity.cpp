#include "ordprox/proximity.hpp"

#include <functional>

#include "ordprox/error.hpp"

namespace ordprox {

std::optional<int> numeric_value(Proximity p) {
  switch (p) {
    case Proximity::Near: return 0;
    case Proximity::Far: return 1;
    case Proximity::Undefined: return std::nullopt;
  }
  return std::nullopt;
}

std::string_view to_string(Proximity p) {
  switch (p) {
    case Proximity::Near: return "near";
    case Proximity::Far: return "far";
    case Proximity::Undefined: return "undefined";
  }
  return "undefined";
}

namespace {

// Shared by the partial and total cases: near iff b covers a (or a == b).
Proximity near_by_cover(const PartialOrder& order, std::size_t a, std::size_t b) {
  if (!order.leq(a, b)) return Proximity::Undefined;
  for (std::size_t x = 0; x < order.size(); ++x) {
    if (x == a || x == b) continue;
    if (order.leq(a, x) && order.leq(x, b)) return Proximity::Far;
  }
  return Proximity::Near;
}

using NearFn = std::function<Proximity(std::size_t, std::size_t)>;

// reach[a*n+b]: a nonempty path of Near edges (a != b) leads from a to b.
std::vector<unsigned char> near_reachability(std::size_t n, const NearFn& near) {
  std::vector<unsigned char> reach(n * n, 0);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (a != b && near(a, b) == Proximity::Near) reach[a * n + b] = 1;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t a = 0; a < n; ++a)
      if (reach[a * n + k])
        for (std::size_t b = 0; b < n; ++b)
          if (reach[k * n + b]) reach[a * n + b] = 1;
  return reach;
}

class ReportBuilder {
 public:
  ReportBuilder(OrderKind kind, const ElementSet& ids) : ids_(ids) { report_.kind = kind; }

  void add(std::string name, std::optional<std::vector<std::size_t>> failure) {
    PropertyResult r;
    r.name = std::move(name);
    r.holds = !failure.has_value();
    if (failure) {
      std::vector<ElementId> named;
      for (auto i : *failure) named.push_back(ids_.id(i));
      r.counterexample = std::move(named);
    }
    report_.properties.push_back(std::move(r));
  }

  PropertyReport take() { return std::move(report_); }

 private:
  const ElementSet& ids_;
  PropertyReport report_;
};

using Failure = std::optional<std::vector<std::size_t>>;

Failure reflexive_failure(std::size_t n, const NearFn& near, Proximity expected) {
  for (std::size_t a = 0; a < n; ++a)
    if (near(a, a) != expected) return std::vector<std::size_t>{a};
  return std::nullopt;
}

Failure antitransitive_failure(std::size_t n, const NearFn& near) {
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      if (a == b || near(a, b) != Proximity::Near) continue;
      for (std::size_t c = 0; c < n; ++c) {
        if (c == a || c == b) continue;
        if (near(b, c) == Proximity::Near && near(a, c) != Proximity::Far)
          return std::vector<std::size_t>{a, b, c};
      }
    }
  return std::nullopt;
}

Failure connex_chain_failure(std::size_t n, const std::vector<unsigned char>& reach) {
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      if (!reach[a * n + b] && !reach[b * n + a]) return std::vector<std::size_t>{a, b};
  return std::nullopt;
}

}  // namespace

Proximity near_partial(const PartialOrder& order, std::size_t a, std::size_t b) {
  return near_by_cover(order, a, b);
}

Proximity near_partial(const PartialOrder& order, std::string_view a, std::string_view b) {
  return near_partial(order, order.elements().index_of(a), order.elements().index_of(b));
}

Proximity near_total(const TotalOrder& order, std::size_t a, std::size_t b) {
  return near_by_cover(order.relation(), a, b);
}

Proximity near_total(const TotalOrder& order, std::string_view a, std::string_view b) {
  return near_total(order, order.elements().index_of(a), order.elements().index_of(b));
}

Proximity near_cyclic(const CyclicOrder& order, std::size_t a, std::size_t b) {
  return (a != b && order.successor(a) == b) ? Proximity::Near : Proximity::Far;
}

Proximity near_cyclic(const CyclicOrder& order, std::string_view a, std::string_view b) {
  return near_cyclic(order, order.elements().index_of(a), order.elements().index_of(b));
}

Proximity near(const OrderSpace& space, std::size_t a, std::size_t b) {
  if (auto* p = std::get_if<PartialOrder>(&space)) return near_partial(*p, a, b);
  if (auto* t = std::get_if<TotalOrder>(&space)) return near_total(*t, a, b);
  return near_cyclic(std::get<CyclicOrder>(space), a, b);
}

bool PropertyReport::all_hold() const {
  for (const auto& p : properties)
    if (!p.holds) return false;
  return true;
}

const PropertyResult* PropertyReport::find(std::string_view name) const {
  for (const auto& p : properties)
    if (p.name == name) return &p;
  return nullptr;
}

namespace {

Failure order_antisymmetry_failure(std::size_t n, const NearFn& near) {
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      if (near(a, b) == Proximity::Near && near(b, a) == Proximity::Near)
        return std::vector<std::size_t>{a, b};
  return std::nullopt;
}

}  // namespace

PropertyReport check_properties(const PartialOrder& order) {
  const std::size_t n = order.size();
  NearFn near = [&](std::size_t a, std::size_t b) { return near_partial(order, a, b); };
  ReportBuilder out(OrderKind::Partial, order.elements());
  out.add("reflexivity", reflexive_failure(n, near, Proximity::Near));
  out.add("antisymmetry", order_antisymmetry_failure(n, near));
  out.add("antitransitivity", antitransitive_failure(n, near));
  return out.take();
}

PropertyReport check_properties(const TotalOrder& order) {
  const std::size_t n = order.size();
  NearFn near = [&](std::size_t a, std::size_t b) { return near_total(order, a, b); };
  ReportBuilder out(OrderKind::Total, order.elements());
  out.add("reflexivity", reflexive_failure(n, near, Proximity::Near));
  out.add("antisymmetry", order_antisymmetry_failure(n, near));
  out.add("antitransitivity", antitransitive_failure(n, near));

  // Every comparable pair must be joined by a chain of Near steps running in
  // the direction of the order, and connexity means every pair is comparable.
  auto reach = near_reachability(n, near);
  Failure chain;
  for (std::size_t a = 0; a < n && !chain; ++a)
    for (std::size_t b = 0; b < n && !chain; ++b) {
      if (a == b) continue;
      const bool up = order.leq(a, b), down = order.leq(b, a);
      if ((up && !reach[a * n + b]) || (down && !reach[b * n + a]) || (!up && !down))
        chain = std::vector<std::size_t>{a, b};
    }
  out.add("totality-chain", chain);
  return out.take();
}

PropertyReport check_properties(const CyclicOrder& order) {
  const std::size_t n = order.size();
  NearFn near = [&](std::size_t a, std::size_t b) { return near_cyclic(order, a, b); };
  ReportBuilder out(OrderKind::Cyclic, order.elements());
  out.add("irreflexivity", reflexive_failure(n, near, Proximity::Far));

  Failure antisym;
  for (std::size_t a = 0; a < n && !antisym; ++a)
    for (std::size_t b = 0; b < n && !antisym; ++b)
      if (near(a, b) == Proximity::Near && near(b, a) != Proximity::Far)
        antisym = std::vector<std::size_t>{a, b};
  out.add("antisymmetry", antisym);
  out.add("antitransitivity", antitransitive_failure(n, near));

  auto reach = near_reachability(n, near);
  out.add("totality-chain", connex_chain_failure(n, reach));

  // A path a ~> b ~> c must continue b ~> c ~> a.
  Failure cyclicity;
  for (std::size_t a = 0; a < n && !cyclicity; ++a)
    for (std::size_t b = 0; b < n && !cyclicity; ++b)
      for (std::size_t c = 0; c < n && !cyclicity; ++c) {
        if (a == b || b == c || a == c) continue;
        if (reach[a * n + b] && reach[b * n + c] && !reach[c * n + a])
          cyclicity = std::vector<std::size_t>{a, b, c};
      }
  out.add("cyclicity", cyclicity);
  return out.take();
}

PropertyReport check_properties(const OrderSpace& space) {
  return std::visit([](const auto& o) { return check_properties(o); }, space);
}

std::vector<ElementId> chain_between(const TotalOrder& order, std::string_view a,
                                     std::string_view b) {
  const auto& ids = order.elements();
  const std::size_t ia = ids.index_of(a), ib = ids.index_of(b);
  if (!order.leq(ia, ib)) {
    throw Error(ErrorCode::NotComparable,
                std::string(a) + " is not below " + std::string(b) + " in the total order",
                {std::string(a), std::string(b)});
  }
  std::vector<ElementId> chain;
  for (std::size_t r = order.rank(ia); r <= order.rank(ib); ++r) {
    chain.push_back(ids.id(order.at_rank(r)));
  }
  return chain;
}

}  // namespace ordprox
