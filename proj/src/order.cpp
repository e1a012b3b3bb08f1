#include "ordprox/order.hpp"

#include <algorithm>
#include <numeric>

#include "ordprox/error.hpp"

namespace ordprox {

std::string_view to_string(OrderKind kind) {
  switch (kind) {
    case OrderKind::Partial: return "partial";
    case OrderKind::Total: return "total";
    case OrderKind::Cyclic: return "cyclic";
  }
  return "unknown";
}

// ---------------------------------------------------------------------------
// ElementSet

ElementSet::ElementSet(std::vector<ElementId> ids) : ids_(std::move(ids)) {
  index_.reserve(ids_.size());
  for (std::size_t i = 0; i < ids_.size(); ++i) {
    if (ids_[i].empty()) {
      throw Error(ErrorCode::ParseError, "element ids must be nonempty");
    }
    if (!index_.emplace(ids_[i], i).second) {
      throw Error(ErrorCode::DuplicateElement, "duplicate element id '" + ids_[i] + "'",
                  {ids_[i]});
    }
  }
}

bool ElementSet::contains(std::string_view id) const {
  return index_.find(std::string(id)) != index_.end();
}

std::size_t ElementSet::index_of(std::string_view id) const {
  auto it = index_.find(std::string(id));
  if (it == index_.end()) {
    throw Error(ErrorCode::UnknownElement, "unknown element '" + std::string(id) + "'",
                {std::string(id)});
  }
  return it->second;
}

// ---------------------------------------------------------------------------
// PartialOrder

bool PartialOrder::leq(std::string_view a, std::string_view b) const {
  return leq(elements_.index_of(a), elements_.index_of(b));
}

std::vector<OrderedPair> PartialOrder::pairs() const {
  std::vector<OrderedPair> out;
  for (std::size_t a = 0; a < size(); ++a) {
    for (std::size_t b = 0; b < size(); ++b) {
      if (leq(a, b)) out.emplace_back(elements_.id(a), elements_.id(b));
    }
  }
  return out;
}

PartialOrder PartialOrder::unchecked(
    ElementSet elements, std::span<const std::pair<std::size_t, std::size_t>> pairs) {
  const std::size_t n = elements.size();
  std::vector<unsigned char> matrix(n * n, 0);
  for (auto [a, b] : pairs) matrix.at(a * n + b) = 1;
  return PartialOrder(std::move(elements), std::move(matrix));
}

PartialOrder validate_partial_order(const std::vector<ElementId>& element_ids,
                                    const std::vector<OrderedPair>& pairs) {
  ElementSet elements(element_ids);
  const std::size_t n = elements.size();
  std::vector<unsigned char> m(n * n, 0);
  for (const auto& [a, b] : pairs) {
    m[elements.index_of(a) * n + elements.index_of(b)] = 1;
  }
  auto leq = [&](std::size_t a, std::size_t b) { return m[a * n + b] != 0; };

  for (std::size_t a = 0; a < n; ++a) {
    if (!leq(a, a)) {
      throw Error(ErrorCode::MissingReflexivePair,
                  "missing reflexive pair (" + elements.id(a) + ", " + elements.id(a) + ")",
                  {elements.id(a)});
    }
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      if (leq(a, b) && leq(b, a)) {
        throw Error(ErrorCode::AntisymmetryViolation,
                    "antisymmetry violated by " + elements.id(a) + " and " + elements.id(b),
                    {elements.id(a), elements.id(b)});
      }
    }
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (!leq(a, b)) continue;
      for (std::size_t c = 0; c < n; ++c) {
        if (leq(b, c) && !leq(a, c)) {
          throw Error(ErrorCode::TransitivityViolation,
                      "transitivity violated: " + elements.id(a) + " <= " + elements.id(b) +
                          " <= " + elements.id(c) + " but not " + elements.id(a) +
                          " <= " + elements.id(c),
                      {elements.id(a), elements.id(b), elements.id(c)});
        }
      }
    }
  }
  return PartialOrder(std::move(elements), std::move(m));
}

// ---------------------------------------------------------------------------
// TotalOrder

TotalOrder::TotalOrder(PartialOrder relation)
    : relation_(std::move(relation)), rank_(relation_.size()), by_rank_(relation_.size()) {
  const std::size_t n = relation_.size();
  for (std::size_t a = 0; a < n; ++a) {
    std::size_t below = 0;
    for (std::size_t b = 0; b < n; ++b) {
      if (b != a && relation_.leq(b, a)) ++below;
    }
    rank_[a] = below;
    by_rank_[below] = a;
  }
}

TotalOrder TotalOrder::unchecked(PartialOrder relation) { return TotalOrder(std::move(relation)); }

std::size_t TotalOrder::rank(std::string_view id) const {
  return rank(elements().index_of(id));
}

TotalOrder validate_total_order(const std::vector<ElementId>& elements,
                                const std::vector<OrderedPair>& pairs) {
  PartialOrder po = validate_partial_order(elements, pairs);
  for (std::size_t a = 0; a < po.size(); ++a) {
    for (std::size_t b = a + 1; b < po.size(); ++b) {
      if (!po.leq(a, b) && !po.leq(b, a)) {
        const auto& ids = po.elements();
        throw Error(ErrorCode::IncomparablePair,
                    "elements " + ids.id(a) + " and " + ids.id(b) + " are incomparable",
                    {ids.id(a), ids.id(b)});
      }
    }
  }
  return TotalOrder(std::move(po));
}

TotalOrder total_order_from_sequence(const std::vector<ElementId>& ascending) {
  std::vector<OrderedPair> pairs;
  pairs.reserve(ascending.size() * (ascending.size() + 1) / 2);
  for (std::size_t i = 0; i < ascending.size(); ++i) {
    for (std::size_t j = i; j < ascending.size(); ++j) {
      pairs.emplace_back(ascending[i], ascending[j]);
    }
  }
  return validate_total_order(ascending, pairs);
}

// ---------------------------------------------------------------------------
// CyclicOrder

std::size_t CyclicOrder::predecessor(std::size_t element) const {
  for (std::size_t i = 0; i < successor_.size(); ++i) {
    if (successor_[i] == element) return i;
  }
  return element;
}

bool CyclicOrder::triple_holds(std::size_t a, std::size_t b, std::size_t c) const {
  if (a == b || b == c || a == c) return false;
  std::size_t cur = a;
  for (std::size_t step = 0; step < successor_.size(); ++step) {
    cur = successor_[cur];
    if (cur == b) {
      for (std::size_t rest = step + 1; rest < successor_.size(); ++rest) {
        cur = successor_[cur];
        if (cur == c) return true;
        if (cur == a) return false;
      }
      return false;
    }
    if (cur == c || cur == a) return false;
  }
  return false;
}

std::vector<std::size_t> CyclicOrder::cycle() const {
  std::vector<std::size_t> out;
  if (successor_.empty()) return out;
  std::size_t cur = 0;
  do {
    out.push_back(cur);
    cur = successor_[cur];
  } while (cur != 0 && out.size() < successor_.size());
  return out;
}

std::vector<OrderedTriple> CyclicOrder::triples() const {
  std::vector<OrderedTriple> out;
  const std::size_t n = size();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if (triple_holds(a, b, c))
          out.push_back({elements_.id(a), elements_.id(b), elements_.id(c)});
  return out;
}

CyclicOrder CyclicOrder::unchecked(ElementSet elements, std::vector<std::size_t> successor) {
  return CyclicOrder(std::move(elements), std::move(successor));
}

namespace {

using IndexTriple = std::array<std::size_t, 3>;

// Position-based cyclic betweenness on a partial arrangement.
bool cyclically_between(std::size_t pa, std::size_t pb, std::size_t pc) {
  return (pa < pb && pb < pc) || (pb < pc && pc < pa) || (pc < pa && pa < pb);
}

class ArrangementSearch {
 public:
  ArrangementSearch(std::size_t n, const std::vector<IndexTriple>& triples)
      : n_(n), by_last_(n), position_(n, 0) {
    // Each triple is checked once, as soon as its highest-indexed element has
    // been placed.
    for (const auto& t : triples) {
      by_last_[std::max({t[0], t[1], t[2]})].push_back(t);
    }
  }

  bool run() {
    circle_ = {0, 1};
    if (!consistent(1)) return false;
    return place(2);
  }

  const std::vector<std::size_t>& circle() const { return circle_; }

 private:
  bool consistent(std::size_t newest) {
    for (std::size_t i = 0; i < circle_.size(); ++i) position_[circle_[i]] = i;
    for (const auto& t : by_last_[newest]) {
      if (!cyclically_between(position_[t[0]], position_[t[1]], position_[t[2]])) return false;
    }
    return true;
  }

  bool place(std::size_t element) {
    if (element == n_) return true;
    for (std::size_t gap = 1; gap <= circle_.size(); ++gap) {
      circle_.insert(circle_.begin() + static_cast<std::ptrdiff_t>(gap), element);
      if (consistent(element) && place(element + 1)) return true;
      circle_.erase(circle_.begin() + static_cast<std::ptrdiff_t>(gap));
    }
    return false;
  }

  std::size_t n_;
  std::vector<std::vector<IndexTriple>> by_last_;
  std::vector<std::size_t> position_;
  std::vector<std::size_t> circle_;
};

}  // namespace

CyclicOrder validate_cyclic_order(const std::vector<ElementId>& element_ids,
                                  const std::vector<OrderedTriple>& triples) {
  ElementSet elements(element_ids);
  const std::size_t n = elements.size();
  if (n < 3) {
    throw Error(ErrorCode::TooFewElements,
                "a cyclic order needs at least 3 elements, got " + std::to_string(n));
  }
  std::vector<IndexTriple> indexed;
  indexed.reserve(triples.size());
  for (const auto& t : triples) {
    IndexTriple it{elements.index_of(t[0]), elements.index_of(t[1]), elements.index_of(t[2])};
    if (it[0] == it[1] || it[1] == it[2] || it[0] == it[2]) {
      throw Error(ErrorCode::DegenerateTriple,
                  "triple [" + t[0] + "," + t[1] + "," + t[2] + "] repeats an element",
                  {t[0], t[1], t[2]});
    }
    indexed.push_back(it);
  }

  ArrangementSearch search(n, indexed);
  if (!search.run()) {
    throw Error(ErrorCode::InconsistentTriples,
                "no circular arrangement satisfies all " + std::to_string(triples.size()) +
                    " triples");
  }
  const auto& circle = search.circle();
  std::vector<std::size_t> successor(n);
  for (std::size_t i = 0; i < n; ++i) successor[circle[i]] = circle[(i + 1) % n];
  return CyclicOrder(std::move(elements), std::move(successor));
}

CyclicOrder cyclic_from_total(const TotalOrder& total) {
  const std::size_t n = total.size();
  if (n < 3) {
    throw Error(ErrorCode::TooFewElements,
                "a cyclic order needs at least 3 elements, got " + std::to_string(n));
  }
  std::vector<std::size_t> successor(n);
  for (std::size_t r = 0; r < n; ++r) {
    successor[total.at_rank(r)] = total.at_rank((r + 1) % n);
  }
  return CyclicOrder(total.elements(), std::move(successor));
}

bool triple_holds(const CyclicOrder& order, std::string_view a, std::string_view b,
                  std::string_view c) {
  const auto& ids = order.elements();
  return order.triple_holds(ids.index_of(a), ids.index_of(b), ids.index_of(c));
}

OrderKind kind_of(const OrderSpace& space) {
  return static_cast<OrderKind>(space.index());
}

const ElementSet& elements_of(const OrderSpace& space) {
  return std::visit([](const auto& o) -> const ElementSet& { return o.elements(); }, space);
}

}  // namespace ordprox
