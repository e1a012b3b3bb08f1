#include <doctest.h>

#include <algorithm>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "ordprox/error.hpp"
#include "ordprox/order.hpp"

using namespace ordprox;
using fixtures::error_of;

namespace {

const std::vector<std::string> kB3 = {"0", "x", "y", "z", "xy", "xz", "yz", "xyz"};

bool subset(const std::string& a, const std::string& b) {
  if (a == "0") return true;
  if (b == "0") return false;
  return std::all_of(a.begin(), a.end(), [&](char c) { return b.find(c) != std::string::npos; });
}

std::vector<OrderedPair> b3_pairs() {
  std::vector<OrderedPair> out;
  for (const auto& a : kB3)
    for (const auto& b : kB3)
      if (subset(a, b)) out.emplace_back(a, b);
  return out;
}

std::vector<OrderedPair> leq_window(int n) {
  std::vector<OrderedPair> out;
  for (int a = 0; a < n; ++a)
    for (int b = a; b < n; ++b) out.emplace_back(std::to_string(a), std::to_string(b));
  return out;
}

std::vector<std::string> window(int n) { return oracle::names(static_cast<std::size_t>(n), ""); }

}  // namespace

TEST_SUITE("order") {

TEST_CASE("element set rejects empty and duplicate ids") {
  CHECK(error_of([] { ElementSet({"a", ""}); }) == ErrorCode::ParseError);
  CHECK(error_of([] { ElementSet({"a", "b", "a"}); }) == ErrorCode::DuplicateElement);
  ElementSet s({"p", "q"});
  CHECK(s.index_of("q") == 1);
  CHECK(error_of([&] { s.index_of("r"); }) == ErrorCode::UnknownElement);
}

TEST_CASE("power-set lattice is a partial order") {
  const auto po = validate_partial_order(kB3, b3_pairs());
  CHECK(po.size() == 8);
  CHECK(po.leq("x", "xy"));
  CHECK_FALSE(po.leq("x", "y"));
  CHECK(po.pairs().size() == b3_pairs().size());
}

TEST_CASE("single reflexive element is a partial order") {
  const auto po = validate_partial_order({"a"}, {{"a", "a"}});
  CHECK(po.leq("a", "a"));
}

TEST_CASE("partial order validation errors") {
  CHECK(error_of([] {
          validate_partial_order({"a", "b"}, {{"a", "a"}, {"b", "b"}, {"a", "b"}, {"b", "a"}});
        }) == ErrorCode::AntisymmetryViolation);
  CHECK(error_of([] { validate_partial_order({"a", "b"}, {{"a", "a"}, {"a", "b"}}); }) ==
        ErrorCode::MissingReflexivePair);
  CHECK(error_of([] {
          validate_partial_order({"a", "b", "c"},
                                 {{"a", "a"}, {"b", "b"}, {"c", "c"}, {"a", "b"}, {"b", "c"}});
        }) == ErrorCode::TransitivityViolation);
  CHECK(error_of([] { validate_partial_order({"a"}, {{"a", "a"}, {"a", "z"}}); }) ==
        ErrorCode::UnknownElement);
}

TEST_CASE("validation errors name their subjects") {
  try {
    validate_partial_order({"a", "b", "c"},
                           {{"a", "a"}, {"b", "b"}, {"c", "c"}, {"a", "b"}, {"b", "c"}});
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.subjects() == std::vector<std::string>{"a", "b", "c"});
  }
  try {
    validate_partial_order({"a", "b"}, {{"a", "a"}, {"b", "b"}, {"a", "b"}, {"b", "a"}});
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.subjects() == std::vector<std::string>{"a", "b"});
  }
}

TEST_CASE("integer window is a total order with rank i") {
  const auto to = validate_total_order(window(6), leq_window(6));
  for (int i = 0; i < 6; ++i) CHECK(to.rank(std::to_string(i)) == static_cast<std::size_t>(i));
}

TEST_CASE("total order given out of declaration order") {
  const auto to = validate_total_order({"c", "a", "b"}, {{"a", "a"},
                                                         {"b", "b"},
                                                         {"c", "c"},
                                                         {"a", "b"},
                                                         {"a", "c"},
                                                         {"b", "c"}});
  CHECK(to.rank("a") == 0);
  CHECK(to.rank("c") == 2);
  CHECK(to.elements().id(to.at_rank(1)) == "b");
}

TEST_CASE("power-set lattice is not total") {
  try {
    validate_total_order(kB3, b3_pairs());
    FAIL("expected IncomparablePair");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::IncomparablePair);
    CHECK(e.subjects() == std::vector<std::string>{"x", "y"});
  }
}

TEST_CASE("one element total order") {
  const auto to = validate_total_order({"solo"}, {{"solo", "solo"}});
  CHECK(to.rank("solo") == 0);
}

TEST_CASE("total order from sequence") {
  const auto to = total_order_from_sequence({"q", "p", "r"});
  CHECK(to.rank("q") == 0);
  CHECK(to.rank("r") == 2);
  CHECK(to.leq(to.elements().index_of("p"), to.elements().index_of("r")));
}

TEST_CASE("five cycle from its full triple set") {
  const std::vector<std::string> v = {"v1", "v2", "v3", "v4", "v5"};
  const auto cyc = validate_cyclic_order(v, fixtures::triples_of({0, 1, 2, 3, 4}, v));
  for (std::size_t i = 0; i < 5; ++i) CHECK(cyc.successor(i) == (i + 1) % 5);
  CHECK(triple_holds(cyc, "v4", "v5", "v1"));
  CHECK(triple_holds(cyc, "v5", "v2", "v4"));
  CHECK_FALSE(triple_holds(cyc, "v4", "v2", "v5"));
  CHECK_FALSE(triple_holds(cyc, "v1", "v5", "v4"));
}

TEST_CASE("consecutive triples alone leave the pentagram open") {
  // [v_i, v_i+1, v_i+2] for every i is also satisfied by v1 v4 v2 v5 v3, so
  // the search returns some arrangement satisfying them, not necessarily the
  // pentagon.
  const std::vector<std::string> v = {"v1", "v2", "v3", "v4", "v5"};
  std::vector<OrderedTriple> t;
  for (std::size_t i = 0; i < 5; ++i) t.push_back({v[i], v[(i + 1) % 5], v[(i + 2) % 5]});
  const auto cyc = validate_cyclic_order(v, t);
  for (const auto& [a, b, c] : t) CHECK(triple_holds(cyc, a, b, c));
}

TEST_CASE("single triple fixes the 3-cycle") {
  const auto cyc = validate_cyclic_order({"a", "b", "c"}, {{"a", "b", "c"}});
  CHECK(cyc.successor(0) == 1);
  CHECK(cyc.successor(1) == 2);
  CHECK(cyc.successor(2) == 0);
}

TEST_CASE("cyclic validation errors") {
  CHECK(error_of([] {
          validate_cyclic_order({"a", "b", "c"}, {{"a", "b", "c"}, {"c", "b", "a"}});
        }) == ErrorCode::InconsistentTriples);
  CHECK(error_of([] { validate_cyclic_order({"a", "b"}, {}); }) == ErrorCode::TooFewElements);
  CHECK(error_of([] { validate_cyclic_order({"a", "b", "c"}, {{"a", "a", "c"}}); }) ==
        ErrorCode::DegenerateTriple);
  CHECK(error_of([] { validate_cyclic_order({"a", "b", "c"}, {{"a", "b", "q"}}); }) ==
        ErrorCode::UnknownElement);
}

TEST_CASE("triple with repeated element is false") {
  const auto cyc = validate_cyclic_order({"a", "b", "c"}, {{"a", "b", "c"}});
  CHECK_FALSE(triple_holds(cyc, "a", "a", "c"));
  CHECK_FALSE(triple_holds(cyc, "a", "b", "a"));
  CHECK(error_of([&] { triple_holds(cyc, "a", "b", "nope"); }) == ErrorCode::UnknownElement);
}

TEST_CASE("cyclic order from a total order wraps around") {
  const auto to = validate_total_order(
      {"1", "2", "3"}, {{"1", "1"}, {"2", "2"}, {"3", "3"}, {"1", "2"}, {"1", "3"}, {"2", "3"}});
  const auto cyc = cyclic_from_total(to);
  CHECK(triple_holds(cyc, "1", "2", "3"));
  CHECK_FALSE(triple_holds(cyc, "3", "2", "1"));
  CHECK(cyc.elements().id(cyc.successor(cyc.elements().index_of("3"))) == "1");

  const auto abcd = total_order_from_sequence({"a", "b", "c", "d"});
  CHECK(triple_holds(cyclic_from_total(abcd), "d", "a", "b"));
  CHECK(error_of([] { cyclic_from_total(total_order_from_sequence({"a", "b"})); }) ==
        ErrorCode::TooFewElements);
}

TEST_CASE("cyclic_from_total matches the three-disjunct predicate at n = 3 and 4") {
  for (std::size_t n : {3u, 4u}) {
    const auto ids = oracle::names(n);
    auto perm = oracle::Gen(1).permutation(n);
    std::sort(perm.begin(), perm.end());
    do {
      const auto to = fixtures::total_order(perm, ids);
      const auto cyc = cyclic_from_total(to);
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
          for (std::size_t c = 0; c < n; ++c) {
            const bool distinct = a != b && b != c && a != c;
            const auto ra = to.rank(a), rb = to.rank(b), rc = to.rank(c);
            const bool expected = distinct && ((ra <= rb && rb <= rc) || (rb <= rc && rc <= ra) ||
                                               (rc <= ra && ra <= rb));
            CHECK(cyc.triple_holds(a, b, c) == expected);
          }
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
}

}  // TEST_SUITE
