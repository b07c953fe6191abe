#include "doctest.h"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "lsrs/hardness.hpp"

using namespace lsrs;
using namespace lsrs::hardness;

namespace {

Graph complete(std::size_t n) {
  Graph g{n, {}};
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v) g.edges.emplace_back(u, v);
  return g;
}

std::string render_span(const ReductionInstance& r, Span s) {
  return r.h.render(r.h.letters().subspan(s.first - 1, s.last - s.first + 1));
}

std::set<LetterId> all_letters(const Sequence& s) { return {s.letters().begin(), s.letters().end()}; }

// Recounts occurrences from the tokens alone.
void check_occurrences(const ReductionInstance& r) {
  std::map<std::string, int> count;
  for (LetterId id : r.h.letters()) ++count[r.h.alphabet().token(id)];
  for (const auto& [token, k] : count) {
    const bool four = token.rfind("F-", 0) == 0 || token.rfind("m2-", 0) == 0;
    CHECK_MESSAGE(k == (four ? 4 : 2), token);
  }
}

// Per gadget exactly one literal list is left out entirely,
// the other two are used in full.
void check_one_list_dropped(const ReductionInstance& r, const SrsDecomposition& d) {
  std::set<std::size_t> used;
  for (std::size_t p : d.positions()) used.insert(p);
  for (const auto& g : r.gadgets) {
    int dropped = 0;
    for (const Span& s : g.lists) {
      std::size_t hits = 0;
      for (std::size_t p = s.first; p <= s.last; ++p) hits += used.count(p);
      const std::size_t len = s.last + 1 - s.first;
      CHECK((hits == 0 || hits == len));
      dropped += hits == 0 ? 1 : 0;
    }
    CHECK(dropped == 1);
  }
}

}  // namespace

TEST_CASE("K3 counts and string length") {
  auto f = coloring_to_sat(complete(3));
  CHECK(f.variable_count == 9);
  CHECK(f.plus_clauses.size() == 3);
  CHECK(std::ranges::count_if(f.neg_clauses, [](const NegClause& c) { return c.type == 1; }) == 9);
  CHECK(std::ranges::count_if(f.neg_clauses, [](const NegClause& c) { return c.type == 2; }) == 9);

  auto r = sat_to_string(f);
  CHECK(r.h.size() == 104);
  CHECK(r.h.size() == 4 * 18 + 8 * 3 + 4 * 2);
  CHECK(r.h.alphabet().size() == 31);
  CHECK(r.separators.size() == 2);
  check_occurrences(r);
}

TEST_CASE("first gadget layout") {
  auto f = coloring_to_sat(complete(3));
  auto r = sat_to_string(f);
  const auto& g = r.gadgets[0];
  const std::string expected_markers[] = {"m2-1", "m1-1", "m2-1", "m1-1", "m2-1", "m3-1", "m2-1", "m3-1"};
  for (std::size_t k = 0; k < 8; ++k) CHECK(r.h.alphabet().token(r.h.at(g.markers[k])) == expected_markers[k]);
  CHECK(g.markers[0] == 1);
  CHECK(g.lists[0].first == 2);
  CHECK(r.h.alphabet().token(r.h.at(r.separators[0][0])) == "g-1");
  CHECK(r.h.alphabet().token(r.h.at(r.separators[0][1])) == "gp-1");
}

TEST_CASE("single vertex has no separators") {
  auto f = coloring_to_sat(Graph{1, {}});
  auto r = sat_to_string(f);
  CHECK(r.separators.empty());
  CHECK(r.h.size() == 4 * 3 + 8);
  auto a = brute_force_assignment(f);
  REQUIRE(a);
  CHECK(validate_srs(r.h, extract_witness(f, *a, r), all_letters(r.h)).ok());
}

TEST_CASE("literal list under per-vertex local clause numbering") {
  // u has colour variables 0..2, neighbours v (3..5) and w (6..8).
  SatInstance f;
  f.variable_count = 9;
  f.plus_clauses = {{0, 1, 2}, {3, 4, 5}, {6, 7, 8}};
  auto neg = [](int type, std::size_t x, std::size_t y) {
    NegClause c;
    c.type = type;
    c.vars = {x, y};
    return c;
  };
  f.neg_clauses = {neg(1, 0, 1), neg(1, 0, 2), neg(1, 1, 2), neg(2, 0, 3), neg(2, 1, 4),
                   neg(2, 2, 5), neg(2, 0, 6), neg(2, 1, 7), neg(2, 2, 8)};
  auto r = sat_to_string(f);
  CHECK(render_span(r, r.list_spans[0]) == "F-1 F-1 F-2 F-2 F-4 F-4 F-7 F-7");
  CHECK(clause_list(f, 0) == std::vector<std::size_t>{0, 1, 3, 6});
}

TEST_CASE("literal list under the global numbering") {
  Graph path{3, {{0, 1}, {0, 2}}};
  auto f = coloring_to_sat(path);
  auto r = sat_to_string(f);
  CHECK(render_span(r, r.list_spans[0]) == "F-1 F-1 F-2 F-2 F-10 F-10 F-13 F-13");
  CHECK(render_span(r, r.list_spans[4]) == "F-4 F-4 F-6 F-6 F-11 F-11");
}

TEST_CASE("K4 has no valid assignment and C5 does") {
  auto k4 = coloring_to_sat(complete(4));
  CHECK_FALSE(brute_force_assignment(k4).has_value());
  CHECK_FALSE(brute_force_coloring(complete(4)).has_value());

  Graph c5{5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}}};
  auto col = brute_force_coloring(c5);
  REQUIRE(col);
  CHECK(*col == std::vector<int>{1, 2, 1, 2, 3});
  auto f = coloring_to_sat(c5);
  auto a = brute_force_assignment(f);
  REQUIRE(a);
  CHECK(chosen_literals(f, *a) == *col);
}

TEST_CASE("K3 witness from colouring (1,2,3)") {
  auto f = coloring_to_sat(complete(3));
  auto r = sat_to_string(f);
  auto a = assignment_from_choices(f, {1, 2, 3});
  REQUIRE(a.valid);
  auto w = extract_witness(f, a, r);
  auto report = validate_srs(r.h, w, all_letters(r.h));
  CHECK_MESSAGE(report.ok(), (report.violations.empty() ? "" : report.violations.front()));
  check_one_list_dropped(r, w);
  CHECK_FALSE(assignment_from_choices(f, {1, 1, 2}).valid);
  CHECK_THROWS_AS(extract_witness(f, assignment_from_choices(f, {1, 1, 2}), r), std::invalid_argument);
}

TEST_CASE("colourability matches assignment existence on every graph with at most 5 vertices") {
  for (std::size_t n = 1; n <= 5; ++n) {
    auto kn = complete(n);
    const std::size_t edge_count = kn.edges.size();
    for (std::size_t mask = 0; mask < (std::size_t{1} << edge_count); ++mask) {
      Graph g{n, {}};
      for (std::size_t e = 0; e < edge_count; ++e)
        if (mask >> e & 1U) g.edges.push_back(kn.edges[e]);
      auto f = coloring_to_sat(g);
      auto col = brute_force_coloring(g);
      auto a = brute_force_assignment(f);
      REQUIRE(col.has_value() == a.has_value());
      auto r = sat_to_string(f);
      const std::size_t m = f.neg_clauses.size();
      REQUIRE(r.h.size() == 4 * m + 8 * n + 4 * (n - 1));
      if (!a) continue;
      auto w = extract_witness(f, *a, r);
      REQUIRE(validate_srs(r.h, w, all_letters(r.h)).ok());
      auto direct = assignment_from_choices(f, *col);
      REQUIRE(direct.valid);
      REQUIRE(validate_srs(r.h, extract_witness(f, direct, r), all_letters(r.h)).ok());
    }
  }
}

TEST_CASE("random graphs keep the occurrence invariants") {
  std::mt19937_64 rng(5);
  for (int round = 0; round < 60; ++round) {
    const std::size_t n = 1 + rng() % 8;
    Graph g{n, {}};
    for (auto e : complete(n).edges)
      if (rng() % 3 == 0) g.edges.push_back(e);
    auto f = coloring_to_sat(g);
    auto r = sat_to_string(f);
    check_occurrences(r);
    CHECK(OccurrenceIndex(r.h).max_occurrence == 4);
    if (auto a = brute_force_assignment(f)) {
      auto w = extract_witness(f, *a, r);
      CHECK(validate_srs(r.h, w, all_letters(r.h)).ok());
      check_one_list_dropped(r, w);
    }
  }
}

TEST_CASE("graph parsing") {
  std::istringstream ok("3 2\n0 1\n1 2\n");
  auto g = parse_graph(ok);
  CHECK(g.vertex_count == 3);
  CHECK(g.edges.size() == 2);

  auto bad = [](const std::string& text) {
    std::istringstream in(text);
    return parse_graph(in);
  };
  CHECK_THROWS_AS(bad("x"), ConstructionError);
  CHECK_THROWS_AS(bad("3 2\n0 1\n"), ConstructionError);
  CHECK_THROWS_AS(bad("3 1\n0 0\n"), ConstructionError);
  CHECK_THROWS_AS(bad("3 2\n0 1\n1 0\n"), ConstructionError);
  CHECK_THROWS_AS(bad("3 1\n0 3\n"), ConstructionError);
  CHECK_THROWS_AS(bad("3 1\n0 1\n2 1\n"), ConstructionError);
  CHECK_THROWS_AS(brute_force_coloring(Graph{16, {}}), SearchTooLarge);
}

TEST_CASE("SAT validation and DIMACS") {
  SatInstance f;
  f.variable_count = 3;
  f.plus_clauses = {{0, 1, 1}};
  CHECK_THROWS_AS(f.validate(), ConstructionError);

  auto k2 = coloring_to_sat(complete(2));
  std::ostringstream out;
  write_dimacs(out, k2);
  const std::string text = out.str();
  CHECK(text.find("p cnf 6 11\n") != std::string::npos);
  CHECK(text.find("\n1 2 3 0\n") != std::string::npos);
  CHECK(text.find("\n-1 -2 0\n") != std::string::npos);
  CHECK(text.find("\n-1 -4 0\n") != std::string::npos);
  CHECK(text.find("exactly one") != std::string::npos);
}
