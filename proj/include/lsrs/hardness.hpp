#pragma once

#include <array>
#include <cstddef>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "lsrs/sequence.hpp"
#include "lsrs/srs.hpp"

namespace lsrs::hardness {

class ConstructionError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class SearchTooLarge : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

inline constexpr std::size_t kMaxBruteForce = 15;

struct Graph {
  std::size_t vertex_count = 0;
  std::vector<std::pair<std::size_t, std::size_t>> edges;  // 0-based

  // Throws ConstructionError on self-loops, duplicates or bad endpoints.
  void validate() const;
};

// "|V| |E|" followed by |E| lines "u v" with 0-based ids.
Graph parse_graph(std::istream& in);

// Variable for vertex v and colour c in {1,2,3}: 3v + c - 1.
inline std::size_t color_variable(std::size_t vertex, int color) {
  return 3 * vertex + static_cast<std::size_t>(color - 1);
}

struct NegClause {
  int type = 1;                      // 1: two colours on a vertex, 2: one colour on an edge
  std::array<std::size_t, 2> vars{};  // both literals negated
  // provenance
  std::size_t vertex = 0;            // type 1
  std::array<int, 2> colors{};       // type 1
  std::size_t edge = 0;              // type 2, index into Graph::edges
  int color = 0;                     // type 2
};

// Positive 3-clauses using every variable exactly once, plus negative
// 2-clauses. Valid assignments make exactly one literal per 3-clause true.
struct SatInstance {
  std::size_t variable_count = 0;
  std::vector<std::array<std::size_t, 3>> plus_clauses;
  std::vector<NegClause> neg_clauses;

  void validate() const;
};

// Type-1 clauses per vertex in vertex order, colour pairs (1,2),(1,3),(2,3);
// then type-2 clauses per edge in edge order, colours 1,2,3.
SatInstance coloring_to_sat(const Graph& g);

enum class LetterRole { clause, marker, separator, separator_prime };

struct LegendEntry {
  LetterRole role = LetterRole::clause;
  std::size_t index = 0;  // clause j, plus-clause i or separator k (1-based)
  int marker = 0;         // 1, 2 or 3 for markers
};

struct Span {
  std::size_t first = 0, last = 0;  // 1-based inclusive; empty when last < first
};

// Layout of one H_i = 2 L(x1) 1 2 1 L(x2) 2 L(x3) 3 2 3.
struct GadgetLayout {
  std::array<Span, 3> lists;
  std::array<std::size_t, 8> markers{};  // positions of 2, 1,2,1, 2, 3,2,3
};

struct ReductionInstance {
  Sequence h;
  std::vector<LegendEntry> legend;                   // by LetterId
  std::vector<GadgetLayout> gadgets;                 // per plus-clause
  std::vector<std::array<std::size_t, 4>> separators;  // g g' g g' positions
  std::vector<Span> list_spans;                      // per variable
};

// Letter tokens: "F-j" clause j, "m1-i"/"m2-i"/"m3-i" markers, "g-k"/"gp-k".
ReductionInstance sat_to_string(const SatInstance& f);

// Clause letters of L(x) in order (each later doubled in H).
std::vector<std::size_t> clause_list(const SatInstance& f, std::size_t var);

struct Assignment {
  std::vector<bool> values;
  bool valid = false;
};

// Evaluates validity: all clauses true and exactly one true literal in each
// positive clause.
Assignment make_assignment(const SatInstance& f, std::vector<bool> values);
// choices[i] in {1,2,3}: which literal of plus-clause i is true.
Assignment assignment_from_choices(const SatInstance& f, const std::vector<int>& choices);
// The plus-clause literal chosen by a valid assignment, per clause.
std::vector<int> chosen_literals(const SatInstance& f, const Assignment& a);

// Builds the feasible SRS of H induced by a valid assignment: per gadget the
// list of the true literal is dropped and the markers are kept as
// (2 1)^2 / (1 2)^2 + 3^2 / 1^2 + (2 3)^2, each separator as (g g')^2 and
// every doubled clause letter as a square.
SrsDecomposition extract_witness(const SatInstance& f, const Assignment& a, const ReductionInstance& r);

// Lexicographically first valid assignment (choice 1 < 2 < 3 per
// plus-clause, first clause most significant).
std::optional<Assignment> brute_force_assignment(const SatInstance& f);

// Lexicographically first proper colouring with colours 1..3.
std::optional<std::vector<int>> brute_force_coloring(const Graph& g);

// DIMACS CNF; variables 1-based, a comment notes the exactly-one rule.
void write_dimacs(std::ostream& out, const SatInstance& f);

}  // namespace lsrs::hardness
