#include "lsrs/hardness.hpp"

#include <algorithm>
#include <istream>
#include <memory>
#include <ostream>
#include <set>

namespace lsrs::hardness {

void Graph::validate() const {
  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (std::size_t e = 0; e < edges.size(); ++e) {
    auto [u, v] = edges[e];
    const std::string where = "edge " + std::to_string(e) + " (" + std::to_string(u) + "," + std::to_string(v) + ")";
    if (u >= vertex_count || v >= vertex_count) throw ConstructionError(where + ": endpoint out of range");
    if (u == v) throw ConstructionError(where + ": self-loop");
    if (!seen.insert(std::minmax(u, v)).second) throw ConstructionError(where + ": duplicate edge");
  }
}

Graph parse_graph(std::istream& in) {
  long long nv = -1, ne = -1;
  if (!(in >> nv >> ne) || nv < 0 || ne < 0) throw ConstructionError("graph header must be '|V| |E|'");
  Graph g;
  g.vertex_count = static_cast<std::size_t>(nv);
  for (long long e = 0; e < ne; ++e) {
    long long u = -1, v = -1;
    if (!(in >> u >> v) || u < 0 || v < 0)
      throw ConstructionError("graph edge line " + std::to_string(e + 1) + " malformed");
    g.edges.emplace_back(static_cast<std::size_t>(u), static_cast<std::size_t>(v));
  }
  std::string extra;
  if (in >> extra) throw ConstructionError("trailing data after " + std::to_string(ne) + " edges");
  g.validate();
  return g;
}

void SatInstance::validate() const {
  std::vector<int> uses(variable_count, 0);
  for (std::size_t i = 0; i < plus_clauses.size(); ++i) {
    for (std::size_t v : plus_clauses[i]) {
      if (v >= variable_count)
        throw ConstructionError("plus-clause " + std::to_string(i + 1) + ": variable out of range");
      ++uses[v];
    }
  }
  for (std::size_t v = 0; v < variable_count; ++v) {
    if (uses[v] != 1)
      throw ConstructionError("variable x" + std::to_string(v + 1) + " occurs " + std::to_string(uses[v]) +
                              " times in plus-clauses (need exactly 1)");
  }
  for (std::size_t j = 0; j < neg_clauses.size(); ++j) {
    const auto& c = neg_clauses[j];
    if (c.type != 1 && c.type != 2) throw ConstructionError("clause F-" + std::to_string(j + 1) + ": bad type");
    if (c.vars[0] >= variable_count || c.vars[1] >= variable_count)
      throw ConstructionError("clause F-" + std::to_string(j + 1) + ": variable out of range");
    if (c.vars[0] == c.vars[1])
      throw ConstructionError("clause F-" + std::to_string(j + 1) + ": repeated variable");
  }
}

SatInstance coloring_to_sat(const Graph& g) {
  g.validate();
  SatInstance f;
  f.variable_count = 3 * g.vertex_count;
  for (std::size_t u = 0; u < g.vertex_count; ++u)
    f.plus_clauses.push_back({color_variable(u, 1), color_variable(u, 2), color_variable(u, 3)});
  constexpr std::array<std::array<int, 2>, 3> pairs{{{1, 2}, {1, 3}, {2, 3}}};
  for (std::size_t u = 0; u < g.vertex_count; ++u) {
    for (auto [a, b] : pairs) {
      NegClause c;
      c.type = 1;
      c.vars = {color_variable(u, a), color_variable(u, b)};
      c.vertex = u;
      c.colors = {a, b};
      f.neg_clauses.push_back(c);
    }
  }
  for (std::size_t e = 0; e < g.edges.size(); ++e) {
    for (int color = 1; color <= 3; ++color) {
      NegClause c;
      c.type = 2;
      c.vars = {color_variable(g.edges[e].first, color), color_variable(g.edges[e].second, color)};
      c.edge = e;
      c.color = color;
      f.neg_clauses.push_back(c);
    }
  }
  return f;
}

std::vector<std::size_t> clause_list(const SatInstance& f, std::size_t var) {
  std::vector<std::size_t> out;
  for (int type = 1; type <= 2; ++type)
    for (std::size_t j = 0; j < f.neg_clauses.size(); ++j) {
      const auto& c = f.neg_clauses[j];
      if (c.type == type && (c.vars[0] == var || c.vars[1] == var)) out.push_back(j);
    }
  return out;
}

ReductionInstance sat_to_string(const SatInstance& f) {
  f.validate();
  const std::size_t n = f.plus_clauses.size();
  const std::size_t m = f.neg_clauses.size();

  auto alphabet = std::make_shared<Alphabet>();
  ReductionInstance r;
  Word letters;
  r.list_spans.resize(f.variable_count);

  auto emit = [&](const std::string& token, LegendEntry entry) {
    LetterId id = alphabet->intern(token);
    if (id == r.legend.size()) r.legend.push_back(entry);
    letters.push_back(id);
    return letters.size();
  };
  auto emit_list = [&](std::size_t var) {
    Span span{letters.size() + 1, letters.size()};
    for (std::size_t j : clause_list(f, var)) {
      const std::string token = "F-" + std::to_string(j + 1);
      emit(token, {LetterRole::clause, j + 1, 0});
      span.last = emit(token, {LetterRole::clause, j + 1, 0});
    }
    r.list_spans[var] = span;
    return span;
  };

  for (std::size_t i = 0; i < n; ++i) {
    const std::string idx = std::to_string(i + 1);
    auto marker = [&](int which) {
      return emit("m" + std::to_string(which) + "-" + idx, {LetterRole::marker, i + 1, which});
    };
    GadgetLayout g;
    const auto& clause = f.plus_clauses[i];
    g.markers[0] = marker(2);
    g.lists[0] = emit_list(clause[0]);
    g.markers[1] = marker(1);
    g.markers[2] = marker(2);
    g.markers[3] = marker(1);
    g.lists[1] = emit_list(clause[1]);
    g.markers[4] = marker(2);
    g.lists[2] = emit_list(clause[2]);
    g.markers[5] = marker(3);
    g.markers[6] = marker(2);
    g.markers[7] = marker(3);
    r.gadgets.push_back(g);

    if (i + 1 < n) {
      std::array<std::size_t, 4> sep{};
      for (std::size_t k = 0; k < 4; ++k) {
        sep[k] = k % 2 == 0 ? emit("g-" + idx, {LetterRole::separator, i + 1, 0})
                            : emit("gp-" + idx, {LetterRole::separator_prime, i + 1, 0});
      }
      r.separators.push_back(sep);
    }
  }
  r.h = Sequence(std::move(letters), std::move(alphabet), ParseMode::tokens);

  // Occurrence-count and length invariants of the construction.
  const std::size_t expected_len = 4 * m + 8 * n + (n > 0 ? 4 * (n - 1) : 0);
  if (r.h.size() != expected_len)
    throw ConstructionError("H has " + std::to_string(r.h.size()) + " letters, expected " +
                            std::to_string(expected_len));
  OccurrenceIndex occ(r.h);
  for (LetterId id = 0; id < r.legend.size(); ++id) {
    const auto& e = r.legend[id];
    std::size_t want = (e.role == LetterRole::clause || (e.role == LetterRole::marker && e.marker == 2)) ? 4 : 2;
    if (occ.count(id) != want)
      throw ConstructionError("letter " + r.h.alphabet().token(id) + " occurs " + std::to_string(occ.count(id)) +
                              " times, expected " + std::to_string(want));
  }
  if (r.h.alphabet().size() != m + 3 * n + (n > 0 ? 2 * (n - 1) : 0))
    throw ConstructionError("some clause letter never appears in H");
  return r;
}

Assignment make_assignment(const SatInstance& f, std::vector<bool> values) {
  if (values.size() != f.variable_count) throw std::invalid_argument("assignment size differs from variable count");
  Assignment a{std::move(values), true};
  for (const auto& c : f.plus_clauses) {
    int truths = 0;
    for (std::size_t v : c) truths += a.values[v] ? 1 : 0;
    if (truths != 1) a.valid = false;
  }
  for (const auto& c : f.neg_clauses)
    if (a.values[c.vars[0]] && a.values[c.vars[1]]) a.valid = false;
  return a;
}

Assignment assignment_from_choices(const SatInstance& f, const std::vector<int>& choices) {
  if (choices.size() != f.plus_clauses.size()) throw std::invalid_argument("one choice per plus-clause required");
  std::vector<bool> values(f.variable_count, false);
  for (std::size_t i = 0; i < choices.size(); ++i) {
    if (choices[i] < 1 || choices[i] > 3)
      throw std::invalid_argument("choice for plus-clause " + std::to_string(i + 1) + " must be 1, 2 or 3");
    values[f.plus_clauses[i][static_cast<std::size_t>(choices[i] - 1)]] = true;
  }
  return make_assignment(f, std::move(values));
}

std::vector<int> chosen_literals(const SatInstance& f, const Assignment& a) {
  if (!a.valid) throw std::invalid_argument("assignment is not valid");
  std::vector<int> out;
  for (const auto& c : f.plus_clauses) {
    for (int k = 0; k < 3; ++k)
      if (a.values[c[static_cast<std::size_t>(k)]]) out.push_back(k + 1);
  }
  return out;
}

SrsDecomposition extract_witness(const SatInstance& f, const Assignment& a, const ReductionInstance& r) {
  if (!a.valid) throw std::invalid_argument("extract_witness requires a valid assignment");
  const std::vector<int> choice = chosen_literals(f, a);
  const Sequence& h = r.h;

  std::vector<Block> blocks;
  auto block = [&](std::vector<std::vector<std::size_t>> copies) {
    Block b;
    for (std::size_t p : copies.front()) b.root.push_back(h.at(p));
    b.exponent = static_cast<int>(copies.size());
    b.copies = std::move(copies);
    blocks.push_back(std::move(b));
  };
  auto keep_list = [&](const Span& s) {
    for (std::size_t p = s.first; p + 1 <= s.last; p += 2) block({{p}, {p + 1}});
  };

  for (std::size_t i = 0; i < r.gadgets.size(); ++i) {
    const auto& g = r.gadgets[i];
    const auto& mk = g.markers;
    switch (choice[i]) {
      case 1:
        block({{mk[0], mk[1]}, {mk[2], mk[3]}});
        keep_list(g.lists[1]);
        keep_list(g.lists[2]);
        block({{mk[5]}, {mk[7]}});
        break;
      case 2:
        keep_list(g.lists[0]);
        block({{mk[1], mk[2]}, {mk[3], mk[4]}});
        keep_list(g.lists[2]);
        block({{mk[5]}, {mk[7]}});
        break;
      default:
        keep_list(g.lists[0]);
        block({{mk[1]}, {mk[3]}});
        keep_list(g.lists[1]);
        block({{mk[4], mk[5]}, {mk[6], mk[7]}});
        break;
    }
    if (i < r.separators.size()) {
      const auto& s = r.separators[i];
      block({{s[0], s[1]}, {s[2], s[3]}});
    }
  }
  return merge_blocks(std::move(blocks));
}

namespace {

// Calls visit(choices) for every vector in {1,2,3}^count in lexicographic
// order until visit returns true.
template <class Visit>
bool enumerate_choices(std::size_t count, Visit visit) {
  std::vector<int> choices(count, 1);
  while (true) {
    if (visit(choices)) return true;
    std::size_t k = count;
    while (k > 0 && choices[k - 1] == 3) choices[--k] = 1;
    if (k == 0) return false;
    ++choices[k - 1];
  }
}

}  // namespace

std::optional<Assignment> brute_force_assignment(const SatInstance& f) {
  f.validate();
  if (f.plus_clauses.size() > kMaxBruteForce)
    throw SearchTooLarge("brute_force_assignment limited to " + std::to_string(kMaxBruteForce) + " plus-clauses");
  std::optional<Assignment> found;
  enumerate_choices(f.plus_clauses.size(), [&](const std::vector<int>& choices) {
    Assignment a = assignment_from_choices(f, choices);
    if (a.valid) found = std::move(a);
    return found.has_value();
  });
  return found;
}

std::optional<std::vector<int>> brute_force_coloring(const Graph& g) {
  g.validate();
  if (g.vertex_count > kMaxBruteForce)
    throw SearchTooLarge("brute_force_coloring limited to " + std::to_string(kMaxBruteForce) + " vertices");
  std::optional<std::vector<int>> found;
  enumerate_choices(g.vertex_count, [&](const std::vector<int>& colors) {
    for (auto [u, v] : g.edges)
      if (colors[u] == colors[v]) return false;
    found = colors;
    return true;
  });
  return found;
}

void write_dimacs(std::ostream& out, const SatInstance& f) {
  out << "c (3+,1,2-)-SAT instance: positive 3-clauses first, then negative 2-clauses\n"
      << "c valid assignments must make exactly one literal of each 3-clause true;\n"
      << "c plain CNF satisfiability only enforces at least one\n"
      << "p cnf " << f.variable_count << ' ' << f.plus_clauses.size() + f.neg_clauses.size() << '\n';
  for (const auto& c : f.plus_clauses) out << c[0] + 1 << ' ' << c[1] + 1 << ' ' << c[2] + 1 << " 0\n";
  for (const auto& c : f.neg_clauses) out << '-' << c.vars[0] + 1 << " -" << c.vars[1] + 1 << " 0\n";
}

}  // namespace lsrs::hardness
