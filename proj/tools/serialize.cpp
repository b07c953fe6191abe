#include "serialize.hpp"

#include <ostream>

namespace lsrs::io {

std::string ingest(std::string_view text, ParseMode mode) {
  if (mode == ParseMode::tokens) return std::string(text);
  std::string out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty() || line.front() != '>') out.append(line);
    start = end + 1;
  }
  return out;
}

Json decomposition_json(const Sequence& seq, const SrsDecomposition& dec) {
  Json blocks = Json::array();
  for (const Block& b : dec.blocks) {
    Json root = Json::array();
    for (LetterId id : b.root) root.push_back(seq.alphabet().token(id));
    blocks.push_back({{"root", root}, {"exponent", b.exponent}, {"copies", b.copies}});
  }
  return blocks;
}

std::string_view table_kind_name(TableKind kind) {
  switch (kind) {
    case TableKind::Q2: return "q2";
    case TableKind::Q3: return "q3";
    case TableKind::C2set: return "c2";
    case TableKind::C3set: return "c3";
    case TableKind::Cset: return "c";
    case TableKind::S2: return "s2";
    case TableKind::S3: return "s3";
    case TableKind::L: return "l";
  }
  return "?";
}

Json table_json(const IntervalTable<int>& table) {
  Json rows = Json::array();
  for (std::size_t i = 1; i <= table.n(); ++i) {
    const int* row = table.row(i);
    rows.push_back(std::vector<int>(row, row + (table.n() - i + 1)));
  }
  return {{"kind", table_kind_name(table.kind())}, {"n", table.n()}, {"rows", rows}};
}

void write_table_csv(std::ostream& out, const IntervalTable<int>& table) {
  const std::size_t n = table.n();
  out << "i\\j";
  for (std::size_t j = 1; j <= n; ++j) out << ',' << j;
  out << '\n';
  for (std::size_t i = 1; i <= n; ++i) {
    out << i;
    for (std::size_t j = 1; j <= n; ++j) {
      out << ',';
      if (j >= i) out << table.at(i, j);
    }
    out << '\n';
  }
}

Json sat_json(const hardness::SatInstance& f) {
  Json plus = Json::array();
  for (const auto& c : f.plus_clauses) plus.push_back({c[0] + 1, c[1] + 1, c[2] + 1});
  Json neg = Json::array();
  for (std::size_t j = 0; j < f.neg_clauses.size(); ++j) {
    const auto& c = f.neg_clauses[j];
    Json entry{{"name", "F-" + std::to_string(j + 1)}, {"type", c.type}, {"vars", {c.vars[0] + 1, c.vars[1] + 1}}};
    if (c.type == 1) {
      entry["vertex"] = c.vertex;
      entry["colors"] = c.colors;
    } else {
      entry["edge"] = c.edge;
      entry["color"] = c.color;
    }
    neg.push_back(std::move(entry));
  }
  return {{"variables", f.variable_count}, {"plus_clauses", plus}, {"neg_clauses", neg}};
}

hardness::SatInstance sat_from_json(const Json& doc) {
  hardness::SatInstance f;
  auto variable = [&](const Json& v) -> std::size_t {
    const auto x = v.get<long long>();
    if (x < 1) throw hardness::ConstructionError("variables are numbered from 1");
    return static_cast<std::size_t>(x - 1);
  };
  try {
    f.variable_count = doc.at("variables").get<std::size_t>();
    for (const Json& c : doc.at("plus_clauses")) {
      if (c.size() != 3) throw hardness::ConstructionError("plus-clauses need exactly 3 variables");
      f.plus_clauses.push_back({variable(c[0]), variable(c[1]), variable(c[2])});
    }
    for (const Json& c : doc.at("neg_clauses")) {
      hardness::NegClause neg;
      neg.type = c.value("type", 2);
      const Json& vars = c.at("vars");
      if (vars.size() != 2) throw hardness::ConstructionError("negative clauses need exactly 2 variables");
      neg.vars = {variable(vars[0]), variable(vars[1])};
      neg.vertex = c.value("vertex", std::size_t{0});
      if (c.contains("colors")) neg.colors = c.at("colors").get<std::array<int, 2>>();
      neg.edge = c.value("edge", std::size_t{0});
      neg.color = c.value("color", 0);
      f.neg_clauses.push_back(neg);
    }
  } catch (const Json::exception& e) {
    throw hardness::ConstructionError(std::string("malformed SAT document: ") + e.what());
  }
  f.validate();
  return f;
}

std::string_view role_name(hardness::LetterRole role) {
  switch (role) {
    case hardness::LetterRole::clause: return "clause";
    case hardness::LetterRole::marker: return "marker";
    case hardness::LetterRole::separator: return "separator";
    case hardness::LetterRole::separator_prime: return "separator_prime";
  }
  return "?";
}

Json reduction_json(const hardness::ReductionInstance& r) {
  Json legend = Json::array();
  for (LetterId id = 0; id < r.legend.size(); ++id) {
    const auto& e = r.legend[id];
    Json entry{{"token", r.h.alphabet().token(id)}, {"role", role_name(e.role)}, {"index", e.index}};
    if (e.role == hardness::LetterRole::marker) entry["marker"] = e.marker;
    legend.push_back(std::move(entry));
  }
  Json gadgets = Json::array();
  for (const auto& g : r.gadgets) {
    Json lists = Json::array();
    for (const auto& s : g.lists) lists.push_back({s.first, s.last});
    gadgets.push_back({{"lists", lists}, {"markers", g.markers}});
  }
  return {{"length", r.h.size()},
          {"alphabet_size", r.h.alphabet().size()},
          {"h", r.h.render()},
          {"legend", legend},
          {"gadgets", gadgets},
          {"separators", r.separators}};
}

Json validation_json(const ValidationReport& report) {
  return {{"ok", report.ok()}, {"violations", report.violations}};
}

}  // namespace lsrs::io
