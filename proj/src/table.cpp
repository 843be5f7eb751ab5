#include "adjc/table.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <json.hpp>

#include "adjc/errors.hpp"
#include "adjc/torusfix.hpp"

namespace adjc {

namespace detail {
extern const std::string_view kFreudenthalTableJson;
}

namespace {

using nlohmann::json;

char parse_letter(const json& j) {
  auto s = j.get<std::string>();
  if (s.size() != 1 || s[0] < 'A' || s[0] > 'G') throw InvalidInput("table: bad type letter '" + s + "'");
  return s[0];
}

VarietyFactor parse_factor(const json& j) {
  VarietyFactor f;
  if (j.value("point", false)) {
    f.point = true;
    return f;
  }
  f.letter = parse_letter(j.at("type"));
  f.rank_expr = j.at("rank").get<std::string>();
  f.nodes = j.at("nodes").get<std::vector<int>>();
  std::sort(f.nodes.begin(), f.nodes.end());
  f.veronese = j.value("veronese", 1);
  if (f.nodes.empty() || f.veronese < 1) throw InvalidInput("table: bad factor");
  return f;
}

std::vector<std::pair<char, std::string>> parse_factor_list(const json& j) {
  std::vector<std::pair<char, std::string>> out;
  for (const auto& item : j) out.emplace_back(parse_letter(item.at(0)), item.at(1).get<std::string>());
  return out;
}

int gp_dim_of(char letter, int rank, const std::vector<int>& nodes) {
  if (!is_valid_type(letter, rank)) {
    throw StructuralError("table: no rule for " + DynkinType{letter, rank}.name());
  }
  auto datum = build_root_system(letter, rank);
  for (int n : nodes) {
    if (n < 1 || n > rank) throw StructuralError("table: node out of range for " + datum.name());
  }
  return gp_dimension(datum, ParabolicChoice{nodes});
}

bool nodes_are(const std::vector<int>& nodes, int n) { return nodes.size() == 1 && nodes[0] == n; }

// Components (by dimension) of a single factor after low-rank rewriting.
std::vector<int> factor_components(const VarietyFactor& f, int group_rank) {
  if (f.point) return {0};
  int k = evaluate_rank(f.rank_expr, group_rank);
  if (f.letter == 'B' && k < 2) {
    if (k == 1 && nodes_are(f.nodes, 1)) return {1};
    if (k <= 1 && (nodes_are(f.nodes, 1) || nodes_are(f.nodes, 2))) return {};
    throw StructuralError("table: no low-rank rule for B" + std::to_string(k));
  }
  if (f.letter == 'D' && k < 4) {
    if (nodes_are(f.nodes, 1)) {
      if (k == 3) return {gp_dim_of('A', 3, {2})};
      if (k == 2) return {2};
      if (k == 1) return {0, 0};
      return {};
    }
    if (nodes_are(f.nodes, 2)) {
      if (k == 3) return {gp_dim_of('A', 3, {1, 3})};
      if (k == 2) return {1, 1};
      return {};
    }
    throw StructuralError("table: no low-rank rule for D" + std::to_string(k));
  }
  return {gp_dim_of(f.letter, k, f.nodes)};
}

}  // namespace

FreudenthalTable FreudenthalTable::parse(std::string_view json_text) {
  FreudenthalTable table;
  try {
    auto doc = json::parse(json_text);
    if (doc.at("format").get<std::string>() != "adjc-freudenthal-table") {
      throw InvalidInput("table: unexpected format tag");
    }
    table.version_ = doc.at("version").get<int>();
    for (const auto& r : doc.at("records")) {
      TableRecord rec;
      rec.letter = parse_letter(r.at("type"));
      rec.rank_class = r.at("rank_class").get<std::string>();
      rec.cell = r.at("cell").get<std::string>();
      for (const auto& comp : r.at("components")) {
        std::vector<VarietyFactor> product;
        for (const auto& f : comp) product.push_back(parse_factor(f));
        if (product.empty()) throw InvalidInput("table: empty product");
        rec.components.push_back(std::move(product));
      }
      table.records_.push_back(std::move(rec));
    }
    for (const auto& z : doc.at("zero_parts")) {
      ZeroPartRecord rec;
      rec.letter = parse_letter(z.at("type"));
      rec.rank_class = z.at("rank_class").get<std::string>();
      rec.rank1 = parse_factor_list(z.at("rank1"));
      rec.rank2 = parse_factor_list(z.at("rank2"));
      table.zero_parts_.push_back(std::move(rec));
    }
  } catch (const json::exception& e) {
    throw InvalidInput(std::string("table: ") + e.what());
  }
  return table;
}

const FreudenthalTable& FreudenthalTable::builtin() {
  static const FreudenthalTable table = parse(detail::kFreudenthalTableJson);
  return table;
}

const TableRecord& FreudenthalTable::record(DynkinType type, const std::string& cell) const {
  for (const auto& r : records_) {
    if (r.letter == type.letter && r.cell == cell && rank_class_matches(r.rank_class, type)) return r;
  }
  throw InvalidInput("table: no entry for " + type.name() + " " + cell);
}

const ZeroPartRecord& FreudenthalTable::zero_part(DynkinType type) const {
  for (const auto& z : zero_parts_) {
    if (z.letter == type.letter && rank_class_matches(z.rank_class, type)) return z;
  }
  throw InvalidInput("table: no zero-part entry for " + type.name());
}

bool FreudenthalTable::covers(DynkinType type) const {
  return std::any_of(records_.begin(), records_.end(), [&](const TableRecord& r) {
    return r.letter == type.letter && rank_class_matches(r.rank_class, type);
  });
}

const std::vector<std::string>& table_cells() {
  static const std::vector<std::string> cells{"X_G", "Z_m", "Z_0", "Y_m", "Y_0"};
  return cells;
}

bool rank_class_matches(const std::string& rank_class, DynkinType type) {
  if (rank_class.rfind("r>=", 0) == 0) return type.rank >= std::stoi(rank_class.substr(3));
  return type.rank == std::stoi(rank_class);
}

int evaluate_rank(const std::string& expr, int group_rank) {
  if (expr.empty()) throw InvalidInput("table: empty rank expression");
  auto number = [&](std::string_view digits) {
    int v = 0;
    auto [end, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), v);
    if (ec != std::errc() || end != digits.data() + digits.size() || digits.empty()) {
      throw InvalidInput("table: bad rank '" + expr + "'");
    }
    return v;
  };
  if (expr[0] != 'r') return number(expr);
  if (expr.size() == 1) return group_rank;
  if (expr[1] != '-' && expr[1] != '+') throw InvalidInput("table: bad rank '" + expr + "'");
  int offset = number(std::string_view(expr).substr(2));
  return expr[1] == '-' ? group_rank - offset : group_rank + offset;
}

std::vector<int> expected_dimensions(const VarietyDescriptor& descriptor, int group_rank) {
  std::vector<int> dims;
  for (const auto& product : descriptor) {
    std::vector<int> acc{0};
    for (const auto& f : product) {
      std::vector<int> next;
      for (int a : acc) {
        for (int d : factor_components(f, group_rank)) next.push_back(a + d);
      }
      acc = std::move(next);
    }
    dims.insert(dims.end(), acc.begin(), acc.end());
  }
  std::sort(dims.begin(), dims.end());
  return dims;
}

std::string describe(const VarietyDescriptor& descriptor, int group_rank) {
  if (descriptor.empty()) return "empty";
  std::string out;
  for (std::size_t c = 0; c < descriptor.size(); ++c) {
    if (c) out += " + ";
    for (std::size_t i = 0; i < descriptor[c].size(); ++i) {
      const auto& f = descriptor[c][i];
      if (i) out += "x";
      if (f.point) {
        out += "pt";
        continue;
      }
      std::string body = std::string(1, f.letter) + std::to_string(evaluate_rank(f.rank_expr, group_rank)) + "(";
      for (std::size_t n = 0; n < f.nodes.size(); ++n) {
        if (n) body += ",";
        body += std::to_string(f.nodes[n]);
      }
      body += ")";
      out += f.veronese > 1 ? "v" + std::to_string(f.veronese) + "[" + body + "]" : body;
    }
  }
  return out;
}

std::vector<DynkinType> expected_zero_part(DynkinType type, int downgrade_rank) {
  if (downgrade_rank != 1 && downgrade_rank != 2) throw InvalidInput("downgrade rank must be 1 or 2");
  const auto& rec = FreudenthalTable::builtin().zero_part(type);
  std::vector<DynkinType> factors;
  for (const auto& [letter, expr] : downgrade_rank == 1 ? rec.rank1 : rec.rank2) {
    factors.push_back(DynkinType{letter, evaluate_rank(expr, type.rank)});
  }
  return normalize_factors(std::move(factors));
}

}  // namespace adjc
