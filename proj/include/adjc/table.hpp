#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "adjc/rootsys.hpp"

namespace adjc {

/// One factor of a tabulated variety: a rational homogeneous variety
/// letter_rank(nodes), possibly re-embedded by a Veronese map, or a point.
struct VarietyFactor {
  bool point = false;
  char letter = 'A';
  std::string rank_expr;  // "5", "r", "r-3"
  std::vector<int> nodes;
  int veronese = 1;
};

/// Disjoint union of products.
using VarietyDescriptor = std::vector<std::vector<VarietyFactor>>;

struct TableRecord {
  char letter = 'A';
  std::string rank_class;  // "6" or "r>=3"
  std::string cell;        // X_G, Z_m, Z_0, Y_m, Y_0
  VarietyDescriptor components;
};

struct ZeroPartRecord {
  char letter = 'A';
  std::string rank_class;
  std::vector<std::pair<char, std::string>> rank1;
  std::vector<std::pair<char, std::string>> rank2;
};

class FreudenthalTable {
 public:
  /// Parses the JSON data file; throws InvalidInput on malformed records.
  static FreudenthalTable parse(std::string_view json_text);
  /// The copy compiled into the library.
  static const FreudenthalTable& builtin();

  int version() const { return version_; }
  const std::vector<TableRecord>& records() const { return records_; }
  const std::vector<ZeroPartRecord>& zero_parts() const { return zero_parts_; }

  /// Throws InvalidInput when the type has no row.
  const TableRecord& record(DynkinType type, const std::string& cell) const;
  const ZeroPartRecord& zero_part(DynkinType type) const;
  bool covers(DynkinType type) const;

 private:
  int version_ = 0;
  std::vector<TableRecord> records_;
  std::vector<ZeroPartRecord> zero_parts_;
};

/// Column names in table order.
const std::vector<std::string>& table_cells();

bool rank_class_matches(const std::string& rank_class, DynkinType type);
/// Evaluates "r", "r-2", "r+1" or a literal against the group rank.
int evaluate_rank(const std::string& expr, int group_rank);

/// Component dimensions of a tabulated cell for a group of the given rank,
/// sorted. Low-rank members of the classical series are rewritten through
/// the usual isomorphisms (B1(1) = A1(1), D3 = A3, D2 = A1 x A1, Q^0 is two
/// points, and so on); a factor that degenerates to nothing empties its
/// product. Veronese markers do not change dimension.
std::vector<int> expected_dimensions(const VarietyDescriptor& descriptor, int group_rank);

/// Human-readable rendering with ranks substituted, e.g. "A1(1)xB3(1)".
std::string describe(const VarietyDescriptor& descriptor, int group_rank);

/// Expected g0^ss factors for the rank-one (1) or rank-two (2) downgrading.
std::vector<DynkinType> expected_zero_part(DynkinType type, int downgrade_rank);

}  // namespace adjc
