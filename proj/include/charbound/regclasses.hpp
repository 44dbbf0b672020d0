#pragma once

#include <vector>

#include "charbound/lie_registry.hpp"

namespace charbound::regclasses {

using lie::GroupSpec;
using lie::TorusEntry;

enum class BoundSource {
  table_formula,
  exception_table,
  zsigmondy_6_2_table,
};

const char* bound_source_name(BoundSource s);

/// A certified lower bound on the number of conjugacy classes of regular
/// semisimple elements meeting one maximal torus.
struct RegBound {
  GroupSpec spec;
  int row = 0;
  Int torus_order;
  int e = 0;
  Int bound;  // floored, clamped at 0
  BoundSource source = BoundSource::table_formula;
};

/// One row of the stored table covering the torus rows with Zsigmondy
/// index 6 at q = 2, where no primitive prime divisor exists.  Values are
/// transcribed from published character-table data, never recomputed.
struct Z62Row {
  const char* group;
  lie::Family family;
  int n;
  int row;
  long torus_order;
  long nreg;
};

const std::vector<Z62Row>& zsigmondy62_table();

/// Evaluates the table's bound for this torus row.  Rows with (e, q) =
/// (6, 2) route to the stored table; rows of the six excluded groups with
/// no stored value are unsupported.
RegBound nreg_lower_bound(const GroupSpec& spec, const TorusEntry& entry);

/// True iff the bounds certify at least two regular semisimple classes
/// with distinct images modulo the centre.  The six excluded groups and
/// F4(2) carry stored verdicts.
bool two_regular_classes_check(const GroupSpec& spec);

/// True when two_regular_classes_check resolves by stored verdict rather
/// than by bound evaluation.
bool two_regular_uses_stored_verdict(const GroupSpec& spec);

/// All bounds over the grid, ordered by (family, rank, q, torus row).
/// Non-quasd-simple specs are skipped.
std::vector<RegBound> scan_all(int rank_max, std::int64_t q_max);

}  // namespace charbound::regclasses
