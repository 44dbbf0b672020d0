#include "charbound/regclasses.hpp"

#include <algorithm>

namespace charbound::regclasses {

using lie::Family;

const char* bound_source_name(BoundSource s) {
  switch (s) {
    case BoundSource::table_formula: return "table_formula";
    case BoundSource::exception_table: return "exception_table";
    case BoundSource::zsigmondy_6_2_table: return "zsigmondy_6_2_table";
  }
  return "?";
}

const std::vector<Z62Row>& zsigmondy62_table() {
  static const std::vector<Z62Row> rows = {
      {"SL6(2)", Family::A, 6, 1, 63, 9},
      {"SL7(2)", Family::A, 7, 2, 63, 9},
      {"SU4(2)", Family::TwoA, 4, 1, 9, 2},
      {"SU6(2)", Family::TwoA, 6, 2, 21, 3},
      {"SU7(2)", Family::TwoA, 7, 2, 63, 9},
      {"Sp6(2)", Family::B, 3, 1, 9, 1},
      {"O8+(2)", Family::D, 4, 1, 27, 3},
      {"O8-(2)", Family::TwoD, 4, 2, 9, 1},
  };
  return rows;
}

namespace {

const Z62Row* z62_lookup(const GroupSpec& spec, int row) {
  if (spec.q.value != 2) return nullptr;
  Family f = spec.family == Family::C ? Family::B : spec.family;
  for (const auto& r : zsigmondy62_table())
    if (r.family == f && r.n == spec.n && r.row == row) return &r;
  return nullptr;
}

}  // namespace

RegBound nreg_lower_bound(const GroupSpec& spec, const TorusEntry& entry) {
  RegBound rb{spec, entry.row, entry.order, entry.e, 0, BoundSource::table_formula};
  if (entry.e == 6 && spec.q.value == 2) {
    const Z62Row* z = z62_lookup(spec, entry.row);
    if (!z)
      throw lie::unsupported_error("nreg_lower_bound: (e,q)=(6,2) row without a stored value");
    if (entry.order != z->torus_order)
      throw std::logic_error("nreg_lower_bound: stored torus order mismatch");
    rb.bound = z->nreg;
    rb.source = BoundSource::zsigmondy_6_2_table;
    return rb;
  }
  if (lie::is_table_exception(spec))
    throw lie::unsupported_error("nreg_lower_bound: group excluded from the bound tables");
  Int b = rat_floor(entry.bound);
  rb.bound = b < 0 ? Int(0) : b;
  return rb;
}

bool two_regular_uses_stored_verdict(const GroupSpec& spec) {
  if (lie::is_table_exception(spec)) return true;
  // The table torus of F4(2) is Phi12(2) = 13 with normalizer index 12,
  // certifying only one class; the claim itself is known from character
  // table data and is stored.
  return spec.family == Family::F4 && spec.q.value == 2;
}

bool two_regular_classes_check(const GroupSpec& spec) {
  if (!lie::is_quasi_simple(spec))
    throw std::invalid_argument("two_regular_classes_check: group is not quasi-simple");
  if (two_regular_uses_stored_verdict(spec)) return true;

  auto entries = lie::torus_entries(spec);
  bool classical_like =
      spec.family == Family::A || spec.family == Family::TwoA || spec.family == Family::B ||
      spec.family == Family::C || spec.family == Family::D || spec.family == Family::TwoD;
  if (classical_like) {
    // The two torus images have coprime orders, so one certified class from
    // each torus yields two distinct classes modulo the centre.  A class
    // count bounded below by a positive rational is at least 1.
    for (const auto& entry : entries) {
      if (entry.e == 6 && spec.q.value == 2) {
        const Z62Row* z = z62_lookup(spec, entry.row);
        if (!z || z->nreg < 1) return false;
      } else if (entry.bound <= 0) {
        return false;
      }
    }
    return true;
  }
  // Exceptional types (E7 contributes two rows with the same bound): need
  // strictly more certified classes than the centre can fuse.
  Int z = lie::center_order(spec);
  for (const auto& entry : entries) {
    Int b = rat_floor(entry.bound);
    if (b > z) return true;
  }
  return false;
}

std::vector<RegBound> scan_all(int rank_max, std::int64_t q_max) {
  if (rank_max < 2 || q_max < 2)
    throw std::invalid_argument("scan_all: need rank_max >= 2, q_max >= 2");
  std::vector<RegBound> out;
  for (const auto& spec : lie::all_specs(rank_max, q_max)) {
    if (!lie::is_quasi_simple(spec)) continue;
    std::vector<TorusEntry> entries;
    try {
      entries = lie::torus_entries(spec);
    } catch (const lie::unsupported_error&) {
      continue;
    }
    for (const auto& entry : entries) {
      try {
        out.push_back(nreg_lower_bound(spec, entry));
      } catch (const lie::unsupported_error&) {
        RegBound rb{spec, entry.row, entry.order, entry.e, 0, BoundSource::exception_table};
        out.push_back(rb);
      }
    }
  }
  return out;
}

}  // namespace charbound::regclasses
