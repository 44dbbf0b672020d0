#pragma once

#include <string>
#include <vector>

#include "charbound/lie_registry.hpp"

namespace charbound::defchar {

using lie::GroupSpec;
using exactnum::PrimePower;

struct not_applicable_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DefCharCheck {
  std::string check_id;
  std::vector<std::pair<std::string, std::string>> params;
  Int lhs;
  Int rhs;
  bool pass = false;
  bool equality = false;  // lhs == rhs; flagged where strictness matters
  std::string note;
};

/// Prime-to-p part of |G| at the defining prime: the product of the
/// cyclotomic factor values.
Int pprime_order(const GroupSpec& spec);

/// Steinberg-degree square against the p'-order: q^(2N) > |G|_{p'}.
DefCharCheck steinberg_square_check(const GroupSpec& spec);

enum class SmallRankKind { SL2, SL3, SU3, Sp4, SL4, SU4 };

/// Sum-of-squares bounds from weight-count lower bounds over the faithful
/// restricted weight families of the small-rank groups, against the exact
/// p'-order of the simple quotient.
DefCharCheck small_rank_sum_check(SmallRankKind kind, std::int64_t p);

enum class SubgroupKind { E6, TwoE6, E7, SLn, SUn, SO2nPlus, SO2nMinus, Spn, SpinD, SpinB };

/// Squared subgroup-Steinberg degree lower bounds against the exact
/// p'-order of the ambient group.
DefCharCheck subgroup_degree_check(SubgroupKind kind, int n, const PrimePower& q);

/// Every defining-characteristic check over the grid, deterministic order.
std::vector<DefCharCheck> defchar_scan(int rank_max, std::int64_t q_max, std::int64_t p_max);

}  // namespace charbound::defchar
