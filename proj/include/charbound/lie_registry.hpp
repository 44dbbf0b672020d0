#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "charbound/exactnum.hpp"

namespace charbound::lie {

using exactnum::PrimePower;

struct unsupported_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class Family {
  A,      // SL_n,  parameter n >= 2
  TwoA,   // SU_n,  parameter n >= 3
  B,      // Spin_{2n+1}, n >= 2
  C,      // Sp_{2n}, n >= 2
  D,      // Spin_{2n}^+, n >= 4
  TwoD,   // Spin_{2n}^-, n >= 4
  ThreeD4,
  TwoB2,  // field parameter Q = 2^{2f+1} >= 8
  TwoG2,  // field parameter Q = 3^{2f+1} >= 27
  TwoF4,  // field parameter Q = 2^{2f+1} (Q = 2 has no torus data)
  G2,
  F4,
  E6,
  TwoE6,
  E7,
  E8,
};

const char* family_name(Family f);
bool family_twisted_field(Family f);  // Suzuki/Ree arithmetic over Q

/// A finite group of Lie type in simply connected form.  For A the stored
/// rank parameter n means SL_n; for 2A it means SU_n.  For the Suzuki and
/// Ree families q holds the full field parameter Q as an odd power of 2
/// resp. 3.
struct GroupSpec {
  Family family;
  int n;  // rank parameter (ignored for the exceptional families)
  PrimePower q;

  GroupSpec(Family f, int n_, PrimePower q_);
  GroupSpec(Family f, PrimePower q_);  // exceptional types

  int rank() const;  // untwisted Lie rank
  std::string name() const;
  bool operator==(const GroupSpec& o) const {
    return family == o.family && n == o.n && q.value == o.q.value;
  }
};

/// One integer factor of the order formula, e.g. a cyclotomic value
/// Phi_d(q), or one of the irrational halves Phi_8'', Phi_24'' evaluated
/// exactly over Q for the Suzuki/Ree types.
struct OrderFactor {
  std::string label;
  int d = 0;  // cyclotomic index; 0 for the irrational Suzuki/Ree halves
  Int value;
};

/// |G| = q^N * prod of factors, each factor listed as many times as it
/// occurs.
struct CycloProduct {
  int q_exponent = 0;  // number of positive roots N
  std::map<int, int> factors;  // d -> multiplicity (twisted halves excluded)
  std::vector<OrderFactor> instances;  // every factor occurrence, in order
  Int evaluate(const Int& q) const;
};

struct TorusEntry {
  int row = 0;                  // position within the family block
  std::string order_expr;       // the torus order column, as printed
  Int order;
  int e = 0;                    // Zsigmondy index; 0 when none applies
  Int normalizer_index;
  std::string bound_expr;       // the lower-bound column, as printed
  Rat bound;                    // evaluated exactly (may be 0 or negative)
  bool noncyclic_image = false; // image in the adjoint quotient not cyclic
};

CycloProduct order_product(const GroupSpec& spec);
Int order(const GroupSpec& spec);

/// Order of the centre of the simply connected form.
Int center_order(const GroupSpec& spec);

/// Order of the (untwisted) Weyl group.
Int weyl_order(const GroupSpec& spec);

/// The applicable torus rows for this group, fully instantiated at (n, q).
/// Classical families always yield exactly two rows whose orders have
/// gcd equal to center_order.
std::vector<TorusEntry> torus_entries(const GroupSpec& spec);

/// True iff the Sylow p-subgroup of G is cyclic, for p not dividing q.
/// Decided from the order formula: the p-part of |G| must be carried by a
/// single factor instance.
bool sylow_cyclic(const GroupSpec& spec, const Int& p);

/// False for the handful of groups in these families that are not
/// quasi-simple (SL2(2), SL2(3), SU3(2), Sp4(2)/Spin5(2), G2(2), 2F4(2)).
bool is_quasi_simple(const GroupSpec& spec);

/// The six groups excluded from the regular-class bound tables:
/// SU4(2), Sp4(2), Sp6(2), O8+(2), O8-(2), SU3(3).
bool is_table_exception(const GroupSpec& spec);

/// Every valid spec with rank parameter <= rank_max and field size <=
/// q_max, in deterministic (family, n, q) order.
std::vector<GroupSpec> all_specs(int rank_max, std::int64_t q_max,
                                 bool classical_only = false);

}  // namespace charbound::lie
