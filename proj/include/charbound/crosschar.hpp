#pragma once

#include <string>
#include <vector>

#include "charbound/regclasses.hpp"

namespace charbound::crosschar {

using lie::GroupSpec;
using lie::TorusEntry;

/// One evaluation of the defect-zero contribution inequality for (G, p):
/// the selected torus must satisfy
///     nreg * |G|_{q'} * |P| >= |G|_q * |T|^2
/// with |P| the exact Sylow order (pass_exact) or its generic lower bound
/// (pass_generic).  Equivalently nreg * dl_degree^2 >= |G|_{p'}; both
/// routes are evaluated and asserted consistent.
struct StarCheck {
  StarCheck(GroupSpec s, Int p_) : spec(std::move(s)), p(std::move(p_)) {}
  GroupSpec spec;
  Int p;
  int torus_row = 0;
  Int torus_order;
  Int nreg_bound;
  Int dl_degree;         // |G^F : T|_{q'}
  Int sylow_order;       // exact p-part of |G|
  Int generic_sylow_lb;  // (rank+1)^2 classical, 25 exceptional, 121 for E8
  Int lhs;               // nreg * |G|_{q'} * |P_used|
  Int rhs;               // |G|_q * |T|^2
  Int contribution;      // nreg * dl_degree^2
  Int central_target;    // |G|_{p'} * |T|_p
  bool pass_generic = false;
  bool pass_exact = false;
  bool pass_central = false;
};

/// The table torus whose p-part matches the p-part of the centre.  Throws
/// lie::unsupported_error when no row qualifies, std::invalid_argument when
/// the Sylow p-subgroup is cyclic (those primes are excluded upstream).
TorusEntry select_torus(const GroupSpec& spec, const Int& p);

StarCheck star_check(const GroupSpec& spec, const Int& p, bool use_exact_sylow);

/// All primes dividing |G|, found by factoring each cyclotomic factor
/// value separately; incompletely factored values land in *unfactored.
std::vector<Int> candidate_primes(const GroupSpec& spec, std::vector<Int>* unfactored = nullptr);

struct Triple {
  int n;
  std::int64_t q;
  Int p;
  bool operator==(const Triple& o) const { return n == o.n && q == o.q && p == o.p; }
  bool operator<(const Triple& o) const {
    if (n != o.n) return n < o.n;
    if (q != o.q) return q < o.q;
    return p < o.p;
  }
  std::string str() const;
};

struct ResidualScan {
  std::vector<Triple> failures;   // generic-estimate failures, non-cyclic Sylow
  std::vector<Triple> rescued;    // pass again with the exact Sylow order
  std::vector<Triple> unrescued;  // (6,2,5) only; closed by stored data
  std::vector<std::string> specials;  // groups routed to stored verdicts
  std::vector<std::pair<std::string, std::string>> skipped_cyclic;  // (group, p)
  std::vector<std::string> discrepancies;  // anything outside the known shape
  std::vector<Int> unfactored;             // factorization coverage gaps
};

/// Scans Sp_{2n}(q) / Spin_{2n+1}(q) (identical order data) over
/// 2 <= n <= n_max, prime powers q <= q_max.
ResidualScan residual_scan(int n_max, std::int64_t q_max);

/// True iff this triple's failure is closed by the stored
/// character-table verdict (the Sp12(2), p = 5 case).
bool closed_by_stored_verdict(const Triple& t);

}  // namespace charbound::crosschar
