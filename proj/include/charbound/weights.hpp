#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "charbound/bigint.hpp"

namespace charbound::weights {

enum class RSType { A1, A2, A3, C2 };

const char* rs_name(RSType t);

/// Integer vector in fundamental-weight coordinates.
using Weight = std::vector<int>;

/// A small root system with its Weyl group stored as an explicit list of
/// matrices acting on fundamental-weight coordinates.  For C2 the second
/// coordinate belongs to the minuscule fundamental weight, so the centre
/// of Sp4 acts by (-1)^{m2}.
class RootSystem {
 public:
  explicit RootSystem(RSType type);
  static const RootSystem& get(RSType type);

  RSType type() const { return type_; }
  int rank() const { return rank_; }
  std::size_t weyl_size() const { return weyl_.size(); }

  Weight apply(std::size_t w, const Weight& v) const;
  bool dominant(const Weight& v) const;
  Weight dominant_rep(const Weight& v) const;

  /// Expands v in the simple-root basis; returns false when v is not a
  /// nonnegative integral combination.
  bool root_coords(const Weight& v, std::vector<Int>* coeffs = nullptr) const;

  const std::vector<std::array<int, 9>>& weyl_matrices() const { return weyl_; }
  const std::vector<Weight>& simple_roots() const { return roots_; }

 private:
  RSType type_;
  int rank_;
  std::vector<Weight> roots_;                // alpha_i in weight coordinates
  std::vector<std::array<int, 9>> weyl_;     // row-major rank x rank
  std::array<std::array<long, 3>, 3> adj_{}; // adjugate of the root matrix
  long det_ = 1;
};

/// |W| / |Stab_W(w)| for dominant w.
std::int64_t weyl_orbit_size(const RootSystem& rs, const Weight& w);

/// All dominant mu with lambda - mu a nonnegative integral combination of
/// simple roots, paired with their Weyl orbit sizes; includes lambda.
/// Deterministic order: decreasing height, then lexicographic.
std::vector<std::pair<Weight, std::int64_t>> subdominant_weights(const RootSystem& rs,
                                                                 const Weight& lambda);

/// Sum of the orbit sizes over subdominant_weights: the number of distinct
/// weights of the characteristic-0 highest weight module, a lower bound
/// for dim L(lambda) at p-restricted lambda.
Int premet_bound(const RootSystem& rs, const Weight& lambda);

/// Closed-form evaluation of premet_bound; agrees with the orbit
/// enumeration everywhere (asserted over a grid in the tests) and stays
/// cheap for large coordinates.
std::int64_t weight_count(RSType type, const Weight& lambda);

enum class CCFamily { A2, A3, C2 };

/// Restriction of lambda to the centre of the simply connected group, as a
/// residue mod 3 (A2), mod 4 (A3), or mod 2 (C2).  q_sign selects the
/// split (+1) or twisted (-1) form; the residue formula is the same for
/// both.
int central_character(CCFamily family, const Weight& lambda, int q_sign = +1);

}  // namespace charbound::weights
