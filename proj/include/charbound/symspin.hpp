#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "charbound/bigint.hpp"

namespace charbound::symspin {

/// Partition with strictly decreasing positive parts; labels a spin
/// character of the double cover 2.S_n.
struct StrictPartition {
  std::vector<int> parts;

  explicit StrictPartition(std::vector<int> p);
  int n() const;
  int m() const { return static_cast<int>(parts.size()); }
  std::string str() const;
};

/// The two staircase families: p1(l) = (4l-3, 4l-7, ..., 1) of size
/// n1 = l(2l-1) and p2(l) = (4l-1, 4l-5, ..., 3) of size n2 = l(2l+1).
struct SpinFamilyIndex {
  int l;
  explicit SpinFamilyIndex(int l_);
  int n1() const { return l * (2 * l - 1); }
  int n2() const { return l * (2 * l + 1); }
  StrictPartition p1() const;
  StrictPartition p2() const;
};

/// Memoized n! (single-writer initialization behind a mutex, then
/// read-only).
const Int& factorial(int n);

Int binomial(int n, int k);

/// n! with every factor of 2 removed.
Int odd_part_factorial(int n);

/// Bar-length degree of the spin character labelled by a strict partition:
/// 2^floor((n-m)/2) * n!/prod(parts_i!) * prod_{i<j} (l_i-l_j)/(l_i+l_j),
/// evaluated in exact arithmetic with a final integrality check.
Int spin_degree(const StrictPartition& lambda);

/// Degree of chi_l^family for family in {1, 2}.
Int spin_family_degree(int l, int family);

/// Exact check of the closed-form degree ratio
/// chi_{l+1}^1/chi_l^1 = 2^(4l-1) C(n_{l+1,1}, 4l+1) / C(4l-1, 2l)
/// (family 2 analogously with 2^(4l+1)).
bool ratio_identity_check(int l, int family);

/// The two cross-multiplied sides of the ratio identity; equal iff the
/// identity holds.
std::pair<Int, Int> ratio_identity_sides(int l, int family);

/// (chi_l^1(1)^2 >= (n_{l,2}-1)!_{2'},  chi_l^2(1)^2 >= (n_{l+1,1}-1)!_{2'})
std::pair<bool, bool> star_inequality(int l);

/// Enumerates strict partitions of n in decreasing lexicographic order.
void for_each_strict_partition(int n, const std::function<void(const StrictPartition&)>& fn);

struct CoverageReport {
  int n = 0;
  Int max_degree;
  std::vector<int> witness;
  Int target;  // n!_{2'}
  bool pass = false;
  // The 2-modular irreducibility of the witness is not certified here;
  // the answer is degree-level only.
  const char* label = "degree-level only";
};

/// Searches all strict partitions of n (5 <= n < 120) for the maximal spin
/// degree and reports whether its square reaches n!_{2'}.
CoverageReport coverage_check(int n);

}  // namespace charbound::symspin
