#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "charbound/exactnum.hpp"

namespace charbound::oracle {

using exactnum::PrimePower;

/// 2x2 matrix over F_q, entries encoded as 0..q-1.
using Mat = std::array<std::uint8_t, 4>;

struct ClassInfo {
  std::int64_t rep;          // index into elements
  std::int64_t size;
  std::int64_t centralizer;  // counted directly, not inferred
};

/// SL2(q) listed element by element, with its conjugacy class
/// decomposition.  Field arithmetic for q = 4, 8, 9 runs over fixed
/// polynomial bases: x^2+x+1, x^3+x+1, x^2+1.
struct SmallGroup {
  PrimePower q;
  std::vector<Mat> elements;
  std::vector<ClassInfo> classes;

  std::int64_t order() const { return static_cast<std::int64_t>(elements.size()); }
};

/// Exhaustive enumeration; refuses q > 11.
SmallGroup enumerate(const PrimePower& q);

/// Number of conjugacy classes whose centralizer order is prime to the
/// defining prime.
int regular_ss_classes(const SmallGroup& g);

struct TorusSplit {
  std::int64_t count_q_minus_1 = 0;  // regular classes with centralizer q-1
  std::int64_t count_q_plus_1 = 0;   // regular classes with centralizer q+1
  Int bound_q_minus_1;               // floored table bound for torus q-1
  Int bound_q_plus_1;                // floored table bound for torus q+1
  bool pprime_ok = false;            // |G|_{p'} == q^2 - 1
  bool counts_ok = false;            // counts >= bounds per torus
};

/// Splits the regular classes by torus and compares against the table
/// bounds; requires q >= 4 (SL2(2), SL2(3) are not quasi-simple).
TorusSplit compare_with_tables(const SmallGroup& g);

}  // namespace charbound::oracle
