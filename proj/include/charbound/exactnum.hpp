#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "charbound/bigint.hpp"

namespace charbound::exactnum {

// Thrown when a computation cannot be completed within its effort budget
// (e.g. a cofactor resisted factorization).
struct incomplete_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A nonnegative integer together with as much of its prime factorization as
/// was found: value = residue * prod p^e.  residue == 1 means complete.
struct NatFactored {
  Int value = 1;
  std::map<Int, int> factors;
  Int residue = 1;

  bool complete() const { return residue == 1; }
  Int reconstruct() const;
};

struct PrimePower {
  std::int64_t p = 0;
  int f = 0;
  std::int64_t value = 0;

  PrimePower() = default;
  PrimePower(std::int64_t p_, int f_);
  static PrimePower from_value(std::int64_t q);
};

// Deterministic Miller-Rabin over a fixed base list (proven exact below
// 3.3e24, which covers every quantity this project factors).
bool is_prime(const Int& n);

const std::vector<std::int64_t>& small_primes();  // primes below 10^5
std::vector<std::int64_t> primes_upto(std::int64_t n);
std::vector<PrimePower> prime_powers_upto(std::int64_t n);

/// Splits n = p_part * p_prime_part with p_part a power of p and
/// p not dividing p_prime_part.
std::pair<Int, Int> p_part_split(const Int& n, const Int& p);

/// Least d >= 1 with q^d = 1 (mod p); p prime, p not dividing q.
Int mult_order(const Int& q, const Int& p);

/// True iff q^e = 1 (mod p) and q^(e/l) != 1 for every prime l | e,
/// i.e. the multiplicative order of q mod p is exactly e.  Avoids
/// factoring p-1.
bool order_is_exactly(const Int& q, const Int& p, int e);

/// Value of the d-th cyclotomic polynomial at q (q >= 2, d >= 1).
Int cyclo_eval(int d, const Int& q);

inline constexpr std::int64_t kDefaultEffort = 1 << 22;

/// Trial division below 10^5 followed by a deterministic Brent-rho stage
/// bounded by effort_cap iterations; leftovers land in residue.
NatFactored factorize(const Int& n, std::int64_t effort_cap = kDefaultEffort);

/// All primes r | q^e - 1 whose multiplicative order mod r is exactly e
/// (the primitive prime divisors).  Empty exactly for (e, q) = (6, 2).
/// Requires e >= 3.
std::vector<Int> zsigmondy_primes(int e, const PrimePower& q);

/// Largest primitive prime divisor; throws if the set is empty.
Int zsigmondy_largest(int e, const PrimePower& q);

}  // namespace charbound::exactnum
