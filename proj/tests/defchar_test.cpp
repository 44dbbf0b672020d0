#include <doctest.h>

#include "charbound/defchar.hpp"

using namespace charbound;
using namespace charbound::defchar;
using lie::Family;
using lie::GroupSpec;
using exactnum::PrimePower;

TEST_CASE("steinberg square examples") {
  auto a = steinberg_square_check(GroupSpec(Family::A, 2, PrimePower(5, 1)));
  CHECK(a.lhs == 25);
  CHECK(a.rhs == 24);
  CHECK(a.pass);

  auto b = steinberg_square_check(GroupSpec(Family::C, 2, PrimePower(3, 1)));
  CHECK(b.lhs == 6561);
  CHECK(b.rhs == 640);
  CHECK(b.pass);

  CHECK(steinberg_square_check(GroupSpec(Family::E8, PrimePower(2, 1))).pass);
  CHECK(steinberg_square_check(GroupSpec(Family::TwoB2, PrimePower(2, 3))).pass);
}

TEST_CASE("steinberg square across the grid") {
  for (const auto& spec : lie::all_specs(8, 9)) {
    if (!lie::is_quasi_simple(spec)) continue;
    CAPTURE(spec.name());
    CHECK(steinberg_square_check(spec).pass);
  }
}

TEST_CASE("small rank sums") {
  auto sl2 = small_rank_sum_check(SmallRankKind::SL2, 3);
  CHECK(sl2.lhs == 4);
  CHECK(sl2.rhs == 4);
  CHECK(sl2.pass);
  CHECK(sl2.equality);

  auto sl3 = small_rank_sum_check(SmallRankKind::SL3, 7);
  CHECK(sl3.lhs == 20475);
  CHECK(sl3.rhs == 5504);
  CHECK(sl3.pass);

  auto sp4 = small_rank_sum_check(SmallRankKind::Sp4, 3);
  CHECK(sp4.lhs == 736);
  CHECK(sp4.lhs > 729);  // the intermediate estimate p^6
  CHECK(sp4.rhs == 320);
  CHECK(sp4.pass);

  auto sl4 = small_rank_sum_check(SmallRankKind::SL4, 3);
  CHECK(sl4.lhs == 28288);
  CHECK(sl4.rhs == 8320);
  CHECK(sl4.pass);

  auto su4 = small_rank_sum_check(SmallRankKind::SU4, 3);
  CHECK(su4.lhs == 28288);
  CHECK(su4.rhs == 4480);
  CHECK(su4.pass);

  CHECK_THROWS_AS(small_rank_sum_check(SmallRankKind::SL2, 2), not_applicable_error);
  CHECK_THROWS_AS(small_rank_sum_check(SmallRankKind::SL3, 5), not_applicable_error);
  CHECK_THROWS_AS(small_rank_sum_check(SmallRankKind::SU3, 7), not_applicable_error);
  CHECK_NOTHROW(small_rank_sum_check(SmallRankKind::SU3, 5));
}

TEST_CASE("small rank sums for every applicable p <= 61") {
  for (std::int64_t p : exactnum::primes_upto(61)) {
    for (auto kind : {SmallRankKind::SL2, SmallRankKind::SL3, SmallRankKind::SU3,
                      SmallRankKind::Sp4, SmallRankKind::SL4, SmallRankKind::SU4}) {
      try {
        auto c = small_rank_sum_check(kind, p);
        CAPTURE(p, static_cast<int>(kind));
        CHECK(c.pass);
      } catch (const not_applicable_error&) {
      }
    }
  }
}

TEST_CASE("subgroup degree arguments") {
  auto sln = subgroup_degree_check(SubgroupKind::SLn, 6, PrimePower(2, 1));
  CHECK(sln.lhs == 1048576);
  CHECK(sln.rhs == 615195);
  CHECK(sln.pass);
  CHECK(!sln.equality);

  auto e7 = subgroup_degree_check(SubgroupKind::E7, 0, PrimePower(3, 1));
  CHECK(e7.lhs == ipow(Int(3), 72));
  CHECK(e7.pass);

  auto sp10 = subgroup_degree_check(SubgroupKind::Spn, 5, PrimePower(3, 1));
  CHECK(sp10.pass);

  auto spin = subgroup_degree_check(SubgroupKind::SpinD, 3, PrimePower(3, 2));
  CHECK(spin.pass);
  auto spinb = subgroup_degree_check(SubgroupKind::SpinB, 3, PrimePower(3, 2));
  CHECK(spinb.pass);

  CHECK_THROWS_AS(subgroup_degree_check(SubgroupKind::SLn, 5, PrimePower(2, 1)),
                  not_applicable_error);
  CHECK_THROWS_AS(subgroup_degree_check(SubgroupKind::E6, 0, PrimePower(2, 1)),
                  not_applicable_error);
  CHECK_NOTHROW(subgroup_degree_check(SubgroupKind::E6, 0, PrimePower(2, 2)));
  CHECK_THROWS_AS(subgroup_degree_check(SubgroupKind::Spn, 3, PrimePower(3, 1)),
                  not_applicable_error);
  CHECK_NOTHROW(subgroup_degree_check(SubgroupKind::Spn, 3, PrimePower(3, 2)));
}

TEST_CASE("unitary telescoping estimate") {
  // (q^k - 1)(q^{k+1} + 1) <= q^{2k+1} for all k >= 2
  for (long q = 2; q <= 16; ++q)
    for (int k = 2; k <= 40; ++k) {
      Int Q(q);
      CHECK((ipow(Q, k) - 1) * (ipow(Q, k + 1) + 1) <= ipow(Q, 2 * k + 1));
    }
}

TEST_CASE("field-extension scaling of the Steinberg square") {
  // If the check holds over the prime field, the twisted tensor degrees
  // cover every extension: q^{2N(r-1)} * p^{2N} >= |G(p^r)|_{p'}.
  for (std::int64_t p : {2, 3, 5}) {
    for (int r = 2; r <= 3; ++r) {
      PrimePower q(p, r);
      for (const auto& fam : {Family::A, Family::TwoA, Family::B, Family::C}) {
        int nmin = fam == Family::TwoA ? 3 : 2;
        for (int n = nmin; n <= 4; ++n) {
          GroupSpec base(fam, n, PrimePower(p, 1));
          GroupSpec ext(fam, n, q);
          int N = lie::order_product(base).q_exponent;
          Int lhs = ipow(Int(q.value), 2 * N * (r - 1)) * ipow(Int(p), 2 * N);
          CAPTURE(ext.name());
          CHECK(lhs >= pprime_order(ext));
        }
      }
    }
  }
}

TEST_CASE("defchar scan shape") {
  auto checks = defchar_scan(4, 4, 13);
  CHECK(!checks.empty());
  int opens = 0;
  for (const auto& c : checks) {
    CAPTURE(c.check_id);
    if (c.check_id == "open-case") {
      ++opens;
      continue;
    }
    CHECK(c.pass);
  }
  CHECK(opens > 0);
}
