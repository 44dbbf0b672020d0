#include <doctest.h>

#include "charbound/lie_registry.hpp"

using namespace charbound;
using namespace charbound::lie;
using exactnum::PrimePower;

namespace {

// independent order oracle: the closed product formulas, written directly
Int oracle_order(const GroupSpec& s) {
  const Int q(s.q.value);
  const int n = s.n;
  auto qp = [&](int k) { return ipow(q, k); };
  Int v = 1;
  switch (s.family) {
    case Family::A:
      v = ipow(q, n * (n - 1) / 2);
      for (int i = 2; i <= n; ++i) v *= qp(i) - 1;
      return v;
    case Family::TwoA:
      v = ipow(q, n * (n - 1) / 2);
      for (int i = 2; i <= n; ++i) v *= i % 2 ? qp(i) + 1 : qp(i) - 1;
      return v;
    case Family::B:
    case Family::C:
      v = ipow(q, n * n);
      for (int i = 1; i <= n; ++i) v *= qp(2 * i) - 1;
      return v;
    case Family::D:
      v = ipow(q, n * (n - 1)) * (qp(n) - 1);
      for (int i = 1; i < n; ++i) v *= qp(2 * i) - 1;
      return v;
    case Family::TwoD:
      v = ipow(q, n * (n - 1)) * (qp(n) + 1);
      for (int i = 1; i < n; ++i) v *= qp(2 * i) - 1;
      return v;
    case Family::ThreeD4:
      return ipow(q, 12) * (qp(8) + qp(4) + 1) * (qp(6) - 1) * (qp(2) - 1);
    case Family::G2:
      return ipow(q, 6) * (qp(6) - 1) * (qp(2) - 1);
    case Family::F4:
      return ipow(q, 24) * (qp(12) - 1) * (qp(8) - 1) * (qp(6) - 1) * (qp(2) - 1);
    case Family::E6:
      return ipow(q, 36) * (qp(12) - 1) * (qp(9) - 1) * (qp(8) - 1) * (qp(6) - 1) *
             (qp(5) - 1) * (qp(2) - 1);
    case Family::TwoE6:
      return ipow(q, 36) * (qp(12) - 1) * (qp(9) + 1) * (qp(8) - 1) * (qp(6) - 1) *
             (qp(5) + 1) * (qp(2) - 1);
    case Family::E7:
      v = ipow(q, 63);
      for (int d : {18, 14, 12, 10, 8, 6, 2}) v *= qp(d) - 1;
      return v;
    case Family::E8:
      v = ipow(q, 120);
      for (int d : {30, 24, 20, 18, 14, 12, 8, 2}) v *= qp(d) - 1;
      return v;
    case Family::TwoB2:
      return q * q * (q - 1) * (q * q + 1);
    case Family::TwoG2:
      return q * q * q * (q - 1) * (q * q * q + 1);
    case Family::TwoF4:
      return ipow(q, 12) * (q - 1) * (qp(3) + 1) * (qp(4) - 1) * (qp(6) + 1);
  }
  return 0;
}

}  // namespace

TEST_CASE("order examples") {
  CHECK(order(GroupSpec(Family::A, 2, PrimePower(5, 1))) == 120);
  CHECK(order(GroupSpec(Family::C, 2, PrimePower(3, 1))) == 51840);
  CHECK(order(GroupSpec(Family::TwoB2, PrimePower(2, 3))) == 29120);
  CHECK(order(GroupSpec(Family::G2, PrimePower(2, 1))) == 12096);
  CHECK(order(GroupSpec(Family::TwoA, 3, PrimePower(3, 1))) == 6048);  // SU3(3)
}

TEST_CASE("order reconstruction against the closed product formulas") {
  for (const auto& spec : all_specs(12, 16)) {
    CAPTURE(spec.name());
    CHECK(order(spec) == oracle_order(spec));
  }
}

TEST_CASE("center orders") {
  CHECK(center_order(GroupSpec(Family::A, 3, PrimePower(2, 2))) == 3);
  CHECK(center_order(GroupSpec(Family::C, 2, PrimePower(3, 1))) == 2);
  CHECK(center_order(GroupSpec(Family::E7, PrimePower(2, 1))) == 1);
  CHECK(center_order(GroupSpec(Family::D, 4, PrimePower(3, 1))) == 4);
  CHECK(center_order(GroupSpec(Family::TwoD, 4, PrimePower(3, 1))) == 2);
  CHECK(center_order(GroupSpec(Family::TwoA, 4, PrimePower(3, 1))) == 4);
}

TEST_CASE("weyl orders") {
  CHECK(weyl_order(GroupSpec(Family::A, 4, PrimePower(2, 1))) == 24);
  CHECK(weyl_order(GroupSpec(Family::C, 2, PrimePower(3, 1))) == 8);
  CHECK(weyl_order(GroupSpec(Family::G2, PrimePower(3, 1))) == 12);
  CHECK(weyl_order(GroupSpec(Family::E8, PrimePower(2, 1))) == 696729600);
  CHECK(weyl_order(GroupSpec(Family::D, 4, PrimePower(2, 1))) == 192);
}

TEST_CASE("torus entries examples") {
  {
    auto e = torus_entries(GroupSpec(Family::A, 3, PrimePower(2, 2)));
    REQUIRE(e.size() == 2);
    CHECK(e[0].order == 21);
    CHECK(e[0].e == 3);
    CHECK(e[0].normalizer_index == 3);
    CHECK(e[1].order == 15);
    CHECK(e[1].e == 2);
    CHECK(e[1].normalizer_index == 2);
  }
  {
    auto e = torus_entries(GroupSpec(Family::E8, PrimePower(2, 1)));
    REQUIRE(e.size() == 1);
    CHECK(e[0].order == 241);
    CHECK(e[0].normalizer_index == 24);
  }
  {
    auto e = torus_entries(GroupSpec(Family::TwoB2, PrimePower(2, 3)));
    REQUIRE(e.size() == 1);
    CHECK(e[0].order == 13);
    CHECK(e[0].normalizer_index == 4);
  }
  CHECK_THROWS_AS(torus_entries(GroupSpec(Family::TwoF4, PrimePower(2, 1))), unsupported_error);
}

TEST_CASE("center-gcd law and torus divisibility") {
  for (const auto& spec : all_specs(12, 16, /*classical_only=*/true)) {
    CAPTURE(spec.name());
    auto entries = torus_entries(spec);
    REQUIRE(entries.size() == 2);
    CHECK(gcd(entries[0].order, entries[1].order) == center_order(spec));
  }
  for (const auto& spec : all_specs(8, 9)) {
    GroupSpec s = spec;
    std::vector<TorusEntry> entries;
    try {
      entries = torus_entries(s);
    } catch (const unsupported_error&) {
      continue;
    }
    Int g = order(s);
    for (const auto& t : entries) {
      CAPTURE(s.name(), t.order_expr);
      CHECK(g % t.order == 0);
    }
  }
}

TEST_CASE("G2 torus routing by congruence") {
  auto a = torus_entries(GroupSpec(Family::G2, PrimePower(2, 2)));  // q = 4 = 1 mod 3
  CHECK(a[0].order_expr == "Phi6");
  CHECK(a[0].order == 13);
  auto b = torus_entries(GroupSpec(Family::G2, PrimePower(3, 1)));
  CHECK(b[0].order_expr == "Phi3");
  CHECK(b[0].order == 13);
}

TEST_CASE("sylow_cyclic") {
  CHECK(sylow_cyclic(GroupSpec(Family::C, 2, PrimePower(3, 1)), 5));
  CHECK(!sylow_cyclic(GroupSpec(Family::C, 2, PrimePower(3, 1)), 2));
  CHECK(sylow_cyclic(GroupSpec(Family::A, 3, PrimePower(2, 2)), 7));
  CHECK(sylow_cyclic(GroupSpec(Family::E8, PrimePower(2, 1)), 241));
  CHECK(!sylow_cyclic(GroupSpec(Family::C, 6, PrimePower(2, 1)), 5));
  CHECK_THROWS_AS(sylow_cyclic(GroupSpec(Family::C, 2, PrimePower(3, 1)), 3),
                  std::invalid_argument);
}

TEST_CASE("sylow_cyclic implies the p-part sits in one factor") {
  for (const auto& spec : all_specs(6, 5)) {
    std::vector<Int> primes;
    for (const auto& inst : order_product(spec).instances) {
      auto f = exactnum::factorize(inst.value);
      REQUIRE(f.complete());
      for (const auto& [r, e] : f.factors) primes.push_back(r);
    }
    for (const auto& p : primes) {
      if (p == spec.q.p) continue;
      if (!sylow_cyclic(spec, p)) continue;
      Int total = exactnum::p_part_split(order(spec), p).first;
      bool found = false;
      for (const auto& inst : order_product(spec).instances)
        if (exactnum::p_part_split(inst.value, p).first == total) found = true;
      CHECK(found);
    }
  }
}

TEST_CASE("quasi-simplicity and exception lists") {
  CHECK(!is_quasi_simple(GroupSpec(Family::A, 2, PrimePower(2, 1))));
  CHECK(!is_quasi_simple(GroupSpec(Family::A, 2, PrimePower(3, 1))));
  CHECK(is_quasi_simple(GroupSpec(Family::A, 2, PrimePower(2, 2))));
  CHECK(!is_quasi_simple(GroupSpec(Family::TwoA, 3, PrimePower(2, 1))));
  CHECK(!is_quasi_simple(GroupSpec(Family::G2, PrimePower(2, 1))));
  CHECK(is_table_exception(GroupSpec(Family::TwoA, 4, PrimePower(2, 1))));
  CHECK(is_table_exception(GroupSpec(Family::B, 3, PrimePower(2, 1))));
  CHECK(is_table_exception(GroupSpec(Family::C, 3, PrimePower(2, 1))));
  CHECK(is_table_exception(GroupSpec(Family::TwoA, 3, PrimePower(3, 1))));
  CHECK(is_table_exception(GroupSpec(Family::D, 4, PrimePower(2, 1))));
  CHECK(is_table_exception(GroupSpec(Family::TwoD, 4, PrimePower(2, 1))));
  CHECK(!is_table_exception(GroupSpec(Family::C, 2, PrimePower(3, 1))));
}

TEST_CASE("spec validation") {
  CHECK_THROWS_AS(GroupSpec(Family::A, 1, PrimePower(2, 1)), std::invalid_argument);
  CHECK_THROWS_AS(GroupSpec(Family::D, 3, PrimePower(2, 1)), std::invalid_argument);
  CHECK_THROWS_AS(GroupSpec(Family::TwoB2, PrimePower(2, 1)), std::invalid_argument);
  CHECK_THROWS_AS(GroupSpec(Family::TwoB2, PrimePower(2, 2)), std::invalid_argument);
  CHECK_THROWS_AS(GroupSpec(Family::TwoG2, PrimePower(3, 1)), std::invalid_argument);
  CHECK_NOTHROW(GroupSpec(Family::TwoG2, PrimePower(3, 3)));
  CHECK_NOTHROW(GroupSpec(Family::TwoF4, PrimePower(2, 1)));
}

TEST_CASE("names") {
  CHECK(GroupSpec(Family::A, 6, PrimePower(2, 1)).name() == "SL6(2)");
  CHECK(GroupSpec(Family::TwoA, 4, PrimePower(2, 1)).name() == "SU4(2)");
  CHECK(GroupSpec(Family::B, 3, PrimePower(2, 1)).name() == "Sp6(2)");
  CHECK(GroupSpec(Family::B, 3, PrimePower(3, 1)).name() == "Spin7(3)");
  CHECK(GroupSpec(Family::D, 4, PrimePower(2, 1)).name() == "O8+(2)");
  CHECK(GroupSpec(Family::TwoD, 4, PrimePower(2, 1)).name() == "O8-(2)");
  CHECK(GroupSpec(Family::TwoB2, PrimePower(2, 3)).name() == "2B2(8)");
}
