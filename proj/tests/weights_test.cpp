#include <doctest.h>

#include "charbound/weights.hpp"

using namespace charbound;
using namespace charbound::weights;

TEST_CASE("weyl group sizes") {
  CHECK(RootSystem::get(RSType::A1).weyl_size() == 2);
  CHECK(RootSystem::get(RSType::A2).weyl_size() == 6);
  CHECK(RootSystem::get(RSType::A3).weyl_size() == 24);
  CHECK(RootSystem::get(RSType::C2).weyl_size() == 8);
}

TEST_CASE("orbit sizes") {
  const auto& a2 = RootSystem::get(RSType::A2);
  CHECK(weyl_orbit_size(a2, {1, 0}) == 3);
  CHECK(weyl_orbit_size(a2, {0, 0}) == 1);
  CHECK(weyl_orbit_size(a2, {1, 1}) == 6);
  const auto& c2 = RootSystem::get(RSType::C2);
  CHECK(weyl_orbit_size(c2, {0, 1}) == 4);
  CHECK(weyl_orbit_size(c2, {1, 0}) == 4);
  CHECK(weyl_orbit_size(c2, {1, 1}) == 8);
  CHECK_THROWS_AS(weyl_orbit_size(a2, {-1, 0}), std::invalid_argument);
  // orbit size divides |W|
  const auto& a3 = RootSystem::get(RSType::A3);
  for (int a = 0; a <= 2; ++a)
    for (int b = 0; b <= 2; ++b)
      for (int c = 0; c <= 2; ++c) CHECK(24 % weyl_orbit_size(a3, {a, b, c}) == 0);
}

TEST_CASE("subdominant weights") {
  const auto& a2 = RootSystem::get(RSType::A2);
  {
    auto sub = subdominant_weights(a2, {2, 1});
    REQUIRE(sub.size() == 3);
    CHECK(sub[0].first == Weight{2, 1});
    CHECK(sub[0].second == 6);
    std::int64_t total = 0;
    for (const auto& [w, o] : sub) total += o;
    CHECK(total == 12);
  }
  {
    auto sub = subdominant_weights(a2, {1, 0});
    REQUIRE(sub.size() == 1);
    CHECK(sub[0].second == 3);
  }
  {
    const auto& a1 = RootSystem::get(RSType::A1);
    auto sub = subdominant_weights(a1, {3});
    REQUIRE(sub.size() == 2);
    CHECK(sub[0].first == Weight{3});
    CHECK(sub[1].first == Weight{1});
    CHECK(sub[0].second == 2);
    CHECK(sub[1].second == 2);
  }
  {
    // every subdominant difference expands nonnegatively in simple roots
    const auto& c2 = RootSystem::get(RSType::C2);
    for (const auto& [w, o] : subdominant_weights(c2, {3, 4})) {
      Weight diff = {3 - w[0], 4 - w[1]};
      CHECK(c2.root_coords(diff));
    }
  }
}

TEST_CASE("premet examples") {
  const auto& a2 = RootSystem::get(RSType::A2);
  CHECK(premet_bound(a2, {2, 1}) == 12);
  CHECK(premet_bound(a2, {3, 2}) == 27);
  CHECK(premet_bound(RootSystem::get(RSType::A1), {1}) == 2);
  CHECK(premet_bound(RootSystem::get(RSType::C2), {0, 1}) == 4);
  CHECK(premet_bound(RootSystem::get(RSType::A3), {1, 0, 1}) == 13);  // adjoint of sl4
}

TEST_CASE("closed-form counts agree with orbit enumeration") {
  const auto& a1 = RootSystem::get(RSType::A1);
  for (int a = 0; a <= 30; ++a) CHECK(premet_bound(a1, {a}) == weight_count(RSType::A1, {a}));
  const auto& a2 = RootSystem::get(RSType::A2);
  for (int a = 0; a <= 9; ++a)
    for (int b = 0; b <= 9; ++b) {
      CAPTURE(a, b);
      CHECK(premet_bound(a2, {a, b}) == weight_count(RSType::A2, {a, b}));
    }
  const auto& c2 = RootSystem::get(RSType::C2);
  for (int a = 0; a <= 9; ++a)
    for (int b = 0; b <= 9; ++b) {
      CAPTURE(a, b);
      CHECK(premet_bound(c2, {a, b}) == weight_count(RSType::C2, {a, b}));
    }
  const auto& a3 = RootSystem::get(RSType::A3);
  for (int a = 0; a <= 5; ++a)
    for (int b = 0; b <= 5; ++b)
      for (int c = 0; c <= 5; ++c) {
        CAPTURE(a, b, c);
        CHECK(premet_bound(a3, {a, b, c}) == weight_count(RSType::A3, {a, b, c}));
      }
}

TEST_CASE("stated closed-form lower bounds hold") {
  // 3i^2 for the (i, i-1) family
  const auto& a2 = RootSystem::get(RSType::A2);
  for (int i = 1; i <= 20; ++i) {
    Int b = premet_bound(a2, {i, i - 1});
    CHECK(b >= 3 * i * i);
    CHECK(b == 3 * i * i);  // observed equality, kept as regression
  }
  // 2i^2 + (8j+6)i + 4(j+1)^2 for the (i, 2j+1) family
  const auto& c2 = RootSystem::get(RSType::C2);
  for (int i = 0; i <= 10; ++i)
    for (int j = 0; j <= 10; ++j) {
      Int b = premet_bound(c2, {i, 2 * j + 1});
      CHECK(b >= 2 * i * i + (8 * j + 6) * i + 4 * (j + 1) * (j + 1));
    }
}

TEST_CASE("central characters") {
  CHECK(central_character(CCFamily::A3, {1, 0, 0}) == 1);
  CHECK(central_character(CCFamily::A2, {0, 0}) == 0);
  for (int i = 0; i <= 5; ++i)
    for (int j = 0; j <= 5; ++j) CHECK(central_character(CCFamily::C2, {i, 2 * j + 1}) == 1);
  // the (i, i-1) family sits over one faithful character of the centre
  for (int i = 1; i <= 10; ++i) CHECK(central_character(CCFamily::A2, {i, i - 1}) == 1);
  // additivity in the residue group
  for (int a = 0; a <= 3; ++a)
    for (int b = 0; b <= 3; ++b)
      for (int c = 0; c <= 3; ++c) {
        int lhs = central_character(CCFamily::A3, {a + 1, b + 2, c + 3});
        int rhs = (central_character(CCFamily::A3, {a, b, c}) +
                   central_character(CCFamily::A3, {1, 2, 3})) %
                  4;
        CHECK(lhs == rhs);
      }
  CHECK_THROWS_AS(central_character(CCFamily::A2, {1, 0}, 0), std::invalid_argument);
}
