#include <doctest.h>

#include "oracles.hpp"
#include "ringlab/absorbing.hpp"

using namespace ringlab;

namespace {

WorkBudget fresh() { return WorkBudget(kDefaultWorkCeiling); }

}  // namespace

TEST_CASE("n-absorbing examples") {
  auto z4 = Ring::build("Z/4");
  Ideal z = zero_ideal(z4);
  WorkBudget b = fresh();
  AbsorbElems r = is_n_absorbing(z, 1, b);
  CHECK_FALSE(r.proven);
  CHECK(z4->format_tuple(r.witness) == "[2,2]");
  r = is_n_absorbing(z, 2, b);
  CHECK(r.proven);

  auto z12 = Ring::build("Z/12");
  Ideal z12z = zero_ideal(z12);
  r = is_n_absorbing(z12z, 2, b);
  CHECK_FALSE(r.proven);
  CHECK(z12->format_tuple(r.witness) == "[2,2,3]");
}

TEST_CASE("search agrees with the naive scan on small rings") {
  for (const char* text : {"Z/4", "Z/6", "Z/8", "Z/9", "Z/12",
                           "Z/2[u,v]/(u^2,u*v,v^2)", "Z/2 x Z/4"}) {
    auto ring = Ring::build(text);
    for (const auto& I : enumerate_ideals(ring)) {
      if (!I.proper()) continue;
      for (std::uint32_t n = 1; n <= 4; ++n) {
        WorkBudget b = fresh();
        CHECK(is_n_absorbing(I, n, b).proven ==
              oracles::naive_is_n_absorbing(I, n));
      }
    }
  }
}

TEST_CASE("absorbency is upward closed in n") {
  for (const char* text : {"Z/12", "Z/16", "Z/2[u,v]/(u^2,u*v,v^2)"}) {
    auto ring = Ring::build(text);
    for (const auto& I : enumerate_ideals(ring)) {
      if (!I.proper()) continue;
      bool prev = false;
      for (std::uint32_t n = 1; n <= 5; ++n) {
        WorkBudget b = fresh();
        bool cur = is_n_absorbing(I, n, b).proven;
        if (prev) CHECK(cur);
        prev = cur;
      }
    }
  }
}

TEST_CASE("omega on Z/m matches the prime factor count") {
  auto Omega = [](std::uint32_t m) {
    std::uint32_t c = 0;
    for (std::uint32_t d = 2; d * d <= m; ++d)
      while (m % d == 0) {
        ++c;
        m /= d;
      }
    return m > 1 ? c + 1 : c;
  };
  for (std::uint32_t m : {4, 5, 6, 8, 12, 16, 18, 30, 36}) {
    auto ring = Ring::build("Z/" + std::to_string(m));
    WorkBudget b = fresh();
    OmegaResult r = omega(zero_ideal(ring), 0, b);
    REQUIRE(r.finite());
    CHECK(r.n == Omega(m));
  }
}

TEST_CASE("omega examples with witnesses") {
  auto z4 = Ring::build("Z/4");
  WorkBudget b = fresh();
  OmegaResult r = omega(ideal_closure(z4, {2}), 0, b);
  REQUIRE(r.finite());
  CHECK(r.n == 1);
  CHECK(r.witness.empty());

  r = omega(zero_ideal(z4), 0, b);
  REQUIRE(r.finite());
  CHECK(r.n == 2);
  CHECK(z4->format_tuple(r.witness) == "[2,2]");

  auto z12 = Ring::build("Z/12");
  r = omega(zero_ideal(z12), 0, b);
  REQUIRE(r.finite());
  CHECK(r.n == 3);
  CHECK(z12->format_tuple(r.witness) == "[2,2,3]");
}

TEST_CASE("omega exceeds-bound reporting") {
  auto z12 = Ring::build("Z/12");
  WorkBudget b = fresh();
  OmegaResult r = omega(zero_ideal(z12), 2, b);
  CHECK(r.kind == OmegaResult::Kind::ExceedsBound);
  CHECK(r.n == 2);
  CHECK_FALSE(r.witness.empty());
}

TEST_CASE("work ceiling raises BoundError") {
  auto z30 = Ring::build("Z/30");
  WorkBudget tiny(50);
  CHECK_THROWS_AS(omega(zero_ideal(z30), 3, tiny), BoundError);
}

TEST_CASE("default omega bound dominates the true omega on the corpus") {
  for (const char* text : {"Z/4", "Z/6", "Z/8", "Z/12", "Z/16",
                           "Z/2[u,v]/(u^2,u*v,v^2)", "Z/2 x Z/4"}) {
    auto ring = Ring::build(text);
    for (const auto& I : enumerate_ideals(ring)) {
      if (!I.proper()) continue;
      std::uint32_t naive = oracles::naive_omega(I, 6);
      REQUIRE(naive > 0);
      CHECK(default_omega_bound(I) >= naive);
    }
  }
}

TEST_CASE("prime iff omega one") {
  for (const char* text : {"Z/4", "Z/6", "Z/12", "Z/2[u,v]/(u^2,u*v,v^2)"}) {
    auto ring = Ring::build(text);
    for (const auto& I : enumerate_ideals(ring)) {
      if (!I.proper()) continue;
      WorkBudget b = fresh();
      OmegaResult r = omega(I, 0, b);
      REQUIRE(r.finite());
      CHECK((r.n == 1) == is_prime(I));
    }
  }
}

TEST_CASE("strongly n-absorbing examples") {
  auto z4 = Ring::build("Z/4");
  IdealInterner in4(z4);
  std::vector<int> ids4;
  for (const auto& I : enumerate_ideals(z4)) ids4.push_back(in4.intern(I));
  WorkBudget b = fresh();
  // primes are strongly 1-absorbing
  AbsorbIdeals r =
      is_strongly_n_absorbing(ideal_closure(z4, {2}), 1, in4, ids4, b);
  CHECK(r.proven);
  r = is_strongly_n_absorbing(zero_ideal(z4), 2, in4, ids4, b);
  CHECK(r.proven);

  auto z12 = Ring::build("Z/12");
  IdealInterner in12(z12);
  std::vector<int> ids12;
  for (const auto& I : enumerate_ideals(z12)) ids12.push_back(in12.intern(I));
  r = is_strongly_n_absorbing(zero_ideal(z12), 2, in12, ids12, b);
  CHECK_FALSE(r.proven);
  REQUIRE(r.witness.size() == 3);
  // the multiset {(2),(2),(3)}, listed in ideal enumeration order
  std::vector<std::string> names;
  for (int id : r.witness) names.push_back(in12.ideal(id).render());
  CHECK(names == std::vector<std::string>{"(3)", "(2)", "(2)"});
}

TEST_CASE("strong implies plain on the corpus") {
  for (const char* text : {"Z/4", "Z/6", "Z/12", "Z/2[u,v]/(u^2,u*v,v^2)",
                           "Z/2 x Z/4"}) {
    auto ring = Ring::build(text);
    IdealInterner in(ring);
    std::vector<int> ids;
    for (const auto& I : enumerate_ideals(ring)) ids.push_back(in.intern(I));
    for (const auto& I : enumerate_ideals(ring)) {
      if (!I.proper()) continue;
      for (std::uint32_t n = 1; n <= 3; ++n) {
        WorkBudget b = fresh();
        bool strong = is_strongly_n_absorbing(I, n, in, ids, b).proven;
        WorkBudget b2 = fresh();
        bool plain = is_n_absorbing(I, n, b2).proven;
        if (strong) CHECK(plain);
      }
    }
  }
}

TEST_CASE("omega_strong equals omega on Z/n") {
  for (const char* text : {"Z/4", "Z/6", "Z/12"}) {
    auto ring = Ring::build(text);
    IdealInterner in(ring);
    std::vector<int> ids;
    for (const auto& I : enumerate_ideals(ring)) ids.push_back(in.intern(I));
    for (const auto& I : enumerate_ideals(ring)) {
      if (!I.proper()) continue;
      WorkBudget b = fresh();
      OmegaResult r = omega(I, 0, b);
      WorkBudget b2 = fresh();
      OmegaStrongResult s = omega_strong(I, 0, in, ids, b2);
      REQUIRE(r.finite());
      REQUIRE(s.kind == OmegaResult::Kind::Finite);
      CHECK(r.n == s.n);
    }
  }
}

TEST_CASE("reduction examples") {
  auto z16 = Ring::build("Z/16");
  IdealInterner in(z16);
  Ideal four = ideal_closure(z16, {4});
  Ideal two = ideal_closure(z16, {2});
  ReductionResult r = is_reduction(four, two, 0, in);
  CHECK(r.kind == ReductionResult::Kind::Proven);
  CHECK(r.k == 3);

  // I is a reduction of itself at k = 1
  r = is_reduction(two, two, 0, in);
  CHECK(r.kind == ReductionResult::Kind::Proven);
  CHECK(r.k == 1);

  auto z4 = Ring::build("Z/4");
  IdealInterner in4(z4);
  r = is_reduction(ideal_closure(z4, {2}), zero_ideal(z4), 0, in4);
  CHECK(r.kind == ReductionResult::Kind::Refuted);

  // (0) inside (2) in Z/6: (0)*(2)^k = (0) but (2)^(k+1) = (2); stabilizes
  auto z6 = Ring::build("Z/6");
  IdealInterner in6(z6);
  r = is_reduction(zero_ideal(z6), ideal_closure(z6, {2}), 0, in6);
  CHECK(r.kind == ReductionResult::Kind::NoCounterexampleUpTo);
  CHECK(r.stabilized);
}

TEST_CASE("witnesses are deterministic") {
  auto z12 = Ring::build("Z/12");
  for (int rep = 0; rep < 3; ++rep) {
    WorkBudget b = fresh();
    AbsorbElems r = is_n_absorbing(zero_ideal(z12), 2, b);
    CHECK(z12->format_tuple(r.witness) == "[2,2,3]");
  }
}
