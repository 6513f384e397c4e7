#include <doctest.h>

#include "oracles.hpp"
#include "ringlab/series.hpp"

using namespace ringlab;

TEST_CASE("carrier construction") {
  auto z4 = Ring::build("Z/4");
  TruncSeries B(z4, 2);
  CHECK(B.carrier()->spec_text() == "Z/4[x]/(x^2)");
  CHECK(B.carrier()->size() == 16);

  auto r8 = Ring::build("Z/2[u,v]/(u^2,u*v,v^2)");
  TruncSeries B8(r8, 2);
  CHECK(B8.carrier()->size() == 64);

  auto p = Ring::build("Z/2 x Z/4");
  TruncSeries Bp(p, 3);
  CHECK(Bp.carrier()->size() == 512);
  CHECK(Bp.carrier()->components().size() == 2);

  // base variable named x forces a different series variable
  auto rx = Ring::build("Z/2[x]/(x^2)");
  TruncSeries Bx(rx, 2);
  CHECK(Bx.carrier()->size() == 16);

  TruncSeries B1(z4, 1);
  CHECK(B1.carrier()->size() == 4);
  CHECK(B1.x_elem() == 0);
}

TEST_CASE("coefficient view round-trips") {
  for (const char* text : {"Z/6", "Z/2[u,v]/(u^2,u*v,v^2)", "Z/2 x Z/4"}) {
    auto base = Ring::build(text);
    for (std::uint32_t N : {1u, 2u, 3u}) {
      TruncSeries B(base, N);
      for (Elem f = 0; f < B.carrier()->size(); ++f) {
        auto cs = B.coefficients(f);
        REQUIRE(cs.size() == N);
        CHECK(B.from_coefficients(cs) == f);
      }
      for (Elem r = 0; r < base->size(); ++r) {
        auto cs = B.coefficients(B.embed(r));
        CHECK(cs[0] == r);
        for (std::uint32_t e = 1; e < N; ++e) CHECK(cs[e] == 0);
      }
    }
  }
}

TEST_CASE("carrier arithmetic is truncated convolution") {
  auto z6 = Ring::build("Z/6");
  TruncSeries B(z6, 2);
  Elem x = B.x_elem();
  CHECK(B.carrier()->mul(x, x) == 0);  // x^2 dies at precision 2
  Elem f = B.from_coefficients({4, 3});  // 4 + 3x
  Elem g = B.from_coefficients({3, 4});  // 3 + 4x
  CHECK(B.carrier()->mul(f, g) == B.from_coefficients({0, 1}));  // = x
}

TEST_CASE("content examples") {
  auto z4 = Ring::build("Z/4");
  TruncSeries B(z4, 2);
  Elem f = B.from_coefficients({2, 2});
  CHECK(B.content_ideal(f).render() == "(2)");
  CHECK(B.content_ideal(0).is_zero());

  auto r64 = Ring::build("Z/2[u,v]/(u^3,u^2*v,u*v^2,v^3)");
  TruncSeries B64(r64, 2);
  Elem uvx = B64.from_coefficients(
      {r64->parse_element("u"), r64->parse_element("v")});
  Ideal c = B64.content_ideal(uvx);
  CHECK(oracles::to_set(c) ==
        oracles::naive_closure(r64, {r64->parse_element("u"),
                                     r64->parse_element("v")}));
}

TEST_CASE("epsilon examples") {
  auto z4 = Ring::build("Z/4");
  TruncSeries B(z4, 2);
  Ideal I = ideal_closure(z4, {2});
  Ideal eps = B.epsilon(I);
  CHECK(eps.size() == 4);  // {0, 2, 2x, 2+2x}
  CHECK(eps.contains(B.from_coefficients({2, 2})));
  CHECK_FALSE(eps.contains(B.from_coefficients({1, 2})));

  CHECK(B.epsilon(unit_ideal(z4)).size() == B.carrier()->size());

  // I^eps cap R = I for every ideal of every small corpus ring
  for (const char* text : {"Z/4", "Z/6", "Z/2[u,v]/(u^2,u*v,v^2)", "Z/2 x Z/4"}) {
    auto base = Ring::build(text);
    TruncSeries Bb(base, 2);
    for (const auto& J : enumerate_ideals(base))
      for (Elem r = 0; r < base->size(); ++r)
        CHECK(Bb.epsilon(J).contains(Bb.embed(r)) == J.contains(r));
  }
}

TEST_CASE("amount axioms hold on small carriers") {
  for (const char* text : {"Z/4", "Z/6", "Z/2 x Z/4"}) {
    auto base = Ring::build(text);
    for (std::uint32_t N : {2u, 3u}) {
      TruncSeries B(base, N);
      IdealInterner in(base);
      AxiomReport rep = check_amount_axioms(B, in);
      CHECK(rep.exhaustive);
      CHECK(rep.preserves_zero_one.proven());
      CHECK(rep.faithful.proven());
      CHECK(rep.homogeneous.proven());
      CHECK(rep.submultiplicative.proven());
    }
  }
}

TEST_CASE("broken amount map fails homogeneity") {
  // A'_f = R for f != 0 violates A_rf = r A_f
  auto z4 = Ring::build("Z/4");
  TruncSeries B(z4, 2);
  IdealInterner in(z4);
  AmountMap broken = [](const TruncSeries& S, Elem f, IdealInterner& interner) {
    return f == 0 ? interner.zero_id() : interner.unit_id();
  };
  AxiomReport rep = check_amount_axioms(B, in, {}, broken);
  CHECK(rep.preserves_zero_one.proven());
  CHECK(rep.faithful.proven());
  CHECK_FALSE(rep.homogeneous.passed());
  // lex-least witness: r = 2, f = 1 (A'_2 = R but 2 A'_1 = (2))
  REQUIRE(rep.homogeneous.witness.size() == 2);
  CHECK(rep.homogeneous.witness[0] == "2");
  CHECK(rep.homogeneous.witness[1] == "1");
}

TEST_CASE("amount formula exponent examples") {
  auto z4 = Ring::build("Z/4");
  TruncSeries B(z4, 2);
  IdealInterner in(z4);
  FormulaResult r =
      amount_formula_exponents(B, B.from_coefficients({2, 2}),
                               B.from_coefficients({2, 2}), 3, 3, in);
  REQUIRE(r.found);
  CHECK(r.m == 0);
  CHECK(r.n == 0);

  for (Elem g = 0; g < B.carrier()->size(); ++g) {
    FormulaResult one = amount_formula_exponents(B, B.embed(1), g, 3, 3, in);
    REQUIRE(one.found);
    CHECK(one.m == 0);
    CHECK(one.n == 0);
  }

  auto z6 = Ring::build("Z/6");
  TruncSeries B6(z6, 2);
  IdealInterner in6(z6);
  FormulaResult r6 = amount_formula_exponents(
      B6, B6.from_coefficients({2, 3}), B6.from_coefficients({3, 2}), 3, 3, in6);
  REQUIRE(r6.found);
  CHECK(r6.m == 0);
  CHECK(r6.n == 0);

  // truncation kills the formula at (x, x): A_x = R but x*x = 0
  FormulaResult rx = amount_formula_exponents(B, B.x_elem(), B.x_elem(), 5, 5, in);
  CHECK_FALSE(rx.found);
}

TEST_CASE("truncated carriers are not amount algebras; N=1 carriers are") {
  auto z4 = Ring::build("Z/4");
  {
    TruncSeries B(z4, 2);
    IdealInterner in(z4);
    AmountAlgebraReport rep = is_amount_algebra(B, in);
    CHECK(rep.axioms.all_proven());
    CHECK(rep.formula.refuted());
    // lex-least failing pair is (x, x)
    REQUIRE(rep.formula.witness.size() == 2);
    CHECK(rep.formula.witness[0] == "x");
    CHECK(rep.formula.witness[1] == "x");
    CHECK(rep.overall.refuted());
  }
  for (const char* text : {"Z/4", "Z/6", "Z/12", "Z/2[u,v]/(u^2,u*v,v^2)"}) {
    auto base = Ring::build(text);
    TruncSeries B1(base, 1);
    IdealInterner in(base);
    AmountAlgebraReport rep = is_amount_algebra(B1, in);
    CHECK(rep.overall.proven());
    CHECK(rep.max_m == 0);
    CHECK(rep.max_n == 0);
  }
}

TEST_CASE("epsilon properties hold regardless of the formula") {
  for (const char* text : {"Z/4", "Z/6", "Z/2[u,v]/(u^2,u*v,v^2)"}) {
    auto base = Ring::build(text);
    for (std::uint32_t N : {2u, 3u}) {
      TruncSeries B(base, N);
      IdealInterner in(base);
      AmountAlgebraReport rep = is_amount_algebra(B, in);
      CHECK(rep.epsilon_a.proven());
      CHECK(rep.epsilon_b.proven());
    }
  }
}

TEST_CASE("proposition invariants on carriers") {
  for (const char* text : {"Z/4", "Z/6", "Z/2 x Z/4"}) {
    auto base = Ring::build(text);
    TruncSeries B(base, 2);
    IdealInterner in(base);
    // A_r = (r) for embedded constants
    for (Elem r = 0; r < base->size(); ++r)
      CHECK(B.content_id(B.embed(r), in) == in.principal(r));
    // A_f A_g = (0) implies fg = 0, and f lies in A_f^eps
    for (Elem f = 0; f < B.carrier()->size(); ++f) {
      CHECK(B.in_epsilon(f, in.ideal(B.content_id(f, in))));
      for (Elem g = f; g < B.carrier()->size(); ++g) {
        int prod = in.product(B.content_id(f, in), B.content_id(g, in));
        if (prod == in.zero_id()) CHECK(B.carrier()->mul(f, g) == 0);
      }
    }
  }
}

TEST_CASE("per-pair reduction and radical laws follow the formula") {
  // wherever the amount formula holds at (m, n), A_fg is a reduction of
  // A_f A_g with k <= 1 + max(m, n), and A_f A_g <= sqrt(A_fg)
  for (const char* text : {"Z/4", "Z/6"}) {
    auto base = Ring::build(text);
    TruncSeries B(base, 2);
    IdealInterner in(base);
    for (Elem f = 0; f < B.carrier()->size(); ++f)
      for (Elem g = f; g < B.carrier()->size(); ++g) {
        FormulaResult r = amount_formula_exponents(B, f, g, 3, 3, in);
        if (!r.found) continue;
        Ideal afg = in.ideal(B.content_id(B.carrier()->mul(f, g), in));
        Ideal prod = in.ideal(
            in.product(B.content_id(f, in), B.content_id(g, in)));
        ReductionResult red =
            is_reduction(afg, prod, 1 + std::max(r.m, r.n) + 1, in);
        CHECK(red.kind == ReductionResult::Kind::Proven);
        CHECK(red.k <= 1 + std::max(r.m, r.n));
        CHECK(prod.elems.subset_of(radical(afg).elems));
      }
  }
}

TEST_CASE("gaussian, armendariz, mccoy on corrected witnesses") {
  auto z6 = Ring::build("Z/6");
  TruncSeries B(z6, 2);
  IdealInterner in(z6);

  Verdict gau = is_gaussian(B, in);
  REQUIRE(gau.refuted());
  CHECK(gau.witness == std::vector<std::string>{"x", "x"});

  Verdict arm = is_armendariz(B, in);
  REQUIRE(arm.refuted());
  CHECK(arm.witness == std::vector<std::string>{"x", "x"});

  Verdict mcc = mccoy_check(B);
  REQUIRE(mcc.refuted());
  CHECK(mcc.witness == std::vector<std::string>{"x"});

  // a field base does not rescue Gaussianness at N >= 2: x * x = 0
  auto f5 = Ring::build("Z/5");
  TruncSeries B5(f5, 2);
  IdealInterner in5(f5);
  CHECK(is_gaussian(B5, in5).refuted());

  // N = 1: the carrier is R itself; principal ideals multiply exactly
  for (const char* text : {"Z/4", "Z/6", "Z/12"}) {
    auto base = Ring::build(text);
    TruncSeries B1(base, 1);
    IdealInterner in1(base);
    Verdict g1 = is_gaussian(B1, in1);
    CHECK(g1.proven());
    // Gaussian implies Armendariz
    CHECK(is_armendariz(B1, in1).proven());
  }
}

TEST_CASE("gaussian implies armendariz wherever gaussian holds") {
  for (const char* text : {"Z/4", "Z/6", "Z/9", "Z/2[u,v]/(u^2,u*v,v^2)"}) {
    auto base = Ring::build(text);
    for (std::uint32_t N : {1u, 2u}) {
      TruncSeries B(base, N);
      IdealInterner in(base);
      if (is_gaussian(B, in).proven()) CHECK(is_armendariz(B, in).proven());
    }
  }
}

TEST_CASE("prime extension fails under truncation with witness (x, x)") {
  auto z4 = Ring::build("Z/4");
  TruncSeries B(z4, 2);
  Ideal P = ideal_closure(z4, {2});
  REQUIRE(is_prime(P));
  Ideal eps = B.epsilon(P);
  Verdict v = prime_scan(B.carrier(), eps);
  REQUIRE(v.refuted());
  CHECK(v.witness == std::vector<std::string>{"x", "x"});

  // N = 1 keeps primes prime
  TruncSeries B1(z4, 1);
  CHECK(prime_scan(B1.carrier(), B1.epsilon(P)).proven());
}

TEST_CASE("prime_scan agrees with structural primality on small rings") {
  for (const char* text : {"Z/12", "Z/2[u,v]/(u^2,u*v,v^2)", "Z/2 x Z/4"}) {
    auto ring = Ring::build(text);
    for (const auto& I : enumerate_ideals(ring)) {
      if (!I.proper()) continue;
      CHECK(prime_scan(ring, I).proven() == is_prime(I));
    }
  }
}

TEST_CASE("dm exponent examples") {
  auto z4 = Ring::build("Z/4");
  IdealInterner in4(z4);
  Poly f = parse_poly(z4, "2,2");
  DmResult r = dm_exponent(f, f, 0, in4);
  REQUIRE(r.found);
  CHECK(r.n == 0);
  CHECK_FALSE(r.anomaly);

  auto r64 = Ring::build("Z/2[u,v]/(u^3,u^2*v,u*v^2,v^3)");
  IdealInterner in64(r64);
  Poly uv = parse_poly(r64, "u,v");
  DmResult r2 = dm_exponent(uv, uv, 0, in64);
  REQUIRE(r2.found);
  CHECK(r2.n == 1);
  CHECK_FALSE(r2.anomaly);
  // the contents genuinely separate: uv witnesses c(f)c(g) != c(fg)
  Ideal cf = content(uv);
  Ideal cfg = content(poly_mul(uv, uv));
  Ideal prod = ideal_product(cf, cf);
  Elem uvelem = r64->parse_element("u*v");
  CHECK(prod.contains(uvelem));
  CHECK_FALSE(cfg.contains(uvelem));

  // constant g gives n = 0
  auto z6 = Ring::build("Z/6");
  IdealInterner in6(z6);
  Poly h = parse_poly(z6, "1,4,2");
  Poly c = parse_poly(z6, "3");
  DmResult r3 = dm_exponent(h, c, 0, in6);
  REQUIRE(r3.found);
  CHECK(r3.n == 0);
}

TEST_CASE("dm exponent stays within deg(g) exhaustively on Z/4, degree <= 2") {
  auto z4 = Ring::build("Z/4");
  IdealInterner in(z4);
  const std::uint32_t sz = z4->size();
  for (std::uint32_t fi = 0; fi < sz * sz * sz; ++fi)
    for (std::uint32_t gi = 0; gi < sz * sz * sz; ++gi) {
      Poly f = Poly::make(z4, {static_cast<Elem>(fi % sz),
                               static_cast<Elem>(fi / sz % sz),
                               static_cast<Elem>(fi / sz / sz)});
      Poly g = Poly::make(z4, {static_cast<Elem>(gi % sz),
                               static_cast<Elem>(gi / sz % sz),
                               static_cast<Elem>(gi / sz / sz)});
      if (g.is_zero()) continue;
      DmResult r = dm_exponent(f, g, 0, in);
      REQUIRE(r.found);
      CHECK_FALSE(r.anomaly);
      CHECK(r.n <= static_cast<std::uint32_t>(g.degree()));
    }
}

TEST_CASE("poly absorbing search") {
  auto z4 = Ring::build("Z/4");
  WorkBudget b(kDefaultWorkCeiling);
  PolyAbsorbResult r =
      poly_absorbing_search(ideal_closure(z4, {2}), 1, 1, b);
  CHECK_FALSE(r.refuted);

  auto z12 = Ring::build("Z/12");
  WorkBudget b2(kDefaultWorkCeiling);
  r = poly_absorbing_search(zero_ideal(z12), 2, 0, b2);
  REQUIRE(r.refuted);
  REQUIRE(r.witness.size() == 3);
  CHECK(r.witness[0].render() == "2");
  CHECK(r.witness[1].render() == "2");
  CHECK(r.witness[2].render() == "3");

  WorkBudget b3(kDefaultWorkCeiling);
  r = poly_absorbing_search(zero_ideal(z4), 2, 1, b3);
  CHECK_FALSE(r.refuted);
}

TEST_CASE("poly arithmetic and rendering") {
  auto z4 = Ring::build("Z/4");
  Poly f = parse_poly(z4, "2,2");
  CHECK(f.render() == "2 + 2*x");
  Poly sq = poly_mul(f, f);
  CHECK(sq.is_zero());  // (2+2x)^2 = 4 + 8x + 4x^2 = 0 mod 4
  CHECK(sq.degree() == -1);
  Poly g = parse_poly(z4, "1,0,3");
  CHECK(g.render() == "1 + 3*x^2");
  CHECK(poly_truncate(g, 2).render() == "1");
  CHECK(poly_add(g, g).render() == "2 + 2*x^2");
  Poly z = parse_poly(z4, "0,0,0");
  CHECK(z.is_zero());
  auto r8 = Ring::build("Z/2[u,v]/(u^2,u*v,v^2)");
  Poly mixed = parse_poly(r8, "1+u,v");
  CHECK(mixed.render() == "(1+u) + v*x");
  CHECK(parse_poly(r8, "(1+u),v") == mixed);
}
