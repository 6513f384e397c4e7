// Acceptance suite: one line per criterion, exit code = number of failures.
//
// Criteria 4 and 5 assert properties of the truncated carrier R[x]/(x^N)
// that the untruncated series ring has but truncation destroys (x is
// nilpotent, so extensions of primes stop being prime and omega can grow).
// Those two print FAIL with the computed witnesses; the suite does not
// soften them. The harness itself stays sound: its checks verify the
// theorems' own hypotheses first, and no conclusion is ever refuted under
// verified hypotheses.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "ringlab/harness.hpp"
#include "ringlab/pid.hpp"

using namespace ringlab;

namespace {

const std::vector<std::string> kCorpus = {
    "Z/4",
    "Z/6",
    "Z/8",
    "Z/12",
    "Z/2[u,v]/(u^2,u*v,v^2)",
    "Z/2[u,v]/(u^3,u^2*v,u*v^2,v^3)",
    "Z/4[u]/(u^2)",
    "Z/2 x Z/4",
};

int failures = 0;
std::chrono::steady_clock::time_point t_start;

void begin(int) { t_start = std::chrono::steady_clock::now(); }

void report(int num, bool pass, const std::string& detail) {
  auto secs = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - t_start)
                  .count() /
              1000.0;
  std::printf("criterion %2d: %s  (%.1fs)  %s\n", num, pass ? "PASS" : "FAIL",
              secs, detail.c_str());
  std::fflush(stdout);
  if (!pass) ++failures;
}

std::uint32_t Omega(std::uint32_t m) {
  std::uint32_t c = 0;
  for (std::uint32_t d = 2; d * d <= m; ++d)
    while (m % d == 0) {
      ++c;
      m /= d;
    }
  return m > 1 ? c + 1 : c;
}

// 1. brute-force omega_{Z/m}((0)) equals Omega(m) for all m in 2..60
void criterion_1() {
  begin(1);
  for (std::uint32_t m = 2; m <= 60; ++m) {
    OmegaIntResult r = omega_int(m);  // engine + factor count, must agree
    if (r.omega != Omega(m)) {
      report(1, false,
             "m=" + std::to_string(m) + ": engine " + std::to_string(r.omega) +
                 " vs Omega " + std::to_string(Omega(m)));
      return;
    }
  }
  report(1, true, "omega_{Z/m}((0)) = Omega(m) for every m in 2..60");
}

// 2. all four amount-function axioms for every corpus ring at N in {2,3}
void criterion_2() {
  begin(2);
  ScanPolicy policy;  // exhaustive <= 1000 carrier elements, else 1e5 samples
  for (const auto& text : kCorpus) {
    auto ring = Ring::build(text);
    for (std::uint32_t N : {2u, 3u}) {
      TruncSeries B(ring, N);
      IdealInterner in(ring);
      AxiomReport rep = check_amount_axioms(B, in, policy);
      bool exhaustive = policy.exhaustive_for(B.carrier()->size());
      bool ok = exhaustive ? rep.all_proven() : rep.all_passed();
      if (!ok) {
        std::string which =
            !rep.preserves_zero_one.passed()   ? "axiom 1"
            : !rep.faithful.passed()           ? "axiom 2"
            : !rep.homogeneous.passed()        ? "axiom 3"
                                               : "axiom 4";
        report(2, false, text + " N=" + std::to_string(N) + ": " + which +
                             " not clean");
        return;
      }
    }
  }
  report(2, true,
         "axioms (1)-(4) clean on all 8 corpus rings, N in {2,3}; exhaustive "
         "below 10^3 carrier elements, 10^5 seeded samples above");
}

// 3. reduction + radical containment on every carrier with the amount
//    algebra property proven (N = 1 carriers qualify; truncation kills the
//    formula for N >= 2, so those are excluded by the criterion's guard)
void criterion_3() {
  begin(3);
  ScanPolicy policy;
  std::uint32_t qualified = 0;
  for (const auto& text : kCorpus) {
    auto ring = Ring::build(text);
    for (std::uint32_t N : {1u, 2u, 3u}) {
      TruncSeries B(ring, N);
      IdealInterner in(ring);
      AmountAlgebraReport rep = is_amount_algebra(B, in, 0, 0, policy);
      if (!rep.overall.proven()) continue;
      ++qualified;
      std::map<int, int> rad_memo;
      Verdict laws = scan_carrier_pairs(
          B, policy,
          [&](Elem f, Elem g) -> PairWitness {
            int afg = B.content_id(B.carrier()->mul(f, g), in);
            int prod = in.product(B.content_id(f, in), B.content_id(g, in));
            ReductionResult red =
                is_reduction(in.ideal(afg), in.ideal(prod), 2 * (N + 2), in);
            if (red.kind != ReductionResult::Kind::Proven)
              return PairWitness{{B.format(f), B.format(g), "reduction"}};
            auto mit = rad_memo.find(afg);
            int rad = mit != rad_memo.end()
                          ? mit->second
                          : (rad_memo[afg] = in.intern(radical(in.ideal(afg))));
            if (!in.subset(prod, rad))
              return PairWitness{{B.format(f), B.format(g), "radical"}};
            return std::nullopt;
          });
      if (!laws.passed()) {
        std::string w;
        for (const auto& x : laws.witness) w += x + " ";
        report(3, false, text + " N=" + std::to_string(N) +
                             ": law violated at " + w);
        return;
      }
    }
  }
  report(3, true,
         std::to_string(qualified) +
             " carriers qualified (the N=1 carriers; truncated N>=2 carriers "
             "fail the amount formula at the pair (x,x)) and all scanned "
             "pairs satisfy both laws");
}

// 4. prime extension under truncation, as stated: P^eps prime in the
//    carrier for every prime P, N in {2,3}; plus the converse pullback
void criterion_4() {
  begin(4);
  ScanPolicy policy;
  bool all_prime = true;
  std::string first_witness;
  for (const auto& text : kCorpus) {
    auto ring = Ring::build(text);
    for (std::uint32_t N : {2u, 3u}) {
      TruncSeries B(ring, N);
      for (const auto& P : prime_ideals(ring)) {
        Ideal eps = B.epsilon(P);
        Verdict v = prime_scan(B.carrier(), eps, policy);
        if (v.refuted() && all_prime) {
          all_prime = false;
          first_witness = text + " N=" + std::to_string(N) + " P=" +
                          P.render() + ": ";
          for (const auto& w : v.witness) first_witness += w + " ";
          first_witness += "multiply into P^eps while staying outside";
        }
        // converse: an eps-image proven prime must pull back to a prime
        if (v.proven() && !is_prime(P)) {
          report(4, false, "converse failed for " + P.render());
          return;
        }
      }
    }
  }
  if (all_prime) {
    report(4, true, "P^eps prime for every corpus prime, N in {2,3}");
  } else {
    report(4, false,
           first_witness +
               " [x^N = 0 makes every truncated carrier non-domain-like; the "
               "untruncated theorem needs the amount formula, which "
               "truncation refutes — see notes/decisions.md]");
  }
}

// 5 + 9 share one sweep over the corpus at Nmax = 3, seed 0.
SearchReport run_sweep() {
  Session session;  // default policy, seed 0
  return session.conjecture_search(kCorpus, 3, 0, 8, kDefaultWorkCeiling);
}

void criterion_5(const SearchReport& sweep) {
  begin(5);
  // clause 1: no verified-hypotheses row with omega_B != omega_R
  if (!sweep.counterexamples.empty()) {
    const auto& row = sweep.counterexamples.front();
    report(5, false,
           "CRITICAL: verified hypotheses with unequal omegas on " + row.ring +
               " I=" + row.ideal + " N=" + std::to_string(row.N));
    return;
  }
  std::uint32_t verified_equal = 0;
  for (const auto& row : sweep.rows)
    if (row.hypotheses_verified && row.equal && *row.equal) ++verified_equal;

  // clause 2: the stated minimum instance with its stated common value
  const ConjectureRow* key = nullptr;
  for (const auto& row : sweep.rows)
    if (row.ring == "Z/6" && row.ideal == "(0)" && row.N == 2) key = &row;
  if (!key || !key->omega_r || !key->omega_b) {
    report(5, false, "Z/6 I=(0) N=2 row missing from the sweep");
    return;
  }
  bool common_two = *key->omega_r == 2 && *key->omega_b == 2;
  if (!common_two) {
    report(5, false,
           "zero violations among " + std::to_string(verified_equal) +
               " verified-equal rows, BUT the stated minimum instance Z/6 "
               "I=(0) N=2 computes omega_R=" + std::to_string(*key->omega_r) +
               ", omega_B=" + std::to_string(*key->omega_b) +
               " (expected common value 2 is unattainable: the truncated "
               "carrier is not an amount algebra and the triple "
               "(4+3x, 3+4x, x) refutes 2-absorbency — see "
               "notes/decisions.md)");
    return;
  }
  report(5, true,
         "all verified-hypotheses rows equal, including Z/6 I=(0) N=2 at the "
         "common value 2");
}

// 6. Dedekind-Mertens bound n <= deg(g): exhaustive for |R| <= 8 at degree
//    <= 2, and >= 10^4 seeded samples for the larger corpus rings
void criterion_6() {
  begin(6);
  for (const auto& text : kCorpus) {
    auto ring = Ring::build(text);
    IdealInterner in(ring);
    auto check_pair = [&](const Poly& f, const Poly& g) -> bool {
      if (g.is_zero()) return true;
      DmResult r = dm_exponent(f, g, 0, in);
      return r.found && !r.anomaly &&
             r.n <= static_cast<std::uint32_t>(g.degree());
    };
    if (ring->size() <= 8) {
      const std::uint64_t count =
          static_cast<std::uint64_t>(ring->size()) * ring->size() * ring->size();
      for (std::uint64_t fi = 0; fi < count; ++fi)
        for (std::uint64_t gi = 0; gi < count; ++gi) {
          std::vector<Elem> fc = {static_cast<Elem>(fi % ring->size()),
                                  static_cast<Elem>(fi / ring->size() % ring->size()),
                                  static_cast<Elem>(fi / ring->size() / ring->size())};
          std::vector<Elem> gc = {static_cast<Elem>(gi % ring->size()),
                                  static_cast<Elem>(gi / ring->size() % ring->size()),
                                  static_cast<Elem>(gi / ring->size() / ring->size())};
          if (!check_pair(Poly::make(ring, fc), Poly::make(ring, gc))) {
            report(6, false, text + ": bound violated");
            return;
          }
        }
    } else {
      Rng rng(20);
      for (int s = 0; s < 10000; ++s) {
        std::vector<Elem> fc, gc;
        for (int k = 0; k < 3; ++k) {
          fc.push_back(static_cast<Elem>(rng.below(ring->size())));
          gc.push_back(static_cast<Elem>(rng.below(ring->size())));
        }
        if (!check_pair(Poly::make(ring, fc), Poly::make(ring, gc))) {
          report(6, false, text + ": bound violated (sampled)");
          return;
        }
      }
    }
  }
  report(6, true,
         "dm_exponent <= deg(g): exhaustive at degree <= 2 over rings with "
         "|R| <= 8, 10^4 seeded samples on the larger rings");
}

// 7. the non-Gaussian witness over Z/2[u,v]/(u^3,u^2*v,u*v^2,v^3)
void criterion_7() {
  begin(7);
  auto ring = Ring::build("Z/2[u,v]/(u^3,u^2*v,u*v^2,v^3)");
  IdealInterner in(ring);
  Poly f = parse_poly(ring, "u,v");
  Ideal cf = content(f);
  Ideal cfg = content(poly_mul(f, f));
  Ideal prod = ideal_product(cf, cf);
  Elem uv = ring->parse_element("u*v");
  bool separated =
      prod.contains(uv) && !cfg.contains(uv) && !(prod.elems == cfg.elems);
  DmResult dm = dm_exponent(f, f, 0, in);
  bool ok = separated && dm.found && dm.n == 1;
  report(7, ok,
         ok ? "c(f)c(g) != c(fg) (u*v separates) and dm exponent = 1 for "
              "f = g = u + v*x"
            : "witness computation mismatch");
}

// 8. Gauss over Z and the Dedekind omega evidence
void criterion_8() {
  begin(8);
  Verdict gauss = gauss_random_suite(1000, 1, 4, 100);
  if (!gauss.passed()) {
    report(8, false, "gauss_check refuted: engine bug");
    return;
  }
  for (std::uint64_t m : {4ull, 12ull, 30ull}) {
    Verdict v = dedekind_omega_check(m, 200, 2, 1);
    if (!v.passed()) {
      std::string w;
      for (const auto& x : v.witness) w += x + " ";
      report(8, false, "m=" + std::to_string(m) + ": " + w);
      return;
    }
  }
  report(8, true,
         "1000 Gauss pairs clean; dedekind omega evidence for m in {4,12,30} "
         "with embedded lower-bound witnesses and 200 samples each");
}

// 9. the sweep table: zero verified violations, byte-stable golden fixture
void criterion_9(const SearchReport& sweep) {
  begin(9);
  if (!sweep.counterexamples.empty()) {
    report(9, false, "sweep found verified-hypotheses counterexamples");
    return;
  }
  std::string payload = sweep.to_json().dump(2) + "\n";
  std::string golden_path =
      std::string(RINGLAB_SOURCE_DIR) + "/tests/data/conjecture_golden.json";
  std::ifstream golden(golden_path);
  if (!golden) {
    // first run: write the fixture so it can be frozen
    std::ofstream out(golden_path);
    out << payload;
    report(9, false, "golden fixture was missing; wrote " + golden_path +
                         " — rerun to compare");
    return;
  }
  std::stringstream buf;
  buf << golden.rdbuf();
  if (buf.str() != payload) {
    report(9, false, "sweep output diverged from the golden fixture");
    return;
  }
  std::uint32_t skipped = 0;
  for (const auto& row : sweep.rows)
    if (!row.skipped.empty()) ++skipped;
  report(9, true,
         std::to_string(sweep.rows.size()) + " rows (" +
             std::to_string(skipped) +
             " skipped at the work ceiling), zero verified violations, "
             "byte-identical to the golden fixture");
}

// 10. negative controls
void criterion_10() {
  begin(10);
  auto z4 = Ring::build("Z/4");
  TruncSeries B(z4, 2);
  IdealInterner in(z4);
  AmountMap broken = [](const TruncSeries&, Elem f, IdealInterner& interner) {
    return f == 0 ? interner.zero_id() : interner.unit_id();
  };
  AxiomReport rep = check_amount_axioms(B, in, {}, broken);
  bool control1 = rep.homogeneous.refuted();

  Elem wit = 0;
  bool control2 = !z4->is_reduced(&wit) && z4->format(wit) == "2";

  auto z12 = Ring::build("Z/12");
  WorkBudget budget(kDefaultWorkCeiling);
  AbsorbElems r = is_n_absorbing(zero_ideal(z12), 2, budget);
  bool control3 = !r.proven && z12->format_tuple(r.witness) == "[2,2,3]";

  bool ok = control1 && control2 && control3;
  report(10, ok,
         ok ? "broken amount map refuted on axiom (3); Z/4 unreduced with "
              "witness 2; Z/12 (0) fails 2-absorbing with witness [2,2,3]"
            : "a negative control unexpectedly passed");
}

}  // namespace

int main() {
  std::printf("acceptance suite, version %s\n", kVersion);
  criterion_1();
  criterion_2();
  criterion_3();
  criterion_4();
  SearchReport sweep = run_sweep();
  criterion_5(sweep);
  criterion_6();
  criterion_7();
  criterion_8();
  criterion_9(sweep);
  criterion_10();
  std::printf("%d/10 criteria passed\n", 10 - failures);
  return failures;
}
