#ifndef RINGLAB_SERIES_HPP
#define RINGLAB_SERIES_HPP

#include <functional>

#include "ringlab/poly.hpp"

namespace ringlab {

// R[x]/(x^N) built as an honest finite Ring through the quotient
// constructor (a fresh series variable with the pure power x^N is appended
// to every product component), plus the coefficient view that the amount
// machinery needs. N = 1 degenerates to R itself.
class TruncSeries {
 public:
  TruncSeries(RingPtr base, std::uint32_t N, const BuildOptions& opts = {});

  const RingPtr& base() const { return base_; }
  const RingPtr& carrier() const { return carrier_; }
  std::uint32_t precision() const { return N_; }

  std::vector<Elem> coefficients(Elem f) const;  // length N, base elements
  Elem from_coefficients(const std::vector<Elem>& coeffs) const;
  Elem embed(Elem r) const;  // constant series
  Elem x_elem() const;       // 0 when N == 1
  Poly to_poly(Elem f) const;
  std::string format(Elem f) const { return to_poly(f).render(); }

  // {f : every coefficient of f lies in I}, materialized over the carrier
  Ideal epsilon(const Ideal& I) const;
  bool in_epsilon(Elem f, const Ideal& I) const;

  // the coefficient-ideal map A_f, an ideal of the base ring
  Ideal content_ideal(Elem f) const;
  int content_id(Elem f, IdealInterner& base_interner) const;

 private:
  RingPtr base_;
  RingPtr carrier_;
  std::uint32_t N_;
  std::vector<std::uint32_t> slot_;        // carrier coord -> power of x
  std::vector<std::uint32_t> base_coord_;  // carrier coord -> base coord
  mutable std::vector<int> content_cache_;
};

// Scan regime for quantifiers over carrier pairs: exhaustive up to the
// element limit, seeded uniform sampling above it.
struct ScanPolicy {
  std::uint32_t exhaustive_limit = 1000;
  std::uint64_t samples = 100000;
  std::uint64_t seed = 0;

  bool exhaustive_for(std::uint64_t carrier_size) const {
    return carrier_size <= exhaustive_limit;
  }
};

// f -> interned base ideal; swapping this out gives the negative controls
using AmountMap =
    std::function<int(const TruncSeries&, Elem, IdealInterner&)>;

AmountMap content_amount_map();

// Drives a quantifier over (f, g) carrier pairs under the policy: all
// unordered pairs when exhaustive, seeded ordered samples otherwise. The
// callback returns a witness to refute. seed_offset decorrelates several
// scans running under one policy.
using PairWitness = std::optional<std::vector<std::string>>;
Verdict scan_carrier_pairs(const TruncSeries& B, const ScanPolicy& policy,
                           const std::function<PairWitness(Elem, Elem)>& check,
                           std::uint64_t seed_offset = 0);

struct AxiomReport {
  Verdict preserves_zero_one;  // A_0 = (0), A_1 = R
  Verdict faithful;            // A_f = (0) implies f = 0
  Verdict homogeneous;         // A_rf = r A_f
  Verdict submultiplicative;   // A_fg <= A_f A_g
  bool exhaustive = false;

  bool all_passed() const {
    return preserves_zero_one.passed() && faithful.passed() &&
           homogeneous.passed() && submultiplicative.passed();
  }
  bool all_proven() const {
    return preserves_zero_one.proven() && faithful.proven() &&
           homogeneous.proven() && submultiplicative.proven();
  }
};

AxiomReport check_amount_axioms(const TruncSeries& B, IdealInterner& interner,
                                const ScanPolicy& policy = {},
                                const AmountMap& amount = content_amount_map());

struct FormulaResult {
  bool found = false;
  std::uint32_t m = 0, n = 0;
};

// Least (m, n) in lex order with A_f^m A_g^n A_fg = A_f^(m+1) A_g^(n+1).
FormulaResult amount_formula_exponents(const TruncSeries& B, Elem f, Elem g,
                                       std::uint32_t m_max, std::uint32_t n_max,
                                       IdealInterner& interner,
                                       const AmountMap& amount = content_amount_map());

struct AmountAlgebraReport {
  AxiomReport axioms;
  Verdict formula;    // per-pair exponent search over the scanned pairs
  Verdict epsilon_a;  // A_f <= I  iff  f in I^eps
  Verdict epsilon_b;  // I^eps cap R = I
  Verdict overall;
  std::uint32_t max_m = 0, max_n = 0;  // largest exponents any pair needed

  bool passed() const { return overall.passed(); }
};

// m_max/n_max = 0 default to N+1.
AmountAlgebraReport is_amount_algebra(const TruncSeries& B,
                                      IdealInterner& interner,
                                      std::uint32_t m_max = 0,
                                      std::uint32_t n_max = 0,
                                      const ScanPolicy& policy = {});

Verdict is_gaussian(const TruncSeries& B, IdealInterner& interner,
                    const ScanPolicy& policy = {});
Verdict is_armendariz(const TruncSeries& B, IdealInterner& interner,
                      const ScanPolicy& policy = {});
// every zero divisor of the carrier is killed by a nonzero base scalar
Verdict mccoy_check(const TruncSeries& B, const ScanPolicy& policy = {});

// definitional primality scan of an ideal of an arbitrary ring; sampled
// above the policy limit (a clean sampled scan is evidence, not proof)
Verdict prime_scan(const RingPtr& ring, const Ideal& I,
                   const ScanPolicy& policy = {});

}  // namespace ringlab

#endif
