#ifndef RINGLAB_POLY_HPP
#define RINGLAB_POLY_HPP

#include "ringlab/absorbing.hpp"
#include "ringlab/ideal.hpp"

namespace ringlab {

// Finitely supported coefficient sequence over a finite ring. Serves both
// R[X] (exact products, unbounded degree) and, reduced mod x^N, the
// truncated series carrier. Normalized: no trailing zero coefficients;
// the zero polynomial has an empty list and degree() == -1.
struct Poly {
  RingPtr ring;
  std::vector<Elem> coeffs;  // ascending

  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
  bool is_zero() const { return coeffs.empty(); }
  Elem coeff(std::size_t i) const { return i < coeffs.size() ? coeffs[i] : 0; }
  bool operator==(const Poly& o) const { return coeffs == o.coeffs; }

  static Poly make(RingPtr ring, std::vector<Elem> coeffs);
  static Poly constant(RingPtr ring, Elem c) { return make(ring, {c}); }

  std::string render() const;
};

Poly poly_add(const Poly& a, const Poly& b);
Poly poly_mul(const Poly& a, const Poly& b);
Poly poly_scale(Elem r, const Poly& a);
Poly poly_truncate(const Poly& a, std::uint32_t N);

// coefficients "c0,c1,..." with ring-element syntax per entry
Poly parse_poly(const RingPtr& ring, const std::string& text);

// ideal generated by the coefficients; content of 0 is (0)
Ideal content(const Poly& f);

struct DmResult {
  bool found = false;
  std::uint32_t n = 0;        // least exponent
  bool anomaly = false;       // nothing found at n <= deg(g)
  std::uint32_t n_searched = 0;
};

// Least n with c(f)^(n+1) c(g) = c(f)^n c(fg); the classical bound is
// n <= deg(g), so finding none that low is flagged. n_max = 0 uses
// deg(g)+1. Exact polynomial product, no truncation.
DmResult dm_exponent(const Poly& f, const Poly& g, std::uint32_t n_max,
                     IdealInterner& interner);

// Hunt for an (n+1)-tuple of polynomials of degree <= d violating
// n-absorbency of I[X]. The domain is infinite, so a clean scan is only
// NoCounterexampleUpTo(d); a hit is a genuine refutation.
struct PolyAbsorbResult {
  bool refuted = false;
  std::vector<Poly> witness;
  std::uint64_t tuples = 0;
};

PolyAbsorbResult poly_absorbing_search(const Ideal& I, std::uint32_t n,
                                       std::uint32_t d, WorkBudget& budget);

// membership in I[X]
bool poly_in_ideal(const Poly& f, const Ideal& I);

}  // namespace ringlab

#endif
