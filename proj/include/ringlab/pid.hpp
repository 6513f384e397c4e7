#ifndef RINGLAB_PID_HPP
#define RINGLAB_PID_HPP

#include <gmpxx.h>

#include "ringlab/absorbing.hpp"

namespace ringlab {

// Ideal (m) of Z; m = 0 is the zero ideal, m = 1 is Z. Product, sum and
// intersection are multiplication, gcd and lcm of the generators.
struct IntIdeal {
  mpz_class m;
  bool operator==(const IntIdeal& o) const { return m == o.m; }
  std::string render() const { return "(" + m.get_str() + ")"; }
};

// Exact integer polynomial, ascending coefficients, no trailing zeros.
struct IntPoly {
  std::vector<mpz_class> coeffs;

  static IntPoly make(std::vector<mpz_class> c);
  static IntPoly from_ints(const std::vector<long>& c);
  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
  bool is_zero() const { return coeffs.empty(); }
  std::string render() const;
};

IntPoly ipoly_add(const IntPoly& a, const IntPoly& b);
IntPoly ipoly_mul(const IntPoly& a, const IntPoly& b);
IntPoly ipoly_scale(const mpz_class& c, const IntPoly& a);
IntPoly parse_int_poly(const std::string& comma_separated);

// gcd of the coefficients; content of 0 is (0)
IntIdeal content_int(const IntPoly& f);

bool ipoly_in_ideal(const IntPoly& f, const mpz_class& m);

// prime factors with multiplicity, ascending (trial division; inputs are
// capacity-bounded long before this becomes slow)
std::vector<std::uint64_t> factorize(std::uint64_t m);
std::uint32_t big_omega(std::uint64_t m);

struct OmegaIntResult {
  std::uint32_t omega;          // from the finite-ring engine on Z/m
  std::uint32_t omega_factor;   // Omega(m), the prime-count fast path
  std::vector<std::uint64_t> witness;  // refutation at omega-1, lifted
};

// omega_Z((m)) via the exact reduction to omega_{Z/m}((0)); the two
// routes must agree or the engine is broken (logic_error).
OmegaIntResult omega_int(std::uint64_t m,
                         std::uint64_t work_ceiling = kDefaultWorkCeiling);

// Gauss's lemma instance: content(fg) = content(f) content(g) over Z.
Verdict gauss_check(const IntPoly& f, const IntPoly& g);
Verdict gauss_random_suite(std::uint32_t count, std::uint64_t seed,
                           std::uint32_t deg_max = 4, long coeff_max = 100);

// Evidence for omega_{Z[X]}((m)[X]) = omega_Z((m)): the integer witness
// tuple embeds as constants (certified lower bound), and seeded random
// (omega+1)-tuples of polynomials whose product lands in (m)[X] must
// always admit an omega-subproduct in (m)[X].
Verdict dedekind_omega_check(std::uint64_t m, std::uint32_t samples,
                             std::uint32_t d, std::uint64_t seed);

}  // namespace ringlab

#endif
