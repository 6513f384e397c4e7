#ifndef RINGLAB_ABSORBING_HPP
#define RINGLAB_ABSORBING_HPP

#include <optional>

#include "ringlab/ideal.hpp"
#include "ringlab/verdict.hpp"

namespace ringlab {

inline constexpr std::uint64_t kDefaultWorkCeiling = 100000000;

struct AbsorbElems {
  bool proven;
  std::vector<Elem> witness;  // refuting (n+1)-tuple, lex-least
};

struct AbsorbIdeals {
  bool proven;
  std::vector<int> witness;  // interned ideal ids
};

// I n-absorbing: every (n+1)-tuple with product in I has an n-subproduct
// in I. Searches non-decreasing index tuples with prefix products; a
// prefix product that lands in I at depth <= n proves every completion
// harmless, so the subtree is pruned. Throws BoundError on the ceiling.
AbsorbElems is_n_absorbing(const Ideal& I, std::uint32_t n, WorkBudget& budget);

// Same with ideal factors, quantified over enumerate_ideals(R).
AbsorbIdeals is_strongly_n_absorbing(const Ideal& I, std::uint32_t n,
                                     IdealInterner& interner,
                                     const std::vector<int>& all_ideals,
                                     WorkBudget& budget);

struct OmegaResult {
  enum class Kind { Finite, ExceedsBound };
  Kind kind = Kind::ExceedsBound;
  std::uint32_t n = 0;         // omega when Finite, the bound otherwise
  std::vector<Elem> witness;   // refutation at n-1 (empty when n == 1)
  std::uint32_t n_max = 0;

  bool finite() const { return kind == Kind::Finite; }
};

// Heuristic sufficient bound for omega in these Artinian rings:
// t * k, where radical(I)^t <= I and k counts the primes above I.
std::uint32_t default_omega_bound(const Ideal& I);

// Least n <= n_max with I n-absorbing; n_max = 0 picks the heuristic.
OmegaResult omega(const Ideal& I, std::uint32_t n_max, WorkBudget& budget);

struct OmegaStrongResult {
  OmegaResult::Kind kind = OmegaResult::Kind::ExceedsBound;
  std::uint32_t n = 0;
  std::vector<int> witness;
  std::uint32_t n_max = 0;
};

OmegaStrongResult omega_strong(const Ideal& I, std::uint32_t n_max,
                               IdealInterner& interner,
                               const std::vector<int>& all_ideals,
                               WorkBudget& budget);

struct ReductionResult {
  enum class Kind { Proven, Refuted, NoCounterexampleUpTo };
  Kind kind;
  std::uint32_t k = 0;         // witness exponent when Proven
  std::uint32_t k_searched = 0;
  bool stabilized = false;     // power chain became constant before k_max

  Verdict verdict() const;
};

// Northcott-Rees: J is a reduction of I when J <= I and J*I^k = I^(k+1).
// k_max = 0 uses |R|; the power chain stabilizes long before that.
ReductionResult is_reduction(const Ideal& J, const Ideal& I,
                             std::uint32_t k_max, IdealInterner& interner);

}  // namespace ringlab

#endif
