#include "ringlab/absorbing.hpp"

namespace ringlab {

namespace {

constexpr std::uint32_t kMaxTupleLen = 16;

struct ElemSearch {
  const Ring& ring;
  const Bitset& I;
  std::uint32_t n;
  WorkBudget& budget;
  Elem chosen[kMaxTupleLen];
  Elem prefix[kMaxTupleLen + 1];
  std::vector<Elem> found;

  // returns true once a violating tuple is found
  bool rec(std::uint32_t depth, Elem start) {
    if (depth == n + 1) {
      if (!I.test(prefix[depth])) return false;
      Elem suffix = ring.one();
      Elem suf[kMaxTupleLen + 1];
      suf[depth] = suffix;
      for (std::uint32_t i = depth; i-- > 0;)
        suf[i] = ring.mul(chosen[i], suf[i + 1]);
      for (std::uint32_t drop = 0; drop < depth; ++drop) {
        Elem sub = ring.mul(prefix[drop], suf[drop + 1]);
        if (I.test(sub)) return false;
      }
      found.assign(chosen, chosen + depth);
      return true;
    }
    for (Elem e = start; e < ring.size(); ++e) {
      budget.charge();
      Elem p = ring.mul(prefix[depth], e);
      if (I.test(p) && depth + 1 <= n) continue;  // prune: completion is safe
      chosen[depth] = e;
      prefix[depth + 1] = p;
      if (rec(depth + 1, e)) return true;
    }
    return false;
  }
};

}  // namespace

AbsorbElems is_n_absorbing(const Ideal& I, std::uint32_t n,
                           WorkBudget& budget) {
  if (!I.proper())
    throw ValidationError("n-absorbing is defined for proper ideals");
  if (n + 1 >= kMaxTupleLen) throw ValidationError("n too large");
  const Ring& ring = *I.ring;

  // every depth-1 node outside I enumerates all successors, so this much
  // work is unavoidable; bail before burning the budget on a doomed scan
  std::uint64_t floor_work = ring.size();
  for (Elem a = 0; a < ring.size(); ++a)
    if (!I.elems.test(a)) floor_work += ring.size() - a;
  std::uint64_t remaining = budget.limit() - std::min(budget.used(), budget.limit());
  if (floor_work > remaining)
    throw BoundError(budget.used() + floor_work, budget.limit(),
                     "scan at n=" + std::to_string(n) +
                         " cannot fit in the work ceiling");

  ElemSearch s{ring, I.elems, n, budget, {}, {}, {}};
  s.prefix[0] = ring.one();
  bool violated = s.rec(0, 0);
  return AbsorbElems{!violated, std::move(s.found)};
}

namespace {

struct IdealSearch {
  IdealInterner& in;
  int target;  // interned I
  const std::vector<int>& ideals;
  std::uint32_t n;
  WorkBudget& budget;
  std::uint32_t chosen[kMaxTupleLen];
  int prefix[kMaxTupleLen + 1];
  std::vector<int> found;

  bool rec(std::uint32_t depth, std::uint32_t start) {
    if (depth == n + 1) {
      if (!in.subset(prefix[depth], target)) return false;
      int suf[kMaxTupleLen + 1];
      suf[depth] = in.unit_id();
      for (std::uint32_t i = depth; i-- > 0;)
        suf[i] = in.product(ideals[chosen[i]], suf[i + 1]);
      for (std::uint32_t drop = 0; drop < depth; ++drop) {
        int sub = in.product(prefix[drop], suf[drop + 1]);
        if (in.subset(sub, target)) return false;
      }
      found.clear();
      for (std::uint32_t i = 0; i < depth; ++i)
        found.push_back(ideals[chosen[i]]);
      return true;
    }
    for (std::uint32_t k = start; k < ideals.size(); ++k) {
      budget.charge();
      int p = in.product(prefix[depth], ideals[k]);
      if (in.subset(p, target) && depth + 1 <= n) continue;
      chosen[depth] = k;
      prefix[depth + 1] = p;
      if (rec(depth + 1, k)) return true;
    }
    return false;
  }
};

}  // namespace

AbsorbIdeals is_strongly_n_absorbing(const Ideal& I, std::uint32_t n,
                                     IdealInterner& interner,
                                     const std::vector<int>& all_ideals,
                                     WorkBudget& budget) {
  if (!I.proper())
    throw ValidationError("strongly n-absorbing is defined for proper ideals");
  if (n + 1 >= kMaxTupleLen) throw ValidationError("n too large");
  int target = interner.intern(I);
  IdealSearch s{interner, target, all_ideals, n, budget, {}, {}, {}};
  s.prefix[0] = interner.unit_id();
  bool violated = s.rec(0, 0);
  return AbsorbIdeals{!violated, std::move(s.found)};
}

std::uint32_t default_omega_bound(const Ideal& I) {
  Ideal rad = radical(I);
  IdealInterner in(I.ring);
  int rid = in.intern(rad);
  int iid = in.intern(I);
  std::uint32_t t = 1;
  int p = rid;
  while (!in.subset(p, iid)) {
    p = in.product(p, rid);
    ++t;
    if (t > 64) break;  // cannot happen for proper ideals of a finite ring
  }
  std::uint32_t k = 0;
  for (const auto& prime : prime_ideals(I.ring))
    if (I.elems.subset_of(prime.elems)) ++k;
  std::uint64_t bound = static_cast<std::uint64_t>(t) * std::max(k, 1u);
  return static_cast<std::uint32_t>(std::min<std::uint64_t>(bound, 12));
}

OmegaResult omega(const Ideal& I, std::uint32_t n_max, WorkBudget& budget) {
  if (n_max == 0) n_max = default_omega_bound(I);
  OmegaResult out;
  out.n_max = n_max;
  std::vector<Elem> last_witness;
  for (std::uint32_t n = 1; n <= n_max; ++n) {
    AbsorbElems r = is_n_absorbing(I, n, budget);
    if (r.proven) {
      out.kind = OmegaResult::Kind::Finite;
      out.n = n;
      out.witness = std::move(last_witness);
      return out;
    }
    last_witness = std::move(r.witness);
  }
  out.kind = OmegaResult::Kind::ExceedsBound;
  out.n = n_max;
  out.witness = std::move(last_witness);
  return out;
}

OmegaStrongResult omega_strong(const Ideal& I, std::uint32_t n_max,
                               IdealInterner& interner,
                               const std::vector<int>& all_ideals,
                               WorkBudget& budget) {
  if (n_max == 0) n_max = default_omega_bound(I);
  OmegaStrongResult out;
  out.n_max = n_max;
  std::vector<int> last_witness;
  for (std::uint32_t n = 1; n <= n_max; ++n) {
    AbsorbIdeals r =
        is_strongly_n_absorbing(I, n, interner, all_ideals, budget);
    if (r.proven) {
      out.kind = OmegaResult::Kind::Finite;
      out.n = n;
      out.witness = std::move(last_witness);
      return out;
    }
    last_witness = std::move(r.witness);
  }
  out.kind = OmegaResult::Kind::ExceedsBound;
  out.n = n_max;
  out.witness = std::move(last_witness);
  return out;
}

Verdict ReductionResult::verdict() const {
  switch (kind) {
    case Kind::Proven: {
      Verdict v = Verdict::proven_v();
      v.bounds["k"] = k;
      return v;
    }
    case Kind::Refuted:
      return Verdict::refuted_v({"J not contained in I"});
    default: {
      Verdict v = Verdict::bounded_v({{"kMax", k_searched}});
      if (stabilized) v.bounds["stabilized"] = 1;
      return v;
    }
  }
}

ReductionResult is_reduction(const Ideal& J, const Ideal& I,
                             std::uint32_t k_max, IdealInterner& interner) {
  if (k_max == 0) k_max = I.ring->size();
  if (!J.elems.subset_of(I.elems))
    return ReductionResult{ReductionResult::Kind::Refuted, 0, 0, false};
  int jid = interner.intern(J);
  int iid = interner.intern(I);
  int ipow = iid;  // I^1
  for (std::uint32_t k = 1; k <= k_max; ++k) {
    int next = interner.product(ipow, iid);  // I^(k+1)
    if (interner.product(jid, ipow) == next)
      return ReductionResult{ReductionResult::Kind::Proven, k, k, false};
    if (next == ipow)  // chain constant from here on
      return ReductionResult{ReductionResult::Kind::NoCounterexampleUpTo, 0, k,
                             true};
    ipow = next;
  }
  return ReductionResult{ReductionResult::Kind::NoCounterexampleUpTo, 0, k_max,
                         false};
}

}  // namespace ringlab
