#include "ringlab/series.hpp"

#include <algorithm>
#include <optional>

namespace ringlab {

namespace {

char pick_series_var(const std::vector<char>& used) {
  static const char* prefs = "xyzwtsrqponmlkjihgfedcba";
  for (const char* p = prefs; *p; ++p)
    if (std::find(used.begin(), used.end(), *p) == used.end()) return *p;
  throw ValidationError("no free letter for the series variable");
}

}  // namespace

TruncSeries::TruncSeries(RingPtr base, std::uint32_t N,
                         const BuildOptions& opts)
    : base_(std::move(base)), N_(N) {
  if (N_ < 1) throw ValidationError("precision must be >= 1");

  RingSpec cspec;
  std::vector<char> series_vars;
  for (const auto& sc : base_->spec().components) {
    SpecComponent ext = sc;
    char sv = pick_series_var(sc.vars);
    series_vars.push_back(sv);
    ext.vars.push_back(sv);
    for (auto& r : ext.relations) r.push_back(0);
    std::vector<std::uint32_t> pure(ext.vars.size(), 0);
    pure.back() = N_;
    ext.relations.push_back(pure);
    cspec.components.push_back(std::move(ext));
  }
  normalize_spec(cspec);
  carrier_ = Ring::build(cspec, opts);

  // pair carrier coordinates with (x-power, base coordinate)
  slot_.assign(carrier_->coord_count(), 0);
  base_coord_.assign(carrier_->coord_count(), 0);
  for (std::size_t ci = 0; ci < carrier_->components().size(); ++ci) {
    const auto& cc = carrier_->components()[ci];
    const auto& bc = base_->components()[ci];
    for (std::uint32_t bi = 0; bi < cc.basis_size(); ++bi) {
      const auto& ev = cc.basis[bi];
      std::uint32_t e = ev.back();
      std::vector<std::uint32_t> mono(ev.begin(), ev.end() - 1);
      auto it = std::find(bc.basis.begin(), bc.basis.end(), mono);
      if (it == bc.basis.end())
        throw std::logic_error("carrier basis does not project onto base basis");
      slot_[cc.coord_offset + bi] = e;
      base_coord_[cc.coord_offset + bi] =
          bc.coord_offset +
          static_cast<std::uint32_t>(it - bc.basis.begin());
    }
  }
}

std::vector<Elem> TruncSeries::coefficients(Elem f) const {
  std::uint32_t cc[kMaxCoords];
  carrier_->decode(f, cc);
  std::vector<std::uint32_t> bc(static_cast<std::size_t>(N_) *
                                    base_->coord_count(),
                                0);
  for (std::uint32_t p = 0; p < carrier_->coord_count(); ++p)
    bc[slot_[p] * base_->coord_count() + base_coord_[p]] = cc[p];
  std::vector<Elem> out(N_);
  for (std::uint32_t e = 0; e < N_; ++e)
    out[e] = base_->encode(bc.data() + e * base_->coord_count());
  return out;
}

Elem TruncSeries::from_coefficients(const std::vector<Elem>& coeffs) const {
  std::vector<std::uint32_t> bc(static_cast<std::size_t>(N_) *
                                    base_->coord_count(),
                                0);
  for (std::uint32_t e = 0; e < N_ && e < coeffs.size(); ++e)
    base_->decode(coeffs[e], bc.data() + e * base_->coord_count());
  std::uint32_t cc[kMaxCoords];
  for (std::uint32_t p = 0; p < carrier_->coord_count(); ++p)
    cc[p] = bc[slot_[p] * base_->coord_count() + base_coord_[p]];
  return carrier_->encode(cc);
}

Elem TruncSeries::embed(Elem r) const { return from_coefficients({r}); }

Elem TruncSeries::x_elem() const {
  if (N_ == 1) return 0;
  return from_coefficients({0, base_->one()});
}

Poly TruncSeries::to_poly(Elem f) const {
  return Poly::make(base_, coefficients(f));
}

bool TruncSeries::in_epsilon(Elem f, const Ideal& I) const {
  for (Elem c : coefficients(f))
    if (!I.contains(c)) return false;
  return true;
}

Ideal TruncSeries::epsilon(const Ideal& I) const {
  Bitset bits(carrier_->size());
  for (Elem f = 0; f < carrier_->size(); ++f)
    if (in_epsilon(f, I)) bits.set(f);
  std::vector<Elem> gens;
  std::vector<Elem> base_gens = I.gens.empty() ? I.min_generators() : I.gens;
  for (Elem g : base_gens)
    for (std::uint32_t e = 0; e < N_; ++e) {
      std::vector<Elem> c(N_, 0);
      c[e] = g;
      gens.push_back(from_coefficients(c));
    }
  return ideal_from_bits(carrier_, std::move(bits), std::move(gens));
}

Ideal TruncSeries::content_ideal(Elem f) const {
  std::vector<Elem> gens;
  for (Elem c : coefficients(f))
    if (c != 0) gens.push_back(c);
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  return ideal_closure(base_, gens);
}

int TruncSeries::content_id(Elem f, IdealInterner& interner) const {
  if (content_cache_.empty()) content_cache_.assign(carrier_->size(), -1);
  int& memo = content_cache_[f];
  if (memo < 0) memo = interner.intern(content_ideal(f));
  return memo;
}

AmountMap content_amount_map() {
  return [](const TruncSeries& B, Elem f, IdealInterner& in) {
    return B.content_id(f, in);
  };
}

Verdict scan_carrier_pairs(const TruncSeries& B, const ScanPolicy& policy,
                           const std::function<PairWitness(Elem, Elem)>& check,
                           std::uint64_t seed_offset) {
  const std::uint64_t size = B.carrier()->size();
  if (policy.exhaustive_for(size)) {
    for (Elem f = 0; f < size; ++f)
      for (Elem g = f; g < size; ++g)
        if (auto w = check(f, g)) return Verdict::refuted_v(*w);
    return Verdict::proven_v();
  }
  Rng rng(policy.seed + seed_offset);
  for (std::uint64_t i = 0; i < policy.samples; ++i) {
    Elem f = static_cast<Elem>(rng.below(size));
    Elem g = static_cast<Elem>(rng.below(size));
    if (auto w = check(f, g)) return Verdict::refuted_v(*w);
  }
  return Verdict::bounded_v(
      {{"pairsSampled", static_cast<std::int64_t>(policy.samples)},
       {"seed", static_cast<std::int64_t>(policy.seed + seed_offset)}});
}

namespace {
using MaybeWitness = PairWitness;
}  // namespace

AxiomReport check_amount_axioms(const TruncSeries& B, IdealInterner& interner,
                                const ScanPolicy& policy,
                                const AmountMap& amount) {
  AxiomReport rep;
  rep.exhaustive = policy.exhaustive_for(B.carrier()->size());
  const auto& carrier = *B.carrier();

  int zero_id = interner.zero_id();
  int unit_id = interner.unit_id();

  // (1) A_0 = (0), A_1 = R
  {
    bool z = amount(B, carrier.zero(), interner) == zero_id;
    bool o = amount(B, carrier.one(), interner) == unit_id;
    rep.preserves_zero_one =
        (z && o) ? Verdict::proven_v()
                 : Verdict::refuted_v({z ? "A_1 != R" : "A_0 != (0)"});
  }

  // (2) A_f = (0) implies f = 0; one linear pass, always exhaustive
  rep.faithful = Verdict::proven_v();
  for (Elem f = 1; f < carrier.size(); ++f)
    if (amount(B, f, interner) == zero_id) {
      rep.faithful = Verdict::refuted_v({B.format(f)});
      break;
    }

  // (3) A_rf = r A_f over (r, f) pairs
  {
    auto check = [&](Elem r_base, Elem f) -> MaybeWitness {
      Elem r = B.embed(r_base);
      int lhs = amount(B, carrier.mul(r, f), interner);
      int rhs = interner.product(interner.principal(r_base),
                                 amount(B, f, interner));
      if (lhs == rhs) return std::nullopt;
      return MaybeWitness{{B.base()->format(r_base), B.format(f)}};
    };
    const std::uint64_t rsize = B.base()->size();
    const std::uint64_t fsize = carrier.size();
    if (policy.exhaustive_for(fsize)) {
      rep.homogeneous = Verdict::proven_v();
      for (Elem r = 0; r < rsize && rep.homogeneous.proven(); ++r)
        for (Elem f = 0; f < fsize; ++f)
          if (auto w = check(r, f)) {
            rep.homogeneous = Verdict::refuted_v(*w);
            break;
          }
    } else {
      Rng rng(policy.seed + 1);
      rep.homogeneous = Verdict::bounded_v(
          {{"pairsSampled", static_cast<std::int64_t>(policy.samples)},
           {"seed", static_cast<std::int64_t>(policy.seed + 1)}});
      for (std::uint64_t i = 0; i < policy.samples; ++i) {
        Elem r = static_cast<Elem>(rng.below(rsize));
        Elem f = static_cast<Elem>(rng.below(fsize));
        if (auto w = check(r, f)) {
          rep.homogeneous = Verdict::refuted_v(*w);
          break;
        }
      }
    }
  }

  // (4) A_fg <= A_f A_g
  rep.submultiplicative = scan_carrier_pairs(B, policy, [&](Elem f, Elem g) -> MaybeWitness {
    int afg = amount(B, carrier.mul(f, g), interner);
    int prod = interner.product(amount(B, f, interner), amount(B, g, interner));
    if (interner.subset(afg, prod)) return std::nullopt;
    return MaybeWitness{{B.format(f), B.format(g)}};
  });
  return rep;
}

FormulaResult amount_formula_exponents(const TruncSeries& B, Elem f, Elem g,
                                       std::uint32_t m_max, std::uint32_t n_max,
                                       IdealInterner& interner,
                                       const AmountMap& amount) {
  int af = amount(B, f, interner);
  int ag = amount(B, g, interner);
  int afg = amount(B, B.carrier()->mul(f, g), interner);
  for (std::uint32_t m = 0; m <= m_max; ++m)
    for (std::uint32_t n = 0; n <= n_max; ++n) {
      int lhs = interner.product(
          interner.product(interner.power(af, m), interner.power(ag, n)), afg);
      int rhs = interner.product(interner.power(af, m + 1),
                                 interner.power(ag, n + 1));
      if (lhs == rhs) return FormulaResult{true, m, n};
    }
  return FormulaResult{false, 0, 0};
}

AmountAlgebraReport is_amount_algebra(const TruncSeries& B,
                                      IdealInterner& interner,
                                      std::uint32_t m_max, std::uint32_t n_max,
                                      const ScanPolicy& policy) {
  if (m_max == 0) m_max = B.precision() + 1;
  if (n_max == 0) n_max = B.precision() + 1;
  AmountAlgebraReport rep;
  rep.axioms = check_amount_axioms(B, interner, policy);

  rep.formula = scan_carrier_pairs(B, policy, [&](Elem f, Elem g) -> MaybeWitness {
    FormulaResult r = amount_formula_exponents(B, f, g, m_max, n_max, interner);
    if (r.found) {
      rep.max_m = std::max(rep.max_m, r.m);
      rep.max_n = std::max(rep.max_n, r.n);
      return std::nullopt;
    }
    return MaybeWitness{{B.format(f), B.format(g)}};
  }, 5);
  if (rep.formula.kind == Verdict::Kind::NoCounterexampleUpTo) {
    rep.formula.bounds["mMax"] = m_max;
    rep.formula.bounds["nMax"] = n_max;
  }

  // epsilon properties quantify over the base ideal lattice
  std::vector<Ideal> ideals = enumerate_ideals(B.base());
  {
    const std::uint64_t size = B.carrier()->size();
    rep.epsilon_a = Verdict::proven_v();
    auto check_f = [&](Elem f) -> MaybeWitness {
      int af = B.content_id(f, interner);
      for (const auto& I : ideals) {
        bool lhs = interner.subset(af, interner.intern(I));
        bool rhs = B.in_epsilon(f, I);
        if (lhs != rhs)
          return MaybeWitness{{B.format(f), I.render()}};
      }
      return std::nullopt;
    };
    if (policy.exhaustive_for(size)) {
      for (Elem f = 0; f < size && rep.epsilon_a.proven(); ++f)
        if (auto w = check_f(f)) rep.epsilon_a = Verdict::refuted_v(*w);
    } else {
      Rng rng(policy.seed + 2);
      rep.epsilon_a = Verdict::bounded_v(
          {{"elementsSampled", static_cast<std::int64_t>(policy.samples)},
           {"seed", static_cast<std::int64_t>(policy.seed + 2)}});
      for (std::uint64_t i = 0; i < policy.samples; ++i) {
        if (auto w = check_f(static_cast<Elem>(rng.below(size)))) {
          rep.epsilon_a = Verdict::refuted_v(*w);
          break;
        }
      }
    }
  }
  {
    rep.epsilon_b = Verdict::proven_v();
    for (const auto& I : ideals) {
      for (Elem r = 0; r < B.base()->size(); ++r) {
        bool in_eps = B.in_epsilon(B.embed(r), I);
        if (in_eps != I.contains(r)) {
          rep.epsilon_b = Verdict::refuted_v({B.base()->format(r), I.render()});
          break;
        }
      }
      if (!rep.epsilon_b.proven()) break;
    }
  }

  // combine
  std::vector<const Verdict*> parts = {&rep.axioms.preserves_zero_one,
                                       &rep.axioms.faithful,
                                       &rep.axioms.homogeneous,
                                       &rep.axioms.submultiplicative,
                                       &rep.formula,
                                       &rep.epsilon_a,
                                       &rep.epsilon_b};
  const Verdict* refuted = nullptr;
  bool all_proven = true;
  for (auto* p : parts) {
    if (p->refuted() && !refuted) refuted = p;
    if (!p->proven()) all_proven = false;
  }
  if (refuted)
    rep.overall = Verdict::refuted_v(refuted->witness);
  else if (all_proven)
    rep.overall = Verdict::proven_v();
  else
    rep.overall = Verdict::bounded_v(
        {{"pairsSampled", static_cast<std::int64_t>(policy.samples)},
         {"seed", static_cast<std::int64_t>(policy.seed)}});
  return rep;
}

Verdict is_gaussian(const TruncSeries& B, IdealInterner& interner,
                    const ScanPolicy& policy) {
  return scan_carrier_pairs(B, policy, [&](Elem f, Elem g) -> MaybeWitness {
    int afg = B.content_id(B.carrier()->mul(f, g), interner);
    int prod = interner.product(B.content_id(f, interner),
                                B.content_id(g, interner));
    if (afg == prod) return std::nullopt;
    return MaybeWitness{{B.format(f), B.format(g)}};
  }, 6);
}

Verdict is_armendariz(const TruncSeries& B, IdealInterner& interner,
                      const ScanPolicy& policy) {
  int zero_id = interner.zero_id();
  return scan_carrier_pairs(B, policy, [&](Elem f, Elem g) -> MaybeWitness {
    if (B.carrier()->mul(f, g) != 0) return std::nullopt;
    int prod = interner.product(B.content_id(f, interner),
                                B.content_id(g, interner));
    if (prod == zero_id) return std::nullopt;
    return MaybeWitness{{B.format(f), B.format(g)}};
  }, 7);
}

Verdict mccoy_check(const TruncSeries& B, const ScanPolicy& policy) {
  const auto& carrier = *B.carrier();
  auto base_annihilated = [&](Elem f) {
    for (Elem r = 1; r < B.base()->size(); ++r)
      if (carrier.mul(B.embed(r), f) == 0) return true;
    return false;
  };
  const std::uint64_t size = carrier.size();
  if (policy.exhaustive_for(size)) {
    for (Elem f = 1; f < size; ++f) {
      bool zd = false;
      for (Elem g = 1; g < size; ++g)
        if (carrier.mul(f, g) == 0) {
          zd = true;
          break;
        }
      if (zd && !base_annihilated(f)) return Verdict::refuted_v({B.format(f)});
    }
    return Verdict::proven_v();
  }
  // sampled: discover zero divisors through random zero products
  Rng rng(policy.seed + 3);
  for (std::uint64_t i = 0; i < policy.samples; ++i) {
    Elem f = static_cast<Elem>(rng.below(size));
    Elem g = static_cast<Elem>(rng.below(size));
    if (f == 0 || g == 0 || carrier.mul(f, g) != 0) continue;
    if (!base_annihilated(f)) return Verdict::refuted_v({B.format(f)});
    if (!base_annihilated(g)) return Verdict::refuted_v({B.format(g)});
  }
  return Verdict::bounded_v(
      {{"pairsSampled", static_cast<std::int64_t>(policy.samples)},
       {"seed", static_cast<std::int64_t>(policy.seed + 3)}});
}

Verdict prime_scan(const RingPtr& ring, const Ideal& I,
                   const ScanPolicy& policy) {
  if (!I.proper()) return Verdict::refuted_v({"ideal is not proper"});
  const std::uint64_t size = ring->size();
  if (policy.exhaustive_for(size)) {
    for (Elem a = 0; a < size; ++a) {
      if (I.contains(a)) continue;
      for (Elem b = a; b < size; ++b) {
        if (I.contains(b)) continue;
        if (I.contains(ring->mul(a, b)))
          return Verdict::refuted_v({ring->format(a), ring->format(b)});
      }
    }
    return Verdict::proven_v();
  }
  Rng rng(policy.seed + 4);
  for (std::uint64_t i = 0; i < policy.samples; ++i) {
    Elem a = static_cast<Elem>(rng.below(size));
    Elem b = static_cast<Elem>(rng.below(size));
    if (I.contains(a) || I.contains(b)) continue;
    if (I.contains(ring->mul(a, b)))
      return Verdict::refuted_v({ring->format(a), ring->format(b)});
  }
  return Verdict::bounded_v(
      {{"pairsSampled", static_cast<std::int64_t>(policy.samples)},
       {"seed", static_cast<std::int64_t>(policy.seed + 4)}});
}

}  // namespace ringlab
