#include "ringlab/harness.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace ringlab {

namespace {

const std::pair<TheoremId, const char*> kTheoremNames[] = {
    {TheoremId::ReductionLemma, "reduction_lemma"},
    {TheoremId::SqrtContainment, "sqrt_containment"},
    {TheoremId::PrimeExtension, "prime_extension"},
    {TheoremId::EpsilonProps, "epsilon_props"},
    {TheoremId::ArmendarizMccoy, "armendariz_mccoy"},
    {TheoremId::OmegaChain, "omega_chain"},
    {TheoremId::AbsorbingDescent, "absorbing_descent"},
    {TheoremId::GaussianOmega, "gaussian_omega"},
    {TheoremId::RadicalOmega, "radical_omega"},
};

struct OmegaOutcome {
  std::optional<OmegaResult> result;
  std::string skip;

  std::string describe() const {
    if (!skip.empty()) return "skipped (" + skip + ")";
    if (result->finite()) return std::to_string(result->n);
    return ">" + std::to_string(result->n_max) + " (bound exhausted)";
  }
};

// cheap mirror of the scan's unavoidable depth-2 work, so hopeless rings
// are skipped without burning the whole ceiling
bool omega_obviously_over(const Ideal& I, std::uint64_t ceiling) {
  std::uint64_t floor_work = I.ring->size();
  const std::uint64_t size = I.ring->size();
  for (Elem a = 0; a < size; ++a)
    if (!I.contains(a)) floor_work += size - a;
  return floor_work > ceiling;
}

OmegaOutcome try_omega(const Ideal& I, std::uint32_t n_max,
                       std::uint64_t ceiling) {
  OmegaOutcome out;
  if (omega_obviously_over(I, ceiling)) {
    out.skip = "work ceiling (" + std::to_string(ceiling) +
               ") too small for any scan over " +
               std::to_string(I.ring->size()) + " elements";
    return out;
  }
  try {
    WorkBudget budget(ceiling);
    out.result = omega(I, n_max, budget);
  } catch (const BoundError& e) {
    out.skip = e.what();
  }
  return out;
}

Verdict combine_verdicts(const std::vector<Verdict>& parts) {
  for (const auto& v : parts)
    if (v.refuted()) return v;
  for (const auto& v : parts)
    if (v.kind == Verdict::Kind::NoCounterexampleUpTo) return v;
  return Verdict::proven_v();
}

}  // namespace

const char* theorem_name(TheoremId id) {
  for (const auto& [tid, name] : kTheoremNames)
    if (tid == id) return name;
  return "?";
}

std::optional<TheoremId> theorem_from_name(const std::string& name) {
  for (const auto& [tid, tname] : kTheoremNames)
    if (name == tname) return tid;
  return std::nullopt;
}

std::vector<TheoremId> all_theorems() {
  std::vector<TheoremId> ids;
  for (const auto& [tid, name] : kTheoremNames) ids.push_back(tid);
  return ids;
}

nlohmann::json TheoremReport::to_json() const {
  nlohmann::json j;
  j["theoremId"] = theorem_id;
  j["ring"] = ring;
  j["params"] = params;
  j["hypotheses"] = nlohmann::json::array();
  for (const auto& h : hypotheses)
    j["hypotheses"].push_back({{"name", h.name}, {"verdict", h.verdict.to_json()}});
  j["hypothesesVerified"] = hypotheses_verified();
  j["conclusion"] = conclusion.to_json();
  if (!notes.empty()) j["notes"] = notes;
  if (skipped) {
    j["skipped"] = true;
    j["skipReason"] = skip_reason;
  }
  j["elapsedMs"] = elapsed_ms;
  return j;
}

namespace {

std::string csv_quote(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string TheoremReport::csv_row() const {
  std::string wit;
  for (std::size_t i = 0; i < conclusion.witness.size(); ++i) {
    if (i) wit += " ";
    wit += conclusion.witness[i];
  }
  std::ostringstream os;
  os << theorem_id << ',' << csv_quote(ring) << ','
     << csv_quote(params.dump()) << ',' << (hypotheses_verified() ? 1 : 0)
     << ',' << (skipped ? "skipped" : conclusion.kind_name()) << ','
     << csv_quote(wit) << ',' << elapsed_ms;
  return os.str();
}

std::string reports_to_csv(const std::vector<TheoremReport>& reports) {
  std::string out =
      "theoremId,ring,params,hypothesesVerified,conclusion,witness,elapsedMs\n";
  for (const auto& r : reports) out += r.csv_row() + "\n";
  return out;
}

nlohmann::json ConjectureRow::to_json() const {
  nlohmann::json j;
  j["ring"] = ring;
  j["ideal"] = ideal;
  j["N"] = N;
  j["omegaR"] = omega_r ? nlohmann::json(*omega_r) : nlohmann::json();
  j["omegaB"] = omega_b ? nlohmann::json(*omega_b) : nlohmann::json();
  j["hypotheses"] = {{"strongEqPlain", strong_eq_plain},
                     {"amountAlgebra", amount_algebra},
                     {"gaussian", gaussian},
                     {"radicalIdeal", radical_ideal}};
  j["hypothesesVerified"] = hypotheses_verified;
  j["equal"] = equal ? nlohmann::json(*equal) : nlohmann::json();
  if (!skipped.empty()) j["skipped"] = skipped;
  return j;
}

nlohmann::json SearchReport::to_json() const {
  nlohmann::json j;
  j["version"] = kVersion;
  j["seed"] = seed;
  j["Nmax"] = n_max;
  j["rows"] = nlohmann::json::array();
  for (const auto& r : rows) j["rows"].push_back(r.to_json());
  j["counterexamples"] = nlohmann::json::array();
  for (const auto& r : counterexamples) j["counterexamples"].push_back(r.to_json());
  return j;
}

Session::Session(ScanPolicy policy, bool with_timings)
    : policy_(policy), with_timings_(with_timings) {}

Verdict Session::strong_eq_plain(const RingPtr& ring,
                                 std::uint64_t work_ceiling) {
  auto it = strong_plain_.find(ring->spec_text());
  if (it != strong_plain_.end()) return it->second;

  Verdict out = Verdict::proven_v();
  try {
    auto ideals = enumerate_ideals(ring);
    IdealInterner interner(ring);
    std::vector<int> ids;
    for (const auto& I : ideals) ids.push_back(interner.intern(I));
    for (const auto& J : ideals) {
      if (!J.proper()) continue;
      std::uint32_t bound = default_omega_bound(J) + 1;
      for (std::uint32_t n = 1; n <= bound; ++n) {
        WorkBudget budget(work_ceiling);
        AbsorbElems plain = is_n_absorbing(J, n, budget);
        if (!plain.proven) continue;
        AbsorbIdeals strong =
            is_strongly_n_absorbing(J, n, interner, ids, budget);
        if (!strong.proven) {
          std::vector<std::string> w = {J.render(), "n=" + std::to_string(n)};
          for (int id : strong.witness)
            w.push_back(interner.ideal(id).render());
          out = Verdict::refuted_v(std::move(w));
          break;
        }
      }
      if (!out.passed()) break;
    }
  } catch (const CapacityError&) {
    out = Verdict::bounded_v({{"skipped", 1}});
  } catch (const BoundError&) {
    out = Verdict::bounded_v(
        {{"workCeiling", static_cast<std::int64_t>(work_ceiling)}});
  }
  strong_plain_.emplace(ring->spec_text(), out);
  return out;
}

Session::CarrierCtx& Session::carrier(const RingPtr& ring, std::uint32_t N) {
  auto key = std::make_pair(ring->spec_text(), N);
  auto it = carriers_.find(key);
  if (it != carriers_.end()) return it->second;
  CarrierCtx ctx;
  ctx.series = std::make_shared<TruncSeries>(ring, N);
  ctx.base_interner = std::make_shared<IdealInterner>(ring);
  ctx.carrier_interner = std::make_shared<IdealInterner>(ctx.series->carrier());
  return carriers_.emplace(key, std::move(ctx)).first->second;
}

const AmountAlgebraReport& Session::amount_report(const RingPtr& ring,
                                                  std::uint32_t N) {
  CarrierCtx& ctx = carrier(ring, N);
  if (!ctx.amount)
    ctx.amount =
        is_amount_algebra(*ctx.series, *ctx.base_interner, 0, 0, policy_);
  return *ctx.amount;
}

const Verdict& Session::gaussian_verdict(const RingPtr& ring,
                                         std::uint32_t N) {
  CarrierCtx& ctx = carrier(ring, N);
  if (!ctx.gaussian)
    ctx.gaussian = is_gaussian(*ctx.series, *ctx.base_interner, policy_);
  return *ctx.gaussian;
}

TheoremReport Session::check(TheoremId id, const RingPtr& ring,
                             CheckParams p) {
  auto t0 = std::chrono::steady_clock::now();
  TheoremReport rep;
  rep.theorem_id = theorem_name(id);
  rep.ring = ring->spec_text();
  rep.params["N"] = p.N;

  std::optional<Ideal> ideal;
  if (p.ideal_gens) {
    ideal = ideal_closure(ring, *p.ideal_gens);
    rep.params["ideal"] = ideal->render();
  }

  try {
    switch (id) {
      case TheoremId::ReductionLemma: {
        CarrierCtx& ctx = carrier(ring, p.N);
        rep.hypotheses.push_back(
            {"amount_algebra", amount_report(ring, p.N).overall});
        std::uint32_t k_max = p.k_max ? p.k_max : 2 * (p.N + 2);
        auto& in = *ctx.base_interner;
        std::map<std::pair<int, int>, bool> memo;
        rep.conclusion = scan_carrier_pairs(
            *ctx.series, policy_,
            [&](Elem f, Elem g) -> PairWitness {
              int afg = ctx.series->content_id(
                  ctx.series->carrier()->mul(f, g), in);
              int prod = in.product(ctx.series->content_id(f, in),
                                    ctx.series->content_id(g, in));
              auto key = std::make_pair(afg, prod);
              auto mit = memo.find(key);
              bool ok;
              if (mit != memo.end()) {
                ok = mit->second;
              } else {
                ReductionResult r = is_reduction(in.ideal(afg), in.ideal(prod),
                                                 k_max, in);
                ok = r.kind == ReductionResult::Kind::Proven;
                memo[key] = ok;
              }
              if (ok) return std::nullopt;
              return PairWitness{{ctx.series->format(f), ctx.series->format(g)}};
            },
            10);
        break;
      }

      case TheoremId::SqrtContainment: {
        CarrierCtx& ctx = carrier(ring, p.N);
        rep.hypotheses.push_back(
            {"amount_algebra", amount_report(ring, p.N).overall});
        auto& in = *ctx.base_interner;
        std::map<int, int> rad_memo;
        auto radical_of = [&](int id2) {
          auto mit = rad_memo.find(id2);
          if (mit != rad_memo.end()) return mit->second;
          int r = in.intern(radical(in.ideal(id2)));
          rad_memo[id2] = r;
          return r;
        };
        rep.conclusion = scan_carrier_pairs(
            *ctx.series, policy_,
            [&](Elem f, Elem g) -> PairWitness {
              int afg = ctx.series->content_id(
                  ctx.series->carrier()->mul(f, g), in);
              int prod = in.product(ctx.series->content_id(f, in),
                                    ctx.series->content_id(g, in));
              if (in.subset(prod, radical_of(afg))) return std::nullopt;
              return PairWitness{{ctx.series->format(f), ctx.series->format(g)}};
            },
            11);
        break;
      }

      case TheoremId::PrimeExtension: {
        CarrierCtx& ctx = carrier(ring, p.N);
        rep.hypotheses.push_back(
            {"amount_algebra", amount_report(ring, p.N).overall});
        std::vector<Verdict> parts;
        for (const auto& P : prime_ideals(ring)) {
          Ideal eps = ctx.series->epsilon(P);
          Verdict v = prime_scan(ctx.series->carrier(), eps, policy_);
          rep.notes.push_back("P=" + P.render() + " -> P^eps " +
                              v.kind_name());
          if (v.refuted()) {
            std::vector<std::string> w = {"P=" + P.render()};
            w.insert(w.end(), v.witness.begin(), v.witness.end());
            v.witness = std::move(w);
          }
          parts.push_back(std::move(v));
        }
        // converse: an eps-image proven prime must come from a prime
        for (const auto& I : enumerate_ideals(ring)) {
          if (!I.proper()) continue;
          Ideal eps = ctx.series->epsilon(I);
          Verdict v = prime_scan(ctx.series->carrier(), eps, policy_);
          if (v.proven() && !is_prime(I)) {
            parts.push_back(Verdict::refuted_v(
                {"I=" + I.render(), "I^eps prime but I is not"}));
          }
        }
        rep.conclusion = combine_verdicts(parts);
        break;
      }

      case TheoremId::EpsilonProps: {
        CarrierCtx& ctx = carrier(ring, p.N);
        const auto& amount = amount_report(ring, p.N);
        rep.hypotheses.push_back({"epsilon_membership", amount.epsilon_a});
        rep.hypotheses.push_back({"epsilon_contraction", amount.epsilon_b});
        auto& B = *ctx.series;
        auto& in = *ctx.base_interner;
        std::vector<Verdict> parts;

        // (1) f in A_f^eps for all f
        {
          const std::uint64_t size = B.carrier()->size();
          Verdict v = Verdict::proven_v();
          auto check = [&](Elem f) -> bool {
            return B.in_epsilon(f, in.ideal(B.content_id(f, in)));
          };
          if (policy_.exhaustive_for(size)) {
            for (Elem f = 0; f < size; ++f)
              if (!check(f)) {
                v = Verdict::refuted_v({B.format(f)});
                break;
              }
          } else {
            Rng rng(policy_.seed + 12);
            v = Verdict::bounded_v(
                {{"elementsSampled",
                  static_cast<std::int64_t>(policy_.samples)},
                 {"seed", static_cast<std::int64_t>(policy_.seed + 12)}});
            for (std::uint64_t i = 0; i < policy_.samples; ++i) {
              Elem f = static_cast<Elem>(rng.below(size));
              if (!check(f)) {
                v = Verdict::refuted_v({B.format(f)});
                break;
              }
            }
          }
          parts.push_back(std::move(v));
        }

        // (2) I <= J iff I^eps <= J^eps
        {
          auto ideals = enumerate_ideals(ring);
          Verdict v = Verdict::proven_v();
          bool small = policy_.exhaustive_for(B.carrier()->size());
          std::vector<Ideal> eps;
          if (small)
            for (const auto& I : ideals) eps.push_back(B.epsilon(I));
          Rng rng(policy_.seed + 13);
          for (std::size_t i = 0; i < ideals.size() && v.passed(); ++i)
            for (std::size_t j = 0; j < ideals.size(); ++j) {
              bool lhs = ideals[i].elems.subset_of(ideals[j].elems);
              if (small) {
                bool rhs = eps[i].elems.subset_of(eps[j].elems);
                if (lhs != rhs) {
                  v = Verdict::refuted_v(
                      {ideals[i].render(), ideals[j].render()});
                  break;
                }
              } else if (!lhs) {
                // constructive: r in I \ J embeds into I^eps \ J^eps
                bool found = false;
                for (Elem r = 0; r < ring->size(); ++r)
                  if (ideals[i].contains(r) && !ideals[j].contains(r)) {
                    Elem f = B.embed(r);
                    if (B.in_epsilon(f, ideals[i]) &&
                        !B.in_epsilon(f, ideals[j]))
                      found = true;
                    break;
                  }
                if (!found) {
                  v = Verdict::refuted_v(
                      {ideals[i].render(), ideals[j].render()});
                  break;
                }
              } else {
                // sampled: f in I^eps must lie in J^eps
                for (std::uint64_t s = 0; s < 64; ++s) {
                  Elem f = static_cast<Elem>(rng.below(B.carrier()->size()));
                  if (B.in_epsilon(f, ideals[i]) &&
                      !B.in_epsilon(f, ideals[j])) {
                    v = Verdict::refuted_v(
                        {ideals[i].render(), ideals[j].render(), B.format(f)});
                    break;
                  }
                }
                if (!v.passed()) break;
              }
            }
          if (v.proven() && !small)
            v = Verdict::bounded_v(
                {{"idealPairsSampled", 64},
                 {"seed", static_cast<std::int64_t>(policy_.seed + 13)}});
          parts.push_back(std::move(v));
        }
        rep.conclusion = combine_verdicts(parts);
        break;
      }

      case TheoremId::ArmendarizMccoy: {
        CarrierCtx& ctx = carrier(ring, p.N);
        Elem wit = 0;
        bool reduced = ring->is_reduced(&wit);
        rep.hypotheses.push_back(
            {"base_reduced",
             reduced ? Verdict::proven_v()
                     : Verdict::refuted_v({ring->format(wit)})});
        rep.hypotheses.push_back(
            {"amount_algebra", amount_report(ring, p.N).overall});
        Verdict arm = is_armendariz(*ctx.series, *ctx.base_interner, policy_);
        Verdict mcc = mccoy_check(*ctx.series, policy_);
        rep.notes.push_back(std::string("armendariz: ") + arm.kind_name());
        rep.notes.push_back(std::string("mccoy: ") + mcc.kind_name());
        rep.conclusion = combine_verdicts({arm, mcc});
        break;
      }

      case TheoremId::OmegaChain: {
        if (!ideal) throw ValidationError("omega_chain needs --ideal");
        if (!ideal->proper()) throw ValidationError("ideal must be proper");
        CarrierCtx& ctx = carrier(ring, p.N);
        const auto& amount = amount_report(ring, p.N);
        rep.hypotheses.push_back({"epsilon_membership", amount.epsilon_a});
        rep.hypotheses.push_back({"epsilon_contraction", amount.epsilon_b});

        OmegaOutcome om_r = try_omega(*ideal, p.n_max, p.work_ceiling);
        if (!om_r.result) {
          rep.skipped = true;
          rep.skip_reason = "omega_R: " + om_r.skip;
          break;
        }
        rep.notes.push_back("omega_R = " + om_r.describe());
        Ideal eps = ctx.series->epsilon(*ideal);

        if (!om_r.result->finite()) {
          rep.conclusion = Verdict::bounded_v(
              {{"omegaRBound", om_r.result->n_max}});
          break;
        }
        std::uint32_t w = om_r.result->n;
        Verdict lower = Verdict::proven_v();
        if (w > 1) {
          // the ring witness embeds as constants and must refute
          // (w-1)-absorbency of I^eps in the carrier
          const auto& tuple = om_r.result->witness;
          auto prod = ctx.series->carrier()->one();
          std::vector<Elem> emb;
          for (Elem r : tuple) emb.push_back(ctx.series->embed(r));
          for (Elem f : emb) prod = ctx.series->carrier()->mul(prod, f);
          bool ok = eps.contains(prod);
          for (std::size_t drop = 0; drop < emb.size() && ok; ++drop) {
            Elem sub = ctx.series->carrier()->one();
            for (std::size_t i = 0; i < emb.size(); ++i)
              if (i != drop) sub = ctx.series->carrier()->mul(sub, emb[i]);
            if (eps.contains(sub)) ok = false;
          }
          if (!ok)
            lower = Verdict::refuted_v(
                {"constant witness failed to embed",
                 ring->format_tuple(tuple)});
        }
        rep.conclusion = lower;

        OmegaOutcome om_b = try_omega(eps, p.n_max, p.work_ceiling);
        rep.notes.push_back("omega_B(I^eps) = " + om_b.describe());
        if (om_b.result && om_b.result->finite() &&
            om_b.result->n < w)
          rep.conclusion = Verdict::refuted_v(
              {"omega_B = " + std::to_string(om_b.result->n),
               "omega_R = " + std::to_string(w)});

        // bounded-degree evidence over R[X]
        try {
          WorkBudget budget(p.work_ceiling);
          PolyAbsorbResult ps =
              poly_absorbing_search(*ideal, w, p.degree, budget);
          if (ps.refuted) {
            std::string msg = "I[X] not " + std::to_string(w) +
                              "-absorbing at degree <= " +
                              std::to_string(p.degree) + ":";
            for (const auto& f : ps.witness) msg += " " + f.render() + ";";
            rep.notes.push_back(msg);
          } else {
            rep.notes.push_back(
                "poly search: no counterexample to " + std::to_string(w) +
                "-absorbency of I[X] up to degree " + std::to_string(p.degree));
          }
        } catch (const BoundError&) {
          rep.notes.push_back("poly search skipped (work ceiling)");
        }
        break;
      }

      case TheoremId::AbsorbingDescent: {
        if (!ideal) throw ValidationError("absorbing_descent needs --ideal");
        if (!ideal->proper()) throw ValidationError("ideal must be proper");
        CarrierCtx& ctx = carrier(ring, p.N);
        const auto& amount = amount_report(ring, p.N);
        rep.hypotheses.push_back({"epsilon_membership", amount.epsilon_a});
        rep.hypotheses.push_back({"epsilon_contraction", amount.epsilon_b});
        Ideal eps = ctx.series->epsilon(*ideal);
        std::uint32_t bound = p.n_max ? p.n_max : default_omega_bound(*ideal) + 1;
        std::uint32_t covered = 0;
        Verdict v = Verdict::proven_v();
        for (std::uint32_t n = 1; n <= bound; ++n) {
          AbsorbElems carrier_abs;
          try {
            WorkBudget budget(p.work_ceiling);
            carrier_abs = is_n_absorbing(eps, n, budget);
          } catch (const BoundError&) {
            break;
          }
          covered = n;
          if (!carrier_abs.proven) continue;
          WorkBudget budget(p.work_ceiling);
          AbsorbElems base_abs = is_n_absorbing(*ideal, n, budget);
          if (!base_abs.proven) {
            v = Verdict::refuted_v({"n=" + std::to_string(n),
                                    "I^eps n-absorbing but I is not",
                                    ring->format_tuple(base_abs.witness)});
            break;
          }
        }
        if (v.proven() && covered < bound)
          v = Verdict::bounded_v({{"nCovered", covered}, {"nBound", bound}});
        rep.params["nBound"] = bound;
        rep.notes.push_back("n covered: " + std::to_string(covered));
        rep.conclusion = v;
        break;
      }

      case TheoremId::GaussianOmega:
      case TheoremId::RadicalOmega: {
        if (!ideal)
          throw ValidationError(std::string(theorem_name(id)) +
                                " needs --ideal");
        if (!ideal->proper()) throw ValidationError("ideal must be proper");
        CarrierCtx& ctx = carrier(ring, p.N);
        rep.hypotheses.push_back(
            {"strong_eq_plain", strong_eq_plain(ring, p.work_ceiling)});
        rep.hypotheses.push_back(
            {"amount_algebra", amount_report(ring, p.N).overall});
        if (id == TheoremId::GaussianOmega) {
          rep.hypotheses.push_back({"gaussian", gaussian_verdict(ring, p.N)});
        } else {
          bool rad = is_radical(*ideal);
          rep.hypotheses.push_back(
              {"radical_ideal",
               rad ? Verdict::proven_v()
                   : Verdict::refuted_v({ideal->render()})});
        }

        OmegaOutcome om_r = try_omega(*ideal, p.n_max, p.work_ceiling);
        Ideal eps = ctx.series->epsilon(*ideal);
        OmegaOutcome om_b = try_omega(eps, p.n_max, p.work_ceiling);
        rep.notes.push_back("omega_R = " + om_r.describe());
        rep.notes.push_back("omega_B(I^eps) = " + om_b.describe());
        if (!om_r.result || !om_b.result) {
          rep.skipped = true;
          rep.skip_reason = !om_r.result ? "omega_R: " + om_r.skip
                                         : "omega_B: " + om_b.skip;
          break;
        }
        if (!om_r.result->finite() || !om_b.result->finite()) {
          rep.conclusion =
              Verdict::bounded_v({{"omegaBoundR", om_r.result->n_max},
                                  {"omegaBoundB", om_b.result->n_max}});
          break;
        }
        rep.params["omegaR"] = om_r.result->n;
        rep.params["omegaB"] = om_b.result->n;
        rep.conclusion =
            om_r.result->n == om_b.result->n
                ? Verdict::proven_v()
                : Verdict::refuted_v(
                      {"omega_R = " + std::to_string(om_r.result->n),
                       "omega_B = " + std::to_string(om_b.result->n)});
        break;
      }
    }
  } catch (const CapacityError& e) {
    rep.skipped = true;
    rep.skip_reason = e.what();
  } catch (const BoundError& e) {
    rep.skipped = true;
    rep.skip_reason = e.what();
  }

  if (with_timings_)
    rep.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                         std::chrono::steady_clock::now() - t0)
                         .count();
  return rep;
}

namespace {

RingSpec random_spec(Rng& rng) {
  static const std::uint32_t mods[] = {2, 3, 4, 5, 6, 7, 8, 9, 12};
  RingSpec spec;
  std::uint32_t ncomp = rng.below(10) == 0 ? 2 : 1;
  for (std::uint32_t c = 0; c < ncomp; ++c) {
    SpecComponent comp;
    comp.modulus = mods[rng.below(std::size(mods))];
    std::uint32_t nvars = static_cast<std::uint32_t>(rng.below(3));
    for (std::uint32_t v = 0; v < nvars; ++v)
      comp.vars.push_back(static_cast<char>('u' + v));
    for (std::uint32_t v = 0; v < nvars; ++v) {
      std::vector<std::uint32_t> pure(nvars, 0);
      pure[v] = 2 + static_cast<std::uint32_t>(rng.below(2));
      comp.relations.push_back(std::move(pure));
    }
    std::uint32_t extra = static_cast<std::uint32_t>(rng.below(3));
    for (std::uint32_t e = 0; e < extra && nvars > 0; ++e) {
      std::vector<std::uint32_t> mono(nvars, 0);
      bool nonzero = false;
      for (auto& x : mono) {
        x = static_cast<std::uint32_t>(rng.below(3));
        nonzero |= x > 0;
      }
      if (nonzero) comp.relations.push_back(std::move(mono));
    }
    spec.components.push_back(std::move(comp));
  }
  normalize_spec(spec);
  return spec;
}

}  // namespace

SearchReport Session::conjecture_search(const std::vector<std::string>& corpus,
                                        std::uint32_t n_max,
                                        std::uint64_t seed,
                                        std::uint32_t budget,
                                        std::uint64_t work_ceiling) {
  SearchReport report;
  report.seed = seed;
  report.n_max = n_max;

  std::vector<RingPtr> rings;
  std::vector<std::string> seen;
  for (const auto& text : corpus) {
    auto ring = Ring::build(text);
    if (std::find(seen.begin(), seen.end(), ring->spec_text()) != seen.end())
      continue;
    seen.push_back(ring->spec_text());
    rings.push_back(std::move(ring));
  }
  Rng rng(seed);
  std::uint32_t attempts = 0;
  std::uint32_t accepted = 0;
  while (accepted < budget && attempts < budget * 50 + 100) {
    ++attempts;
    RingSpec spec;
    try {
      spec = random_spec(rng);
    } catch (const ValidationError&) {
      continue;
    }
    RingPtr ring;
    try {
      BuildOptions opts;
      opts.element_capacity = 512;  // keeps random rows at desk scale
      ring = Ring::build(spec, opts);
    } catch (const CapacityError&) {
      continue;
    }
    if (std::find(seen.begin(), seen.end(), ring->spec_text()) != seen.end())
      continue;
    seen.push_back(ring->spec_text());
    rings.push_back(std::move(ring));
    ++accepted;
  }

  for (const auto& ring : rings) {
    std::vector<Ideal> ideals;
    std::string ring_skip;
    try {
      ideals = enumerate_ideals(ring);
    } catch (const CapacityError& e) {
      ring_skip = e.what();
    }
    if (!ring_skip.empty()) {
      ConjectureRow row;
      row.ring = ring->spec_text();
      row.ideal = "*";
      row.skipped = "ideal enumeration: " + ring_skip;
      report.rows.push_back(std::move(row));
      continue;
    }
    Verdict sp = strong_eq_plain(ring, work_ceiling);
    for (const auto& I : ideals) {
      if (!I.proper()) continue;
      OmegaOutcome om_r = try_omega(I, 0, work_ceiling);
      for (std::uint32_t N = 1; N <= n_max; ++N) {
        ConjectureRow row;
        row.ring = ring->spec_text();
        row.ideal = I.render();
        row.N = N;
        row.strong_eq_plain = sp.proven();
        row.radical_ideal = is_radical(I);
        try {
          CarrierCtx& ctx = carrier(ring, N);
          const auto& amount = amount_report(ring, N);
          row.amount_algebra = amount.overall.proven();
          row.gaussian = gaussian_verdict(ring, N).proven();
          row.hypotheses_verified = row.strong_eq_plain &&
                                    row.amount_algebra &&
                                    (row.gaussian || row.radical_ideal);
          if (om_r.result && om_r.result->finite())
            row.omega_r = om_r.result->n;
          Ideal eps = ctx.series->epsilon(I);
          OmegaOutcome om_b = try_omega(eps, 0, work_ceiling);
          if (om_b.result && om_b.result->finite())
            row.omega_b = om_b.result->n;
          if (row.omega_r && row.omega_b) {
            row.equal = *row.omega_r == *row.omega_b;
          } else {
            std::string why;
            if (!om_r.result)
              why = "omega_R: " + om_r.skip;
            else if (!om_r.result->finite())
              why = "omega_R exceeded bound " + std::to_string(om_r.result->n_max);
            if (why.empty() && !om_b.result) why = "omega_B: " + om_b.skip;
            if (why.empty() && !om_b.result->finite())
              why = "omega_B exceeded bound " + std::to_string(om_b.result->n_max);
            row.skipped = why;
          }
        } catch (const CapacityError& e) {
          row.skipped = e.what();
        }
        if (row.hypotheses_verified && row.equal && !*row.equal)
          report.counterexamples.push_back(row);
        report.rows.push_back(std::move(row));
      }
    }
  }
  return report;
}

std::vector<TheoremReport> Session::suite(
    const std::vector<std::string>& corpus, const CheckParams& base_params) {
  std::vector<TheoremReport> reports;
  for (const auto& text : corpus) {
    RingPtr ring = Ring::build(text);
    for (TheoremId id : all_theorems()) {
      bool needs_ideal = id == TheoremId::OmegaChain ||
                         id == TheoremId::AbsorbingDescent ||
                         id == TheoremId::GaussianOmega ||
                         id == TheoremId::RadicalOmega;
      if (!needs_ideal) {
        CheckParams p = base_params;
        p.ideal_gens.reset();
        reports.push_back(check(id, ring, p));
        continue;
      }
      for (const auto& I : enumerate_ideals(ring)) {
        if (!I.proper()) continue;
        CheckParams p = base_params;
        p.ideal_gens = I.min_generators();
        reports.push_back(check(id, ring, p));
      }
    }
  }
  return reports;
}

std::vector<std::string> load_corpus(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open corpus file: " + path);
  std::vector<std::string> out;
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    while (!line.empty() && std::isspace(static_cast<unsigned char>(line.back())))
      line.pop_back();
    std::size_t start = 0;
    while (start < line.size() &&
           std::isspace(static_cast<unsigned char>(line[start])))
      ++start;
    line = line.substr(start);
    if (!line.empty()) out.push_back(line);
  }
  return out;
}

}  // namespace ringlab
