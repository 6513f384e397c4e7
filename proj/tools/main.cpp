#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "ringlab/harness.hpp"
#include "ringlab/pid.hpp"

using namespace ringlab;

namespace {

// 0 ok, 1 usage, 2 critical counterexample, 3 capacity/bound skip
constexpr int kExitOk = 0;
constexpr int kExitCritical = 2;
constexpr int kExitSkip = 3;

struct GlobalOpts {
  std::uint64_t seed = 0;
  std::uint64_t work_ceiling = kDefaultWorkCeiling;
  std::uint32_t exhaustive_limit = 1000;
  std::uint64_t samples = 100000;
  std::string format = "text";
  std::string out_path;
  bool timings = false;

  ScanPolicy policy() const {
    ScanPolicy p;
    p.exhaustive_limit = exhaustive_limit;
    p.samples = samples;
    p.seed = seed;
    return p;
  }

  nlohmann::json config_json() const {
    return {{"version", kVersion},
            {"seed", seed},
            {"workCeiling", work_ceiling},
            {"exhaustiveLimit", exhaustive_limit},
            {"samples", samples},
            {"format", format},
            {"timings", timings}};
  }
};

void emit(const GlobalOpts& g, const nlohmann::json& doc,
          const std::string& text) {
  if (g.format == "json") {
    nlohmann::json wrapped = doc;
    wrapped["config"] = g.config_json();
    std::string payload = wrapped.dump(2) + "\n";
    if (!g.out_path.empty()) {
      std::ofstream f(g.out_path);
      f << payload;
    } else {
      std::cout << payload;
    }
  } else {
    if (!g.out_path.empty()) {
      std::ofstream f(g.out_path);
      f << text;
    } else {
      std::cout << text;
    }
  }
}

std::vector<Elem> parse_gens(const RingPtr& ring, const std::string& text) {
  std::vector<Elem> gens;
  std::size_t start = 0;
  int depth = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    if (i < text.size() && text[i] == '(') ++depth;
    if (i < text.size() && text[i] == ')') --depth;
    if (i == text.size() || (text[i] == ',' && depth == 0)) {
      gens.push_back(ring->parse_element(text.substr(start, i - start)));
      start = i + 1;
    }
  }
  return gens;
}

std::string omega_line(const RingPtr& ring, const OmegaResult& r) {
  if (!r.finite())
    return "omega > " + std::to_string(r.n_max) + " (bound exhausted)";
  std::string line = "omega = " + std::to_string(r.n);
  if (r.n == 1)
    line += " (prime)";
  else
    line += ", witness " + ring->format_tuple(r.witness) + " at n=" +
            std::to_string(r.n - 1);
  return line;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite commutative ring lab: ideals, n-absorbing bounds, "
               "coefficient-ideal checks"};
  app.require_subcommand(1);
  GlobalOpts g;
  app.add_option("--seed", g.seed, "root seed for all sampling");
  app.add_option("--work-ceiling", g.work_ceiling,
                 "tuple evaluations allowed per search");
  app.add_option("--exhaustive-limit", g.exhaustive_limit,
                 "carrier size up to which pair scans are exhaustive");
  app.add_option("--samples", g.samples, "sample count for large carriers");
  app.add_option("--format", g.format, "text|json")
      ->check(CLI::IsMember({"text", "json"}));
  app.add_option("--out", g.out_path, "write the report to a file");
  app.add_flag("--timings", g.timings,
               "include wall-clock times in reports (breaks byte-stability)");

  // ring-info SPEC
  std::string spec_text;
  auto* ring_info = app.add_subcommand("ring-info", "order, reducedness, ideal count");
  ring_info->add_option("spec", spec_text, "ring spec")->required();

  // ideals SPEC
  auto* ideals_cmd = app.add_subcommand("ideals", "list every ideal");
  ideals_cmd->add_option("spec", spec_text)->required();

  // omega SPEC --ideal g1,g2
  std::string ideal_text = "0";
  std::uint32_t opt_n = 0, opt_N = 2, opt_d = 1;
  auto* omega_cmd = app.add_subcommand("omega", "least n with the ideal n-absorbing");
  omega_cmd->add_option("spec", spec_text)->required();
  omega_cmd->add_option("--ideal", ideal_text, "generators, comma separated");
  omega_cmd->add_option("--n-max", opt_n, "override the heuristic bound");

  // absorbing SPEC --ideal ... -n N
  std::uint32_t absorbing_n = 1;
  auto* absorbing_cmd = app.add_subcommand("absorbing", "test n-absorbency");
  absorbing_cmd->add_option("spec", spec_text)->required();
  absorbing_cmd->add_option("--ideal", ideal_text);
  absorbing_cmd->add_option("-n", absorbing_n, "n to test")->required();
  bool strongly = false;
  absorbing_cmd->add_flag("--strongly", strongly, "quantify over ideals");

  // dm-exponent SPEC --f ... --g ...
  std::string f_text, g_text;
  auto* dm_cmd = app.add_subcommand(
      "dm-exponent", "least n with c(f)^(n+1)c(g) = c(f)^n c(fg)");
  dm_cmd->add_option("spec", spec_text)->required();
  dm_cmd->add_option("--f", f_text, "coefficients of f, ascending")->required();
  dm_cmd->add_option("--g", g_text, "coefficients of g, ascending")->required();

  // amount-check SPEC -N P
  auto* amount_cmd = app.add_subcommand(
      "amount-check", "axioms, amount formula, epsilon, classifiers");
  amount_cmd->add_option("spec", spec_text)->required();
  amount_cmd->add_option("-N,--precision", opt_N, "series precision");

  // theorem ID SPEC ...
  std::string theorem_id_text;
  auto* theorem_cmd = app.add_subcommand("theorem", "run one named check");
  theorem_cmd->add_option("id", theorem_id_text, "theorem id")->required();
  theorem_cmd->add_option("spec", spec_text)->required();
  theorem_cmd->add_option("--ideal", ideal_text);
  theorem_cmd->add_option("-N,--precision", opt_N);
  theorem_cmd->add_option("--degree", opt_d);

  // suite --corpus FILE
  std::string corpus_path;
  auto* suite_cmd = app.add_subcommand("suite", "every check over a corpus");
  suite_cmd->add_option("--corpus", corpus_path, "ring specs, one per line")
      ->required();
  suite_cmd->add_option("-N,--precision", opt_N);
  std::string csv_path;
  suite_cmd->add_option("--csv", csv_path, "also write a CSV summary");

  // conjecture --corpus FILE --Nmax K --seed S --budget B
  std::uint32_t opt_nmax = 2;
  std::uint32_t opt_budget = 0;
  auto* conj_cmd = app.add_subcommand(
      "conjecture", "omega_R vs omega_B table over a corpus");
  conj_cmd->add_option("--corpus", corpus_path)->required();
  conj_cmd->add_option("--Nmax", opt_nmax);
  conj_cmd->add_option("--budget", opt_budget, "random rings to add");

  // pid omega M | pid gauss | pid dedekind
  auto* pid_cmd = app.add_subcommand("pid", "integer (Dedekind domain) backend");
  std::uint64_t pid_m = 0;
  std::uint32_t pid_samples = 1000;
  auto* pid_omega = pid_cmd->add_subcommand("omega", "omega_Z((m))");
  pid_omega->add_option("m", pid_m)->required();
  auto* pid_gauss = pid_cmd->add_subcommand("gauss", "random Gauss lemma suite");
  pid_gauss->add_option("--samples", pid_samples);
  auto* pid_dede = pid_cmd->add_subcommand(
      "dedekind", "omega_{Z[X]}((m)[X]) = omega_Z((m)) evidence");
  pid_dede->add_option("m", pid_m)->required();
  pid_dede->add_option("--samples", pid_samples);
  pid_dede->add_option("--degree", opt_d);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (*ring_info) {
      auto ring = Ring::build(spec_text);
      Elem wit = 0;
      bool reduced = ring->is_reduced(&wit);
      std::size_t n_ideals = enumerate_ideals(ring).size();
      std::ostringstream os;
      os << "order " << ring->size() << ", "
         << (reduced ? "reduced" : "not reduced") << ", " << n_ideals
         << " ideals\n";
      os << "spec: " << ring->spec_text() << "\n";
      os << "one at index " << ring->one() << "\n";
      if (!reduced) os << "nilpotent witness: " << ring->format(wit) << "\n";
      nlohmann::json j = {{"ring", ring->spec_text()},
                          {"order", ring->size()},
                          {"reduced", reduced},
                          {"ideals", n_ideals},
                          {"oneIndex", ring->one()}};
      if (!reduced) j["nilpotentWitness"] = ring->format(wit);
      emit(g, j, os.str());
      return kExitOk;
    }

    if (*ideals_cmd) {
      auto ring = Ring::build(spec_text);
      auto ideals = enumerate_ideals(ring);
      std::ostringstream os;
      nlohmann::json rows = nlohmann::json::array();
      for (const auto& I : ideals) {
        os << I.render() << "  size " << I.size()
           << (is_prime(I) ? "  prime" : "") << "\n";
        rows.push_back({{"ideal", I.render()},
                        {"size", I.size()},
                        {"prime", is_prime(I)}});
      }
      emit(g, {{"ring", ring->spec_text()}, {"ideals", rows}}, os.str());
      return kExitOk;
    }

    if (*omega_cmd) {
      auto ring = Ring::build(spec_text);
      Ideal I = ideal_closure(ring, parse_gens(ring, ideal_text));
      WorkBudget budget(g.work_ceiling);
      OmegaResult r = omega(I, opt_n, budget);
      std::string line = omega_line(ring, r);
      nlohmann::json j = {{"ring", ring->spec_text()},
                          {"ideal", I.render()},
                          {"kind", r.finite() ? "finite" : "exceeds_bound"},
                          {"n", r.n},
                          {"nMax", r.n_max}};
      if (!r.witness.empty()) j["witness"] = ring->format_tuple(r.witness);
      emit(g, j, line + "\n");
      return r.finite() ? kExitOk : kExitSkip;
    }

    if (*absorbing_cmd) {
      auto ring = Ring::build(spec_text);
      Ideal I = ideal_closure(ring, parse_gens(ring, ideal_text));
      WorkBudget budget(g.work_ceiling);
      std::string line;
      nlohmann::json j = {{"ring", ring->spec_text()},
                          {"ideal", I.render()},
                          {"n", absorbing_n}};
      if (strongly) {
        IdealInterner interner(ring);
        std::vector<int> ids;
        for (const auto& J : enumerate_ideals(ring))
          ids.push_back(interner.intern(J));
        AbsorbIdeals r =
            is_strongly_n_absorbing(I, absorbing_n, interner, ids, budget);
        line = r.proven ? "proven" : "refuted";
        j["kind"] = line;
        if (!r.proven) {
          std::string w = "[";
          for (std::size_t i = 0; i < r.witness.size(); ++i)
            w += (i ? "," : "") + interner.ideal(r.witness[i]).render();
          w += "]";
          j["witness"] = w;
          line += " " + w;
        }
      } else {
        AbsorbElems r = is_n_absorbing(I, absorbing_n, budget);
        line = r.proven ? "proven" : "refuted";
        j["kind"] = line;
        if (!r.proven) {
          j["witness"] = ring->format_tuple(r.witness);
          line += " " + ring->format_tuple(r.witness);
        }
      }
      emit(g, j, line + "\n");
      return kExitOk;
    }

    if (*dm_cmd) {
      auto ring = Ring::build(spec_text);
      Poly f = parse_poly(ring, f_text);
      Poly gp = parse_poly(ring, g_text);
      IdealInterner interner(ring);
      DmResult r = dm_exponent(f, gp, 0, interner);
      std::ostringstream os;
      nlohmann::json j = {{"ring", ring->spec_text()},
                          {"f", f.render()},
                          {"g", gp.render()}};
      if (r.found) {
        os << "n = " << r.n;
        j["n"] = r.n;
        if (r.anomaly) {
          os << "  ANOMALY: n exceeds deg(g)";
          j["anomaly"] = true;
        }
        os << "\n";
      } else {
        os << "no exponent found up to " << r.n_searched << " (ANOMALY)\n";
        j["anomaly"] = true;
      }
      emit(g, j, os.str());
      return r.anomaly ? kExitCritical : kExitOk;
    }

    if (*amount_cmd) {
      auto ring = Ring::build(spec_text);
      TruncSeries B(ring, opt_N);
      IdealInterner interner(ring);
      auto rep = is_amount_algebra(B, interner, 0, 0, g.policy());
      Verdict gau = is_gaussian(B, interner, g.policy());
      Verdict arm = is_armendariz(B, interner, g.policy());
      Verdict mcc = mccoy_check(B, g.policy());
      std::ostringstream os;
      os << "carrier " << B.carrier()->spec_text() << " (order "
         << B.carrier()->size() << ")\n";
      auto show = [&](const char* name, const Verdict& v) {
        os << name << ": " << v.kind_name();
        if (!v.witness.empty()) {
          os << "  witness";
          for (const auto& w : v.witness) os << " " << w;
        }
        os << "\n";
      };
      show("axiom 1 (A_0, A_1)", rep.axioms.preserves_zero_one);
      show("axiom 2 (faithful)", rep.axioms.faithful);
      show("axiom 3 (homogeneous)", rep.axioms.homogeneous);
      show("axiom 4 (submultiplicative)", rep.axioms.submultiplicative);
      show("amount formula", rep.formula);
      if (rep.formula.passed())
        os << "  max exponents (m,n) = (" << rep.max_m << "," << rep.max_n
           << ")\n";
      show("epsilon (a)", rep.epsilon_a);
      show("epsilon (b)", rep.epsilon_b);
      show("amount algebra", rep.overall);
      show("gaussian", gau);
      show("armendariz", arm);
      show("mccoy", mcc);
      nlohmann::json j = {{"ring", ring->spec_text()},
                          {"carrier", B.carrier()->spec_text()},
                          {"N", opt_N},
                          {"axioms",
                           {{"preservesZeroOne",
                             rep.axioms.preserves_zero_one.to_json()},
                            {"faithful", rep.axioms.faithful.to_json()},
                            {"homogeneous", rep.axioms.homogeneous.to_json()},
                            {"submultiplicative",
                             rep.axioms.submultiplicative.to_json()}}},
                          {"formula", rep.formula.to_json()},
                          {"maxExponents", {rep.max_m, rep.max_n}},
                          {"epsilonA", rep.epsilon_a.to_json()},
                          {"epsilonB", rep.epsilon_b.to_json()},
                          {"amountAlgebra", rep.overall.to_json()},
                          {"gaussian", gau.to_json()},
                          {"armendariz", arm.to_json()},
                          {"mccoy", mcc.to_json()}};
      emit(g, j, os.str());
      return kExitOk;
    }

    if (*theorem_cmd) {
      auto id = theorem_from_name(theorem_id_text);
      if (!id) {
        std::cerr << "unknown theorem id '" << theorem_id_text << "'; one of:";
        for (TheoremId t : all_theorems()) std::cerr << " " << theorem_name(t);
        std::cerr << "\n";
        return 1;
      }
      auto ring = Ring::build(spec_text);
      Session session(g.policy(), g.timings);
      CheckParams p;
      p.N = opt_N;
      p.degree = opt_d;
      p.work_ceiling = g.work_ceiling;
      p.policy = g.policy();
      bool needs_ideal = *id == TheoremId::OmegaChain ||
                         *id == TheoremId::AbsorbingDescent ||
                         *id == TheoremId::GaussianOmega ||
                         *id == TheoremId::RadicalOmega;
      if (needs_ideal) p.ideal_gens = parse_gens(ring, ideal_text);
      TheoremReport rep = session.check(*id, ring, p);
      std::ostringstream os;
      os << rep.theorem_id << " on " << rep.ring << "\n";
      for (const auto& h : rep.hypotheses)
        os << "  hypothesis " << h.name << ": " << h.verdict.kind_name()
           << "\n";
      if (rep.skipped) {
        os << "  skipped: " << rep.skip_reason << "\n";
      } else {
        os << "  conclusion: " << rep.conclusion.kind_name();
        for (const auto& w : rep.conclusion.witness) os << " " << w;
        os << (rep.hypotheses_verified() ? "" : "  [hypotheses-unverified]")
           << "\n";
      }
      for (const auto& n : rep.notes) os << "  note: " << n << "\n";
      emit(g, rep.to_json(), os.str());
      if (rep.critical()) {
        std::cerr << "CRITICAL: verified hypotheses with refuted conclusion\n";
        return kExitCritical;
      }
      return rep.skipped ? kExitSkip : kExitOk;
    }

    if (*suite_cmd) {
      auto corpus = load_corpus(corpus_path);
      Session session(g.policy(), g.timings);
      CheckParams p;
      p.N = opt_N;
      p.work_ceiling = g.work_ceiling;
      p.policy = g.policy();
      auto reports = session.suite(corpus, p);
      bool any_skip = false;
      std::ostringstream os;
      nlohmann::json arr = nlohmann::json::array();
      for (const auto& rep : reports) {
        arr.push_back(rep.to_json());
        os << rep.theorem_id << " " << rep.ring;
        if (rep.params.contains("ideal"))
          os << " I=" << rep.params["ideal"].get<std::string>();
        if (rep.skipped) {
          os << " skipped (" << rep.skip_reason << ")\n";
          any_skip = true;
          continue;
        }
        os << " " << (rep.hypotheses_verified() ? "[verified]" : "[info]")
           << " " << rep.conclusion.kind_name() << "\n";
        if (rep.critical()) {
          os << "CRITICAL witness:";
          for (const auto& w : rep.conclusion.witness) os << " " << w;
          os << "\n";
          emit(g, {{"reports", arr}}, os.str());
          return kExitCritical;
        }
      }
      if (!csv_path.empty()) {
        std::ofstream f(csv_path);
        f << reports_to_csv(reports);
      }
      emit(g, {{"reports", arr}}, os.str());
      return any_skip ? kExitSkip : kExitOk;
    }

    if (*conj_cmd) {
      auto corpus = load_corpus(corpus_path);
      Session session(g.policy(), g.timings);
      SearchReport report = session.conjecture_search(
          corpus, opt_nmax, g.seed, opt_budget, g.work_ceiling);
      std::ostringstream os;
      bool any_skip = false;
      for (const auto& row : report.rows) {
        os << row.ring << "  I=" << row.ideal << "  N=" << row.N << "  ";
        if (!row.skipped.empty()) {
          os << "skipped (" << row.skipped << ")";
          any_skip = true;
        } else {
          os << "omega_R=" << (row.omega_r ? std::to_string(*row.omega_r) : "?")
             << " omega_B=" << (row.omega_b ? std::to_string(*row.omega_b) : "?")
             << (row.hypotheses_verified ? " [verified]" : " [info]")
             << (row.equal && *row.equal ? " equal" : " UNEQUAL");
        }
        os << "\n";
      }
      os << report.counterexamples.size()
         << " counterexample(s) with verified hypotheses\n";
      emit(g, report.to_json(), os.str());
      if (!report.counterexamples.empty()) return kExitCritical;
      return any_skip ? kExitSkip : kExitOk;
    }

    if (*pid_cmd) {
      if (*pid_omega) {
        OmegaIntResult r = omega_int(pid_m, g.work_ceiling);
        std::ostringstream os;
        os << "omega = " << r.omega << " (= Omega(" << pid_m
           << ")); oracle Z/" << pid_m << " agrees\n";
        nlohmann::json j = {{"m", pid_m},
                            {"omega", r.omega},
                            {"Omega", r.omega_factor},
                            {"witness", r.witness}};
        emit(g, j, os.str());
        return kExitOk;
      }
      if (*pid_gauss) {
        Verdict v = gauss_random_suite(pid_samples, g.seed);
        std::ostringstream os;
        os << "gauss suite (" << pid_samples << " samples): " << v.kind_name()
           << "\n";
        emit(g, {{"samples", pid_samples}, {"verdict", v.to_json()}}, os.str());
        return v.passed() ? kExitOk : kExitCritical;
      }
      if (*pid_dede) {
        Verdict v = dedekind_omega_check(pid_m, pid_samples, opt_d, g.seed);
        std::ostringstream os;
        os << "dedekind omega check m=" << pid_m << ": " << v.kind_name()
           << "\n";
        emit(g, {{"m", pid_m}, {"verdict", v.to_json()}}, os.str());
        return v.passed() ? kExitOk : kExitCritical;
      }
      std::cerr << "pid needs a subcommand: omega | gauss | dedekind\n";
      return 1;
    }
  } catch (const SyntaxError& e) {
    std::cerr << "syntax error: " << e.what() << "\n";
    return 1;
  } catch (const ValidationError& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return 1;
  } catch (const CapacityError& e) {
    std::cerr << "capacity: " << e.what() << "\n";
    return kExitSkip;
  } catch (const BoundError& e) {
    std::cerr << "work ceiling: " << e.what() << "\n";
    return kExitSkip;
  }
  return 1;
}
