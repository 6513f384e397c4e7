#ifndef RINGLAB_HARNESS_HPP
#define RINGLAB_HARNESS_HPP

#include <chrono>
#include <map>
#include <optional>

#include "ringlab/series.hpp"

namespace ringlab {

enum class TheoremId {
  ReductionLemma,
  SqrtContainment,
  PrimeExtension,
  EpsilonProps,
  ArmendarizMccoy,
  OmegaChain,
  AbsorbingDescent,
  GaussianOmega,
  RadicalOmega,
};

const char* theorem_name(TheoremId id);
std::optional<TheoremId> theorem_from_name(const std::string& name);
std::vector<TheoremId> all_theorems();

struct CheckParams {
  std::optional<std::vector<Elem>> ideal_gens;  // for the I-parameterized checks
  std::uint32_t N = 2;
  std::uint32_t degree = 1;   // polynomial search bound
  std::uint32_t m_max = 0, n_max = 0, k_max = 0;
  std::uint64_t work_ceiling = kDefaultWorkCeiling;
  ScanPolicy policy;
};

struct HypothesisCheck {
  std::string name;
  Verdict verdict;
};

// One named conditional check. The conclusion only counts toward pass/fail
// when every hypothesis is Proven; otherwise it is informational. A refuted
// conclusion under verified hypotheses is CRITICAL: engine bug or genuine
// counterexample.
struct TheoremReport {
  std::string theorem_id;
  std::string ring;
  nlohmann::json params;
  std::vector<HypothesisCheck> hypotheses;
  Verdict conclusion;
  std::vector<std::string> notes;
  bool skipped = false;
  std::string skip_reason;
  std::int64_t elapsed_ms = 0;

  bool hypotheses_verified() const {
    for (const auto& h : hypotheses)
      if (!h.verdict.proven()) return false;
    return true;
  }
  bool critical() const {
    return !skipped && hypotheses_verified() && conclusion.refuted();
  }
  nlohmann::json to_json() const;
  std::string csv_row() const;
};

struct ConjectureRow {
  std::string ring;
  std::string ideal;
  std::uint32_t N = 0;
  std::optional<std::uint32_t> omega_r;
  std::optional<std::uint32_t> omega_b;
  bool strong_eq_plain = false;
  bool amount_algebra = false;
  bool gaussian = false;
  bool radical_ideal = false;
  bool hypotheses_verified = false;
  std::optional<bool> equal;
  std::string skipped;  // reason, empty when computed

  nlohmann::json to_json() const;
};

struct SearchReport {
  std::vector<ConjectureRow> rows;
  std::vector<ConjectureRow> counterexamples;  // verified hypotheses, unequal
  std::uint64_t seed = 0;
  std::uint32_t n_max = 0;
  nlohmann::json to_json() const;
};

// Shared caches for a batch of checks: carriers, interners, and the
// per-ring / per-(ring, N) verdicts that several theorems consume.
class Session {
 public:
  explicit Session(ScanPolicy policy = {}, bool with_timings = false);

  TheoremReport check(TheoremId id, const RingPtr& ring, CheckParams params);

  // every n-absorbing ideal is strongly n-absorbing, n up to each ideal's
  // omega bound; theorems quote this hypothesis per ring
  Verdict strong_eq_plain(const RingPtr& ring,
                          std::uint64_t work_ceiling = kDefaultWorkCeiling);

  struct CarrierCtx {
    std::shared_ptr<TruncSeries> series;
    std::shared_ptr<IdealInterner> base_interner;
    std::shared_ptr<IdealInterner> carrier_interner;
    std::optional<AmountAlgebraReport> amount;
    std::optional<Verdict> gaussian;
  };

  CarrierCtx& carrier(const RingPtr& ring, std::uint32_t N);
  const AmountAlgebraReport& amount_report(const RingPtr& ring, std::uint32_t N);
  const Verdict& gaussian_verdict(const RingPtr& ring, std::uint32_t N);

  SearchReport conjecture_search(const std::vector<std::string>& corpus,
                                 std::uint32_t n_max, std::uint64_t seed,
                                 std::uint32_t budget,
                                 std::uint64_t work_ceiling = kDefaultWorkCeiling);

  std::vector<TheoremReport> suite(const std::vector<std::string>& corpus,
                                   const CheckParams& base_params);

  const ScanPolicy& policy() const { return policy_; }

 private:
  ScanPolicy policy_;
  bool with_timings_;
  std::map<std::string, Verdict> strong_plain_;
  std::map<std::pair<std::string, std::uint32_t>, CarrierCtx> carriers_;
};

std::string reports_to_csv(const std::vector<TheoremReport>& reports);

// corpus file: one ring spec per line, '#' comments
std::vector<std::string> load_corpus(const std::string& path);

}  // namespace ringlab

#endif
