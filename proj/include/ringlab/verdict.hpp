#ifndef RINGLAB_VERDICT_HPP
#define RINGLAB_VERDICT_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

namespace ringlab {

// Outcome of a property check. Proven is reserved for fully enumerated
// finite quantifier domains; bounded or sampled scans that find nothing
// report NoCounterexampleUpTo with their bounds.
struct Verdict {
  enum class Kind { Proven, Refuted, NoCounterexampleUpTo };

  Kind kind = Kind::Proven;
  std::vector<std::string> witness;            // rendered, refutations only
  std::map<std::string, std::int64_t> bounds;  // named bounds when not exhaustive
  std::int64_t elapsed_ms = 0;

  bool proven() const { return kind == Kind::Proven; }
  bool refuted() const { return kind == Kind::Refuted; }
  bool passed() const { return kind != Kind::Refuted; }

  static Verdict proven_v() { return Verdict{}; }
  static Verdict refuted_v(std::vector<std::string> w) {
    Verdict v;
    v.kind = Kind::Refuted;
    v.witness = std::move(w);
    return v;
  }
  static Verdict bounded_v(std::map<std::string, std::int64_t> b) {
    Verdict v;
    v.kind = Kind::NoCounterexampleUpTo;
    v.bounds = std::move(b);
    return v;
  }

  const char* kind_name() const {
    switch (kind) {
      case Kind::Proven: return "proven";
      case Kind::Refuted: return "refuted";
      default: return "no_counterexample_up_to";
    }
  }

  nlohmann::json to_json() const {
    nlohmann::json j;
    j["kind"] = kind_name();
    if (!witness.empty()) j["witness"] = witness;
    if (!bounds.empty()) j["bounds"] = bounds;
    j["elapsedMs"] = elapsed_ms;
    return j;
  }
};

}  // namespace ringlab

#endif
