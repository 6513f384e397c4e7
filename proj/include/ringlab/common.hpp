#ifndef RINGLAB_COMMON_HPP
#define RINGLAB_COMMON_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace ringlab {

inline constexpr const char* kVersion = "0.1.0";

// Element of a finite ring, encoded as its position in the ring's
// canonical enumeration (mixed-radix over the coordinate vector).
using Elem = std::uint32_t;

struct SyntaxError : std::runtime_error {
  std::size_t pos;
  std::string expected;
  SyntaxError(std::size_t p, const std::string& exp, const std::string& msg)
      : std::runtime_error(msg), pos(p), expected(exp) {}
};

struct ValidationError : std::runtime_error {
  explicit ValidationError(const std::string& msg) : std::runtime_error(msg) {}
};

struct CapacityError : std::runtime_error {
  explicit CapacityError(const std::string& msg) : std::runtime_error(msg) {}
};

// Thrown when a search would exceed its work ceiling.
struct BoundError : std::runtime_error {
  std::uint64_t consumed;
  std::uint64_t limit;
  BoundError(std::uint64_t c, std::uint64_t l, const std::string& msg)
      : std::runtime_error(msg), consumed(c), limit(l) {}
};

// Membership set over a ring's enumeration order.
class Bitset {
 public:
  Bitset() = default;
  explicit Bitset(std::uint64_t n) : size_(n), words_((n + 63) / 64, 0) {}

  std::uint64_t size() const { return size_; }
  bool test(std::uint64_t i) const {
    return (words_[i >> 6] >> (i & 63)) & 1u;
  }
  void set(std::uint64_t i) { words_[i >> 6] |= (std::uint64_t{1} << (i & 63)); }
  void reset(std::uint64_t i) {
    words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63));
  }

  std::uint64_t count() const {
    std::uint64_t c = 0;
    for (auto w : words_) c += static_cast<std::uint64_t>(__builtin_popcountll(w));
    return c;
  }

  bool operator==(const Bitset& o) const {
    return size_ == o.size_ && words_ == o.words_;
  }
  bool operator!=(const Bitset& o) const { return !(*this == o); }

  // subset test: *this ⊆ o
  bool subset_of(const Bitset& o) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~o.words_[i]) return false;
    return true;
  }

  Bitset operator&(const Bitset& o) const {
    Bitset r(size_);
    for (std::size_t i = 0; i < words_.size(); ++i)
      r.words_[i] = words_[i] & o.words_[i];
    return r;
  }

  // deterministic total order: word 0 first
  bool lex_less(const Bitset& o) const { return words_ < o.words_; }

  std::uint64_t hash() const {
    std::uint64_t h = 1469598103934665603ull;
    for (auto w : words_) {
      h ^= w;
      h *= 1099511628211ull;
    }
    return h;
  }

  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t wi = 0; wi < words_.size(); ++wi) {
      std::uint64_t w = words_[wi];
      while (w) {
        unsigned b = static_cast<unsigned>(__builtin_ctzll(w));
        f(static_cast<std::uint64_t>(wi * 64 + b));
        w &= w - 1;
      }
    }
  }

  std::vector<std::uint32_t> to_list() const {
    std::vector<std::uint32_t> v;
    v.reserve(count());
    for_each([&](std::uint64_t i) { v.push_back(static_cast<std::uint32_t>(i)); });
    return v;
  }

 private:
  std::uint64_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

// SplitMix64: tiny deterministic generator; identical output on every
// platform, unlike the standard distributions.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  // uniform in [0, n), n > 0; modulo bias is irrelevant at our ranges
  std::uint64_t below(std::uint64_t n) { return next() % n; }

  // uniform in [lo, hi] inclusive
  std::int64_t between(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

  Rng fork(std::uint64_t stream) {
    Rng r(state_ ^ (0xa0761d6478bd642full * (stream + 1)));
    r.next();
    return r;
  }

 private:
  std::uint64_t state_;
};

// Counts search work against a ceiling; throws BoundError when exceeded.
class WorkBudget {
 public:
  explicit WorkBudget(std::uint64_t limit) : limit_(limit) {}
  void charge(std::uint64_t units = 1) {
    used_ += units;
    if (used_ > limit_)
      throw BoundError(used_, limit_, "work ceiling exceeded");
  }
  std::uint64_t used() const { return used_; }
  std::uint64_t limit() const { return limit_; }

 private:
  std::uint64_t used_ = 0;
  std::uint64_t limit_;
};

}  // namespace ringlab

#endif
