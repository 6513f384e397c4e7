#ifndef RINGLAB_IDEAL_HPP
#define RINGLAB_IDEAL_HPP

#include <map>
#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include "ringlab/ring.hpp"

namespace ringlab {

// Ideal of a finite ring: generators plus the closed element set.
// Identity is by element set; generators are kept for display only.
struct Ideal {
  RingPtr ring;
  std::vector<Elem> gens;
  Bitset elems;

  bool contains(Elem e) const { return elems.test(e); }
  bool proper() const { return !elems.test(ring->one()); }
  bool is_zero() const { return elems.count() == 1; }
  std::uint64_t size() const { return elems.count(); }
  std::vector<Elem> element_list() const {
    auto v = elems.to_list();
    return {v.begin(), v.end()};
  }
  bool operator==(const Ideal& o) const { return elems == o.elems; }

  // deterministic minimal generating set (greedy in enumeration order)
  std::vector<Elem> min_generators() const;
  std::string render() const;
};

struct IdealOptions {
  std::uint64_t ideal_capacity = 4096;  // enumerate_ideals ceiling
};

Ideal ideal_closure(const RingPtr& ring, const std::vector<Elem>& gens);
Ideal ideal_from_bits(const RingPtr& ring, Bitset bits,
                      std::vector<Elem> gens = {});
Ideal zero_ideal(const RingPtr& ring);
Ideal unit_ideal(const RingPtr& ring);

Ideal ideal_sum(const Ideal& a, const Ideal& b);
Ideal ideal_product(const Ideal& a, const Ideal& b);
Ideal ideal_power(const Ideal& a, std::uint32_t k);
Ideal ideal_intersection(const Ideal& a, const Ideal& b);

// {r : r^k in I for some k}; computed as the intersection of the primes
// containing I, which agrees with the power definition in a finite ring.
Ideal radical(const Ideal& i);
bool is_radical(const Ideal& i);

// Every prime of these rings is the preimage of (p) under the projection
// that kills all (nilpotent) variables of one component, so the full list
// is available without enumeration.
std::vector<Ideal> prime_ideals(const RingPtr& ring);
bool is_prime(const Ideal& i);

// All ideals: sum-closure of the principal ideals, ordered by popcount
// then lexicographic bitset.
std::vector<Ideal> enumerate_ideals(const RingPtr& ring,
                                    const IdealOptions& opts = {});

// Interning plus memoized lattice arithmetic for scan-heavy callers.
class IdealInterner {
 public:
  explicit IdealInterner(RingPtr ring);

  int intern(const Bitset& bits);
  int intern(const Ideal& ideal) { return intern(ideal.elems); }
  const Bitset& bits(int id) const { return pool_[static_cast<std::size_t>(id)]; }
  Ideal ideal(int id) const { return ideal_from_bits(ring_, bits(id)); }

  int zero_id();
  int unit_id();
  int principal(Elem g);
  int product(int a, int b);
  int power(int a, std::uint32_t k);
  int sum(int a, int b);
  bool subset(int a, int b) const { return bits(a).subset_of(bits(b)); }

  const RingPtr& ring() const { return ring_; }
  std::size_t pool_size() const { return pool_.size(); }

 private:
  RingPtr ring_;
  std::vector<Bitset> pool_;
  std::unordered_map<std::uint64_t, std::vector<int>> index_;
  std::map<std::pair<int, int>, int> prod_memo_;
  std::map<std::pair<int, std::uint32_t>, int> pow_memo_;
  std::vector<int> principal_memo_;
};

}  // namespace ringlab

#endif
