#include "ringlab/ideal.hpp"

#include <algorithm>

namespace ringlab {

namespace {

// additive closure of the elements already marked in `bits`
void close_under_addition(const Ring& ring, Bitset& bits,
                          std::vector<Elem>& list) {
  for (std::size_t i = 0; i < list.size(); ++i)
    for (std::size_t j = 0; j <= i; ++j) {
      Elem c = ring.add(list[i], list[j]);
      if (!bits.test(c)) {
        bits.set(c);
        list.push_back(c);
      }
    }
}

}  // namespace

Ideal ideal_from_bits(const RingPtr& ring, Bitset bits,
                      std::vector<Elem> gens) {
  return Ideal{ring, std::move(gens), std::move(bits)};
}

Ideal zero_ideal(const RingPtr& ring) {
  Bitset b(ring->size());
  b.set(0);
  return Ideal{ring, {}, std::move(b)};
}

Ideal unit_ideal(const RingPtr& ring) {
  Bitset b(ring->size());
  for (Elem e = 0; e < ring->size(); ++e) b.set(e);
  return Ideal{ring, {ring->one()}, std::move(b)};
}

Ideal ideal_closure(const RingPtr& ring, const std::vector<Elem>& gens) {
  Bitset bits(ring->size());
  std::vector<Elem> list;
  bits.set(0);
  list.push_back(0);
  for (Elem g : gens)
    for (Elem r = 0; r < ring->size(); ++r) {
      Elem x = ring->mul(r, g);
      if (!bits.test(x)) {
        bits.set(x);
        list.push_back(x);
      }
    }
  close_under_addition(*ring, bits, list);
  return Ideal{ring, gens, std::move(bits)};
}

Ideal ideal_sum(const Ideal& a, const Ideal& b) {
  // both sets are ideals, so {x+y} is already closed
  Bitset bits(a.ring->size());
  auto la = a.elems.to_list();
  auto lb = b.elems.to_list();
  for (Elem x : la)
    for (Elem y : lb) bits.set(a.ring->add(x, y));
  std::vector<Elem> gens = a.gens;
  gens.insert(gens.end(), b.gens.begin(), b.gens.end());
  return Ideal{a.ring, std::move(gens), std::move(bits)};
}

Ideal ideal_product(const Ideal& a, const Ideal& b) {
  Bitset bits(a.ring->size());
  std::vector<Elem> list;
  bits.set(0);
  list.push_back(0);
  auto la = a.elems.to_list();
  auto lb = b.elems.to_list();
  for (Elem x : la)
    for (Elem y : lb) {
      Elem p = a.ring->mul(x, y);
      if (!bits.test(p)) {
        bits.set(p);
        list.push_back(p);
      }
    }
  close_under_addition(*a.ring, bits, list);
  return Ideal{a.ring, {}, std::move(bits)};
}

Ideal ideal_power(const Ideal& a, std::uint32_t k) {
  if (k == 0) return unit_ideal(a.ring);
  Ideal out = a;
  for (std::uint32_t i = 1; i < k; ++i) out = ideal_product(out, a);
  return out;
}

Ideal ideal_intersection(const Ideal& a, const Ideal& b) {
  return Ideal{a.ring, {}, a.elems & b.elems};
}

std::vector<Ideal> prime_ideals(const RingPtr& ring) {
  std::vector<Ideal> primes;
  for (const auto& qc : ring->components()) {
    std::uint32_t n = qc.modulus;
    std::vector<std::uint32_t> ps;
    for (std::uint32_t d = 2; d * d <= n; ++d)
      while (n % d == 0) {
        if (ps.empty() || ps.back() != d) ps.push_back(d);
        n /= d;
      }
    if (n > 1 && (ps.empty() || ps.back() != n)) ps.push_back(n);
    for (std::uint32_t p : ps) {
      Bitset bits(ring->size());
      std::uint32_t coords[kMaxCoords];
      for (Elem e = 0; e < ring->size(); ++e) {
        ring->decode(e, coords);
        if (coords[qc.coord_offset] % p == 0) bits.set(e);
      }
      std::vector<Elem> gens;
      std::vector<std::uint32_t> g(ring->coord_count(), 0);
      g[qc.coord_offset] = p % qc.modulus;
      Elem pg = ring->encode(g.data());
      if (pg != 0) gens.push_back(pg);
      for (std::uint32_t i = 1; i < qc.basis_size(); ++i) {
        // variables of this component (nilpotent, hence in every prime)
        std::vector<std::uint32_t> vcoords(ring->coord_count(), 0);
        vcoords[qc.coord_offset + i] = 1;
        std::uint64_t deg = 0;
        for (auto x : qc.basis[i]) deg += x;
        if (deg == 1) gens.push_back(ring->encode(vcoords.data()));
      }
      primes.push_back(Ideal{ring, std::move(gens), std::move(bits)});
    }
  }
  return primes;
}

bool is_prime(const Ideal& i) {
  if (!i.proper()) return false;
  for (const auto& p : prime_ideals(i.ring))
    if (p.elems == i.elems) return true;
  return false;
}

Ideal radical(const Ideal& i) {
  Bitset acc(i.ring->size());
  bool any = false;
  for (const auto& p : prime_ideals(i.ring)) {
    if (!i.elems.subset_of(p.elems)) continue;
    if (!any) {
      acc = p.elems;
      any = true;
    } else {
      acc = acc & p.elems;
    }
  }
  if (!any) return unit_ideal(i.ring);  // only the unit ideal has no prime above
  return Ideal{i.ring, {}, std::move(acc)};
}

bool is_radical(const Ideal& i) { return radical(i).elems == i.elems; }

std::vector<Ideal> enumerate_ideals(const RingPtr& ring,
                                    const IdealOptions& opts) {
  std::unordered_map<std::uint64_t, std::vector<std::size_t>> index;
  std::vector<Ideal> pool;

  auto add = [&](Ideal&& id) -> bool {
    std::uint64_t h = id.elems.hash();
    auto& bucket = index[h];
    for (auto k : bucket)
      if (pool[k].elems == id.elems) return false;
    bucket.push_back(pool.size());
    pool.push_back(std::move(id));
    if (pool.size() > opts.ideal_capacity)
      throw CapacityError("ideal count exceeds capacity of " +
                          std::to_string(opts.ideal_capacity));
    return true;
  };

  for (Elem g = 0; g < ring->size(); ++g) {
    Bitset bits(ring->size());
    for (Elem r = 0; r < ring->size(); ++r) bits.set(ring->mul(r, g));
    add(Ideal{ring, {g}, std::move(bits)});
  }
  // close under pairwise sum; every ideal is a finite sum of principals
  for (std::size_t i = 0; i < pool.size(); ++i)
    for (std::size_t j = 0; j < i; ++j) add(ideal_sum(pool[i], pool[j]));

  std::sort(pool.begin(), pool.end(), [](const Ideal& a, const Ideal& b) {
    auto ca = a.elems.count(), cb = b.elems.count();
    if (ca != cb) return ca < cb;
    return a.elems.lex_less(b.elems);
  });
  for (auto& id : pool) id.gens = id.min_generators();
  return pool;
}

std::vector<Elem> Ideal::min_generators() const {
  if (is_zero()) return {};
  std::vector<Elem> gens;
  Bitset cover(ring->size());
  cover.set(0);
  for (Elem e = 1; e < ring->size(); ++e) {
    if (!elems.test(e) || cover.test(e)) continue;
    gens.push_back(e);
    cover = ideal_closure(ring, gens).elems;
    if (cover == elems) break;
  }
  return gens;
}

std::string Ideal::render() const {
  if (is_zero()) return "(0)";
  if (!proper()) return "(1)";
  std::vector<Elem> gs = gens.empty() ? min_generators() : gens;
  std::string out = "(";
  for (std::size_t i = 0; i < gs.size(); ++i) {
    if (i) out += ",";
    out += ring->format(gs[i]);
  }
  return out + ")";
}

IdealInterner::IdealInterner(RingPtr ring) : ring_(std::move(ring)) {
  principal_memo_.assign(ring_->size(), -1);
}

int IdealInterner::intern(const Bitset& bits) {
  std::uint64_t h = bits.hash();
  auto& bucket = index_[h];
  for (int id : bucket)
    if (pool_[static_cast<std::size_t>(id)] == bits) return id;
  int id = static_cast<int>(pool_.size());
  pool_.push_back(bits);
  bucket.push_back(id);
  return id;
}

int IdealInterner::zero_id() {
  Bitset b(ring_->size());
  b.set(0);
  return intern(b);
}

int IdealInterner::unit_id() {
  Bitset b(ring_->size());
  for (Elem e = 0; e < ring_->size(); ++e) b.set(e);
  return intern(b);
}

int IdealInterner::principal(Elem g) {
  int& memo = principal_memo_[g];
  if (memo >= 0) return memo;
  Bitset bits(ring_->size());
  for (Elem r = 0; r < ring_->size(); ++r) bits.set(ring_->mul(r, g));
  memo = intern(bits);
  return memo;
}

int IdealInterner::product(int a, int b) {
  auto key = std::minmax(a, b);
  auto it = prod_memo_.find({key.first, key.second});
  if (it != prod_memo_.end()) return it->second;
  Ideal pa = ideal_from_bits(ring_, bits(a));
  Ideal pb = ideal_from_bits(ring_, bits(b));
  int id = intern(ideal_product(pa, pb).elems);
  prod_memo_[{key.first, key.second}] = id;
  return id;
}

int IdealInterner::power(int a, std::uint32_t k) {
  if (k == 0) return unit_id();
  if (k == 1) return a;
  auto it = pow_memo_.find({a, k});
  if (it != pow_memo_.end()) return it->second;
  int r = product(power(a, k - 1), a);
  pow_memo_[{a, k}] = r;
  return r;
}

int IdealInterner::sum(int a, int b) {
  Ideal pa = ideal_from_bits(ring_, bits(a));
  Ideal pb = ideal_from_bits(ring_, bits(b));
  return intern(ideal_sum(pa, pb).elems);
}

}  // namespace ringlab
