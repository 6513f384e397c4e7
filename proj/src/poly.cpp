#include "ringlab/poly.hpp"

#include <algorithm>

namespace ringlab {

Poly Poly::make(RingPtr ring, std::vector<Elem> coeffs) {
  while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
  return Poly{std::move(ring), std::move(coeffs)};
}

Poly poly_add(const Poly& a, const Poly& b) {
  std::vector<Elem> out(std::max(a.coeffs.size(), b.coeffs.size()), 0);
  for (std::size_t i = 0; i < out.size(); ++i)
    out[i] = a.ring->add(a.coeff(i), b.coeff(i));
  return Poly::make(a.ring, std::move(out));
}

Poly poly_mul(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly::make(a.ring, {});
  std::vector<Elem> out(a.coeffs.size() + b.coeffs.size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs.size(); ++i) {
    if (a.coeffs[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs.size(); ++j) {
      if (b.coeffs[j] == 0) continue;
      out[i + j] =
          a.ring->add(out[i + j], a.ring->mul(a.coeffs[i], b.coeffs[j]));
    }
  }
  return Poly::make(a.ring, std::move(out));
}

Poly poly_scale(Elem r, const Poly& a) {
  std::vector<Elem> out(a.coeffs.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = a.ring->mul(r, a.coeffs[i]);
  return Poly::make(a.ring, std::move(out));
}

Poly poly_truncate(const Poly& a, std::uint32_t N) {
  std::vector<Elem> out(a.coeffs.begin(),
                        a.coeffs.begin() +
                            std::min<std::size_t>(a.coeffs.size(), N));
  return Poly::make(a.ring, std::move(out));
}

std::string Poly::render() const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i] == 0) continue;
    if (!out.empty()) out += " + ";
    std::string c = ring->format(coeffs[i]);
    bool composite = c.find('+') != std::string::npos ||
                     c.find(';') != std::string::npos;
    if (i == 0) {
      out += composite ? "(" + c + ")" : c;
      continue;
    }
    std::string xpow = i == 1 ? "x" : "x^" + std::to_string(i);
    if (coeffs[i] == ring->one())
      out += xpow;
    else if (composite)
      out += "(" + c + ")*" + xpow;
    else
      out += c + "*" + xpow;
  }
  return out;
}

Poly parse_poly(const RingPtr& ring, const std::string& text) {
  std::vector<Elem> coeffs;
  std::size_t start = 0;
  int depth = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    if (i < text.size() && (text[i] == '(')) ++depth;
    if (i < text.size() && (text[i] == ')')) --depth;
    if (i == text.size() || (text[i] == ',' && depth == 0)) {
      coeffs.push_back(ring->parse_element(text.substr(start, i - start)));
      start = i + 1;
    }
  }
  return Poly::make(ring, std::move(coeffs));
}

Ideal content(const Poly& f) {
  std::vector<Elem> gens;
  for (Elem c : f.coeffs)
    if (c != 0) gens.push_back(c);
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  return ideal_closure(f.ring, gens);
}

DmResult dm_exponent(const Poly& f, const Poly& g, std::uint32_t n_max,
                     IdealInterner& interner) {
  if (n_max == 0)
    n_max = static_cast<std::uint32_t>(std::max(g.degree(), 0)) + 1;
  int cf = interner.intern(content(f));
  int cg = interner.intern(content(g));
  int cfg = interner.intern(content(poly_mul(f, g)));
  DmResult out;
  out.n_searched = n_max;
  for (std::uint32_t n = 0; n <= n_max; ++n) {
    int lhs = interner.product(interner.power(cf, n + 1), cg);
    int rhs = interner.product(interner.power(cf, n), cfg);
    if (lhs == rhs) {
      out.found = true;
      out.n = n;
      out.anomaly = g.is_zero() ? false : n > static_cast<std::uint32_t>(g.degree());
      return out;
    }
  }
  out.anomaly = true;
  return out;
}

bool poly_in_ideal(const Poly& f, const Ideal& I) {
  for (Elem c : f.coeffs)
    if (!I.contains(c)) return false;
  return true;
}

namespace {

// polynomials of degree <= d enumerated as mixed-radix coefficient tuples
Poly nth_poly(const RingPtr& ring, std::uint64_t idx, std::uint32_t d) {
  std::vector<Elem> coeffs(d + 1);
  for (std::uint32_t i = 0; i <= d; ++i) {
    coeffs[i] = static_cast<Elem>(idx % ring->size());
    idx /= ring->size();
  }
  return Poly::make(ring, std::move(coeffs));
}

struct PolySearch {
  const RingPtr& ring;
  const Ideal& I;
  std::uint32_t n, d;
  std::uint64_t count;  // number of candidate polynomials
  WorkBudget& budget;
  std::vector<std::uint64_t> chosen;
  std::vector<Poly> prefix;
  std::vector<Poly> found;

  bool rec(std::uint32_t depth, std::uint64_t start) {
    if (depth == n + 1) {
      if (!poly_in_ideal(prefix[depth], I)) return false;
      std::vector<Poly> suf(depth + 1, Poly::constant(ring, ring->one()));
      for (std::uint32_t i = depth; i-- > 0;)
        suf[i] = poly_mul(nth_poly(ring, chosen[i], d), suf[i + 1]);
      for (std::uint32_t drop = 0; drop < depth; ++drop)
        if (poly_in_ideal(poly_mul(prefix[drop], suf[drop + 1]), I))
          return false;
      found.clear();
      for (std::uint32_t i = 0; i < depth; ++i)
        found.push_back(nth_poly(ring, chosen[i], d));
      return true;
    }
    for (std::uint64_t k = start; k < count; ++k) {
      budget.charge();
      Poly p = poly_mul(prefix[depth], nth_poly(ring, k, d));
      if (poly_in_ideal(p, I) && depth + 1 <= n) continue;
      chosen[depth] = k;
      prefix[depth + 1] = std::move(p);
      if (rec(depth + 1, k)) return true;
    }
    return false;
  }
};

}  // namespace

PolyAbsorbResult poly_absorbing_search(const Ideal& I, std::uint32_t n,
                                       std::uint32_t d, WorkBudget& budget) {
  if (!I.proper())
    throw ValidationError("n-absorbing is defined for proper ideals");
  std::uint64_t count = 1;
  for (std::uint32_t i = 0; i <= d; ++i) {
    count *= I.ring->size();
    if (count > (std::uint64_t{1} << 40))
      throw CapacityError("degree bound too large for enumeration");
  }
  PolySearch s{I.ring, I, n, d, count, budget,
               std::vector<std::uint64_t>(n + 2), {}, {}};
  s.prefix.assign(n + 2, Poly::constant(I.ring, I.ring->one()));
  bool refuted = s.rec(0, 0);
  PolyAbsorbResult out;
  out.refuted = refuted;
  out.witness = std::move(s.found);
  out.tuples = budget.used();
  return out;
}

}  // namespace ringlab
