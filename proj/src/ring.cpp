#include "ringlab/ring.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <sstream>

namespace ringlab {

namespace {

bool divisible_by_any(const std::vector<std::uint32_t>& e,
                      const std::vector<std::vector<std::uint32_t>>& rels) {
  for (const auto& r : rels) {
    bool div = true;
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i] < r[i]) {
        div = false;
        break;
      }
    if (div) return true;
  }
  return false;
}

bool monomial_less(const std::vector<std::uint32_t>& a,
                   const std::vector<std::uint32_t>& b) {
  std::uint64_t da = std::accumulate(a.begin(), a.end(), std::uint64_t{0});
  std::uint64_t db = std::accumulate(b.begin(), b.end(), std::uint64_t{0});
  if (da != db) return da < db;
  return a > b;
}

QuotComponent make_component(const SpecComponent& sc,
                             std::uint64_t element_capacity) {
  QuotComponent qc;
  qc.modulus = sc.modulus;
  qc.vars = sc.vars;
  qc.relations = sc.relations;

  if (sc.vars.empty()) {
    qc.basis = {{}};
    qc.mono_mul = {0};
    return qc;
  }

  // box bounds: the least pure power exponent per variable
  std::vector<std::uint32_t> bounds(sc.vars.size(), 0);
  for (std::size_t v = 0; v < sc.vars.size(); ++v) {
    std::uint32_t best = 0;
    for (const auto& r : sc.relations) {
      bool pure = r[v] > 0;
      for (std::size_t w = 0; w < sc.vars.size() && pure; ++w)
        if (w != v && r[w] > 0) pure = false;
      if (pure && (best == 0 || r[v] < best)) best = r[v];
    }
    bounds[v] = best;  // normalization guarantees best > 0
  }

  std::uint64_t box = 1;
  for (auto b : bounds) {
    box *= b;
    if (box > element_capacity)
      throw CapacityError("monomial box of " + std::to_string(box) +
                          " exceeds capacity");
  }

  std::vector<std::uint32_t> e(sc.vars.size(), 0);
  while (true) {
    if (!divisible_by_any(e, sc.relations)) qc.basis.push_back(e);
    std::size_t i = 0;
    for (; i < e.size(); ++i) {
      if (++e[i] < bounds[i]) break;
      e[i] = 0;
    }
    if (i == e.size()) break;
  }
  std::sort(qc.basis.begin(), qc.basis.end(), monomial_less);

  std::map<std::vector<std::uint32_t>, std::uint32_t> index;
  for (std::uint32_t i = 0; i < qc.basis.size(); ++i) index[qc.basis[i]] = i;

  const std::uint32_t B = qc.basis_size();
  qc.mono_mul.assign(static_cast<std::size_t>(B) * B, -1);
  for (std::uint32_t i = 0; i < B; ++i)
    for (std::uint32_t j = 0; j < B; ++j) {
      std::vector<std::uint32_t> s(qc.basis[i]);
      for (std::size_t v = 0; v < s.size(); ++v) s[v] += qc.basis[j][v];
      if (divisible_by_any(s, sc.relations)) continue;
      auto it = index.find(s);
      if (it != index.end())
        qc.mono_mul[static_cast<std::size_t>(i) * B + j] =
            static_cast<std::int32_t>(it->second);
      // outside the box means a pure power divides it: stays -1
    }
  return qc;
}

}  // namespace

std::shared_ptr<const Ring> Ring::build(const std::string& spec_text,
                                        const BuildOptions& opts) {
  return build(parse_ring_spec(spec_text), opts);
}

std::shared_ptr<const Ring> Ring::build(const RingSpec& spec,
                                        const BuildOptions& opts) {
  auto ring = std::shared_ptr<Ring>(new Ring());
  ring->spec_ = spec;
  ring->spec_text_ = render(spec);

  std::uint32_t offset = 0;
  for (const auto& sc : spec.components) {
    QuotComponent qc = make_component(sc, opts.element_capacity);
    qc.coord_offset = offset;
    offset += qc.basis_size();
    ring->components_.push_back(std::move(qc));
  }
  if (offset > kMaxCoords)
    throw CapacityError("coordinate count " + std::to_string(offset) +
                        " exceeds limit " + std::to_string(kMaxCoords));

  std::uint64_t card = 1;
  for (const auto& qc : ring->components_) {
    ring->stride_.resize(offset);
    for (std::uint32_t i = 0; i < qc.basis_size(); ++i) {
      ring->radix_.push_back(qc.modulus);
      card *= qc.modulus;
      if (card > opts.element_capacity)
        throw CapacityError("cardinality exceeds capacity of " +
                            std::to_string(opts.element_capacity));
    }
  }
  ring->size_ = static_cast<std::uint32_t>(card);

  ring->stride_.assign(offset, 1);
  for (std::uint32_t i = 1; i < offset; ++i)
    ring->stride_[i] = ring->stride_[i - 1] * ring->radix_[i - 1];

  std::vector<std::uint32_t> one(offset, 0);
  for (const auto& qc : ring->components_) one[qc.coord_offset] = 1;
  ring->one_ = ring->encode(one.data());

  if (ring->size_ <= opts.mul_table_max) {
    ring->mul_table_.resize(static_cast<std::size_t>(ring->size_) * ring->size_);
    for (Elem a = 0; a < ring->size_; ++a)
      for (Elem b = a; b < ring->size_; ++b) {
        Elem p = ring->mul_slow(a, b);
        ring->mul_table_[static_cast<std::size_t>(a) * ring->size_ + b] = p;
        ring->mul_table_[static_cast<std::size_t>(b) * ring->size_ + a] = p;
      }
  }
  return ring;
}

void Ring::decode(Elem e, std::uint32_t* coords) const {
  for (std::size_t i = 0; i < radix_.size(); ++i) {
    coords[i] = e % radix_[i];
    e /= radix_[i];
  }
}

Elem Ring::encode(const std::uint32_t* coords) const {
  Elem e = 0;
  for (std::size_t i = 0; i < radix_.size(); ++i) e += coords[i] * stride_[i];
  return e;
}

std::vector<std::uint32_t> Ring::coords_of(Elem e) const {
  std::vector<std::uint32_t> c(radix_.size());
  decode(e, c.data());
  return c;
}

Elem Ring::add(Elem a, Elem b) const {
  std::uint32_t ca[kMaxCoords], cb[kMaxCoords];
  decode(a, ca);
  decode(b, cb);
  for (std::size_t i = 0; i < radix_.size(); ++i) {
    ca[i] += cb[i];
    if (ca[i] >= radix_[i]) ca[i] -= radix_[i];
  }
  return encode(ca);
}

Elem Ring::neg(Elem a) const {
  std::uint32_t ca[kMaxCoords];
  decode(a, ca);
  for (std::size_t i = 0; i < radix_.size(); ++i)
    if (ca[i]) ca[i] = radix_[i] - ca[i];
  return encode(ca);
}

Elem Ring::mul_slow(Elem a, Elem b) const {
  std::uint32_t ca[kMaxCoords], cb[kMaxCoords], out[kMaxCoords];
  decode(a, ca);
  decode(b, cb);
  for (std::size_t i = 0; i < radix_.size(); ++i) out[i] = 0;
  for (const auto& qc : components_) {
    const std::uint32_t B = qc.basis_size();
    const std::uint32_t off = qc.coord_offset;
    const std::uint64_t n = qc.modulus;
    for (std::uint32_t i = 0; i < B; ++i) {
      const std::uint64_t ai = ca[off + i];
      if (!ai) continue;
      for (std::uint32_t j = 0; j < B; ++j) {
        const std::uint64_t bj = cb[off + j];
        if (!bj) continue;
        std::int32_t t = qc.mono_mul[static_cast<std::size_t>(i) * B + j];
        if (t < 0) continue;
        out[off + t] = static_cast<std::uint32_t>((out[off + t] + ai * bj) % n);
      }
    }
  }
  return encode(out);
}

Elem Ring::pow(Elem a, std::uint32_t k) const {
  Elem r = one_;
  while (k) {
    if (k & 1) r = mul(r, a);
    a = mul(a, a);
    k >>= 1;
  }
  return r;
}

Elem Ring::from_int(std::int64_t v) const {
  std::uint32_t out[kMaxCoords];
  for (std::size_t i = 0; i < radix_.size(); ++i) out[i] = 0;
  for (const auto& qc : components_) {
    std::int64_t n = qc.modulus;
    out[qc.coord_offset] = static_cast<std::uint32_t>(((v % n) + n) % n);
  }
  return encode(out);
}

bool Ring::is_reduced(Elem* witness) const {
  std::vector<char> seen(size_);
  for (Elem a = 1; a < size_; ++a) {
    std::fill(seen.begin(), seen.end(), 0);
    Elem x = a;
    while (!seen[x]) {
      seen[x] = 1;
      if (x == 0) {
        if (witness) *witness = a;
        return false;
      }
      x = mul(x, a);
    }
  }
  return true;
}

std::string Ring::format(Elem e) const {
  std::uint32_t c[kMaxCoords];
  decode(e, c);
  std::string out;
  const bool product = components_.size() > 1;
  for (std::size_t ci = 0; ci < components_.size(); ++ci) {
    const auto& qc = components_[ci];
    std::string part;
    for (std::uint32_t i = 0; i < qc.basis_size(); ++i) {
      std::uint32_t coef = c[qc.coord_offset + i];
      if (!coef) continue;
      if (!part.empty()) part += '+';
      std::string mono = render_monomial(qc.vars, qc.basis[i]);
      if (mono == "1")
        part += std::to_string(coef);
      else if (coef == 1)
        part += mono;
      else
        part += std::to_string(coef) + "*" + mono;
    }
    if (part.empty()) part = "0";
    if (product) {
      out += ci ? "; " : "(";
      out += part;
    } else {
      out = part;
    }
  }
  if (product) out += ")";
  return out;
}

std::string Ring::format_tuple(const std::vector<Elem>& es) const {
  std::string out = "[";
  for (std::size_t i = 0; i < es.size(); ++i) {
    if (i) out += ",";
    out += format(es[i]);
  }
  return out + "]";
}

namespace {

struct ElemCursor {
  const std::string& s;
  std::size_t i = 0;
  void skip_ws() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  char peek() {
    skip_ws();
    return i < s.size() ? s[i] : '\0';
  }
  bool accept(char c) {
    skip_ws();
    if (i < s.size() && s[i] == c) {
      ++i;
      return true;
    }
    return false;
  }
  std::int64_t integer() {
    skip_ws();
    std::int64_t v = 0;
    if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i])))
      throw SyntaxError(i, "INT", "expected integer in element at position " +
                                      std::to_string(i));
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])))
      v = v * 10 + (s[i++] - '0');
    return v;
  }
};

// term := INT ('*' mono)? | mono ; mono := var('^'INT)? ('*' var('^'INT)?)*
Elem parse_component_sum(const Ring& ring, const QuotComponent& qc,
                         ElemCursor& c, char stop1, char stop2);

Elem parse_term(const Ring& ring, const QuotComponent& qc, ElemCursor& c) {
  if (c.peek() == '(') {
    c.accept('(');
    Elem inner = parse_component_sum(ring, qc, c, ')', ')');
    if (!c.accept(')'))
      throw SyntaxError(c.i, "')'", "expected ')' closing element group");
    return inner;
  }
  std::int64_t coef = 1;
  if (std::isdigit(static_cast<unsigned char>(c.peek()))) {
    coef = c.integer();
    if (!c.accept('*')) {
      // bare integer: coef * 1
      std::vector<std::uint32_t> coords(ring.coord_count(), 0);
      coords[qc.coord_offset] = static_cast<std::uint32_t>(
          ((coef % qc.modulus) + qc.modulus) % qc.modulus);
      return ring.encode(coords.data());
    }
  }
  std::vector<std::uint32_t> exps(qc.vars.size(), 0);
  while (true) {
    char v = c.peek();
    if (v < 'a' || v > 'z')
      throw SyntaxError(c.i, "var", "expected variable in element term");
    ++c.i;
    auto it = std::find(qc.vars.begin(), qc.vars.end(), v);
    if (it == qc.vars.end())
      throw ValidationError(std::string("unknown variable '") + v +
                            "' in element");
    std::uint32_t e = 1;
    if (c.accept('^')) e = static_cast<std::uint32_t>(c.integer());
    exps[static_cast<std::size_t>(it - qc.vars.begin())] += e;
    if (!c.accept('*')) break;
  }
  std::vector<std::uint32_t> coords(ring.coord_count(), 0);
  auto bit = std::find(qc.basis.begin(), qc.basis.end(), exps);
  if (bit != qc.basis.end()) {
    std::uint32_t idx = static_cast<std::uint32_t>(bit - qc.basis.begin());
    coords[qc.coord_offset + idx] = static_cast<std::uint32_t>(
        ((coef % qc.modulus) + qc.modulus) % qc.modulus);
  }
  // monomials rewritten to zero contribute nothing
  return ring.encode(coords.data());
}

Elem parse_component_sum(const Ring& ring, const QuotComponent& qc,
                         ElemCursor& c, char stop1, char stop2) {
  Elem acc = ring.zero();
  bool neg = c.accept('-');
  while (true) {
    Elem t = parse_term(ring, qc, c);
    acc = neg ? ring.sub(acc, t) : ring.add(acc, t);
    if (c.accept('+')) {
      neg = false;
    } else if (c.accept('-')) {
      neg = true;
    } else {
      break;
    }
  }
  char p = c.peek();
  if (p != '\0' && p != stop1 && p != stop2)
    throw SyntaxError(c.i, "operator or end",
                      "unexpected character in element at position " +
                          std::to_string(c.i));
  return acc;
}

}  // namespace

Elem Ring::parse_element(const std::string& text) const {
  ElemCursor c{text};
  Elem result;
  if (components_.size() > 1 && c.peek() == '(') {
    c.accept('(');
    std::vector<std::uint32_t> coords(coord_count(), 0);
    for (std::size_t ci = 0; ci < components_.size(); ++ci) {
      Elem part = parse_component_sum(*this, components_[ci], c, ';', ')');
      std::uint32_t pc[kMaxCoords];
      decode(part, pc);
      const auto& qc = components_[ci];
      for (std::uint32_t i = 0; i < qc.basis_size(); ++i)
        coords[qc.coord_offset + i] = pc[qc.coord_offset + i];
      if (ci + 1 < components_.size()) {
        if (!c.accept(';'))
          throw SyntaxError(c.i, "';'", "expected ';' between components");
      }
    }
    if (!c.accept(')'))
      throw SyntaxError(c.i, "')'", "expected ')' closing component tuple");
    result = encode(coords.data());
  } else if (components_.size() > 1) {
    // bare sum over integers: diagonal embedding
    ElemCursor c2{text};
    std::int64_t v = 0;
    bool neg = c2.accept('-');
    while (true) {
      std::int64_t t = c2.integer();
      v += neg ? -t : t;
      if (c2.accept('+'))
        neg = false;
      else if (c2.accept('-'))
        neg = true;
      else
        break;
    }
    if (c2.peek() != '\0')
      throw SyntaxError(c2.i, "integer",
                        "product-ring elements are integers or (e1; e2; ...)");
    return from_int(v);
  } else {
    result = parse_component_sum(*this, components_[0], c, '\0', '\0');
  }
  if (c.peek() != '\0')
    throw SyntaxError(c.i, "end", "trailing input after element");
  return result;
}

}  // namespace ringlab
