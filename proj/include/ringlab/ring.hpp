#ifndef RINGLAB_RING_HPP
#define RINGLAB_RING_HPP

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ringlab/common.hpp"
#include "ringlab/ring_spec.hpp"

namespace ringlab {

struct BuildOptions {
  std::uint64_t element_capacity = 1000000;  // CapacityError above this
  std::uint64_t mul_table_max = 1024;        // dense |R|^2 table when |R| <= this
};

// One product factor with its normal basis and monomial product table.
struct QuotComponent {
  std::uint32_t modulus;
  std::vector<char> vars;
  std::vector<std::vector<std::uint32_t>> relations;
  std::vector<std::vector<std::uint32_t>> basis;  // deg asc, lex desc
  std::vector<std::int32_t> mono_mul;  // basis x basis -> basis index, -1 when rewritten to 0
  std::uint32_t coord_offset = 0;

  std::uint32_t basis_size() const {
    return static_cast<std::uint32_t>(basis.size());
  }
};

// A finite commutative ring with identity, fully enumerated.
//
// Elements are indices into the canonical enumeration: the coordinate
// vector (one residue mod n per standard monomial, concatenated across
// product components) read as a little-endian mixed-radix number, so
// element 0 is the ring zero and enumeration order is lexicographic in
// coords with the first coordinate varying fastest. Immutable after
// construction; concurrent readers are safe.
class Ring {
 public:
  static std::shared_ptr<const Ring> build(const RingSpec& spec,
                                           const BuildOptions& opts = {});
  static std::shared_ptr<const Ring> build(const std::string& spec_text,
                                           const BuildOptions& opts = {});

  const RingSpec& spec() const { return spec_; }
  const std::string& spec_text() const { return spec_text_; }
  std::uint32_t size() const { return size_; }
  std::uint32_t coord_count() const { return static_cast<std::uint32_t>(radix_.size()); }
  const std::vector<QuotComponent>& components() const { return components_; }

  Elem zero() const { return 0; }
  Elem one() const { return one_; }

  Elem add(Elem a, Elem b) const;
  Elem neg(Elem a) const;
  Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
  Elem mul(Elem a, Elem b) const {
    if (!mul_table_.empty())
      return mul_table_[static_cast<std::size_t>(a) * size_ + b];
    return mul_slow(a, b);
  }
  Elem pow(Elem a, std::uint32_t k) const;
  Elem from_int(std::int64_t v) const;

  void decode(Elem e, std::uint32_t* coords) const;
  Elem encode(const std::uint32_t* coords) const;
  std::vector<std::uint32_t> coords_of(Elem e) const;

  // true iff no nonzero element is nilpotent; witness gets the least one
  bool is_reduced(Elem* witness = nullptr) const;

  std::string format(Elem e) const;
  std::string format_tuple(const std::vector<Elem>& es) const;
  Elem parse_element(const std::string& text) const;

 private:
  Ring() = default;
  Elem mul_slow(Elem a, Elem b) const;

  RingSpec spec_;
  std::string spec_text_;
  std::vector<QuotComponent> components_;
  std::vector<std::uint32_t> radix_;    // per-coordinate modulus
  std::vector<std::uint32_t> stride_;   // mixed-radix strides
  std::uint32_t size_ = 0;
  Elem one_ = 0;
  std::vector<Elem> mul_table_;
};

using RingPtr = std::shared_ptr<const Ring>;

inline constexpr std::uint32_t kMaxCoords = 48;

}  // namespace ringlab

#endif
