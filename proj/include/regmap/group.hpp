#pragma once

// Element-indexed finite groups with concrete backends.
//
// Elements are dense indexes 0..n-1 with index 0 the identity; the remaining
// indexes are sorted by payload code, so indexing is deterministic for a given
// spec.  Multiplication works on payload codes (permutation composition,
// matrix product with PSL/PGL canonicalization, affine or dihedral formula)
// with a code-to-index lookup; groups at most table_cap big get a full
// multiplication table.
//
// Payload codes, one 64-bit word per element:
//   perm      4 bits per point, point 0 in the top nibble, degree <= 16
//   dihedral  rotation*2 + flip
//   affine    a*256 + b for t -> a t + b
//   matrix    a<<24 | b<<16 | c<<8 | d, field indexes of [[a,b],[c,d]];
//             PSL identifies A with -A (lex smaller kept), PGL scales the
//             first nonzero entry to 1.

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "regmap/gf.hpp"

namespace regmap {

using Elt = uint16_t;

enum class Backend { perm, dihedral, affine, sl2, psl2, pgl2 };

struct GroupCaps {
  uint32_t order_cap = 20000;
  uint32_t table_cap = 4500;
};

class FiniteGroup {
 public:
  // Spec grammar:
  //   psl2:q | sl2:q | pgl2:q | agl1:q   q = p^e or "p,e"; optional
  //                                      :c0,c1,...,ce field modulus suffix
  //   sym:n | alt:n | dihedral:n
  //   perm:(cycles);(cycles);...         1-based cycles, degree <= 16
  static FiniteGroup build(const std::string& spec, const GroupCaps& caps = {});

  uint32_t order() const { return n_; }
  Backend backend() const { return kind_; }
  bool is_matrix() const {
    return kind_ == Backend::sl2 || kind_ == Backend::psl2 || kind_ == Backend::pgl2;
  }
  const Gf& field() const;
  const std::string& spec() const { return spec_; }
  int degree() const { return degree_; }

  Elt mul(Elt a, Elt b) const {
    return mul_tab_.empty() ? lookup(mul_code(code_[a], code_[b]))
                            : mul_tab_[size_t(a) * n_ + b];
  }
  Elt inv(Elt a) const { return inv_[a]; }
  int order_of(Elt a) const { return ord_[a]; }
  Elt power(Elt a, long long k) const;
  Elt conj(Elt h, Elt g) const { return mul(mul(inv_[g], h), g); }  // h^g
  Elt commutator(Elt a, Elt b) const {  // a^-1 b^-1 a b
    return mul(mul(inv_[a], inv_[b]), mul(a, b));
  }
  uint32_t num_involutions() const { return n_invol_; }
  const std::vector<Elt>& generators() const { return gens_; }
  std::vector<Elt> center() const;

  // Sorted element list of <s>; {identity} when s is empty.
  std::vector<Elt> closure(const std::vector<Elt>& s) const;
  // True iff <s> = G; early-accepts once the closure passes |G|/2.
  bool generates(const std::vector<Elt>& s) const;

  uint64_t code_of(Elt a) const { return code_[a]; }
  std::optional<Elt> find_code(uint64_t c) const;
  Elt from_matrix(const std::array<uint32_t, 4>& m) const;  // field indexes
  Elt from_affine(uint32_t a, uint32_t b) const;
  Elt from_cycles(const std::string& cycles) const;
  std::string describe(Elt a) const;

  uint64_t mul_code(uint64_t a, uint64_t b) const;
  uint64_t canon_code(uint64_t a) const;  // PSL/PGL identification
  Elt lookup(uint64_t code) const;

 private:
  FiniteGroup() = default;
  void finish(const GroupCaps& caps, std::vector<uint64_t> codes);
  uint64_t inv_code(uint64_t a) const;
  uint64_t identity_code() const;

  Backend kind_ = Backend::perm;
  uint32_t n_ = 0;
  int degree_ = 0;
  std::shared_ptr<Gf> field_;
  std::string spec_;
  std::vector<uint64_t> code_;
  std::vector<Elt> inv_;
  std::vector<uint16_t> ord_;
  std::vector<Elt> mul_tab_;
  std::vector<Elt> gens_;
  uint32_t n_invol_ = 0;
};

struct ConjClass {
  Elt rep;  // least element index in the class
  int order;
  uint32_t size;
  std::string name;                // "2A", "7B": (order, size, rep) sort order
  std::vector<Elt> members;        // sorted
  std::optional<uint32_t> trace;   // canonical trace label, matrix backends
};

struct ClassData {
  std::vector<ConjClass> classes;
  std::vector<uint16_t> class_of;
  // Class of g^k for a representative g of class c.
  uint32_t power_class(const FiniteGroup& G, uint32_t c, long long k) const;
  std::optional<uint32_t> find(const std::string& name) const;
};

ClassData conjugacy_classes(const FiniteGroup& G);

// Canonical conjugation-invariant trace label: PSL -> lex-least of {tr, -tr};
// SL -> tr; PGL -> tr^2/det (scaling-invariant).
uint32_t trace_pair_label(const FiniteGroup& G, Elt g);
std::string trace_pair_string(const FiniteGroup& G, uint32_t label);

}  // namespace regmap
