#pragma once

#include <boost/dynamic_bitset.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ordersum/numeric.hpp"

namespace ordersum {

// Hard cap on multiplication-table size (elements); 5000^2 entries is the
// largest table the toolkit will materialize by default.
inline constexpr int kDefaultTableCap = 5000;

// Dense finite group over element indices 0..n-1, identity fixed at 0.
//
// The constructor validates the table: identity row/column, Latin-square
// rows and columns, and associativity (complete up to order 512, sampled
// with 1e5 pseudorandom triples above that). Inverses and element orders
// are computed eagerly. Instances are immutable after construction and
// safe to share across threads.
class FiniteGroup {
 public:
  explicit FiniteGroup(std::vector<std::int32_t> table, std::string name = "");

  int order() const { return n_; }
  int mul(int a, int b) const { return table_[static_cast<std::size_t>(a) * n_ + b]; }
  int inv(int a) const { return inverse_[a]; }
  int power(int x, long long e) const;

  // Least t >= 1 with x^t = identity; always divides the group order.
  int element_order(int x) const;
  const std::vector<int>& element_orders() const { return orders_; }
  int exponent() const;

  const std::vector<std::int32_t>& table() const { return table_; }
  const std::string& name() const { return name_; }
  void set_name(std::string name) { name_ = std::move(name); }

 private:
  int n_;
  std::vector<std::int32_t> table_;
  std::vector<std::int32_t> inverse_;
  std::vector<int> orders_;
  std::string name_;

  void validate();
};

using Bits = boost::dynamic_bitset<>;

// Subset of a parent group's element indices that is closed under product
// and inverse. Holds a non-owning pointer to the parent, which must
// outlive the set.
class SubgroupSet {
 public:
  // Validates closure and identity membership; asserts Lagrange.
  SubgroupSet(const FiniteGroup& parent, Bits bits);

  const FiniteGroup& parent() const { return *parent_; }
  const Bits& bits() const { return bits_; }
  int size() const { return static_cast<int>(bits_.count()); }
  bool contains(int x) const { return bits_.test(x); }
  bool is_trivial() const { return size() == 1; }
  bool is_whole() const { return size() == parent_->order(); }
  std::vector<int> elements() const;

  bool operator==(const SubgroupSet& o) const { return parent_ == o.parent_ && bits_ == o.bits_; }

  // Fast path for bitsets already known to be closed (closure results).
  static SubgroupSet trusted(const FiniteGroup& parent, Bits bits);

 private:
  struct Trusted {};
  SubgroupSet(const FiniteGroup& parent, Bits bits, Trusted);
  const FiniteGroup* parent_;
  Bits bits_;
};

// --- closure and subgroup arithmetic ------------------------------------

SubgroupSet trivial_subgroup(const FiniteGroup& g);
SubgroupSet whole_group(const FiniteGroup& g);

// Smallest subgroup containing `gens` (breadth-first closure under product).
SubgroupSet generated_subgroup(const FiniteGroup& g, const std::vector<int>& gens);

SubgroupSet conjugate_subgroup(const SubgroupSet& h, int by);
bool is_normal(const SubgroupSet& h);

// Largest normal subgroup of the parent contained in `h` (intersection of
// all conjugates).
SubgroupSet core(const SubgroupSet& h);

SubgroupSet normalizer(const SubgroupSet& h);
SubgroupSet centralizer(const FiniteGroup& g, const std::vector<int>& s);
SubgroupSet centralizer(const SubgroupSet& s);
SubgroupSet center(const FiniteGroup& g);
SubgroupSet derived_subgroup(const FiniteGroup& g);

// A subgroup whose order is the full p-part of |G|, grown by closing over
// p-elements of successive normalizers. Returns the trivial subgroup when
// p does not divide |G|.
SubgroupSet sylow_subgroup(const FiniteGroup& g, std::uint64_t p);

// True iff h < g and no subgroup lies strictly between.
bool is_maximal_subgroup(const SubgroupSet& h);

// --- derived groups ------------------------------------------------------

// Cayley table on the cosets of a normal subgroup; coset of the identity
// maps to index 0. Throws std::invalid_argument when n is not normal.
FiniteGroup quotient(const FiniteGroup& g, const SubgroupSet& n);

FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b,
                           int table_cap = kDefaultTableCap);

// Semidirect product data: `images[b]` is the automorphism of the target
// induced by actor element b, as a permutation of target indices. The
// product validates that each image is an automorphism and that
// images[b1*b2] == images[b1] o images[b2] on all pairs.
struct ActionSpec {
  const FiniteGroup* actor = nullptr;   // B
  const FiniteGroup* target = nullptr;  // A
  std::vector<std::vector<int>> images;
};

// Table on pairs (a, b), (a1,b1)(a2,b2) = (a1 * phi_{b1}(a2), b1 b2),
// indexed a * |B| + b.
FiniteGroup semidirect_product(const ActionSpec& spec, int table_cap = kDefaultTableCap);

// The subgroup as a standalone group (identity re-indexed to 0) plus the
// map from new indices back to parent indices.
std::pair<FiniteGroup, std::vector<int>> as_group(const SubgroupSet& h);

// --- predicates ----------------------------------------------------------

bool is_abelian(const FiniteGroup& g);
bool is_cyclic(const FiniteGroup& g);
bool is_nilpotent(const FiniteGroup& g);   // every Sylow subgroup normal
bool is_soluble(const FiniteGroup& g);     // derived series reaches 1
bool is_supersoluble(const FiniteGroup& g);
// True iff |G| is a power of a single prime, returned through `p`.
bool is_p_group(const FiniteGroup& g, std::uint64_t* p = nullptr);

}  // namespace ordersum
