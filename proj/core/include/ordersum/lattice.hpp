#pragma once

#include <array>
#include <optional>
#include <vector>

#include "ordersum/group.hpp"

namespace ordersum {

inline constexpr int kDefaultLatticeCap = 256;

// Complete subgroup lattice of a finite group. Nodes are sorted by
// (size, bit pattern); meet and join tables index into `nodes`.
struct SubgroupLattice {
  const FiniteGroup* parent = nullptr;
  std::vector<SubgroupSet> nodes;
  std::vector<std::vector<int>> meet;
  std::vector<std::vector<int>> join;

  int node_count() const { return static_cast<int>(nodes.size()); }
  int bottom() const { return 0; }
  int top() const { return node_count() - 1; }
  bool leq(int i, int j) const { return nodes[i].bits().is_subset_of(nodes[j].bits()); }
  int index_of(const Bits& bits) const;

  // Indices of the maximal subgroups of the whole group.
  std::vector<int> maximal_subgroups() const;
};

// Builds the complete lattice by seeding with all cyclic subgroups and
// closing under joins. Throws ResourceLimitError when |G| exceeds `cap`.
SubgroupLattice all_subgroups(const FiniteGroup& g, int cap = kDefaultLatticeCap);

struct ModularityVerdict {
  bool modular = true;
  // A triple (h, k, l) with h <= l violating <h, k&l> == <h,k> & l.
  std::optional<std::array<SubgroupSet, 3>> witness;
};

ModularityVerdict is_modular_lattice(const SubgroupLattice& lat);
ModularityVerdict is_modular_lattice(const FiniteGroup& g, int cap = kDefaultLatticeCap);

// Cross-validation: a lattice is modular iff it embeds no pentagon.
bool has_pentagon(const SubgroupLattice& lat);

struct IwasawaTriple {
  SubgroupSet abelianNormal;
  int element;
  int power;  // s with a^b = a^{1+p^s} for all a
};

// Exhaustive search over abelian normal subgroups, elements and exponents;
// absence is definitive. Throws std::invalid_argument unless |G| is a
// prime power.
std::optional<IwasawaTriple> find_iwasawa_triple(const FiniteGroup& g, int cap = kDefaultLatticeCap);

struct PStarShape {
  std::uint64_t p = 0;
  int n = 0;
  std::uint64_t q = 0;
  int k = 0;
};

// Matches |G| = p^n q^k with q | p-1, elementary abelian normal Sylow-p,
// cyclic Sylow-q inducing a power automorphism of order exactly q.
std::optional<PStarShape> recognize_p_star(const FiniteGroup& g);

// Splits a group with modular subgroup lattice into pairwise coprime
// direct factors, each certified as one of: a p-group admitting an Iwasawa
// triple, Q8 x (elementary abelian 2-group), or a P*-group. Throws
// VerificationError naming the stuck factor if certification fails.
std::vector<FiniteGroup> m_structure_decompose(const FiniteGroup& g, int cap = kDefaultLatticeCap);

}  // namespace ordersum
