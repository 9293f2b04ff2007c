#pragma once

#include <optional>
#include <vector>

#include "ordersum/group.hpp"

namespace ordersum {

// Backtracking isomorphism search on a greedily chosen small generating
// set, pruned by (element order, centralizer size) fingerprints. A
// returned witness maps g-indices to h-indices and has been verified on
// all pairs. Throws ResourceLimitError past `node_budget` search nodes.
std::optional<std::vector<int>> find_isomorphism(const FiniteGroup& g, const FiniteGroup& h,
                                                 std::uint64_t node_budget = 50'000'000);

bool is_isomorphic(const FiniteGroup& g, const FiniteGroup& h);

// The automorphisms of `g` as permutations of its element indices, each
// verified table-preserving. perms[0] is the identity.
struct PermGroup {
  std::vector<std::vector<int>> perms;
  int index_of(const std::vector<int>& p) const;
  int compose(int i, int j) const;  // apply j, then i
  int order_of(int i) const;
};

PermGroup automorphism_group(const FiniteGroup& g);

// All homomorphisms from `b` into the given permutation group, each as a
// full map from b-elements to perm indices.
std::vector<std::vector<int>> all_homomorphisms(const FiniteGroup& b, const PermGroup& target);

}  // namespace ordersum
