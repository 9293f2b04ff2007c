#include <set>

#include "ordersum/group.hpp"

namespace ordersum {

bool is_abelian(const FiniteGroup& g) {
  for (int a = 0; a < g.order(); ++a) {
    for (int b = a + 1; b < g.order(); ++b) {
      if (g.mul(a, b) != g.mul(b, a)) return false;
    }
  }
  return true;
}

bool is_cyclic(const FiniteGroup& g) {
  for (int x = 0; x < g.order(); ++x) {
    if (g.element_order(x) == g.order()) return true;
  }
  return false;
}

bool is_nilpotent(const FiniteGroup& g) {
  for (const auto& pp : factorize(g.order())) {
    if (!is_normal(sylow_subgroup(g, pp.prime))) return false;
  }
  return true;
}

bool is_soluble(const FiniteGroup& g) {
  FiniteGroup step = g;
  while (step.order() > 1) {
    SubgroupSet d = derived_subgroup(step);
    if (d.size() == step.order()) return false;  // nontrivial perfect group
    if (d.is_trivial()) return true;
    step = as_group(d).first;
  }
  return true;
}

namespace {

bool supersoluble_rec(const FiniteGroup& g) {
  if (g.order() == 1) return true;
  std::set<Bits> tried;
  for (int x = 1; x < g.order(); ++x) {
    int o = g.element_order(x);
    if (!is_prime(static_cast<std::uint64_t>(o))) continue;
    SubgroupSet n = generated_subgroup(g, {x});
    if (!tried.insert(n.bits()).second) continue;
    if (!is_normal(n)) continue;
    if (supersoluble_rec(quotient(g, n))) return true;
  }
  return false;
}

}  // namespace

bool is_supersoluble(const FiniteGroup& g) { return supersoluble_rec(g); }

bool is_p_group(const FiniteGroup& g, std::uint64_t* p) {
  auto f = factorize(g.order());
  if (f.size() != 1) return false;
  if (p != nullptr) *p = f[0].prime;
  return true;
}

}  // namespace ordersum
