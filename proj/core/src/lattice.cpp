#include "ordersum/lattice.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>

#include "ordersum/constructions.hpp"
#include "ordersum/iso.hpp"

namespace ordersum {

namespace {

struct Node {
  Bits bits;
  std::vector<int> gens;
};

bool bits_less(const Bits& a, const Bits& b) {
  if (a.count() != b.count()) return a.count() < b.count();
  return a < b;
}

}  // namespace

int SubgroupLattice::index_of(const Bits& bits) const {
  for (int i = 0; i < node_count(); ++i) {
    if (nodes[i].bits() == bits) return i;
  }
  return -1;
}

std::vector<int> SubgroupLattice::maximal_subgroups() const {
  std::vector<int> out;
  const int t = top();
  for (int i = 0; i < node_count(); ++i) {
    if (i == t) continue;
    bool covered = true;
    for (int j = 0; j < node_count(); ++j) {
      if (j == i || j == t) continue;
      if (leq(i, j)) {
        covered = false;
        break;
      }
    }
    if (covered) out.push_back(i);
  }
  return out;
}

SubgroupLattice all_subgroups(const FiniteGroup& g, int cap) {
  if (g.order() > cap) {
    throw ResourceLimitError("all_subgroups: order " + std::to_string(g.order()) +
                             " exceeds lattice cap " + std::to_string(cap));
  }
  const int n = g.order();
  std::map<Bits, int> seen;
  std::vector<Node> nodes;
  auto add = [&](Bits bits, std::vector<int> gens) -> int {
    auto it = seen.find(bits);
    if (it != seen.end()) return -1;
    int idx = static_cast<int>(nodes.size());
    seen.emplace(bits, idx);
    nodes.push_back({std::move(bits), std::move(gens)});
    return idx;
  };

  add(trivial_subgroup(g).bits(), {});
  std::vector<int> cyclicIdx;
  for (int x = 1; x < n; ++x) {
    Bits b = generated_subgroup(g, {x}).bits();
    int idx = add(std::move(b), {x});
    if (idx >= 0) cyclicIdx.push_back(idx);
  }
  // close under joins with cyclic subgroups; every subgroup is a join of
  // cyclic ones, so this reaches the whole lattice
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    for (int c : cyclicIdx) {
      if (nodes[c].bits.is_subset_of(nodes[i].bits)) continue;
      std::vector<int> gens = nodes[i].gens;
      gens.insert(gens.end(), nodes[c].gens.begin(), nodes[c].gens.end());
      Bits joined = generated_subgroup(g, gens).bits();
      add(std::move(joined), std::move(gens));
    }
  }

  SubgroupLattice lat;
  lat.parent = &g;
  std::vector<Bits> all;
  all.reserve(nodes.size());
  for (auto& nd : nodes) all.push_back(std::move(nd.bits));
  std::sort(all.begin(), all.end(), bits_less);
  for (auto& b : all) lat.nodes.push_back(SubgroupSet::trusted(g, std::move(b)));

  const int m = lat.node_count();
  std::map<Bits, int> index;
  for (int i = 0; i < m; ++i) index.emplace(lat.nodes[i].bits(), i);
  lat.meet.assign(m, std::vector<int>(m));
  lat.join.assign(m, std::vector<int>(m));
  for (int i = 0; i < m; ++i) {
    for (int j = i; j < m; ++j) {
      Bits inter = lat.nodes[i].bits() & lat.nodes[j].bits();
      auto it = index.find(inter);
      if (it == index.end()) throw std::logic_error("all_subgroups: meet not in lattice");
      lat.meet[i][j] = lat.meet[j][i] = it->second;
      // join = smallest node containing the union
      Bits uni = lat.nodes[i].bits() | lat.nodes[j].bits();
      int best = lat.top();
      for (int t = 0; t < m; ++t) {
        if (uni.is_subset_of(lat.nodes[t].bits()) &&
            lat.nodes[t].size() < lat.nodes[best].size()) {
          best = t;
        }
      }
      lat.join[i][j] = lat.join[j][i] = best;
    }
  }
  return lat;
}

ModularityVerdict is_modular_lattice(const SubgroupLattice& lat) {
  const int m = lat.node_count();
  for (int h = 0; h < m; ++h) {
    for (int l = 0; l < m; ++l) {
      if (!lat.leq(h, l)) continue;
      for (int k = 0; k < m; ++k) {
        if (lat.join[h][lat.meet[k][l]] != lat.meet[lat.join[h][k]][l]) {
          ModularityVerdict v;
          v.modular = false;
          v.witness = {lat.nodes[h], lat.nodes[k], lat.nodes[l]};
          return v;
        }
      }
    }
  }
  return {};
}

ModularityVerdict is_modular_lattice(const FiniteGroup& g, int cap) {
  return is_modular_lattice(all_subgroups(g, cap));
}

bool has_pentagon(const SubgroupLattice& lat) {
  const int m = lat.node_count();
  for (int a = 0; a < m; ++a) {
    for (int c = 0; c < m; ++c) {
      if (a == c || !lat.leq(a, c)) continue;
      for (int b = 0; b < m; ++b) {
        if (lat.join[a][b] == lat.join[c][b] && lat.meet[a][b] == lat.meet[c][b]) return true;
      }
    }
  }
  return false;
}

std::optional<IwasawaTriple> find_iwasawa_triple(const FiniteGroup& g, int cap) {
  std::uint64_t p = 0;
  if (!is_p_group(g, &p)) throw std::invalid_argument("find_iwasawa_triple: not a p-group");
  SubgroupLattice lat = all_subgroups(g, cap);
  const int pi = static_cast<int>(p);
  const int sMin = (p == 2) ? 2 : 1;

  // abelian normal candidates, larger first
  std::vector<int> candidates;
  for (int i = lat.node_count() - 1; i >= 0; --i) {
    const auto& a = lat.nodes[i];
    auto elems = a.elements();
    bool abelian = true;
    for (std::size_t x = 0; x < elems.size() && abelian; ++x) {
      for (std::size_t y = x + 1; y < elems.size(); ++y) {
        if (g.mul(elems[x], elems[y]) != g.mul(elems[y], elems[x])) {
          abelian = false;
          break;
        }
      }
    }
    if (abelian && is_normal(a)) candidates.push_back(i);
  }
  int sMax = sMin;
  {
    int e = g.exponent(), s = 0;
    while (e > 1) {
      e /= pi;
      ++s;
    }
    sMax = std::max(sMax, s);
  }
  for (int idx : candidates) {
    const auto& a = lat.nodes[idx];
    auto elems = a.elements();
    for (int b = 0; b < g.order(); ++b) {
      // G = A<b> as a set product; A is normal so this is a subgroup
      int ob = g.element_order(b);
      int inter = 0;
      int cur = 0;
      for (int t = 0; t < ob; ++t) {
        if (a.contains(cur)) ++inter;
        cur = g.mul(cur, b);
      }
      if (static_cast<long long>(a.size()) * ob / inter != g.order()) continue;
      for (int s = sMin; s <= sMax; ++s) {
        long long ps = 1;
        for (int t = 0; t < s; ++t) ps *= pi;
        const long long e = 1 + ps;
        bool ok = true;
        const int binv = g.inv(b);
        for (int x : elems) {
          if (g.mul(binv, g.mul(x, b)) != g.power(x, e)) {
            ok = false;
            break;
          }
        }
        if (ok) return IwasawaTriple{a, b, s};
      }
    }
  }
  return std::nullopt;
}

std::optional<PStarShape> recognize_p_star(const FiniteGroup& g) {
  auto f = factorize(g.order());
  if (f.size() != 2) return std::nullopt;
  const std::uint64_t q = f[0].prime, p = f[1].prime;
  const int k = f[0].exponent, n = f[1].exponent;
  if ((p - 1) % q != 0) return std::nullopt;
  SubgroupSet sylP = sylow_subgroup(g, p);
  if (!is_normal(sylP)) return std::nullopt;
  for (int x : sylP.elements()) {
    if (x != 0 && g.element_order(x) != static_cast<int>(p)) return std::nullopt;  // elementary abelian
  }
  auto elemsP = sylP.elements();
  for (std::size_t i = 0; i < elemsP.size(); ++i) {
    for (std::size_t j = i + 1; j < elemsP.size(); ++j) {
      if (g.mul(elemsP[i], elemsP[j]) != g.mul(elemsP[j], elemsP[i])) return std::nullopt;
    }
  }
  SubgroupSet sylQ = sylow_subgroup(g, q);
  auto [qGroup, qMap] = as_group(sylQ);
  if (!is_cyclic(qGroup)) return std::nullopt;
  int x = -1;  // generator of the Sylow q-subgroup
  for (int i = 0; i < qGroup.order(); ++i) {
    if (qGroup.element_order(i) == qGroup.order()) {
      x = qMap[i];
      break;
    }
  }
  // conjugation by x must be a power map of multiplicative order exactly q
  int a0 = -1;
  for (int a : elemsP) {
    if (a != 0) {
      a0 = a;
      break;
    }
  }
  if (a0 < 0) return std::nullopt;
  const int xinv = g.inv(x);
  const int conj = g.mul(x, g.mul(a0, xinv));
  int r = -1;
  int cur = a0;
  for (int t = 1; t < static_cast<int>(p); ++t) {
    if (cur == conj) {
      r = t;
      break;
    }
    cur = g.mul(cur, a0);
  }
  if (r <= 1) return std::nullopt;  // r = 1 would mean a trivial action
  for (int a : elemsP) {
    if (g.mul(x, g.mul(a, xinv)) != g.power(a, r)) return std::nullopt;
  }
  std::uint64_t rr = static_cast<std::uint64_t>(r) % p;
  std::uint64_t o = 1;
  std::uint64_t c = rr;
  while (c != 1) {
    c = (c * rr) % p;
    ++o;
  }
  if (o != q) return std::nullopt;
  return PStarShape{p, n, q, k};
}

namespace {

// Certify a primary factor: Iwasawa triple, or the Q8 x E(2,m) shape.
void certify_primary(const FiniteGroup& g, int cap) {
  std::uint64_t p = 0;
  is_p_group(g, &p);
  if (find_iwasawa_triple(g, cap).has_value()) return;
  if (p == 2 && g.order() >= 8) {
    FiniteGroup model = generalized_quaternion(8);
    int extra = g.order() / 8;
    if (extra * 8 == g.order()) {
      int m = 0;
      while ((1 << m) < extra) ++m;
      if ((1 << m) == extra) {
        FiniteGroup full = (m == 0) ? std::move(model) : direct_product(model, elementary_abelian(2, m));
        if (is_isomorphic(g, full)) return;
      }
    }
  }
  throw VerificationError("m_structure_decompose: primary factor of order " +
                          std::to_string(g.order()) +
                          " admits no Iwasawa triple and is not Q8 x E(2,m)");
}

void decompose_rec(const FiniteGroup& g, int cap, std::vector<FiniteGroup>& out) {
  if (g.order() == 1) return;
  auto primes = factorize(g.order());
  if (primes.size() == 1) {
    certify_primary(g, cap);
    out.push_back(g);
    return;
  }
  SubgroupLattice lat = all_subgroups(g, cap);
  // search a coprime split G = N_a x N_b over prime subsets, smallest first
  const int pcount = static_cast<int>(primes.size());
  for (int popcount = 1; popcount <= pcount / 2 + (pcount % 2); ++popcount) {
    for (int mask = 1; mask < (1 << pcount) - 1; ++mask) {
      if (__builtin_popcount(static_cast<unsigned>(mask)) != popcount) continue;
      long long aOrder = 1;
      for (int i = 0; i < pcount; ++i) {
        if (mask & (1 << i)) {
          for (int e = 0; e < primes[i].exponent; ++e) aOrder *= static_cast<long long>(primes[i].prime);
        }
      }
      long long bOrder = g.order() / aOrder;
      int na = -1, nb = -1;
      for (int i = 0; i < lat.node_count(); ++i) {
        if (lat.nodes[i].size() == aOrder && na < 0 && is_normal(lat.nodes[i])) na = i;
        if (lat.nodes[i].size() == bOrder && nb < 0 && is_normal(lat.nodes[i])) nb = i;
      }
      if (na >= 0 && nb >= 0) {
        decompose_rec(as_group(lat.nodes[na]).first, cap, out);
        decompose_rec(as_group(lat.nodes[nb]).first, cap, out);
        return;
      }
    }
  }
  // no coprime split: the factor itself must be a P*-group
  if (recognize_p_star(g).has_value()) {
    out.push_back(g);
    return;
  }
  throw VerificationError("m_structure_decompose: factor of order " + std::to_string(g.order()) +
                          " has no coprime split and is not a P*-group");
}

}  // namespace

std::vector<FiniteGroup> m_structure_decompose(const FiniteGroup& g, int cap) {
  if (!is_modular_lattice(g, cap).modular) {
    throw std::invalid_argument("m_structure_decompose: subgroup lattice is not modular");
  }
  std::vector<FiniteGroup> out;
  decompose_rec(g, cap, out);
  return out;
}

}  // namespace ordersum
