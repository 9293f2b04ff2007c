#include "ordersum/group.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <stdexcept>

namespace ordersum {

namespace {

int isqrt_exact(std::size_t cells) {
  auto n = static_cast<int>(std::lround(std::sqrt(static_cast<double>(cells))));
  while (static_cast<std::size_t>(n) * n > cells) --n;
  while (static_cast<std::size_t>(n + 1) * (n + 1) <= cells) ++n;
  return n;
}

}  // namespace

FiniteGroup::FiniteGroup(std::vector<std::int32_t> table, std::string name)
    : table_(std::move(table)), name_(std::move(name)) {
  n_ = isqrt_exact(table_.size());
  if (static_cast<std::size_t>(n_) * n_ != table_.size() || n_ == 0) {
    throw std::invalid_argument("FiniteGroup: table is not a nonempty square");
  }
  validate();
}

void FiniteGroup::validate() {
  const int n = n_;
  for (auto v : table_) {
    if (v < 0 || v >= n) throw std::invalid_argument("FiniteGroup: entry out of range");
  }
  // identity at index 0
  for (int b = 0; b < n; ++b) {
    if (mul(0, b) != b || mul(b, 0) != b) {
      throw std::invalid_argument("FiniteGroup: index 0 is not an identity");
    }
  }
  // Latin square
  std::vector<char> seen(n);
  for (int a = 0; a < n; ++a) {
    std::fill(seen.begin(), seen.end(), 0);
    for (int b = 0; b < n; ++b) {
      int v = mul(a, b);
      if (seen[v]) throw std::invalid_argument("FiniteGroup: repeated value in row");
      seen[v] = 1;
    }
  }
  for (int b = 0; b < n; ++b) {
    std::fill(seen.begin(), seen.end(), 0);
    for (int a = 0; a < n; ++a) {
      int v = mul(a, b);
      if (seen[v]) throw std::invalid_argument("FiniteGroup: repeated value in column");
      seen[v] = 1;
    }
  }
  // associativity: complete up to order 512, sampled above
  if (n <= 512) {
    for (int a = 0; a < n; ++a) {
      for (int b = 0; b < n; ++b) {
        const int ab = mul(a, b);
        for (int c = 0; c < n; ++c) {
          if (mul(ab, c) != mul(a, mul(b, c))) {
            throw std::invalid_argument("FiniteGroup: associativity fails");
          }
        }
      }
    }
  } else {
    std::mt19937_64 rng(0x0cd5'98f1'77ab'34e2ULL);
    std::uniform_int_distribution<int> pick(0, n - 1);
    for (int i = 0; i < 100000; ++i) {
      int a = pick(rng), b = pick(rng), c = pick(rng);
      if (mul(mul(a, b), c) != mul(a, mul(b, c))) {
        throw std::invalid_argument("FiniteGroup: associativity fails (sampled)");
      }
    }
  }
  inverse_.assign(n, -1);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (mul(a, b) == 0) {
        if (mul(b, a) != 0) throw std::invalid_argument("FiniteGroup: one-sided inverse");
        inverse_[a] = b;
        break;
      }
    }
    if (inverse_[a] < 0) throw std::invalid_argument("FiniteGroup: missing inverse");
  }
  orders_.assign(n, 0);
  for (int x = 0; x < n; ++x) {
    int t = 1;
    int cur = x;
    while (cur != 0) {
      cur = mul(cur, x);
      ++t;
    }
    if (n % t != 0) throw std::invalid_argument("FiniteGroup: element order does not divide order");
    orders_[x] = t;
  }
}

int FiniteGroup::power(int x, long long e) const {
  const int o = orders_[x];
  long long r = e % o;
  if (r < 0) r += o;
  int acc = 0;
  int base = x;
  while (r > 0) {
    if (r & 1) acc = mul(acc, base);
    base = mul(base, base);
    r >>= 1;
  }
  return acc;
}

int FiniteGroup::element_order(int x) const {
  if (x < 0 || x >= n_) throw std::out_of_range("element_order: index out of range");
  return orders_[x];
}

int FiniteGroup::exponent() const {
  long long e = 1;
  for (int o : orders_) e = std::lcm(e, static_cast<long long>(o));
  return static_cast<int>(e);
}

// --- SubgroupSet ----------------------------------------------------------

SubgroupSet::SubgroupSet(const FiniteGroup& parent, Bits bits) : parent_(&parent), bits_(std::move(bits)) {
  if (bits_.size() != static_cast<std::size_t>(parent.order())) {
    throw std::invalid_argument("SubgroupSet: bit vector has wrong length");
  }
  if (!bits_.test(0)) throw std::invalid_argument("SubgroupSet: identity missing");
  for (auto a = bits_.find_first(); a != Bits::npos; a = bits_.find_next(a)) {
    if (!bits_.test(parent.inv(static_cast<int>(a)))) {
      throw std::invalid_argument("SubgroupSet: not closed under inverse");
    }
    for (auto b = bits_.find_first(); b != Bits::npos; b = bits_.find_next(b)) {
      if (!bits_.test(parent.mul(static_cast<int>(a), static_cast<int>(b)))) {
        throw std::invalid_argument("SubgroupSet: not closed under product");
      }
    }
  }
  if (parent.order() % size() != 0) {
    throw std::invalid_argument("SubgroupSet: size does not divide group order");
  }
}

SubgroupSet::SubgroupSet(const FiniteGroup& parent, Bits bits, Trusted)
    : parent_(&parent), bits_(std::move(bits)) {}

SubgroupSet SubgroupSet::trusted(const FiniteGroup& parent, Bits bits) {
  return {parent, std::move(bits), Trusted{}};
}

std::vector<int> SubgroupSet::elements() const {
  std::vector<int> out;
  out.reserve(bits_.count());
  for (auto a = bits_.find_first(); a != Bits::npos; a = bits_.find_next(a)) {
    out.push_back(static_cast<int>(a));
  }
  return out;
}

// --- subgroup operations ---------------------------------------------------

SubgroupSet trivial_subgroup(const FiniteGroup& g) {
  Bits b(g.order());
  b.set(0);
  return SubgroupSet::trusted(g, std::move(b));
}

SubgroupSet whole_group(const FiniteGroup& g) {
  Bits b(g.order());
  b.set();
  return SubgroupSet::trusted(g, std::move(b));
}

SubgroupSet generated_subgroup(const FiniteGroup& g, const std::vector<int>& gens) {
  Bits bits(g.order());
  bits.set(0);
  std::vector<int> queue{0};
  for (int x : gens) {
    if (x < 0 || x >= g.order()) throw std::invalid_argument("generated_subgroup: index out of range");
    if (!bits.test(x)) {
      bits.set(x);
      queue.push_back(x);
    }
  }
  // Right-multiplying words by generators reaches every product of
  // generators; inverses come free in a finite group.
  for (std::size_t i = 0; i < queue.size(); ++i) {
    for (int x : gens) {
      int y = g.mul(queue[i], x);
      if (!bits.test(y)) {
        bits.set(y);
        queue.push_back(y);
      }
    }
  }
  return SubgroupSet::trusted(g, std::move(bits));
}

SubgroupSet conjugate_subgroup(const SubgroupSet& h, int by) {
  const FiniteGroup& g = h.parent();
  Bits out(g.order());
  const int byInv = g.inv(by);
  for (auto a = h.bits().find_first(); a != Bits::npos; a = h.bits().find_next(a)) {
    out.set(g.mul(g.mul(by, static_cast<int>(a)), byInv));
  }
  return SubgroupSet::trusted(g, std::move(out));
}

bool is_normal(const SubgroupSet& h) {
  const FiniteGroup& g = h.parent();
  for (int x = 1; x < g.order(); ++x) {
    if (conjugate_subgroup(h, x).bits() != h.bits()) return false;
  }
  return true;
}

SubgroupSet core(const SubgroupSet& h) {
  const FiniteGroup& g = h.parent();
  Bits acc = h.bits();
  for (int x = 1; x < g.order(); ++x) {
    acc &= conjugate_subgroup(h, x).bits();
    if (acc.count() == 1) break;
  }
  return SubgroupSet::trusted(g, std::move(acc));
}

SubgroupSet normalizer(const SubgroupSet& h) {
  const FiniteGroup& g = h.parent();
  std::vector<int> gens;
  for (int x = 0; x < g.order(); ++x) {
    if (conjugate_subgroup(h, x).bits() == h.bits()) gens.push_back(x);
  }
  // The normalizer is itself a subgroup, so the collected elements are
  // already closed; build the bitset directly.
  Bits bits(g.order());
  for (int x : gens) bits.set(x);
  return SubgroupSet::trusted(g, std::move(bits));
}

SubgroupSet centralizer(const FiniteGroup& g, const std::vector<int>& s) {
  Bits bits(g.order());
  for (int x = 0; x < g.order(); ++x) {
    bool ok = true;
    for (int y : s) {
      if (g.mul(x, y) != g.mul(y, x)) {
        ok = false;
        break;
      }
    }
    if (ok) bits.set(x);
  }
  return SubgroupSet::trusted(g, std::move(bits));
}

SubgroupSet centralizer(const SubgroupSet& s) { return centralizer(s.parent(), s.elements()); }

SubgroupSet center(const FiniteGroup& g) {
  std::vector<int> all(g.order());
  for (int i = 0; i < g.order(); ++i) all[i] = i;
  return centralizer(g, all);
}

SubgroupSet derived_subgroup(const FiniteGroup& g) {
  std::vector<int> comms;
  Bits seen(g.order());
  for (int a = 0; a < g.order(); ++a) {
    for (int b = 0; b < g.order(); ++b) {
      int c = g.mul(g.mul(g.inv(a), g.inv(b)), g.mul(a, b));
      if (!seen.test(c)) {
        seen.set(c);
        comms.push_back(c);
      }
    }
  }
  return generated_subgroup(g, comms);
}

SubgroupSet sylow_subgroup(const FiniteGroup& g, std::uint64_t p) {
  int ppart = 1;
  int rest = g.order();
  while (rest % static_cast<int>(p) == 0) {
    rest /= static_cast<int>(p);
    ppart *= static_cast<int>(p);
  }
  SubgroupSet current = trivial_subgroup(g);
  while (current.size() < ppart) {
    SubgroupSet norm = normalizer(current);
    bool grown = false;
    for (int x : norm.elements()) {
      if (current.contains(x)) continue;
      // p-power order elements of the normalizer extend the p-subgroup.
      int o = g.element_order(x);
      bool ppow = true;
      while (o > 1) {
        if (o % static_cast<int>(p) != 0) {
          ppow = false;
          break;
        }
        o /= static_cast<int>(p);
      }
      if (!ppow) continue;
      auto gens = current.elements();
      gens.push_back(x);
      SubgroupSet bigger = generated_subgroup(g, gens);
      int sz = bigger.size();
      bool isp = true;
      while (sz > 1) {
        if (sz % static_cast<int>(p) != 0) {
          isp = false;
          break;
        }
        sz /= static_cast<int>(p);
      }
      if (isp && bigger.size() > current.size()) {
        current = bigger;
        grown = true;
        break;
      }
    }
    if (!grown) {
      throw VerificationError("sylow_subgroup: failed to grow p-subgroup (p = " + std::to_string(p) + ")");
    }
  }
  return current;
}

bool is_maximal_subgroup(const SubgroupSet& h) {
  const FiniteGroup& g = h.parent();
  if (h.is_whole()) return false;
  for (int x = 0; x < g.order(); ++x) {
    if (h.contains(x)) continue;
    auto gens = h.elements();
    gens.push_back(x);
    if (!generated_subgroup(g, gens).is_whole()) return false;
  }
  return true;
}

// --- quotient / products ----------------------------------------------------

FiniteGroup quotient(const FiniteGroup& g, const SubgroupSet& n) {
  if (!is_normal(n)) throw std::invalid_argument("quotient: subgroup is not normal");
  const int order = g.order();
  std::vector<int> cosetOf(order, -1);
  std::vector<int> reps;
  // Scanning elements in index order makes the identity's coset (which
  // contains 0) the first one found.
  for (int x = 0; x < order; ++x) {
    if (cosetOf[x] >= 0) continue;
    int id = static_cast<int>(reps.size());
    reps.push_back(x);
    for (auto a = n.bits().find_first(); a != Bits::npos; a = n.bits().find_next(a)) {
      cosetOf[g.mul(x, static_cast<int>(a))] = id;
    }
  }
  const int q = static_cast<int>(reps.size());
  std::vector<std::int32_t> table(static_cast<std::size_t>(q) * q);
  for (int i = 0; i < q; ++i) {
    for (int j = 0; j < q; ++j) {
      table[static_cast<std::size_t>(i) * q + j] = cosetOf[g.mul(reps[i], reps[j])];
    }
  }
  return FiniteGroup(std::move(table));
}

FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b, int table_cap) {
  const long long order = static_cast<long long>(a.order()) * b.order();
  if (order > table_cap) {
    throw ResourceLimitError("direct_product: order " + std::to_string(order) +
                             " exceeds table cap " + std::to_string(table_cap));
  }
  const int na = a.order(), nb = b.order();
  const int n = static_cast<int>(order);
  std::vector<std::int32_t> table(static_cast<std::size_t>(n) * n);
  for (int a1 = 0; a1 < na; ++a1) {
    for (int b1 = 0; b1 < nb; ++b1) {
      const int i = a1 * nb + b1;
      for (int a2 = 0; a2 < na; ++a2) {
        const int aa = a.mul(a1, a2);
        for (int b2 = 0; b2 < nb; ++b2) {
          table[static_cast<std::size_t>(i) * n + (a2 * nb + b2)] = aa * nb + b.mul(b1, b2);
        }
      }
    }
  }
  std::string name;
  if (!a.name().empty() && !b.name().empty()) name = a.name() + " x " + b.name();
  return FiniteGroup(std::move(table), std::move(name));
}

FiniteGroup semidirect_product(const ActionSpec& spec, int table_cap) {
  if (spec.actor == nullptr || spec.target == nullptr) {
    throw std::invalid_argument("semidirect_product: missing actor or target");
  }
  const FiniteGroup& b = *spec.actor;
  const FiniteGroup& a = *spec.target;
  const int na = a.order(), nb = b.order();
  if (static_cast<int>(spec.images.size()) != nb) {
    throw std::invalid_argument("semidirect_product: one image permutation per actor element required");
  }
  for (int i = 0; i < nb; ++i) {
    const auto& img = spec.images[i];
    if (static_cast<int>(img.size()) != na) {
      throw std::invalid_argument("semidirect_product: image has wrong length");
    }
    std::vector<char> seen(na, 0);
    for (int v : img) {
      if (v < 0 || v >= na || seen[v]) {
        throw std::invalid_argument("semidirect_product: image is not a permutation");
      }
      seen[v] = 1;
    }
    for (int x = 0; x < na; ++x) {
      for (int y = 0; y < na; ++y) {
        if (img[a.mul(x, y)] != a.mul(img[x], img[y])) {
          throw std::invalid_argument("semidirect_product: image is not an automorphism");
        }
      }
    }
  }
  for (int b1 = 0; b1 < nb; ++b1) {
    for (int b2 = 0; b2 < nb; ++b2) {
      const auto& lhs = spec.images[b.mul(b1, b2)];
      const auto& f = spec.images[b1];
      const auto& h = spec.images[b2];
      for (int x = 0; x < na; ++x) {
        if (lhs[x] != f[h[x]]) {
          throw std::invalid_argument("semidirect_product: images do not form a homomorphism");
        }
      }
    }
  }
  const long long order = static_cast<long long>(na) * nb;
  if (order > table_cap) {
    throw ResourceLimitError("semidirect_product: order " + std::to_string(order) +
                             " exceeds table cap " + std::to_string(table_cap));
  }
  const int n = static_cast<int>(order);
  std::vector<std::int32_t> table(static_cast<std::size_t>(n) * n);
  for (int a1 = 0; a1 < na; ++a1) {
    for (int b1 = 0; b1 < nb; ++b1) {
      const int i = a1 * nb + b1;
      const auto& phi = spec.images[b1];
      for (int a2 = 0; a2 < na; ++a2) {
        const int left = a.mul(a1, phi[a2]);
        for (int b2 = 0; b2 < nb; ++b2) {
          table[static_cast<std::size_t>(i) * n + (a2 * nb + b2)] = left * nb + b.mul(b1, b2);
        }
      }
    }
  }
  return FiniteGroup(std::move(table));
}

std::pair<FiniteGroup, std::vector<int>> as_group(const SubgroupSet& h) {
  const FiniteGroup& g = h.parent();
  std::vector<int> toParent = h.elements();  // ascending, so identity first
  std::vector<int> toLocal(g.order(), -1);
  for (int i = 0; i < static_cast<int>(toParent.size()); ++i) toLocal[toParent[i]] = i;
  const int n = static_cast<int>(toParent.size());
  std::vector<std::int32_t> table(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      table[static_cast<std::size_t>(i) * n + j] = toLocal[g.mul(toParent[i], toParent[j])];
    }
  }
  return {FiniteGroup(std::move(table)), std::move(toParent)};
}

}  // namespace ordersum
