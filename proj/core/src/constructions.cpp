#include "ordersum/constructions.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include "ordersum/iso.hpp"

namespace ordersum {

namespace {

// Table for < x, y | x^h, y^m = x^w, y x y^{-1} = x^r > with elements
// x^t y^u indexed t*m + u. Covers the dihedral, quaternion, semidihedral
// and modular maximal-cyclic presentations.
FiniteGroup metacyclic(int h, int m, long long r, int w, std::string name) {
  const int n = h * m;
  std::vector<long long> rpow(m);
  rpow[0] = 1;
  for (int u = 1; u < m; ++u) rpow[u] = (rpow[u - 1] * r) % h;
  std::vector<std::int32_t> table(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < h; ++a) {
    for (int u = 0; u < m; ++u) {
      const int i = a * m + u;
      for (int b = 0; b < h; ++b) {
        for (int v = 0; v < m; ++v) {
          long long t = (a + b * rpow[u]) % h;
          int s = u + v;
          if (s >= m) {
            t = (t + w) % h;
            s -= m;
          }
          table[static_cast<std::size_t>(i) * n + (b * m + v)] =
              static_cast<std::int32_t>(t * m + s);
        }
      }
    }
  }
  return FiniteGroup(std::move(table), std::move(name));
}

bool is_power_of(int value, int base, int* exp = nullptr) {
  int e = 0;
  while (value % base == 0) {
    value /= base;
    ++e;
  }
  if (exp != nullptr) *exp = e;
  return value == 1;
}

std::vector<int> identity_perm(int n) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

int perm_parity(const std::vector<int>& p) {
  int inv = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    for (std::size_t j = i + 1; j < p.size(); ++j) {
      if (p[i] > p[j]) ++inv;
    }
  }
  return inv & 1;
}

FiniteGroup permutation_group(int degree, bool evenOnly, std::string name) {
  std::vector<std::vector<int>> elems;
  std::vector<int> p = identity_perm(degree);
  do {
    if (!evenOnly || perm_parity(p) == 0) elems.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  // lexicographic order puts the identity first
  const int n = static_cast<int>(elems.size());
  auto indexOf = [&](const std::vector<int>& q) {
    return static_cast<int>(std::lower_bound(elems.begin(), elems.end(), q) - elems.begin());
  };
  std::vector<std::int32_t> table(static_cast<std::size_t>(n) * n);
  std::vector<int> comp(degree);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      for (int s = 0; s < degree; ++s) comp[s] = elems[i][elems[j][s]];
      table[static_cast<std::size_t>(i) * n + j] = indexOf(comp);
    }
  }
  return FiniteGroup(std::move(table), std::move(name));
}

}  // namespace

FiniteGroup cyclic(int n) {
  if (n < 1) throw std::invalid_argument("cyclic: order must be >= 1");
  std::vector<std::int32_t> table(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      table[static_cast<std::size_t>(a) * n + b] = (a + b) % n;
    }
  }
  return FiniteGroup(std::move(table), "C" + std::to_string(n));
}

FiniteGroup dihedral(int order) {
  if (order < 6 || order % 2 != 0) {
    throw std::invalid_argument("dihedral: order must be even and >= 6");
  }
  const int h = order / 2;
  return metacyclic(h, 2, h - 1, 0, "D" + std::to_string(order));
}

FiniteGroup generalized_quaternion(int order) {
  int k = 0;
  if (!is_power_of(order, 2, &k) || k < 3) {
    throw std::invalid_argument("generalized_quaternion: order must be 2^k with k >= 3");
  }
  const int h = order / 2;
  return metacyclic(h, 2, h - 1, h / 2, "Q" + std::to_string(order));
}

FiniteGroup semidihedral(int order) {
  int k = 0;
  if (!is_power_of(order, 2, &k) || k < 4) {
    throw std::invalid_argument("semidihedral: order must be 2^k with k >= 4");
  }
  const int h = order / 2;
  return metacyclic(h, 2, h / 2 - 1, 0, "SD" + std::to_string(order));
}

FiniteGroup modular_maximal_cyclic(std::uint64_t p, int n) {
  if (!is_prime(p)) throw std::invalid_argument("modular_maximal_cyclic: p must be prime");
  if ((p == 2 && n < 4) || (p != 2 && n < 3)) {
    throw std::invalid_argument("modular_maximal_cyclic: need n >= 4 for p = 2, n >= 3 otherwise");
  }
  long long h = 1;
  for (int i = 0; i < n - 1; ++i) h *= static_cast<long long>(p);
  const long long order = h * static_cast<long long>(p);
  if (order > kDefaultTableCap) {
    throw ResourceLimitError("modular_maximal_cyclic: order exceeds table cap");
  }
  const long long r = 1 + h / static_cast<long long>(p);  // 1 + p^{n-2}
  return metacyclic(static_cast<int>(h), static_cast<int>(p), r, 0,
                    "M(" + std::to_string(order) + ")");
}

FiniteGroup elementary_abelian(std::uint64_t p, int n) {
  if (!is_prime(p)) throw std::invalid_argument("elementary_abelian: p must be prime");
  if (n < 1) throw std::invalid_argument("elementary_abelian: n must be >= 1");
  long long order = 1;
  for (int i = 0; i < n; ++i) {
    order *= static_cast<long long>(p);
    if (order > kDefaultTableCap) throw ResourceLimitError("elementary_abelian: order exceeds table cap");
  }
  const int N = static_cast<int>(order);
  const int pi = static_cast<int>(p);
  std::vector<std::int32_t> table(static_cast<std::size_t>(N) * N);
  for (int a = 0; a < N; ++a) {
    for (int b = 0; b < N; ++b) {
      int x = a, y = b, sum = 0, weight = 1;
      for (int d = 0; d < n; ++d) {
        sum += ((x % pi + y % pi) % pi) * weight;
        x /= pi;
        y /= pi;
        weight *= pi;
      }
      table[static_cast<std::size_t>(a) * N + b] = sum;
    }
  }
  return FiniteGroup(std::move(table), "E(" + std::to_string(p) + "," + std::to_string(n) + ")");
}

FiniteGroup rtimes_iota(const FiniteGroup& a, int cyclic_order, int table_cap) {
  if (cyclic_order < 2 || cyclic_order % 2 != 0) {
    throw std::invalid_argument("rtimes_iota: cyclic factor must have even order");
  }
  if (!is_abelian(a)) throw std::invalid_argument("rtimes_iota: base group must be abelian");
  FiniteGroup c = cyclic(cyclic_order);
  std::vector<int> inversion(a.order());
  for (int x = 0; x < a.order(); ++x) inversion[x] = a.inv(x);
  ActionSpec spec;
  spec.actor = &c;
  spec.target = &a;
  spec.images.resize(cyclic_order);
  for (int j = 0; j < cyclic_order; ++j) {
    spec.images[j] = (j % 2 == 0) ? identity_perm(a.order()) : inversion;
  }
  FiniteGroup g = semidirect_product(spec, table_cap);
  if (!a.name().empty()) g.set_name(a.name() + " rx C" + std::to_string(cyclic_order));
  return g;
}

FiniteGroup p_star(std::uint64_t p, int n, std::uint64_t q, int k, int table_cap) {
  if (!is_prime(p) || !is_prime(q)) throw std::invalid_argument("p_star: p and q must be prime");
  if (n < 1 || k < 1) throw std::invalid_argument("p_star: n and k must be >= 1");
  if ((p - 1) % q != 0) throw std::invalid_argument("p_star: q must divide p - 1");
  // smallest residue of multiplicative order exactly q mod p
  std::uint64_t r = 0;
  for (std::uint64_t cand = 2; cand < p; ++cand) {
    std::uint64_t cur = cand % p;
    std::uint64_t o = 1;
    while (cur != 1) {
      cur = (cur * cand) % p;
      ++o;
    }
    if (o == q) {
      r = cand;
      break;
    }
  }
  FiniteGroup a = elementary_abelian(p, n);
  long long qk = 1;
  for (int i = 0; i < k; ++i) qk *= static_cast<long long>(q);
  if (qk > table_cap || static_cast<long long>(a.order()) * qk > table_cap) {
    throw ResourceLimitError("p_star: order exceeds table cap");
  }
  FiniteGroup c = cyclic(static_cast<int>(qk));
  const int pi = static_cast<int>(p);
  ActionSpec spec;
  spec.actor = &c;
  spec.target = &a;
  spec.images.resize(c.order());
  std::uint64_t rj = 1;
  for (int j = 0; j < c.order(); ++j) {
    std::vector<int> img(a.order());
    for (int x = 0; x < a.order(); ++x) {
      // scalar action digit-wise: a -> a^{r^j}
      int v = x, out = 0, weight = 1;
      for (int d = 0; d < n; ++d) {
        out += static_cast<int>((static_cast<std::uint64_t>(v % pi) * rj) % p) * weight;
        v /= pi;
        weight *= pi;
      }
      img[x] = out;
    }
    spec.images[j] = std::move(img);
    rj = (rj * r) % p;
  }
  FiniteGroup g = semidirect_product(spec, table_cap);
  g.set_name("Pstar(" + std::to_string(p) + "," + std::to_string(n) + "," + std::to_string(q) +
             "," + std::to_string(k) + ")");
  return g;
}

FiniteGroup alt(int n) {
  if (n < 1 || n > 5) throw std::invalid_argument("alt: degree must be between 1 and 5");
  return permutation_group(n, true, "A" + std::to_string(n));
}

FiniteGroup sym(int n) {
  if (n < 1 || n > 4) throw std::invalid_argument("sym: degree must be between 1 and 4");
  return permutation_group(n, false, "S" + std::to_string(n));
}

FiniteGroup sl23() {
  FiniteGroup q8 = generalized_quaternion(8);
  PermGroup aut = automorphism_group(q8);
  int idx = -1;
  for (int i = 0; i < static_cast<int>(aut.perms.size()); ++i) {
    if (aut.order_of(i) == 3) {
      idx = i;
      break;
    }
  }
  if (idx < 0) throw std::logic_error("sl23: Q8 has no order-3 automorphism");
  FiniteGroup c3 = cyclic(3);
  ActionSpec spec;
  spec.actor = &c3;
  spec.target = &q8;
  spec.images = {identity_perm(8), aut.perms[idx], aut.perms[aut.compose(idx, idx)]};
  FiniteGroup g = semidirect_product(spec);
  g.set_name("SL23");
  return g;
}

FiniteGroup central_product_d8_c4() {
  FiniteGroup prod = direct_product(dihedral(8), cyclic(4));
  // diagonal central involution (a^2, c^2): a^2 is element 2*2 = 4 of D8
  // in metacyclic indexing (x^t y^u -> t*2+u), c^2 is element 2 of C4.
  const int diag = 4 * 4 + 2;
  SubgroupSet nsub = generated_subgroup(prod, {diag});
  if (nsub.size() != 2) throw std::logic_error("central_product_d8_c4: bad diagonal subgroup");
  FiniteGroup g = quotient(prod, nsub);
  g.set_name("CPD8C4");
  return g;
}

FiniteGroup v4_rtimes_c9() {
  FiniteGroup v4 = elementary_abelian(2, 2);
  FiniteGroup c9 = cyclic(9);
  // order-3 automorphism cycling the involutions 1 -> 2 -> 3 -> 1
  std::vector<int> rho = {0, 2, 3, 1};
  std::vector<int> rho2 = {0, 3, 1, 2};
  ActionSpec spec;
  spec.actor = &c9;
  spec.target = &v4;
  spec.images.resize(9);
  for (int j = 0; j < 9; ++j) {
    spec.images[j] = (j % 3 == 0) ? identity_perm(4) : (j % 3 == 1 ? rho : rho2);
  }
  FiniteGroup g = semidirect_product(spec);
  g.set_name("(C2 x C2) : C9");
  return g;
}

FiniteGroup build(const FamilySpec& spec, int table_cap) {
  using Tag = FamilySpec::Tag;
  FiniteGroup core = [&]() -> FiniteGroup {
    switch (spec.tag) {
      case Tag::Cyclic:
        return cyclic(static_cast<int>(spec.n));
      case Tag::Dihedral:
        return dihedral(static_cast<int>(spec.n));
      case Tag::Quaternion:
        return generalized_quaternion(static_cast<int>(spec.n));
      case Tag::Semidihedral:
        return semidihedral(static_cast<int>(spec.n));
      case Tag::ModularM:
        return modular_maximal_cyclic(static_cast<std::uint64_t>(spec.p), static_cast<int>(spec.n));
      case Tag::ElemAbelian:
        return elementary_abelian(static_cast<std::uint64_t>(spec.p), static_cast<int>(spec.n));
      case Tag::PStar:
        return p_star(static_cast<std::uint64_t>(spec.p), static_cast<int>(spec.n),
                      static_cast<std::uint64_t>(spec.q), static_cast<int>(spec.k), table_cap);
      case Tag::RtimesIota: {
        long long co = 1;
        for (long long i = 0; i < spec.k; ++i) co *= 2;
        return rtimes_iota(cyclic(static_cast<int>(spec.n)), static_cast<int>(co), table_cap);
      }
      case Tag::Alt4:
        return alt(4);
      case Tag::Alt5:
        return alt(5);
      case Tag::Sym3:
        return sym(3);
      case Tag::Sym4:
        return sym(4);
      case Tag::Sl23:
        return sl23();
      case Tag::CentralProdD8C4:
        return central_product_d8_c4();
      case Tag::C3xDic12:
        return direct_product(cyclic(3), rtimes_iota(cyclic(3), 4));
      case Tag::C9xS3:
        return direct_product(cyclic(9), sym(3));
      case Tag::C2xA4:
        return direct_product(cyclic(2), alt(4));
      case Tag::V4RtimesC9:
        return v4_rtimes_c9();
    }
    throw std::invalid_argument("build: unknown family tag");
  }();
  if (spec.m < 1) throw std::invalid_argument("build: cofactor order must be >= 1");
  if (spec.m == 1) return core;
  if (std::gcd(spec.m, static_cast<long long>(core.order())) != 1) {
    throw std::invalid_argument("build: cofactor order " + std::to_string(spec.m) +
                                " is not coprime to the family order " + std::to_string(core.order()));
  }
  return direct_product(core, cyclic(static_cast<int>(spec.m)), table_cap);
}

}  // namespace ordersum
