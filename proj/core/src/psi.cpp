#include "ordersum/psi.hpp"

#include <algorithm>
#include <stdexcept>

namespace ordersum {

BigInt psi(const FiniteGroup& g) {
  BigInt sum = 0;
  for (int o : g.element_orders()) sum += o;
  return sum;
}

BigInt psi(const SubgroupSet& h) {
  const FiniteGroup& g = h.parent();
  BigInt sum = 0;
  for (auto a = h.bits().find_first(); a != Bits::npos; a = h.bits().find_next(a)) {
    sum += g.element_order(static_cast<int>(a));
  }
  return sum;
}

BigInt psi_cyclic(std::uint64_t n) {
  BigInt result = 1;
  for (const auto& pp : factorize(n)) {
    BigInt p = pp.prime;
    BigInt num = pow_big(p, 2 * pp.exponent + 1) + 1;
    BigInt den = p + 1;
    if (num % den != 0) throw std::logic_error("psi_cyclic: inexact division");
    result *= num / den;
  }
  return result;
}

Rational psi_prime(const FiniteGroup& g) {
  return {psi(g), psi_cyclic(static_cast<std::uint64_t>(g.order()))};
}

PsiReport psi_report(const FiniteGroup& g) {
  PsiReport r;
  r.name = g.name();
  r.order = static_cast<std::uint64_t>(g.order());
  r.psiValue = psi(g);
  r.psiCyclicSameOrder = psi_cyclic(r.order);
  r.psiPrime = Rational(r.psiValue, r.psiCyclicSameOrder);
  const Rational one(1);
  if (r.psiPrime > one) throw VerificationError("psi_report: psi' exceeds 1 on " + r.name);
  if ((r.psiPrime == one) != is_cyclic(g)) {
    throw VerificationError("psi_report: psi' = 1 does not characterize cyclicity on " + r.name);
  }
  return r;
}

Rational f_bound(std::uint64_t q) {
  if (!is_prime(q)) throw std::invalid_argument("f_bound: q must be prime");
  const BigInt Q = q;
  Rational f(((Q * Q - 1) * Q + 1) * (Q + 1), pow_big(Q, 5) + 1);
  if (!(f < Rational(BigInt(1), Q - 1))) {
    throw VerificationError("f_bound: f(q) >= 1/(q-1) at q = " + std::to_string(q));
  }
  return f;
}

Rational psi_prime_closed_form(TwoGroupFamily family, int k) {
  auto two = [&](int e) { return pow_big(2, e); };
  const BigInt den = two(2 * k + 1) + 1;
  switch (family) {
    case TwoGroupFamily::KleinCyclic:
      if (k < 2) throw std::invalid_argument("closed form: KleinCyclic needs k >= 2");
      return {two(2 * k) + 5, den};
    case TwoGroupFamily::ModularM2:
      if (k < 4) throw std::invalid_argument("closed form: ModularM2 needs k >= 4");
      return {two(2 * k) + 5, den};
    case TwoGroupFamily::Dihedral2:
      if (k < 3) throw std::invalid_argument("closed form: Dihedral2 needs k >= 3");
      return {two(2 * k - 1) + 3 * two(k) + 1, den};
    case TwoGroupFamily::Quaternion2:
      if (k < 3) throw std::invalid_argument("closed form: Quaternion2 needs k >= 3");
      return {two(2 * k - 1) + 3 * two(k + 1) + 1, den};
    case TwoGroupFamily::Semidihedral2:
      if (k < 4) throw std::invalid_argument("closed form: Semidihedral2 needs k >= 4");
      return {two(2 * k - 1) + 9 * two(k - 1) + 1, den};
  }
  throw std::invalid_argument("closed form: unknown family");
}

Rational psi_prime_pstar(std::uint64_t p, int n, int k) {
  if (!is_prime(p) || p == 2) throw std::invalid_argument("psi_prime_pstar: p must be an odd prime");
  if (n < 1 || k < 1) throw std::invalid_argument("psi_prime_pstar: n and k must be >= 1");
  const BigInt P = p;
  const BigInt denP = pow_big(P, 2 * n + 1) + 1;
  Rational head(P + 1, denP);
  Rational tail((P + 1) * (pow_big(P, n) - 1), denP);
  Rational factor((P + 3) * pow_big(2, 2 * k - 1) + P, pow_big(2, 2 * k + 1) + 1);
  return head + tail * factor;
}

BigInt semidirect_psi(const BigInt& p_order, const BigInt& psi_p, const BigInt& psi_h,
                      const BigInt& psi_chp) {
  return p_order * psi_h + (psi_p - p_order) * psi_chp;
}

BoundWitness large_element_witness(const FiniteGroup& g, const Rational& threshold,
                                   std::optional<int> t) {
  if (!(psi_prime(g) > threshold)) {
    throw std::invalid_argument("large_element_witness: psi'(G) does not exceed the threshold");
  }
  auto primes = factorize(g.order());
  const int kcount = static_cast<int>(primes.size());
  Rational bound = Rational(1) / threshold;
  if (!t.has_value()) {
    for (const auto& pp : primes) {
      bound = bound * Rational(BigInt(pp.prime) + 1, BigInt(pp.prime));
    }
  } else {
    int tt = *t;
    if (tt < 1 || tt > kcount) throw std::invalid_argument("large_element_witness: t out of range");
    for (int i = 0; i + 1 < tt; ++i) {
      bound = bound * Rational(BigInt(primes[i].prime) + 1, BigInt(primes[i].prime));
    }
    bound = bound * Rational(BigInt(primes[kcount - 1].prime) + 1, BigInt(primes[tt - 1].prime));
  }
  // scan by decreasing element order, smallest index first among ties
  std::vector<int> byOrder(g.order());
  for (int i = 0; i < g.order(); ++i) byOrder[i] = i;
  std::stable_sort(byOrder.begin(), byOrder.end(),
                   [&](int a, int b) { return g.element_order(a) > g.element_order(b); });
  for (int x : byOrder) {
    BigInt index = g.order() / g.element_order(x);
    if (Rational(index) < bound) return {x, index, bound};
  }
  throw VerificationError("large_element_witness: no element satisfies the index bound on " +
                          (g.name().empty() ? std::string("unnamed group") : g.name()));
}

Rational cyclic_lower_bound(std::uint64_t n, int variant, int t) {
  if (n < 2) throw std::invalid_argument("cyclic_lower_bound: n must be >= 2");
  auto primes = factorize(n);
  const int kcount = static_cast<int>(primes.size());
  Rational nsq(BigInt(n) * BigInt(n));
  Rational value = nsq;
  if (variant == 1) {
    for (const auto& pp : primes) {
      value = value * Rational(BigInt(pp.prime), BigInt(pp.prime) + 1);
    }
  } else if (variant == 2) {
    if (t < 1 || t > kcount) throw std::invalid_argument("cyclic_lower_bound: t out of range");
    for (int i = 0; i + 1 < t; ++i) {
      value = value * Rational(BigInt(primes[i].prime), BigInt(primes[i].prime) + 1);
    }
    value = value * Rational(BigInt(primes[t - 1].prime), BigInt(primes[kcount - 1].prime) + 1);
  } else {
    throw std::invalid_argument("cyclic_lower_bound: variant must be 1 or 2");
  }
  if (!(value < Rational(psi_cyclic(n)))) {
    throw VerificationError("cyclic_lower_bound: bound not below psi(C_n) at n = " + std::to_string(n));
  }
  return value;
}

BigInt l_max(const FiniteGroup& g, int lattice_cap) {
  if (g.order() <= 1) throw std::invalid_argument("l_max: group must be nontrivial");
  SubgroupLattice lat = all_subgroups(g, lattice_cap);
  BigInt best = 0;
  for (int idx : lat.maximal_subgroups()) {
    best = std::max(best, psi(lat.nodes[idx]));
  }
  return best;
}

Rational star_bound(const SubgroupSet& sylow, const SubgroupSet& complement, int lattice_cap) {
  const FiniteGroup& g = sylow.parent();
  if (&g != &complement.parent()) throw std::invalid_argument("star_bound: mismatched parents");
  const int psize = sylow.size();
  // sylow: full p-part, cyclic, normal
  auto f = factorize(psize);
  if (f.size() != 1) throw std::invalid_argument("star_bound: first argument is not a p-subgroup");
  const auto p = f[0].prime;
  int ppart = 1;
  int rest = g.order();
  while (rest % static_cast<int>(p) == 0) {
    rest /= static_cast<int>(p);
    ppart *= static_cast<int>(p);
  }
  if (ppart != psize) throw std::invalid_argument("star_bound: subgroup is not a full Sylow subgroup");
  bool cyclicP = false;
  for (int x : sylow.elements()) {
    if (g.element_order(x) == psize) cyclicP = true;
  }
  if (!cyclicP) throw std::invalid_argument("star_bound: Sylow subgroup is not cyclic");
  if (!is_normal(sylow)) throw std::invalid_argument("star_bound: Sylow subgroup is not normal");
  if (static_cast<long long>(psize) * complement.size() != g.order() ||
      (sylow.bits() & complement.bits()).count() != 1) {
    throw std::invalid_argument("star_bound: second argument is not a complement");
  }
  // C_H(P) must be proper in H
  SubgroupSet cent = centralizer(sylow);
  Bits chpBits = cent.bits() & complement.bits();
  if (chpBits == complement.bits()) {
    throw std::invalid_argument("star_bound: complement centralizes the Sylow subgroup");
  }
  auto [h, hmap] = as_group(complement);
  (void)hmap;
  Rational ratio(BigInt(psize), psi_cyclic(psize));
  Rational bound = ratio * psi_prime(h) +
                   (Rational(1) - ratio) * Rational(l_max(h, lattice_cap),
                                                    psi_cyclic(static_cast<std::uint64_t>(h.order())));
  if (!(psi_prime(g) <= bound)) {
    throw VerificationError("star_bound: psi'(G) exceeds the bound on " +
                            (g.name().empty() ? std::string("unnamed group") : g.name()));
  }
  return bound;
}

}  // namespace ordersum
