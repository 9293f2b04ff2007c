#pragma once

#include <optional>
#include <string>

#include "ordersum/group.hpp"
#include "ordersum/lattice.hpp"
#include "ordersum/numeric.hpp"

namespace ordersum {

// Sum of the orders of all elements.
BigInt psi(const FiniteGroup& g);

// Same sum over a subgroup; element orders inside a subgroup agree with
// the parent's, so no re-tabulation is needed.
BigInt psi(const SubgroupSet& h);

// psi of the cyclic group of order n, via the prime-power product formula
// prod (p^{2a+1} + 1)/(p + 1).
BigInt psi_cyclic(std::uint64_t n);

// psi(G) / psi(C_|G|); at most 1, with equality exactly for cyclic groups.
Rational psi_prime(const FiniteGroup& g);

struct PsiReport {
  std::string name;
  std::uint64_t order = 0;
  BigInt psiValue;
  BigInt psiCyclicSameOrder;
  Rational psiPrime;
};

PsiReport psi_report(const FiniteGroup& g);

// f(q) = [(q^2-1)q + 1](q+1) / (q^5+1): the best upper bound for the
// normalized psi of a non-cyclic group with smallest prime divisor q.
Rational f_bound(std::uint64_t q);

// Closed forms for the normalized psi of the 2-groups with a cyclic
// subgroup of index 2, by family.
enum class TwoGroupFamily {
  KleinCyclic,   // C_{2^{k-1}} x C_2, k >= 2
  ModularM2,     // M(2^k), k >= 4
  Dihedral2,     // D_{2^k}, k >= 3
  Quaternion2,   // Q_{2^k}, k >= 3
  Semidihedral2  // SD_{2^k}, k >= 4
};

Rational psi_prime_closed_form(TwoGroupFamily family, int k);

// Normalized psi of P*(p^n, 2^k) for odd p:
//   (p+1)/(p^{2n+1}+1) + (p+1)(p^n-1)/(p^{2n+1}+1) * ((p+3)2^{2k-1}+p)/(2^{2k+1}+1).
Rational psi_prime_pstar(std::uint64_t p, int n, int k);

// |P| * psi(H) + (psi(P) - |P|) * psi(C_H(P)): the exact psi of a
// semidirect product P x| H with P a normal cyclic Sylow subgroup.
BigInt semidirect_psi(const BigInt& p_order, const BigInt& psi_p, const BigInt& psi_h,
                      const BigInt& psi_chp);

struct BoundWitness {
  int element = -1;
  BigInt index;     // |G : <element>|
  Rational bound;   // strict upper bound the index satisfies
};

// Given psi'(G) > threshold, produces an element whose cyclic subgroup has
// index strictly below (1/threshold) * prod (p_i+1)/p_i (full product, or
// truncated at 1-based position t when given). Throws VerificationError if
// no element qualifies -- that would falsify the bound.
BoundWitness large_element_witness(const FiniteGroup& g, const Rational& threshold,
                                   std::optional<int> t = std::nullopt);

// Lower bounds on psi(C_n): variant 1 is prod p_i/(p_i+1) * n^2, variant 2
// is prod_{i<t} p_i/(p_i+1) * p_t/(p_k+1) * n^2. Checked strictly below
// psi_cyclic(n) before returning.
Rational cyclic_lower_bound(std::uint64_t n, int variant, int t = 1);

// Maximum psi over the maximal subgroups.
BigInt l_max(const FiniteGroup& g, int lattice_cap = kDefaultLatticeCap);

// Right-hand side of the bound
//   psi'(G) <= (|P|/psi(C_|P|)) psi'(H) + (1 - |P|/psi(C_|P|)) l(H)/psi(C_|H|)
// for G = P x| H with P a normal cyclic Sylow subgroup and C_H(P) < H.
// Also asserts the bound against psi'(G) before returning it.
Rational star_bound(const SubgroupSet& sylow, const SubgroupSet& complement,
                    int lattice_cap = kDefaultLatticeCap);

}  // namespace ordersum
