#pragma once

#include <cstdint>

#include "ordersum/group.hpp"

namespace ordersum {

FiniteGroup cyclic(int n);

// Dihedral group of the given (even) order >= 6.
FiniteGroup dihedral(int order);

// Generalized quaternion group of order 2^k, k >= 3.
FiniteGroup generalized_quaternion(int order);

// Semidihedral group of order 2^k, k >= 4.
FiniteGroup semidihedral(int order);

// The modular maximal-cyclic group M(p^n):
// < x, y | x^{p^{n-1}} = y^p = 1, y x y^{-1} = x^{1+p^{n-2}} >.
// Requires n >= 4 for p = 2 (smaller would be dihedral) and n >= 3 for odd p.
FiniteGroup modular_maximal_cyclic(std::uint64_t p, int n);

FiniteGroup elementary_abelian(std::uint64_t p, int n);

// A (abelian) extended by a cyclic group of even order whose generator
// acts by inversion.
FiniteGroup rtimes_iota(const FiniteGroup& a, int cyclic_order, int table_cap = kDefaultTableCap);

// Elementary abelian group of order p^n extended by a cyclic group of
// order q^k acting through the power automorphism a -> a^r, where r is the
// smallest residue of multiplicative order q mod p. Requires q | p - 1.
FiniteGroup p_star(std::uint64_t p, int n, std::uint64_t q, int k, int table_cap = kDefaultTableCap);

FiniteGroup alt(int n);  // n <= 5
FiniteGroup sym(int n);  // n <= 4

// Q8 extended by C3 through an order-3 automorphism (the SL(2,3) shape).
FiniteGroup sl23();

// Central product of D8 and C4 over their shared central involution;
// order 16, exponent 4.
FiniteGroup central_product_d8_c4();

// (C2 x C2) extended by C9 acting through its order-3 quotient, the
// generator cycling the three involutions.
FiniteGroup v4_rtimes_c9();

// Uniform entry point used by the classifier and the CLI: a tagged family
// with integer parameters plus an optional coprime cyclic cofactor C_m.
struct FamilySpec {
  enum class Tag {
    Cyclic,         // C_n
    Dihedral,       // D_n (n = order)
    Quaternion,     // Q_n (n = order)
    Semidihedral,   // SD_n (n = order)
    ModularM,       // M(p^n)
    ElemAbelian,    // E(p, n)
    PStar,          // P*(p^n, q^k)
    RtimesIota,     // C_n rx C_{2^k}
    Alt4,
    Alt5,
    Sym3,
    Sym4,
    Sl23,
    CentralProdD8C4,
    C3xDic12,       // C3 x (C3 rx C4)
    C9xS3,
    C2xA4,
    V4RtimesC9,
  };
  Tag tag;
  long long n = 0;
  long long k = 0;
  long long p = 0;
  long long q = 0;
  long long m = 1;  // cyclic cofactor order, must be coprime to the core
};

FiniteGroup build(const FamilySpec& spec, int table_cap = kDefaultTableCap);

}  // namespace ordersum
