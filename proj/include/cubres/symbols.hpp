#pragma once

#include <cstdint>

#include "cubres/cubic_value.hpp"
#include "cubres/eisenstein.hpp"
#include "cubres/intmath.hpp"

namespace cubres {

/// Residue of base^exp modulo the given modulus, canonicalized by mod_reduce.
EisensteinInt eis_pow_mod(const EisensteinInt& base, u128 exp, const EisensteinInt& modulus);

/// Cubic residue character (alpha/pi)_3 by the Euler criterion: zero if
/// pi | alpha, else the unique k with alpha^((Npi-1)/3) ≡ omega^k (mod pi).
/// The modulus must have norm ≡ 1 (mod 3) and norm != 3; a residue matching
/// none of {1, omega, omega^2} signals a non-prime modulus and throws.
CubicValue cubic_symbol(const EisensteinInt& alpha, const EisensteinInt& pi);

/// True iff (alpha*beta/pi)_3 = (alpha/pi)_3 * (beta/pi)_3 exactly.
bool cubic_symbol_multiplicativity_check(const EisensteinInt& alpha, const EisensteinInt& beta,
                                         const EisensteinInt& pi);

/// True iff (pi1/pi2)_3 = (pi2/pi1)_3, both sides by the Euler criterion.
/// Requires both arguments primary primes with distinct norms, norms != 3.
bool cubic_reciprocity_check(const EisensteinInt& pi1, const EisensteinInt& pi2);

/// Legendre symbol via the Euler criterion: 0 if p | a, else ±1.
int legendre(std::int64_t a, std::int64_t p);

/// (2/p) = (-1)^((p^2-1)/8), computed from p mod 8.
int quad_char_of_2(std::int64_t p);

struct QuadCase {
    int residue_class;  ///< p mod 8, one of {1, 3, 5, 7}
    int plus2;          ///< +1 residue, -1 nonresidue
    int minus2;
    friend bool operator==(const QuadCase&, const QuadCase&) = default;
};

/// The four-case classification of ±2 by p mod 8:
/// 8n+3: +2 nonresidue, -2 residue; 8n+5: both nonresidues;
/// 8n+7: +2 residue, -2 nonresidue; 8n+1: both residues.
QuadCase gauss_four_case(std::int64_t p);

}  // namespace cubres
