#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "cubres/eisenstein.hpp"

namespace cubres {

struct Cubic2Verdict {
    std::int64_t p = 0;
    bool by_representation = false;
    bool by_symbol = false;
    bool by_oracle = false;
    std::optional<std::int64_t> root;  ///< least witness, present iff by_oracle
    friend bool operator==(const Cubic2Verdict&, const Cubic2Verdict&) = default;
};

/// Least x in [0, n) with x^3 ≡ 2 (mod n), for any modulus n >= 2.
std::optional<std::int64_t> cubic2_oracle(std::int64_t n);

/// True iff p = C^2 + 27 D^2 has a solution. Split p only.
bool cubic2_by_representation(std::int64_t p);

/// True iff (2/pi)_3 = 1 for the canonical primary pi over p. Split p only.
bool cubic2_by_symbol(std::int64_t p);

/// All routes for a prime p: the representation and symbol routes apply for
/// p ≡ 1 (mod 3); for p ≡ 2 (mod 3) every integer is a cube, so the
/// not-applicable routes report true; for p = 3 only the oracle applies.
Cubic2Verdict cubic2_full(std::int64_t p);

/// True iff t -> t^3 is a bijection on Z/qZ (exhaustive image count).
/// Requires prime q ≡ 2 (mod 3).
bool inert_cube_bijection_check(std::int64_t q);

/// True iff [(2/pi)_3 = 1] <=> [pi ≡ 1 (mod 2), i.e. a odd and b even].
/// Requires a primary prime pi, norm not in {3, 4}.
bool lemma14_check(const EisensteinInt& pi);

/// True iff alpha^(Npi - 1) ≡ 1 (mod pi). Requires pi prime, pi not
/// dividing alpha.
bool flt_analogue_check(const EisensteinInt& alpha, const EisensteinInt& pi);

/// True iff brute-force square search for ±2 mod p matches gauss_four_case
/// and quad_char_of_2.
bool quad2_cross_check(std::int64_t p);

/// t^3 mod n for t = 0..n-1.
std::vector<std::int64_t> cube_table(std::int64_t n);

}  // namespace cubres
