#pragma once

#include <cstdint>
#include <optional>
#include <utility>

#include "cubres/eisenstein.hpp"

namespace cubres {

/// floor(sqrt(n)) and whether n is a perfect square. Rejects negative input.
std::pair<std::int64_t, bool> isqrt(std::int64_t n);

struct NormFormRep {
    std::int64_t a;
    std::int64_t b;
    friend bool operator==(const NormFormRep&, const NormFormRep&) = default;
};

struct FourPRep {
    std::int64_t A;  ///< A > 0
    std::int64_t B;  ///< B >= 0
    friend bool operator==(const FourPRep&, const FourPRep&) = default;
};

struct P27Rep {
    std::int64_t C;  ///< C > 0
    std::int64_t D;  ///< D >= 0
    friend bool operator==(const P27Rep&, const P27Rep&) = default;
};

/// p = a^2 - a*b + b^2 for split p, normalized to the minimal-b representative
/// with a > b > 0 (ascending-b search with a discriminant square test).
NormFormRep solve_norm_form(std::int64_t p);

/// The pair read off the exact Eisenstein coordinates of J(chi, chi); its
/// form value is p.
NormFormRep solve_norm_form_via_jacobi(std::int64_t p);

/// The unique normalized (A, B) with 4p = A^2 + 27 B^2, A > 0, B >= 0.
/// The full B range is scanned; anything but exactly one representation is an
/// internal error.
FourPRep solve_4p(std::int64_t p);

/// The normalized (C, D) with p = C^2 + 27 D^2 if one exists.
std::optional<P27Rep> solve_p_27(std::int64_t p);

/// True iff [solve_4p yields even A and even B] <=> [solve_p_27 succeeds],
/// with (C, D) = (A/2, B/2) when both hold.
bool parity_link_check(std::int64_t p);

/// (pi, conj(pi)) with pi primary of norm p and p = pi * conj(pi).
/// Deterministic choice: the primary conjugate with non-negative b.
std::pair<EisensteinInt, EisensteinInt> split_rational_prime(std::int64_t p);

/// Equivalence of norm-form pairs under the six units plus conjugation.
bool form_equivalent(const NormFormRep& x, const NormFormRep& y);

}  // namespace cubres
