#include "cubres/representations.hpp"

#include <cmath>
#include <stdexcept>

#include "cubres/characters.hpp"
#include "cubres/intmath.hpp"

namespace cubres {

std::pair<std::int64_t, bool> isqrt(std::int64_t n) {
    if (n < 0) throw std::domain_error("isqrt: negative input");
    std::int64_t r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(n)));
    while (r > 0 && static_cast<i128>(r) * r > n) --r;
    while (static_cast<i128>(r + 1) * (r + 1) <= n) ++r;
    return {r, r * r == n};
}

namespace {

void require_split_prime(std::int64_t p, const char* who) {
    if (p < 2 || !is_prime_u64(static_cast<std::uint64_t>(p))) {
        throw std::domain_error(std::string(who) + ": p must be prime");
    }
    if (p % 3 != 1) {
        throw std::domain_error(std::string(who) + ": p must be ≡ 1 (mod 3)");
    }
}

}  // namespace

NormFormRep solve_norm_form(std::int64_t p) {
    require_split_prime(p, "solve_norm_form");
    // 4p = (2a-b)^2 + 3b^2 bounds b by 2*sqrt(p/3)
    const std::int64_t bmax = isqrt((4 * p) / 3).first + 1;
    for (std::int64_t b = 1; b <= bmax; ++b) {
        const std::int64_t disc = 4 * p - 3 * b * b;
        if (disc < 0) break;
        auto [r, exact] = isqrt(disc);
        if (!exact) continue;
        // disc ≡ b (mod 2) so b + r is always even
        const std::int64_t a = (b + r) / 2;
        return {a, b};
    }
    throw std::logic_error("solve_norm_form: no representation found");
}

NormFormRep solve_norm_form_via_jacobi(std::int64_t p) {
    require_split_prime(p, "solve_norm_form_via_jacobi");
    const MultiplicativeCharacter chi = MultiplicativeCharacter::build(p, 3);
    const EisensteinInt j = jacobi_sum_cubic(chi, chi);
    if (norm(j) != static_cast<NormValue>(p)) {
        throw std::logic_error("solve_norm_form_via_jacobi: Jacobi sum norm is not p");
    }
    return {j.a, j.b};
}

FourPRep solve_4p(std::int64_t p) {
    require_split_prime(p, "solve_4p");
    FourPRep rep{0, 0};
    int found = 0;
    const std::int64_t bmax = isqrt(4 * p / 27).first;
    for (std::int64_t B = 0; B <= bmax; ++B) {
        const std::int64_t rem = 4 * p - 27 * B * B;
        auto [r, exact] = isqrt(rem);
        if (exact && r > 0) {
            rep = {r, B};
            ++found;
        }
    }
    if (found != 1) {
        throw std::logic_error("solve_4p: expected exactly one normalized representation, found " +
                               std::to_string(found));
    }
    return rep;
}

std::optional<P27Rep> solve_p_27(std::int64_t p) {
    require_split_prime(p, "solve_p_27");
    std::optional<P27Rep> rep;
    const std::int64_t dmax = isqrt(p / 27).first;
    for (std::int64_t D = 0; D <= dmax; ++D) {
        const std::int64_t rem = p - 27 * D * D;
        auto [r, exact] = isqrt(rem);
        if (exact && r > 0) {
            if (rep) throw std::logic_error("solve_p_27: representation is not unique");
            rep = P27Rep{r, D};
        }
    }
    return rep;
}

bool parity_link_check(std::int64_t p) {
    const FourPRep fp = solve_4p(p);
    const std::optional<P27Rep> rep = solve_p_27(p);
    const bool both_even = fp.A % 2 == 0 && fp.B % 2 == 0;
    if (both_even != rep.has_value()) return false;
    if (rep) return rep->C == fp.A / 2 && rep->D == fp.B / 2;
    return true;
}

std::pair<EisensteinInt, EisensteinInt> split_rational_prime(std::int64_t p) {
    require_split_prime(p, "split_rational_prime");
    const NormFormRep nf = solve_norm_form(p);
    const EisensteinInt primary = primary_associate(EisensteinInt(nf.a, nf.b)).second;
    const EisensteinInt other = conj(primary);
    EisensteinInt pi = primary;
    if (other.b >= 0 && (primary.b < 0 || (other.b == primary.b && other.a > primary.a))) {
        pi = other;
    }
    const EisensteinInt pibar = conj(pi);
    if (norm(pi) != static_cast<NormValue>(p) || !is_primary(pi) ||
        pi * pibar != EisensteinInt(p, 0)) {
        throw std::logic_error("split_rational_prime: splitting check failed");
    }
    return {pi, pibar};
}

bool form_equivalent(const NormFormRep& x, const NormFormRep& y) {
    const EisensteinInt zx(x.a, x.b);
    const EisensteinInt target(y.a, y.b);
    for (const EisensteinInt& base : {zx, conj(zx)}) {
        for (const auto& u : units()) {
            if (u * base == target) return true;
        }
    }
    return false;
}

}  // namespace cubres
